//! Univariate polynomials over the rationals, just enough to extract rational
//! eigenvalues from a minimal polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::Scalar;

/// Coefficients are stored from the constant term upwards, without trailing
/// zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// Synthetic division by `(x - root)`; returns quotient and remainder.
    pub fn div_linear(&self, root: &Scalar) -> (Polynomial, Scalar) {
        if self.coeffs.is_empty() {
            return (Polynomial::new(Vec::new()), Scalar::zero());
        }
        let n = self.coeffs.len();
        let mut quotient = vec![Scalar::zero(); n - 1];
        let mut carry = Scalar::zero();
        for i in (0..n).rev() {
            let value = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return (Polynomial::new(quotient), value);
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Integer coefficients with content 1 and the same roots.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &content).collect()
    }

    /// Distinct rational roots with multiplicities, plus the cofactor that
    /// has no rational roots. Candidates come from the rational root theorem.
    pub fn rational_roots(&self) -> (Vec<(Scalar, usize)>, Polynomial) {
        let mut roots: Vec<(Scalar, usize)> = Vec::new();
        let mut rest = self.clone();
        if rest.is_zero() {
            return (roots, rest);
        }
        let mut zero_mult = 0;
        while rest.coeffs.len() > 1 && rest.coeffs[0].is_zero() {
            rest.coeffs.remove(0);
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((Scalar::zero(), zero_mult));
        }
        if rest.degree().unwrap_or(0) == 0 {
            return (roots, rest);
        }
        let ints = rest.primitive_integer_coeffs();
        let constant = ints[0].abs();
        let leading = ints[ints.len() - 1].abs();
        let mut candidates = Vec::new();
        for p in divisors(&constant) {
            for q in divisors(&leading) {
                let c = Scalar::new(p.clone(), q);
                if !candidates.contains(&c) {
                    candidates.push(c.clone());
                    candidates.push(-c);
                }
            }
        }
        for c in candidates {
            let mut mult = 0;
            loop {
                if rest.degree().unwrap_or(0) == 0 {
                    break;
                }
                let (q, r) = rest.div_linear(&c);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                roots.push((c, mult));
            }
        }
        (roots, rest)
    }
}

/// Positive divisors of `|n|` by trial division; `n` must be nonzero.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
