//! Killing form, Cartan's criterion, the solvable radical and the splitting
//! of a split semisimple Lie algebra into simple ideals.

use num_traits::{One, Zero};

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Scalar, Subspace, Vector};
use crate::poly::Polynomial;

/// Attempts at finding a centroid element whose eigenspaces split the
/// algebra.
const GENERIC_RETRIES: i64 = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingForm {
    pub gram: Matrix,
}

impl KillingForm {
    pub fn evaluate(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        let gy = self.gram.mul_vec(y)?;
        Ok(x.iter().zip(&gy).map(|(a, b)| a * b).sum())
    }

    pub fn determinant(&self) -> Scalar {
        self.gram.determinant().expect("gram matrix is square")
    }
}

/// `K(e_i, e_j) = tr(ad e_i ∘ ad e_j) = Σ_{k,l} c_il^k c_jk^l`.
pub fn killing_form(l: &AlgebraTable) -> Result<KillingForm> {
    if !l.is_lie() {
        return Err(Error::NotLie);
    }
    let n = l.dim();
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let mut acc = Scalar::zero();
            for lidx in 0..n {
                for (k, c) in l.product_terms(i, lidx) {
                    acc += c * l.coefficient(j, *k, lidx);
                }
            }
            gram.set(i, j, acc.clone());
            gram.set(j, i, acc);
        }
    }
    Ok(KillingForm { gram })
}

/// Cartan's criterion: nondegenerate Killing form.
pub fn is_semisimple_lie(l: &AlgebraTable) -> Result<bool> {
    Ok(!killing_form(l)?.determinant().is_zero())
}

/// The radical as the Killing-orthogonal complement of `[L, L]`.
pub fn solvable_radical_lie(l: &AlgebraTable) -> Result<Subspace> {
    let k = killing_form(l)?;
    let whole = l.full();
    let derived = l.subspace_product(&whole, &whole)?;
    let rows: Vec<Vector> = derived
        .basis_vectors()
        .iter()
        .map(|y| k.gram.mul_vec(y))
        .collect::<Result<_>>()?;
    Ok(Matrix::from_rows(l.dim(), rows)?.kernel())
}

/// Basis of the centroid `{φ : φ[x, y] = [φx, y]}`, as matrices acting on
/// column vectors. For Lie algebras this single condition implies the
/// two-sided one.
pub fn centroid(l: &AlgebraTable) -> Result<Vec<Matrix>> {
    if !l.is_lie() {
        return Err(Error::NotLie);
    }
    let n = l.dim();
    // Unknown Φ[q][k] sits at column q * n + k.
    let mut eqs = Matrix::zeros(n * n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            for q in 0..n {
                let row = (i * n + j) * n + q;
                for (k, c) in l.product_terms(i, j) {
                    let col = q * n + k;
                    let v = eqs.get(row, col) + c;
                    eqs.set(row, col, v);
                }
                for p in 0..n {
                    let c = l.coefficient(p, j, q);
                    if !c.is_zero() {
                        let col = p * n + i;
                        let v = eqs.get(row, col) - c;
                        eqs.set(row, col, v);
                    }
                }
            }
        }
    }
    eqs.kernel()
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::from_data(n, n, v))
        .collect()
}

/// Minimal polynomial via the first linear dependence among powers.
pub fn minimal_polynomial(m: &Matrix) -> Result<Polynomial> {
    let n = m.rows();
    let mut powers = vec![Matrix::identity(n)];
    loop {
        let next = powers.last().expect("powers is nonempty").mul(m)?;
        let columns =
            Matrix::from_rows(n * n, powers.iter().map(|p| p.entries().to_vec()).collect())?
                .transpose();
        if let Some(c) = columns.solve(next.entries())? {
            let mut coeffs: Vec<Scalar> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Scalar::one());
            return Ok(Polynomial::new(coeffs));
        }
        powers.push(next);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleIdealSplit {
    pub ideals: Vec<Subspace>,
    /// Pairwise zero intersections and products, each an ideal, summing to L.
    pub verified: bool,
}

/// Splits a semisimple Lie algebra into simple ideals through eigenspaces of
/// a generic centroid element.
pub fn split_simple_ideals(l: &AlgebraTable) -> Result<SimpleIdealSplit> {
    if !is_semisimple_lie(l)? {
        return Err(Error::NotSemisimple);
    }
    let ideals = split_recursive(l)?;
    let verified = verify_split(l, &ideals)?;
    Ok(SimpleIdealSplit { ideals, verified })
}

fn split_recursive(l: &AlgebraTable) -> Result<Vec<Subspace>> {
    let n = l.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    let basis = centroid(l)?;
    if basis.len() <= 1 {
        return Ok(vec![l.full()]);
    }
    for t in 1..=GENERIC_RETRIES {
        // Σ k·φ_k first, then Σ t^k·φ_k.
        let mut phi = Matrix::zeros(n, n);
        let mut weight = int(1);
        for (k, b) in basis.iter().enumerate() {
            let c = if t == 1 {
                int(k as i64 + 1)
            } else {
                weight.clone()
            };
            phi = phi.add(&b.scale(&c))?;
            weight *= int(t);
        }
        let (roots, rest) = minimal_polynomial(&phi)?.rational_roots();
        if rest.degree().unwrap_or(0) > 0 {
            return Err(Error::NonSplitUnsupported);
        }
        if roots.len() < 2 {
            continue;
        }
        let mut out = Vec::new();
        for (r, _) in roots {
            let shifted = phi.sub(&Matrix::identity(n).scale(&r))?;
            let eigen = shifted.kernel();
            let sub = l.restrict_to(&eigen)?;
            for piece in split_recursive(&sub)? {
                let vectors = piece
                    .basis_vectors()
                    .iter()
                    .map(|c| eigen.combine(c))
                    .collect::<Result<Vec<_>>>()?;
                out.push(Subspace::span(n, vectors)?);
            }
        }
        out.sort_by(|a, b| a.pivots().cmp(b.pivots()));
        return Ok(out);
    }
    Err(Error::NonSplitUnsupported)
}

fn verify_split(l: &AlgebraTable, ideals: &[Subspace]) -> Result<bool> {
    let mut total = Subspace::zero(l.dim());
    for (p, a) in ideals.iter().enumerate() {
        if !l.is_ideal(a)? || a.is_zero() {
            return Ok(false);
        }
        for b in &ideals[p + 1..] {
            if !a.intersect(b)?.is_zero()
                || !l.subspace_product(a, b)?.is_zero()
                || !l.subspace_product(b, a)?.is_zero()
            {
                return Ok(false);
            }
        }
        total = total.sum(a)?;
    }
    Ok(total.is_full())
}

/// Semisimple with exactly one simple ideal. The zero algebra and abelian
/// algebras are not simple.
pub fn is_simple_lie(l: &AlgebraTable) -> Result<bool> {
    if l.dim() == 0 || !is_semisimple_lie(l)? {
        return Ok(false);
    }
    Ok(split_simple_ideals(l)?.ideals.len() == 1)
}
