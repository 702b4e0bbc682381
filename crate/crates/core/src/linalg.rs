//! Exact rational linear algebra.
//!
//! Matrices are dense and row-major over [`Scalar`] (arbitrary-precision
//! rationals). Subspaces of coordinate space are stored by the reduced
//! row-echelon form of a spanning set, which makes equality of subspaces
//! plain structural equality.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An exact rational number, always kept in lowest terms.
pub type Scalar = BigRational;

/// A coordinate vector.
pub type Vector = Vec<Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(numer: i64, denom: i64) -> Scalar {
    Scalar::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn vector_from_i64(v: &[i64]) -> Vector {
    v.iter().map(|&x| int(x)).collect()
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_data(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        check_len(rows * cols, data.len())?;
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from row vectors; `cols` is needed to describe the
    /// shape when `rows` is empty.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            check_len(cols, r.len())?;
            data.extend(r);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| vector_from_i64(r)).collect();
        Self::from_rows(cols, rows).expect("ragged integer matrix")
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        check_len(self.cols, other.rows)?;
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        check_len(self.rows, other.rows)?;
        check_len(self.cols, other.cols)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        check_len(self.rows, other.rows)?;
        check_len(self.cols, other.cols)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// `A·B − B·A`
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Column action `M·v`.
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        check_len(self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect())
    }

    /// Row action `v·M`; this is how right module actions are applied.
    pub fn vec_mul(&self, v: &[Scalar]) -> Result<Vector> {
        check_len(self.rows, v.len())?;
        let mut out = zero_vector(self.cols);
        for (r, x) in v.iter().enumerate() {
            add_scaled(&mut out, x, self.row(r));
        }
        Ok(out)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    /// Reduced row-echelon form (same shape, zero rows last) together with
    /// the pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(found, pivot_row);
            let inv = m.get(pivot_row, col).recip();
            for c in col..m.cols {
                let x = &m.data[pivot_row * m.cols + c] * &inv;
                m.data[pivot_row * m.cols + c] = x;
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let p = &m.data[pivot_row * m.cols + c];
                    if !p.is_zero() {
                        let delta = &factor * p;
                        m.data[r * m.cols + c] -= delta;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn determinant(&self) -> Result<Scalar> {
        check_len(self.rows, self.cols)?;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                let factor = m.get(r, col) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let delta = &factor * m.get(col, c);
                    m.data[r * n + c] -= delta;
                }
            }
        }
        Ok(det)
    }

    /// `{ v : M·v = 0 }`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors = free
            .iter()
            .map(|&f| {
                let mut v = unit_vector(self.cols, f);
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect();
        Subspace::from_vectors_unchecked(self.cols, vectors)
    }

    /// Some solution of `M·x = rhs`, if one exists.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vector>> {
        check_len(self.rows, rhs.len())?;
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (r, b) in rhs.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b.clone());
        }
        let (red, pivots) = aug.rref_with_pivots();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = zero_vector(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = red.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A subspace of `Q^ambient`, stored by the RREF of a spanning set with zero
/// rows removed. Equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: Vec<Vector>) -> Result<Self> {
        for v in &vectors {
            check_len(ambient, v.len())?;
        }
        Ok(Self::from_vectors_unchecked(ambient, vectors))
    }

    /// Span of coordinate axes.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: bad + 1,
            });
        }
        Ok(Self::from_vectors_unchecked(
            ambient,
            indices.iter().map(|&i| unit_vector(ambient, i)).collect(),
        ))
    }

    pub(crate) fn from_vectors_unchecked(ambient: usize, vectors: Vec<Vector>) -> Self {
        let m = Matrix::from_rows(ambient, vectors).expect("vector lengths checked by caller");
        let (red, pivots) = m.rref_with_pivots();
        let k = pivots.len();
        let basis = Matrix {
            rows: k,
            cols: ambient,
            data: red.data[..k * ambient].to_vec(),
        };
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; the corresponding unit vectors span a
    /// complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// `v` minus its component along the pivot coordinates; zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vector> {
        check_len(self.ambient, v.len())?;
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if !out[p].is_zero() {
                let c = -out[p].clone();
                add_scaled(&mut out, &c, self.basis.row(row));
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(is_zero_vector(&self.reduce(v)?))
    }

    /// Coordinates of `v` with respect to the RREF basis, or `None` when `v`
    /// is outside the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// The vector with the given coordinates in the RREF basis.
    pub fn combine(&self, coords: &[Scalar]) -> Result<Vector> {
        check_len(self.dim(), coords.len())?;
        self.basis.vec_mul(coords)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_len(self.ambient, other.ambient)?;
        let mut vectors = self.basis_vectors();
        vectors.extend(other.basis_vectors());
        Ok(Self::from_vectors_unchecked(self.ambient, vectors))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_len(self.ambient, other.ambient)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        // Columns a_1..a_p, -b_1..-b_q; a kernel vector (alpha, beta) gives
        // sum alpha_i a_i in the intersection.
        let p = self.dim();
        let q = other.dim();
        let mut system = Matrix::zeros(self.ambient, p + q);
        for i in 0..p {
            for r in 0..self.ambient {
                system.set(r, i, self.basis.get(i, r).clone());
            }
        }
        for j in 0..q {
            for r in 0..self.ambient {
                system.set(r, p + j, -other.basis.get(j, r).clone());
            }
        }
        let vectors = system
            .kernel()
            .basis_vectors()
            .into_iter()
            .map(|k| self.combine(&k[..p]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_vectors_unchecked(self.ambient, vectors))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        check_len(self.ambient, other.ambient)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image under the linear map `v ↦ v·M` (row convention).
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        check_len(self.ambient, m.rows())?;
        let vectors = self
            .basis_vectors()
            .iter()
            .map(|v| m.vec_mul(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_vectors_unchecked(m.cols(), vectors))
    }
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

pub fn subspace_intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersect(b)
}

pub fn subspace_contains(a: &Subspace, v: &[Scalar]) -> Result<bool> {
    a.contains(v)
}
