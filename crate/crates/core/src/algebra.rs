//! Structure-constant tables of right Leibniz algebras and the bracket-level
//! computations on them.
//!
//! The convention throughout is the right Leibniz identity
//!
//! ```text
//! [x, [y, z]] = [[x, y], z] - [[x, z], y]
//! ```
//!
//! so right multiplications `R_z : x ↦ [x, z]` are derivations. Module
//! actions are right actions.

use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{
    add_scaled, is_zero_vector, unit_vector, zero_vector, Matrix, Scalar, Subspace, Vector,
};
use crate::modules::ModuleAction;

/// Structure constants `[e_i, e_j] = Σ_k c[i][j][k] e_k`, stored sparsely.
#[derive(Clone, Debug)]
pub struct AlgebraTable {
    dim: usize,
    /// Indexed by `i * dim + j`; nonzero `(k, c)` pairs sorted by `k`.
    products: Vec<Vec<(usize, Scalar)>>,
    labels: Vec<String>,
    leibniz: OnceLock<Option<[usize; 3]>>,
}

impl PartialEq for AlgebraTable {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.products == other.products && self.labels == other.labels
    }
}

impl Eq for AlgebraTable {}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn sparse(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

impl AlgebraTable {
    /// The algebra with all products zero.
    pub fn abelian(dim: usize) -> Self {
        Self::with_labels_unchecked(default_labels(dim))
    }

    fn with_labels_unchecked(labels: Vec<String>) -> Self {
        let dim = labels.len();
        AlgebraTable {
            dim,
            products: vec![Vec::new(); dim * dim],
            labels,
            leibniz: OnceLock::new(),
        }
    }

    /// Builds a table from its dense `n×n×n` tensor in `(i, j, k)` order.
    pub fn from_dense(dim: usize, constants: &[Scalar]) -> Result<Self> {
        if constants.len() != dim * dim * dim {
            return Err(Error::InvalidTable(format!(
                "expected {} structure constants, found {}",
                dim * dim * dim,
                constants.len()
            )));
        }
        let mut t = Self::abelian(dim);
        for ij in 0..dim * dim {
            t.products[ij] = sparse(&constants[ij * dim..(ij + 1) * dim]);
        }
        Ok(t)
    }

    /// Builds a table from basis labels and the nonzero products
    /// `[e_i, e_j] = v`. Later entries for the same pair replace earlier ones.
    pub fn from_products(
        labels: Vec<String>,
        products: impl IntoIterator<Item = (usize, usize, Vector)>,
    ) -> Result<Self> {
        let mut t = Self::with_labels_unchecked(labels);
        for (i, j, v) in products {
            t = t.with_product(i, j, &v)?;
        }
        Ok(t)
    }

    /// Returns a copy with `[e_i, e_j]` replaced by `v`.
    pub fn with_product(mut self, i: usize, j: usize, v: &[Scalar]) -> Result<Self> {
        let n = self.dim;
        if i >= n || j >= n {
            return Err(Error::InvalidTable(format!(
                "basis index out of range in product ({i}, {j}) for dimension {n}"
            )));
        }
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        self.products[i * n + j] = sparse(v);
        self.leibniz = OnceLock::new();
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Nonzero terms of `[e_i, e_j]`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim + j]
    }

    pub fn product(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vector(self.dim);
        for (k, c) in self.product_terms(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Scalar {
        let terms = self.product_terms(i, j);
        match terms.binary_search_by_key(&k, |(idx, _)| *idx) {
            Ok(pos) => terms[pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    /// Number of basis pairs with a nonzero product.
    pub fn nonzero_products(&self) -> usize {
        self.products.iter().filter(|p| !p.is_empty()).count()
    }

    /// Same structure constants, labels ignored.
    pub fn same_constants(&self, other: &AlgebraTable) -> bool {
        self.dim == other.dim && self.products == other.products
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            })
        }
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            })
        }
    }

    /// Bilinear extension of the table.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        let mut out = zero_vector(self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.product_terms(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        Ok(out)
    }

    /// `out += coeff * [e_l, e_k]`
    fn accumulate(&self, out: &mut [Scalar], coeff: &Scalar, l: usize, k: usize) {
        for (m, c) in self.product_terms(l, k) {
            out[*m] += coeff * c;
        }
    }

    fn leibniz_defect(&self, i: usize, j: usize, k: usize, out: &mut [Scalar]) {
        for x in out.iter_mut() {
            x.set_zero();
        }
        // [e_i, [e_j, e_k]]
        for (l, c) in self.product_terms(j, k) {
            self.accumulate(out, c, i, *l);
        }
        // - [[e_i, e_j], e_k]
        for (l, c) in self.product_terms(i, j) {
            self.accumulate(out, &-c, *l, k);
        }
        // + [[e_i, e_k], e_j]
        for (l, c) in self.product_terms(i, k) {
            self.accumulate(out, c, *l, j);
        }
    }

    /// The first basis triple (in lexicographic order) violating the Leibniz
    /// identity, if any. The result is cached.
    pub fn leibniz_violation(&self) -> Option<[usize; 3]> {
        *self.leibniz.get_or_init(|| {
            let n = self.dim;
            let mut buf = zero_vector(n);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        self.leibniz_defect(i, j, k, &mut buf);
                        if !is_zero_vector(&buf) {
                            return Some([i, j, k]);
                        }
                    }
                }
            }
            None
        })
    }

    pub fn is_leibniz(&self) -> bool {
        self.leibniz_violation().is_none()
    }

    /// `Ok(())` for a verified Leibniz table, otherwise the failing triple.
    pub fn verified(&self) -> Result<()> {
        match self.leibniz_violation() {
            None => Ok(()),
            Some(t) => Err(Error::NotLeibniz(t)),
        }
    }

    pub fn is_lie(&self) -> bool {
        if !self.is_leibniz() {
            return false;
        }
        let n = self.dim;
        for i in 0..n {
            if !self.product_terms(i, i).is_empty() {
                return false;
            }
            for j in i + 1..n {
                let neg: Vec<(usize, Scalar)> = self
                    .product_terms(j, i)
                    .iter()
                    .map(|(k, c)| (*k, -c))
                    .collect();
                if self.product_terms(i, j) != neg.as_slice() {
                    return false;
                }
            }
        }
        true
    }

    /// Matrix of `y ↦ [x, y]` acting on column vectors.
    pub fn left_multiplication(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_vector(x)?;
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.product_terms(i, j) {
                    let v = m.get(*k, j) + a * c;
                    m.set(*k, j, v);
                }
            }
        }
        Ok(m)
    }

    /// Matrix of `y ↦ [y, x]` acting on column vectors.
    pub fn right_multiplication(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_vector(x)?;
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for (j, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for i in 0..n {
                for (k, c) in self.product_terms(i, j) {
                    let v = m.get(*k, i) + a * c;
                    m.set(*k, i, v);
                }
            }
        }
        Ok(m)
    }

    /// Span of `[a, b]` over basis vectors `a ∈ A`, `b ∈ B`.
    pub fn subspace_product(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check_subspace(a)?;
        self.check_subspace(b)?;
        let bs = b.basis_vectors();
        let mut vectors = Vec::new();
        for x in a.basis_vectors() {
            for y in &bs {
                let v = self.bracket(&x, y)?;
                if !is_zero_vector(&v) {
                    vectors.push(v);
                }
            }
        }
        Subspace::span(self.dim, vectors)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim)
    }

    /// Smallest two-sided ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        let whole = self.full();
        let mut current = s.clone();
        // Each pass either stops or strictly raises the dimension.
        for _ in 0..=self.dim {
            let next = current
                .sum(&self.subspace_product(&current, &whole)?)?
                .sum(&self.subspace_product(&whole, &current)?)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
        Ok(current)
    }

    /// The ideal spanned by all squares `[x, x]`, obtained by polarization
    /// from `[e_i, e_i]` and `[e_i, e_j] + [e_j, e_i]`.
    pub fn squares_ideal(&self) -> Result<Subspace> {
        self.verified()?;
        let n = self.dim;
        let mut vectors = Vec::new();
        for i in 0..n {
            vectors.push(self.product(i, i));
            for j in i + 1..n {
                let mut v = self.product(i, j);
                for (k, c) in self.product_terms(j, i) {
                    v[*k] += c;
                }
                vectors.push(v);
            }
        }
        vectors.retain(|v| !is_zero_vector(v));
        let ideal = Subspace::span(n, vectors)?;
        debug_assert!(self.is_ideal(&ideal).unwrap_or(false));
        Ok(ideal)
    }

    pub fn is_ideal(&self, a: &Subspace) -> Result<bool> {
        let whole = self.full();
        Ok(self.subspace_product(a, &whole)?.is_subspace_of(a)?
            && self.subspace_product(&whole, a)?.is_subspace_of(a)?)
    }

    pub fn is_subalgebra(&self, a: &Subspace) -> Result<bool> {
        self.subspace_product(a, a)?.is_subspace_of(a)
    }

    /// `{ a : [x, a] = 0 for all x }`.
    pub fn right_annihilator(&self) -> Subspace {
        let n = self.dim;
        let mut stacked = Matrix::zeros(n * n, n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.product_terms(i, j) {
                    stacked.set(i * n + k, j, c.clone());
                }
            }
        }
        stacked.kernel()
    }

    pub fn derived_series(&self) -> DerivedSeries {
        let mut terms = vec![self.full()];
        loop {
            let last = terms.last().expect("series is never empty");
            if last.is_zero() {
                break;
            }
            let next = self
                .subspace_product(last, last)
                .expect("terms live in the algebra");
            if &next == last {
                break;
            }
            terms.push(next);
        }
        let index = terms.iter().position(Subspace::is_zero).map(|p| p + 1);
        DerivedSeries {
            solvable: index.is_some(),
            index,
            terms,
        }
    }

    /// Induced table on `L / J`, using the non-pivot coordinates of `J` as
    /// coset representatives.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        self.check_subspace(ideal)?;
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let reps = ideal.non_pivots();
        let labels = reps.iter().map(|&r| self.labels[r].clone()).collect();
        let mut table = AlgebraTable::with_labels_unchecked(labels);
        let q = reps.len();
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate() {
                let v = ideal.reduce(&self.product(ra, rb))?;
                let coords: Vec<Scalar> = reps.iter().map(|&r| v[r].clone()).collect();
                table.products[a * q + b] = sparse(&coords);
            }
        }
        Ok(Quotient {
            table,
            ideal: ideal.clone(),
            representatives: reps,
        })
    }

    /// Block-diagonal sum; the second summand's indices are shifted.
    pub fn direct_sum(&self, other: &AlgebraTable) -> AlgebraTable {
        let n1 = self.dim;
        let n = n1 + other.dim;
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut t = AlgebraTable::with_labels_unchecked(labels);
        for i in 0..n1 {
            for j in 0..n1 {
                t.products[i * n + j] = self.product_terms(i, j).to_vec();
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                t.products[(i + n1) * n + j + n1] = other
                    .product_terms(i, j)
                    .iter()
                    .map(|(k, c)| (k + n1, c.clone()))
                    .collect();
            }
        }
        t
    }

    /// Relabels the basis so that new basis vector `p` is old basis vector
    /// `perm[p]`.
    pub fn permute_basis(&self, perm: &[usize]) -> Result<AlgebraTable> {
        let n = self.dim;
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidParameter(format!(
                "{perm:?} is not a permutation of 0..{n}"
            )));
        }
        let mut inverse = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let labels = perm.iter().map(|&p| self.labels[p].clone()).collect();
        let mut t = AlgebraTable::with_labels_unchecked(labels);
        for a in 0..n {
            for b in 0..n {
                let mut terms: Vec<(usize, Scalar)> = self
                    .product_terms(perm[a], perm[b])
                    .iter()
                    .map(|(k, c)| (inverse[*k], c.clone()))
                    .collect();
                terms.sort_by_key(|(k, _)| *k);
                t.products[a * n + b] = terms;
            }
        }
        Ok(t)
    }

    /// Induced table on the subalgebra with the given ordered basis.
    pub fn restrict(&self, basis: &[Vector], labels: Vec<String>) -> Result<AlgebraTable> {
        if labels.len() != basis.len() {
            return Err(Error::DimensionMismatch {
                expected: basis.len(),
                found: labels.len(),
            });
        }
        for v in basis {
            self.check_vector(v)?;
        }
        let k = basis.len();
        let columns = Matrix::from_rows(self.dim, basis.to_vec())?.transpose();
        if columns.rank() != k {
            return Err(Error::InvalidParameter(
                "restriction basis is linearly dependent".into(),
            ));
        }
        let mut t = AlgebraTable::with_labels_unchecked(labels);
        for a in 0..k {
            for b in 0..k {
                let v = self.bracket(&basis[a], &basis[b])?;
                let coords = columns.solve(&v)?.ok_or_else(|| {
                    Error::InvalidParameter(
                        "span of the basis is not closed under the bracket".into(),
                    )
                })?;
                t.products[a * k + b] = sparse(&coords);
            }
        }
        Ok(t)
    }

    /// Restriction to a subspace in its RREF basis, labelled by pivot labels.
    pub fn restrict_to(&self, s: &Subspace) -> Result<AlgebraTable> {
        self.check_subspace(s)?;
        let labels = s.pivots().iter().map(|&p| self.labels[p].clone()).collect();
        self.restrict(&s.basis_vectors(), labels)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim, i)
    }
}

/// `L = L^1 ⊇ L^[2] ⊇ …` recorded until it reaches zero or stabilizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedSeries {
    pub terms: Vec<Subspace>,
    pub solvable: bool,
    /// Minimal `m` with `L^[m] = 0`, counting `L^1 = L`.
    pub index: Option<usize>,
}

impl DerivedSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub table: AlgebraTable,
    pub ideal: Subspace,
    /// Coordinates of `L` whose unit vectors represent the quotient basis.
    pub representatives: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, v: &[Scalar]) -> Result<Vector> {
        let r = self.ideal.reduce(v)?;
        Ok(self.representatives.iter().map(|&i| r[i].clone()).collect())
    }

    pub fn project_subspace(&self, s: &Subspace) -> Result<Subspace> {
        let vectors = s
            .basis_vectors()
            .iter()
            .map(|v| self.project(v))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(self.table.dim(), vectors)
    }

    /// The coset representative of a quotient vector.
    pub fn lift(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.representatives.len() {
            return Err(Error::DimensionMismatch {
                expected: self.representatives.len(),
                found: v.len(),
            });
        }
        let mut out = zero_vector(self.ideal.ambient_dim());
        for (x, &r) in v.iter().zip(&self.representatives) {
            out[r] = x.clone();
        }
        Ok(out)
    }
}

/// `G ⋉ M` with `[x + m, y + n] = [x, y] + m·y`: the module lands in the
/// right annihilator and squares to zero.
pub fn hemisemidirect(g: &AlgebraTable, module: &ModuleAction) -> Result<AlgebraTable> {
    if !g.is_lie() {
        return Err(Error::NotLie);
    }
    let actions: Vec<&Matrix> = module.flattened_matrices();
    if actions.len() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: actions.len(),
        });
    }
    check_right_action(g, &actions, "G")?;
    let n = g.dim();
    let d = module.dim();
    let mut labels = g.labels().to_vec();
    labels.extend((0..d).map(|k| format!("x{k}")));
    let total = n + d;
    let mut t = AlgebraTable::with_labels_unchecked(labels);
    for i in 0..n {
        for j in 0..n {
            t.products[i * total + j] = g.product_terms(i, j).to_vec();
        }
    }
    for r in 0..d {
        for (a, m) in actions.iter().enumerate() {
            t.products[(n + r) * total + a] = m
                .row(r)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (n + k, c.clone()))
                .collect();
        }
    }
    Ok(t)
}

/// Checks `A_[a,b] = A_a A_b − A_b A_a` for all basis pairs, i.e. that the
/// matrices (acting on row vectors) define a right module.
pub(crate) fn check_right_action(g: &AlgebraTable, actions: &[&Matrix], label: &str) -> Result<()> {
    let n = g.dim();
    if let Some(first) = actions.first() {
        let d = first.rows();
        for m in actions {
            if m.rows() != d || m.cols() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: m.rows().max(m.cols()),
                });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let lhs = g.product_terms(a, b).iter().fold(
                Matrix::zeros(actions[a].rows(), actions[a].rows()),
                |acc, (k, c)| acc.add(&actions[*k].scale(c)).expect("shapes checked"),
            );
            let rhs = actions[a].commutator(actions[b])?;
            if lhs != rhs {
                return Err(Error::ModuleAxiom {
                    component: label.to_string(),
                    a,
                    b,
                });
            }
        }
    }
    Ok(())
}

/// The table of the Lie algebra spanned by the given matrices under the
/// commutator. The span must be closed and the matrices independent.
pub fn from_matrix_basis(basis: &[Matrix], labels: Vec<String>) -> Result<AlgebraTable> {
    let k = basis.len();
    if labels.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: labels.len(),
        });
    }
    let Some(first) = basis.first() else {
        return Ok(AlgebraTable::abelian(0));
    };
    let len = first.rows() * first.cols();
    let columns =
        Matrix::from_rows(len, basis.iter().map(|m| m.entries().to_vec()).collect())?.transpose();
    if columns.rank() != k {
        return Err(Error::InvalidParameter(
            "matrix basis is linearly dependent".into(),
        ));
    }
    let mut t = AlgebraTable::with_labels_unchecked(labels);
    for a in 0..k {
        for b in 0..k {
            let c = basis[a].commutator(&basis[b])?;
            let coords = columns.solve(c.entries())?.ok_or_else(|| {
                Error::InvalidParameter("matrix span is not closed under commutators".into())
            })?;
            t.products[a * k + b] = sparse(&coords);
        }
    }
    Ok(t)
}

/// Adds `coeff * v` to the product `[e_i, e_j]`.
pub(crate) fn add_to_product(
    t: AlgebraTable,
    i: usize,
    j: usize,
    coeff: &Scalar,
    v: &[Scalar],
) -> Result<AlgebraTable> {
    let mut p = t.product(i, j);
    add_scaled(&mut p, coeff, v);
    t.with_product(i, j, &p)
}
