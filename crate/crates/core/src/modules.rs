//! Right modules over Levi components, with the sl2 toolkit: weight spaces,
//! highest-weight vectors and the splitting into irreducible chains.
//!
//! A module vector is a row vector `v` and a component basis element `a`
//! acts by `v·a = v A_a`. The right-module axiom reads
//! `A_[a,b] = A_a A_b − A_b A_a`.
//!
//! Irreducible sl2 modules use the normalization
//!
//! ```text
//! x_k·h = (m − 2k) x_k,   x_k·f = x_{k+1},   x_k·e = −k(m + 1 − k) x_{k−1}
//! ```

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{check_right_action, AlgebraTable};
use crate::builders::build_sl2;
use crate::error::{Error, Result};
use crate::linalg::{int, is_zero_vector, unit_vector, Matrix, Scalar, Subspace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    /// Canonical sl2 in basis order (e, f, h).
    Sl2,
    /// Any other split simple Lie algebra, given by its table.
    Simple,
}

/// A Levi component: a simple Lie algebra with a label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub label: String,
    pub algebra: AlgebraTable,
    pub kind: ComponentKind,
}

impl Component {
    pub fn sl2(label: impl Into<String>) -> Self {
        Component {
            label: label.into(),
            algebra: build_sl2(),
            kind: ComponentKind::Sl2,
        }
    }

    /// A user-supplied simple component. Simplicity is checked when the
    /// component enters a [`SemisimpleSpec`](crate::builders::SemisimpleSpec).
    pub fn simple(label: impl Into<String>, algebra: AlgebraTable) -> Self {
        Component {
            label: label.into(),
            algebra,
            kind: ComponentKind::Simple,
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// Action matrices of one component, one per basis element of its algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentAction {
    pub component: Component,
    pub matrices: Vec<Matrix>,
}

impl ComponentAction {
    pub fn label(&self) -> &str {
        &self.component.label
    }

    pub fn validate(&self, dim: usize) -> Result<()> {
        if self.matrices.len() != self.component.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.component.dim(),
                found: self.matrices.len(),
            });
        }
        for m in &self.matrices {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.rows().max(m.cols()),
                });
            }
        }
        let refs: Vec<&Matrix> = self.matrices.iter().collect();
        check_right_action(&self.component.algebra, &refs, &self.component.label)
    }

    /// `(E, F, H)` of an sl2 component.
    pub fn sl2_matrices(&self) -> Result<(&Matrix, &Matrix, &Matrix)> {
        if self.component.kind != ComponentKind::Sl2 {
            return Err(Error::NotSl2Component(self.component.label.clone()));
        }
        Ok((&self.matrices[0], &self.matrices[1], &self.matrices[2]))
    }
}

/// A finite-dimensional right module over a direct sum of components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    dim: usize,
    actions: Vec<ComponentAction>,
}

impl ModuleAction {
    /// Checks every component's module axiom and that distinct components
    /// commute.
    pub fn new(dim: usize, actions: Vec<ComponentAction>) -> Result<Self> {
        let m = ModuleAction { dim, actions };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(dim: usize, actions: Vec<ComponentAction>) -> Self {
        ModuleAction { dim, actions }
    }

    /// The zero action of the given components on `Q^dim`.
    pub fn trivial(dim: usize, components: &[Component]) -> Self {
        let actions = components
            .iter()
            .map(|c| ComponentAction {
                component: c.clone(),
                matrices: vec![Matrix::zeros(dim, dim); c.dim()],
            })
            .collect();
        ModuleAction { dim, actions }
    }

    pub fn validate(&self) -> Result<()> {
        for a in &self.actions {
            a.validate(self.dim)?;
        }
        for (p, a) in self.actions.iter().enumerate() {
            for b in &self.actions[p + 1..] {
                for x in &a.matrices {
                    for y in &b.matrices {
                        if !x.commutator(y)?.is_zero() {
                            return Err(Error::NonCommuting {
                                first: a.label().to_string(),
                                second: b.label().to_string(),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[ComponentAction] {
        &self.actions
    }

    pub fn components(&self) -> Vec<&Component> {
        self.actions.iter().map(|a| &a.component).collect()
    }

    pub fn component(&self, label: &str) -> Result<&ComponentAction> {
        self.actions
            .iter()
            .find(|a| a.label() == label)
            .ok_or_else(|| Error::UnknownComponent(label.to_string()))
    }

    /// All action matrices in component order, matching the basis of the
    /// direct sum of the component algebras.
    pub fn flattened_matrices(&self) -> Vec<&Matrix> {
        self.actions
            .iter()
            .flat_map(|a| a.matrices.iter())
            .collect()
    }

    pub fn relabel(mut self, labels: &[&str]) -> Result<Self> {
        if labels.len() != self.actions.len() {
            return Err(Error::DimensionMismatch {
                expected: self.actions.len(),
                found: labels.len(),
            });
        }
        for (a, l) in self.actions.iter_mut().zip(labels) {
            a.component.label = l.to_string();
        }
        Ok(self)
    }

    /// Places this single-component module at position `index` of
    /// `components`, acting trivially through all the others.
    pub fn lift(&self, components: &[Component], index: usize) -> Result<ModuleAction> {
        let [only] = self.actions.as_slice() else {
            return Err(Error::ComponentMismatch);
        };
        let target = components
            .get(index)
            .ok_or_else(|| Error::InvalidParameter(format!("no component at position {index}")))?;
        if !target.algebra.same_constants(&only.component.algebra)
            || target.kind != only.component.kind
        {
            return Err(Error::ComponentMismatch);
        }
        let mut lifted = ModuleAction::trivial(self.dim, components);
        lifted.actions[index].matrices = only.matrices.clone();
        Ok(lifted)
    }
}

/// `(E, F, H)` of the irreducible module with highest weight `m`.
pub fn canonical_matrices(m: u32) -> (Matrix, Matrix, Matrix) {
    let d = m as usize + 1;
    let mi = i64::from(m);
    let mut e = Matrix::zeros(d, d);
    let mut f = Matrix::zeros(d, d);
    let mut h = Matrix::zeros(d, d);
    for k in 0..d {
        let ki = k as i64;
        h.set(k, k, int(mi - 2 * ki));
        if k + 1 < d {
            f.set(k, k + 1, int(1));
        }
        if k >= 1 {
            e.set(k, k - 1, int(-ki * (mi + 1 - ki)));
        }
    }
    (e, f, h)
}

/// The (m+1)-dimensional irreducible sl2 module, on a component labelled
/// `sl2`.
pub fn canonical_module(m: u32) -> ModuleAction {
    let (e, f, h) = canonical_matrices(m);
    ModuleAction::new_unchecked(
        m as usize + 1,
        vec![ComponentAction {
            component: Component::sl2("sl2"),
            matrices: vec![e, f, h],
        }],
    )
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    // Index convention: (i, j) ↦ i + j * a.rows(), so the first factor varies
    // fastest.
    let (ra, rb) = (a.rows(), b.rows());
    let mut out = Matrix::zeros(ra * rb, ra * rb);
    for i in 0..ra {
        for j in 0..rb {
            for p in 0..ra {
                let x = a.get(i, p);
                if x.is_zero() {
                    continue;
                }
                for q in 0..rb {
                    let y = b.get(j, q);
                    if !y.is_zero() {
                        out.set(i + j * ra, p + q * ra, x * y);
                    }
                }
            }
        }
    }
    out
}

/// Outer tensor product `V(w_1) ⊗ … ⊗ V(w_k)` over the given components, each
/// sl2 component acting on its own factor. Non-sl2 components must carry
/// weight 0 and act trivially. The first factor's index varies fastest.
pub fn tensor_module(components: &[Component], weights: &[u32]) -> Result<ModuleAction> {
    if components.len() != weights.len() {
        return Err(Error::DimensionMismatch {
            expected: components.len(),
            found: weights.len(),
        });
    }
    let dims: Vec<usize> = weights.iter().map(|&w| w as usize + 1).collect();
    let total: usize = dims.iter().product();
    let mut actions = Vec::new();
    for (pos, (c, &w)) in components.iter().zip(weights).enumerate() {
        let matrices = match c.kind {
            ComponentKind::Sl2 => {
                let (e, f, h) = canonical_matrices(w);
                [e, f, h]
                    .iter()
                    .map(|m| {
                        let before: usize = dims[..pos].iter().product();
                        let after: usize = dims[pos + 1..].iter().product();
                        kron(
                            &kron(&Matrix::identity(before), m),
                            &Matrix::identity(after),
                        )
                    })
                    .collect()
            }
            ComponentKind::Simple if w == 0 => vec![Matrix::zeros(total, total); c.dim()],
            ComponentKind::Simple => return Err(Error::NotSl2Component(c.label.clone())),
        };
        actions.push(ComponentAction {
            component: c.clone(),
            matrices,
        });
    }
    Ok(ModuleAction::new_unchecked(total, actions))
}

/// `V(m_a) ⊗ V(m_b)` over two sl2 copies labelled `A` and `B`.
pub fn tensor_pair_module(m_a: u32, m_b: u32) -> ModuleAction {
    tensor_module(&[Component::sl2("A"), Component::sl2("B")], &[m_a, m_b])
        .expect("sl2 components accept any weight")
}

/// Block-diagonal sum of modules over the same component list.
pub fn direct_sum_modules(modules: &[ModuleAction]) -> Result<ModuleAction> {
    let Some(first) = modules.first() else {
        return Ok(ModuleAction::new_unchecked(0, Vec::new()));
    };
    for m in &modules[1..] {
        if m.actions.len() != first.actions.len()
            || m.actions
                .iter()
                .zip(&first.actions)
                .any(|(a, b)| a.component != b.component)
        {
            return Err(Error::ComponentMismatch);
        }
    }
    let total: usize = modules.iter().map(ModuleAction::dim).sum();
    let mut actions = Vec::new();
    for (c, proto) in first.actions.iter().enumerate() {
        let mut matrices = vec![Matrix::zeros(total, total); proto.component.dim()];
        let mut offset = 0;
        for m in modules {
            for (basis, block) in m.actions[c].matrices.iter().enumerate() {
                for r in 0..m.dim {
                    for s in 0..m.dim {
                        let x = block.get(r, s);
                        if !x.is_zero() {
                            matrices[basis].set(offset + r, offset + s, x.clone());
                        }
                    }
                }
            }
            offset += m.dim;
        }
        actions.push(ComponentAction {
            component: proto.component.clone(),
            matrices,
        });
    }
    Ok(ModuleAction::new_unchecked(total, actions))
}

/// `{ v : v·M = λ v }`
fn left_eigenspace(m: &Matrix, lambda: &Scalar) -> Result<Subspace> {
    let shifted = m.sub(&Matrix::identity(m.rows()).scale(lambda))?;
    Ok(shifted.transpose().kernel())
}

/// Eigenspaces of the `h` action. Weights are searched among integers with
/// `|λ| ≤ dim`; failing to fill the module means the action is not a valid
/// sl2 action with integer weights.
pub fn weight_spaces(module: &ModuleAction, component: &str) -> Result<BTreeMap<i64, Subspace>> {
    let (_, _, h) = module.component(component)?.sl2_matrices()?;
    let d = module.dim() as i64;
    let mut spaces = BTreeMap::new();
    let mut filled = 0;
    for lambda in -d..=d {
        let space = left_eigenspace(h, &int(lambda))?;
        if !space.is_zero() {
            filled += space.dim();
            spaces.insert(lambda, space);
        }
    }
    if filled != module.dim() {
        return Err(Error::NotSemisimpleAction);
    }
    Ok(spaces)
}

/// Kernel of the `e` action.
pub fn highest_weight_vectors(module: &ModuleAction, component: &str) -> Result<Subspace> {
    let (e, _, _) = module.component(component)?.sl2_matrices()?;
    Ok(e.transpose().kernel())
}

/// Basis `x_0 … x_m` of an irreducible submodule in the canonical
/// normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleChain {
    pub highest_weight: u32,
    pub vectors: Vec<Vector>,
}

impl IrreducibleChain {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn span(&self, ambient: usize) -> Result<Subspace> {
        Subspace::span(ambient, self.vectors.clone())
    }

    /// Checks the three chain identities against the given action.
    pub fn satisfies(&self, e: &Matrix, f: &Matrix, h: &Matrix) -> Result<bool> {
        let m = i64::from(self.highest_weight);
        let n = self.vectors.len();
        if n != self.highest_weight as usize + 1 {
            return Ok(false);
        }
        for (k, x) in self.vectors.iter().enumerate() {
            let ki = k as i64;
            let xh = h.vec_mul(x)?;
            let expect_h: Vector = x.iter().map(|c| c * int(m - 2 * ki)).collect();
            if xh != expect_h {
                return Ok(false);
            }
            let xf = f.vec_mul(x)?;
            let ok_f = if k + 1 < n {
                xf == self.vectors[k + 1]
            } else {
                is_zero_vector(&xf)
            };
            if !ok_f {
                return Ok(false);
            }
            let xe = e.vec_mul(x)?;
            let ok_e = if k == 0 {
                is_zero_vector(&xe)
            } else {
                let c = int(-ki * (m + 1 - ki));
                let expect: Vector = self.vectors[k - 1].iter().map(|v| v * &c).collect();
                xe == expect
            };
            if !ok_e {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecomposition {
    pub chains: Vec<IrreducibleChain>,
    /// Highest weight ↦ number of chains.
    pub multiplicities: BTreeMap<u32, usize>,
}

impl ModuleDecomposition {
    /// Chain dimensions in emission order.
    pub fn chain_dims(&self) -> Vec<usize> {
        self.chains.iter().map(IrreducibleChain::dim).collect()
    }
}

/// Splits the module into irreducible chains: for every highest-weight basis
/// vector `v` of weight `m` (taken from the RREF basis of `ker e ∩ V_m`,
/// weights in decreasing order) emit `v, v·f, …, v·f^m`.
pub fn decompose_sl2(module: &ModuleAction, component: &str) -> Result<ModuleDecomposition> {
    let action = module.component(component)?;
    let (e, f, h) = action.sl2_matrices()?;
    let weights = weight_spaces(module, component)?;
    let primitive = highest_weight_vectors(module, component)?;
    let mut chains = Vec::new();
    let mut multiplicities = BTreeMap::new();
    for (&lambda, space) in weights.iter().rev() {
        let tops = space.intersect(&primitive)?;
        if tops.is_zero() {
            continue;
        }
        if lambda < 0 {
            return Err(Error::NotSemisimpleAction);
        }
        let m = lambda as u32;
        for v in tops.basis_vectors() {
            let mut vectors = vec![v];
            for _ in 0..m {
                let next = f.vec_mul(vectors.last().expect("chain is nonempty"))?;
                vectors.push(next);
            }
            let chain = IrreducibleChain {
                highest_weight: m,
                vectors,
            };
            if !chain.satisfies(e, f, h)? {
                return Err(Error::NotSemisimpleAction);
            }
            chains.push(chain);
            *multiplicities.entry(m).or_insert(0) += 1;
        }
    }
    let all: Vec<Vector> = chains
        .iter()
        .flat_map(|c| c.vectors.iter().cloned())
        .collect();
    if all.len() != module.dim() || Subspace::span(module.dim(), all)?.dim() != module.dim() {
        return Err(Error::NotSemisimpleAction);
    }
    Ok(ModuleDecomposition {
        chains,
        multiplicities,
    })
}

/// Irreducible iff the module is nonzero and splits into a single chain;
/// sound by complete reducibility.
pub fn is_irreducible_sl2(module: &ModuleAction, component: &str) -> Result<bool> {
    Ok(decompose_sl2(module, component)?.chains.len() == 1)
}

/// Action of the given component basis on the invariant subspace `module`
/// of `table`, in the RREF coordinates of `module`: row `r` of the matrix for
/// `a` holds the coordinates of `[m_r, a]`.
pub fn induced_action(
    table: &AlgebraTable,
    module: &Subspace,
    component: &Component,
    component_basis: &[Vector],
) -> Result<ComponentAction> {
    if component_basis.len() != component.dim() {
        return Err(Error::DimensionMismatch {
            expected: component.dim(),
            found: component_basis.len(),
        });
    }
    let rows = module.basis_vectors();
    let d = rows.len();
    let mut matrices = Vec::with_capacity(component_basis.len());
    for a in component_basis {
        let mut m = Matrix::zeros(d, d);
        for (r, v) in rows.iter().enumerate() {
            let image = table.bracket(v, a)?;
            let coords = module.coordinates(&image)?.ok_or_else(|| {
                Error::InvalidParameter("subspace is not invariant under the component".into())
            })?;
            for (s, c) in coords.into_iter().enumerate() {
                m.set(r, s, c);
            }
        }
        matrices.push(m);
    }
    Ok(ComponentAction {
        component: component.clone(),
        matrices,
    })
}

/// Unit vectors of `Q^n`, handy when a module is given in coordinates.
pub fn standard_basis(n: usize) -> Vec<Vector> {
    (0..n).map(|i| unit_vector(n, i)).collect()
}
