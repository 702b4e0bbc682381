//! Constructors for the concrete algebras studied here and the general
//! recipe `(S_1 ⊕ … ⊕ S_k) ⋉ (M_1 ⊕ … ⊕ M_r)`.

use std::collections::BTreeSet;

use crate::algebra::{from_matrix_basis, hemisemidirect, AlgebraTable};
use crate::error::{Error, Result};
use crate::lie::is_simple_lie;
use crate::linalg::{int, unit_vector, Matrix, Subspace, Vector};
use crate::modules::{
    canonical_module, direct_sum_modules, tensor_module, Component, ComponentAction, ComponentKind,
    ModuleAction,
};

/// `[e,h] = 2e, [f,h] = -2f, [e,f] = h` and their negatives, basis
/// `(e, f, h)`.
pub fn build_sl2() -> AlgebraTable {
    let v = |e: i64, f: i64, h: i64| vec![int(e), int(f), int(h)];
    AlgebraTable::from_products(
        vec!["e".into(), "f".into(), "h".into()],
        [
            (0, 2, v(2, 0, 0)),
            (2, 0, v(-2, 0, 0)),
            (1, 2, v(0, -2, 0)),
            (2, 1, v(0, 2, 0)),
            (0, 1, v(0, 0, 1)),
            (1, 0, v(0, 0, -1)),
        ],
    )
    .expect("indices are in range")
}

/// `sl_n` in the basis `E_ij (i ≠ j)` followed by `H_i = E_ii − E_{i+1,i+1}`,
/// bracket `[X, Y] = XY − YX`.
pub fn build_sl(n: usize) -> AlgebraTable {
    let unit = |i: usize, j: usize| {
        let mut m = Matrix::zeros(n, n);
        m.set(i, j, int(1));
        m
    };
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(unit(i, j));
                labels.push(format!("E{}{}", i + 1, j + 1));
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        basis.push(unit(i, i).sub(&unit(i + 1, i + 1)).expect("same shape"));
        labels.push(format!("H{}", i + 1));
    }
    from_matrix_basis(&basis, labels).expect("sl_n is closed under commutators")
}

/// `sl_n` as matrices, in the same order as [`build_sl`].
fn sl_matrices(n: usize) -> Vec<Matrix> {
    let unit = |i: usize, j: usize| {
        let mut m = Matrix::zeros(n, n);
        m.set(i, j, int(1));
        m
    };
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(unit(i, j));
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        basis.push(unit(i, i).sub(&unit(i + 1, i + 1)).expect("same shape"));
    }
    basis
}

/// Recipe for a semisimple Leibniz algebra: Levi components and right
/// modules over all of them. `irreducible_over` lists components whose
/// irreducibility claims are taken on trust.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleSpec {
    pub components: Vec<Component>,
    pub modules: Vec<ModuleAction>,
    pub irreducible_over: BTreeSet<String>,
}

impl SemisimpleSpec {
    pub fn new(components: Vec<Component>, modules: Vec<ModuleAction>) -> Self {
        SemisimpleSpec {
            components,
            modules,
            irreducible_over: BTreeSet::new(),
        }
    }

    pub fn declare_irreducible(mut self, label: impl Into<String>) -> Self {
        self.irreducible_over.insert(label.into());
        self
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for c in &self.components {
            if !seen.insert(c.label.as_str()) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate component label `{}`",
                    c.label
                )));
            }
            let ok = match c.kind {
                ComponentKind::Sl2 => c.algebra.same_constants(&build_sl2()),
                ComponentKind::Simple => c.algebra.is_lie() && is_simple_lie(&c.algebra)?,
            };
            if !ok {
                return Err(Error::NotSimpleComponent(c.label.clone()));
            }
        }
        for label in &self.irreducible_over {
            if !seen.contains(label.as_str()) {
                return Err(Error::UnknownComponent(label.clone()));
            }
        }
        for m in &self.modules {
            let comps = m.components();
            if comps.len() != self.components.len()
                || comps.iter().zip(&self.components).any(|(a, b)| *a != b)
            {
                return Err(Error::ComponentMismatch);
            }
            m.validate()?;
        }
        Ok(())
    }
}

/// One Levi component inside a built table: its ordered basis (matching the
/// component's own table) and the spanned subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayoutComponent {
    pub component: Component,
    pub basis: Vec<Vector>,
    pub subspace: Subspace,
}

impl LayoutComponent {
    pub fn label(&self) -> &str {
        &self.component.label
    }
}

/// Levi part and module ideal of a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviLayout {
    pub components: Vec<LayoutComponent>,
    pub ideal: Subspace,
    pub irreducible_over: BTreeSet<String>,
}

impl LeviLayout {
    pub fn ambient_dim(&self) -> usize {
        self.ideal.ambient_dim()
    }

    pub fn component(&self, label: &str) -> Result<(usize, &LayoutComponent)> {
        self.components
            .iter()
            .enumerate()
            .find(|(_, c)| c.label() == label)
            .ok_or_else(|| Error::UnknownComponent(label.to_string()))
    }

    /// Sum of all component subspaces.
    pub fn levi_subspace(&self) -> Result<Subspace> {
        self.components
            .iter()
            .try_fold(Subspace::zero(self.ambient_dim()), |acc, c| {
                acc.sum(&c.subspace)
            })
    }

    /// Layout from coordinate indices. A three-element component whose
    /// restricted table is the canonical sl2 under some ordering of its
    /// indices is recorded as an sl2 copy in that order; anything else is a
    /// generic simple component.
    pub fn from_indices(
        table: &AlgebraTable,
        components: &[Vec<usize>],
        labels: Option<&[String]>,
        ideal: &[usize],
        irreducible_over: BTreeSet<String>,
    ) -> Result<LeviLayout> {
        let n = table.dim();
        let sl2 = build_sl2();
        let mut out = Vec::new();
        for (p, idx) in components.iter().enumerate() {
            if idx.iter().any(|&i| i >= n) {
                return Err(Error::LayoutInconsistent(format!(
                    "component {p} has an index out of range"
                )));
            }
            let label = match labels {
                Some(l) => l.get(p).cloned().ok_or_else(|| {
                    Error::LayoutInconsistent("fewer labels than components".into())
                })?,
                None => format!("S{}", p + 1),
            };
            let subspace = Subspace::coordinate(n, idx)?;
            if subspace.dim() != idx.len() {
                return Err(Error::LayoutInconsistent(format!(
                    "component {p} repeats an index"
                )));
            }
            let mut found = None;
            if idx.len() == 3 {
                for perm in [
                    [0, 1, 2],
                    [0, 2, 1],
                    [1, 0, 2],
                    [1, 2, 0],
                    [2, 0, 1],
                    [2, 1, 0],
                ] {
                    let order: Vec<usize> = perm.iter().map(|&q| idx[q]).collect();
                    let basis: Vec<Vector> = order.iter().map(|&i| unit_vector(n, i)).collect();
                    if let Ok(r) = table.restrict(&basis, vec![String::new(); 3]) {
                        if r.same_constants(&sl2) {
                            found = Some(basis);
                            break;
                        }
                    }
                }
            }
            let entry = match found {
                Some(basis) => LayoutComponent {
                    component: Component::sl2(label),
                    basis,
                    subspace,
                },
                None => {
                    let basis: Vec<Vector> = idx.iter().map(|&i| unit_vector(n, i)).collect();
                    let labels = idx.iter().map(|&i| table.labels()[i].clone()).collect();
                    let algebra = table.restrict(&basis, labels).map_err(|_| {
                        Error::LayoutInconsistent(format!("component {p} is not a subalgebra"))
                    })?;
                    LayoutComponent {
                        component: Component::simple(label, algebra),
                        basis,
                        subspace,
                    }
                }
            };
            out.push(entry);
        }
        if ideal.iter().any(|&i| i >= n) {
            return Err(Error::LayoutInconsistent("ideal index out of range".into()));
        }
        Ok(LeviLayout {
            components: out,
            ideal: Subspace::coordinate(n, ideal)?,
            irreducible_over,
        })
    }

    /// Checks the layout against the table: each component is a simple Lie
    /// subalgebra with the recorded constants, components are independent and
    /// commute, they complement the ideal, and the ideal is the squares ideal.
    pub fn verify(&self, table: &AlgebraTable) -> Result<()> {
        let n = table.dim();
        let bad = |msg: String| Err(Error::LayoutInconsistent(msg));
        if self.ambient_dim() != n {
            return bad(format!(
                "layout lives in dimension {}, table has {n}",
                self.ambient_dim()
            ));
        }
        let squares = table.squares_ideal()?;
        if squares != self.ideal {
            return bad("ideal differs from the squares ideal".into());
        }
        let mut total = self.ideal.clone();
        for (p, c) in self.components.iter().enumerate() {
            if c.subspace.ambient_dim() != n || c.basis.iter().any(|v| v.len() != n) {
                return bad(format!(
                    "component `{}` has the wrong ambient dimension",
                    c.label()
                ));
            }
            if Subspace::span(n, c.basis.clone())? != c.subspace
                || c.subspace.dim() != c.basis.len()
            {
                return bad(format!(
                    "basis of component `{}` does not match its subspace",
                    c.label()
                ));
            }
            let restricted = table
                .restrict(&c.basis, c.component.algebra.labels().to_vec())
                .map_err(|_| {
                    Error::LayoutInconsistent(format!(
                        "component `{}` is not a subalgebra",
                        c.label()
                    ))
                })?;
            if !restricted.same_constants(&c.component.algebra) {
                return bad(format!(
                    "component `{}` has different structure constants",
                    c.label()
                ));
            }
            if c.component.kind == ComponentKind::Simple && !is_simple_lie(&c.component.algebra)? {
                return Err(Error::NotSimpleComponent(c.label().to_string()));
            }
            for d in &self.components[p + 1..] {
                if !table.subspace_product(&c.subspace, &d.subspace)?.is_zero() {
                    return bad(format!(
                        "components `{}` and `{}` do not commute",
                        c.label(),
                        d.label()
                    ));
                }
            }
            let next = total.sum(&c.subspace)?;
            if next.dim() != total.dim() + c.subspace.dim() {
                return bad(format!(
                    "component `{}` overlaps the rest of the layout",
                    c.label()
                ));
            }
            total = next;
        }
        if !total.is_full() {
            return bad("components and ideal do not span the algebra".into());
        }
        Ok(())
    }
}

/// A table together with its Levi layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Built {
    pub table: AlgebraTable,
    pub layout: LeviLayout,
}

fn component_labels(components: &[Component]) -> Vec<String> {
    if components.len() == 1 {
        return components[0].algebra.labels().to_vec();
    }
    components
        .iter()
        .enumerate()
        .flat_map(|(p, c)| {
            c.algebra
                .labels()
                .iter()
                .map(move |l| format!("{l}{}", p + 1))
        })
        .collect()
}

fn module_labels(modules: &[ModuleAction]) -> Vec<String> {
    if modules.len() == 1 {
        return (0..modules[0].dim()).map(|k| format!("x{k}")).collect();
    }
    modules
        .iter()
        .enumerate()
        .flat_map(|(j, m)| (0..m.dim()).map(move |k| format!("x{k}_{}", j + 1)))
        .collect()
}

/// `(⊕ components) ⋉ (⊕ modules)` with `[x + m, y + n] = [x, y] + m·y`.
/// Components come first in spec order, then module vectors in spec order.
pub fn build_semisimple(spec: &SemisimpleSpec) -> Result<Built> {
    spec.validate()?;
    let g = spec
        .components
        .iter()
        .fold(AlgebraTable::abelian(0), |acc, c| {
            acc.direct_sum(&c.algebra)
        })
        .with_labels(component_labels(&spec.components))?;
    let module = if spec.modules.is_empty() {
        ModuleAction::trivial(0, &spec.components)
    } else {
        direct_sum_modules(&spec.modules)?
    };
    let table = hemisemidirect(&g, &module)?;
    let mut labels = g.labels().to_vec();
    labels.extend(module_labels(&spec.modules));
    let table = table.with_labels(labels)?;

    let n = table.dim();
    let mut components = Vec::new();
    let mut offset = 0;
    for c in &spec.components {
        let indices: Vec<usize> = (offset..offset + c.dim()).collect();
        components.push(LayoutComponent {
            component: c.clone(),
            basis: indices.iter().map(|&i| unit_vector(n, i)).collect(),
            subspace: Subspace::coordinate(n, &indices)?,
        });
        offset += c.dim();
    }
    let ideal = Subspace::coordinate(n, &(offset..n).collect::<Vec<_>>())?;
    Ok(Built {
        table,
        layout: LeviLayout {
            components,
            ideal,
            irreducible_over: spec.irreducible_over.clone(),
        },
    })
}

/// `sl2 ⋉ V(m)`: basis `(e, f, h, x0, …, xm)`.
pub fn build_simple_leibniz(m: u32) -> Built {
    build_semisimple(&SemisimpleSpec::new(
        vec![Component::sl2("sl2")],
        vec![canonical_module(m)],
    ))
    .expect("canonical modules are valid")
}

/// `sl2 ⋉ (V(t_1) ⊕ … ⊕ V(t_p))`.
pub fn build_lie_simple(t: &[u32]) -> Result<Built> {
    if t.is_empty() {
        return Err(Error::InvalidParameter(
            "need at least one module weight".into(),
        ));
    }
    let modules = t.iter().map(|&w| canonical_module(w)).collect();
    build_semisimple(&SemisimpleSpec::new(vec![Component::sl2("sl2")], modules))
}

/// `sl_n ⋉ Q^n` with the natural right action `v·X = vX`; the module is
/// declared irreducible.
pub fn build_example1(n: usize) -> Result<Built> {
    if n < 2 {
        return Err(Error::InvalidParameter("sl_n needs n >= 2".into()));
    }
    let label = format!("sl{n}");
    let component = Component::simple(label.clone(), build_sl(n));
    let module = ModuleAction::new(
        n,
        vec![ComponentAction {
            component: component.clone(),
            matrices: sl_matrices(n),
        }],
    )?;
    build_semisimple(&SemisimpleSpec::new(vec![component], vec![module]).declare_irreducible(label))
}

/// Two sl2 copies, `V(t1) ⊕ V(t2)` over the first and `V(t3) ⊕ V(t4)` over
/// the second, each acting trivially through the other copy.
pub fn build_example2(t: [u32; 4]) -> Built {
    let comps = vec![Component::sl2("sl2_1"), Component::sl2("sl2_2")];
    let modules = t
        .iter()
        .enumerate()
        .map(|(j, &w)| canonical_module(w).lift(&comps, j / 2))
        .collect::<Result<Vec<_>>>()
        .expect("sl2 modules lift onto sl2 components");
    build_semisimple(&SemisimpleSpec::new(comps, modules))
        .expect("lifted canonical modules are valid")
}

/// Basis order of the ten-dimensional example relative to
/// `build_semisimple` output: `(e1, h1, f1, e2, h2, f2, x1, …, x4)`.
const EXAMPLE3_ORDER: [usize; 10] = [0, 2, 1, 3, 5, 4, 6, 7, 8, 9];

/// The spec whose build, reordered by [`EXAMPLE3_ORDER`], is
/// [`build_example3`].
pub fn example3_spec() -> SemisimpleSpec {
    let comps = vec![Component::sl2("sl2_1"), Component::sl2("sl2_2")];
    let module = tensor_module(&comps, &[1, 1]).expect("sl2 components accept any weight");
    SemisimpleSpec::new(comps, vec![module])
}

/// `(sl2 ⊕ sl2) ⋉ (V(1) ⊗ V(1))` in basis `(e1, h1, f1, e2, h2, f2, x1, …, x4)`.
pub fn build_example3() -> Built {
    let built = build_semisimple(&example3_spec()).expect("tensor module is valid");
    let mut table = built
        .table
        .permute_basis(&EXAMPLE3_ORDER)
        .expect("fixed permutation");
    let mut labels = table.labels().to_vec();
    for k in 0..4 {
        labels[6 + k] = format!("x{}", k + 1);
    }
    table = table.with_labels(labels).expect("ten labels");
    let mut inverse = [0; 10];
    for (new, &old) in EXAMPLE3_ORDER.iter().enumerate() {
        inverse[old] = new;
    }
    let move_vector = |v: &Vector| {
        let mut out = vec![int(0); 10];
        for (old, c) in v.iter().enumerate() {
            out[inverse[old]] = c.clone();
        }
        out
    };
    let components = built
        .layout
        .components
        .iter()
        .map(|c| {
            let basis: Vec<Vector> = c.basis.iter().map(move_vector).collect();
            LayoutComponent {
                component: c.component.clone(),
                subspace: Subspace::span(10, basis.clone()).expect("ambient 10"),
                basis,
            }
        })
        .collect();
    Built {
        table,
        layout: LeviLayout {
            components,
            ideal: Subspace::coordinate(10, &[6, 7, 8, 9]).expect("ambient 10"),
            irreducible_over: BTreeSet::new(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::hemisemidirect;
    use crate::linalg::vector_from_i64;
    use crate::modules::{decompose_sl2, tensor_pair_module};

    #[test]
    fn sl2_table() {
        let t = build_sl2();
        assert_eq!(t.nonzero_products(), 6);
        assert!(t.is_lie());
        assert_eq!(
            t.bracket(&unit_vector(3, 0), &unit_vector(3, 2)).unwrap(),
            vector_from_i64(&[2, 0, 0])
        );
        assert!(!t.derived_series().solvable);
    }

    #[test]
    fn sl3_table() {
        let t = build_sl(3);
        assert_eq!(t.dim(), 8);
        assert!(t.is_lie());
        assert!(is_simple_lie(&t).unwrap());
    }

    #[test]
    fn simple_leibniz_matches_hemisemidirect() {
        for m in 0..5 {
            let b = build_simple_leibniz(m);
            assert_eq!(b.table.dim(), m as usize + 4);
            let direct = hemisemidirect(&build_sl2(), &canonical_module(m)).unwrap();
            assert!(b.table.same_constants(&direct));
            assert!(b.table.is_leibniz());
            if m > 0 {
                assert_eq!(b.table.squares_ideal().unwrap().dim(), m as usize + 1);
                b.layout.verify(&b.table).unwrap();
            }
        }
        // The trivial module at m = 0 is central, so the squares ideal is zero.
        let b = build_simple_leibniz(0);
        assert!(b.table.squares_ideal().unwrap().is_zero());
        assert!(b.layout.verify(&b.table).is_err());
        // [x1, e] = -2 x0 at m = 2.
        let t = build_simple_leibniz(2).table;
        let mut expect = vec![int(0); 6];
        expect[3] = int(-2);
        assert_eq!(t.product(4, 0), expect);
        assert_eq!(t.labels()[3], "x0");
    }

    #[test]
    fn lie_simple_examples() {
        assert_eq!(build_lie_simple(&[3]).unwrap(), build_simple_leibniz(3));
        let b = build_lie_simple(&[1, 2]).unwrap();
        assert_eq!(b.table.dim(), 8);
        assert_eq!(b.table.squares_ideal().unwrap().dim(), 5);
        b.layout.verify(&b.table).unwrap();
        assert!(build_lie_simple(&[]).is_err());
        let q = b.table.quotient(&b.layout.ideal).unwrap();
        assert!(is_simple_lie(&q.table).unwrap());
    }

    #[test]
    fn lie_simple_module_decomposes() {
        let b = build_lie_simple(&[1, 2]).unwrap();
        let c = &b.layout.components[0];
        let action =
            crate::modules::induced_action(&b.table, &b.layout.ideal, &c.component, &c.basis)
                .unwrap();
        let m = ModuleAction::new(5, vec![action]).unwrap();
        let d = decompose_sl2(&m, "sl2").unwrap();
        assert_eq!(d.multiplicities, [(1, 1), (2, 1)].into_iter().collect());
    }

    #[test]
    fn example1_is_declared_irreducible() {
        let b = build_example1(3).unwrap();
        assert_eq!(b.table.dim(), 11);
        assert!(b.table.is_leibniz());
        b.layout.verify(&b.table).unwrap();
        assert!(b.layout.irreducible_over.contains("sl3"));
        assert!(build_example1(1).is_err());
    }

    #[test]
    fn example2_shape() {
        let b = build_example2([1, 2, 1, 3]);
        assert_eq!(b.table.dim(), 6 + 2 + 3 + 2 + 4);
        assert!(b.table.is_leibniz());
        b.layout.verify(&b.table).unwrap();
        let i1 = Subspace::coordinate(17, &(6..11).collect::<Vec<_>>()).unwrap();
        let s2 = &b.layout.components[1].subspace;
        assert!(b.table.subspace_product(&i1, s2).unwrap().is_zero());
        assert_eq!(
            &b.table.labels()[..6],
            &["e1", "f1", "h1", "e2", "f2", "h2"]
        );
        assert_eq!(b.table.labels()[6], "x0_1");
    }

    #[test]
    fn example2_with_trivial_summand_fails_layout() {
        let b = build_example2([0, 1, 1, 1]);
        assert!(b.table.is_leibniz());
        assert!(matches!(
            b.layout.verify(&b.table),
            Err(Error::LayoutInconsistent(_))
        ));
    }

    #[test]
    fn example3_table() {
        let b = build_example3();
        let t = &b.table;
        assert_eq!(
            t.labels(),
            &["e1", "h1", "f1", "e2", "h2", "f2", "x1", "x2", "x3", "x4"]
        );
        let (e1, h1, f1, e2, h2, f2) = (0, 1, 2, 3, 4, 5);
        let x = |k: usize| 5 + k;
        let expect = |i: usize, j: usize, k: usize, c: i64| {
            let mut v = vec![int(0); 10];
            v[k] = int(c);
            assert_eq!(t.product(i, j), v, "[{}, {}]", t.labels()[i], t.labels()[j]);
        };
        expect(x(1), f1, x(2), 1);
        expect(x(1), h1, x(1), 1);
        expect(x(2), e1, x(1), -1);
        expect(x(2), h1, x(2), -1);
        expect(x(3), f1, x(4), 1);
        expect(x(3), h1, x(3), 1);
        expect(x(4), e1, x(3), -1);
        expect(x(4), h1, x(4), -1);
        expect(x(1), f2, x(3), 1);
        expect(x(1), h2, x(1), 1);
        expect(x(3), e2, x(1), -1);
        expect(x(3), h2, x(3), -1);
        expect(x(2), f2, x(4), 1);
        expect(x(2), h2, x(2), 1);
        expect(x(4), e2, x(2), -1);
        expect(x(4), h2, x(4), -1);
        expect(e1, h1, e1, 2);
        expect(f2, h2, f2, -2);
        expect(e2, f2, h2, 1);
        // 12 Lie products, 16 module products.
        assert_eq!(t.nonzero_products(), 28);
        b.layout.verify(t).unwrap();
        assert_eq!(tensor_pair_module(1, 1).dim(), 4);
    }

    #[test]
    fn example3_spec_matches_up_to_reordering() {
        let from_spec = build_semisimple(&example3_spec()).unwrap();
        let reordered = from_spec.table.permute_basis(&EXAMPLE3_ORDER).unwrap();
        assert!(reordered.same_constants(&build_example3().table));
    }

    #[test]
    fn builders_are_deterministic() {
        assert_eq!(build_example3(), build_example3());
        assert_eq!(build_example2([2, 1, 0, 2]), build_example2([2, 1, 0, 2]));
    }

    #[test]
    fn spec_validation() {
        let bad = Component::simple("ab", AlgebraTable::abelian(2));
        let spec = SemisimpleSpec::new(vec![bad], vec![]);
        assert!(matches!(spec.validate(), Err(Error::NotSimpleComponent(_))));

        let dup = SemisimpleSpec::new(vec![Component::sl2("a"), Component::sl2("a")], vec![]);
        assert!(matches!(dup.validate(), Err(Error::InvalidParameter(_))));

        let wrong = SemisimpleSpec::new(vec![Component::sl2("a")], vec![tensor_pair_module(1, 1)]);
        assert_eq!(wrong.validate(), Err(Error::ComponentMismatch));

        let undeclared =
            SemisimpleSpec::new(vec![Component::sl2("a")], vec![]).declare_irreducible("b");
        assert!(matches!(
            undeclared.validate(),
            Err(Error::UnknownComponent(_))
        ));
    }

    #[test]
    fn layout_from_indices_detects_sl2_order() {
        let b = build_example3();
        let layout = LeviLayout::from_indices(
            &b.table,
            &[vec![0, 1, 2], vec![3, 4, 5]],
            Some(&["sl2_1".to_string(), "sl2_2".to_string()]),
            &[6, 7, 8, 9],
            BTreeSet::new(),
        )
        .unwrap();
        assert_eq!(layout, b.layout);
        layout.verify(&b.table).unwrap();
    }

    #[test]
    fn layout_verify_catches_errors() {
        let b = build_simple_leibniz(2);
        let mut broken = b.layout.clone();
        broken.ideal = Subspace::coordinate(6, &[3, 4]).unwrap();
        assert!(broken.verify(&b.table).is_err());
        let mut wrong_order = b.layout.clone();
        wrong_order.components[0].basis.swap(0, 1);
        assert!(wrong_order.verify(&b.table).is_err());
    }
}
