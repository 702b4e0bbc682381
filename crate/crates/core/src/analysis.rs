//! Classification of Leibniz algebras and the structure checks on Levi
//! layouts: component ideals `I_j = [I, S_j]`, annihilation between
//! components, splitting into Lie-simple summands and isotypic slices.

use num_traits::{One, Zero};

use crate::algebra::{add_to_product, AlgebraTable};
use crate::builders::{build_sl2, LayoutComponent, LeviLayout};
use crate::error::{Error, Result};
use crate::lie::{is_semisimple_lie, is_simple_lie};
use crate::linalg::{is_zero_vector, Scalar, Subspace, Vector};
use crate::modules::{
    decompose_sl2, induced_action, is_irreducible_sl2, Component, ComponentKind, IrreducibleChain,
    ModuleAction,
};

/// `L / I` is a semisimple Lie algebra.
pub fn is_semisimple_leibniz(l: &AlgebraTable) -> Result<bool> {
    let q = l.quotient(&l.squares_ideal()?)?;
    is_semisimple_lie(&q.table)
}

/// `L / I` is a simple Lie algebra.
pub fn is_lie_simple(l: &AlgebraTable) -> Result<bool> {
    let q = l.quotient(&l.squares_ideal()?)?;
    is_simple_lie(&q.table)
}

/// Ordering of the quotient basis that turns it into canonical sl2, if any.
fn sl2_ordering(q: &AlgebraTable) -> Option<[usize; 3]> {
    if q.dim() != 3 {
        return None;
    }
    let sl2 = build_sl2();
    [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ]
    .into_iter()
    .find(|p| q.permute_basis(p).is_ok_and(|t| t.same_constants(&sl2)))
}

/// Simple in the Leibniz sense: Lie-simple, `[L, L] ≠ I`, and `I` irreducible
/// over `L / I`. Irreducibility is computed when the quotient is canonical
/// sl2 in some ordering of its coset basis; otherwise `declared` is used.
/// `I = 0` counts as irreducible, so simple Lie algebras are simple.
pub fn is_simple_leibniz(l: &AlgebraTable, declared: Option<bool>) -> Result<bool> {
    if !is_lie_simple(l)? {
        return Ok(false);
    }
    let ideal = l.squares_ideal()?;
    let whole = l.full();
    if l.subspace_product(&whole, &whole)? == ideal {
        return Ok(false);
    }
    if ideal.is_zero() {
        return Ok(true);
    }
    let q = l.quotient(&ideal)?;
    match sl2_ordering(&q.table) {
        Some(order) => {
            let basis: Vec<Vector> = order
                .iter()
                .map(|&p| q.lift(&q.table.basis_vector(p)))
                .collect::<Result<_>>()?;
            let component = Component::sl2("L/I");
            let action = induced_action(l, &ideal, &component, &basis)?;
            let module = ModuleAction::new(ideal.dim(), vec![action])?;
            is_irreducible_sl2(&module, "L/I")
        }
        None => declared.ok_or_else(|| Error::UndecidableIrreducibility("L/I".into())),
    }
}

/// `I_j = [I, S_j]` for every component with the four structural clauses:
/// (a) `Σ I_j = I`, (b) each `I_j` is an ideal, (c) `[I_j, S_j] = I_j`,
/// (d) each `S_j + I_j` is an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentIdeals {
    pub labels: Vec<String>,
    pub ideals: Vec<Subspace>,
    pub sum_is_ideal_i: bool,
    pub each_is_ideal: Vec<bool>,
    pub self_generated: Vec<bool>,
    pub extended_is_ideal: Vec<bool>,
    /// `[I, S] = I` for the whole Levi part.
    pub i_generated_by_levi: bool,
}

impl ComponentIdeals {
    pub fn all_clauses_hold(&self) -> bool {
        self.sum_is_ideal_i
            && self.each_is_ideal.iter().all(|&b| b)
            && self.self_generated.iter().all(|&b| b)
            && self.extended_is_ideal.iter().all(|&b| b)
    }
}

pub fn component_ideals(l: &AlgebraTable, layout: &LeviLayout) -> Result<ComponentIdeals> {
    layout.verify(l)?;
    let i = &layout.ideal;
    let mut out = ComponentIdeals {
        labels: Vec::new(),
        ideals: Vec::new(),
        sum_is_ideal_i: false,
        each_is_ideal: Vec::new(),
        self_generated: Vec::new(),
        extended_is_ideal: Vec::new(),
        i_generated_by_levi: l.subspace_product(i, &layout.levi_subspace()?)? == *i,
    };
    let mut total = Subspace::zero(l.dim());
    for c in &layout.components {
        let ij = l.subspace_product(i, &c.subspace)?;
        total = total.sum(&ij)?;
        out.each_is_ideal.push(l.is_ideal(&ij)?);
        out.self_generated
            .push(l.subspace_product(&ij, &c.subspace)? == ij);
        out.extended_is_ideal
            .push(l.is_ideal(&ij.sum(&c.subspace)?)?);
        out.labels.push(c.label().to_string());
        out.ideals.push(ij);
    }
    out.sum_is_ideal_i = total == *i;
    Ok(out)
}

/// The action of one layout component on an invariant subspace, in the RREF
/// coordinates of that subspace.
pub fn induced_module(
    l: &AlgebraTable,
    module: &Subspace,
    component: &LayoutComponent,
) -> Result<ModuleAction> {
    let action = induced_action(l, module, &component.component, &component.basis)?;
    ModuleAction::new(module.dim(), vec![action])
}

/// Decomposes an invariant subspace over an sl2 component, with chain
/// vectors expressed in the coordinates of `L`.
pub fn decompose_over(
    l: &AlgebraTable,
    module: &Subspace,
    component: &LayoutComponent,
) -> Result<Vec<IrreducibleChain>> {
    if component.component.kind != ComponentKind::Sl2 {
        return Err(Error::NotSl2Component(component.label().to_string()));
    }
    let m = induced_module(l, module, component)?;
    let d = decompose_sl2(&m, component.label())?;
    d.chains
        .into_iter()
        .map(|c| {
            Ok(IrreducibleChain {
                highest_weight: c.highest_weight,
                vectors: c
                    .vectors
                    .iter()
                    .map(|v| module.combine(v))
                    .collect::<Result<_>>()?,
            })
        })
        .collect()
}

/// Irreducibility of an invariant subspace over a layout component: computed
/// for sl2 copies, looked up in the declared set otherwise.
fn irreducible_over(
    l: &AlgebraTable,
    module: &Subspace,
    layout: &LeviLayout,
    index: usize,
) -> Result<Option<bool>> {
    let c = &layout.components[index];
    match c.component.kind {
        ComponentKind::Sl2 => Ok(Some(is_irreducible_sl2(
            &induced_module(l, module, c)?,
            c.label(),
        )?)),
        ComponentKind::Simple if layout.irreducible_over.contains(c.label()) => Ok(Some(true)),
        ComponentKind::Simple => Ok(None),
    }
}

/// A bracket `[x, y]` that should vanish but does not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketWitness {
    pub left: Vector,
    pub right: Vector,
    pub value: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    HypothesisNotMet(String),
    Holds,
    Fails(BracketWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilationReport {
    pub component: String,
    /// `[I, S']` for the sum `S'` of all other components.
    pub product: Subspace,
    pub status: ClaimStatus,
}

fn first_nonzero_bracket(
    l: &AlgebraTable,
    a: &Subspace,
    b: &Subspace,
) -> Result<Option<BracketWitness>> {
    for x in a.basis_vectors() {
        for y in b.basis_vectors() {
            let value = l.bracket(&x, &y)?;
            if !is_zero_vector(&value) {
                return Ok(Some(BracketWitness {
                    left: x,
                    right: y.clone(),
                    value,
                }));
            }
        }
    }
    Ok(None)
}

/// When `I` is irreducible over the named sl2 component of a semisimple `L`,
/// `I` is annihilated by every other component.
pub fn verify_other_components_annihilate(
    l: &AlgebraTable,
    layout: &LeviLayout,
    sl2_component: &str,
) -> Result<AnnihilationReport> {
    layout.verify(l)?;
    let (index, c) = layout.component(sl2_component)?;
    if c.component.kind != ComponentKind::Sl2 {
        return Err(Error::NotSl2Component(sl2_component.to_string()));
    }
    let others = layout
        .components
        .iter()
        .enumerate()
        .filter(|(p, _)| *p != index)
        .try_fold(Subspace::zero(l.dim()), |acc, (_, d)| acc.sum(&d.subspace))?;
    let product = l.subspace_product(&layout.ideal, &others)?;
    let status = if !is_semisimple_leibniz(l)? {
        ClaimStatus::HypothesisNotMet("algebra is not semisimple".into())
    } else if irreducible_over(l, &layout.ideal, layout, index)? != Some(true) {
        ClaimStatus::HypothesisNotMet(format!("I is not irreducible over `{sl2_component}`"))
    } else {
        match first_nonzero_bracket(l, &layout.ideal, &others)? {
            None => ClaimStatus::Holds,
            Some(w) => ClaimStatus::Fails(w),
        }
    };
    Ok(AnnihilationReport {
        component: sl2_component.to_string(),
        product,
        status,
    })
}

/// Adds `α·x` to `[x, y]` for every basis vector `x` of `I` and every
/// selected basis vector `y` of the target component (all of them when
/// `generator` is `None`).
pub fn adversarial_extension(
    l: &AlgebraTable,
    layout: &LeviLayout,
    target: &str,
    generator: Option<usize>,
    alpha: &Scalar,
) -> Result<AlgebraTable> {
    let (_, c) = layout.component(target)?;
    let ideal_indices = layout.ideal.pivots().to_vec();
    if layout.ideal != Subspace::coordinate(l.dim(), &ideal_indices)? {
        return Err(Error::InvalidParameter(
            "ideal must be spanned by basis vectors".into(),
        ));
    }
    let mut targets = Vec::new();
    for (p, v) in c.basis.iter().enumerate() {
        if generator.is_some_and(|g| g != p) {
            continue;
        }
        let nonzero: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
        match nonzero.as_slice() {
            [k] if v[*k].is_one() => targets.push(*k),
            _ => {
                return Err(Error::InvalidParameter(
                    "component basis must be basis vectors".into(),
                ))
            }
        }
    }
    let mut t = l.clone();
    for &x in &ideal_indices {
        for &y in &targets {
            t = add_to_product(t, x, y, alpha, &l.basis_vector(x))?;
        }
    }
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionStatus {
    Decomposed,
    NotDecomposable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SummandClass {
    Simple,
    LieSimple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub label: String,
    pub component: Subspace,
    pub module: Subspace,
    /// `S_j + I_j`.
    pub ideal: Subspace,
    pub class: SummandClass,
    /// `None` when irreducibility over a non-sl2 component was not declared.
    pub irreducible: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionWitness {
    pub p: usize,
    pub q: usize,
    pub intersection: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandChecks {
    pub each_is_ideal: bool,
    pub pairwise_annihilating: bool,
    pub spans_algebra: bool,
}

impl SummandChecks {
    pub fn all(&self) -> bool {
        self.each_is_ideal && self.pairwise_annihilating && self.spans_algebra
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub status: DecompositionStatus,
    pub summands: Vec<Summand>,
    pub witness: Option<IntersectionWitness>,
    /// Present when every `I_p ∩ I_q` vanished; `Decomposed` requires all to
    /// pass.
    pub checks: Option<SummandChecks>,
}

impl DecompositionReport {
    pub fn is_decomposed(&self) -> bool {
        self.status == DecompositionStatus::Decomposed
    }
}

/// Pairwise intersections of component ideals.
pub fn pairwise_intersections(ideals: &ComponentIdeals) -> Result<Vec<IntersectionWitness>> {
    let mut out = Vec::new();
    for p in 0..ideals.ideals.len() {
        for q in p + 1..ideals.ideals.len() {
            out.push(IntersectionWitness {
                p,
                q,
                intersection: ideals.ideals[p].intersect(&ideals.ideals[q])?,
            });
        }
    }
    Ok(out)
}

/// Splits `L` into `S_j + I_j` when all `I_p ∩ I_q` vanish, otherwise reports
/// the first nonzero intersection.
pub fn decompose_semisimple(l: &AlgebraTable, layout: &LeviLayout) -> Result<DecompositionReport> {
    let ci = component_ideals(l, layout)?;
    if !is_semisimple_leibniz(l)? {
        return Err(Error::NotSemisimple);
    }
    if let Some(w) = pairwise_intersections(&ci)?
        .into_iter()
        .find(|w| !w.intersection.is_zero())
    {
        return Ok(DecompositionReport {
            status: DecompositionStatus::NotDecomposable,
            summands: Vec::new(),
            witness: Some(w),
            checks: None,
        });
    }
    let mut summands = Vec::new();
    for (index, (c, ij)) in layout.components.iter().zip(&ci.ideals).enumerate() {
        let irreducible = if ij.is_zero() {
            Some(true)
        } else {
            irreducible_over(l, ij, layout, index)?
        };
        summands.push(Summand {
            label: c.label().to_string(),
            component: c.subspace.clone(),
            module: ij.clone(),
            ideal: c.subspace.sum(ij)?,
            class: if irreducible == Some(true) {
                SummandClass::Simple
            } else {
                SummandClass::LieSimple
            },
            irreducible,
        });
    }
    let mut checks = SummandChecks {
        each_is_ideal: true,
        pairwise_annihilating: true,
        spans_algebra: false,
    };
    let mut total = Subspace::zero(l.dim());
    for (p, a) in summands.iter().enumerate() {
        checks.each_is_ideal &= l.is_ideal(&a.ideal)?;
        for b in &summands[p + 1..] {
            checks.pairwise_annihilating &= l.subspace_product(&a.ideal, &b.ideal)?.is_zero()
                && l.subspace_product(&b.ideal, &a.ideal)?.is_zero();
        }
        total = total.sum(&a.ideal)?;
    }
    checks.spans_algebra = total.is_full();
    Ok(DecompositionReport {
        status: if checks.all() {
            DecompositionStatus::Decomposed
        } else {
            DecompositionStatus::NotDecomposable
        },
        summands,
        witness: None,
        checks: Some(checks),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDims {
    pub component: String,
    pub dims: Vec<usize>,
    pub distinct: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctChainsReport {
    pub semisimple: bool,
    /// Chain dimensions of `I_j` over each sl2 component except the last.
    pub chain_dims: Vec<ChainDims>,
    pub hypothesis: bool,
    pub hypothesis_note: Option<String>,
    /// `Some` whenever the hypothesis holds.
    pub conclusion: Option<bool>,
    pub counterexample: bool,
}

/// Distinct irreducible dimensions inside every `I_j` (all components except
/// the last, which must be sl2 copies) should force the splitting
/// `L = ⊕ (S_j + I_j)`.
pub fn check_distinct_chains_split(
    l: &AlgebraTable,
    layout: &LeviLayout,
) -> Result<DistinctChainsReport> {
    let ci = component_ideals(l, layout)?;
    let semisimple = is_semisimple_leibniz(l)?;
    let k = layout.components.len();
    let mut report = DistinctChainsReport {
        semisimple,
        chain_dims: Vec::new(),
        hypothesis: false,
        hypothesis_note: None,
        conclusion: None,
        counterexample: false,
    };
    if !semisimple {
        report.hypothesis_note = Some("algebra is not semisimple".into());
        return Ok(report);
    }
    let mut hypothesis = true;
    for (c, ij) in layout
        .components
        .iter()
        .zip(&ci.ideals)
        .take(k.saturating_sub(1))
    {
        if c.component.kind != ComponentKind::Sl2 {
            report.hypothesis_note = Some(format!("component `{}` is not an sl2 copy", c.label()));
            return Ok(report);
        }
        let mut dims: Vec<usize> = decompose_over(l, ij, c)?
            .iter()
            .map(IrreducibleChain::dim)
            .collect();
        dims.sort_unstable();
        let distinct = dims.windows(2).all(|w| w[0] != w[1]);
        hypothesis &= distinct;
        report.chain_dims.push(ChainDims {
            component: c.label().to_string(),
            dims,
            distinct,
        });
    }
    report.hypothesis = hypothesis;
    if hypothesis {
        let d = decompose_semisimple(l, layout)?;
        let matches = d.is_decomposed()
            && d.summands.len() == k
            && d.summands
                .iter()
                .zip(layout.components.iter().zip(&ci.ideals))
                .all(|(s, (c, ij))| s.component == c.subspace && s.module == *ij);
        report.conclusion = Some(matches);
        report.counterexample = !matches;
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotypicSlices {
    /// Number `s` of chains of the requested dimension.
    pub multiplicity: usize,
    /// `slices[j]` spans the `j`-th vectors of those chains.
    pub slices: Vec<Subspace>,
    pub slices_are_submodules: bool,
    pub slices_have_dim_s: bool,
    /// Every slice lies in `I_2 = [I, S]`.
    pub slices_within_i2: bool,
    pub sum: Subspace,
    pub intersection: Subspace,
    pub sum_equals_intersection: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsotypicReport {
    HypothesisNotMet(String),
    Slices(IsotypicSlices),
}

/// For `L = (sl2 ⊕ S) ⋉ I`, gathers the `s` chains of `I_1` with dimension
/// `equal_dim` and slices them by chain position.
pub fn isotypic_slices(
    l: &AlgebraTable,
    layout: &LeviLayout,
    equal_dim: usize,
) -> Result<IsotypicReport> {
    let ci = component_ideals(l, layout)?;
    let [first, second] = layout.components.as_slice() else {
        return Ok(IsotypicReport::HypothesisNotMet(
            "layout must have exactly two components".into(),
        ));
    };
    if first.component.kind != ComponentKind::Sl2 {
        return Ok(IsotypicReport::HypothesisNotMet(
            "first component must be an sl2 copy".into(),
        ));
    }
    let (i1, i2) = (&ci.ideals[0], &ci.ideals[1]);
    let chains: Vec<IrreducibleChain> = decompose_over(l, i1, first)?
        .into_iter()
        .filter(|c| c.dim() == equal_dim)
        .collect();
    let s = chains.len();
    if s == 0 {
        return Ok(IsotypicReport::HypothesisNotMet(format!(
            "I_1 has no irreducible summand of dimension {equal_dim}"
        )));
    }
    let n = l.dim();
    let mut slices = Vec::new();
    for j in 0..equal_dim {
        slices.push(Subspace::span(
            n,
            chains.iter().map(|c| c.vectors[j].clone()).collect(),
        )?);
    }
    let mut sum = Subspace::zero(n);
    let mut submodules = true;
    let mut within = true;
    for slice in &slices {
        submodules &= l
            .subspace_product(slice, &second.subspace)?
            .is_subspace_of(slice)?;
        within &= slice.is_subspace_of(i2)?;
        sum = sum.sum(slice)?;
    }
    let intersection = i1.intersect(i2)?;
    Ok(IsotypicReport::Slices(IsotypicSlices {
        multiplicity: s,
        slices_have_dim_s: slices.iter().all(|x| x.dim() == s),
        slices,
        slices_are_submodules: submodules,
        slices_within_i2: within,
        sum_equals_intersection: sum == intersection,
        sum,
        intersection,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{
        build_example2, build_example3, build_lie_simple, build_semisimple, build_simple_leibniz,
        build_sl, SemisimpleSpec,
    };
    use crate::linalg::{int, vector_from_i64};
    use crate::modules::{canonical_module, direct_sum_modules};

    fn nilpotent2() -> AlgebraTable {
        AlgebraTable::from_products(
            vec!["a".into(), "b".into()],
            [(0, 0, vector_from_i64(&[0, 1]))],
        )
        .unwrap()
    }

    fn sl2_pair_over_first(m: u32) -> crate::builders::Built {
        let comps = vec![Component::sl2("sl2_1"), Component::sl2("sl2_2")];
        let module = canonical_module(m).lift(&comps, 0).unwrap();
        build_semisimple(&SemisimpleSpec::new(comps, vec![module])).unwrap()
    }

    fn prop1_instance() -> crate::builders::Built {
        let comps = vec![Component::sl2("sl2"), Component::sl2("S")];
        let m1 = direct_sum_modules(&[canonical_module(1), canonical_module(2)])
            .unwrap()
            .lift(&comps, 0)
            .unwrap();
        let m2 = canonical_module(3).lift(&comps, 1).unwrap();
        build_semisimple(&SemisimpleSpec::new(comps, vec![m1, m2])).unwrap()
    }

    #[test]
    fn semisimple_predicate() {
        for m in 1..4 {
            assert!(is_semisimple_leibniz(&build_simple_leibniz(m).table).unwrap());
        }
        assert!(!is_semisimple_leibniz(&build_simple_leibniz(0).table).unwrap());
        assert!(!is_semisimple_leibniz(&nilpotent2()).unwrap());
        assert!(is_semisimple_leibniz(&build_example3().table).unwrap());
    }

    #[test]
    fn lie_simple_predicate() {
        assert!(is_lie_simple(&build_lie_simple(&[1, 2]).unwrap().table).unwrap());
        assert!(!is_lie_simple(&build_example2([1, 1, 1, 1]).table).unwrap());
        assert!(is_lie_simple(&build_sl2()).unwrap());
    }

    #[test]
    fn simple_predicate() {
        for m in 1..4 {
            assert!(is_simple_leibniz(&build_simple_leibniz(m).table, None).unwrap());
        }
        assert!(!is_simple_leibniz(&build_simple_leibniz(0).table, None).unwrap());
        assert!(!is_simple_leibniz(&build_lie_simple(&[1, 2]).unwrap().table, None).unwrap());
        assert!(is_simple_leibniz(&build_sl2(), None).unwrap());
        assert!(!is_simple_leibniz(&nilpotent2(), None).unwrap());
    }

    #[test]
    fn simple_predicate_needs_declaration_beyond_sl2() {
        let b = crate::builders::build_example1(3).unwrap();
        assert!(matches!(
            is_simple_leibniz(&b.table, None),
            Err(Error::UndecidableIrreducibility(_))
        ));
        assert!(is_simple_leibniz(&b.table, Some(true)).unwrap());
        assert!(is_simple_lie(&build_sl(3)).unwrap());
    }

    #[test]
    fn component_ideals_example2() {
        let b = build_example2([1, 2, 1, 3]);
        let ci = component_ideals(&b.table, &b.layout).unwrap();
        assert!(ci.all_clauses_hold());
        assert!(ci.i_generated_by_levi);
        assert_eq!(ci.ideals[0].dim(), 5);
        assert_eq!(ci.ideals[1].dim(), 6);
        assert!(ci.ideals[0].intersect(&ci.ideals[1]).unwrap().is_zero());
    }

    #[test]
    fn component_ideals_example3() {
        let b = build_example3();
        let ci = component_ideals(&b.table, &b.layout).unwrap();
        assert!(ci.all_clauses_hold());
        assert_eq!(ci.ideals[0], b.layout.ideal);
        assert_eq!(ci.ideals[1], b.layout.ideal);
    }

    #[test]
    fn component_ideals_single_component() {
        let b = build_simple_leibniz(3);
        let ci = component_ideals(&b.table, &b.layout).unwrap();
        assert_eq!(ci.ideals, vec![b.layout.ideal.clone()]);
        assert!(ci.all_clauses_hold());
    }

    #[test]
    fn annihilation_examples() {
        let b = sl2_pair_over_first(2);
        let r = verify_other_components_annihilate(&b.table, &b.layout, "sl2_1").unwrap();
        assert_eq!(r.status, ClaimStatus::Holds);
        assert!(r.product.is_zero());

        let b = build_example3();
        let r = verify_other_components_annihilate(&b.table, &b.layout, "sl2_1").unwrap();
        assert!(matches!(r.status, ClaimStatus::HypothesisNotMet(_)));
    }

    #[test]
    fn adversarial_extension_breaks_identity() {
        let b = sl2_pair_over_first(1);
        for alpha in [int(1), int(-3)] {
            let t = adversarial_extension(&b.table, &b.layout, "sl2_2", None, &alpha).unwrap();
            let [x, y, z] = t.leibniz_violation().expect("identity must fail");
            assert!(b.layout.ideal.contains(&t.basis_vector(x)).unwrap());
            assert!(b.layout.components[1]
                .subspace
                .contains(&t.basis_vector(y))
                .unwrap());
            assert!(b.layout.components[1]
                .subspace
                .contains(&t.basis_vector(z))
                .unwrap());
        }
        for g in 0..3 {
            let t = adversarial_extension(&b.table, &b.layout, "sl2_2", Some(g), &int(2)).unwrap();
            assert!(!t.is_leibniz());
        }
    }

    #[test]
    fn decompose_example2() {
        let b = build_example2([1, 2, 1, 3]);
        let d = decompose_semisimple(&b.table, &b.layout).unwrap();
        assert!(d.is_decomposed());
        assert_eq!(d.summands.len(), 2);
        assert!(d
            .summands
            .iter()
            .all(|s| s.class == SummandClass::LieSimple));
        for s in &d.summands {
            let sub = b.table.restrict_to(&s.ideal).unwrap();
            assert!(is_lie_simple(&sub).unwrap());
            assert!(!is_simple_leibniz(&sub, None).unwrap());
        }
    }

    #[test]
    fn decompose_example3() {
        let b = build_example3();
        let d = decompose_semisimple(&b.table, &b.layout).unwrap();
        assert_eq!(d.status, DecompositionStatus::NotDecomposable);
        let w = d.witness.unwrap();
        assert_eq!((w.p, w.q, w.intersection.dim()), (0, 1, 4));
    }

    #[test]
    fn decompose_irreducible_summands_are_simple() {
        let b = build_example2([1, 0, 2, 0]);
        // Trivial summands make this non-semisimple.
        assert!(b.layout.verify(&b.table).is_err());
        let comps = vec![Component::sl2("a"), Component::sl2("b")];
        let m1 = canonical_module(2).lift(&comps, 0).unwrap();
        let m2 = canonical_module(1).lift(&comps, 1).unwrap();
        let b = build_semisimple(&SemisimpleSpec::new(comps, vec![m1, m2])).unwrap();
        let d = decompose_semisimple(&b.table, &b.layout).unwrap();
        assert!(d.is_decomposed());
        assert!(d.summands.iter().all(|s| s.class == SummandClass::Simple));
    }

    #[test]
    fn decompose_rejects_non_semisimple() {
        let b = build_example2([0, 1, 1, 1]);
        assert!(decompose_semisimple(&b.table, &b.layout).is_err());
    }

    #[test]
    fn distinct_chains_examples() {
        let b = prop1_instance();
        let r = check_distinct_chains_split(&b.table, &b.layout).unwrap();
        assert!(r.hypothesis);
        assert_eq!(r.chain_dims[0].dims, vec![2, 3]);
        assert_eq!(r.conclusion, Some(true));
        assert!(!r.counterexample);

        let b = build_example3();
        let r = check_distinct_chains_split(&b.table, &b.layout).unwrap();
        assert!(!r.hypothesis);
        assert_eq!(r.chain_dims[0].dims, vec![2, 2]);
        assert_eq!(r.conclusion, None);

        let b = build_simple_leibniz(2);
        let r = check_distinct_chains_split(&b.table, &b.layout).unwrap();
        assert!(r.hypothesis && r.chain_dims.is_empty());
        assert_eq!(r.conclusion, Some(true));
    }

    #[test]
    fn isotypic_slices_example3() {
        let b = build_example3();
        let IsotypicReport::Slices(r) = isotypic_slices(&b.table, &b.layout, 2).unwrap() else {
            panic!("hypothesis should hold");
        };
        assert_eq!(r.multiplicity, 2);
        assert!(r.slices_are_submodules && r.slices_have_dim_s && r.slices_within_i2);
        assert_eq!(r.slices[0], Subspace::coordinate(10, &[6, 8]).unwrap());
        assert_eq!(r.slices[1], Subspace::coordinate(10, &[7, 9]).unwrap());
        assert_eq!(r.intersection, b.layout.ideal);
        assert!(r.sum_equals_intersection);
    }

    #[test]
    fn isotypic_slices_single_chain() {
        let b = prop1_instance();
        let IsotypicReport::Slices(r) = isotypic_slices(&b.table, &b.layout, 3).unwrap() else {
            panic!("hypothesis should hold");
        };
        assert_eq!(r.multiplicity, 1);
        assert!(r.slices_have_dim_s && r.slices_are_submodules);
        assert!(r.intersection.is_zero());
        // The slices span the dimension-3 summand, which is not I_1 ∩ I_2.
        assert_eq!(r.sum.dim(), 3);
        assert!(!r.sum_equals_intersection);
        assert!(!r.slices_within_i2);

        assert!(matches!(
            isotypic_slices(&b.table, &b.layout, 5).unwrap(),
            IsotypicReport::HypothesisNotMet(_)
        ));
    }
}
