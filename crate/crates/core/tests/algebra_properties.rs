use leibniz_core::algebra::hemisemidirect;
use leibniz_core::analysis::{component_ideals, is_semisimple_leibniz};
use leibniz_core::builders::{
    build_example2, build_example3, build_lie_simple, build_simple_leibniz, build_sl2, Built,
};
use leibniz_core::lie::{killing_form, solvable_radical_lie, split_simple_ideals};
use leibniz_core::linalg::{int, Matrix, Scalar, Subspace};
use leibniz_core::modules::{
    canonical_module, decompose_sl2, direct_sum_modules, Component, ComponentAction, ModuleAction,
};
use leibniz_core::AlgebraTable;
use proptest::prelude::*;

/// Unit lower-triangular times unit upper-triangular: always invertible.
fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-2i64..=2, n * n).prop_map(move |raw| {
        let mut lower = Matrix::identity(n);
        let mut upper = Matrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                let c = int(raw[i * n + j]);
                if i > j {
                    lower.set(i, j, c);
                } else if i < j {
                    upper.set(i, j, c);
                }
            }
        }
        lower.mul(&upper).unwrap()
    })
}

fn inverse(p: &Matrix) -> Matrix {
    let n = p.rows();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut e = vec![int(0); n];
            e[i] = int(1);
            p.solve(&e).unwrap().unwrap()
        })
        .collect();
    Matrix::from_rows(n, cols).unwrap().transpose()
}

/// A direct sum of irreducible sl2 modules written in a random basis.
fn scrambled_module() -> impl Strategy<Value = (Vec<u32>, ModuleAction)> {
    proptest::collection::vec(0u32..=3, 1..=3).prop_flat_map(|weights| {
        let d: usize = weights.iter().map(|w| *w as usize + 1).sum();
        (Just(weights), invertible(d)).prop_map(|(weights, p)| {
            let base = direct_sum_modules(
                &weights
                    .iter()
                    .map(|&w| canonical_module(w))
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            let pinv = inverse(&p);
            let matrices = base
                .flattened_matrices()
                .iter()
                .map(|m| p.mul(m).unwrap().mul(&pinv).unwrap())
                .collect();
            let action = ComponentAction {
                component: Component::sl2("sl2"),
                matrices,
            };
            (
                weights,
                ModuleAction::new(base.dim(), vec![action]).unwrap(),
            )
        })
    })
}

fn fixtures() -> Vec<Built> {
    let mut out: Vec<Built> = (1..4).map(build_simple_leibniz).collect();
    out.push(build_lie_simple(&[1, 2]).unwrap());
    out.push(build_example2([1, 1, 2, 1]));
    out.push(build_example3());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hemisemidirect_is_leibniz((_, m) in scrambled_module()) {
        let t = hemisemidirect(&build_sl2(), &m).unwrap();
        prop_assert!(t.is_leibniz());
        let i = t.squares_ideal().unwrap();
        prop_assert!(t.is_ideal(&i).unwrap());
        prop_assert!(i.is_subspace_of(&t.right_annihilator()).unwrap());
        prop_assert!(t.quotient(&i).unwrap().table.is_lie());
    }

    #[test]
    fn decomposition_recovers_weights((weights, m) in scrambled_module()) {
        let d = decompose_sl2(&m, "sl2").unwrap();
        let total: usize = d.chains.iter().map(|c| c.dim()).sum();
        prop_assert_eq!(total, m.dim());
        let all: Vec<_> = d.chains.iter().flat_map(|c| c.vectors.clone()).collect();
        prop_assert!(Subspace::span(m.dim(), all).unwrap().is_full());
        let (e, f, h) = m.component("sl2").unwrap().sl2_matrices().unwrap();
        for c in &d.chains {
            prop_assert!(c.satisfies(e, f, h).unwrap());
        }
        let mut expected = std::collections::BTreeMap::new();
        for w in weights {
            *expected.entry(w).or_insert(0) += 1;
        }
        prop_assert_eq!(d.multiplicities, expected);
    }

    #[test]
    fn product_lies_in_closure(idx in 0usize..6, a in proptest::collection::vec(0usize..16, 1..3), b in proptest::collection::vec(0usize..16, 1..3)) {
        let f = &fixtures()[idx];
        let n = f.table.dim();
        let a: Vec<usize> = a.into_iter().map(|i| i % n).collect();
        let b: Vec<usize> = b.into_iter().map(|i| i % n).collect();
        let sa = Subspace::coordinate(n, &a).unwrap();
        let sb = Subspace::coordinate(n, &b).unwrap();
        let prod = f.table.subspace_product(&sa, &sb).unwrap();
        let closure = f.table.ideal_closure(&sa.sum(&sb).unwrap()).unwrap();
        prop_assert!(prod.is_subspace_of(&closure).unwrap());
    }

    #[test]
    fn direct_sum_preserves_identity(m in 0u32..3, broken in any::<bool>()) {
        let a = build_simple_leibniz(m).table;
        let mut b = build_sl2();
        if broken {
            b = b.with_product(0, 2, &[int(1), int(0), int(0)]).unwrap();
        }
        prop_assert_eq!(a.direct_sum(&b).is_leibniz(), a.is_leibniz() && b.is_leibniz());
    }

    #[test]
    fn killing_form_is_invariant(k in 1usize..3, extra in 0usize..2) {
        let t = (0..k).fold(AlgebraTable::abelian(extra), |acc, _| acc.direct_sum(&build_sl2()));
        let form = killing_form(&t).unwrap();
        prop_assert_eq!(form.gram.transpose(), form.gram.clone());
        let n = t.dim();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (ex, ey, ez) = (t.basis_vector(x), t.basis_vector(y), t.basis_vector(z));
                    let lhs = form.evaluate(&t.bracket(&ex, &ey).unwrap(), &ez).unwrap();
                    let rhs = form.evaluate(&ex, &t.bracket(&ey, &ez).unwrap()).unwrap();
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn squares_ideal_properties_on_fixtures() {
    for f in fixtures() {
        let t = &f.table;
        let i = t.squares_ideal().unwrap();
        assert!(t.is_ideal(&i).unwrap());
        assert!(t.subspace_product(&t.full(), &i).unwrap().is_zero());
        assert!(t.quotient(&i).unwrap().table.is_lie());
        // Solvable of index 2 since [I, I] = 0.
        let sub = t.restrict_to(&i).unwrap();
        assert_eq!(sub.derived_series().index, Some(2));
    }
}

#[test]
fn derived_series_of_quotient_is_image() {
    for f in fixtures() {
        let t = &f.table;
        let q = t.quotient(&f.layout.ideal).unwrap();
        let images: Vec<Subspace> = t
            .derived_series()
            .terms
            .iter()
            .map(|s| q.project_subspace(s).unwrap())
            .collect();
        let mut quotient_terms = q.table.derived_series().terms;
        // The quotient series may stop earlier; pad with its last term.
        while quotient_terms.len() < images.len() {
            quotient_terms.push(quotient_terms.last().unwrap().clone());
        }
        assert_eq!(&quotient_terms[..images.len()], &images[..]);
    }
}

#[test]
fn quotient_by_squares_is_semisimple_on_fixtures() {
    for f in fixtures() {
        assert!(is_semisimple_leibniz(&f.table).unwrap());
        let q = f.table.quotient(&f.layout.ideal).unwrap();
        assert!(solvable_radical_lie(&q.table).unwrap().is_zero());
    }
}

#[test]
fn component_ideal_clauses_on_fixtures() {
    for f in fixtures() {
        let ci = component_ideals(&f.table, &f.layout).unwrap();
        assert!(ci.all_clauses_hold());
        assert!(ci.i_generated_by_levi);
        for ij in &ci.ideals {
            assert!(ij.is_subspace_of(&f.layout.ideal).unwrap());
        }
    }
}

#[test]
fn split_recovers_blocks() {
    let t = build_sl2()
        .direct_sum(&build_sl2())
        .direct_sum(&build_sl2());
    let s = split_simple_ideals(&t).unwrap();
    assert!(s.verified);
    assert_eq!(s.ideals.len(), 3);
    for ideal in &s.ideals {
        let sub = t.restrict_to(ideal).unwrap();
        assert!(leibniz_core::lie::is_simple_lie(&sub).unwrap());
    }
}
