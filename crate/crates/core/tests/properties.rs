use proptest::prelude::*;

use whyd_core::forge::{adjoint_module, group_algebra, standard_instances, yau_twist, GroupPresentation};
use whyd_core::suite::{run_instance, Selection};
use whyd_core::yd::{check_yd_31, check_yd_32_33, YDModule};
use whyd_core::{Field, LinearMap, Scalar, WeakHomHopfAlgebra};

fn q(n: i64) -> Scalar {
    Field::Rational.int(n)
}

fn small() -> impl Strategy<Value = i64> {
    -3i64..=3
}

fn map_strategy(rows: usize, cols: usize) -> impl Strategy<Value = LinearMap> {
    prop::collection::vec(small(), rows * cols).prop_map(move |v| {
        let dense: Vec<Vec<Scalar>> = v.chunks(cols).map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        LinearMap::from_dense(Field::Rational, &[cols], &[rows], &dense).unwrap()
    })
}

/// Upper unitriangular times lower unitriangular with a nonzero diagonal scaling: always invertible.
fn invertible(n: usize) -> impl Strategy<Value = LinearMap> {
    (prop::collection::vec(small(), n * n), prop::collection::vec(prop_oneof![-2i64..=-1, 1i64..=2], n)).prop_map(move |(v, d)| {
        let f = Field::Rational;
        let upper: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            q(d[i])
                        } else if j > i {
                            q(v[i * n + j])
                        } else {
                            f.zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let lower: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            f.one()
                        } else if j < i {
                            q(v[i * n + j])
                        } else {
                            f.zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let u = LinearMap::from_dense(f, &[n], &[n], &upper).unwrap();
        let l = LinearMap::from_dense(f, &[n], &[n], &lower).unwrap();
        u.compose(&l).unwrap()
    })
}

/// Moves a Yetter-Drinfeld structure along the isomorphism `p`.
fn transport(h: &WeakHomHopfAlgebra, m: &YDModule, p: &LinearMap) -> YDModule {
    let pi = p.invert().unwrap();
    let id_h = h.id();
    let action = p.compose(&m.action).unwrap().compose(&id_h.tensor(&pi).unwrap()).unwrap();
    let coaction = p.tensor(&id_h).unwrap().compose(&m.coaction).unwrap().compose(&pi).unwrap();
    let alpha = p.compose(&m.alpha).unwrap().compose(&pi).unwrap();
    YDModule::new(h, action, coaction, alpha).unwrap()
}

fn kz(n: usize) -> (WeakHomHopfAlgebra, GroupPresentation) {
    let g = GroupPresentation::cyclic(n).unwrap();
    (group_algebra(Field::Rational, &g).unwrap(), g)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn composition_is_associative(a in map_strategy(2, 3), b in map_strategy(3, 2), c in map_strategy(2, 4)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tensor_interchanges_with_composition(a in map_strategy(2, 2), b in map_strategy(2, 3), c in map_strategy(3, 2), d in map_strategy(2, 2)) {
        let left = a.tensor(&c).unwrap().compose(&b.tensor(&d).unwrap()).unwrap();
        let right = a.compose(&b).unwrap().tensor(&c.compose(&d).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverses_compose_to_identity(p in invertible(4)) {
        let pi = p.invert().unwrap();
        prop_assert!(p.compose(&pi).unwrap().is_identity());
        prop_assert!(pi.compose(&p).unwrap().is_identity());
        prop_assert_eq!(pi.invert().unwrap(), p);
    }

    #[test]
    fn flip_is_an_involution(a in 1usize..4, b in 1usize..4) {
        let f = LinearMap::flip(Field::Rational, a, b);
        prop_assert!(LinearMap::flip(Field::Rational, b, a).compose(&f).unwrap().is_identity());
    }

    #[test]
    fn transporting_a_module_preserves_its_status(p in invertible(3)) {
        let (h, g) = kz(3);
        let adjoint = adjoint_module(&h, &g.as_groupoid(), &[0, 1, 2]).unwrap();
        let bumped = adjoint.with_coaction(&h, adjoint.coaction.bumped(0, 0, &q(1)).unwrap()).unwrap();
        for m in [adjoint, bumped] {
            let moved = transport(&h, &m, &p);
            let before = check_yd_31(&h, &m).unwrap().passed();
            prop_assert_eq!(check_yd_31(&h, &moved).unwrap().passed(), before);
            prop_assert_eq!(check_yd_32_33(&h, &moved).unwrap().passed(), before);
        }
    }

    #[test]
    fn twisted_adjoint_modules_transport(p in invertible(4)) {
        let (h, g) = kz(4);
        let beta = g.inverse().to_vec();
        let t = yau_twist(&h, &LinearMap::basis_map(Field::Rational, 4, &beta).unwrap()).unwrap();
        let m = adjoint_module(&t, &g.as_groupoid(), &beta).unwrap();
        prop_assert!(check_yd_31(&t, &m).unwrap().passed());
        prop_assert!(check_yd_31(&t, &transport(&t, &m, &p)).unwrap().passed());
    }

    #[test]
    fn twisting_twice_by_an_involution_restores_the_algebra(n in 2usize..6) {
        let (h, g) = kz(n);
        let beta = LinearMap::basis_map(Field::Rational, n, g.inverse()).unwrap();
        let once = yau_twist(&h, &beta).unwrap();
        prop_assert_eq!(once.alpha(), &beta);
        let twice = yau_twist(&once, &beta).unwrap();
        prop_assert_eq!(twice.mul(), h.mul());
        prop_assert_eq!(twice.comul(), h.comul());
    }
}

#[test]
fn rescaling_a_module_by_a_scalar_keeps_it_yetter_drinfeld() {
    let (h, g) = kz(3);
    let m = adjoint_module(&h, &g.as_groupoid(), &[0, 1, 2]).unwrap();
    let p = LinearMap::identity(Field::Rational, &[3]).scale(&Field::Rational.ratio(5, 3).unwrap());
    assert!(check_yd_31(&h, &transport(&h, &m, &p)).unwrap().passed());
}

#[test]
fn instance_runs_are_deterministic_and_catch_mutations() {
    let inst = standard_instances().unwrap().into_iter().find(|i| i.name == "kZ2").unwrap();
    let selection = Selection::default();
    let first = run_instance(&inst, &selection).unwrap();
    let second = run_instance(&inst, &selection).unwrap();
    assert_eq!(first, second);
    assert!(first.passed());
    let mutation = first.section("mutation-sensitivity").unwrap();
    assert!(mutation.checked > 0);
    assert_eq!(mutation.failed, 0);
}

#[test]
fn selections_restrict_sections() {
    let inst = standard_instances().unwrap().into_iter().find(|i| i.name == "pair2").unwrap();
    let run = run_instance(&inst, &Selection::only(&["axioms", "rigidity"]).unwrap()).unwrap();
    let names: Vec<&str> = run.sections.iter().map(|s| s.name.as_str()).collect();
    assert_eq!(names, vec!["axioms", "rigidity"]);
    assert!(Selection::only(&["no-such-section"]).is_err());
}
