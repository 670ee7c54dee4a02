use whyd_core::forge::{group_algebra, groupoid_algebra, yau_twist, GroupPresentation, GroupoidPresentation};
use whyd_core::hom::{check_comodule, check_hom_algebra, check_hom_coalgebra, check_module, check_morphism};
use whyd_core::hom::{HComodule, HModule, HomAlgebra, HomCoalgebra, MorphismEnds};
use whyd_core::weak::{certify, check_antipode, check_weak_bialgebra};
use whyd_core::{Error, Field, LinearMap, Scalar, WeakHomHopfAlgebra};

fn q(n: i64) -> Scalar {
    Field::Rational.int(n)
}

fn kz(n: usize) -> WeakHomHopfAlgebra {
    group_algebra(Field::Rational, &GroupPresentation::cyclic(n).unwrap()).unwrap()
}

fn perm(n: usize, p: &[usize]) -> LinearMap {
    LinearMap::basis_map(Field::Rational, n, p).unwrap()
}

fn scalar_map(x: i64) -> LinearMap {
    LinearMap::from_dense(Field::Rational, &[1], &[1], &[vec![q(x)]]).unwrap()
}

#[test]
fn group_algebras_certify() {
    for n in 1..=4 {
        let h = kz(n);
        assert!(h.is_hopf());
        assert!(certify(&h).unwrap().passed());
    }
    let s3 = group_algebra(Field::Rational, &GroupPresentation::symmetric(3).unwrap()).unwrap();
    assert_eq!(s3.dim(), 6);
    let gf7 = Field::prime(7).unwrap();
    let z3 = group_algebra(gf7, &GroupPresentation::cyclic(3).unwrap()).unwrap();
    assert_eq!(z3.field(), gf7);
}

#[test]
fn groupoid_algebras_have_nontrivial_delta_one() {
    let disc = groupoid_algebra(Field::Rational, &GroupoidPresentation::discrete(2).unwrap()).unwrap();
    assert!(!disc.is_hopf());
    assert_eq!(disc.counital().h_s.dim(), 2);
    assert_eq!(disc.counital().h_t.dim(), 2);
    let pair = groupoid_algebra(Field::Rational, &GroupoidPresentation::pair(2).unwrap()).unwrap();
    assert_eq!(pair.dim(), 4);
    assert_eq!(pair.counital().h_t.dim(), 2);
    assert_eq!(pair.counital().h_s.dim(), 2);
    assert!(pair.counital().h_s.same_space(&pair.counital().h_t));
}

#[test]
fn one_object_groupoid_is_the_group_algebra() {
    let g = GroupPresentation::cyclic(3).unwrap();
    let a = group_algebra(Field::Rational, &g).unwrap();
    let b = groupoid_algebra(Field::Rational, &g.as_groupoid()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn hopf_counital_maps_are_counit_times_one() {
    let h = kz(2);
    let cm = h.counital();
    assert_eq!(cm.h_t.dim(), 1);
    let expected = h.unit().compose(h.counit()).unwrap();
    assert_eq!(cm.eps_t, expected);
    assert_eq!(cm.eps_s, expected);
}

#[test]
fn doubling_gg_keeps_associativity_but_breaks_comultiplicativity() {
    let h = kz(2);
    let mut entries: Vec<(usize, usize, Scalar)> = Vec::new();
    for (r, row) in h.mul().rows().iter().enumerate() {
        for (c, v) in row {
            entries.push((r, *c, v.clone()));
        }
    }
    // μ(g, g) = 2·1
    entries.retain(|(_, c, _)| *c != 3);
    entries.push((0, 3, q(2)));
    let mul = LinearMap::from_entries(Field::Rational, &[2, 2], &[2], entries).unwrap();
    let a = HomAlgebra::new(mul, h.unit().clone(), h.alpha().clone()).unwrap();
    // k[g]/(g² - 2) is still associative and unital
    assert!(check_hom_algebra(&a).unwrap().passed());
    let broken = WeakHomHopfAlgebra::from_parts(a, h.coalgebra().clone(), h.antipode().clone()).unwrap();
    let r = check_weak_bialgebra(&broken).unwrap();
    let e = r.entry("comultiplicative").unwrap();
    assert!(!e.passed);
    assert_eq!(e.witnesses[0].tuple, vec![1, 1]);
}

#[test]
fn lopsided_coproduct_fails_counit() {
    let h = kz(2);
    let comul = LinearMap::from_entries(Field::Rational, &[2], &[2, 2], [(0, 0, q(1)), (2, 1, q(1))]).unwrap();
    let c = HomCoalgebra::new(comul, h.counit().clone(), h.alpha().clone()).unwrap();
    let r = check_hom_coalgebra(&c).unwrap();
    // (ε⊗id)Δ(g) = 1 but (id⊗ε)Δ(g) = g
    assert!(!r.entry("left-counit").unwrap().passed);
    assert!(r.entry("right-counit").unwrap().passed);
}

#[test]
fn module_examples() {
    let h = kz(2);
    let regular = HModule::new(2, h.mul().clone(), h.alpha().clone()).unwrap();
    assert!(check_module(h.algebra(), &regular).unwrap().passed());
    let sign = |x: i64| {
        let action = LinearMap::from_entries(Field::Rational, &[2, 1], &[1], [(0, 0, q(1)), (0, 1, q(x))]).unwrap();
        HModule::new(2, action, scalar_map(1)).unwrap()
    };
    assert!(check_module(h.algebra(), &sign(-1)).unwrap().passed());
    let r = check_module(h.algebra(), &sign(2)).unwrap();
    assert!(!r.entry("hom-action").unwrap().passed);
}

#[test]
fn comodule_examples() {
    let h = kz(2);
    let regular = HComodule::new(2, h.comul().clone(), h.alpha().clone()).unwrap();
    assert!(check_comodule(h.coalgebra(), &regular).unwrap().passed());
    let graded = LinearMap::from_entries(Field::Rational, &[1], &[1, 2], [(1, 0, q(1))]).unwrap();
    assert!(check_comodule(h.coalgebra(), &HComodule::new(2, graded, scalar_map(1)).unwrap()).unwrap().passed());
    let smeared = LinearMap::from_entries(Field::Rational, &[1], &[1, 2], [(0, 0, q(1)), (1, 0, q(1))]).unwrap();
    let r = check_comodule(h.coalgebra(), &HComodule::new(2, smeared, scalar_map(1)).unwrap()).unwrap();
    assert!(!r.entry("counit-coaction").unwrap().passed);
}

#[test]
fn morphism_examples() {
    let h = kz(2);
    let id = h.id();
    assert!(check_morphism(&id, MorphismEnds::Algebra(h.algebra(), h.algebra())).unwrap().passed());
    assert!(check_morphism(&id, MorphismEnds::Coalgebra(h.coalgebra(), h.coalgebra())).unwrap().passed());
    // g ↦ 1 is the counit followed by the unit: a genuine bialgebra endomorphism
    let collapse = LinearMap::from_entries(Field::Rational, &[2], &[2], [(0, 0, q(1)), (0, 1, q(1))]).unwrap();
    assert!(check_morphism(&collapse, MorphismEnds::Coalgebra(h.coalgebra(), h.coalgebra())).unwrap().passed());
    let smear = LinearMap::from_entries(Field::Rational, &[2], &[2], [(0, 0, q(1)), (0, 1, q(1)), (1, 1, q(1))]).unwrap();
    let r = check_morphism(&smear, MorphismEnds::Coalgebra(h.coalgebra(), h.coalgebra())).unwrap();
    assert!(!r.entry("counit").unwrap().passed);
    assert!(!r.entry("comultiplicative").unwrap().passed);
}

#[test]
fn weak_counit_fails_when_counit_is_scaled() {
    let disc = groupoid_algebra(Field::Rational, &GroupoidPresentation::discrete(2).unwrap()).unwrap();
    let counit = LinearMap::covector(Field::Rational, &[2], &[q(2), q(1)]).unwrap();
    let broken = WeakHomHopfAlgebra::new(
        disc.mul().clone(),
        disc.unit().clone(),
        disc.comul().clone(),
        counit,
        disc.alpha().clone(),
        disc.antipode().clone(),
    )
    .unwrap();
    let r = check_weak_bialgebra(&broken).unwrap();
    assert!(!r.entry("counit-left").unwrap().passed || !r.entry("counit-right").unwrap().passed);
}

#[test]
fn constant_antipode_fails_target_identity_at_g() {
    let h = kz(2);
    let s = LinearMap::from_entries(Field::Rational, &[2], &[2], [(0, 0, q(1)), (0, 1, q(1))]).unwrap();
    let broken =
        WeakHomHopfAlgebra::new(h.mul().clone(), h.unit().clone(), h.comul().clone(), h.counit().clone(), h.alpha().clone(), s).unwrap();
    let r = check_antipode(&broken).unwrap();
    let e = r.entry("target-counital").unwrap();
    assert!(!e.passed);
    assert_eq!(e.witnesses[0].tuple, vec![1]);
    assert!(!r.entry("invertible").unwrap().passed);
}

#[test]
fn yau_twists_by_group_automorphisms_certify() {
    let z4 = kz(4);
    let t = yau_twist(&z4, &perm(4, &[0, 3, 2, 1])).unwrap();
    assert!(!t.alpha().is_identity());
    assert!(t.alpha().compose(t.alpha()).unwrap().is_identity());

    let s3g = GroupPresentation::symmetric(3).unwrap();
    let s3 = group_algebra(Field::Rational, &s3g).unwrap();
    let t = yau_twist(&s3, &perm(6, &s3g.conjugation(1))).unwrap();
    assert!(!t.alpha().is_identity());
}

#[test]
fn sign_flip_on_kz2_is_not_a_twist() {
    let h = kz(2);
    let beta = LinearMap::from_entries(Field::Rational, &[2], &[2], [(0, 0, q(1)), (1, 1, q(-1))]).unwrap();
    match yau_twist(&h, &beta) {
        Err(Error::Certification { report, .. }) => {
            assert!(!report.entry("coalgebra/counit").unwrap().passed);
        }
        other => panic!("expected rejection, got {other:?}"),
    }
}

#[test]
fn double_twist_by_involution_recovers_the_algebra() {
    let z4 = kz(4);
    let beta = perm(4, &[0, 3, 2, 1]);
    let once = yau_twist(&z4, &beta).unwrap();
    let twice = yau_twist(&once, &beta).unwrap();
    assert_eq!(twice, z4);
}

#[test]
fn twist_by_identity_changes_nothing() {
    let h = kz(2);
    assert_eq!(yau_twist(&h, &h.id()).unwrap(), h);
}
