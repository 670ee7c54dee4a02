use whyd_core::braiding::braiding;
use whyd_core::forge::{
    character_module, cyclic_form, cyclic_rmatrix, group_algebra, standard_instances, trivial_form, trivial_rmatrix, GroupPresentation,
};
use whyd_core::hom::HModule;
use whyd_core::qt::{
    check_corep_braiding, check_rep_braiding, check_rep_tensor, check_rmatrix, check_sigma, corep_braiding, induced_action,
    induced_coaction, rep_braiding, InverseOrder, RMatrix, SigmaForm,
};
use whyd_core::yd::{certify_object, check_yd_31, tilde_tensor, Obj};
use whyd_core::{Field, LinearMap, Scalar, WeakHomHopfAlgebra};

fn q(n: i64) -> Scalar {
    Field::Rational.int(n)
}

fn kz2() -> WeakHomHopfAlgebra {
    group_algebra(Field::Rational, &GroupPresentation::cyclic(2).unwrap()).unwrap()
}

fn vector(entries: &[(usize, usize, i64)], den: i64) -> LinearMap {
    let f = Field::Rational;
    LinearMap::from_entries(f, &[], &[2, 2], entries.iter().map(|&(a, b, n)| (a * 2 + b, 0, f.ratio(n, den).unwrap()))).unwrap()
}

fn form(values: [i64; 4]) -> LinearMap {
    LinearMap::from_entries(Field::Rational, &[2, 2], &[], values.iter().enumerate().map(|(i, &v)| (0, i, q(v)))).unwrap()
}

fn sign_obj(h: &WeakHomHopfAlgebra) -> Obj {
    certify_object(h, "sign", character_module(h, &[q(1), q(-1)], 1).unwrap()).unwrap()
}

#[test]
fn kz2_rmatrix_is_the_half_sum() {
    let h = kz2();
    let r = cyclic_rmatrix(&h, 1, &q(-1)).unwrap();
    let expected = vector(&[(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)], 2);
    assert_eq!(r.r, expected);
    assert_eq!(r.r_bar, expected);
    assert!(check_rmatrix(&h, &r).unwrap().passed());
}

#[test]
fn one_tensor_one_is_an_rmatrix_on_a_group_algebra() {
    let h = kz2();
    let r = vector(&[(0, 0, 1)], 1);
    assert_eq!(&r, h.delta_one());
    assert!(check_rmatrix(&h, &RMatrix::new(&h, r.clone(), r).unwrap()).unwrap().passed());
}

#[test]
fn one_tensor_g_is_not_an_rmatrix() {
    let h = kz2();
    let r = vector(&[(0, 1, 1)], 1);
    let report = check_rmatrix(&h, &RMatrix::new(&h, r.clone(), r).unwrap()).unwrap();
    assert!(!report.passed());
    assert!(report.failed().count() >= 1);
}

#[test]
fn doubled_form_value_is_not_coquasitriangular() {
    let h = kz2();
    let s = SigmaForm::new(&h, form([1, 1, 1, 2]), form([1, 1, 1, 1])).unwrap();
    assert!(!check_sigma(&h, &s).unwrap().passed());
    let good = cyclic_form(&h, &q(-1)).unwrap();
    assert_eq!(good.sigma, form([1, 1, 1, -1]));
    assert!(check_sigma(&h, &good).unwrap().passed());
}

#[test]
fn induced_coaction_on_sign_grades_by_the_generator() {
    let h = kz2();
    let r = cyclic_rmatrix(&h, 1, &q(-1)).unwrap();
    let plain = character_module(&h, &[q(1), q(-1)], 0).unwrap();
    let m = induced_coaction(&h, &r, &HModule::new(2, plain.action.clone(), plain.alpha.clone()).unwrap()).unwrap();
    assert_eq!(m.coaction, LinearMap::from_entries(Field::Rational, &[1], &[1, 2], [(1, 0, q(1))]).unwrap());
    assert!(check_yd_31(&h, &m).unwrap().passed());
}

#[test]
fn induced_action_on_the_generator_grade_is_the_sign() {
    let h = kz2();
    let s = cyclic_form(&h, &q(-1)).unwrap();
    let graded = character_module(&h, &[q(1), q(1)], 1).unwrap();
    let m = induced_action(&h, &s, &graded.as_comodule()).unwrap();
    assert_eq!(m.action, character_module(&h, &[q(1), q(-1)], 1).unwrap().action);
}

#[test]
fn rep_braiding_equals_the_yetter_drinfeld_braiding() {
    let h = kz2();
    let r = cyclic_rmatrix(&h, 1, &q(-1)).unwrap();
    let s = sign_obj(&h);
    assert!(check_rep_tensor(&h, &r, &s, &s).unwrap().passed());
    assert!(check_rep_braiding(&h, &r, &s, &s).unwrap().passed());
    assert_eq!(rep_braiding(&h, &r, &s, &s).unwrap().map, braiding(&h, &s, &s).unwrap().map);
}

#[test]
fn form_braiding_inverts_in_either_argument_order() {
    let h = kz2();
    let sg = cyclic_form(&h, &q(-1)).unwrap();
    let s = sign_obj(&h);
    assert!(check_corep_braiding(&h, &sg, &s, &s).unwrap().passed());
    let st = tilde_tensor(&h, &s, &s).unwrap();
    for order in [InverseOrder::Printed, InverseOrder::Swapped] {
        let c = corep_braiding(&h, &sg, &s, &st, order).unwrap();
        assert!(c.inverse.compose(&c.map).unwrap().is_identity());
    }
}

#[test]
fn standard_rmatrices_and_forms_certify() {
    for inst in standard_instances().unwrap() {
        if let Some(r) = &inst.rmatrix {
            assert!(check_rmatrix(&inst.h, r).unwrap().passed(), "{}", inst.name);
        }
        if let Some(s) = &inst.sigma {
            assert!(check_sigma(&inst.h, s).unwrap().passed(), "{}", inst.name);
        }
    }
}

#[test]
fn trivial_structures_need_commutativity_or_cocommutativity() {
    let s3 = group_algebra(Field::Rational, &GroupPresentation::symmetric(3).unwrap()).unwrap();
    assert!(check_rmatrix(&s3, &trivial_rmatrix(&s3).unwrap()).unwrap().passed());
    assert!(!check_sigma(&s3, &trivial_form(&s3).unwrap()).unwrap().passed());
}
