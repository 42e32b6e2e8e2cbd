use jacdual::gbasis::*;
use jacdual::polycore::{MonomialOrder, PolyMatrix, Polynomial, PrimeField, Ring, RingRef};

fn ring(names: &[&str]) -> RingRef {
    Ring::with_names(PrimeField::new(32003).unwrap(), names)
}

fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| Polynomial::parse(r, g).unwrap()).collect()).unwrap()
}

fn p(r: &RingRef, s: &str) -> Polynomial {
    Polynomial::parse(r, s).unwrap()
}

const B: Budget = Budget::UNLIMITED;

#[test]
fn twisted_cubic_under_lex() {
    let r = Ring::new(PrimeField::new(32003).unwrap(), vec!["x".into(), "y".into(), "z".into()], MonomialOrder::lex());
    let i = ideal(&r, &["x^2 - y", "x^3 - z"]);
    let gb = i.groebner(B).unwrap();
    assert!(gb.polys().contains(&p(&r, "y^3 - z^2")));
    assert!(satisfies_buchberger_criterion(&gb).unwrap());
    assert!(is_reduced(&gb));
}

#[test]
fn trivial_bases() {
    let r = ring(&["x", "y"]);
    let gb = ideal(&r, &["x", "y"]).groebner(B).unwrap();
    assert_eq!(gb.len(), 2);
    let f = p(&r, "3*x^2*y - y^3");
    let gb = Ideal::new(&r, vec![f.clone()]).unwrap().groebner(B).unwrap();
    assert_eq!(gb.polys(), &[f.monic()]);
    assert_eq!(gb.polys()[0].leading_coeff().unwrap().value(), 1);
}

#[test]
fn normal_forms() {
    let r = ring(&["x", "y"]);
    let gb = ideal(&r, &["x"]).groebner(B).unwrap();
    assert!(normal_form(&p(&r, "x^2"), &gb).unwrap().is_zero());
    assert_eq!(normal_form(&p(&r, "y"), &gb).unwrap(), p(&r, "y"));
    let other = ring(&["x", "y", "z"]);
    assert!(normal_form(&p(&other, "z"), &gb).is_err());
}

#[test]
fn equality() {
    let r = ring(&["x", "y"]);
    assert!(ideal_equal(&ideal(&r, &["x", "y"]), &ideal(&r, &["x + y", "y"]), B).unwrap());
    assert!(!ideal_equal(&ideal(&r, &["x^2"]), &ideal(&r, &["x"]), B).unwrap());
}

#[test]
fn conic_implicitization() {
    let s = ring(&["x", "y"]);
    let t = ring(&["T1", "T2", "T3"]);
    let f: Vec<Polynomial> = ["x^2", "x*y", "y^2"].iter().map(|g| p(&s, g)).collect();
    let k = ring_map_kernel(&f, &t, B).unwrap();
    assert!(ideal_equal(&k, &ideal(&t, &["T1*T3 - T2^2"]), B).unwrap());

    let f: Vec<Polynomial> = ["x^2", "y^2", "x*y"].iter().map(|g| p(&s, g)).collect();
    let k = ring_map_kernel(&f, &t, B).unwrap();
    assert!(ideal_equal(&k, &ideal(&t, &["T1*T2 - T3^2"]), B).unwrap());

    let t2 = ring(&["T1", "T2"]);
    let k = ring_map_kernel(&[p(&s, "x"), p(&s, "y")], &t2, B).unwrap();
    assert!(k.groebner(B).unwrap().is_empty());

    assert!(ring_map_kernel(&[p(&s, "x"), p(&s, "y^2")], &t2, B).is_err());
}

#[test]
fn elimination_directly() {
    let mixed = ring(&["x", "y", "T1", "T2", "T3"]);
    let t = ring(&["T1", "T2", "T3"]);
    let e = eliminate(&ideal(&mixed, &["T1 - x^2", "T2 - x*y", "T3 - y^2"]), &t, B).unwrap();
    assert!(ideal_equal(&e, &ideal(&t, &["T1*T3 - T2^2"]), B).unwrap());
    let m2 = ring(&["x", "T1"]);
    let t1 = ring(&["T1"]);
    assert!(eliminate(&ideal(&m2, &["x"]), &t1, B).unwrap().is_zero());
}

#[test]
fn quotients() {
    let r = ring(&["x", "y"]);
    let q = ideal_quotient(&ideal(&r, &["x^2"]), &ideal(&r, &["x"]), B).unwrap();
    assert!(ideal_equal(&q, &ideal(&r, &["x"]), B).unwrap());
    let q = ideal_quotient(&ideal(&r, &["x*y"]), &ideal(&r, &["x"]), B).unwrap();
    assert!(ideal_equal(&q, &ideal(&r, &["y"]), B).unwrap());
    let q = ideal_quotient(&ideal(&r, &["x^2*y", "x*y^2"]), &ideal(&r, &["x", "y"]), B).unwrap();
    assert!(ideal_equal(&q, &ideal(&r, &["x*y"]), B).unwrap());
    // general path: a non-variable divisor and an inhomogeneous ideal
    let q = ideal_quotient(&ideal(&r, &["x^2 - x*y"]), &ideal(&r, &["x - y"]), B).unwrap();
    assert!(ideal_equal(&q, &ideal(&r, &["x"]), B).unwrap());
    let q = ideal_quotient(&ideal(&r, &["x^2 + 1"]), &ideal(&r, &["x"]), B).unwrap();
    assert!(ideal_equal(&q, &ideal(&r, &["x^2 + 1"]), B).unwrap());
}

#[test]
fn saturations() {
    let r = ring(&["x", "y"]);
    let s = saturation(&ideal(&r, &["x^2*y"]), &ideal(&r, &["y"]), B).unwrap();
    assert!(ideal_equal(&s, &ideal(&r, &["x^2"]), B).unwrap());
    let again = saturation(&s, &ideal(&r, &["y"]), B).unwrap();
    assert!(ideal_equal(&s, &again, B).unwrap());
    let m = Ideal::maximal(&r);
    let s = saturation(&ideal(&r, &["x^3", "x^2*y", "x*y^3"]), &m, B).unwrap();
    assert!(ideal_equal(&s, &ideal(&r, &["x"]), B).unwrap());
}

#[test]
fn radicals() {
    let r = ring(&["x", "y"]);
    assert!(radical_membership(&p(&r, "x"), &ideal(&r, &["x^2"]), B).unwrap());
    assert!(!radical_membership(&p(&r, "y"), &ideal(&r, &["x"]), B).unwrap());
    assert!(radical_membership(&p(&r, "x + y"), &ideal(&r, &["x^3", "y^2"]), B).unwrap());
}

#[test]
fn powers_and_truncations() {
    let r = ring(&["x", "y"]);
    let sq = ideal_power(&ideal(&r, &["x", "y"]), 2).unwrap();
    assert!(ideal_equal(&sq, &ideal(&r, &["x^2", "x*y", "y^2"]), B).unwrap());
    let a = ideal(&r, &["x^2", "x*y", "y^2"]);
    assert!(ideal_equal(&ideal_power(&a, 1).unwrap(), &a, B).unwrap());
    let m4 = ideal_power(&a, 2).unwrap();
    assert_eq!(m4.gens().len(), 5);
    assert!(ideal_equal(&m4, &ideal(&r, &["x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4"]), B).unwrap());

    let t = ring(&["T1", "T2"]);
    let tr = truncation(&ideal(&t, &["T1"]), 2).unwrap();
    assert!(ideal_equal(&tr, &ideal(&t, &["T1^2", "T1*T2"]), B).unwrap());
    let t3 = ring(&["T1", "T2", "T3"]);
    let c = ideal(&t3, &["T1*T3 - T2^2"]);
    assert!(ideal_equal(&truncation(&c, 2).unwrap(), &c, B).unwrap());
    assert!(truncation(&ideal(&t, &["T1 + 1"]), 2).is_err());
}

#[test]
fn truncation_is_intersection_with_power_of_maximal() {
    let r = ring(&["x", "y", "z"]);
    let a = ideal(&r, &["x*y", "y^2 - x*z", "z^3"]);
    for n in 1..=4 {
        let lhs = truncation(&a, n).unwrap();
        let mn = ideal_power(&Ideal::maximal(&r), n).unwrap();
        let rhs = intersect(&a, &mn, B).unwrap();
        assert!(ideal_equal(&lhs, &rhs, B).unwrap(), "n = {n}");
    }
}

fn check_syzygies(f: &[Polynomial], m: &PolyMatrix) {
    for col in VectorPolynomial::columns_of(m) {
        assert!(col.dot(f).unwrap().is_zero());
    }
}

#[test]
fn syzygy_examples() {
    let r = ring(&["x", "y"]);
    let f = vec![p(&r, "x"), p(&r, "y")];
    let m = syzygies(&f, B).unwrap();
    assert_eq!((m.rows(), m.cols()), (2, 1));
    check_syzygies(&f, &m);

    let f: Vec<Polynomial> = ["x^2", "x*y", "y^2"].iter().map(|g| p(&r, g)).collect();
    let m = syzygies(&f, B).unwrap();
    assert_eq!(m.cols(), 2);
    assert!(m.all_linear());
    check_syzygies(&f, &m);
    assert_eq!(m.get(0, 0), &p(&r, "y"));
    assert_eq!(m.get(1, 0), &p(&r, "-x"));
    assert!(m.get(2, 0).is_zero());
    assert_eq!(m.get(1, 1), &p(&r, "y"));
    assert_eq!(m.get(2, 1), &p(&r, "-x"));

    let f = vec![p(&r, "x^2"), p(&r, "y^2")];
    let m = syzygies(&f, B).unwrap();
    assert_eq!(m.cols(), 1);
    assert!(!m.all_linear());
    check_syzygies(&f, &m);
    assert_eq!(syzygy_degrees(&m, 2), vec![4]);
}

#[test]
fn syzygies_of_cube_of_maximal_ideal() {
    let r = ring(&["x", "y", "z"]);
    let f = ideal_power(&Ideal::maximal(&r), 3).unwrap().gens().to_vec();
    assert_eq!(f.len(), 10);
    let m = syzygies(&f, B).unwrap();
    assert_eq!(m.cols(), 15);
    assert!(m.all_linear());
    check_syzygies(&f, &m);
}

#[test]
fn syzygies_reject_bad_input() {
    let r = ring(&["x", "y"]);
    assert!(syzygies(&[p(&r, "x"), p(&r, "y^2")], B).is_err());
    assert!(syzygies(&[p(&r, "x"), p(&r, "2*x")], B).is_err());
    assert!(syzygies(&[p(&r, "x + 1")], B).is_err());
}

#[test]
fn budget_is_enforced() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x^3 - y*z^2", "y^3 - x*z^2", "z^3 - x^2*y"]);
    assert!(matches!(i.groebner(Budget::new(3)), Err(jacdual::Error::BudgetExceeded { .. })));
    assert!(i.groebner(B).is_ok());
}

#[test]
fn linear_basis_and_minimal_generators() {
    let r = ring(&["x", "y"]);
    let gens = vec![p(&r, "x^2"), p(&r, "x^2 + x*y"), p(&r, "x*y"), p(&r, "x^3"), p(&r, "y^3")];
    let i = Ideal::new(&r, gens).unwrap();
    let mg = minimal_generators(&i).unwrap();
    assert_eq!(mg.len(), 3);
    assert_eq!(homogeneous_linear_basis(&i.gens()[..3]).len(), 2);
}
