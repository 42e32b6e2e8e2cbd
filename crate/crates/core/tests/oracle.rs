use jacdual::gbasis::{ideal_equal, ideal_power, normal_form, ring_map_kernel, truncation, Budget, Ideal};
use jacdual::homology::{hilbert_function, ideal_regularity};
use jacdual::jacdual::{build_jacobian_dual, maximal_minors, target_ring};
use jacdual::oracle::*;
use jacdual::polycore::{monomial_count, monomials_of_degree, Polynomial, PrimeField, Ring, RingRef};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const B: Budget = Budget::UNLIMITED;
const CAP: u64 = DEFAULT_COLUMN_CAP;

fn ring(names: &[&str]) -> RingRef {
    Ring::with_names(PrimeField::new(32003).unwrap(), names)
}

fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| Polynomial::parse(r, g).unwrap()).collect()).unwrap()
}

fn p(r: &RingRef, s: &str) -> Polynomial {
    Polynomial::parse(r, s).unwrap()
}

#[test]
fn hilbert_examples() {
    let s = ring(&["x", "y"]);
    assert_eq!(oracle_hilbert(&Ideal::maximal(&s), 3, CAP).unwrap(), Some(4));
    let b = ring(&["T1", "T2", "T3"]);
    assert_eq!(oracle_hilbert(&ideal(&b, &["T1*T3 - T2^2"]), 2, CAP).unwrap(), Some(1));
    let s3 = ring(&["x", "y", "z"]);
    let m2 = ideal_power(&Ideal::maximal(&s3), 2).unwrap();
    assert_eq!(oracle_hilbert(&m2, 3, CAP).unwrap(), Some(10));
    assert_eq!(oracle_hilbert_quotient(&m2, 1, CAP).unwrap(), Some(3));
    let mm = MacaulayMatrix::new(&m2, 4, CAP).unwrap().unwrap();
    assert_eq!(mm.cols() as u64, monomial_count(3, 4));
    assert!(mm.rank() <= mm.cols().min(mm.rows()));
    assert_eq!(oracle_hilbert(&m2, 30, 100).unwrap(), None);
}

#[test]
fn membership_examples() {
    let s = ring(&["x", "y"]);
    assert_eq!(oracle_membership(&p(&s, "x^2"), &ideal(&s, &["x"]), CAP).unwrap(), Some(true));
    assert_eq!(oracle_membership(&p(&s, "y^2"), &ideal(&s, &["x^2", "x*y"]), CAP).unwrap(), Some(false));
    assert!(oracle_membership(&p(&s, "x^2 + y"), &ideal(&s, &["x"]), CAP).is_err());

    let s3 = ring(&["x", "y", "z"]);
    let i = ideal_power(&Ideal::maximal(&s3), 2).unwrap();
    let b = target_ring(&s3, 6);
    let jd = build_jacobian_dual(&i, &b, B).unwrap();
    let minors = maximal_minors(&jd).unwrap();
    let iw = ring_map_kernel(i.gens(), &b, B).unwrap();
    for g in minors.ideal.gens() {
        assert_eq!(oracle_membership(g, &iw, CAP).unwrap(), Some(true));
    }
    let trunc = truncation(&iw, 3).unwrap();
    assert_eq!(oracle_ideal_equal_upto(&minors.ideal, &trunc, 6, CAP).unwrap(), Some(true));
}

#[test]
fn equality_examples() {
    let s = ring(&["x", "y"]);
    assert_eq!(oracle_ideal_equal_upto(&ideal(&s, &["x", "y"]), &ideal(&s, &["x + y", "y"]), 4, CAP).unwrap(), Some(true));
    let a = ideal(&s, &["x^2"]);
    let c = ideal(&s, &["x"]);
    assert_eq!(oracle_ideal_equal_upto(&a, &c, 1, CAP).unwrap(), Some(false));
    assert_eq!(oracle_ideal_equal_upto(&a, &c, 0, CAP).unwrap(), Some(true));
    assert_eq!(oracle_ideal_equal_upto(&a, &c, 2, CAP).unwrap(), Some(false));
    let u = ideal(&s, &["x*y"]);
    assert_eq!(oracle_ideal_equal_upto(&a, &u, 3, CAP).unwrap(), Some(false));
}

#[test]
fn conic_implicitization_confirmed() {
    let s = ring(&["x", "y"]);
    let i = ideal(&s, &["x^2", "x*y", "y^2"]);
    let b = target_ring(&s, 3);
    let k = ring_map_kernel(i.gens(), &b, B).unwrap();
    let conic = Ideal::new(&b, vec![p(&b, "T1*T3 - T2^2")]).unwrap();
    assert_eq!(oracle_ideal_equal_upto(&k, &conic, 6, CAP).unwrap(), Some(true));
}

fn random_form<R: Rng>(r: &RingRef, t: u32, rng: &mut R, ideal: &Ideal) -> Polynomial {
    let f = r.field();
    if rng.gen_bool(0.5) {
        let mut acc = Polynomial::zero(r);
        for g in ideal.gens() {
            let dg = g.degree().unwrap();
            if dg > t {
                continue;
            }
            let mons = monomials_of_degree(r.nvars(), t - dg);
            let mu = &mons[rng.gen_range(0..mons.len())];
            acc = acc.checked_add(&g.mul_term(f.elem(rng.gen_range(0..50)), mu)).unwrap();
        }
        acc
    } else {
        Polynomial::from_terms(r, monomials_of_degree(r.nvars(), t).into_iter().map(|m| (f.elem(rng.gen_range(0..3)), m)))
    }
}

#[test]
fn agrees_with_groebner_engine() {
    let s = ring(&["x", "y", "z"]);
    let cases = [
        ideal(&s, &["x^2", "y^2", "z^2", "x*y", "y*z"]),
        ideal(&s, &["x^2 + y*z", "y^2 - x*z", "z^2"]),
        ideal(&s, &["x*y - z^2", "x^2 - y*z"]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in &cases {
        let reg = ideal_regularity(i, B).unwrap() as u32;
        for t in 0..=2 * reg {
            assert_eq!(oracle_hilbert(i, t, CAP).unwrap(), Some(hilbert_function(i, t, B).unwrap()));
        }
        let gb = i.groebner(B).unwrap();
        for _ in 0..100 {
            let t = rng.gen_range(1..=reg + 1);
            let f = random_form(&s, t, &mut rng, i);
            let gb_in = normal_form(&f, &gb).unwrap().is_zero();
            assert_eq!(oracle_membership(&f, i, CAP).unwrap(), Some(gb_in));
        }
        for j in &cases {
            let eq = ideal_equal(i, j, B).unwrap();
            let oeq = oracle_ideal_equal_upto(i, j, 2 * reg, CAP).unwrap().unwrap();
            assert!(!eq || oeq);
            assert!(oeq || !eq);
        }
    }
}

#[test]
fn kernel_dimension_matches_elimination() {
    let s = ring(&["x", "y", "z"]);
    for i in [ideal_power(&Ideal::maximal(&s), 2).unwrap(), ideal(&s, &["x^2", "y^2", "z^2", "x*y", "y*z", "x*z + y^2"])] {
        let b = target_ring(&s, i.gens().len());
        let iw = ring_map_kernel(i.gens(), &b, B).unwrap();
        for t in 0..=4 {
            assert_eq!(oracle_kernel_dimension(i.gens(), t, CAP).unwrap(), Some(hilbert_function(&iw, t, B).unwrap()));
        }
    }
    let s2 = ring(&["x", "y"]);
    let conic = ideal(&s2, &["x^2", "x*y", "y^2"]);
    assert_eq!(oracle_kernel_dimension(conic.gens(), 2, CAP).unwrap(), Some(1));
    assert_eq!(oracle_kernel_dimension(conic.gens(), 3, CAP).unwrap(), Some(3));
    assert_eq!(oracle_kernel_dimension(conic.gens(), 3, 2).unwrap(), None);
}
