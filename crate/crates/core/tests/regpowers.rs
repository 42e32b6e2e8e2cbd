use jacdual::gbasis::{ideal_equal, ideal_power, ring_map_kernel, Budget, Ideal};
use jacdual::homology::is_linearly_presented;
use jacdual::jacdual::{subsets, target_ring};
use jacdual::polycore::{monomials_of_degree, Polynomial, PrimeField, Ring, RingRef};
use jacdual::regpowers::*;
use jacdual::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const B: Budget = Budget::UNLIMITED;

fn ring(names: &[&str]) -> RingRef {
    Ring::with_names(PrimeField::new(32003).unwrap(), names)
}

fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| Polynomial::parse(r, g).unwrap()).collect()).unwrap()
}

fn image(i: &Ideal) -> Ideal {
    let b = target_ring(i.ring(), i.gens().len());
    ring_map_kernel(i.gens(), &b, B).unwrap()
}

#[test]
fn regularity_of_powers() {
    let s = ring(&["x", "y", "z"]);
    let m = Ideal::maximal(&s);
    for t in 1..=3 {
        assert_eq!(reg_power(&m, t, B).unwrap(), t as i64);
    }
    let s2 = ring(&["x", "y"]);
    let m2 = ideal(&s2, &["x^2", "x*y", "y^2"]);
    for t in 1..=4 {
        assert_eq!(reg_power(&m2, t, B).unwrap(), 2 * t as i64);
    }
    assert_eq!(reg_power(&ideal(&s2, &["x^2", "y^2"]), 1, B).unwrap(), 3);
    assert!(matches!(reg_power(&m, 0, B), Err(Error::Input(_))));
}

#[test]
fn stabilization_index() {
    for (names, d) in [(&["x", "y"][..], 2), (&["x", "y", "z"][..], 2), (&["x", "y"][..], 3)] {
        let s = ring(names);
        assert_eq!(stab_index(&ideal_power(&Ideal::maximal(&s), d).unwrap(), 3, B).unwrap(), Some(1));
    }
    let s = ring(&["x", "y"]);
    assert_eq!(stab_index(&ideal(&s, &["x^2", "y^2"]), 3, B).unwrap(), None);
    assert!(matches!(stab_index(&ideal(&s, &["x^2", "x*y"]), 3, B), Err(Error::Input(_))));
    assert!(matches!(stab_index(&ideal(&s, &["x^2", "y^3"]), 3, B), Err(Error::Input(_))));
    let s3 = ring(&["x", "y", "z"]);
    assert_eq!(stab_index(&ideal(&s3, &["x^2", "y^2", "z^2"]), 2, B).unwrap(), None);
}

#[test]
fn profile_invariants() {
    let s = ring(&["x", "y", "z"]);
    let i = ideal(&s, &["x^2", "y^2", "z^2", "x*y", "y*z"]);
    let p = power_profile(&i, 3, B).unwrap();
    assert_eq!(p.d, 2);
    assert!(p.lower_bound_holds());
    assert!(p.tail_is_monotone());
    let by_hilbert = p.stab;
    let by_reg = p.first_linear_power();
    assert_eq!(by_hilbert, by_reg);
}

#[test]
fn ehu_on_powers_of_max() {
    let s = ring(&["x", "y", "z"]);
    let c = check_ehu(&ideal_power(&Ideal::maximal(&s), 2).unwrap(), B).unwrap();
    assert!(c.holds && c.hilbert_agrees && c.proved_case);
    assert_eq!((c.regularity, c.expected), (4, 4));
}

#[test]
fn ehu_on_monomial_search_bucket() {
    let s = ring(&["x", "y", "z"]);
    let mut found = 0;
    for d in [2u32, 3] {
        let mons = monomials_of_degree(3, d);
        let pure: Vec<_> = mons.iter().filter(|m| m.exps().iter().filter(|&&e| e > 0).count() == 1).cloned().collect();
        let mixed: Vec<_> = mons.iter().filter(|m| !pure.contains(m)).cloned().collect();
        let extra = mixed.len();
        for k in 0..=extra {
            for sub in subsets(mixed.len(), k) {
                let gens: Vec<Polynomial> = pure.iter().chain(sub.iter().map(|&i| &mixed[i])).map(|m| Polynomial::term(&s, s.field().elem(1), m.clone())).collect();
                let i = Ideal::new(&s, gens).unwrap();
                if !is_linearly_presented(&i, B).unwrap() {
                    continue;
                }
                found += 1;
                let c = check_ehu(&i, B).unwrap();
                assert!(c.proved_case);
                assert!(c.holds && c.hilbert_agrees, "{:?}", i.gens());
                assert!(stab_index(&i, 3, B).unwrap().unwrap() <= 2);
            }
        }
    }
    assert!(found > 2, "{found}");
}

#[test]
fn image_formula_examples() {
    let s = ring(&["x", "y"]);
    let conic = ideal(&s, &["x^2", "x*y", "y^2"]);
    let c = check_prop_reg_w(&conic, &image(&conic), 2, B).unwrap();
    assert_eq!((c.reg_iw, c.stab, c.predicted, c.formula_holds), (2, Some(1), Some(2), Some(true)));
    assert!(c.dimension_is_n_minus_1);
    assert_eq!((c.multiplicity, c.d_pow_n_minus_1, c.d_pow_r_minus_1), (2, 2, 4));

    let cubic = ideal(&s, &["x^3", "x^2*y", "x*y^2", "y^3"]);
    let c = check_prop_reg_w(&cubic, &image(&cubic), 2, B).unwrap();
    assert_eq!((c.reg_iw, c.predicted, c.multiplicity), (2, Some(2), 3));

    let s3 = ring(&["x", "y", "z"]);
    let ver = ideal_power(&Ideal::maximal(&s3), 2).unwrap();
    let c = check_prop_reg_w(&ver, &image(&ver), 3, B).unwrap();
    assert_eq!((c.reg_iw, c.predicted, c.formula_holds), (2, Some(2), Some(true)));
    assert!(c.dimension_is_n_minus_1);
    assert_eq!((c.multiplicity, c.d_pow_n_minus_1, c.d_pow_r_minus_1), (4, 4, 32));

    let cubic3 = ideal_power(&Ideal::maximal(&s3), 3).unwrap();
    let c = check_prop_reg_w(&cubic3, &image(&cubic3), 3, B).unwrap();
    assert_eq!((c.reg_iw, c.predicted, c.predicted_ideal_convention), (3, Some(2), Some(3)));
    assert_eq!(c.formula_holds, Some(false));
    assert_eq!(c.multiplicity, 9);
    for (a, &h) in c.hilbert.window.iter().enumerate() {
        assert_eq!(h, ((3 * a + 2) * (3 * a + 1) / 2) as u64);
    }
}

#[test]
fn hilbert_burch_minors_are_powers_of_max() {
    let s = ring(&["x", "y"]);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..20 {
        let r = 3 + k % 3;
        let (m, i) = random_hilbert_burch(&s, r, &mut rng, B).unwrap();
        assert_eq!((m.rows(), m.cols()), (r, r - 1));
        let target = ideal_power(&Ideal::maximal(&s), r as u32 - 1).unwrap();
        assert!(ideal_equal(&i, &target, B).unwrap());
        let c = check_ehu(&i, B).unwrap();
        assert!(c.holds && c.proved_case);
    }
}
