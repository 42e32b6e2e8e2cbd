//! Acceptance criteria A1-A9. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::time::{Duration, Instant};

use jacdual::gbasis::{
    ideal_equal, ideal_power, intersect, ring_map_kernel, satisfies_buchberger_criterion, saturation, truncation, Budget,
    Ideal,
};
use jacdual::jacdual::{build_jacobian_dual, maximal_minors, target_ring};
use jacdual::oracle::{oracle_ideal_equal_upto, DEFAULT_COLUMN_CAP};
use jacdual::polycore::{linalg::rank, FieldElem, Polynomial};
use jacdual::regpowers::{check_ehu, reg_power, stab_index};
use jacdual_cli::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const A1_LIMIT: Duration = Duration::from_secs(30);
const A2_LIMIT: Duration = Duration::from_secs(5);
const A3_LIMIT: Duration = Duration::from_secs(120);
const A5_LIMIT: Duration = Duration::from_secs(180);
const TOTAL_LIMIT: Duration = Duration::from_secs(600);
const A4_ORACLE_DEGREE: u32 = 6;
const A9_BASIS_CHANGES: usize = 5;

const CONIC: &str = "char 32003; vars x,y; gens x^2, x*y, y^2;";
const VERONESE: &str = "char 32003; vars x,y,z; gens x^2, x*y, x*z, y^2, y*z, z^2;";
const TWISTED_CUBIC: &str = "char 32003; vars x,y; gens x^3, x^2*y, x*y^2, y^3;";

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn report(src: &str, label: &str) -> Result<VerificationReport, String> {
    let mut d = parse_ideal(src).map_err(err)?;
    d.label = label.into();
    run_instance(&d, &RunConfig::default()).map_err(err)
}

fn within(t0: Instant, limit: Duration) -> Result<Duration, String> {
    let el = t0.elapsed();
    ensure(el < limit, format!("took {el:.2?}, limit {limit:?}"))?;
    Ok(el)
}

fn a1() -> Outcome {
    let t0 = Instant::now();
    let mut matrices = 0;
    let mut identities = 0;
    for p in [32003, 2] {
        for n in 2..=5 {
            let s = run_lemmas(&LemmaConfig { n, trials: 50, seed: 7, characteristic: p }).map_err(err)?;
            ensure(s.all_hold(), format!("K={n} char {p}: {} failures", s.failures.len()))?;
            matrices += s.adjugate_passed;
            identities += s.adjugate_identities;
        }
    }
    ensure(matrices == 400, format!("{matrices} matrices passed, expected 400"))?;
    let el = within(t0, A1_LIMIT)?;
    Ok(format!("{matrices}/400 matrices, {identities} entrywise identities, {el:.2?}"))
}

fn a2() -> Outcome {
    let t0 = Instant::now();
    let d = parse_ideal(CONIC).map_err(err)?;
    let ideal = d.to_ideal(None, OrderChoice::Grevlex).map_err(err)?;
    let b = target_ring(ideal.ring(), 3);
    let jd = build_jacobian_dual(&ideal, &b, Budget::UNLIMITED).map_err(err)?;
    let minors = maximal_minors(&jd).map_err(err)?;
    let expected = Ideal::new(&b, vec![Polynomial::parse(&b, "T1*T3 - T2^2").map_err(err)?]).map_err(err)?;
    let gm = minors.ideal.groebner(Budget::UNLIMITED).map_err(err)?;
    let ge = expected.groebner(Budget::UNLIMITED).map_err(err)?;
    ensure(gm.polys() == ge.polys(), format!("reduced basis {:?}", gm.polys().iter().map(|p| p.to_string()).collect::<Vec<_>>()))?;
    let rep = report(CONIC, "conic")?;
    for (name, c) in [
        ("theorem_2_8", &rep.theorems.theorem_2_8),
        ("lemma_2_3", &rep.theorems.lemma_2_3),
        ("conj_2_9", &rep.conjectures.conj_2_9),
        ("conj_2_10", &rep.conjectures.conj_2_10),
    ] {
        ensure(c.status == Status::Holds, format!("{name}: {:?}", c.status))?;
    }
    let m = &rep.conjectures.multiplicity;
    ensure(m.e == Some(2) && m.d_pow_n_minus_1 == Some(2), format!("e(W) = {:?}", m.e))?;
    let el = within(t0, A2_LIMIT)?;
    Ok(format!("I_2(Θ) = (T1*T3 - T2^2), e(W) = 2, {el:.2?}"))
}

fn a3() -> Outcome {
    let t0 = Instant::now();
    let rep = report(VERONESE, "veronese")?;
    ensure(rep.meta.big_n == Some(8), format!("N = {:?}", rep.meta.big_n))?;
    let d = parse_ideal(VERONESE).map_err(err)?;
    let ideal = d.to_ideal(None, OrderChoice::Grevlex).map_err(err)?;
    let b = target_ring(ideal.ring(), 6);
    let jd = build_jacobian_dual(&ideal, &b, Budget::UNLIMITED).map_err(err)?;
    let minors = maximal_minors(&jd).map_err(err)?;
    ensure(minors.evaluated == 56, format!("{} minors", minors.evaluated))?;
    ensure(minors.ideal.generator_degrees().iter().all(|&g| g == 3), "minors not in degree 3")?;
    ensure(rep.theorems.theorem_2_8.status == Status::Holds, "theorem_2_8")?;
    ensure(rep.theorems.lemma_2_3.status == Status::Holds, "lemma_2_3")?;
    let lemma_2_4 = &rep.theorems.lemma_2_4;
    ensure(lemma_2_4.status == Status::Holds, "lemma_2_4")?;
    let ranks = lemma_2_4.certificate["ranks"].as_array().cloned().unwrap_or_default();
    ensure(ranks.len() == 10 && ranks.iter().all(|r| r == 2), format!("ranks {ranks:?}"))?;
    let el = within(t0, A3_LIMIT)?;
    Ok(format!(
        "N = 8, 56 minors ({} nonzero, {} independent) in degree 3, rank 2 at 10 points, {el:.2?}",
        minors.nonzero,
        minors.ideal.gens().len()
    ))
}

fn a4() -> Outcome {
    let rep = report(VERONESE, "veronese")?;
    ensure(rep.conjectures.conj_2_9.status == Status::Holds, "conj_2_9")?;
    ensure(rep.conjectures.conj_2_10.status == Status::Holds, "conj_2_10")?;
    let d = parse_ideal(VERONESE).map_err(err)?;
    let ideal = d.to_ideal(None, OrderChoice::Grevlex).map_err(err)?;
    let b = target_ring(ideal.ring(), 6);
    let jd = build_jacobian_dual(&ideal, &b, Budget::UNLIMITED).map_err(err)?;
    let minors = maximal_minors(&jd).map_err(err)?;
    let iw = ring_map_kernel(ideal.gens(), &b, Budget::UNLIMITED).map_err(err)?;
    let trunc = truncation(&iw, 3).map_err(err)?;
    let eq = oracle_ideal_equal_upto(&minors.ideal, &trunc, A4_ORACLE_DEGREE, DEFAULT_COLUMN_CAP).map_err(err)?;
    ensure(eq == Some(true), format!("oracle comparison through degree {A4_ORACLE_DEGREE}: {eq:?}"))?;
    Ok(format!("I_3(Θ) = I(W)_{{>=3}}, reg I_3(Θ) = 3, oracle equal through degree {A4_ORACLE_DEGREE}"))
}

fn a5(corpus: &CorpusRun) -> Outcome {
    let t0 = Instant::now();
    let mut checked = 0;
    for entry in builtin_corpus() {
        let ideal = entry.desc.to_ideal(None, OrderChoice::Grevlex).map_err(err)?;
        let n = entry.n as u32;
        let c = check_ehu(&ideal, Budget::UNLIMITED).map_err(err)?;
        let label = &entry.desc.label;
        ensure(c.proved_case, format!("{label}: not a proved case"))?;
        ensure(c.holds && c.expected == ((n - 1) * entry.d) as i64, format!("{label}: reg {} against {}", c.regularity, c.expected))?;
        let stab = stab_index(&ideal, n, Budget::UNLIMITED).map_err(err)?;
        ensure(stab.is_some_and(|s| s < n), format!("{label}: Stab = {stab:?}"))?;
        checked += 1;
    }
    for rep in &corpus.reports {
        ensure(rep.conjectures.ehu.status == Status::Holds, format!("{}: ehu {:?}", rep.label, rep.conjectures.ehu.status))?;
    }
    let d = parse_ideal(VERONESE).map_err(err)?;
    let ideal = d.to_ideal(None, OrderChoice::Grevlex).map_err(err)?;
    let r2 = reg_power(&ideal, 2, Budget::UNLIMITED).map_err(err)?;
    ensure(r2 == 4, format!("reg(I^2) = {r2} for n=3, m^2"))?;
    let el = within(t0, A5_LIMIT)?;
    Ok(format!("{checked} instances, reg(I^2) = 4 on n=3 m^2, {el:.2?}"))
}

fn a6() -> Outcome {
    let mut parts = Vec::new();
    for (src, label) in [(CONIC, "conic"), (VERONESE, "veronese"), (TWISTED_CUBIC, "twisted-cubic")] {
        let rep = report(src, label)?;
        let p = &rep.conjectures.prop_3_7_formula;
        ensure(p.status == Status::Holds, format!("{label}: {:?} ({})", p.status, p.notes))?;
        ensure(p.certificate["reg_iw"] == 2 && p.certificate["predicted"] == 2, format!("{label}: {}", p.certificate))?;
        let m = &rep.conjectures.multiplicity;
        ensure(m.matches.get("d_pow_n_minus_1") == Some(&true), format!("{label}: e(W) = {:?}", m.e))?;
        if label == "conic" {
            ensure(
                m.matches.get("d_pow_r_minus_1") == Some(&false) && m.d_pow_r_minus_1 == Some(4) && m.e == Some(2),
                "d^(r-1) not flagged on the conic",
            )?;
        }
        parts.push(format!("{label} e={}", m.e.unwrap_or(0)));
    }
    Ok(format!("reg I(W) = 2 on all three; {}; d^(r-1) = 4 != 2 flagged on the conic", parts.join(", ")))
}

fn a7(corpus: &CorpusRun) -> Outcome {
    let mut degrees = 0;
    let mut samples = 0;
    for rep in &corpus.reports {
        for (name, c) in [("hilbert", &rep.oracle.hilbert), ("membership", &rep.oracle.membership)] {
            ensure(c.status == Status::Holds, format!("{} oracle.{name}: {:?} ({})", rep.label, c.status, c.notes))?;
        }
        degrees += rep.oracle.hilbert.certificate["compared"].as_u64().unwrap_or(0);
        if let Some(obj) = rep.oracle.membership.certificate.as_object() {
            samples += obj.values().map(|v| v["agreed"].as_u64().unwrap_or(0)).sum::<u64>();
        }
    }
    Ok(format!("{} instances, {degrees} Hilbert values, {samples} membership samples, 0 disagreements", corpus.reports.len()))
}

fn a8() -> Outcome {
    let entries = jacdual_cli::corpus::hilbert_burch_entries();
    ensure(entries.len() == 20, format!("{} instances", entries.len()))?;
    for e in &entries {
        ensure((3..=5).contains(&e.r), format!("{}: r = {}", e.desc.label, e.r))?;
        let ideal = e.desc.to_ideal(None, OrderChoice::Grevlex).map_err(err)?;
        let target = ideal_power(&Ideal::maximal(ideal.ring()), (e.r - 1) as u32).map_err(err)?;
        ensure(ideal_equal(&ideal, &target, Budget::UNLIMITED).map_err(err)?, format!("{}: not m^(r-1)", e.desc.label))?;
        let c = check_ehu(&ideal, Budget::UNLIMITED).map_err(err)?;
        ensure(c.holds, format!("{}: ehu", e.desc.label))?;
    }
    Ok("20 minor ideals equal m^(r-1), EHU holds on all".into())
}

fn random_invertible(p: u32, n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<FieldElem>> {
    let field = jacdual::polycore::PrimeField::new(p as u64).expect("prime");
    loop {
        let g: Vec<Vec<FieldElem>> =
            (0..n).map(|_| (0..n).map(|_| field.from_residue(rng.gen_range(0..p))).collect()).collect();
        if rank(field, &g, n) == n {
            return g;
        }
    }
}

fn a9() -> Outcome {
    let budget = Budget::UNLIMITED;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let corpus = builtin_corpus();
    for e in &corpus {
        let label = &e.desc.label;
        let ideal = e.desc.to_ideal(None, OrderChoice::Grevlex).map_err(err)?;
        let ring = ideal.ring().clone();
        let b = target_ring(&ring, e.r);
        let jd = build_jacobian_dual(&ideal, &b, budget).map_err(err)?;
        let minors = maximal_minors(&jd).map_err(err)?;
        let iw = ring_map_kernel(ideal.gens(), &b, budget).map_err(err)?;
        for (name, id) in [("I", &ideal), ("I(W)", &iw), ("I_n(Θ)", &minors.ideal)] {
            let gb = id.groebner(budget).map_err(err)?;
            ensure(satisfies_buchberger_criterion(&gb).map_err(err)?, format!("{label}: Buchberger criterion fails on {name}"))?;
        }
        let mb = Ideal::maximal(&b);
        let n = e.n as u32;
        let tr = truncation(&iw, n).map_err(err)?;
        let cap = intersect(&iw, &ideal_power(&mb, n).map_err(err)?, budget).map_err(err)?;
        ensure(ideal_equal(&tr, &cap, budget).map_err(err)?, format!("{label}: truncation differs from intersection"))?;
        let s1 = saturation(&minors.ideal, &mb, budget).map_err(err)?;
        let s2 = saturation(&s1, &mb, budget).map_err(err)?;
        ensure(ideal_equal(&s1, &s2, budget).map_err(err)?, format!("{label}: saturation not idempotent"))?;
        let p = ring.field().characteristic();
        for k in 0..A9_BASIS_CHANGES {
            let g = random_invertible(p, jd.big_n(), &mut rng);
            let other = maximal_minors(&jd.recombined(&g).map_err(err)?).map_err(err)?;
            ensure(
                ideal_equal(&other.ideal, &minors.ideal, budget).map_err(err)?,
                format!("{label}: minors change under basis change {k}"),
            )?;
        }
    }
    Ok(format!("{} instances, {A9_BASIS_CHANGES} basis changes each", corpus.len()))
}

fn main() {
    let t0 = Instant::now();
    let corpus = corpus_run(&Filter::parse("all").expect("filter"), &RunConfig::default());
    let results: Vec<(&str, Outcome)> = match corpus {
        Ok(corpus) => vec![
            ("A1", a1()),
            ("A2", a2()),
            ("A3", a3()),
            ("A4", a4()),
            ("A5", a5(&corpus)),
            ("A6", a6()),
            ("A7", a7(&corpus)),
            ("A8", a8()),
            ("A9", a9()),
        ],
        Err(e) => vec![("corpus", Err(e.to_string()))],
    };
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(msg) => println!("PASS {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name}: {msg}");
            }
        }
    }
    let total = t0.elapsed();
    if total >= TOTAL_LIMIT {
        failed += 1;
        println!("FAIL total: {total:.2?}, limit {TOTAL_LIMIT:?}");
    } else {
        println!("PASS total: {total:.2?}");
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
