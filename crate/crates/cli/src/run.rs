//! The verification battery for one instance.

use std::collections::BTreeMap;
use std::time::Instant;

use jacdual::gbasis::{normal_form, ring_map_kernel, syzygies, truncation, Budget, Ideal};
use jacdual::homology::{free_resolution, hilbert_function, ideal_regularity, regularity, Convention};
use jacdual::jacdual::identities::{clause1_sides, clause3_sides};
use jacdual::jacdual::{
    check_hypotheses, check_radical_eq, check_saturation_eq, check_truncation_conjecture, maximal_minors, subsets,
    target_ring, Border, JacobianDual, Minors, SubmatrixContext, Verdict,
};
use jacdual::oracle::{
    oracle_hilbert, oracle_ideal_equal_in_degree, oracle_kernel_dimension, oracle_membership, DEFAULT_COLUMN_CAP,
};
use jacdual::polycore::{lemma_adj_check, monomials_of_degree, FieldElem, Polynomial, RingRef};
use jacdual::regpowers::{check_ehu, check_prop_reg_w, stab_index, ImageFormulaCheck};
use jacdual::Error;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::desc::{IdealDescription, InputError, OrderChoice};
use crate::report::*;

/// Parts of the battery that can be switched off.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Skip {
    Resolution,
    Oracle,
    Conjectures,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub characteristic: Option<u64>,
    pub order: OrderChoice,
    pub seed: u64,
    /// Largest power examined for the stabilization index; defaults to `n`.
    pub t_max: Option<u32>,
    /// Step limit per Groebner computation.
    pub budget: Option<u64>,
    pub skip: Vec<Skip>,
    /// Row subsets of `Θ` used for the determinantal identities.
    pub trials: usize,
    /// Image points used for the rank check.
    pub points: usize,
    /// Random polynomials per ideal for the membership oracle.
    pub membership_samples: usize,
    pub column_cap: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            characteristic: None,
            order: OrderChoice::Grevlex,
            seed: 0,
            t_max: None,
            budget: None,
            skip: Vec::new(),
            trials: 5,
            points: 10,
            membership_samples: 100,
            column_cap: DEFAULT_COLUMN_CAP,
        }
    }
}

impl RunConfig {
    fn skips(&self, s: Skip) -> bool {
        self.skip.contains(&s)
    }

    fn budget(&self) -> Budget {
        self.budget.map_or(Budget::UNLIMITED, Budget::new)
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(stream))
    }
}

#[derive(Default)]
struct Timer {
    stages: BTreeMap<String, f64>,
}

impl Timer {
    fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let t0 = Instant::now();
        let out = f();
        *self.stages.entry(stage.to_string()).or_default() += t0.elapsed().as_secs_f64();
        out
    }
}

fn engine_failure(e: Error) -> Check {
    match e {
        Error::BudgetExceeded { limit } => Check::budget(format!("step budget of {limit} exceeded")),
        other => Check::new(false, Value::Null, format!("engine error: {other}")),
    }
}

fn guard(f: impl FnOnce() -> jacdual::Result<Check>) -> Check {
    f().unwrap_or_else(engine_failure)
}

fn from_verdict(v: Verdict, mut certificate: Value) -> Check {
    if let Some(w) = &v.witness {
        certificate["witness"] = json!(w.to_string());
    }
    Check::new(v.holds, certificate, v.note)
}

/// A prerequisite that may itself have failed; failures propagate as copies
/// of the failing check.
type Stage<T> = std::result::Result<T, Check>;

fn stage<T>(r: jacdual::Result<T>) -> Stage<T> {
    r.map_err(engine_failure)
}

fn dependent<T>(s: &Stage<T>, f: impl FnOnce(&T) -> Check) -> Check {
    match s {
        Ok(v) => f(v),
        Err(c) => {
            let mut c = c.clone();
            c.notes = format!("prerequisite failed: {}", c.notes);
            c
        }
    }
}

fn skipped_report(label: &str, meta: Meta, hypotheses: HypothesesReport, why: &str, cfg: &RunConfig, timings: BTreeMap<String, f64>) -> VerificationReport {
    let s = || Check::skipped(format!("not applicable: {why}"));
    VerificationReport {
        label: label.to_string(),
        meta,
        hypotheses,
        theorems: Theorems { lemma_2_3: s(), lemma_2_4: s(), lemma_2_6: s(), lemma_2_7: s(), corollary_1: s(), theorem_2_8: s() },
        conjectures: Conjectures {
            conj_2_9: s(),
            conj_2_10: s(),
            ehu: s(),
            prop_3_7_formula: s(),
            multiplicity: empty_multiplicity(format!("not applicable: {why}")),
        },
        oracle: OracleReport { column_cap: cfg.column_cap, hilbert: s(), membership: s(), elimination: s(), conj_2_9_upto: s() },
        budget: BudgetReport { steps: cfg.budget, exceeded: Vec::new() },
        timings,
    }
}

fn empty_multiplicity(notes: String) -> Multiplicity {
    Multiplicity { e: None, d_pow_n_minus_1: None, d_pow_r_minus_1: None, matches: BTreeMap::new(), notes }
}

fn random_nonzero_point<R: Rng>(ring: &RingRef, rng: &mut R) -> Vec<FieldElem> {
    let f = *ring.field();
    let p = f.characteristic() as i64;
    loop {
        let v: Vec<FieldElem> = (0..ring.nvars()).map(|_| f.elem(rng.gen_range(0..p))).collect();
        if v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    }
}

/// Up to `k` distinct `(n-1)`-subsets of the rows of `Θ`, sorted.
fn row_subsets<R: Rng>(big_n: usize, n: usize, k: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let all = subsets(big_n, n - 1);
    if all.len() <= k {
        return all;
    }
    let mut picked: Vec<Vec<usize>> = all.choose_multiple(rng, k).cloned().collect();
    picked.sort();
    picked
}

fn lemma_2_4(jd: &JacobianDual, cfg: &RunConfig) -> Check {
    guard(|| {
        let mut rng = cfg.rng(1);
        let mut points = Vec::new();
        let mut ranks = Vec::new();
        for _ in 0..cfg.points {
            let x0 = random_nonzero_point(jd.source(), &mut rng);
            ranks.push(jd.rank_at_image_point(&x0)?);
            points.push(x0.iter().map(|c| c.value()).collect::<Vec<_>>());
        }
        let n = jd.n();
        let holds = ranks.iter().all(|&k| k + 1 == n);
        Ok(Check::new(
            holds,
            json!({ "points": points, "ranks": ranks, "expected_rank": n - 1 }),
            format!("rank of Θ at {} seeded image points", cfg.points),
        ))
    })
}

fn lemma_2_6(jd: &JacobianDual, rows: &[Vec<usize>]) -> Check {
    guard(|| {
        let n = jd.n();
        let mut count = 0;
        for s in rows {
            let nmat = jd.submatrix(s)?;
            for i in 1..=n {
                count += 1;
                if let Err(m) = lemma_adj_check(&nmat, i)? {
                    return Ok(Check::new(
                        false,
                        json!({ "rows": s, "i": i, "entry": [m.row, m.col], "expected": m.expected.to_string(), "found": m.found.to_string() }),
                        "adjugate identity failed",
                    ));
                }
            }
        }
        Ok(Check::new(true, json!({ "subsets": rows, "identities": count }), format!("{count} adjugate identities on {} row subsets", rows.len())))
    })
}

struct ClauseTally {
    check: Check,
    memberships_2_3_hold: bool,
}

fn lemma_2_7(jd: &JacobianDual, rows: &[Vec<usize>], budget: Budget) -> ClauseTally {
    let mut memberships_2_3_hold = true;
    let check = guard(|| {
        let (n, big_n, r) = (jd.n(), jd.big_n(), jd.r());
        let x: Vec<Polynomial> = (0..n).map(|c| jd.x_in_mixed(c)).collect();
        let tmap: Vec<usize> = (n..n + r).collect();
        let mut counts = [0usize; 4];
        for s in rows {
            let mut ctx = SubmatrixContext::new(jd, s)?;
            let nmat = jd.submatrix(s)?.map_ring(jd.mixed(), &tmap);
            let border = (0..big_n).find(|k| !s.contains(k));
            for i in 1..=n {
                if let Some(k) = border {
                    let v = ctx.clause1(Border::Row(k), i, budget)?;
                    counts[0] += 1;
                    let row: Vec<Polynomial> = (0..n).map(|c| jd.lift_t(jd.theta().get(k, c))).collect();
                    let (lhs, rhs) = clause1_sides(&nmat, &row, &x, i)?;
                    counts[3] += 1;
                    if !v.holds || lhs != rhs {
                        return Ok(clause_failure(1, s, i, None, v));
                    }
                }
                for j in i + 1..=n {
                    let v = ctx.clause2(i, j, budget)?;
                    counts[1] += 1;
                    if !v.holds {
                        memberships_2_3_hold = false;
                        return Ok(clause_failure(2, s, i, Some(j), v));
                    }
                }
                for j in 1..n {
                    let v = ctx.clause3(i, j, budget)?;
                    counts[2] += 1;
                    let (lhs, rhs) = clause3_sides(&nmat, &x, i, j)?;
                    counts[3] += 1;
                    if !v.holds || lhs != rhs {
                        memberships_2_3_hold = false;
                        return Ok(clause_failure(3, s, i, Some(j), v));
                    }
                }
            }
        }
        Ok(Check::new(
            true,
            json!({ "subsets": rows, "clause_1": counts[0], "clause_2": counts[1], "clause_3": counts[2], "cofactor_identities": counts[3] }),
            format!("{} memberships and {} cofactor identities", counts[0] + counts[1] + counts[2], counts[3]),
        ))
    });
    if check.status != Status::Holds {
        memberships_2_3_hold = false;
    }
    ClauseTally { check, memberships_2_3_hold }
}

fn clause_failure(clause: usize, rows: &[usize], i: usize, j: Option<usize>, v: Verdict) -> Check {
    from_verdict(v, json!({ "clause": clause, "rows": rows, "i": i, "j": j }))
}

fn corollary_1(jd: &JacobianDual, rows: &[Vec<usize>], minors: &Minors, clauses_2_3: bool, budget: Budget) -> Check {
    guard(|| {
        let n = jd.n();
        let mut checked = Vec::new();
        for s in rows {
            let ctx = SubmatrixContext::new(jd, s)?;
            let Some(i) = (1..=n).find(|&i| !ctx.delta(i).is_zero()) else { continue };
            let v = ctx.corollary_membership(i, &minors.ideal, budget)?.expect("nonzero Δ_i");
            if !v.holds {
                return Ok(from_verdict(v, json!({ "part": 1, "rows": s, "i": i })));
            }
            checked.push(json!({ "rows": s, "i": i }));
        }
        let notes = if checked.is_empty() { "part (1) vacuous: every Δ_i vanished" } else { "part (1) checked by normal forms" };
        Ok(Check::new(
            clauses_2_3,
            json!({ "part_1": checked, "part_2": "verified via Lemma 2.7(2)(3)" }),
            format!("{notes}; part (2) verified via Lemma 2.7(2)(3)"),
        ))
    })
}

/// A form sampled half the time from the ideal and otherwise at random, in a degree window.
fn sample<R: Rng>(ideal: &Ideal, degrees: std::ops::RangeInclusive<u32>, rng: &mut R) -> Polynomial {
    let ring = ideal.ring();
    let f = *ring.field();
    let p = f.characteristic() as i64;
    let t = rng.gen_range(degrees);
    if rng.gen_bool(0.5) {
        let mut acc = Polynomial::zero(ring);
        for g in ideal.gens() {
            let dg = g.degree().unwrap_or(0);
            if dg > t || rng.gen_bool(0.5) {
                continue;
            }
            let mons = monomials_of_degree(ring.nvars(), t - dg);
            let mu = &mons[rng.gen_range(0..mons.len())];
            acc = &acc + &g.mul_term(f.elem(rng.gen_range(1..p)), mu);
        }
        acc
    } else {
        let mons = monomials_of_degree(ring.nvars(), t);
        let mut terms = Vec::new();
        for m in mons {
            if rng.gen_bool(0.3) {
                terms.push((f.elem(rng.gen_range(0..p)), m));
            }
        }
        Polynomial::from_terms(ring, terms)
    }
}

struct HilbertTally {
    compared: usize,
    capped: usize,
    mismatch: Option<Value>,
}

fn compare_hilbert(name: &str, ideal: &Ideal, top: u32, cfg: &RunConfig, tally: &mut HilbertTally) -> jacdual::Result<Value> {
    let mut reached = None;
    for t in 0..=top {
        match oracle_hilbert(ideal, t, cfg.column_cap)? {
            None => tally.capped += 1,
            Some(o) => {
                let e = hilbert_function(ideal, t, cfg.budget())?;
                tally.compared += 1;
                reached = Some(t);
                if o != e && tally.mismatch.is_none() {
                    tally.mismatch = Some(json!({ "ideal": name, "t": t, "oracle": o, "engine": e }));
                }
            }
        }
    }
    Ok(json!({ "bound": top, "verified_through": reached }))
}

struct Instance {
    ideal: Ideal,
    jd: JacobianDual,
    n: usize,
    d: u32,
}

/// Runs the full battery. Errors are input errors only; engine failures and
/// exhausted budgets are recorded per check.
pub fn run_instance(desc: &IdealDescription, cfg: &RunConfig) -> Result<VerificationReport, InputError> {
    let total = Instant::now();
    let ideal = desc.to_ideal(cfg.characteristic, cfg.order)?;
    let budget = cfg.budget();
    let ring = ideal.ring().clone();
    let (n, r) = (ring.nvars(), ideal.gens().len());
    let mut timer = Timer::default();
    let mut meta = Meta {
        n,
        r,
        d: None,
        big_n: None,
        char: ring.field().characteristic() as u64,
        seed: cfg.seed,
        version: env!("CARGO_PKG_VERSION").to_string(),
    };

    let hyp = timer.time("hypotheses", || check_hypotheses(&ideal, budget));
    let h = match hyp {
        Ok(h) => h,
        Err(Error::Input(m)) => return Err(InputError::Invalid(m)),
        Err(e) => {
            let hr = HypothesesReport {
                homogeneous: ideal.is_homogeneous(),
                minimal: false,
                equigenerated: false,
                degree: None,
                m_primary: false,
                linearly_presented: false,
                not_applicable: None,
            };
            let mut rep = skipped_report(&desc.label, meta, hr, "hypotheses undecided", cfg, timer.stages);
            let c = engine_failure(e).hard(true);
            rep.theorems = Theorems {
                lemma_2_3: c.clone(),
                lemma_2_4: c.clone(),
                lemma_2_6: c.clone(),
                lemma_2_7: c.clone(),
                corollary_1: c.clone(),
                theorem_2_8: c,
            };
            rep.budget.exceeded = rep.checks().iter().filter(|(_, c)| c.status == Status::BudgetExceeded).map(|(k, _)| k.to_string()).collect();
            return Ok(rep);
        }
    };
    meta.d = h.degree;
    let mut not_applicable = h.first_failure().map(str::to_string);
    if not_applicable.is_none() && n < 2 {
        not_applicable = Some("fewer than two variables".into());
    }
    let hr = HypothesesReport {
        homogeneous: h.homogeneous,
        minimal: h.minimal,
        equigenerated: h.degree.is_some(),
        degree: h.degree,
        m_primary: h.m_primary,
        linearly_presented: h.linearly_presented,
        not_applicable: not_applicable.clone(),
    };
    if let Some(why) = &not_applicable {
        timer.stages.insert("total".into(), total.elapsed().as_secs_f64());
        return Ok(skipped_report(&desc.label, meta, hr, why, cfg, timer.stages));
    }
    let d = h.degree.unwrap();

    let b = target_ring(&ring, r);
    let jd = timer.time("jacobian_dual", || {
        syzygies(ideal.gens(), budget).and_then(|m| JacobianDual::from_presentation(ideal.gens(), m, &b))
    });
    let jd = match jd {
        Ok(jd) => jd,
        Err(e) => {
            let c = engine_failure(e).hard(true);
            let mut rep = skipped_report(&desc.label, meta, hr, "", cfg, BTreeMap::new());
            rep.hypotheses.not_applicable = None;
            rep.theorems = Theorems {
                lemma_2_3: c.clone(),
                lemma_2_4: c.clone(),
                lemma_2_6: c.clone(),
                lemma_2_7: c.clone(),
                corollary_1: c.clone(),
                theorem_2_8: c,
            };
            let s = || Check::skipped("Jacobian dual unavailable");
            rep.conjectures = Conjectures {
                conj_2_9: s(),
                conj_2_10: s(),
                ehu: s(),
                prop_3_7_formula: s(),
                multiplicity: empty_multiplicity("Jacobian dual unavailable".into()),
            };
            rep.oracle = OracleReport { column_cap: cfg.column_cap, hilbert: s(), membership: s(), elimination: s(), conj_2_9_upto: s() };
            rep.budget.exceeded = rep.checks().iter().filter(|(_, c)| c.status == Status::BudgetExceeded).map(|(k, _)| k.to_string()).collect();
            timer.stages.insert("total".into(), total.elapsed().as_secs_f64());
            rep.timings = timer.stages;
            return Ok(rep);
        }
    };
    meta.big_n = Some(jd.big_n());
    let inst = Instance { ideal, jd, n, d };

    let minors: Stage<Minors> = timer.time("minors", || stage(maximal_minors(&inst.jd)));
    let iw: Stage<Ideal> = timer.time("image", || stage(ring_map_kernel(inst.ideal.gens(), &b, budget)));

    let mut rows_rng = cfg.rng(2);
    let rows = row_subsets(inst.jd.big_n(), n, cfg.trials, &mut rows_rng);

    let theorems = timer.time("theorems", || {
        let lemma_2_3 = dependent(&minors, |m| {
            dependent(&iw, |iw| {
                guard(|| Ok(from_verdict(check_radical_eq(&m.ideal, iw, budget)?, json!({ "minors": m.ideal.gens().len(), "image_generators": iw.gens().len() }))))
            })
        });
        let lemma_2_4 = lemma_2_4(&inst.jd, cfg);
        let lemma_2_6 = lemma_2_6(&inst.jd, &rows);
        let tally = lemma_2_7(&inst.jd, &rows, budget);
        let corollary_1 = dependent(&minors, |m| corollary_1(&inst.jd, &rows, m, tally.memberships_2_3_hold, budget));
        let theorem_2_8 = dependent(&minors, |m| {
            dependent(&iw, |iw| {
                guard(|| {
                    let v = check_saturation_eq(&m.ideal, iw, budget)?;
                    let gb = iw.groebner(budget)?;
                    Ok(from_verdict(v, json!({ "image_basis": gb.polys().iter().map(|g| g.to_string()).collect::<Vec<_>>() })))
                })
            })
        });
        Theorems {
            lemma_2_3: lemma_2_3.hard(true),
            lemma_2_4: lemma_2_4.hard(true),
            lemma_2_6: lemma_2_6.hard(true),
            lemma_2_7: tally.check.hard(true),
            corollary_1: corollary_1.hard(true),
            theorem_2_8: theorem_2_8.hard(true),
        }
    });

    let mut reg_iw: Option<i64> = None;
    let mut reg_minors: Option<i64> = None;
    let conjectures = timer.time("conjectures", || {
        conjectures(&inst, &minors, &iw, cfg, &mut reg_iw, &mut reg_minors)
    });

    let oracle = timer.time("oracle", || oracle_section(&inst, &b, &minors, &iw, &conjectures, cfg, reg_iw, reg_minors));

    timer.stages.insert("total".into(), total.elapsed().as_secs_f64());
    let mut rep = VerificationReport {
        label: desc.label.clone(),
        meta,
        hypotheses: hr,
        theorems,
        conjectures,
        oracle,
        budget: BudgetReport { steps: cfg.budget, exceeded: Vec::new() },
        timings: timer.stages,
    };
    rep.budget.exceeded = rep.checks().iter().filter(|(_, c)| c.status == Status::BudgetExceeded).map(|(k, _)| k.to_string()).collect();
    Ok(rep)
}

fn conjectures(
    inst: &Instance,
    minors: &Stage<Minors>,
    iw: &Stage<Ideal>,
    cfg: &RunConfig,
    reg_iw: &mut Option<i64>,
    reg_minors: &mut Option<i64>,
) -> Conjectures {
    let budget = cfg.budget();
    let (n, d) = (inst.n, inst.d);
    if cfg.skips(Skip::Conjectures) {
        let s = || Check::skipped("skipped by request");
        return Conjectures {
            conj_2_9: s(),
            conj_2_10: s(),
            ehu: s(),
            prop_3_7_formula: s(),
            multiplicity: empty_multiplicity("skipped by request".into()),
        };
    }
    let conj_2_9 = dependent(minors, |m| {
        dependent(iw, |iw| guard(|| Ok(from_verdict(check_truncation_conjecture(&m.ideal, iw, n, budget)?, json!({ "truncation_degree": n })))))
    });
    if cfg.skips(Skip::Resolution) {
        let s = || Check::skipped("resolutions skipped by request");
        return Conjectures { conj_2_9, conj_2_10: s(), ehu: s(), prop_3_7_formula: s(), multiplicity: empty_multiplicity("resolutions skipped by request".into()) };
    }
    let conj_2_10 = dependent(minors, |m| {
        guard(|| {
            if m.ideal.is_zero() {
                return Ok(Check::new(true, json!({ "betti": [] }), "zero ideal"));
            }
            let t = free_resolution(&m.ideal, m.ideal.ring().nvars(), Convention::Ideal, budget)?;
            let reg = regularity(&t)?;
            *reg_minors = Some(reg);
            let linear = reg == n as i64;
            Ok(Check::new(
                linear,
                json!({ "regularity": reg, "betti": t, "table": t.to_string() }),
                if linear { "regularity equals generator degree" } else { "resolution is not linear" },
            ))
        })
    });

    let t_max = cfg.t_max.unwrap_or(n as u32);
    let ehu = guard(|| {
        let c = check_ehu(&inst.ideal, budget)?;
        let stab = stab_index(&inst.ideal, t_max, budget)?;
        let stab_ok = stab.is_some_and(|s| (s as usize) < n);
        let holds = c.holds && c.hilbert_agrees && stab_ok;
        let notes = format!(
            "reg(I^{}) = {} against {}; {}",
            n - 1,
            c.regularity,
            c.expected,
            if c.proved_case { "proved case" } else { "conjectural case" }
        );
        Ok(Check::new(
            holds,
            json!({
                "regularity": c.regularity,
                "expected": c.expected,
                "hilbert_agrees": c.hilbert_agrees,
                "proved_case": c.proved_case,
                "stab": stab,
                "t_max": t_max,
                "stab_reading": "h_{I^t}(dt) compared with dim S_{dt}",
            }),
            notes,
        )
        .hard(c.proved_case))
    });

    let mut multiplicity = empty_multiplicity(String::new());
    let prop = dependent(iw, |iw| {
        guard(|| {
            let c: ImageFormulaCheck = check_prop_reg_w(&inst.ideal, iw, t_max, budget)?;
            *reg_iw = Some(c.reg_iw);
            multiplicity = Multiplicity {
                e: Some(c.multiplicity),
                d_pow_n_minus_1: Some(c.d_pow_n_minus_1),
                d_pow_r_minus_1: Some(c.d_pow_r_minus_1),
                matches: BTreeMap::from([
                    ("d_pow_n_minus_1".to_string(), c.multiplicity == c.d_pow_n_minus_1),
                    ("d_pow_r_minus_1".to_string(), c.multiplicity == c.d_pow_r_minus_1),
                ]),
                notes: format!("e(W) = {}; projective dimension {}", c.multiplicity, c.projective_dimension),
            };
            let holds = c.formula_holds == Some(true) && c.dimension_is_n_minus_1;
            let notes = match c.predicted {
                Some(p) => format!("reg I(W) = {} against max{{Stab+1, n-ceil(n/d)}} = {}", c.reg_iw, p),
                None => format!("reg I(W) = {}; Stab not found up to t = {}", c.reg_iw, t_max),
            };
            Ok(Check::new(
                holds,
                json!({
                    "reg_iw": c.reg_iw,
                    "stab": c.stab,
                    "predicted": c.predicted,
                    "predicted_ideal_convention": c.predicted_ideal_convention,
                    "veronese_term": n as i64 - (n as i64 + d as i64 - 1) / d as i64,
                    "projective_dimension": c.projective_dimension,
                    "dimension_is_n_minus_1": c.dimension_is_n_minus_1,
                    "hilbert_numerator": c.hilbert.numerator,
                }),
                notes,
            ))
        })
    });
    if multiplicity.e.is_none() {
        multiplicity.notes = prop.notes.clone();
    }
    Conjectures { conj_2_9, conj_2_10, ehu, prop_3_7_formula: prop, multiplicity }
}

#[allow(clippy::too_many_arguments)]
fn oracle_section(
    inst: &Instance,
    b: &RingRef,
    minors: &Stage<Minors>,
    iw: &Stage<Ideal>,
    conj: &Conjectures,
    cfg: &RunConfig,
    reg_iw: Option<i64>,
    reg_minors: Option<i64>,
) -> OracleReport {
    let cap = cfg.column_cap;
    if cfg.skips(Skip::Oracle) {
        let s = || Check::skipped("skipped by request");
        return OracleReport { column_cap: cap, hilbert: s(), membership: s(), elimination: s(), conj_2_9_upto: s() };
    }
    let budget = cfg.budget();
    let n = inst.n;
    let reg_i = if cfg.skips(Skip::Resolution) { None } else { ideal_regularity(&inst.ideal, budget).ok() };
    let bound = |reg: Option<i64>| 2 * reg.unwrap_or(n as i64).max(n as i64) as u32;

    let hilbert = guard(|| {
        let mut tally = HilbertTally { compared: 0, capped: 0, mismatch: None };
        let mut cert = json!({});
        cert["I"] = compare_hilbert("I", &inst.ideal, bound(reg_i), cfg, &mut tally)?;
        if let Ok(iw) = iw {
            cert["I(W)"] = compare_hilbert("I(W)", iw, bound(reg_iw), cfg, &mut tally)?;
        }
        if let Ok(m) = minors {
            cert["I_n"] = compare_hilbert("I_n", &m.ideal, bound(reg_minors), cfg, &mut tally)?;
        }
        cert["compared"] = json!(tally.compared);
        cert["capped"] = json!(tally.capped);
        let notes = format!("{} degrees compared, {} capped", tally.compared, tally.capped);
        Ok(match tally.mismatch {
            Some(m) => {
                cert["mismatch"] = m;
                Check::new(false, cert, notes)
            }
            None => Check::new(true, cert, notes),
        })
    })
    .hard(true);

    let membership = guard(|| {
        let mut rng = cfg.rng(3);
        let mut counts = BTreeMap::new();
        let mut targets: Vec<(&str, &Ideal, u32)> = vec![("I", &inst.ideal, reg_i.unwrap_or(n as i64) as u32 + 1)];
        if let Ok(iw) = iw {
            targets.push(("I(W)", iw, 3));
        }
        for (name, ideal, top) in targets {
            let gb = ideal.groebner(budget)?;
            let (mut agreed, mut members, mut capped) = (0, 0, 0);
            for _ in 0..cfg.membership_samples {
                let f = sample(ideal, 1..=top.max(1), &mut rng);
                let Some(o) = oracle_membership(&f, ideal, cap)? else {
                    capped += 1;
                    continue;
                };
                let e = normal_form(&f, &gb)?.is_zero();
                if o != e {
                    return Ok(Check::new(false, json!({ "ideal": name, "f": f.to_string(), "oracle": o, "engine": e }), "membership disagreement"));
                }
                agreed += 1;
                members += o as usize;
            }
            counts.insert(name.to_string(), json!({ "agreed": agreed, "members": members, "capped": capped }));
        }
        Ok(Check::new(true, json!(counts), "normal forms agree with Macaulay-matrix membership"))
    })
    .hard(true);

    let elimination = dependent(iw, |iw| {
        guard(|| {
            for g in iw.groebner(budget)?.polys() {
                if !g.substitute(inst.ideal.gens())?.is_zero() {
                    return Ok(Check::new(false, json!({ "generator": g.to_string() }), "generator does not vanish on the image"));
                }
            }
            let top = bound(reg_iw);
            let (mut compared, mut capped) = (0, 0);
            for t in 0..=top {
                let Some(k) = oracle_kernel_dimension(inst.ideal.gens(), t, cap)? else {
                    capped += 1;
                    continue;
                };
                let e = hilbert_function(iw, t, budget)?;
                if k != e {
                    return Ok(Check::new(false, json!({ "t": t, "oracle": k, "engine": e }), "kernel dimension disagreement"));
                }
                compared += 1;
            }
            Ok(Check::new(
                true,
                json!({ "bound": top, "compared": compared, "capped": capped, "target_vars": b.nvars() }),
                format!("generators vanish on the image; kernel dimensions agree in {compared} degrees"),
            ))
        })
    })
    .hard(true);

    let conj_2_9_upto = if conj.conj_2_9.status == Status::Skipped || conj.conj_2_9.status == Status::BudgetExceeded {
        Check::skipped("no engine verdict to compare")
    } else {
        dependent(minors, |m| {
            dependent(iw, |iw| {
                guard(|| {
                    let tr = truncation(iw, n as u32)?;
                    let top = n as u32 + 3;
                    let mut through = None;
                    let mut differs = None;
                    for t in 0..=top {
                        match oracle_ideal_equal_in_degree(&m.ideal, &tr, t, cap)? {
                            Some(true) => through = Some(t),
                            Some(false) => {
                                differs = Some(t);
                                break;
                            }
                            None => break,
                        }
                    }
                    let engine_holds = conj.conj_2_9.holds();
                    let agrees = if engine_holds { differs.is_none() } else { true };
                    if differs.is_none() && through.is_none_or(|t| (t as usize) < n) {
                        return Ok(Check::skipped("capped below the truncation degree"));
                    }
                    let notes = match (differs, through) {
                        (Some(t), _) => format!("pieces differ in degree {t}"),
                        (None, Some(t)) if t == top => format!("equal through degree {t}"),
                        (None, t) => format!("equal through degree {}; capped beyond", t.unwrap_or(0)),
                    };
                    Ok(Check::new(differs.is_none(), json!({ "bound": top, "equal_through": through, "differs_at": differs, "engine_agrees": agrees }), notes)
                        .hard(!agrees))
                })
            })
        })
    };

    OracleReport { column_cap: cap, hilbert, membership, elimination, conj_2_9_upto }
}
