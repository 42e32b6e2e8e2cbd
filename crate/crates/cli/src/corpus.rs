//! The built-in instance corpus and batch runs over it.

use std::collections::BTreeMap;

use jacdual::gbasis::{ideal_power, Budget, Ideal};
use jacdual::homology::is_linearly_presented;
use jacdual::polycore::{monomials_of_degree, Polynomial, PrimeField, Ring, DEFAULT_CHARACTERISTIC};
use jacdual::regpowers::random_hilbert_burch;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::desc::{IdealDescription, InputError};
use crate::report::{Outcome, Status, VerificationReport};
use crate::run::{run_instance, RunConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `m^d`.
    Power,
    /// Maximal minors of a random `r x (r-1)` linear matrix in two variables.
    HilbertBurch,
    /// Linearly presented equigenerated `m`-primary monomial ideals in three variables.
    Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub family: Family,
    pub n: usize,
    pub d: u32,
    pub r: usize,
    pub desc: IdealDescription,
}

/// Instances of the Hilbert-Burch family.
pub const HILBERT_BURCH_COUNT: usize = 20;

fn names(n: usize) -> Vec<String> {
    const XYZ: [&str; 3] = ["x", "y", "z"];
    if n <= 3 {
        XYZ[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

fn entry(family: Family, d: u32, ideal: &Ideal, label: String) -> CorpusEntry {
    let ring = ideal.ring();
    let desc = IdealDescription::new(ring.field().characteristic() as u64, ring.names().to_vec(), ideal.gens(), label);
    CorpusEntry { family, n: ring.nvars(), d, r: ideal.gens().len(), desc }
}

pub fn power_entries() -> Vec<CorpusEntry> {
    let field = PrimeField::new(DEFAULT_CHARACTERISTIC as u64).unwrap();
    let mut out = Vec::new();
    for n in [2, 3] {
        let ring = Ring::with_names(field, &names(n));
        for d in [2, 3] {
            let ideal = ideal_power(&Ideal::maximal(&ring), d).unwrap();
            out.push(entry(Family::Power, d, &ideal, format!("power-n{n}-d{d}")));
        }
    }
    out
}

pub fn hilbert_burch_entries() -> Vec<CorpusEntry> {
    let field = PrimeField::new(DEFAULT_CHARACTERISTIC as u64).unwrap();
    let ring = Ring::with_names(field, &names(2));
    (0..HILBERT_BURCH_COUNT)
        .map(|k| {
            let r = 3 + k % 3;
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + k as u64);
            let (_, ideal) = random_hilbert_burch(&ring, r, &mut rng, Budget::UNLIMITED).expect("admissible matrix exists");
            entry(Family::HilbertBurch, r as u32 - 1, &ideal, format!("hb-n2-r{r}-{k:02}"))
        })
        .collect()
}

/// Every monomial ideal containing `x^d, y^d, z^d` and generated in degree
/// `d`, kept when the engine finds it linearly presented. The label suffix
/// is the bit mask of the mixed monomials included.
pub fn monomial_entries(d: u32) -> Vec<CorpusEntry> {
    let field = PrimeField::new(DEFAULT_CHARACTERISTIC as u64).unwrap();
    let ring = Ring::with_names(field, &names(3));
    let one = field.elem(1);
    let mons = monomials_of_degree(3, d);
    let (pure, mixed): (Vec<_>, Vec<_>) = mons.into_iter().partition(|m| m.exps().iter().filter(|&&e| e > 0).count() == 1);
    let mut out = Vec::new();
    for mask in 0u32..(1 << mixed.len()) {
        let gens: Vec<Polynomial> = pure
            .iter()
            .chain(mixed.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, m)| m))
            .map(|m| Polynomial::term(&ring, one, m.clone()))
            .collect();
        let ideal = Ideal::new(&ring, gens).unwrap();
        if is_linearly_presented(&ideal, Budget::UNLIMITED).unwrap_or(false) {
            out.push(entry(Family::Monomial, d, &ideal, format!("monomial-n3-d{d}-{mask:03}")));
        }
    }
    out
}

/// The full corpus, sorted by label.
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    let mut all = power_entries();
    all.extend(hilbert_burch_entries());
    all.extend(monomial_entries(2));
    all.extend(monomial_entries(3));
    all.sort_by(|a, b| a.desc.label.cmp(&b.desc.label));
    all
}

/// Conjunction of `family` and `key=value` constraints, e.g. `monomial n=3 d=2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Filter {
    pub family: Option<Family>,
    pub n: Option<usize>,
    pub d: Option<u32>,
    pub r: Option<usize>,
}

impl Filter {
    pub fn parse(src: &str) -> Result<Filter, InputError> {
        let mut f = Filter::default();
        for tok in src.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let bad = || InputError::Invalid(format!("unknown filter term `{tok}`"));
            match tok {
                "all" => {}
                "power" | "powers" => f.family = Some(Family::Power),
                "hb" | "hilbert-burch" => f.family = Some(Family::HilbertBurch),
                "monomial" => f.family = Some(Family::Monomial),
                _ => {
                    let (k, v) = tok.split_once('=').ok_or_else(bad)?;
                    let v: usize = v.parse().map_err(|_| bad())?;
                    match k {
                        "n" => f.n = Some(v),
                        "d" => f.d = Some(v as u32),
                        "r" => f.r = Some(v),
                        _ => return Err(bad()),
                    }
                }
            }
        }
        Ok(f)
    }

    pub fn matches(&self, e: &CorpusEntry) -> bool {
        self.family.is_none_or(|f| f == e.family)
            && self.n.is_none_or(|n| n == e.n)
            && self.d.is_none_or(|d| d == e.d)
            && self.r.is_none_or(|r| r == e.r)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusSummary {
    pub instances: usize,
    pub by_family: BTreeMap<String, usize>,
    /// `check -> status -> count`.
    pub statuses: BTreeMap<String, BTreeMap<String, usize>>,
    pub hard_failures: Vec<String>,
    pub budget_exceeded: Vec<String>,
    pub not_applicable: Vec<String>,
    pub composition: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusRun {
    pub summary: CorpusSummary,
    pub reports: Vec<VerificationReport>,
}

impl CorpusRun {
    pub fn outcome(&self) -> Outcome {
        self.reports.iter().map(|r| r.outcome()).max().unwrap_or(Outcome::Ok)
    }
}

const COMPOSITION: &str = "powers of m for n in {2,3} and d in {2,3}; seeded random Hilbert-Burch ideals in two variables; \
all linearly presented equigenerated m-primary monomial ideals in three variables of degree 2 and 3";

pub fn corpus_run(filter: &Filter, cfg: &RunConfig) -> Result<CorpusRun, InputError> {
    let entries: Vec<CorpusEntry> = builtin_corpus().into_iter().filter(|e| filter.matches(e)).collect();
    let mut reports: Vec<VerificationReport> =
        entries.par_iter().map(|e| run_instance(&e.desc, cfg)).collect::<Result<Vec<_>, _>>()?;
    reports.sort_by(|a, b| a.label.cmp(&b.label));

    let mut by_family = BTreeMap::new();
    for e in &entries {
        let k = serde_json::to_value(e.family).unwrap().as_str().unwrap().to_string();
        *by_family.entry(k).or_insert(0) += 1;
    }
    let mut statuses: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    let (mut hard_failures, mut budget_exceeded, mut not_applicable) = (Vec::new(), Vec::new(), Vec::new());
    for rep in &reports {
        if !rep.is_applicable() {
            not_applicable.push(rep.label.clone());
        }
        for (name, c) in rep.checks() {
            let s = serde_json::to_value(c.status).unwrap().as_str().unwrap().to_string();
            *statuses.entry(name.to_string()).or_default().entry(s).or_insert(0) += 1;
            if c.hard && c.status == Status::Fails {
                hard_failures.push(format!("{}: {}", rep.label, name));
            }
            if c.status == Status::BudgetExceeded {
                budget_exceeded.push(format!("{}: {}", rep.label, name));
            }
        }
    }
    Ok(CorpusRun {
        summary: CorpusSummary {
            instances: reports.len(),
            by_family,
            statuses,
            hard_failures,
            budget_exceeded,
            not_applicable,
            composition: COMPOSITION,
        },
        reports,
    })
}
