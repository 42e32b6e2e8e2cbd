//! Report types and their JSON form.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    Skipped,
    BudgetExceeded,
}

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub status: Status,
    pub certificate: Value,
    pub notes: String,
    /// Whether a failure here is a hard failure of the run.
    #[serde(skip)]
    pub hard: bool,
}

impl Check {
    pub fn new(holds: bool, certificate: Value, notes: impl Into<String>) -> Self {
        Check { status: if holds { Status::Holds } else { Status::Fails }, certificate, notes: notes.into(), hard: false }
    }

    pub fn skipped(notes: impl Into<String>) -> Self {
        Check { status: Status::Skipped, certificate: Value::Null, notes: notes.into(), hard: false }
    }

    pub fn budget(notes: impl Into<String>) -> Self {
        Check { status: Status::BudgetExceeded, certificate: Value::Null, notes: notes.into(), hard: false }
    }

    pub fn hard(mut self, hard: bool) -> Self {
        self.hard = hard;
        self
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Meta {
    pub n: usize,
    pub r: usize,
    pub d: Option<u32>,
    #[serde(rename = "N")]
    pub big_n: Option<usize>,
    pub char: u64,
    pub seed: u64,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HypothesesReport {
    pub homogeneous: bool,
    pub minimal: bool,
    pub equigenerated: bool,
    pub degree: Option<u32>,
    pub m_primary: bool,
    pub linearly_presented: bool,
    /// Reason the instance is out of scope, when it is.
    pub not_applicable: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorems {
    pub lemma_2_3: Check,
    pub lemma_2_4: Check,
    pub lemma_2_6: Check,
    pub lemma_2_7: Check,
    pub corollary_1: Check,
    pub theorem_2_8: Check,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Multiplicity {
    pub e: Option<i64>,
    pub d_pow_n_minus_1: Option<i64>,
    pub d_pow_r_minus_1: Option<i64>,
    pub matches: BTreeMap<String, bool>,
    pub notes: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Conjectures {
    pub conj_2_9: Check,
    pub conj_2_10: Check,
    pub ehu: Check,
    pub prop_3_7_formula: Check,
    pub multiplicity: Multiplicity,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleReport {
    pub column_cap: u64,
    pub hilbert: Check,
    pub membership: Check,
    pub elimination: Check,
    pub conj_2_9_upto: Check,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BudgetReport {
    pub steps: Option<u64>,
    pub exceeded: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub label: String,
    pub meta: Meta,
    pub hypotheses: HypothesesReport,
    pub theorems: Theorems,
    pub conjectures: Conjectures,
    pub oracle: OracleReport,
    pub budget: BudgetReport,
    /// Seconds per stage.
    pub timings: BTreeMap<String, f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    Ok,
    BudgetExceeded,
    HardFailure,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::HardFailure => 1,
            Outcome::BudgetExceeded => 3,
        }
    }
}

impl VerificationReport {
    /// All checks with their dotted names, in report order.
    pub fn checks(&self) -> Vec<(&'static str, &Check)> {
        let t = &self.theorems;
        let c = &self.conjectures;
        let o = &self.oracle;
        vec![
            ("theorems.lemma_2_3", &t.lemma_2_3),
            ("theorems.lemma_2_4", &t.lemma_2_4),
            ("theorems.lemma_2_6", &t.lemma_2_6),
            ("theorems.lemma_2_7", &t.lemma_2_7),
            ("theorems.corollary_1", &t.corollary_1),
            ("theorems.theorem_2_8", &t.theorem_2_8),
            ("conjectures.conj_2_9", &c.conj_2_9),
            ("conjectures.conj_2_10", &c.conj_2_10),
            ("conjectures.ehu", &c.ehu),
            ("conjectures.prop_3_7_formula", &c.prop_3_7_formula),
            ("oracle.hilbert", &o.hilbert),
            ("oracle.membership", &o.membership),
            ("oracle.elimination", &o.elimination),
            ("oracle.conj_2_9_upto", &o.conj_2_9_upto),
        ]
    }

    pub fn is_applicable(&self) -> bool {
        self.hypotheses.not_applicable.is_none()
    }

    pub fn outcome(&self) -> Outcome {
        self.checks()
            .into_iter()
            .filter(|(_, c)| c.hard)
            .map(|(_, c)| match c.status {
                Status::Fails => Outcome::HardFailure,
                Status::BudgetExceeded => Outcome::BudgetExceeded,
                _ => Outcome::Ok,
            })
            .max()
            .unwrap_or(Outcome::Ok)
    }

    /// JSON without the `timings` section, for reproducibility comparisons.
    pub fn deterministic_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().unwrap().insert("timings".into(), json!({}));
        v
    }

    /// One line per check for terminal output.
    pub fn summary(&self) -> String {
        let mut out = format!("{}  n={} r={}", self.label, self.meta.n, self.meta.r);
        if let Some(d) = self.meta.d {
            out.push_str(&format!(" d={d}"));
        }
        if let Some(nn) = self.meta.big_n {
            out.push_str(&format!(" N={nn}"));
        }
        out.push('\n');
        if let Some(why) = &self.hypotheses.not_applicable {
            out.push_str(&format!("  not applicable: {why}\n"));
            return out;
        }
        for (name, c) in self.checks() {
            let status = serde_json::to_value(c.status).unwrap();
            let tag = if c.hard { " [hard]" } else { "" };
            out.push_str(&format!("  {:<30} {:<16}{}  {}\n", name, status.as_str().unwrap(), tag, c.notes));
        }
        let m = &self.conjectures.multiplicity;
        if let Some(e) = m.e {
            out.push_str(&format!(
                "  {:<30} e={} d^(n-1)={} d^(r-1)={}\n",
                "conjectures.multiplicity",
                e,
                m.d_pow_n_minus_1.unwrap_or(0),
                m.d_pow_r_minus_1.unwrap_or(0)
            ));
        }
        out
    }
}
