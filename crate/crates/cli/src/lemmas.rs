//! Random testing of the adjugate and bordered-determinant identities on
//! matrices of linear forms, detached from any ideal.

use std::time::Instant;

use jacdual::jacdual::identities::{clause1_sides, clause3_sides};
use jacdual::polycore::{lemma_adj_check, PolyMatrix, Polynomial, PrimeField, Ring, RingRef};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::desc::InputError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaConfig {
    /// Matrices are `(n-1) x n`.
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub characteristic: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaSummary {
    pub n: usize,
    pub trials: usize,
    pub char: u64,
    pub seed: u64,
    /// Matrices on which every adjugate identity held.
    pub adjugate_passed: usize,
    /// Individual `(matrix, i)` adjugate identities checked.
    pub adjugate_identities: usize,
    pub cofactor_identities: usize,
    pub failures: Vec<String>,
    pub seconds: f64,
}

impl LemmaSummary {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty() && self.adjugate_passed == self.trials
    }
}

fn random_linear<R: Rng>(ring: &RingRef, vars: std::ops::Range<usize>, rng: &mut R) -> Polynomial {
    let f = *ring.field();
    let p = f.characteristic() as i64;
    vars.fold(Polynomial::zero(ring), |acc, v| &acc + &Polynomial::var(ring, v).scale(f.elem(rng.gen_range(0..p))))
}

pub fn run_lemmas(cfg: &LemmaConfig) -> Result<LemmaSummary, InputError> {
    if cfg.n < 2 {
        return Err(InputError::Invalid("--n must be at least 2".into()));
    }
    let field = PrimeField::new(cfg.characteristic).map_err(|e| InputError::Invalid(e.to_string()))?;
    let t0 = Instant::now();
    let n = cfg.n;
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((1..=n).map(|i| format!("T{i}")));
    let ring = Ring::with_names(field, &names);
    let x: Vec<Polynomial> = (0..n).map(|k| Polynomial::var(&ring, k)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (n as u64) << 32 ^ cfg.characteristic);
    let mut summary = LemmaSummary {
        n,
        trials: cfg.trials,
        char: cfg.characteristic,
        seed: cfg.seed,
        adjugate_passed: 0,
        adjugate_identities: 0,
        cofactor_identities: 0,
        failures: Vec::new(),
        seconds: 0.0,
    };
    let fail = |e: jacdual::Error| InputError::Invalid(e.to_string());
    for trial in 0..cfg.trials {
        let entries: Vec<Polynomial> = (0..(n - 1) * n).map(|_| random_linear(&ring, n..2 * n, &mut rng)).collect();
        let nmat = PolyMatrix::new(&ring, n - 1, n, entries).map_err(fail)?;
        let border: Vec<Polynomial> = (0..n).map(|_| random_linear(&ring, n..2 * n, &mut rng)).collect();
        let mut ok = true;
        for i in 1..=n {
            summary.adjugate_identities += 1;
            if let Err(m) = lemma_adj_check(&nmat, i).map_err(fail)? {
                ok = false;
                summary.failures.push(format!("trial {trial}: adjugate identity i={i} fails at entry ({}, {})", m.row, m.col));
            }
            let (l, r) = clause1_sides(&nmat, &border, &x, i).map_err(fail)?;
            summary.cofactor_identities += 1;
            if l != r {
                summary.failures.push(format!("trial {trial}: bordered identity i={i} fails"));
            }
            for j in 1..n {
                let (l, r) = clause3_sides(&nmat, &x, i, j).map_err(fail)?;
                summary.cofactor_identities += 1;
                if l != r {
                    summary.failures.push(format!("trial {trial}: two-minor identity i={i} j={j} fails"));
                }
            }
        }
        summary.adjugate_passed += ok as usize;
    }
    summary.seconds = t0.elapsed().as_secs_f64();
    Ok(summary)
}
