//! Instance-level checks on `Θ`, `I_n(Θ)` and `I(W)`.

use crate::error::Result;
use crate::gbasis::{ideal_equal, normal_form, radical_membership, saturation, truncation, Budget, Ideal};
use crate::homology::has_linear_resolution;
use crate::polycore::{deltas, PolyMatrix, Polynomial};

use super::dual::JacobianDual;

/// Outcome of a membership-style check: the first offending element, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Polynomial>,
    pub note: String,
}

impl Verdict {
    pub fn yes(note: impl Into<String>) -> Self {
        Verdict { holds: true, witness: None, note: note.into() }
    }

    pub fn no(witness: Option<Polynomial>, note: impl Into<String>) -> Self {
        Verdict { holds: false, witness, note: note.into() }
    }
}

/// `√I_n(Θ) = I(W)`: minors lie in `I(W)`, and generators of `I(W)` lie in
/// the radical of the minors.
pub fn check_radical_eq(minors: &Ideal, iw: &Ideal, budget: Budget) -> Result<Verdict> {
    for g in minors.gens() {
        if !iw.contains(g, budget)? {
            return Ok(Verdict::no(Some(g.clone()), "minor outside I(W)"));
        }
    }
    for g in iw.groebner(budget)?.polys() {
        if !radical_membership(g, minors, budget)? {
            return Ok(Verdict::no(Some(g.clone()), "generator of I(W) outside the radical of the minors"));
        }
    }
    Ok(Verdict::yes(format!("{} minors in I(W); {} generators of I(W) in the radical", minors.gens().len(), iw.groebner(budget)?.len())))
}

/// `I_n(Θ) : m_T^∞ = I(W)`.
pub fn check_saturation_eq(minors: &Ideal, iw: &Ideal, budget: Budget) -> Result<Verdict> {
    let sat = saturation(minors, &Ideal::maximal(minors.ring()), budget)?;
    Ok(if ideal_equal(&sat, iw, budget)? {
        Verdict::yes(format!("saturation has a reduced basis of {} elements", sat.groebner(budget)?.len()))
    } else {
        Verdict::no(None, "saturation differs from I(W)")
    })
}

/// `I_n(Θ) = I(W)_{≥ n}`.
pub fn check_truncation_conjecture(minors: &Ideal, iw: &Ideal, n: usize, budget: Budget) -> Result<Verdict> {
    let tr = truncation(iw, n as u32)?;
    Ok(if ideal_equal(minors, &tr, budget)? {
        Verdict::yes("reduced bases coincide")
    } else {
        Verdict::no(None, "I_n differs from the truncation")
    })
}

/// `I_n(Θ)` has a linear resolution; vacuous when there are no minors.
pub fn check_linear_resolution_conjecture(minors: &Ideal, budget: Budget) -> Result<Verdict> {
    if minors.is_zero() {
        return Ok(Verdict::yes("zero ideal"));
    }
    Ok(if has_linear_resolution(minors, budget)? {
        Verdict::yes("regularity equals generator degree")
    } else {
        Verdict::no(None, "resolution is not linear")
    })
}

/// The row used to border the chosen submatrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Border {
    /// A row of `Θ` (0-based).
    Row(usize),
    /// The unit vector `e_j` (1-based), so the bordering form is `x_j`.
    Unit(usize),
}

/// Results of the three clauses for one choice of `(subset, border, i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseResults {
    pub clause1: Verdict,
    pub clause2: Verdict,
    pub clause3: Verdict,
}

impl ClauseResults {
    pub fn all_hold(&self) -> bool {
        self.clause1.holds && self.clause2.holds && self.clause3.holds
    }
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn ideal_check(p: &Polynomial, ideal: &Ideal, budget: Budget, what: &str) -> Result<Verdict> {
    let gb = ideal.groebner(budget)?;
    let nf = normal_form(p, &gb)?;
    Ok(if nf.is_zero() { Verdict::yes(what.to_string()) } else { Verdict::no(Some(nf), what.to_string()) })
}

/// Context for repeated clause checks on one submatrix: the lifted
/// submatrix, its signed minors and the ideals they generate.
pub struct SubmatrixContext<'a> {
    jd: &'a JacobianDual,
    rows: Vec<usize>,
    nmat: PolyMatrix,
    deltas: Vec<Polynomial>,
    forms_ideal: Ideal,
    minors2: Option<Ideal>,
}

impl<'a> SubmatrixContext<'a> {
    pub fn new(jd: &'a JacobianDual, rows: &[usize]) -> Result<Self> {
        let n = jd.n();
        let sub = jd.submatrix(rows)?;
        let nmat = sub.map_ring(jd.mixed(), &(n..n + jd.r()).collect::<Vec<_>>());
        let deltas = deltas(&nmat)?;
        let forms: Vec<Polynomial> = rows.iter().map(|&k| jd.forms()[k].clone()).collect();
        let forms_ideal = Ideal::new(jd.mixed(), forms)?;
        Ok(SubmatrixContext { jd, rows: rows.to_vec(), nmat, deltas, forms_ideal, minors2: None })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// `Δ_i` for 1-based `i`, in the mixed ring.
    pub fn delta(&self, i: usize) -> &Polynomial {
        &self.deltas[i - 1]
    }

    pub fn forms_ideal(&self) -> &Ideal {
        &self.forms_ideal
    }

    /// `(x_k Δ_i - x_i Δ_k : k)`.
    pub fn two_minors_ideal(&mut self, i: usize) -> Result<Ideal> {
        let n = self.jd.n();
        let xi = self.jd.x_in_mixed(i - 1);
        let gens: Vec<Polynomial> = (1..=n)
            .filter(|&k| k != i)
            .map(|k| &(&self.jd.x_in_mixed(k - 1) * &self.deltas[i - 1]) - &(&xi * &self.deltas[k - 1]))
            .collect();
        let id = Ideal::new(self.jd.mixed(), gens)?;
        self.minors2 = Some(id.clone());
        Ok(id)
    }

    fn border_form(&self, b: Border) -> Result<(Vec<Polynomial>, Polynomial)> {
        let n = self.jd.n();
        let mixed = self.jd.mixed();
        Ok(match b {
            Border::Row(k) => {
                let row: Vec<Polynomial> = (0..n).map(|c| self.jd.lift_t(self.jd.theta().get(k, c))).collect();
                (row, self.jd.forms()[k].clone())
            }
            Border::Unit(j) => {
                let row: Vec<Polynomial> =
                    (1..=n).map(|c| if c == j { Polynomial::one(mixed) } else { Polynomial::zero(mixed) }).collect();
                (row, self.jd.x_in_mixed(j - 1))
            }
        })
    }

    /// Clause 1: `Δ_i L_n + (-1)^{n+1} det(M) x_i ∈ (L_1, ..., L_{n-1})`.
    pub fn clause1(&self, border: Border, i: usize, budget: Budget) -> Result<Verdict> {
        let n = self.jd.n();
        let (row, ln) = self.border_form(border)?;
        let mut rows: Vec<Vec<Polynomial>> = (0..n - 1).map(|r| self.nmat.row(r).to_vec()).collect();
        rows.push(row);
        let m = PolyMatrix::from_rows(self.jd.mixed(), rows)?;
        let det = m.det()?;
        let p = &(&self.deltas[i - 1] * &ln) + &(&det * &self.jd.x_in_mixed(i - 1)).scale_int(sign(n + 1));
        ideal_check(&p, &self.forms_ideal, budget, "normal form against the forms")
    }

    /// Clause 2: `x_i Δ_j - x_j Δ_i ∈ (L_1, ..., L_{n-1})`.
    pub fn clause2(&self, i: usize, j: usize, budget: Budget) -> Result<Verdict> {
        let p = &(&self.jd.x_in_mixed(i - 1) * &self.deltas[j - 1]) - &(&self.jd.x_in_mixed(j - 1) * &self.deltas[i - 1]);
        if p.is_zero() {
            return Ok(Verdict::yes("identically zero"));
        }
        ideal_check(&p, &self.forms_ideal, budget, "normal form against the forms")
    }

    /// Clause 3: `Δ_i L_j ∈ (x_k Δ_i - x_i Δ_k : k)` for a row `j` (1-based) of the submatrix.
    pub fn clause3(&mut self, i: usize, j: usize, budget: Budget) -> Result<Verdict> {
        let n = self.jd.n();
        if j >= n {
            return Ok(Verdict::yes("vacuous for the bordering row"));
        }
        let lj = self.jd.forms()[self.rows[j - 1]].clone();
        let p = &self.deltas[i - 1] * &lj;
        let id = self.two_minors_ideal(i)?;
        ideal_check(&p, &id, budget, "normal form against the 2x2 minors")
    }

    pub fn lemma_identities(&mut self, border: Border, i: usize, j: usize, budget: Budget) -> Result<ClauseResults> {
        Ok(ClauseResults {
            clause1: self.clause1(border, i, budget)?,
            clause2: self.clause2(i, j, budget)?,
            clause3: self.clause3(i, j, budget)?,
        })
    }

    /// `Δ_i J ⊆ (L_{i_1}, ..., L_{i_{n-1}}) + I_n(Θ)` in the mixed ring.
    /// `None` when `Δ_i = 0`.
    pub fn corollary_membership(&self, i: usize, minors: &Ideal, budget: Budget) -> Result<Option<Verdict>> {
        let di = &self.deltas[i - 1];
        if di.is_zero() {
            return Ok(None);
        }
        let mut gens: Vec<Polynomial> = self.forms_ideal.gens().to_vec();
        gens.extend(minors.gens().iter().map(|g| self.jd.lift_t(g)));
        let id = Ideal::new(self.jd.mixed(), gens)?;
        let gb = id.groebner(budget)?;
        for l in self.jd.forms() {
            let nf = normal_form(&(di * l), &gb)?;
            if !nf.is_zero() {
                return Ok(Some(Verdict::no(Some(nf), "Δ_i L outside the forms plus minors")));
            }
        }
        Ok(Some(Verdict::yes(format!("{} forms checked", self.jd.forms().len()))))
    }
}

/// Convenience wrapper over [`SubmatrixContext::lemma_identities`].
pub fn lemma_identities_check(jd: &JacobianDual, subset: &[usize], border: Border, i: usize, j: usize, budget: Budget) -> Result<ClauseResults> {
    SubmatrixContext::new(jd, subset)?.lemma_identities(border, i, j, budget)
}

/// Convenience wrapper over [`SubmatrixContext::corollary_membership`].
pub fn corollary_membership_check(jd: &JacobianDual, subset: &[usize], i: usize, minors: &Ideal, budget: Budget) -> Result<Option<Verdict>> {
    SubmatrixContext::new(jd, subset)?.corollary_membership(i, minors, budget)
}
