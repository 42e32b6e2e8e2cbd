//! The Jacobian dual matrix of a linearly presented ideal and its minors.

use crate::error::{Error, Result};
use crate::gbasis::{homogeneous_linear_basis, minimal_generators, syzygies, Budget, Ideal, VectorPolynomial};
use crate::polycore::linalg::rank;
use crate::polycore::{FieldElem, Monomial, MonomialOrder, PolyMatrix, Polynomial, Ring, RingRef};

/// Whether an ideal given by explicit generators meets the standing
/// assumptions: homogeneous, minimally generated in one degree `d`,
/// primary to the maximal ideal, with linear first syzygies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypotheses {
    pub homogeneous: bool,
    pub minimal: bool,
    pub degree: Option<u32>,
    pub m_primary: bool,
    pub linearly_presented: bool,
}

impl Hypotheses {
    pub fn all_hold(&self) -> bool {
        self.homogeneous && self.minimal && self.degree.is_some() && self.m_primary && self.linearly_presented
    }

    /// Name of the first failed hypothesis.
    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.homogeneous {
            Some("not homogeneous")
        } else if !self.minimal {
            Some("generators are not minimal")
        } else if self.degree.is_none() {
            Some("not equigenerated")
        } else if !self.m_primary {
            Some("not m-primary")
        } else if !self.linearly_presented {
            Some("not linearly presented")
        } else {
            None
        }
    }
}

/// True when the leading-term ideal contains a pure power of every variable.
pub fn check_m_primary(ideal: &Ideal, budget: Budget) -> Result<bool> {
    let gb = ideal.groebner(budget)?;
    if gb.is_empty() || gb.is_unit() {
        return Ok(false);
    }
    let n = ideal.ring().nvars();
    let lms = gb.leading_monomials();
    Ok((0..n).all(|v| lms.iter().any(|m| m.exp(v) > 0 && m.degree() == m.exp(v) as u32)))
}

pub fn check_hypotheses(ideal: &Ideal, budget: Budget) -> Result<Hypotheses> {
    let mut h = Hypotheses { homogeneous: ideal.is_homogeneous(), minimal: false, degree: None, m_primary: false, linearly_presented: false };
    if !h.homogeneous || ideal.is_zero() {
        return Ok(h);
    }
    let mins = minimal_generators(ideal)?;
    h.minimal = mins.len() == ideal.gens().len();
    let d = ideal.gens()[0].degree();
    if ideal.gens().iter().all(|g| g.degree() == d) {
        h.degree = d.filter(|&d| d > 0);
    }
    h.m_primary = check_m_primary(ideal, budget)?;
    if h.minimal && h.degree.is_some() {
        let m = syzygies(ideal.gens(), budget)?;
        h.linearly_presented = m.all_linear();
    }
    Ok(h)
}

/// Standard ring names `T1..Tr`, avoiding clashes with the source variables.
pub fn target_ring(source: &RingRef, r: usize) -> RingRef {
    let mut stem = "T".to_string();
    while source.names().iter().any(|n| n.starts_with(&stem)) {
        stem.push('T');
    }
    let names: Vec<String> = (1..=r).map(|i| format!("{stem}{i}")).collect();
    Ring::new(*source.field(), names, MonomialOrder::grevlex())
}

/// `Θ` together with the presentation it came from.
#[derive(Clone, Debug)]
pub struct JacobianDual {
    source: RingRef,
    target: RingRef,
    mixed: RingRef,
    gens: Vec<Polynomial>,
    degree: u32,
    presentation: PolyMatrix,
    theta: PolyMatrix,
    forms: Vec<Polynomial>,
}

impl JacobianDual {
    pub fn n(&self) -> usize {
        self.source.nvars()
    }

    pub fn r(&self) -> usize {
        self.gens.len()
    }

    /// Number of rows of `Θ`, the number of minimal syzygies.
    pub fn big_n(&self) -> usize {
        self.theta.rows()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn source(&self) -> &RingRef {
        &self.source
    }

    pub fn target(&self) -> &RingRef {
        &self.target
    }

    /// `k[x, T]` with the x-block eliminated first.
    pub fn mixed(&self) -> &RingRef {
        &self.mixed
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The `r × N` matrix of linear syzygies.
    pub fn presentation(&self) -> &PolyMatrix {
        &self.presentation
    }

    /// The `N × n` matrix of linear forms in `T`.
    pub fn theta(&self) -> &PolyMatrix {
        &self.theta
    }

    /// The bilinear forms `L_i = Σ_j a_ij(x) T_j` in the mixed ring.
    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn x_in_mixed(&self, k: usize) -> Polynomial {
        Polynomial::var(&self.mixed, k)
    }

    /// Embeds a polynomial of `B` into the mixed ring.
    pub fn lift_t(&self, p: &Polynomial) -> Polynomial {
        let n = self.n();
        let map: Vec<usize> = (0..self.target.nvars()).map(|j| n + j).collect();
        p.embed(&self.mixed, &map)
    }

    pub fn lift_x(&self, p: &Polynomial) -> Polynomial {
        let map: Vec<usize> = (0..self.n()).collect();
        p.embed(&self.mixed, &map)
    }

    /// Builds `Θ` from a chosen `r × N` matrix of linear syzygies of `gens`.
    pub fn from_presentation(gens: &[Polynomial], presentation: PolyMatrix, target: &RingRef) -> Result<JacobianDual> {
        let source = gens.first().ok_or_else(|| Error::Input("no generators".into()))?.ring().clone();
        let (n, r) = (source.nvars(), gens.len());
        if presentation.rows() != r || target.nvars() != r {
            return Err(Error::Dimension { expected: r, got: presentation.rows() });
        }
        if !presentation.all_linear() {
            return Err(Error::Input("not linearly presented".into()));
        }
        for col in VectorPolynomial::columns_of(&presentation) {
            if !col.dot(gens)?.is_zero() {
                return Err(Error::Input("presentation column is not a syzygy".into()));
            }
        }
        let degree = gens[0].degree().unwrap_or(0);
        let mixed = Ring::concat(&source, target, MonomialOrder::block_elim(n));
        let big_n = presentation.cols();
        let mut theta = PolyMatrix::zeros(target, big_n, n);
        for i in 0..big_n {
            for k in 0..n {
                let xk = Monomial::var(n, k);
                let terms: Vec<(FieldElem, Monomial)> = (0..r)
                    .map(|j| (presentation.get(j, i).coeff_of(&xk), Monomial::var(r, j)))
                    .filter(|(c, _)| !c.is_zero())
                    .collect();
                theta.set(i, k, Polynomial::from_terms(target, terms));
            }
        }
        let mut jd = JacobianDual {
            source: source.clone(),
            target: target.clone(),
            mixed,
            gens: gens.to_vec(),
            degree,
            presentation,
            theta,
            forms: Vec::new(),
        };
        jd.forms = (0..big_n)
            .map(|i| {
                (0..r).fold(Polynomial::zero(&jd.mixed), |acc, j| {
                    let t = Polynomial::var(&jd.mixed, n + j);
                    &acc + &(&jd.lift_x(jd.presentation.get(j, i)) * &t)
                })
            })
            .collect();
        if !jd.verify_invariants()? {
            return Err(Error::Input("Jacobian dual identity failed".into()));
        }
        Ok(jd)
    }

    /// `Θ · x = L` and `[T] · M = [x] · Θᵀ`, both as exact polynomial identities.
    pub fn verify_invariants(&self) -> Result<bool> {
        let n = self.n();
        if !self.theta.all_linear() {
            return Ok(false);
        }
        let x: Vec<Polynomial> = (0..n).map(|k| self.x_in_mixed(k)).collect();
        let theta_m = self.theta.map_ring(&self.mixed, &(n..n + self.r()).collect::<Vec<_>>());
        let xcol = PolyMatrix::new(&self.mixed, n, 1, x.clone())?;
        let lhs = theta_m.mul(&xcol)?;
        for (i, l) in self.forms.iter().enumerate() {
            if lhs.get(i, 0) != l {
                return Ok(false);
            }
        }
        let trow = PolyMatrix::new(&self.mixed, 1, self.r(), (0..self.r()).map(|j| Polynomial::var(&self.mixed, n + j)).collect())?;
        let m_mixed = self.presentation.map_ring(&self.mixed, &(0..n).collect::<Vec<_>>());
        let left = trow.mul(&m_mixed)?;
        let xrow = PolyMatrix::new(&self.mixed, 1, n, x)?;
        let right = xrow.mul(&theta_m.transpose())?;
        Ok(left == right)
    }

    /// The same construction after replacing the syzygy basis by `M · g`
    /// for an invertible scalar `N × N` matrix `g`.
    pub fn recombined(&self, g: &[Vec<FieldElem>]) -> Result<JacobianDual> {
        let big_n = self.big_n();
        if g.len() != big_n || g.iter().any(|row| row.len() != big_n) {
            return Err(Error::Dimension { expected: big_n, got: g.len() });
        }
        if rank(*self.source.field(), g, big_n) != big_n {
            return Err(Error::Input("basis change is not invertible".into()));
        }
        let gm = PolyMatrix::from_rows(
            &self.source,
            g.iter().map(|row| row.iter().map(|&c| Polynomial::constant(&self.source, c)).collect()).collect(),
        )?;
        let m = self.presentation.mul(&gm)?;
        JacobianDual::from_presentation(&self.gens, m, &self.target)
    }

    /// `Θ` with `T_j ↦ f_j(x0)`, for a nonzero point `x0`.
    pub fn theta_at_image_point(&self, x0: &[FieldElem]) -> Result<Vec<Vec<FieldElem>>> {
        if x0.len() != self.n() {
            return Err(Error::Dimension { expected: self.n(), got: x0.len() });
        }
        if x0.iter().all(|c| c.is_zero()) {
            return Err(Error::Input("the point must be nonzero".into()));
        }
        let t: Vec<FieldElem> = self.gens.iter().map(|f| f.evaluate(x0)).collect::<Result<_>>()?;
        if t.iter().all(|c| c.is_zero()) {
            return Err(Error::Input("the point lies in the base locus".into()));
        }
        self.theta.evaluate(&t)
    }

    /// Rank of `Θ` at the image of `x0`.
    pub fn rank_at_image_point(&self, x0: &[FieldElem]) -> Result<usize> {
        let m = self.theta_at_image_point(x0)?;
        Ok(rank(*self.source.field(), &m, self.n()))
    }

    /// The `(n-1) × n` submatrix of `Θ` on the given 0-based rows.
    pub fn submatrix(&self, rows: &[usize]) -> Result<PolyMatrix> {
        if rows.len() + 1 != self.n() {
            return Err(Error::Shape(format!("need {} rows, got {}", self.n() - 1, rows.len())));
        }
        self.theta.select(rows, &(0..self.n()).collect::<Vec<_>>())
    }
}

/// Builds `Θ` for an ideal satisfying the standing hypotheses.
pub fn build_jacobian_dual(ideal: &Ideal, target: &RingRef, budget: Budget) -> Result<JacobianDual> {
    let h = check_hypotheses(ideal, budget)?;
    if let Some(why) = h.first_failure() {
        return Err(Error::Input(why.into()));
    }
    let m = syzygies(ideal.gens(), budget)?;
    JacobianDual::from_presentation(ideal.gens(), m, target)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..k).rev().find(|&p| cur[p] < n - k + p) else { break };
        cur[pos] += 1;
        for q in pos + 1..k {
            cur[q] = cur[q - 1] + 1;
        }
    }
    out
}

/// The ideal of maximal minors with bookkeeping.
#[derive(Clone, Debug)]
pub struct Minors {
    pub ideal: Ideal,
    /// Number of `n × n` minors evaluated.
    pub evaluated: usize,
    /// Number of nonzero minors.
    pub nonzero: usize,
}

/// `I_n(Θ)`: every `n × n` minor, linearly interreduced. `(0)` when `N < n`.
pub fn maximal_minors(jd: &JacobianDual) -> Result<Minors> {
    let (n, big_n) = (jd.n(), jd.big_n());
    let cols: Vec<usize> = (0..n).collect();
    let mut dets = Vec::new();
    let rows = subsets(big_n, n);
    for s in &rows {
        dets.push(jd.theta.select(s, &cols)?.det()?);
    }
    let nonzero = dets.iter().filter(|p| !p.is_zero()).count();
    let basis = homogeneous_linear_basis(&dets);
    Ok(Minors { ideal: Ideal::new(&jd.target, basis)?, evaluated: rows.len(), nonzero })
}
