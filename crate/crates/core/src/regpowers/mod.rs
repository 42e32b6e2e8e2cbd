//! Regularity of powers, the stabilization index, and the regularity and
//! degree formulas for the image.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gbasis::{ideal_power, minimal_generators, Budget, Ideal};
use crate::homology::{ambient_dimension, hilbert_data, hilbert_function, ideal_regularity, HilbertData};
use crate::jacdual::check_m_primary;
use crate::polycore::{PolyMatrix, Polynomial, RingRef};

/// `reg(I^t)`.
pub fn reg_power(ideal: &Ideal, t: u32, budget: Budget) -> Result<i64> {
    if t == 0 {
        return Err(Error::Input("powers start at t = 1".into()));
    }
    if !ideal.is_homogeneous() {
        return Err(Error::Input("regularity of powers needs a homogeneous ideal".into()));
    }
    ideal_regularity(&ideal_power(ideal, t)?, budget)
}

fn equigenerated_degree(ideal: &Ideal) -> Result<u32> {
    if !ideal.is_homogeneous() || ideal.is_zero() {
        return Err(Error::Input("need a nonzero homogeneous ideal".into()));
    }
    let mins = minimal_generators(ideal)?;
    let d = mins[0].degree().unwrap();
    if mins.iter().any(|g| g.degree() != Some(d)) {
        return Err(Error::Input("ideal is not generated in a single degree".into()));
    }
    Ok(d)
}

/// Smallest `t <= t_max` with `dim (I^t)_{dt} = dim S_{dt}`, i.e. `I^t = m^{dt}`.
pub fn stab_index(ideal: &Ideal, t_max: u32, budget: Budget) -> Result<Option<u32>> {
    let d = equigenerated_degree(ideal)?;
    if !check_m_primary(ideal, budget)? {
        return Err(Error::Input("stabilization index needs an m-primary ideal".into()));
    }
    let n = ideal.ring().nvars();
    for t in 1..=t_max {
        let p = ideal_power(ideal, t)?;
        if hilbert_function(&p, d * t, budget)? == ambient_dimension(n, d * t) {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// `(t, reg I^t)` for `t = 1..=t_max` with the stabilization index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerRegularityProfile {
    pub d: u32,
    pub values: Vec<(u32, i64)>,
    pub stab: Option<u32>,
    pub t_max: u32,
}

impl PowerRegularityProfile {
    /// `reg I^t >= td` for every computed `t`.
    pub fn lower_bound_holds(&self) -> bool {
        self.values.iter().all(|&(t, r)| r >= (t * self.d) as i64)
    }

    /// Once `reg I^t = td`, it stays so for all later computed `t`.
    pub fn tail_is_monotone(&self) -> bool {
        let mut seen = false;
        for &(t, r) in &self.values {
            let lin = r == (t * self.d) as i64;
            if seen && !lin {
                return false;
            }
            seen |= lin;
        }
        true
    }

    /// First `t` with `reg I^t = td`.
    pub fn first_linear_power(&self) -> Option<u32> {
        self.values.iter().find(|&&(t, r)| r == (t * self.d) as i64).map(|&(t, _)| t)
    }
}

pub fn power_profile(ideal: &Ideal, t_max: u32, budget: Budget) -> Result<PowerRegularityProfile> {
    let d = equigenerated_degree(ideal)?;
    let mut values = Vec::new();
    for t in 1..=t_max {
        values.push((t, reg_power(ideal, t, budget)?));
    }
    let stab = stab_index(ideal, t_max, budget)?;
    Ok(PowerRegularityProfile { d, values, stab, t_max })
}

/// `reg(I^{n-1}) = (n-1)d`, cross-checked by the Hilbert function of the power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EhuCheck {
    pub holds: bool,
    pub regularity: i64,
    pub expected: i64,
    pub hilbert_agrees: bool,
    /// True when the statement is a theorem for this instance (`n <= 3` or monomial).
    pub proved_case: bool,
}

pub fn is_monomial_ideal(ideal: &Ideal) -> bool {
    ideal.gens().iter().all(|g| g.len() == 1)
}

pub fn check_ehu(ideal: &Ideal, budget: Budget) -> Result<EhuCheck> {
    let d = equigenerated_degree(ideal)?;
    if !check_m_primary(ideal, budget)? {
        return Err(Error::Input("EHU check needs an m-primary ideal".into()));
    }
    let n = ideal.ring().nvars();
    let e = (n.max(2) - 1) as u32;
    let p = ideal_power(ideal, e)?;
    let regularity = ideal_regularity(&p, budget)?;
    let expected = (e * d) as i64;
    let hilbert_agrees = (hilbert_function(&p, e * d, budget)? == ambient_dimension(n, e * d)) == (regularity == expected);
    Ok(EhuCheck {
        holds: regularity == expected,
        regularity,
        expected,
        hilbert_agrees,
        proved_case: n <= 3 || is_monomial_ideal(ideal),
    })
}

/// The regularity formula and degree comparison for the image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageFormulaCheck {
    pub reg_iw: i64,
    pub stab: Option<u32>,
    /// `max{Stab + 1, n - ceil(n/d)}` when `Stab` was found.
    pub predicted: Option<i64>,
    pub formula_holds: Option<bool>,
    /// `max{Stab + 1, n - ceil(n/d) + 1}`, reading the Veronese term as an ideal regularity.
    pub predicted_ideal_convention: Option<i64>,
    /// Dimension of the projective image.
    pub projective_dimension: i64,
    pub dimension_is_n_minus_1: bool,
    pub multiplicity: i64,
    pub d_pow_n_minus_1: i64,
    pub d_pow_r_minus_1: i64,
    pub hilbert: HilbertData,
}

pub fn check_prop_reg_w(ideal: &Ideal, iw: &Ideal, t_max: u32, budget: Budget) -> Result<ImageFormulaCheck> {
    let d = equigenerated_degree(ideal)?;
    let n = ideal.ring().nvars() as i64;
    let r = ideal.gens().len() as u32;
    let reg_iw = ideal_regularity(iw, budget)?;
    let stab = stab_index(ideal, t_max, budget)?;
    let ceil = (n + d as i64 - 1) / d as i64;
    let predicted = stab.map(|s| (s as i64 + 1).max(n - ceil));
    let predicted_ideal_convention = stab.map(|s| (s as i64 + 1).max(n - ceil + 1));
    let hilbert = hilbert_data(iw, 2 * d + 2, budget)?;
    let projective_dimension = hilbert.dimension as i64 - 1;
    Ok(ImageFormulaCheck {
        reg_iw,
        stab,
        predicted,
        formula_holds: predicted.map(|p| p == reg_iw),
        predicted_ideal_convention,
        projective_dimension,
        dimension_is_n_minus_1: projective_dimension == n - 1,
        multiplicity: hilbert.multiplicity,
        d_pow_n_minus_1: (d as i64).pow((n - 1) as u32),
        d_pow_r_minus_1: (d as i64).saturating_pow(r.saturating_sub(1)),
        hilbert,
    })
}

/// Signed maximal minors of an `r x (r-1)` matrix, one per deleted row.
pub fn hilbert_burch_ideal(m: &PolyMatrix) -> Result<Ideal> {
    if m.rows() != m.cols() + 1 {
        return Err(Error::Shape("Hilbert-Burch matrix must be r x (r-1)".into()));
    }
    let mut gens = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let det = m.submatrix_delete(&[], &[i])?.det()?;
        gens.push(if i % 2 == 0 { det } else { det.scale_int(-1) });
    }
    Ideal::new(m.ring(), gens)
}

/// A random `r x (r-1)` matrix of linear forms whose minor ideal is
/// `m`-primary with `r` minimal generators.
pub fn random_hilbert_burch<R: Rng>(ring: &RingRef, r: usize, rng: &mut R, budget: Budget) -> Result<(PolyMatrix, Ideal)> {
    if r < 2 {
        return Err(Error::Input("need r >= 2".into()));
    }
    let f = *ring.field();
    let p = f.characteristic() as i64;
    for _ in 0..200 {
        let entries: Vec<Polynomial> = (0..r * (r - 1))
            .map(|_| {
                let mut e = Polynomial::zero(ring);
                for v in 0..ring.nvars() {
                    e = e.checked_add(&Polynomial::var(ring, v).scale(f.elem(rng.gen_range(0..p)))).unwrap();
                }
                e
            })
            .collect();
        let m = PolyMatrix::new(ring, r, r - 1, entries)?;
        let ideal = hilbert_burch_ideal(&m)?;
        if ideal.gens().iter().any(|g| g.is_zero()) {
            continue;
        }
        if minimal_generators(&ideal)?.len() == r && check_m_primary(&ideal, budget)? {
            return Ok((m, ideal));
        }
    }
    Err(Error::Input("no admissible random matrix found".into()))
}
