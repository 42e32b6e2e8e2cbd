//! Degree-bounded linear algebra on Macaulay matrices, independent of the
//! Groebner engine.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gbasis::Ideal;
use crate::polycore::linalg::EchelonBasis;
use crate::polycore::{monomial_count, monomials_of_degree, same_ring, FieldElem, Monomial, Polynomial, RingRef};

/// Default ceiling on the column count of one Macaulay matrix.
pub const DEFAULT_COLUMN_CAP: u64 = 1500;

/// Row space of `{µ g : deg(µ g) = t}` in the monomial basis of degree `t`.
#[derive(Clone, Debug)]
pub struct MacaulayMatrix {
    ring: RingRef,
    degree: u32,
    index: HashMap<Monomial, usize>,
    rows: usize,
    echelon: EchelonBasis,
}

impl MacaulayMatrix {
    /// `None` when the column count exceeds `cap`.
    pub fn new(ideal: &Ideal, t: u32, cap: u64) -> Result<Option<Self>> {
        if !ideal.is_homogeneous() {
            return Err(Error::Input("Macaulay matrices need homogeneous generators".into()));
        }
        let ring = ideal.ring().clone();
        let n = ring.nvars();
        if monomial_count(n, t) > cap {
            return Ok(None);
        }
        let cols = monomials_of_degree(n, t);
        let index: HashMap<Monomial, usize> = cols.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut echelon = EchelonBasis::new(*ring.field(), cols.len());
        let mut rows = 0;
        for g in ideal.gens() {
            let dg = g.degree().unwrap();
            if dg > t {
                continue;
            }
            for mu in monomials_of_degree(n, t - dg) {
                rows += 1;
                let mut v = vec![FieldElem::ZERO; cols.len()];
                for term in g.terms() {
                    v[index[&term.mon.mul(&mu)]] = term.coeff;
                }
                echelon.insert(v);
                if echelon.is_full() {
                    break;
                }
            }
        }
        Ok(Some(MacaulayMatrix { ring, degree: t, index, rows, echelon }))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn cols(&self) -> usize {
        self.index.len()
    }

    /// Rows generated (before early exit at full rank).
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Whether a homogeneous `f` of this degree lies in the row space.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        if f.homogeneous_degree() != Some(self.degree) {
            return Err(Error::Input("membership test needs a form of the matrix degree".into()));
        }
        let mut v = vec![FieldElem::ZERO; self.cols()];
        for t in f.terms() {
            v[self.index[&t.mon]] = t.coeff;
        }
        Ok(self.echelon.contains(&v))
    }

    fn span_contains(&self, other: &MacaulayMatrix) -> bool {
        other.echelon.rref().iter().all(|row| self.echelon.contains(row))
    }
}

/// `dim_k I_t`, or `None` past the column cap.
pub fn oracle_hilbert(ideal: &Ideal, t: u32, cap: u64) -> Result<Option<u64>> {
    Ok(MacaulayMatrix::new(ideal, t, cap)?.map(|m| m.rank() as u64))
}

/// `dim_k (S/I)_t`, or `None` past the column cap.
pub fn oracle_hilbert_quotient(ideal: &Ideal, t: u32, cap: u64) -> Result<Option<u64>> {
    Ok(MacaulayMatrix::new(ideal, t, cap)?.map(|m| (m.cols() - m.rank()) as u64))
}

/// Membership of a homogeneous `f` through the Macaulay matrix in degree `deg f`.
pub fn oracle_membership(f: &Polynomial, ideal: &Ideal, cap: u64) -> Result<Option<bool>> {
    let Some(t) = f.homogeneous_degree() else {
        if f.is_zero() {
            return Ok(Some(true));
        }
        return Err(Error::Input("oracle membership needs a homogeneous polynomial".into()));
    };
    match MacaulayMatrix::new(ideal, t, cap)? {
        Some(m) => Ok(Some(m.contains(f)?)),
        None => Ok(None),
    }
}

/// Equal degree-`t` pieces; `None` past the column cap.
pub fn oracle_ideal_equal_in_degree(a: &Ideal, b: &Ideal, t: u32, cap: u64) -> Result<Option<bool>> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let (Some(ma), Some(mb)) = (MacaulayMatrix::new(a, t, cap)?, MacaulayMatrix::new(b, t, cap)?) else {
        return Ok(None);
    };
    Ok(Some(ma.rank() == mb.rank() && ma.span_contains(&mb) && mb.span_contains(&ma)))
}

/// Equal degree-`t` pieces for every `t <= t_max`; `None` if a degree was capped
/// before a difference was found.
pub fn oracle_ideal_equal_upto(a: &Ideal, b: &Ideal, t_max: u32, cap: u64) -> Result<Option<bool>> {
    for t in 0..=t_max {
        match oracle_ideal_equal_in_degree(a, b, t, cap)? {
            Some(true) => {}
            Some(false) => return Ok(Some(false)),
            None => return Ok(None),
        }
    }
    Ok(Some(true))
}

/// `dim_k` of the degree-`t` kernel of `k[T_1..T_r] -> S`, `T_i -> f_i`, from
/// the rank of the images of all degree-`t` monomials. `None` past the cap.
pub fn oracle_kernel_dimension(images: &[Polynomial], t: u32, cap: u64) -> Result<Option<u64>> {
    let first = images.first().ok_or_else(|| Error::Input("no images".into()))?;
    let ring = first.ring().clone();
    let d = first.homogeneous_degree().ok_or_else(|| Error::Input("images must be homogeneous".into()))?;
    if images.iter().any(|f| !same_ring(f.ring(), &ring) || f.homogeneous_degree() != Some(d)) {
        return Err(Error::Input("images must be forms of one degree in one ring".into()));
    }
    let r = images.len();
    let rows = monomial_count(r, t);
    if rows > cap || monomial_count(ring.nvars(), d * t) > cap {
        return Ok(None);
    }
    let cols = monomials_of_degree(ring.nvars(), d * t);
    let index: HashMap<Monomial, usize> = cols.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut echelon = EchelonBasis::new(*ring.field(), cols.len());
    for mu in monomials_of_degree(r, t) {
        let img = mu
            .exps()
            .iter()
            .zip(images)
            .fold(Polynomial::one(&ring), |acc, (&e, f)| if e == 0 { acc } else { &acc * &f.pow(e as u32) });
        let mut v = vec![FieldElem::ZERO; cols.len()];
        for term in img.terms() {
            v[index[&term.mon]] = term.coeff;
        }
        echelon.insert(v);
        if echelon.is_full() {
            break;
        }
    }
    Ok(Some(rows - echelon.rank() as u64))
}
