//! Minimal first syzygies of homogeneous equigenerated forms.

use std::collections::HashMap;

use super::groebner::{compute_groebner, Budget};
use super::ops::coeff_vector;
use crate::error::{Error, Result};
use crate::polycore::linalg::{left_kernel, EchelonBasis};
use crate::polycore::{monomials_of_degree, same_ring, FieldElem, Monomial, MonomialOrder, PolyMatrix, Polynomial, Ring, RingRef};

/// An element of a free module `S^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorPolynomial {
    ring: RingRef,
    components: Vec<Polynomial>,
}

impl VectorPolynomial {
    pub fn new(ring: &RingRef, components: Vec<Polynomial>) -> Result<Self> {
        if components.iter().any(|c| !same_ring(c.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(VectorPolynomial { ring: ring.clone(), components })
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// `Σ a_i f_i`.
    pub fn dot(&self, f: &[Polynomial]) -> Result<Polynomial> {
        if f.len() != self.components.len() {
            return Err(Error::Dimension { expected: self.components.len(), got: f.len() });
        }
        let mut acc = Polynomial::zero(&self.ring);
        for (a, g) in self.components.iter().zip(f) {
            acc = acc.checked_add(&a.checked_mul(g)?)?;
        }
        Ok(acc)
    }

    /// Largest component degree, `None` for the zero vector.
    pub fn degree(&self) -> Option<u32> {
        self.components.iter().filter_map(|c| c.degree()).max()
    }

    pub fn columns_of(m: &PolyMatrix) -> Vec<VectorPolynomial> {
        (0..m.cols())
            .map(|j| VectorPolynomial {
                ring: m.ring().clone(),
                components: (0..m.rows()).map(|i| m.get(i, j).clone()).collect(),
            })
            .collect()
    }
}

fn validate(f: &[Polynomial]) -> Result<(RingRef, u32)> {
    let first = f.first().ok_or_else(|| Error::Input("no generators".into()))?;
    let ring = first.ring().clone();
    if f.iter().any(|p| !same_ring(p.ring(), &ring)) {
        return Err(Error::RingMismatch);
    }
    let d = first
        .homogeneous_degree()
        .ok_or_else(|| Error::Input("generators must be nonzero and homogeneous".into()))?;
    if f.iter().any(|p| p.homogeneous_degree() != Some(d)) {
        return Err(Error::Input("generators must be homogeneous of one degree".into()));
    }
    Ok((ring, d))
}

/// Top degree of a minimal syzygy, read off a position-over-term module
/// basis encoded with auxiliary variables. `None` when there are no syzygies.
fn syzygy_degree_bound(f: &[Polynomial], d: u32, budget: Budget) -> Result<Option<u32>> {
    let ring = f[0].ring();
    let (n, r) = (ring.nvars(), f.len());
    let mut names: Vec<String> = (0..=r).map(|i| format!("_e{i}")).collect();
    names.extend(ring.names().iter().cloned());
    let big = Ring::new(*ring.field(), names, MonomialOrder::block_elim(r + 1));
    let shift: Vec<usize> = (r + 1..r + 1 + n).collect();
    let e = |i: usize| Polynomial::var(&big, i);
    let mut gens = Vec::new();
    for (i, p) in f.iter().enumerate() {
        gens.push(&(&e(0) * &p.embed(&big, &shift)) + &e(i + 1));
    }
    for a in 0..=r {
        for b in a..=r {
            gens.push(&e(a) * &e(b));
        }
    }
    let gb = compute_groebner(&big, &gens, budget)?;
    let mut top: Option<u32> = None;
    for p in gb.polys() {
        let linear_free_of_e0 = p.terms().iter().all(|t| t.mon.partial_degree(0..r + 1) == 1 && t.mon.exp(0) == 0);
        if linear_free_of_e0 {
            let deg = p.terms().iter().map(|t| t.mon.partial_degree(r + 1..r + 1 + n)).max().unwrap() + d;
            top = Some(top.map_or(deg, |t: u32| t.max(deg)));
        }
    }
    Ok(top)
}

/// Minimal generators of the syzygy module of `f`, as columns of an `r × N`
/// matrix. Columns are grouped by degree and, within a degree, are the
/// reduced echelon basis of a complement to the syzygies coming from lower
/// degrees, so the output does not depend on the computation path.
pub fn syzygies(f: &[Polynomial], budget: Budget) -> Result<PolyMatrix> {
    let (ring, d) = validate(f)?;
    let (n, r) = (ring.nvars(), f.len());
    let field = *ring.field();

    let base = monomials_of_degree(n, d);
    let base_index: HashMap<Monomial, usize> = base.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let rows: Vec<Vec<FieldElem>> = f.iter().map(|p| coeff_vector(p, &base_index)).collect();
    if !left_kernel(field, &rows, base.len()).is_empty() {
        return Err(Error::Input("generators are linearly dependent".into()));
    }

    let Some(top) = syzygy_degree_bound(f, d, budget)? else {
        return Ok(PolyMatrix::zeros(&ring, r, 0));
    };

    let mut columns: Vec<Vec<Polynomial>> = Vec::new();
    // kernel basis in the previous degree, with its domain monomials
    let mut prev: Option<(Vec<Vec<FieldElem>>, Vec<Monomial>)> = None;
    for delta in d + 1..=top {
        let e = delta - d;
        let dom = monomials_of_degree(n, e);
        let dom_index: HashMap<Monomial, usize> = dom.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let cod = monomials_of_degree(n, delta);
        let cod_index: HashMap<Monomial, usize> = cod.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut map_rows = Vec::with_capacity(r * dom.len());
        for p in f {
            for mu in &dom {
                map_rows.push(coeff_vector(&p.mul_term(FieldElem::ONE, mu), &cod_index));
            }
        }
        let kernel = left_kernel(field, &map_rows, cod.len());
        let width = r * dom.len();

        let mut lower = EchelonBasis::new(field, width);
        if let Some((pk, pdom)) = &prev {
            for s in pk {
                for k in 0..n {
                    let x = Monomial::var(n, k);
                    let mut v = vec![FieldElem::ZERO; width];
                    for (pos, c) in s.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let (i, m) = (pos / pdom.len(), &pdom[pos % pdom.len()]);
                        v[i * dom.len() + dom_index[&m.mul(&x)]] = *c;
                    }
                    lower.insert(v);
                }
            }
        }
        let mut fresh = EchelonBasis::new(field, width);
        for k in &kernel {
            let mut v = k.clone();
            if lower.reduce(&mut v) {
                fresh.insert(v);
            }
        }
        for v in fresh.rref() {
            let mut comps = Vec::with_capacity(r);
            for i in 0..r {
                let terms = (0..dom.len())
                    .filter(|&j| !v[i * dom.len() + j].is_zero())
                    .map(|j| (v[i * dom.len() + j], dom[j].clone()));
                comps.push(Polynomial::from_terms(&ring, terms));
            }
            columns.push(comps);
        }
        prev = Some((kernel, dom));
    }

    let mut m = PolyMatrix::zeros(&ring, r, columns.len());
    for (j, col) in columns.into_iter().enumerate() {
        for (i, p) in col.into_iter().enumerate() {
            m.set(i, j, p);
        }
    }
    Ok(m)
}

/// Degrees `deg(column) + d` of the minimal syzygies, in column order.
pub fn syzygy_degrees(m: &PolyMatrix, d: u32) -> Vec<u32> {
    VectorPolynomial::columns_of(m).iter().map(|c| c.degree().unwrap_or(0) + d).collect()
}
