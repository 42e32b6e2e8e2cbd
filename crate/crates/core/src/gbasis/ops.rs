//! Ideal operations built on Groebner bases.

use std::collections::HashMap;
use std::sync::Arc;

use super::groebner::{Budget, GroebnerBasis};
use super::ideal::{dedup_ideal, Ideal};
use crate::error::{Error, Result};
use crate::polycore::linalg::EchelonBasis;
use crate::polycore::{monomials_of_degree, same_ring, FieldElem, Monomial, MonomialOrder, Polynomial, Ring, RingRef};

/// Equality of ideals via reduced bases in the ring's order.
pub fn ideal_equal(a: &Ideal, b: &Ideal, budget: Budget) -> Result<bool> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let ga = a.groebner(budget)?;
    let gb = b.groebner(budget)?;
    Ok(ga.polys() == gb.polys())
}

/// `ideal ∩ target`, where `target` holds the last `target.nvars()` variables
/// of the ideal's ring.
pub fn eliminate(ideal: &Ideal, target: &RingRef, budget: Budget) -> Result<Ideal> {
    let n = ideal.ring().nvars();
    let m = target.nvars();
    if m > n {
        return Err(Error::Shape(format!("cannot eliminate into {m} variables from {n}")));
    }
    if target.field() != ideal.ring().field() {
        return Err(Error::RingMismatch);
    }
    let k = n - m;
    let gb = ideal.groebner_in(MonomialOrder::block_elim(k), budget)?;
    let map: Vec<usize> = (0..n).map(|i| i.saturating_sub(k)).collect();
    let kept: Vec<Polynomial> = gb
        .polys()
        .iter()
        .filter(|p| p.terms().iter().all(|t| t.mon.partial_degree(0..k) == 0))
        .map(|p| p.embed(target, &map))
        .collect();
    let out = Ideal::new(target, kept.clone())?;
    // the second block of the elimination order is plain grevlex
    if *target.order() == MonomialOrder::grevlex() {
        let gb = Arc::new(GroebnerBasis::from_reduced(target.clone(), kept));
        return Ok(out.with_cached(gb));
    }
    Ok(out)
}

/// Kernel of `F_p[T_1..T_r] -> S`, `T_i -> f_i`, for homogeneous `f_i` of one
/// common degree.
pub fn ring_map_kernel(f: &[Polynomial], target: &RingRef, budget: Budget) -> Result<Ideal> {
    let Some(first) = f.first() else {
        return Ok(Ideal::zero(target));
    };
    if target.nvars() != f.len() {
        return Err(Error::Dimension { expected: f.len(), got: target.nvars() });
    }
    let src = first.ring().clone();
    if f.iter().any(|p| !same_ring(p.ring(), &src)) {
        return Err(Error::RingMismatch);
    }
    let d = first.homogeneous_degree();
    if d.is_none() || f.iter().any(|p| p.homogeneous_degree() != d) {
        return Err(Error::Input("ring map images must be nonzero homogeneous of one degree".into()));
    }
    let n = src.nvars();
    let mixed = Ring::concat(&src, target, MonomialOrder::block_elim(n));
    let into: Vec<usize> = (0..n).collect();
    let gens: Vec<Polynomial> = f
        .iter()
        .enumerate()
        .map(|(i, p)| &Polynomial::var(&mixed, n + i) - &p.embed(&mixed, &into))
        .collect();
    let id = Ideal::new(&mixed, gens)?;
    eliminate(&id, target, budget)
}

/// `a ∩ b`.
pub fn intersect(a: &Ideal, b: &Ideal, budget: Budget) -> Result<Ideal> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(a.ring()));
    }
    if b.contains_ideal(a, budget)? {
        return Ok(a.clone());
    }
    if a.contains_ideal(b, budget)? {
        return Ok(b.clone());
    }
    let ring = a.ring();
    let n = ring.nvars();
    let mut names = vec!["_t".to_string()];
    names.extend(ring.names().iter().cloned());
    let big = Ring::new(*ring.field(), names, MonomialOrder::block_elim(1));
    let shift: Vec<usize> = (1..=n).collect();
    let t = Polynomial::var(&big, 0);
    let one_minus_t = &Polynomial::one(&big) - &t;
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.push(&t * &g.embed(&big, &shift));
    }
    for g in b.gens() {
        gens.push(&one_minus_t * &g.embed(&big, &shift));
    }
    let target = if *ring.order() == MonomialOrder::grevlex() { ring.clone() } else { ring.with_order(MonomialOrder::grevlex()) };
    let out = eliminate(&Ideal::new(&big, gens)?, &target, budget)?;
    Ok(out.to_ring(ring))
}

fn single_variable(g: &Polynomial) -> Option<usize> {
    if g.len() != 1 {
        return None;
    }
    let m = &g.terms()[0].mon;
    if m.degree() != 1 {
        return None;
    }
    m.exps().iter().position(|&e| e == 1)
}

fn quotient_by_poly(a: &Ideal, g: &Polynomial, budget: Budget) -> Result<Ideal> {
    let ring = a.ring();
    if g.is_zero() {
        return Ok(Ideal::unit(ring));
    }
    if a.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if let (Some(v), true) = (single_variable(g), a.is_homogeneous()) {
        let order = MonomialOrder::grevlex_with_last(ring.nvars(), v);
        let gb = a.groebner_in(order, budget)?;
        let xv = Polynomial::var(gb.ring(), v);
        let gens: Vec<Polynomial> = gb
            .polys()
            .iter()
            .map(|p| p.div_exact(&xv).unwrap_or_else(|| p.clone()).to_ring(ring))
            .collect();
        return Ok(dedup_ideal(ring, gens));
    }
    let cap = intersect(a, &Ideal::new(ring, vec![g.clone()])?, budget)?;
    let mut gens = Vec::with_capacity(cap.gens().len());
    for h in cap.gens() {
        match h.div_exact(g) {
            Some(q) => gens.push(q),
            None => return Err(Error::Input("intersection generator not divisible by the divisor".into())),
        }
    }
    Ok(dedup_ideal(ring, gens))
}

/// `a : b = { f : f b ⊆ a }`.
pub fn ideal_quotient(a: &Ideal, b: &Ideal, budget: Budget) -> Result<Ideal> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let mut acc: Option<Ideal> = None;
    for g in b.gens() {
        let q = quotient_by_poly(a, g, budget)?;
        acc = Some(match acc {
            None => q,
            Some(prev) => intersect(&prev, &q, budget)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(a.ring())))
}

/// `a : b^∞`, iterating quotients until the chain stabilizes.
pub fn saturation(a: &Ideal, b: &Ideal, budget: Budget) -> Result<Ideal> {
    let mut cur = a.clone();
    loop {
        let next = ideal_quotient(&cur, b, budget)?;
        if ideal_equal(&cur, &next, budget)? {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Whether `f` lies in the radical of `a` (Rabinowitsch trick).
pub fn radical_membership(f: &Polynomial, a: &Ideal, budget: Budget) -> Result<bool> {
    if !same_ring(f.ring(), a.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    let n = ring.nvars();
    let big = ring.extend(&["_y"], MonomialOrder::grevlex());
    let map: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Polynomial> = a.gens().iter().map(|g| g.embed(&big, &map)).collect();
    let y = Polynomial::var(&big, n);
    gens.push(&Polynomial::one(&big) - &(&y * &f.embed(&big, &map)));
    Ideal::new(&big, gens)?.is_unit(budget)
}

/// `a^t` for `t >= 1`. Homogeneous generators are thinned to a linear basis per degree.
pub fn ideal_power(a: &Ideal, t: u32) -> Result<Ideal> {
    if t == 0 {
        return Ok(Ideal::unit(a.ring()));
    }
    let mut acc = a.clone();
    for _ in 1..t {
        acc = acc.product(a)?;
        if acc.is_homogeneous() {
            acc = Ideal::new(a.ring(), homogeneous_linear_basis(acc.gens()))?;
        }
    }
    Ok(acc)
}

/// `a_{>= n}` for homogeneous `a`.
pub fn truncation(a: &Ideal, n: u32) -> Result<Ideal> {
    if !a.is_homogeneous() {
        return Err(Error::Input("truncation needs a homogeneous ideal".into()));
    }
    let ring = a.ring();
    let mut gens = Vec::new();
    let mut by_deg: HashMap<u32, Vec<Monomial>> = HashMap::new();
    for g in a.gens() {
        let d = g.degree().unwrap();
        if d >= n {
            gens.push(g.clone());
        } else {
            let mons = by_deg.entry(n - d).or_insert_with(|| monomials_of_degree(ring.nvars(), n - d));
            for m in mons.iter() {
                gens.push(g.mul_term(FieldElem::ONE, m));
            }
        }
    }
    Ideal::new(ring, homogeneous_linear_basis(dedup_ideal(ring, gens).gens()))
}

/// Reduced row echelon basis, degree by degree, of the span of homogeneous polynomials.
pub fn homogeneous_linear_basis(gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut by_deg: std::collections::BTreeMap<u32, Vec<&Polynomial>> = std::collections::BTreeMap::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        by_deg.entry(g.degree().unwrap()).or_default().push(g);
    }
    let mut out = Vec::new();
    for (_, ps) in by_deg {
        let ring = ps[0].ring().clone();
        let (index, mons) = support_index(&ps);
        let mut eb = EchelonBasis::new(*ring.field(), mons.len());
        for p in &ps {
            eb.insert(coeff_vector(p, &index));
        }
        for row in eb.rref() {
            out.push(from_coeff_vector(&ring, &row, &mons));
        }
    }
    out
}

/// Subset of `gens` that minimally generates a homogeneous ideal, chosen
/// greedily in order of increasing degree and then input order.
pub fn minimal_generators(ideal: &Ideal) -> Result<Vec<Polynomial>> {
    if !ideal.is_homogeneous() {
        return Err(Error::Input("minimal generators need a homogeneous ideal".into()));
    }
    let ring = ideal.ring();
    let mut order: Vec<&Polynomial> = ideal.gens().iter().collect();
    order.sort_by_key(|g| g.degree().unwrap());
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut k = 0;
    while k < order.len() {
        let d = order[k].degree().unwrap();
        let mons = monomials_of_degree(ring.nvars(), d);
        let index: HashMap<Monomial, usize> = mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut eb = EchelonBasis::new(*ring.field(), mons.len());
        for g in &kept {
            let e = d - g.degree().unwrap();
            for m in monomials_of_degree(ring.nvars(), e) {
                eb.insert(coeff_vector(&g.mul_term(FieldElem::ONE, &m), &index));
            }
        }
        while k < order.len() && order[k].degree().unwrap() == d {
            if eb.insert(coeff_vector(order[k], &index)) {
                kept.push(order[k].clone());
            }
            k += 1;
        }
    }
    Ok(kept)
}

pub(crate) fn support_index(ps: &[&Polynomial]) -> (HashMap<Monomial, usize>, Vec<Monomial>) {
    let mut mons: Vec<Monomial> = ps.iter().flat_map(|p| p.terms().iter().map(|t| t.mon.clone())).collect();
    if let Some(p) = ps.first() {
        let ord = p.ring().order().clone();
        mons.sort_by(|a, b| ord.cmp(b, a));
    }
    mons.dedup();
    let index = mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    (index, mons)
}

pub(crate) fn coeff_vector(p: &Polynomial, index: &HashMap<Monomial, usize>) -> Vec<FieldElem> {
    let mut v = vec![FieldElem::ZERO; index.len()];
    for t in p.terms() {
        v[index[&t.mon]] = t.coeff;
    }
    v
}

pub(crate) fn from_coeff_vector(ring: &RingRef, v: &[FieldElem], mons: &[Monomial]) -> Polynomial {
    Polynomial::from_terms(ring, v.iter().zip(mons).filter(|(c, _)| !c.is_zero()).map(|(c, m)| (*c, m.clone())))
}

