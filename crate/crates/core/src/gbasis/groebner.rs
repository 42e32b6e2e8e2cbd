//! Buchberger's algorithm with the Gebauer-Moeller criteria.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::polycore::{FieldElem, Monomial, Polynomial, RingRef, Term};

/// Upper bound on reduction steps for one computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub steps: u64,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { steps: u64::MAX };

    pub fn new(steps: u64) -> Self {
        Budget { steps }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::UNLIMITED
    }
}

/// Running step count against a [`Budget`].
#[derive(Debug)]
pub struct StepCounter {
    used: u64,
    limit: u64,
}

impl StepCounter {
    pub fn new(b: Budget) -> Self {
        StepCounter { used: 0, limit: b.steps }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// A reduced Groebner basis: monic, auto-reduced, sorted by increasing
/// leading monomial. Unique for the ideal and the ring's order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingRef,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.leading_monomial().unwrap().clone()).collect()
    }

    /// Wraps a list the caller guarantees to be a reduced basis.
    pub(crate) fn from_reduced(ring: RingRef, polys: Vec<Polynomial>) -> Self {
        GroebnerBasis { ring, polys }
    }
}

pub(crate) struct Reducer {
    pub poly: Polynomial,
    mask: u64,
}

impl Reducer {
    pub fn new(poly: Polynomial) -> Self {
        let mask = poly.leading_monomial().map_or(0, |m| m.support_mask());
        Reducer { poly, mask }
    }

    fn lm(&self) -> &Monomial {
        self.poly.leading_monomial().unwrap()
    }
}

fn find_divisor<'a>(m: &Monomial, reducers: &'a [Reducer], skip: Option<usize>) -> Option<&'a Reducer> {
    let mm = m.support_mask();
    reducers
        .iter()
        .enumerate()
        .find(|(k, r)| Some(*k) != skip && r.mask & !mm == 0 && r.lm().divides(m))
        .map(|(_, r)| r)
}

/// `a - c * m * b`, where `a` and `b` are descending term slices.
fn merge_sub(ring: &RingRef, a: &[Term], c: FieldElem, m: &Monomial, b: &[Term]) -> Vec<Term> {
    let f = ring.field();
    let ord = ring.order();
    let nc = f.neg(c);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut pending: Option<Term> = None;
    loop {
        if pending.is_none() && j < b.len() {
            pending = Some(Term { coeff: f.mul(nc, b[j].coeff), mon: b[j].mon.mul(m) });
            j += 1;
        }
        match (i < a.len(), &pending) {
            (false, None) => break,
            (true, None) => {
                out.extend_from_slice(&a[i..]);
                break;
            }
            (false, Some(_)) => out.push(pending.take().unwrap()),
            (true, Some(t)) => match ord.cmp(&a[i].mon, &t.mon) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => out.push(pending.take().unwrap()),
                std::cmp::Ordering::Equal => {
                    let s = f.add(a[i].coeff, t.coeff);
                    if !s.is_zero() {
                        out.push(Term { coeff: s, mon: t.mon.clone() });
                    }
                    i += 1;
                    pending = None;
                }
            },
        }
    }
    out
}

/// Normal form of `p` against monic reducers. With `full == false` only the
/// leading term is reduced.
pub(crate) fn reduce_terms(
    ring: &RingRef,
    p: Vec<Term>,
    reducers: &[Reducer],
    skip: Option<usize>,
    full: bool,
    counter: &mut StepCounter,
) -> Result<Vec<Term>> {
    let f = ring.field();
    let mut p = p;
    let mut start = 0usize;
    let mut rem: Vec<Term> = Vec::new();
    while start < p.len() {
        let lt = &p[start];
        match find_divisor(&lt.mon, reducers, skip) {
            Some(r) => {
                counter.tick()?;
                let g = r.poly.terms();
                let q = g[0].mon.quotient_of(&lt.mon);
                let c = f.div(lt.coeff, g[0].coeff);
                p = merge_sub(ring, &p[start + 1..], c, &q, &g[1..]);
                start = 0;
            }
            None => {
                if !full {
                    rem.extend(p.drain(start..));
                    break;
                }
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    Ok(rem)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Computes the reduced Groebner basis of `gens` in `ring`'s order.
pub(crate) fn buchberger(ring: &RingRef, gens: &[Polynomial], counter: &mut StepCounter) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Reducer> = Vec::new();
    // pairs keyed by (lcm degree, i, j)
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pair_lcm: std::collections::HashMap<(usize, usize), Monomial> = std::collections::HashMap::new();
    let mut active: Vec<bool> = Vec::new();

    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    input.sort_by(|a, b| {
        let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        ring.order().cmp(la, lb)
    });
    input.dedup();

    let insert = |h: Polynomial,
                  basis: &mut Vec<Reducer>,
                  active: &mut Vec<bool>,
                  queue: &mut BTreeSet<(u32, usize, usize)>,
                  pair_lcm: &mut std::collections::HashMap<(usize, usize), Monomial>| {
        let t = basis.len();
        let lt_h = h.leading_monomial().unwrap().clone();
        // candidate pairs (i, t)
        let mut cands: Vec<Pair> = (0..t)
            .filter(|&i| active[i])
            .map(|i| Pair { i, j: t, lcm: basis[i].lm().lcm(&lt_h) })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = (!cands.is_empty()).then(|| cands.remove(0)) {
            let coprime = basis[p.i].lm().is_coprime(&lt_h);
            if coprime
                || !cands.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm))
            {
                kept.push(p);
            }
        }
        kept.retain(|p| !basis[p.i].lm().is_coprime(&lt_h));
        // Buchberger's chain criterion on old pairs
        let stale: Vec<(u32, usize, usize)> = queue
            .iter()
            .filter(|&&(_, i, j)| {
                let l = &pair_lcm[&(i, j)];
                lt_h.divides(l)
                    && &basis[i].lm().lcm(&lt_h) != l
                    && &basis[j].lm().lcm(&lt_h) != l
            })
            .copied()
            .collect();
        for k in stale {
            queue.remove(&k);
            pair_lcm.remove(&(k.1, k.2));
        }
        for p in kept {
            queue.insert((p.lcm.degree(), p.i, p.j));
            pair_lcm.insert((p.i, p.j), p.lcm);
        }
        for (i, a) in active.iter_mut().enumerate() {
            if *a && lt_h.divides(basis[i].lm()) {
                *a = false;
            }
        }
        basis.push(Reducer::new(h));
        active.push(true);
    };

    for g in input {
        counter.tick()?;
        let r = reduce_terms(ring, g.into_terms(), &basis, None, true, counter)?;
        if r.is_empty() {
            continue;
        }
        let h = Polynomial::from_sorted(ring, r).monic();
        if h.is_constant() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        insert(h, &mut basis, &mut active, &mut queue, &mut pair_lcm);
    }

    while let Some(key) = queue.pop_first() {
        counter.tick()?;
        let (_, i, j) = key;
        let lcm = pair_lcm.remove(&(i, j)).unwrap();
        let (gi, gj) = (&basis[i].poly, &basis[j].poly);
        let mi = gi.leading_monomial().unwrap().quotient_of(&lcm);
        let mj = gj.leading_monomial().unwrap().quotient_of(&lcm);
        let a = gi.mul_term(FieldElem::ONE, &mi);
        let s = merge_sub(ring, &a.terms()[1..], FieldElem::ONE, &mj, &gj.terms()[1..]);
        let r = reduce_terms(ring, s, &basis, None, true, counter)?;
        if r.is_empty() {
            continue;
        }
        let h = Polynomial::from_sorted(ring, r).monic();
        if h.is_constant() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        insert(h, &mut basis, &mut active, &mut queue, &mut pair_lcm);
    }

    interreduce(ring, basis.into_iter().map(|r| r.poly).collect(), counter)
}

/// Turns a Groebner basis into the reduced one.
pub(crate) fn interreduce(ring: &RingRef, polys: Vec<Polynomial>, counter: &mut StepCounter) -> Result<Vec<Polynomial>> {
    let ord = ring.order();
    let mut polys: Vec<Polynomial> = polys.into_iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    polys.sort_by(|a, b| ord.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    // minimal: drop anything whose leading monomial is divisible by an earlier (smaller) one
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in polys {
        let lm = p.leading_monomial().unwrap();
        if !minimal.iter().any(|q| q.leading_monomial().unwrap().divides(lm)) {
            minimal.push(p);
        }
    }
    let reducers: Vec<Reducer> = minimal.iter().cloned().map(Reducer::new).collect();
    let mut out = Vec::with_capacity(minimal.len());
    for (k, p) in minimal.iter().enumerate() {
        let mut terms = p.terms().to_vec();
        let head = terms.remove(0);
        let mut tail = reduce_terms(ring, terms, &reducers, Some(k), true, counter)?;
        tail.insert(0, head);
        out.push(Polynomial::from_sorted(ring, tail));
    }
    Ok(out)
}

/// Runs Buchberger and wraps the output.
pub fn compute_groebner(ring: &RingRef, gens: &[Polynomial], budget: Budget) -> Result<GroebnerBasis> {
    for g in gens {
        if !crate::polycore::same_ring(g.ring(), ring) {
            return Err(Error::RingMismatch);
        }
    }
    let mut counter = StepCounter::new(budget);
    let polys = buchberger(ring, gens, &mut counter)?;
    Ok(GroebnerBasis { ring: ring.clone(), polys })
}

/// Full normal form of `f` with respect to `gb`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if !crate::polycore::same_ring(f.ring(), &gb.ring) {
        return Err(Error::RingMismatch);
    }
    let reducers: Vec<Reducer> = gb.polys.iter().cloned().map(Reducer::new).collect();
    let mut counter = StepCounter::new(Budget::UNLIMITED);
    let r = reduce_terms(&gb.ring, f.terms().to_vec(), &reducers, None, true, &mut counter)?;
    Ok(Polynomial::from_sorted(&gb.ring, r))
}

/// S-polynomial of two basis members.
pub fn s_polynomial(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (la, lb) = (a.leading_term().unwrap(), b.leading_term().unwrap());
    let l = la.mon.lcm(&lb.mon);
    let f = a.ring().field();
    let ma = la.mon.quotient_of(&l);
    let mb = lb.mon.quotient_of(&l);
    let left = a.mul_term(f.inv(la.coeff), &ma);
    let right = b.mul_term(f.inv(lb.coeff), &mb);
    &left - &right
}

/// Buchberger's criterion, checked pair by pair.
pub fn satisfies_buchberger_criterion(gb: &GroebnerBasis) -> Result<bool> {
    for i in 0..gb.polys.len() {
        for j in i + 1..gb.polys.len() {
            let s = s_polynomial(&gb.polys[i], &gb.polys[j]);
            if !normal_form(&s, gb)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True when the basis is monic, minimal and tail-reduced.
pub fn is_reduced(gb: &GroebnerBasis) -> bool {
    let lms = gb.leading_monomials();
    gb.polys.iter().enumerate().all(|(k, p)| {
        p.leading_coeff() == Some(FieldElem::ONE)
            && p.terms().iter().all(|t| lms.iter().enumerate().all(|(l, m)| l == k && t.mon == *m || !m.divides(&t.mon)))
    })
}
