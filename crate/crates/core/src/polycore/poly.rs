//! Sparse multivariate polynomials with terms kept strictly descending.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::FieldElem;
use super::monomial::Monomial;
use super::ring::{same_ring, Ring, RingRef};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: FieldElem,
    pub mon: Monomial,
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state)
    }
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![Term { coeff: c, mon: Monomial::one(ring.nvars()) }] }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, FieldElem::ONE)
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::term(ring, FieldElem::ONE, Monomial::var(ring.nvars(), i))
    }

    pub fn term(ring: &RingRef, c: FieldElem, mon: Monomial) -> Self {
        assert_eq!(mon.nvars(), ring.nvars());
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![Term { coeff: c, mon }] }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (FieldElem, Monomial)>) -> Self {
        let mut v: Vec<Term> = terms
            .into_iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(coeff, mon)| Term { coeff, mon })
            .collect();
        sort_and_combine(ring, &mut v);
        Polynomial { ring: ring.clone(), terms: v }
    }

    /// Wraps terms already in canonical order. Checked in debug builds.
    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].mon, &w[1].mon) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mon.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mon)
    }

    pub fn leading_coeff(&self) -> Option<FieldElem> {
        self.terms.first().map(|t| t.coeff)
    }

    /// Maximum total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mon.degree()).max()
    }

    /// Common degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.mon.degree();
        self.terms.iter().all(|t| t.mon.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn coeff_of(&self, mon: &Monomial) -> FieldElem {
        self.terms.iter().find(|t| &t.mon == mon).map(|t| t.coeff).unwrap_or(FieldElem::ZERO)
    }

    pub fn constant_coeff(&self) -> FieldElem {
        match self.terms.last() {
            Some(t) if t.mon.is_one() => t.coeff,
            _ => FieldElem::ZERO,
        }
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.mon.exp(i) > 0)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.add_scaled(FieldElem::ONE, &Monomial::one(self.ring.nvars()), other))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let f = self.ring.field();
        Ok(self.add_scaled(f.neg(FieldElem::ONE), &Monomial::one(self.ring.nvars()), other))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// `self + c * m * other` in one merge pass.
    pub fn add_scaled(&self, c: FieldElem, m: &Monomial, other: &Polynomial) -> Polynomial {
        let ring = &self.ring;
        let f = ring.field();
        let ord = ring.order();
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|t| Term { coeff: f.mul(c, t.coeff), mon: t.mon.mul(m) }).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match ord.cmp(&x.mon, &y.mon) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let s = f.add(x.coeff, y.coeff);
                        let mon = y.mon.clone();
                        a.next();
                        b.next();
                        if !s.is_zero() {
                            out.push(Term { coeff: s, mon });
                        }
                    }
                },
            }
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            return other.mul_term(t.coeff, &t.mon);
        }
        if other.terms.len() == 1 {
            let t = &other.terms[0];
            return self.mul_term(t.coeff, &t.mon);
        }
        let f = self.ring.field();
        let mut v = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                v.push(Term { coeff: f.mul(a.coeff, b.coeff), mon: a.mon.mul(&b.mon) });
            }
        }
        sort_and_combine(&self.ring, &mut v);
        Polynomial { ring: self.ring.clone(), terms: v }
    }

    pub fn mul_term(&self, c: FieldElem, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let f = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|t| Term { coeff: f.mul(c, t.coeff), mon: t.mon.mul(m) }).collect(),
        }
    }

    pub fn scale(&self, c: FieldElem) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    pub fn scale_int(&self, c: i64) -> Polynomial {
        self.scale(self.ring.field().elem(c))
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c == FieldElem::ONE => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c)),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    pub fn evaluate(&self, point: &[FieldElem]) -> Result<FieldElem> {
        if point.len() != self.ring.nvars() {
            return Err(Error::Dimension { expected: self.ring.nvars(), got: point.len() });
        }
        let f = self.ring.field();
        let mut acc = FieldElem::ZERO;
        for t in &self.terms {
            let mut v = t.coeff;
            for (i, &e) in t.mon.exps().iter().enumerate() {
                if e > 0 {
                    v = f.mul(v, f.pow(point[i], e as u64));
                }
            }
            acc = f.add(acc, v);
        }
        Ok(acc)
    }

    /// Same polynomial viewed in `target`, which must have the same variables
    /// and field (typically a different order).
    pub fn to_ring(&self, target: &RingRef) -> Polynomial {
        assert_eq!(target.nvars(), self.ring.nvars(), "variable count mismatch");
        assert_eq!(target.field(), self.ring.field(), "field mismatch");
        if same_ring(target, &self.ring) {
            return Polynomial { ring: target.clone(), terms: self.terms.clone() };
        }
        let mut v = self.terms.clone();
        v.sort_by(|a, b| target.order().cmp(&b.mon, &a.mon));
        Polynomial { ring: target.clone(), terms: v }
    }

    /// Moves variable `i` to variable `map[i]` of `target`.
    pub fn embed(&self, target: &RingRef, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ring.nvars());
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|t| (t.coeff, t.mon.embed(map, target.nvars()))),
        )
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Dimension { expected: self.ring.nvars(), got: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        for p in images {
            if !same_ring(&p.ring, &target) {
                return Err(Error::RingMismatch);
            }
        }
        let mut acc = Polynomial::zero(&target);
        for t in &self.terms {
            let mut v = Polynomial::constant(&target, t.coeff);
            for (i, &e) in t.mon.exps().iter().enumerate() {
                if e > 0 {
                    v = v.mul_unchecked(&images[i].pow(e as u32));
                }
            }
            acc = &acc + &v;
        }
        Ok(acc)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let dl = d.leading_term()?;
        let f = self.ring.field();
        let inv = f.inv(dl.coeff);
        let mut rem = self.clone();
        let mut q = Vec::new();
        while let Some(t) = rem.leading_term() {
            let m = t.mon.div(&dl.mon)?;
            let c = f.mul(t.coeff, inv);
            rem = rem.add_scaled(f.neg(c), &m, d);
            q.push(Term { coeff: c, mon: m });
        }
        Some(Polynomial::from_sorted(&self.ring, q))
    }

    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>, ring: &Ring) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let c = ring.field().signed(t.coeff);
            let (neg, abs) = (c < 0, c.unsigned_abs());
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut parts: Vec<String> = Vec::new();
            for (i, &e) in t.mon.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(ring.names()[i].clone()),
                    _ => parts.push(format!("{}^{}", ring.names()[i], e)),
                }
            }
            if parts.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{}", parts.join("*"))?;
            } else {
                write!(f, "{abs}*{}", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

fn sort_and_combine(ring: &Ring, v: &mut Vec<Term>) {
    let ord = ring.order();
    let f = ring.field();
    v.sort_by(|a, b| ord.cmp(&b.mon, &a.mon));
    let mut out: Vec<Term> = Vec::with_capacity(v.len());
    for t in v.drain(..) {
        match out.last_mut() {
            Some(last) if last.mon == t.mon => {
                last.coeff = f.add(last.coeff, t.coeff);
                if last.coeff.is_zero() {
                    out.pop();
                }
            }
            _ => out.push(t),
        }
    }
    *v = out;
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.ring.clone();
        self.fmt_with(f, &ring)
    }
}

// Operator forms panic on mismatched rings; use the `checked_*` methods when
// the operands come from untrusted sources.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let f = *self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|t| Term { coeff: f.neg(t.coeff), mon: t.mon.clone() }).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::field::PrimeField;

    fn ring(p: u64, names: &[&str]) -> RingRef {
        Ring::with_names(PrimeField::new(p).unwrap(), names)
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(32003, &["x", "y"]);
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p, &(&x * &x) - &(&y * &y));
        assert_eq!(p.to_string(), "x^2 - y^2");
    }

    #[test]
    fn adding_zero_is_identity() {
        let r = ring(32003, &["x", "y"]);
        let f = &Polynomial::var(&r, 0) + &Polynomial::constant(&r, r.field().elem(3));
        assert_eq!(&f + &Polynomial::zero(&r), f);
    }

    #[test]
    fn characteristic_five_product() {
        let r = ring(5, &["x"]);
        let x = Polynomial::var(&r, 0);
        let p = &x.scale_int(2) * &x.scale_int(3);
        assert_eq!(p, &x * &x);
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let r1 = ring(32003, &["x", "y"]);
        let r2 = ring(32003, &["u", "v"]);
        let e = Polynomial::var(&r1, 0).checked_add(&Polynomial::var(&r2, 0));
        assert_eq!(e, Err(Error::RingMismatch));
    }

    #[test]
    fn evaluation() {
        let r = ring(7, &["x", "y"]);
        let f = r.field();
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let p = &(&x * &x) - &y;
        assert_eq!(p.evaluate(&[f.elem(2), f.elem(4)]).unwrap(), FieldElem::ZERO);
        assert_eq!(Polynomial::one(&r).evaluate(&[f.elem(5), f.elem(6)]).unwrap(), FieldElem::ONE);
        assert!(p.evaluate(&[f.elem(1)]).is_err());

        let r4 = ring(32003, &["x", "y", "T1", "T2"]);
        let v: Vec<_> = (0..4).map(|i| Polynomial::var(&r4, i)).collect();
        let q = &(&v[0] * &v[2]) - &(&v[1] * &v[3]);
        let one = r4.field().elem(1);
        assert_eq!(q.evaluate(&[one; 4]).unwrap(), FieldElem::ZERO);
    }

    #[test]
    fn exact_division() {
        let r = ring(32003, &["x", "y"]);
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let a = &(&x + &y) * &(&(&x * &y) - &y);
        assert_eq!(a.div_exact(&(&x + &y)).unwrap(), &(&x * &y) - &y);
        assert!(a.div_exact(&(&x - &y)).is_none());
    }

    #[test]
    fn substitution_is_a_ring_map() {
        let r = ring(32003, &["x", "y"]);
        let b = ring(32003, &["T1", "T2", "T3"]);
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let imgs = vec![&x * &x, &x * &y, &y * &y];
        let t: Vec<_> = (0..3).map(|i| Polynomial::var(&b, i)).collect();
        let conic = &(&t[0] * &t[2]) - &(&t[1] * &t[1]);
        assert!(conic.substitute(&imgs).unwrap().is_zero());
    }
}
