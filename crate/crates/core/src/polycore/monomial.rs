//! Monomials and monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 16]>;

/// Exponent vector with its cached total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn new<I: IntoIterator<Item = u16>>(exps: I) -> Self {
        let exps: Exponents = exps.into_iter().collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: smallvec::smallvec![0; nvars], degree: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        }
    }

    pub fn div(&self, divisor: &Monomial) -> Option<Monomial> {
        divisor.divides(self).then(|| divisor.quotient_of(self))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i % 64` set when variable `i` occurs; used to reject divisibility quickly.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
    }

    /// Re-indexes variables: variable `i` of `self` becomes variable `map[i]` of a
    /// ring with `nvars` variables.
    pub fn embed(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut exps: Exponents = smallvec::smallvec![0; nvars];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[map[i]] += e;
        }
        Monomial { exps, degree: self.degree }
    }

    /// Degree restricted to the variables in `range`.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }
}

/// The shapes of monomial order the engine supports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    GRevLex,
    Lex,
    /// Product of two graded reverse lexicographic orders; the first block is
    /// compared first, so it is eliminated.
    BlockElim { first: usize },
}

/// A monomial order together with the precedence of the variables.
///
/// `perm[k]` is the variable sitting at position `k`; position 0 is the largest
/// variable. `None` means the natural order `x_0 > x_1 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub perm: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn grevlex() -> Self {
        MonomialOrder { kind: OrderKind::GRevLex, perm: None }
    }

    pub fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, perm: None }
    }

    pub fn block_elim(first: usize) -> Self {
        MonomialOrder { kind: OrderKind::BlockElim { first }, perm: None }
    }

    /// Grevlex in which variable `v` is the smallest of `nvars` variables.
    pub fn grevlex_with_last(nvars: usize, v: usize) -> Self {
        let mut perm: Vec<usize> = (0..nvars).filter(|&i| i != v).collect();
        perm.push(v);
        MonomialOrder { kind: OrderKind::GRevLex, perm: Some(perm) }
    }

    pub fn is_graded(&self) -> bool {
        matches!(self.kind, OrderKind::GRevLex)
    }

    #[inline]
    fn pos(&self, k: usize) -> usize {
        match &self.perm {
            Some(p) => p[k],
            None => k,
        }
    }

    fn grevlex_range(&self, a: &[u16], b: &[u16], lo: usize, hi: usize) -> Ordering {
        let (mut da, mut db) = (0u32, 0u32);
        for k in lo..hi {
            let v = self.pos(k);
            da += a[v] as u32;
            db += b[v] as u32;
        }
        if da != db {
            return da.cmp(&db);
        }
        for k in (lo..hi).rev() {
            let v = self.pos(k);
            if a[v] != b[v] {
                return b[v].cmp(&a[v]);
            }
        }
        Ordering::Equal
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.exps.len();
        match self.kind {
            OrderKind::GRevLex => {
                if a.degree != b.degree {
                    return a.degree.cmp(&b.degree);
                }
                for k in (0..n).rev() {
                    let v = self.pos(k);
                    if a.exps[v] != b.exps[v] {
                        return b.exps[v].cmp(&a.exps[v]);
                    }
                }
                Ordering::Equal
            }
            OrderKind::Lex => {
                for k in 0..n {
                    let v = self.pos(k);
                    if a.exps[v] != b.exps[v] {
                        return a.exps[v].cmp(&b.exps[v]);
                    }
                }
                Ordering::Equal
            }
            OrderKind::BlockElim { first } => {
                let first = first.min(n);
                self.grevlex_range(&a.exps, &b.exps, 0, first)
                    .then_with(|| self.grevlex_range(&a.exps, &b.exps, first, n))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::grevlex();
        // x^2 > xy > y^2 > xz > yz > z^2 in three variables
        let seq = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        for w in seq.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn lex_basics() {
        let o = MonomialOrder::lex();
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 7])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let o = MonomialOrder::block_elim(2);
        assert_eq!(o.cmp(&m(&[0, 1, 0, 0]), &m(&[0, 0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 1, 0]), &m(&[1, 0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn permuted_grevlex_puts_variable_last() {
        let o = MonomialOrder::grevlex_with_last(3, 0);
        // with x smallest: y^2 > y z > z^2 > x y
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn monomial_arith() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 1]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 1, 0]));
        assert!(m(&[1, 1, 0]).divides(&a));
        assert_eq!(a.div(&m(&[1, 0, 0])), Some(m(&[1, 1, 0])));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.mul(&b).degree(), 8);
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::grevlex(),
            MonomialOrder::lex(),
            MonomialOrder::block_elim(2),
            MonomialOrder::grevlex_with_last(4, 1),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn orders_are_total_and_multiplicative(
            a in proptest::collection::vec(0u16..5, 4),
            b in proptest::collection::vec(0u16..5, 4),
            c in proptest::collection::vec(0u16..5, 4),
        ) {
            let (a, b, c) = (m(&a), m(&b), m(&c));
            for o in orders() {
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
                // refines divisibility
                if a.divides(&b) && a != b {
                    prop_assert_eq!(ab, Ordering::Less);
                }
                // transitivity on the triple
                if ab == Ordering::Less && o.cmp(&b, &c) == Ordering::Less {
                    prop_assert_eq!(o.cmp(&a, &c), Ordering::Less);
                }
            }
        }
    }
}

/// All monomials of total degree `deg` in `nvars` variables, in descending
/// grevlex order with the natural variable precedence.
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        if deg == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut cur: Exponents = smallvec::smallvec![0; nvars];
    fn rec(i: usize, left: u32, cur: &mut Exponents, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i == n - 1 {
            cur[i] = left as u16;
            out.push(Monomial::new(cur.iter().copied()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, deg, &mut cur, &mut out);
    let o = MonomialOrder::grevlex();
    out.sort_by(|a, b| o.cmp(b, a));
    out
}

/// `binom(n, k)` with saturation on overflow.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc.min(u64::MAX as u128) as u64
}

/// Number of monomials of degree `deg` in `nvars` variables.
pub fn monomial_count(nvars: usize, deg: u32) -> u64 {
    if nvars == 0 {
        return (deg == 0) as u64;
    }
    binomial(deg as u64 + nvars as u64 - 1, nvars as u64 - 1)
}

#[cfg(test)]
mod enumeration_tests {
    use super::*;

    #[test]
    fn counts_match_binomials() {
        for n in 1..5 {
            for d in 0..6 {
                assert_eq!(monomials_of_degree(n, d).len() as u64, monomial_count(n, d));
            }
        }
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(3, 5), 0);
    }
}
