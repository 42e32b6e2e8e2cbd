//! Hilbert functions and series through leading-term ideals.

use serde::Serialize;

use crate::error::Result;
use crate::gbasis::{Budget, Ideal};
use crate::polycore::{binomial, monomial_count, Monomial};

/// Hilbert series `N(t) / (1 - t)^n` of `S/I` together with derived data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// Coefficients of `N(t)`, lowest degree first.
    pub numerator: Vec<i64>,
    pub nvars: usize,
    /// Krull dimension of `S/I`.
    pub dimension: usize,
    /// Degree of `S/I`, the numerator of the reduced series at `t = 1`.
    pub multiplicity: i64,
    /// `h(0), h(1), ...` on the requested window.
    pub window: Vec<u64>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_sub(a: &mut Vec<i64>, b: &[i64], shift: usize, sign: i64) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, &c) in b.iter().enumerate() {
        a[k + shift] -= sign * c;
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    if v.is_empty() {
        v.push(0);
    }
    v
}

/// Numerator of the Hilbert series of `S/(gens)` for a monomial ideal.
pub fn monomial_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    trim(numerator_rec(minimalize(gens.to_vec()), nvars))
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    // pure powers of distinct variables: product of (1 - t^a)
    let pure = gens.iter().all(|g| g.exps().iter().filter(|&&e| e > 0).count() == 1);
    if pure {
        let mut acc = vec![1i64];
        for g in &gens {
            let a = g.degree() as usize;
            let mut next = acc.clone();
            poly_sub(&mut next, &acc, a, 1);
            acc = next;
        }
        return acc;
    }
    // pivot on the variable occurring in most mixed generators
    let mut count = vec![0usize; nvars];
    for g in gens.iter().filter(|g| g.exps().iter().filter(|&&e| e > 0).count() > 1) {
        for (v, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                count[v] += 1;
            }
        }
    }
    let v = (0..nvars).max_by_key(|&v| (count[v], std::cmp::Reverse(v))).unwrap();
    let mut es: Vec<u16> = gens
        .iter()
        .filter(|g| g.exps().iter().filter(|&&e| e > 0).count() > 1)
        .map(|g| g.exp(v))
        .filter(|&e| e > 0)
        .collect();
    es.sort_unstable();
    let e = es[(es.len() - 1) / 2];
    let mut pe = vec![0u16; nvars];
    pe[v] = e;
    let pivot = Monomial::new(pe);
    // N(J) = N(J + (p)) + t^deg(p) N(J : p)
    let mut with_p = gens.clone();
    with_p.push(pivot.clone());
    let quotient: Vec<Monomial> = gens.iter().map(|g| g.div(&g.gcd(&pivot)).unwrap()).collect();
    let mut out = numerator_rec(minimalize(with_p), nvars);
    let q = numerator_rec(minimalize(quotient), nvars);
    poly_sub(&mut out, &q, e as usize, -1);
    out
}

/// Number of monomials of degree `t` outside the monomial ideal.
pub fn standard_monomial_count(lead: &[Monomial], nvars: usize, t: u32) -> u64 {
    crate::polycore::monomials_of_degree(nvars, t)
        .iter()
        .filter(|m| !lead.iter().any(|l| l.divides(m)))
        .count() as u64
}

fn leading_monomials(ideal: &Ideal, budget: Budget) -> Result<Vec<Monomial>> {
    Ok(ideal.groebner(budget)?.leading_monomials())
}

/// `dim_k (S/I)_t`.
pub fn hilbert_function_quotient(ideal: &Ideal, t: u32, budget: Budget) -> Result<u64> {
    let n = ideal.ring().nvars();
    Ok(standard_monomial_count(&leading_monomials(ideal, budget)?, n, t))
}

/// `dim_k I_t`.
pub fn hilbert_function(ideal: &Ideal, t: u32, budget: Budget) -> Result<u64> {
    let n = ideal.ring().nvars();
    Ok(monomial_count(n, t) - hilbert_function_quotient(ideal, t, budget)?)
}

/// Expansion of `N(t) / (1 - t)^n` up to degree `top`.
pub fn series_coefficients(numerator: &[i64], nvars: usize, top: u32) -> Vec<i64> {
    (0..=top)
        .map(|t| {
            numerator
                .iter()
                .enumerate()
                .filter(|(k, _)| *k as u32 <= t)
                .map(|(k, &c)| c * monomial_count(nvars, t - k as u32) as i64)
                .sum()
        })
        .collect()
}

/// Removes all factors `1 - t` from `num`, returning the quotient and the count.
pub fn clear_pole(num: &[i64]) -> (Vec<i64>, usize) {
    let mut q = trim(num.to_vec());
    let mut k = 0;
    if q == [0] {
        return (q, 0);
    }
    while q.iter().sum::<i64>() == 0 {
        // synthetic division by (1 - t)
        let mut out = vec![0i64; q.len() - 1];
        let mut acc = 0i64;
        for (i, c) in q.iter().enumerate().take(q.len() - 1) {
            acc += c;
            out[i] = acc;
        }
        q = trim(out);
        k += 1;
    }
    (q, k)
}

/// Series, dimension and degree of `S/I`.
pub fn hilbert_data(ideal: &Ideal, window: u32, budget: Budget) -> Result<HilbertData> {
    let n = ideal.ring().nvars();
    let lead = leading_monomials(ideal, budget)?;
    let numerator = monomial_numerator(&lead, n);
    let (reduced, k) = clear_pole(&numerator);
    let dimension = n - k.min(n);
    let multiplicity = reduced.iter().sum();
    let window = (0..=window).map(|t| standard_monomial_count(&lead, n, t)).collect();
    Ok(HilbertData { numerator, nvars: n, dimension, multiplicity, window })
}

/// `binom(t + n - 1, n - 1)`, the dimension of `S_t`.
pub fn ambient_dimension(nvars: usize, t: u32) -> u64 {
    if nvars == 0 {
        return (t == 0) as u64;
    }
    binomial(t as u64 + nvars as u64 - 1, nvars as u64 - 1)
}
