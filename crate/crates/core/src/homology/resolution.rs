//! Schreyer resolutions and graded Betti numbers.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gbasis::groebner::StepCounter;
use crate::gbasis::{Budget, Ideal};
use crate::polycore::linalg::rank;
use crate::polycore::{FieldElem, Monomial, MonomialOrder, PrimeField};

/// Whether a table resolves the ideal `I` or the quotient `S/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Ideal,
    Quotient,
}

/// Graded Betti numbers `β_{i,j}` of a minimal free resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBettiTable {
    entries: BTreeMap<(usize, u32), u64>,
    nvars: usize,
    convention: Convention,
    complete: bool,
}

impl GradedBettiTable {
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries keyed by `(i, j)`.
    pub fn entries(&self) -> &BTreeMap<(usize, u32), u64> {
        &self.entries
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// False when the resolution was cut off before it ended.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Largest `i` with a nonzero row.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Total Betti number `β_i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, v)| v).sum()
    }

    /// Degrees `j` with `β_{i,j} != 0`.
    pub fn degrees(&self, i: usize) -> Vec<u32> {
        self.entries.keys().filter(|(k, _)| *k == i).map(|&(_, j)| j).collect()
    }

    /// The table of the other convention: `S/I` shifts homological degree up
    /// by one and gains `β_{0,0} = 1`.
    pub fn converted(&self, to: Convention) -> GradedBettiTable {
        if to == self.convention {
            return self.clone();
        }
        let entries = match to {
            Convention::Quotient => {
                let mut e: BTreeMap<(usize, u32), u64> = self.entries.iter().map(|(&(i, j), &v)| ((i + 1, j), v)).collect();
                e.insert((0, 0), 1);
                e
            }
            Convention::Ideal => self
                .entries
                .iter()
                .filter(|((i, _), _)| *i > 0)
                .map(|(&(i, j), &v)| ((i - 1, j), v))
                .collect(),
        };
        GradedBettiTable { entries, nvars: self.nvars, convention: to, complete: self.complete }
    }

    /// `Σ_{i,j} (-1)^i β_{i,j} t^j` as coefficients indexed by `j`.
    pub fn alternating_sum(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        let mut out = vec![0i64; top + 1];
        for (&(i, j), &v) in &self.entries {
            let s = if i % 2 == 0 { 1 } else { -1 };
            out[j as usize] += s * v as i64;
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }
}

impl Serialize for GradedBettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let entries: Vec<[u64; 3]> = self.entries.iter().map(|(&(i, j), &v)| [i as u64, j as u64, v]).collect();
        let mut st = s.serialize_struct("GradedBettiTable", 4)?;
        st.serialize_field("entries", &entries)?;
        st.serialize_field("nvars", &self.nvars)?;
        st.serialize_field("convention", &self.convention)?;
        st.serialize_field("complete", &self.complete)?;
        st.end()
    }
}

impl fmt::Display for GradedBettiTable {
    /// Macaulay-style layout: column `i`, row `j - i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(zero)");
        }
        let pd = self.projective_dimension().unwrap();
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let (lo, hi) = (rows[0], *rows.last().unwrap());
        write!(f, "{:>6}", "")?;
        for i in 0..=pd {
            write!(f, "{i:>6}")?;
        }
        writeln!(f)?;
        write!(f, "{:>6}", "total:")?;
        for i in 0..=pd {
            write!(f, "{:>6}", self.total(i))?;
        }
        writeln!(f)?;
        for row in lo..=hi {
            write!(f, "{:>6}", format!("{row}:"))?;
            for i in 0..=pd {
                let j = row + i as i64;
                let v = if j >= 0 { self.get(i, j as u32) } else { 0 };
                if v == 0 {
                    write!(f, "{:>6}", ".")?;
                } else {
                    write!(f, "{v:>6}")?;
                }
            }
            writeln!(f)?;
        }
        if !self.complete {
            writeln!(f, "(truncated)")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct MTerm {
    coeff: FieldElem,
    mon: Monomial,
    comp: usize,
    tot: Monomial,
}

/// One level of the frame: basis elements of `F_k`, each with its leading
/// term `mon * e_comp` in `F_{k-1}` and its full image there.
#[derive(Debug, Default)]
struct Level {
    lead: Vec<Monomial>,
    comp: Vec<usize>,
    total: Vec<Monomial>,
    path: Vec<Vec<u32>>,
    vecs: Vec<Vec<MTerm>>,
}

impl Level {
    fn len(&self) -> usize {
        self.lead.len()
    }

    fn degree(&self, a: usize) -> u32 {
        self.total[a].degree()
    }
}

fn cmp_path(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

struct Ctx<'a> {
    order: &'a MonomialOrder,
    field: PrimeField,
}

impl Ctx<'_> {
    fn cmp(&self, level: &Level, a: &MTerm, b: &MTerm) -> Ordering {
        self.order.cmp(&a.tot, &b.tot).then_with(|| cmp_path(&level.path[a.comp], &level.path[b.comp]))
    }

    fn sort(&self, level: &Level, v: &mut Vec<MTerm>) {
        v.sort_by(|a, b| self.cmp(level, b, a));
        // combine equal terms
        let mut out: Vec<MTerm> = Vec::with_capacity(v.len());
        for t in v.drain(..) {
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.mon == t.mon => last.coeff = self.field.add(last.coeff, t.coeff),
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        *v = out;
    }

    fn term(&self, level: &Level, coeff: FieldElem, mon: Monomial, comp: usize) -> MTerm {
        let tot = mon.mul(&level.total[comp]);
        MTerm { coeff, mon, comp, tot }
    }

    /// `a - c * m * b` on descending vectors of one level.
    fn sub_mul(&self, level: &Level, a: &[MTerm], c: FieldElem, m: &Monomial, b: &[MTerm]) -> Vec<MTerm> {
        let f = self.field;
        let nc = f.neg(c);
        let scaled = b.iter().map(|t| MTerm { coeff: f.mul(nc, t.coeff), mon: t.mon.mul(m), comp: t.comp, tot: t.tot.mul(m) });
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut ai = a.iter().peekable();
        let mut bi = scaled.peekable();
        loop {
            match (ai.peek(), bi.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(ai.next().unwrap().clone()),
                (None, Some(_)) => out.push(bi.next().unwrap()),
                (Some(x), Some(y)) => match self.cmp(level, x, y) {
                    Ordering::Greater => out.push(ai.next().unwrap().clone()),
                    Ordering::Less => out.push(bi.next().unwrap()),
                    Ordering::Equal => {
                        let s = f.add(x.coeff, y.coeff);
                        let t = ai.next().unwrap();
                        bi.next();
                        if !s.is_zero() {
                            out.push(MTerm { coeff: s, ..t.clone() });
                        }
                    }
                },
            }
        }
        out
    }
}

fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.exps().cmp(b.exps())
}

/// Builds the next level from the pairs of `cur`, whose images live in `below`.
fn next_level(ctx: &Ctx, below: &Level, cur: &Level, counter: &mut StepCounter) -> Result<Level> {
    let mut by_comp: HashMap<usize, Vec<usize>> = HashMap::new();
    for a in 0..cur.len() {
        by_comp.entry(cur.comp[a]).or_default().push(a);
    }
    // (a, quotient monomial, partner)
    let mut pairs: Vec<(usize, Monomial, usize)> = Vec::new();
    for a in 0..cur.len() {
        let mut cands: Vec<(Monomial, usize)> = by_comp[&cur.comp[a]]
            .iter()
            .filter(|&&b| b > a)
            .map(|&b| (cur.lead[a].lcm(&cur.lead[b]).div(&cur.lead[a]).unwrap(), b))
            .collect();
        cands.sort_by(|x, y| x.0.degree().cmp(&y.0.degree()).then(x.1.cmp(&y.1)));
        let mut kept: Vec<(Monomial, usize)> = Vec::new();
        for (q, b) in cands {
            if !kept.iter().any(|(k, _)| k.divides(&q)) {
                kept.push((q, b));
            }
        }
        for (q, b) in kept {
            pairs.push((a, q, b));
        }
    }
    pairs.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| lex_cmp(&y.1, &x.1)));

    let mut next = Level::default();
    for (a, q, b) in &pairs {
        counter.tick()?;
        let l = cur.lead[*a].lcm(&cur.lead[*b]);
        let qb = l.div(&cur.lead[*b]).unwrap();
        let ca = cur.vecs[*a][0].coeff;
        let cb = cur.vecs[*b][0].coeff;
        let ratio = ctx.field.div(ca, cb);
        let mut syz = vec![
            ctx.term(cur, FieldElem::ONE, q.clone(), *a),
            ctx.term(cur, ctx.field.neg(ratio), qb.clone(), *b),
        ];
        let scaled_a: Vec<MTerm> = ctx.sub_mul(below, &[], ctx.field.neg(FieldElem::ONE), q, &cur.vecs[*a]);
        let mut rem = ctx.sub_mul(below, &scaled_a, ratio, &qb, &cur.vecs[*b]);
        while let Some(lt) = rem.first().cloned() {
            counter.tick()?;
            let reducer = by_comp
                .get(&lt.comp)
                .and_then(|list| list.iter().copied().find(|&c| cur.lead[c].divides(&lt.mon)));
            let Some(c) = reducer else {
                return Err(Error::Input("resolution frame is not a Groebner basis".into()));
            };
            let m = lt.mon.div(&cur.lead[c]).unwrap();
            let k = ctx.field.div(lt.coeff, cur.vecs[c][0].coeff);
            rem = ctx.sub_mul(below, &rem, k, &m, &cur.vecs[c]);
            syz.push(ctx.term(cur, ctx.field.neg(k), m, c));
        }
        ctx.sort(cur, &mut syz);
        next.lead.push(q.clone());
        next.comp.push(*a);
        next.total.push(q.mul(&cur.total[*a]));
        next.vecs.push(syz);
    }
    for (idx, a) in next.comp.iter().enumerate() {
        let mut p = cur.path[*a].clone();
        p.push(idx as u32);
        next.path.push(p);
    }
    Ok(next)
}

/// Rank, degree by degree, of the constant part of `F_k -> F_{k-1}`.
fn constant_ranks(field: PrimeField, upper: &Level, lower: &Level) -> HashMap<u32, usize> {
    let mut by_deg: HashMap<u32, Vec<usize>> = HashMap::new();
    for b in 0..lower.len() {
        by_deg.entry(lower.degree(b)).or_default().push(b);
    }
    let col_of: HashMap<usize, usize> = by_deg.values().flat_map(|v| v.iter().enumerate().map(|(k, &b)| (b, k))).collect();
    let mut rows: HashMap<u32, Vec<Vec<FieldElem>>> = HashMap::new();
    for a in 0..upper.len() {
        let j = upper.degree(a);
        let Some(cols) = by_deg.get(&j) else { continue };
        let mut row = vec![FieldElem::ZERO; cols.len()];
        let mut any = false;
        for t in &upper.vecs[a] {
            if t.mon.is_one() {
                row[col_of[&t.comp]] = t.coeff;
                any = true;
            }
        }
        if any {
            rows.entry(j).or_default().push(row);
        }
    }
    rows.into_iter().map(|(j, r)| (j, rank(field, &r, by_deg[&j].len()))).collect()
}

/// Minimal graded Betti numbers of a homogeneous ideal, from a Schreyer
/// resolution of its reduced Groebner basis. Rows `0..=max_length` are exact;
/// the table is marked incomplete when the resolution is longer.
pub fn free_resolution(ideal: &Ideal, max_length: usize, convention: Convention, budget: Budget) -> Result<GradedBettiTable> {
    if !ideal.is_homogeneous() {
        return Err(Error::Input("free resolutions need a homogeneous ideal".into()));
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    let gb = ideal.groebner(budget)?;
    let ctx = Ctx { order: ring.order(), field: *ring.field() };
    let mut counter = StepCounter::new(budget);

    let base = Level {
        lead: vec![Monomial::one(n)],
        comp: vec![0],
        total: vec![Monomial::one(n)],
        path: vec![vec![]],
        vecs: vec![vec![]],
    };
    let mut polys: Vec<_> = gb.polys().to_vec();
    polys.sort_by(|a, b| lex_cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    let mut l0 = Level::default();
    for (idx, p) in polys.iter().enumerate() {
        let lm = p.leading_monomial().unwrap().clone();
        l0.lead.push(lm.clone());
        l0.comp.push(0);
        l0.total.push(lm);
        l0.path.push(vec![idx as u32]);
        l0.vecs.push(p.terms().iter().map(|t| ctx.term(&base, t.coeff, t.mon.clone(), 0)).collect());
    }

    let mut levels = vec![base, l0];
    while levels.len() < max_length + 3 && levels.last().unwrap().len() > 0 {
        let k = levels.len();
        let nxt = next_level(&ctx, &levels[k - 2], &levels[k - 1], &mut counter)?;
        levels.push(nxt);
    }
    let frames = &levels[1..];
    let complete = frames.len() <= max_length + 1 || frames[max_length + 1].len() == 0;

    let ranks: Vec<HashMap<u32, usize>> =
        (1..frames.len()).map(|k| constant_ranks(ctx.field, &frames[k], &frames[k - 1])).collect();
    let mut entries = BTreeMap::new();
    for (i, lvl) in frames.iter().enumerate().take(max_length + 1) {
        let mut f: BTreeMap<u32, u64> = BTreeMap::new();
        for a in 0..lvl.len() {
            *f.entry(lvl.degree(a)).or_default() += 1;
        }
        for (j, cnt) in f {
            let down = if i >= 1 { ranks[i - 1].get(&j).copied().unwrap_or(0) } else { 0 };
            let up = ranks.get(i).and_then(|r| r.get(&j)).copied().unwrap_or(0);
            let b = cnt as i64 - down as i64 - up as i64;
            debug_assert!(b >= 0);
            if b > 0 {
                entries.insert((i, j), b as u64);
            }
        }
    }
    let table = GradedBettiTable { entries, nvars: n, convention: Convention::Ideal, complete };
    Ok(table.converted(convention))
}

/// `max { j - i : β_{i,j} != 0 }`.
pub fn regularity(t: &GradedBettiTable) -> Result<i64> {
    if !t.complete {
        return Err(Error::IncompleteResolution(t.projective_dimension().unwrap_or(0)));
    }
    t.entries
        .keys()
        .map(|&(i, j)| j as i64 - i as i64)
        .max()
        .ok_or_else(|| Error::Input("regularity of the zero ideal is undefined".into()))
}

/// `reg(S/I) = reg(I) - 1`.
pub fn quotient_regularity(ideal_reg: i64) -> i64 {
    ideal_reg - 1
}

/// Regularity of a homogeneous ideal through its Betti table.
pub fn ideal_regularity(ideal: &Ideal, budget: Budget) -> Result<i64> {
    let t = free_resolution(ideal, ideal.ring().nvars(), Convention::Ideal, budget)?;
    regularity(&t)
}

fn generator_degree(ideal: &Ideal) -> Result<u32> {
    let mins = crate::gbasis::minimal_generators(ideal)?;
    let d = mins.first().and_then(|g| g.degree()).ok_or_else(|| Error::Input("zero ideal".into()))?;
    if mins.iter().any(|g| g.degree() != Some(d)) {
        return Err(Error::Input("ideal is not generated in a single degree".into()));
    }
    Ok(d)
}

/// True when the resolution of an equigenerated ideal is linear.
pub fn has_linear_resolution(ideal: &Ideal, budget: Budget) -> Result<bool> {
    let d = generator_degree(ideal)?;
    Ok(ideal_regularity(ideal, budget)? == d as i64)
}

/// True when all minimal first syzygies of an equigenerated ideal are linear.
pub fn is_linearly_presented(ideal: &Ideal, budget: Budget) -> Result<bool> {
    let d = generator_degree(ideal)?;
    let t = free_resolution(ideal, 1, Convention::Ideal, budget)?;
    Ok(t.degrees(1).iter().all(|&j| j == d + 1))
}
