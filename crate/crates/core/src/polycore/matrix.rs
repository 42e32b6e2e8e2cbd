//! Dense matrices of polynomials and the signed maximal-minor calculus on
//! `(n-1) x n` matrices.
//!
//! Generic matrix indices are 0-based. The signed minors `delta(N, i)` and the
//! adjugate pattern check take 1-based column indices, with
//! `delta(N, i) = (-1)^i det N^(i)` where `N^(i)` drops column `i`.

use super::field::FieldElem;
use super::poly::Polynomial;
use super::ring::{same_ring, RingRef};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: RingRef,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &RingRef, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        if entries.iter().any(|e| !same_ring(e.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, entries })
    }

    pub fn from_rows(ring: &RingRef, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(ring: &RingRef, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), rows, cols, entries: vec![Polynomial::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &RingRef, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Polynomial::one(ring);
        }
        m
    }

    /// Builds a linear-entry matrix check: every entry homogeneous of degree 1 or zero.
    pub fn with_linear_entries(ring: &RingRef, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        let m = Self::new(ring, rows, cols, entries)?;
        if !m.all_linear() {
            return Err(Error::Input("matrix entries are not all linear forms".into()));
        }
        Ok(m)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert!(same_ring(p.ring(), &self.ring));
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn all_linear(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero() || e.homogeneous_degree() == Some(1))
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut e = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                e.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { ring: self.ring.clone(), rows: self.cols, cols: self.rows, entries: e }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut e = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    if !self.get(i, k).is_zero() && !other.get(k, j).is_zero() {
                        acc = &acc + &(self.get(i, k) * other.get(k, j));
                    }
                }
                e.push(acc);
            }
        }
        Ok(PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: other.cols, entries: e })
    }

    pub fn scale(&self, c: FieldElem) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    pub fn map_ring(&self, target: &RingRef, map: &[usize]) -> PolyMatrix {
        PolyMatrix {
            ring: target.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.embed(target, map)).collect(),
        }
    }

    pub fn evaluate(&self, point: &[FieldElem]) -> Result<Vec<Vec<FieldElem>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| e.evaluate(point)).collect())
            .collect()
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("{}x{} matrix is not square", self.rows, self.cols)));
        }
        Ok(self.rows)
    }

    /// Determinant by row-by-row cofactor expansion, memoized over column subsets.
    pub fn det(&self) -> Result<Polynomial> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        if n > 20 {
            return Err(Error::Shape(format!("{n}x{n} is too large for subset expansion")));
        }
        // layer[k] maps a k-subset of columns (bitmask) to the minor on rows 0..k
        let mut prev: Vec<(u32, Polynomial)> = vec![(0, Polynomial::one(&self.ring))];
        for k in 0..n {
            let mut next: std::collections::BTreeMap<u32, Polynomial> = std::collections::BTreeMap::new();
            for (mask, minor) in &prev {
                if minor.is_zero() {
                    continue;
                }
                for c in 0..n {
                    if mask & (1 << c) != 0 || self.get(k, c).is_zero() {
                        continue;
                    }
                    let greater = (mask >> (c + 1)).count_ones();
                    let mut term = self.get(k, c) * minor;
                    if greater % 2 == 1 {
                        term = -&term;
                    }
                    let slot = next.entry(mask | (1 << c)).or_insert_with(|| Polynomial::zero(&self.ring));
                    *slot = &*slot + &term;
                }
            }
            prev = next.into_iter().collect();
        }
        Ok(prev.pop().map(|(_, p)| p).unwrap_or_else(|| Polynomial::zero(&self.ring)))
    }

    /// Determinant by Bareiss fraction-free elimination (exact polynomial division).
    pub fn det_fraction_free(&self) -> Result<Polynomial> {
        let n = self.require_square()?;
        let mut a: Vec<Vec<Polynomial>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut prev = Polynomial::one(&self.ring);
        let mut negate = false;
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return Ok(Polynomial::zero(&self.ring)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .div_exact(&prev)
                        .ok_or_else(|| Error::Shape("inexact Bareiss division".into()))?;
                }
                a[i][k] = Polynomial::zero(&self.ring);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -&d } else { d })
    }

    /// Classical adjugate: `adj[i][j] = (-1)^(i+j) det(self without row j, column i)`.
    pub fn adjugate(&self) -> Result<PolyMatrix> {
        let n = self.require_square()?;
        let mut e = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.submatrix_delete(&[i], &[j])?.det()?;
                e.push(if (i + j) % 2 == 1 { -&minor } else { minor });
            }
        }
        let adj = PolyMatrix { ring: self.ring.clone(), rows: n, cols: n, entries: e };
        #[cfg(debug_assertions)]
        {
            let d = self.det()?;
            let expect = PolyMatrix::identity(&self.ring, n);
            let expect = PolyMatrix {
                entries: expect.entries.iter().map(|x| x * &d).collect(),
                ..expect
            };
            debug_assert_eq!(adj.mul(self)?, expect);
            debug_assert_eq!(self.mul(&adj)?, expect);
        }
        Ok(adj)
    }

    /// Drops the listed columns and rows (0-based), keeping the rest in order.
    pub fn submatrix_delete(&self, cols: &[usize], rows: &[usize]) -> Result<PolyMatrix> {
        check_indices(cols, self.cols, "column")?;
        check_indices(rows, self.rows, "row")?;
        let keep_r: Vec<usize> = (0..self.rows).filter(|i| !rows.contains(i)).collect();
        let keep_c: Vec<usize> = (0..self.cols).filter(|j| !cols.contains(j)).collect();
        self.select(&keep_r, &keep_c)
    }

    /// Submatrix on the listed rows and columns (0-based, in the given order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Result<PolyMatrix> {
        let mut e = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                if i >= self.rows || j >= self.cols {
                    return Err(Error::Index(format!("({i}, {j}) outside {}x{}", self.rows, self.cols)));
                }
                e.push(self.get(i, j).clone());
            }
        }
        Ok(PolyMatrix { ring: self.ring.clone(), rows: rows.len(), cols: cols.len(), entries: e })
    }
}

fn check_indices(idx: &[usize], bound: usize, what: &str) -> Result<()> {
    for (k, &i) in idx.iter().enumerate() {
        if i >= bound {
            return Err(Error::Index(format!("{what} {i} out of range (size {bound})")));
        }
        if idx[..k].contains(&i) {
            return Err(Error::Index(format!("duplicate {what} index {i}")));
        }
    }
    Ok(())
}

fn require_corank_one(nmat: &PolyMatrix) -> Result<usize> {
    let n = nmat.cols();
    if n < 2 || nmat.rows() + 1 != n {
        return Err(Error::Shape(format!(
            "expected an (n-1) x n matrix, got {}x{}",
            nmat.rows(),
            nmat.cols()
        )));
    }
    Ok(n)
}

/// `(-1)^i det N^(i)` for a 1-based column index `i` of an `(n-1) x n` matrix.
pub fn delta(nmat: &PolyMatrix, i: usize) -> Result<Polynomial> {
    let n = require_corank_one(nmat)?;
    if i == 0 || i > n {
        return Err(Error::Index(format!("column {i} outside 1..={n}")));
    }
    let d = nmat.submatrix_delete(&[i - 1], &[])?.det()?;
    Ok(if i % 2 == 1 { -&d } else { d })
}

/// All signed minors `(delta_1, ..., delta_n)`.
pub fn deltas(nmat: &PolyMatrix) -> Result<Vec<Polynomial>> {
    let n = require_corank_one(nmat)?;
    (1..=n).map(|i| delta(nmat, i)).collect()
}

/// First entry where an identity failed: `(row, col, expected, found)`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryMismatch {
    pub row: usize,
    pub col: usize,
    pub expected: Polynomial,
    pub found: Polynomial,
}

/// The `(n-1) x n` pattern `(-1)^i adj(N^(i)) N` must equal: `delta_i` on the
/// shifted diagonal and `-delta_k` (`k != i`) down column `i`.
pub fn adjugate_pattern(nmat: &PolyMatrix, i: usize) -> Result<PolyMatrix> {
    let n = require_corank_one(nmat)?;
    if i == 0 || i > n {
        return Err(Error::Index(format!("column {i} outside 1..={n}")));
    }
    let ds = deltas(nmat)?;
    let ring = nmat.ring().clone();
    let mut p = PolyMatrix::zeros(&ring, n - 1, n);
    for j in 1..n {
        for l in 1..=n {
            let v = if l < i {
                (j == l).then(|| ds[i - 1].clone())
            } else if l == i {
                Some(-&ds[if j < i { j - 1 } else { j }])
            } else {
                (j == l - 1).then(|| ds[i - 1].clone())
            };
            if let Some(v) = v {
                p.set(j - 1, l - 1, v);
            }
        }
    }
    Ok(p)
}

/// Checks `(-1)^i adj(N^(i)) N` against [`adjugate_pattern`].
pub fn lemma_adj_check(nmat: &PolyMatrix, i: usize) -> Result<std::result::Result<(), EntryMismatch>> {
    let pattern = adjugate_pattern(nmat, i)?;
    let sub = nmat.submatrix_delete(&[i - 1], &[])?;
    let mut lhs = sub.adjugate()?.mul(nmat)?;
    if i % 2 == 1 {
        lhs = lhs.scale(nmat.ring().field().elem(-1));
    }
    for r in 0..lhs.rows() {
        for c in 0..lhs.cols() {
            if lhs.get(r, c) != pattern.get(r, c) {
                return Ok(Err(EntryMismatch {
                    row: r + 1,
                    col: c + 1,
                    expected: pattern.get(r, c).clone(),
                    found: lhs.get(r, c).clone(),
                }));
            }
        }
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::field::PrimeField;
    use crate::polycore::ring::Ring;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ring(p: u64, names: &[&str]) -> RingRef {
        Ring::with_names(PrimeField::new(p).unwrap(), names)
    }

    fn random_linear(ring: &RingRef, rng: &mut ChaCha8Rng) -> Polynomial {
        let f = ring.field();
        let terms = (0..ring.nvars()).map(|i| {
            let c = rng.gen_range(0..f.characteristic()) as i64;
            (f.elem(c), crate::polycore::monomial::Monomial::var(ring.nvars(), i))
        });
        Polynomial::from_terms(ring, terms)
    }

    fn random_matrix(ring: &RingRef, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> PolyMatrix {
        let e = (0..rows * cols).map(|_| random_linear(ring, rng)).collect();
        PolyMatrix::new(ring, rows, cols, e).unwrap()
    }

    #[test]
    fn det_two_by_two() {
        let r = ring(32003, &["x", "y"]);
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let m = PolyMatrix::from_rows(&r, vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]]).unwrap();
        assert_eq!(m.det().unwrap(), &(&x * &x) - &(&y * &y));
        let rep = PolyMatrix::from_rows(&r, vec![vec![x.clone(), y.clone()], vec![x.clone(), y.clone()]]).unwrap();
        assert!(rep.det().unwrap().is_zero());
    }

    #[test]
    fn det_of_conic_jacobian_dual() {
        let r = ring(32003, &["T1", "T2", "T3"]);
        let t: Vec<_> = (0..3).map(|i| Polynomial::var(&r, i)).collect();
        let m = PolyMatrix::from_rows(&r, vec![vec![-&t[1], t[0].clone()], vec![-&t[2], t[1].clone()]]).unwrap();
        // cofactor expansion by hand: (-T2)(T2) - (T1)(-T3)
        assert_eq!(m.det().unwrap(), &(&t[0] * &t[2]) - &(&t[1] * &t[1]));
    }

    #[test]
    fn non_square_errors() {
        let r = ring(32003, &["x"]);
        let m = PolyMatrix::zeros(&r, 2, 3);
        assert!(matches!(m.det(), Err(Error::Shape(_))));
        assert!(matches!(m.adjugate(), Err(Error::Shape(_))));
    }

    #[test]
    fn adjugate_small_cases() {
        let r = ring(32003, &["a", "b", "c", "d"]);
        let v: Vec<_> = (0..4).map(|i| Polynomial::var(&r, i)).collect();
        let one = PolyMatrix::from_rows(&r, vec![vec![v[0].clone()]]).unwrap();
        assert_eq!(one.adjugate().unwrap(), PolyMatrix::identity(&r, 1));
        let m = PolyMatrix::from_rows(&r, vec![vec![v[0].clone(), v[1].clone()], vec![v[2].clone(), v[3].clone()]]).unwrap();
        let expect = PolyMatrix::from_rows(&r, vec![vec![v[3].clone(), -&v[1]], vec![-&v[2], v[0].clone()]]).unwrap();
        assert_eq!(m.adjugate().unwrap(), expect);
    }

    #[test]
    fn submatrix_bookkeeping() {
        let r = ring(32003, &["a", "b", "c", "d", "e", "f"]);
        let v: Vec<_> = (0..6).map(|i| Polynomial::var(&r, i)).collect();
        let row = PolyMatrix::from_rows(&r, vec![vec![v[0].clone(), v[1].clone()]]).unwrap();
        assert_eq!(row.submatrix_delete(&[0], &[]).unwrap().entries(), &[v[1].clone()]);
        assert_eq!(row.submatrix_delete(&[], &[]).unwrap(), row);
        let m = PolyMatrix::new(&r, 2, 3, v.clone()).unwrap();
        let s = m.submatrix_delete(&[1], &[0]).unwrap();
        assert_eq!(s.entries(), &[v[3].clone(), v[5].clone()]);
        assert!(matches!(m.submatrix_delete(&[3], &[]), Err(Error::Index(_))));
        assert!(matches!(m.submatrix_delete(&[1, 1], &[]), Err(Error::Index(_))));
    }

    #[test]
    fn delta_sign_convention() {
        let r = ring(32003, &["T1", "T2"]);
        let (t1, t2) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let n = PolyMatrix::from_rows(&r, vec![vec![-&t2, t1.clone()]]).unwrap();
        assert_eq!(delta(&n, 1).unwrap(), -&t1);
        assert_eq!(delta(&n, 2).unwrap(), -&t2);
        assert!(delta(&n, 0).is_err());
        assert!(delta(&PolyMatrix::zeros(&r, 2, 2), 1).is_err());
    }

    #[test]
    fn delta_vanishes_off_repeated_columns() {
        let r = ring(32003, &["a", "b", "c", "d", "e", "f"]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut m = random_matrix(&r, 3, 4, &mut rng);
        for i in 0..3 {
            let e = m.get(i, 0).clone();
            m.set(i, 2, e);
        }
        for i in [2, 4] {
            assert!(delta(&m, i).unwrap().is_zero());
        }
    }

    #[test]
    fn adjugate_pattern_one_by_two() {
        let r = ring(32003, &["a", "b"]);
        let (a, b) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let n = PolyMatrix::from_rows(&r, vec![vec![a.clone(), b.clone()]]).unwrap();
        let p = adjugate_pattern(&n, 1).unwrap();
        assert_eq!(p.entries(), &[-&a, -&b]);
        assert_eq!(lemma_adj_check(&n, 1).unwrap(), Ok(()));
        assert_eq!(lemma_adj_check(&n, 2).unwrap(), Ok(()));
    }

    #[test]
    fn adjugate_identity_and_alternation_random() {
        let r = ring(32003, &["a", "b", "c", "d", "e", "f"]);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=5 {
            let m = random_matrix(&r, n, n, &mut rng);
            let adj = m.adjugate().unwrap();
            let d = m.det().unwrap();
            let lhs = adj.mul(&m).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let want = if i == j { d.clone() } else { Polynomial::zero(&r) };
                    assert_eq!(lhs.get(i, j), &want);
                }
            }
        }
        for _ in 0..5 {
            let m = random_matrix(&r, 4, 4, &mut rng);
            let mut rows: Vec<Vec<Polynomial>> = (0..4).map(|i| m.row(i).to_vec()).collect();
            rows.swap(1, 3);
            let swapped = PolyMatrix::from_rows(&r, rows).unwrap();
            assert_eq!(swapped.det().unwrap(), -&m.det().unwrap());
        }
    }

    #[test]
    fn expansion_matches_fraction_free_elimination() {
        let r = ring(32003, &["a", "b", "c", "d", "e", "f"]);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let m = random_matrix(&r, 4, 4, &mut rng);
            assert_eq!(m.det().unwrap(), m.det_fraction_free().unwrap());
        }
        // a zero pivot forces a row swap
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let z = Polynomial::zero(&r);
        let m = PolyMatrix::from_rows(&r, vec![vec![z.clone(), x.clone()], vec![y.clone(), z.clone()]]).unwrap();
        assert_eq!(m.det_fraction_free().unwrap(), m.det().unwrap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]
        #[test]
        fn adjugate_pattern_holds_for_random_matrices(seed in any::<u64>(), n in 2usize..=5, nv in 1usize..=6) {
            let names: Vec<String> = (0..nv).map(|i| format!("t{i}")).collect();
            let r = Ring::with_names(PrimeField::new(32003).unwrap(), &names);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_matrix(&r, n - 1, n, &mut rng);
            for i in 1..=n {
                prop_assert_eq!(lemma_adj_check(&m, i).unwrap(), Ok(()));
            }
        }

        #[test]
        fn adjugate_pattern_holds_over_f2(seed in any::<u64>(), n in 2usize..=4) {
            let r = ring(2, &["a", "b", "c", "d"]);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_matrix(&r, n - 1, n, &mut rng);
            for i in 1..=n {
                prop_assert_eq!(lemma_adj_check(&m, i).unwrap(), Ok(()));
            }
        }
    }

    #[test]
    fn linear_flag_is_verified() {
        let r = ring(32003, &["x", "y"]);
        let x = Polynomial::var(&r, 0);
        assert!(PolyMatrix::with_linear_entries(&r, 1, 1, vec![x.clone()]).is_ok());
        assert!(PolyMatrix::with_linear_entries(&r, 1, 1, vec![&x * &x]).is_err());
        let _ = rand::thread_rng().gen::<u8>();
    }
}
