//! Dense linear algebra over `F_p`.

use super::field::{FieldElem, PrimeField};

/// Incrementally built row-echelon basis of a subspace of `F_p^cols`.
///
/// Every stored row is monic at its pivot and zero at the pivots of the rows
/// inserted before it.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: PrimeField,
    cols: usize,
    rows: Vec<Vec<FieldElem>>,
    pivot_row: Vec<Option<usize>>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        EchelonBasis { field, cols, rows: Vec::new(), pivot_row: vec![None; cols] }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduces `v` in place against the basis; returns whether anything survived.
    pub fn reduce(&self, v: &mut [FieldElem]) -> bool {
        let f = &self.field;
        let mut nonzero = false;
        for c in 0..self.cols {
            if v[c].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let row = &self.rows[r];
                let k = v[c];
                for j in c..self.cols {
                    if !row[j].is_zero() {
                        v[j] = f.sub(v[j], f.mul(k, row[j]));
                    }
                }
            } else {
                nonzero = true;
            }
        }
        nonzero
    }

    /// Inserts `v`; returns `true` when the rank grew.
    pub fn insert(&mut self, mut v: Vec<FieldElem>) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        if self.is_full() || !self.reduce(&mut v) {
            return false;
        }
        let f = self.field;
        let c = v.iter().position(|x| !x.is_zero()).unwrap();
        let inv = f.inv(v[c]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        self.pivot_row[c] = Some(self.rows.len());
        self.rows.push(v);
        true
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        let mut w = v.to_vec();
        !self.reduce(&mut w)
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.cols).filter(|&c| self.pivot_row[c].is_some()).collect();
        p.sort_unstable();
        p
    }

    /// The unique reduced row echelon basis, sorted by pivot column.
    pub fn rref(&self) -> Vec<Vec<FieldElem>> {
        let f = &self.field;
        let pivots = self.pivots();
        let mut rows: Vec<Vec<FieldElem>> = pivots.iter().map(|&c| self.rows[self.pivot_row[c].unwrap()].clone()).collect();
        for i in (0..rows.len()).rev() {
            for k in 0..i {
                let c = pivots[i];
                let factor = rows[k][c];
                if factor.is_zero() {
                    continue;
                }
                let (head, tail) = rows.split_at_mut(i);
                let src = &tail[0];
                for j in c..self.cols {
                    if !src[j].is_zero() {
                        head[k][j] = f.sub(head[k][j], f.mul(factor, src[j]));
                    }
                }
            }
        }
        rows
    }
}

/// Rank of a dense matrix given as rows.
pub fn rank(field: PrimeField, rows: &[Vec<FieldElem>], cols: usize) -> usize {
    let mut b = EchelonBasis::new(field, cols);
    for r in rows {
        b.insert(r.clone());
        if b.is_full() {
            break;
        }
    }
    b.rank()
}

/// Basis of the left kernel `{y : y * A = 0}` of the matrix with the given rows,
/// returned in reduced echelon form.
pub fn left_kernel(field: PrimeField, rows: &[Vec<FieldElem>], cols: usize) -> Vec<Vec<FieldElem>> {
    let m = rows.len();
    // Augment each row with an identity block and eliminate on the first `cols` columns.
    let f = field;
    let mut aug: Vec<Vec<FieldElem>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..m).map(|j| if i == j { FieldElem::ONE } else { FieldElem::ZERO }));
            v
        })
        .collect();
    let mut pivot_rows = 0usize;
    for c in 0..cols {
        let Some(p) = (pivot_rows..m).find(|&i| !aug[i][c].is_zero()) else { continue };
        aug.swap(pivot_rows, p);
        let inv = f.inv(aug[pivot_rows][c]);
        for x in aug[pivot_rows].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot = aug[pivot_rows].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i == pivot_rows || row[c].is_zero() {
                continue;
            }
            let k = row[c];
            for j in 0..row.len() {
                if !pivot[j].is_zero() {
                    row[j] = f.sub(row[j], f.mul(k, pivot[j]));
                }
            }
        }
        pivot_rows += 1;
    }
    let mut kernel = EchelonBasis::new(field, m);
    for row in aug.into_iter().skip(pivot_rows) {
        kernel.insert(row[cols..].to_vec());
    }
    kernel.rref()
}
