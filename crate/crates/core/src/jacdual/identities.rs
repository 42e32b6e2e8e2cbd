//! Explicit cofactor certificates for the bordered-determinant identities,
//! valid for any `(n-1) × n` matrix over any commutative ring. They turn
//! ideal memberships into polynomial equalities that can be checked exactly.

use crate::error::{Error, Result};
use crate::polycore::{deltas, PolyMatrix, Polynomial, RingRef};

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Linear forms `L_k = Σ_c N_{k,c} x_c` for the rows of `nmat`, with `x` given.
pub fn row_forms(nmat: &PolyMatrix, x: &[Polynomial]) -> Result<Vec<Polynomial>> {
    if x.len() != nmat.cols() {
        return Err(Error::Dimension { expected: nmat.cols(), got: x.len() });
    }
    Ok((0..nmat.rows())
        .map(|k| nmat.row(k).iter().zip(x).fold(Polynomial::zero(nmat.ring()), |acc, (a, xc)| &acc + &(a * xc)))
        .collect())
}

/// Clause 1 with cofactors: `Δ_i L_n + (-1)^{n+1} det(M) x_i` against
/// `(-1)^{n+1} Σ_{k<n} (-1)^{i+k} det M^{(i)}_{(k)} L_k`. Returns both sides.
pub fn clause1_sides(nmat: &PolyMatrix, border: &[Polynomial], x: &[Polynomial], i: usize) -> Result<(Polynomial, Polynomial)> {
    let n = nmat.cols();
    let ring: &RingRef = nmat.ring();
    let mut rows: Vec<Vec<Polynomial>> = (0..n - 1).map(|r| nmat.row(r).to_vec()).collect();
    rows.push(border.to_vec());
    let m = PolyMatrix::from_rows(ring, rows)?;
    let forms = row_forms(&m, x)?;
    let ds = deltas(nmat)?;
    let lhs = &(&ds[i - 1] * &forms[n - 1]) + &(&m.det()? * &x[i - 1]).scale_int(sign(n + 1));
    let mut rhs = Polynomial::zero(ring);
    for k in 1..n {
        let minor = m.submatrix_delete(&[i - 1], &[k - 1])?.det()?;
        rhs = &rhs + &(&minor * &forms[k - 1]).scale_int(sign(i + k));
    }
    Ok((lhs, rhs.scale_int(sign(n + 1))))
}

/// Clause 3 with cofactors: `Δ_i L_j` against `Σ_c N^{(i)}_{j,c} (x_{k(c)} Δ_i - x_i Δ_{k(c)})`
/// where `k(c)` skips column `i`.
pub fn clause3_sides(nmat: &PolyMatrix, x: &[Polynomial], i: usize, j: usize) -> Result<(Polynomial, Polynomial)> {
    let n = nmat.cols();
    let ring = nmat.ring();
    let ds = deltas(nmat)?;
    let forms = row_forms(nmat, x)?;
    let lhs = &ds[i - 1] * &forms[j - 1];
    let mut rhs = Polynomial::zero(ring);
    for c in 1..n {
        let k = if c < i { c } else { c + 1 };
        let gen = &(&x[k - 1] * &ds[i - 1]) - &(&x[i - 1] * &ds[k - 1]);
        rhs = &rhs + &(nmat.get(j - 1, k - 1) * &gen);
    }
    Ok((lhs, rhs))
}
