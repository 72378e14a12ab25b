//! Canonical Z4-submodules: the ground truth for ideal identity,
//! cardinality, membership and Euclidean duals.
//!
//! Row spans over Z/4 are put into Howell normal form. Plain echelon forms
//! are not canonical over Z/4 (it is not a field); the Howell form is: two
//! row spans are equal as sets exactly when their Howell rows are identical.
//!
//! Slot layout for codes over `R + uR` of ambient degree `d`: slots
//! `0..d` hold the a-part coefficients and slots `d..2d` the u-part, so the
//! module rank is twice the polynomial degree.

use crate::error::{Error, Result};
use crate::upair::UPair;
use crate::z4poly::Z4Poly;
use num_bigint::BigUint;
use num_traits::One;

const M4: u8 = 3;

#[inline]
fn row_sub_scaled(dst: &mut [u8], src: &[u8], c: u8) {
    if c == 0 {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src.iter()) {
        *d = (*d + 4 - ((c * s) & M4)) & M4;
    }
}

#[inline]
fn row_scale(row: &mut [u8], c: u8) {
    for v in row.iter_mut() {
        *v = (*v * c) & M4;
    }
}

fn leading(row: &[u8]) -> Option<usize> {
    row.iter().position(|&v| v != 0)
}

/// Inserts `v` into the echelon structure `pivots` (one optional row per
/// column, literal zeros left of each pivot). Returns true when the pivot
/// set changed.
fn echelon_insert(pivots: &mut [Option<Vec<u8>>], mut v: Vec<u8>) -> bool {
    let mut c = 0;
    while c < v.len() {
        if v[c] == 0 {
            c += 1;
            continue;
        }
        let pivot_val = pivots[c].as_ref().map(|p| p[c]);
        match pivot_val {
            None => {
                if v[c] == 3 {
                    row_scale(&mut v, 3);
                }
                pivots[c] = Some(v);
                return true;
            }
            Some(1) => {
                let coef = v[c];
                row_sub_scaled(&mut v, pivots[c].as_ref().unwrap(), coef);
            }
            Some(_) => {
                if v[c] == 2 {
                    row_sub_scaled(&mut v, pivots[c].as_ref().unwrap(), 1);
                } else {
                    // v carries a unit where the pivot only has 2: swap them
                    if v[c] == 3 {
                        row_scale(&mut v, 3);
                    }
                    let mut displaced = pivots[c].replace(v).unwrap();
                    row_sub_scaled(&mut displaced, pivots[c].as_ref().unwrap(), 2);
                    echelon_insert(pivots, displaced);
                    return true;
                }
            }
        }
    }
    false
}

/// Howell normal form of the Z4-row-span of `rows`.
pub(crate) fn howell_reduce(rows: Vec<Vec<u8>>, rank: usize) -> Vec<Vec<u8>> {
    let mut pivots: Vec<Option<Vec<u8>>> = vec![None; rank];
    for r in rows {
        debug_assert_eq!(r.len(), rank);
        if leading(&r).is_some() {
            echelon_insert(&mut pivots, r);
        }
    }
    // close under the annihilator rows of the 2-pivots: 2*row vanishes at
    // its pivot column and must itself lie in the span of later rows
    loop {
        let mut added = false;
        let snapshot: Vec<Vec<u8>> = pivots
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.as_ref().filter(|p| p[c] == 2).cloned())
            .collect();
        for p in snapshot {
            let mut w = p;
            row_scale(&mut w, 2);
            if leading(&w).is_some() && echelon_insert(&mut pivots, w) {
                added = true;
            }
        }
        if !added {
            break;
        }
    }
    // reduce entries above each pivot modulo the pivot value
    let mut ordered: Vec<(usize, Vec<u8>)> = pivots
        .into_iter()
        .enumerate()
        .filter_map(|(c, p)| p.map(|p| (c, p)))
        .collect();
    for j in 0..ordered.len() {
        let (c, pivot_row) = (ordered[j].0, ordered[j].1.clone());
        let pv = pivot_row[c];
        for (i, item) in ordered.iter_mut().enumerate() {
            if i == j {
                continue;
            }
            let entry = item.1[c];
            if entry == 0 {
                continue;
            }
            let mult = if pv == 1 { entry } else { entry >> 1 };
            row_sub_scaled(&mut item.1, &pivot_row, mult);
        }
    }
    ordered.into_iter().map(|(_, r)| r).collect()
}

/// A Z4-submodule in Howell canonical form.
///
/// Equality of the rows is equality of the spanned sets; the cardinality is
/// the product over rows of 4 (pivot 1) or 2 (pivot 2).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonModule {
    rank: usize,
    rows: Vec<Vec<u8>>,
}

impl CanonModule {
    pub fn from_rows(rank: usize, rows: Vec<Vec<u8>>) -> CanonModule {
        CanonModule {
            rank,
            rows: howell_reduce(rows, rank),
        }
    }

    pub fn zero(rank: usize) -> CanonModule {
        CanonModule {
            rank,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn cardinality(&self) -> BigUint {
        let mut bits = 0usize;
        for r in &self.rows {
            let c = leading(r).expect("canonical rows are nonzero");
            bits += if r[c] == 1 { 2 } else { 1 };
        }
        BigUint::one() << bits
    }

    /// Exact set membership via reduction against the canonical rows.
    pub fn contains(&self, v: &[u8]) -> Result<bool> {
        if v.len() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: v.len(),
            });
        }
        let mut w = v.to_vec();
        for row in &self.rows {
            let c = leading(row).unwrap();
            if w[c] == 0 {
                continue;
            }
            if row[c] == 1 {
                let coef = w[c];
                row_sub_scaled(&mut w, row, coef);
            } else {
                if w[c] & 1 == 1 {
                    return Ok(false);
                }
                let coef = w[c] >> 1;
                row_sub_scaled(&mut w, row, coef);
            }
        }
        Ok(w.iter().all(|&x| x == 0))
    }

    pub fn equal(&self, other: &CanonModule) -> Result<bool> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(self.rows == other.rows)
    }

    /// Module sum (join in the ideal lattice).
    pub fn join(&self, other: &CanonModule) -> Result<CanonModule> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(CanonModule::from_rows(self.rank, rows))
    }

    /// Walks every element of the module exactly once. The caller is
    /// responsible for guarding the cardinality.
    pub fn codewords(&self) -> CodewordIter<'_> {
        CodewordIter {
            module: self,
            limits: self
                .rows
                .iter()
                .map(|r| if r[leading(r).unwrap()] == 1 { 4 } else { 2 })
                .collect(),
            state: vec![0; self.rows.len()],
            done: false,
        }
    }
}

pub struct CodewordIter<'a> {
    module: &'a CanonModule,
    limits: Vec<u8>,
    state: Vec<u8>,
    done: bool,
}

impl Iterator for CodewordIter<'_> {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let mut word = vec![0u8; self.module.rank];
        for (coef, row) in self.state.iter().zip(self.module.rows.iter()) {
            if *coef == 0 {
                continue;
            }
            for (w, &r) in word.iter_mut().zip(row.iter()) {
                *w = (*w + coef * r) & M4;
            }
        }
        // odometer advance, last row fastest
        let mut i = self.state.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.state[i] += 1;
            if self.state[i] < self.limits[i] {
                break;
            }
            self.state[i] = 0;
        }
        Some(word)
    }
}

/// The ideal (equivalently, the `R+uR`-submodule) generated by `gens`
/// inside `(Z4[x]/<m>) + u(Z4[x]/<m>)`: each generator is expanded against
/// every monomial `x^i` and `u*x^i`, then Howell-reduced. The wraparound of
/// the ambient is carried by reduction modulo `m`.
pub fn span_upairs(modulus: &Z4Poly, gens: &[UPair]) -> Result<CanonModule> {
    let d = modulus
        .degree()
        .ok_or_else(|| Error::Internal("zero modulus".into()))?;
    let mut rows = Vec::with_capacity(gens.len() * 2 * d);
    for g in gens {
        let g = g.reduce(modulus)?;
        let mut shifted = g.clone();
        for i in 0..d {
            if i > 0 {
                shifted = shifted.mul_poly(&Z4Poly::monomial(1, 1), modulus)?;
            }
            rows.push(shifted.to_row(d));
            // u * (a + ub) = u a
            rows.push(UPair::new(Z4Poly::zero(), shifted.a.clone()).to_row(d));
        }
    }
    Ok(CanonModule::from_rows(2 * d, rows))
}

/// The ideal generated by `gens` inside the plain quotient `Z4[x]/<m>`
/// (no u-part); used for cross-checks against cyclic codes over Z4.
pub fn span_polys(modulus: &Z4Poly, gens: &[Z4Poly]) -> Result<CanonModule> {
    let d = modulus
        .degree()
        .ok_or_else(|| Error::Internal("zero modulus".into()))?;
    let mut rows = Vec::with_capacity(gens.len() * d);
    for g in gens {
        let mut shifted = g.rem(modulus)?;
        for i in 0..d {
            if i > 0 {
                shifted = shifted.shl(1).rem(modulus)?;
            }
            rows.push(shifted.coeff_vec(d));
        }
    }
    Ok(CanonModule::from_rows(d, rows))
}

/// Euclidean dual over `R + uR` in coordinates.
///
/// Writing each coordinate as `a + ub`, the inner product
/// `sum_i x_i y_i` vanishes exactly when both Z4 components do:
/// `sum a_i c_i = 0` and `sum (a_i d_i + b_i c_i) = 0`. Each canonical row
/// of the code therefore contributes two Z4-linear conditions, and the dual
/// is the kernel of the stacked constraint matrix.
pub fn dual(code: &CanonModule) -> Result<CanonModule> {
    let rank = code.rank();
    if !rank.is_multiple_of(2) {
        return Err(Error::OutOfRange(format!(
            "dual needs an even rank, got {rank}"
        )));
    }
    let n = rank / 2;
    let mut constraints = Vec::with_capacity(code.rows().len() * 2);
    for row in code.rows() {
        let (c, d) = row.split_at(n);
        let mut r1 = vec![0u8; rank];
        r1[..n].copy_from_slice(c);
        constraints.push(r1);
        let mut r2 = vec![0u8; rank];
        r2[..n].copy_from_slice(d);
        r2[n..].copy_from_slice(c);
        constraints.push(r2);
    }
    let gens = kernel(&constraints, rank);
    Ok(CanonModule::from_rows(rank, gens))
}

// ---------------------------------------------------------------------------
// Linear algebra over Z/4: diagonalization with tracked column operations.
// Invertible row/column operations bring any matrix to a diagonal of 1s, 2s
// and 0s (units are exhausted first; afterwards every active entry lies in
// {0,2} and stays there).
// ---------------------------------------------------------------------------

struct Diagonalized {
    col_ops: Vec<Vec<u8>>, // V with columns as the new coordinate images
    pivots: Vec<(usize, usize, u8)>,
}

fn diagonalize(
    mat: &[Vec<u8>],
    cols: usize,
    rhs: Option<&[u8]>,
) -> (Diagonalized, Option<Vec<u8>>) {
    let rows = mat.len();
    let mut a: Vec<Vec<u8>> = mat.to_vec();
    let mut r = rhs.map(|r| r.to_vec());
    // V starts as the identity; column ops are mirrored into it
    let mut v: Vec<Vec<u8>> = (0..cols)
        .map(|i| {
            let mut col = vec![0u8; cols];
            col[i] = 1;
            col
        })
        .collect();
    let mut row_used = vec![false; rows];
    let mut col_used = vec![false; cols];
    let mut pivots = Vec::new();

    let find = |a: &Vec<Vec<u8>>, row_used: &[bool], col_used: &[bool], unit: bool| {
        for i in 0..rows {
            if row_used[i] {
                continue;
            }
            for j in 0..cols {
                if col_used[j] {
                    continue;
                }
                let x = a[i][j];
                if (unit && (x == 1 || x == 3)) || (!unit && x == 2) {
                    return Some((i, j));
                }
            }
        }
        None
    };

    loop {
        let (i, j, val) = if let Some((i, j)) = find(&a, &row_used, &col_used, true) {
            (i, j, 1u8)
        } else if let Some((i, j)) = find(&a, &row_used, &col_used, false) {
            (i, j, 2u8)
        } else {
            break;
        };
        if val == 1 {
            // normalize the pivot to 1 by scaling its column
            let inv = if a[i][j] == 3 { 3 } else { 1 };
            if inv != 1 {
                for row in a.iter_mut() {
                    row[j] = (row[j] * inv) & M4;
                }
                for vr in v.iter_mut() {
                    vr[j] = (vr[j] * inv) & M4;
                }
            }
            // clear the pivot column with row operations
            for ii in 0..rows {
                if ii == i || a[ii][j] == 0 {
                    continue;
                }
                let c = a[ii][j];
                let src = a[i].clone();
                row_sub_scaled(&mut a[ii], &src, c);
                if let Some(rv) = r.as_mut() {
                    rv[ii] = (rv[ii] + 4 - ((c * rv[i]) & M4)) & M4;
                }
            }
            // clear the pivot row with column operations
            for jj in 0..cols {
                if jj == j || a[i][jj] == 0 {
                    continue;
                }
                let c = a[i][jj];
                for row in a.iter_mut() {
                    let sub = (c * row[j]) & M4;
                    row[jj] = (row[jj] + 4 - sub) & M4;
                }
                for vr in v.iter_mut() {
                    let sub = (c * vr[j]) & M4;
                    vr[jj] = (vr[jj] + 4 - sub) & M4;
                }
            }
        } else {
            // no units remain anywhere active: every active entry is 0 or 2
            for ii in 0..rows {
                if ii == i || a[ii][j] == 0 {
                    continue;
                }
                let src = a[i].clone();
                row_sub_scaled(&mut a[ii], &src, 1);
                if let Some(rv) = r.as_mut() {
                    rv[ii] = (rv[ii] + 4 - rv[i]) & M4;
                }
            }
            for jj in 0..cols {
                if jj == j || a[i][jj] == 0 {
                    continue;
                }
                for row in a.iter_mut() {
                    let sub = row[j] & M4;
                    row[jj] = (row[jj] + 4 - sub) & M4;
                }
                for vr in v.iter_mut() {
                    let sub = vr[j] & M4;
                    vr[jj] = (vr[jj] + 4 - sub) & M4;
                }
            }
        }
        row_used[i] = true;
        col_used[j] = true;
        pivots.push((i, j, val));
    }

    (Diagonalized { col_ops: v, pivots }, r)
}

/// Generators of the kernel `{x : M x = 0 (mod 4)}`.
pub(crate) fn kernel(mat: &[Vec<u8>], cols: usize) -> Vec<Vec<u8>> {
    let (diag, _) = diagonalize(mat, cols, None);
    let mut pivot_col = vec![0u8; cols]; // 0 = free, 1 = unit pivot, 2 = two pivot
    for &(_, j, val) in &diag.pivots {
        pivot_col[j] = val;
    }
    let mut gens = Vec::new();
    for (j, &pv) in pivot_col.iter().enumerate() {
        match pv {
            0 => gens.push(column(&diag.col_ops, j)),
            2 => {
                let mut g = column(&diag.col_ops, j);
                for x in g.iter_mut() {
                    *x = (*x * 2) & M4;
                }
                gens.push(g);
            }
            _ => {}
        }
    }
    gens
}

/// One solution of `M x = rhs (mod 4)` if any exists.
pub(crate) fn solve(mat: &[Vec<u8>], cols: usize, rhs: &[u8]) -> Option<Vec<u8>> {
    let (diag, r) = diagonalize(mat, cols, Some(rhs));
    let r = r.unwrap();
    let mut y = vec![0u8; cols];
    let mut row_pivot = vec![None; mat.len()];
    for &(i, j, val) in &diag.pivots {
        row_pivot[i] = Some((j, val));
    }
    for (i, rv) in r.iter().enumerate() {
        match row_pivot[i] {
            Some((j, 1)) => y[j] = *rv,
            Some((j, _)) => {
                if rv & 1 == 1 {
                    return None;
                }
                y[j] = rv >> 1;
            }
            None => {
                if *rv != 0 {
                    return None;
                }
            }
        }
    }
    // x = V y
    let mut x = vec![0u8; cols];
    for (j, &c) in y.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for (xi, vrow) in x.iter_mut().zip(diag.col_ops.iter()) {
            *xi = (*xi + c * vrow[j]) & M4;
        }
    }
    // the diagonal model can lose solvability information only in one
    // direction, so verify by substitution
    for (row, &want) in mat.iter().zip(rhs.iter()) {
        let mut acc = 0u8;
        for (a, b) in row.iter().zip(x.iter()) {
            acc = (acc + a * b) & M4;
        }
        if acc != want {
            return None;
        }
    }
    Some(x)
}

fn column(v: &[Vec<u8>], j: usize) -> Vec<u8> {
    v.iter().map(|row| row[j]).collect()
}
