//! Dense linear algebra over `F_p`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldScalar, PrimeField};

/// Row-major dense matrix of residues.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    field: PrimeField,
    data: Vec<u32>,
}

impl ScalarMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        ScalarMatrix { rows, cols, field, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&v| v % field.modulus()));
        }
        ScalarMatrix { rows: rows.len(), cols, field, data }
    }

    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        ScalarMatrix { rows, cols, field, data }
    }

    pub fn from_scalars(rows: usize, cols: usize, entries: &[FieldScalar]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, got: entries.len() });
        }
        let field = entries.first().map_or(PrimeField::default_field(), |e| e.field());
        if let Some(e) = entries.iter().find(|e| e.field() != field) {
            return Err(Error::ModulusMismatch { left: field.modulus(), right: e.field().modulus() });
        }
        Ok(ScalarMatrix { rows, cols, field, data: entries.iter().map(|e| e.value()).collect() })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.modulus();
    }

    pub fn entry(&self, r: usize, c: usize) -> FieldScalar {
        self.field.scalar(self.get(r, c))
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let p = self.field.modulus() as u64;
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for (k, &a) in self.row(r).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let a = a as u64;
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for (dst, &a) in out.row_mut(r).iter_mut().zip(&acc) {
                *dst = a as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.modulus() as u64;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u64, |s, (&a, &b)| (s + a as u64 * b as u64) % p) as u32
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Keeps the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> ScalarMatrix {
        let mut out = Self::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.get(r, c);
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> ScalarMatrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        ScalarMatrix { rows: rows.len(), cols: self.cols, field: self.field, data }
    }

    pub fn determinant(&self) -> u32 {
        assert_eq!(self.rows, self.cols);
        let f = self.field;
        let mut m = self.clone();
        let n = self.rows;
        let mut det = 1u32;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&r| m.get(r, c) != 0) else {
                return 0;
            };
            if piv != c {
                swap_rows(&mut m.data, n, piv, c);
                det = f.neg(det);
            }
            let a = m.get(c, c);
            det = f.mul(det, a);
            let inv = f.inv(a).unwrap();
            for r in c + 1..n {
                let b = m.get(r, c);
                if b != 0 {
                    let factor = f.neg(f.mul(b, inv));
                    let (top, bottom) = m.data.split_at_mut(r * n);
                    axpy(&mut bottom[c..n], &top[c * n + c..c * n + n], factor, f);
                }
            }
        }
        det
    }
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over F_{}", self.rows, self.cols, self.field.modulus())?;
        for r in 0..self.rows {
            for (c, v) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v:>5}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[inline]
fn swap_rows(data: &mut [u32], cols: usize, a: usize, b: usize) {
    if a == b {
        return;
    }
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let (top, bottom) = data.split_at_mut(hi * cols);
    top[lo * cols..(lo + 1) * cols].swap_with_slice(&mut bottom[..cols]);
}

/// `dst += c * src`.
#[inline]
pub(crate) fn axpy(dst: &mut [u32], src: &[u32], c: u32, f: PrimeField) {
    let p = f.modulus() as u64;
    let c = c as u64;
    if p < (1 << 16) {
        // products stay below 2^32 so a 32-bit remainder suffices
        let p32 = p as u32;
        let c32 = c as u32;
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = (*d + c32 * s % p32) % p32;
            }
        }
    } else {
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = ((*d as u64 + c * s as u64) % p) as u32;
            }
        }
    }
}

#[inline]
fn scale_row(row: &mut [u32], c: u32, f: PrimeField) {
    for v in row.iter_mut() {
        if *v != 0 {
            *v = f.mul(*v, c);
        }
    }
}

/// Output of [`row_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduction {
    pub rank: usize,
    pub reduced: ScalarMatrix,
    pub pivot_cols: Vec<usize>,
}

/// Reduced row echelon form; pivots chosen as the first nonzero entry
/// below the current row, columns scanned left to right.
pub fn row_reduce(m: &ScalarMatrix) -> RowReduction {
    let mut a = m.clone();
    let pivot_cols = rref_in_place(&mut a);
    RowReduction { rank: pivot_cols.len(), reduced: a, pivot_cols }
}

fn rref_in_place(a: &mut ScalarMatrix) -> Vec<usize> {
    let f = a.field;
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a.data[i * cols + c] != 0) else {
            continue;
        };
        swap_rows(&mut a.data, cols, piv, r);
        let inv = f.inv(a.data[r * cols + c]).unwrap();
        scale_row(&mut a.data[r * cols + c..(r + 1) * cols], inv, f);
        let pivot_row: Vec<u32> = a.data[r * cols + c..(r + 1) * cols].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let v = a.data[i * cols + c];
            if v != 0 {
                axpy(&mut a.data[i * cols + c..(i + 1) * cols], &pivot_row, f.neg(v), f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &ScalarMatrix) -> usize {
    let mut e = EchelonBasis::new(m.field, m.cols);
    let mut buf = vec![0u32; m.cols];
    for r in 0..m.rows {
        buf.copy_from_slice(m.row(r));
        e.insert_owned(&mut buf);
        if e.len() == m.cols {
            break;
        }
    }
    e.len()
}

/// Basis of `{v : M v = 0}`, one vector per non-pivot column.
pub fn kernel_basis(m: &ScalarMatrix) -> Vec<Vec<u32>> {
    let red = row_reduce(m);
    kernel_from_rref(&red)
}

fn kernel_from_rref(red: &RowReduction) -> Vec<Vec<u32>> {
    let f = red.reduced.field;
    let cols = red.reduced.cols;
    let mut is_pivot = vec![false; cols];
    for &c in &red.pivot_cols {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; cols];
        v[free] = 1;
        for (i, &pc) in red.pivot_cols.iter().enumerate() {
            v[pc] = f.neg(red.reduced.get(i, free));
        }
        out.push(v);
    }
    out
}

/// Some `x` with `M x = b`, or `None` when `b` is outside the column space.
pub fn solve(m: &ScalarMatrix, b: &[u32]) -> Result<Option<Vec<u32>>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch { expected: m.rows, got: b.len() });
    }
    let f = m.field;
    let cols = m.cols + 1;
    let mut aug = ScalarMatrix::zeros(f, m.rows, cols);
    for r in 0..m.rows {
        aug.row_mut(r)[..m.cols].copy_from_slice(m.row(r));
        aug.row_mut(r)[m.cols] = b[r] % f.modulus();
    }
    let pivots = rref_in_place(&mut aug);
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![0u32; m.cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(i, m.cols);
    }
    Ok(Some(x))
}

/// Solves `M X = B` column by column with one elimination.
pub fn solve_many(m: &ScalarMatrix, rhs: &ScalarMatrix) -> Option<ScalarMatrix> {
    assert_eq!(m.rows, rhs.rows);
    let f = m.field;
    let cols = m.cols + rhs.cols;
    let mut aug = ScalarMatrix::zeros(f, m.rows, cols);
    for r in 0..m.rows {
        aug.row_mut(r)[..m.cols].copy_from_slice(m.row(r));
        aug.row_mut(r)[m.cols..].copy_from_slice(rhs.row(r));
    }
    let pivots = rref_in_place(&mut aug);
    if pivots.iter().any(|&c| c >= m.cols) {
        return None;
    }
    let mut x = ScalarMatrix::zeros(f, m.cols, rhs.cols);
    for (i, &c) in pivots.iter().enumerate() {
        x.row_mut(c).copy_from_slice(&aug.row(i)[m.cols..]);
    }
    Some(x)
}

/// Incrementally built row echelon basis of a subspace of `F_p^n`.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: PrimeField,
    n: usize,
    /// (pivot column, row with a 1 at the pivot and zeros before it), sorted by pivot.
    rows: Vec<(usize, Vec<u32>)>,
    has_pivot: Vec<bool>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, n: usize) -> Self {
        EchelonBasis { field, n, rows: Vec::new(), has_pivot: vec![false; n] }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// Reduces `v` in place modulo the span; the result is zero iff `v` lies in it.
    pub fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                axpy(&mut v[*piv..], &row[*piv..], f.neg(c), f);
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns true when the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.insert_owned(&mut w)
    }

    /// Like [`insert`](Self::insert) but reduces the caller's buffer in place.
    pub fn insert_owned(&mut self, w: &mut [u32]) -> bool {
        assert_eq!(w.len(), self.n);
        self.reduce(w);
        let Some(piv) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(w[piv]).unwrap();
        scale_row(&mut w[piv..], inv, f);
        let pos = self.rows.partition_point(|(p, _)| *p < piv);
        self.rows.insert(pos, (piv, w.to_vec()));
        self.has_pivot[piv] = true;
        true
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.has_pivot[c]
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[u32]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f() -> PrimeField {
        PrimeField::default_field()
    }

    fn random_matrix(rows: usize, cols: usize, seed: u64) -> ScalarMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let data = (0..rows * cols).map(|_| rng.next_u32() % 31991).collect();
        ScalarMatrix::from_vec(f(), rows, cols, data)
    }

    /// Product of a random rows×k and k×cols matrix: rank at most k.
    fn low_rank(rows: usize, cols: usize, k: usize, seed: u64) -> ScalarMatrix {
        random_matrix(rows, k, seed).mul(&random_matrix(k, cols, seed + 1))
    }

    #[test]
    fn identity_and_zero() {
        for n in [1, 4, 9] {
            let id = ScalarMatrix::identity(f(), n);
            assert_eq!(row_reduce(&id).rank, n);
            assert!(kernel_basis(&id).is_empty());
            assert_eq!(row_reduce(&ScalarMatrix::zeros(f(), n, n + 2)).rank, 0);
        }
    }

    #[test]
    fn all_ones_row() {
        let m = ScalarMatrix::from_rows(f(), 7, &[vec![1; 7]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 6);
        for v in &k {
            assert_eq!(m.mul_vec(v), vec![0]);
        }
    }

    #[test]
    fn random_kernel_is_annihilated() {
        let m = random_matrix(20, 30, 7);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 10);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
        let km = ScalarMatrix::from_rows(f(), 30, &k);
        assert_eq!(rank(&km), 10);
    }

    #[test]
    fn solve_identity_and_zero_rhs() {
        let id = ScalarMatrix::identity(f(), 5);
        let b = vec![3, 1, 4, 1, 5];
        assert_eq!(solve(&id, &b).unwrap(), Some(b));
        let m = random_matrix(4, 6, 3);
        assert_eq!(solve(&m, &[0; 4]).unwrap(), Some(vec![0; 6]));
        assert!(solve(&m, &[0; 3]).is_err());
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = low_rank(6, 6, 3, 11);
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let b: Vec<u32> = (0..6).map(|_| rng.next_u32() % 31991).collect();
        assert_eq!(solve(&m, &b).unwrap(), None);
    }

    #[test]
    fn determinant_of_triangular() {
        let m = ScalarMatrix::from_rows(f(), 3, &[vec![2, 5, 7], vec![0, 3, 1], vec![0, 0, 4]]);
        assert_eq!(m.determinant(), 24);
        assert_eq!(low_rank(4, 4, 3, 5).determinant(), 0);
    }

    proptest! {
        #[test]
        fn rank_nullity_and_transpose(rows in 1usize..12, cols in 1usize..12, k in 0usize..12, seed in any::<u64>()) {
            let m = low_rank(rows, cols, k, seed);
            let r = row_reduce(&m).rank;
            prop_assert_eq!(r, rank(&m));
            prop_assert_eq!(r, row_reduce(&m.transpose()).rank);
            prop_assert_eq!(r + kernel_basis(&m).len(), cols);
            prop_assert!(r <= k.min(rows).min(cols));
        }

        #[test]
        fn rref_is_idempotent(rows in 1usize..10, cols in 1usize..10, seed in any::<u64>()) {
            let m = low_rank(rows, cols, 3, seed);
            let once = row_reduce(&m);
            let twice = row_reduce(&once.reduced);
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn consistent_systems_have_zero_residual(rows in 1usize..10, cols in 1usize..10, seed in any::<u64>()) {
            let m = random_matrix(rows, cols, seed);
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabc);
            let x0: Vec<u32> = (0..cols).map(|_| rng.next_u32() % 31991).collect();
            let b = m.mul_vec(&x0);
            let x = solve(&m, &b).unwrap().expect("consistent");
            prop_assert_eq!(m.mul_vec(&x), b);
        }
    }
}
