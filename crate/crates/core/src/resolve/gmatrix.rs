use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::poly::{HomogPoly, Ring};

/// Homogeneous map `⊕ R(-col_twists[c]) -> ⊕ R(-row_twists[r])`; a nonzero
/// entry `(r, c)` has degree `col_twists[c] - row_twists[r]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    ring: Ring,
    row_twists: Vec<i32>,
    col_twists: Vec<i32>,
    entries: Vec<HomogPoly>,
}

impl GradedMatrix {
    pub fn new(ring: Ring, row_twists: Vec<i32>, col_twists: Vec<i32>, entries: Vec<HomogPoly>) -> Result<Self> {
        let expected = row_twists.len() * col_twists.len();
        if entries.len() != expected {
            return Err(Error::DimensionMismatch { expected, got: entries.len() });
        }
        let m = GradedMatrix { ring, row_twists, col_twists, entries };
        for r in 0..m.nrows() {
            for c in 0..m.ncols() {
                let e = m.get(r, c);
                if e.ring() != ring {
                    return Err(Error::RingMismatch);
                }
                if let Some(d) = e.degree() {
                    if d as i32 != m.entry_degree(r, c) {
                        return Err(Error::NotHomogeneous);
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn zero(ring: Ring, row_twists: Vec<i32>, col_twists: Vec<i32>) -> Self {
        let n = row_twists.len() * col_twists.len();
        GradedMatrix { ring, row_twists, col_twists, entries: alloc::vec![HomogPoly::zero(ring); n] }
    }

    /// A row of forms: the map `⊕ R(-deg f_k) -> R` whose cokernel is `R/(f)`.
    pub fn row_of(ring: Ring, forms: &[HomogPoly]) -> Self {
        let cols = forms.iter().map(|f| f.degree().expect("nonzero form") as i32).collect();
        GradedMatrix { ring, row_twists: alloc::vec![0], col_twists: cols, entries: forms.to_vec() }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nrows(&self) -> usize {
        self.row_twists.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_twists.len()
    }

    pub fn row_twists(&self) -> &[i32] {
        &self.row_twists
    }

    pub fn col_twists(&self) -> &[i32] {
        &self.col_twists
    }

    pub fn entry_degree(&self, r: usize, c: usize) -> i32 {
        self.col_twists[c] - self.row_twists[r]
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &HomogPoly {
        &self.entries[r * self.col_twists.len() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, f: HomogPoly) {
        if let Some(d) = f.degree() {
            assert_eq!(d as i32, self.entry_degree(r, c), "entry of the wrong degree");
        }
        let n = self.col_twists.len();
        self.entries[r * n + c] = f;
    }

    pub fn column(&self, c: usize) -> Vec<HomogPoly> {
        (0..self.nrows()).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Position of some nonzero constant entry.
    pub fn unit_entry(&self) -> Option<(usize, usize)> {
        (0..self.nrows())
            .flat_map(|r| (0..self.ncols()).map(move |c| (r, c)))
            .find(|&(r, c)| self.get(r, c).degree() == Some(0))
    }

    /// `self ∘ other`, reduced modulo `modulo` when given.
    pub fn compose(&self, other: &GradedMatrix, modulo: Option<&GroebnerBasis>) -> Result<GradedMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::DimensionMismatch { expected: self.ncols(), got: other.nrows() });
        }
        if self.col_twists != other.row_twists {
            return Err(Error::NotHomogeneous);
        }
        let mut out = GradedMatrix::zero(self.ring, self.row_twists.clone(), other.col_twists.clone());
        for r in 0..self.nrows() {
            for c in 0..other.ncols() {
                let mut acc = HomogPoly::zero(self.ring);
                for k in 0..self.ncols() {
                    let (a, b) = (self.get(r, k), other.get(k, c));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b));
                }
                if let Some(gb) = modulo {
                    acc = gb.normal_form(&acc);
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Transpose as a map of duals: `⊕ R(row_twists) -> ⊕ R(col_twists)`,
    /// further twisted by `twist` (so `R(-a)` becomes `R(a + twist)`).
    pub fn dual(&self, twist: i32) -> GradedMatrix {
        let rows: Vec<i32> = self.col_twists.iter().map(|&a| -a - twist).collect();
        let cols: Vec<i32> = self.row_twists.iter().map(|&a| -a - twist).collect();
        let mut out = GradedMatrix::zero(self.ring, rows, cols);
        for r in 0..self.nrows() {
            for c in 0..self.ncols() {
                out.entries[c * self.nrows() + r] = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> GradedMatrix {
        let mut out = GradedMatrix::zero(
            self.ring,
            self.row_twists.clone(),
            cols.iter().map(|&c| self.col_twists[c]).collect(),
        );
        for r in 0..self.nrows() {
            for (j, &c) in cols.iter().enumerate() {
                out.entries[r * cols.len() + j] = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> GradedMatrix {
        let mut out = GradedMatrix::zero(
            self.ring,
            rows.iter().map(|&r| self.row_twists[r]).collect(),
            self.col_twists.clone(),
        );
        for (i, &r) in rows.iter().enumerate() {
            for c in 0..self.ncols() {
                out.entries[i * self.ncols() + c] = self.get(r, c).clone();
            }
        }
        out
    }

    /// Same entries with all twists shifted by `s`.
    pub fn shifted(&self, s: i32) -> GradedMatrix {
        GradedMatrix {
            ring: self.ring,
            row_twists: self.row_twists.iter().map(|t| t + s).collect(),
            col_twists: self.col_twists.iter().map(|t| t + s).collect(),
            entries: self.entries.clone(),
        }
    }

    /// Entrywise normal forms.
    pub fn reduce(&self, gb: &GroebnerBasis) -> GradedMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = gb.normal_form(e);
        }
        out
    }

    /// `col_dst += f * col_src`.
    pub(crate) fn add_column_multiple(&mut self, dst: usize, src: usize, f: &HomogPoly) {
        for r in 0..self.nrows() {
            let s = self.get(r, src);
            if s.is_zero() {
                continue;
            }
            let v = self.get(r, dst).add(&s.mul(f));
            self.set(r, dst, v);
        }
    }

    /// `row_dst += f * row_src`.
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, f: &HomogPoly) {
        for c in 0..self.ncols() {
            let s = self.get(src, c);
            if s.is_zero() {
                continue;
            }
            let v = self.get(dst, c).add(&s.mul(f));
            self.set(dst, c, v);
        }
    }

    pub(crate) fn remove_row(&mut self, r: usize) {
        let keep: Vec<usize> = (0..self.nrows()).filter(|&i| i != r).collect();
        *self = self.select_rows(&keep);
    }

    pub(crate) fn remove_column(&mut self, c: usize) {
        let keep: Vec<usize> = (0..self.ncols()).filter(|&i| i != c).collect();
        *self = self.select_columns(&keep);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::text::parse_poly;

    #[test]
    fn rejects_wrong_degrees() {
        let r = Ring::new(3, PrimeField::default_field());
        let x = parse_poly(r, "x0").unwrap();
        let q = parse_poly(r, "x1^2").unwrap();
        assert!(GradedMatrix::new(r, alloc::vec![0], alloc::vec![1, 2], alloc::vec![x.clone(), q.clone()]).is_ok());
        assert!(GradedMatrix::new(r, alloc::vec![0], alloc::vec![1, 1], alloc::vec![x, q]).is_err());
    }

    #[test]
    fn koszul_composition_vanishes() {
        let r = Ring::new(2, PrimeField::default_field());
        let x0 = HomogPoly::var(r, 0);
        let x1 = HomogPoly::var(r, 1);
        let d1 = GradedMatrix::row_of(r, &[x0.clone(), x1.clone()]);
        let d2 = GradedMatrix::new(r, alloc::vec![1, 1], alloc::vec![2], alloc::vec![x1, x0.neg()]).unwrap();
        assert!(d1.compose(&d2, None).unwrap().is_zero());
        let dual = d2.dual(0);
        assert_eq!(dual.row_twists(), &[-2]);
        assert_eq!(dual.col_twists(), &[-1, -1]);
    }
}
