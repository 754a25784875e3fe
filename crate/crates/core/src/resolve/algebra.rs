//! Graded pieces of `A = R/J` and of finitely generated `A`-modules, as
//! explicit vector spaces with multiplication maps.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::{degree_parts, GroebnerBasis, HomogeneousIdeal};
use crate::linalg::{EchelonBasis, ScalarMatrix};
use crate::monomial::Monomial;
use crate::poly::{HomogPoly, Ring};

use super::gmatrix::GradedMatrix;

const NOT_STANDARD: u32 = u32::MAX;

/// `R` or `R/J` with `J` given by a Gröbner basis, with bases of the graded
/// pieces up to a degree. Standard monomials of `J` index `A_d`.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    ring: Ring,
    gb: Option<GroebnerBasis>,
    ring_basis: Vec<Vec<Monomial>>,
    std_basis: Vec<Vec<Monomial>>,
    /// rank in `R_d` -> index in `A_d`
    std_index: Vec<Vec<u32>>,
    /// `var_mult[e][k][i]`: coordinates of `x_k * u_i` in `A_{e+1}`
    var_mult: Vec<Vec<Vec<Vec<(u32, u32)>>>>,
}

impl QuotientAlgebra {
    pub fn polynomial(ring: Ring) -> Self {
        Self::build(ring, None)
    }

    pub fn quotient(gb: GroebnerBasis) -> Self {
        let ring = gb.ring();
        if gb.is_empty() {
            return Self::build(ring, None);
        }
        Self::build(ring, Some(gb))
    }

    fn build(ring: Ring, gb: Option<GroebnerBasis>) -> Self {
        let mut a = QuotientAlgebra {
            ring,
            gb,
            ring_basis: Vec::new(),
            std_basis: Vec::new(),
            std_index: Vec::new(),
            var_mult: Vec::new(),
        };
        a.extend_to(0);
        a
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn groebner(&self) -> Option<&GroebnerBasis> {
        self.gb.as_ref()
    }

    pub fn max_degree(&self) -> i32 {
        self.ring_basis.len() as i32 - 1
    }

    /// Makes degrees `<= d` available.
    pub fn extend_to(&mut self, d: i32) {
        while self.max_degree() < d {
            let e = (self.max_degree() + 1) as u32;
            let basis = self.ring.basis(e);
            let mut index = vec![NOT_STANDARD; basis.len()];
            let mut std = Vec::new();
            for (i, &m) in basis.iter().enumerate() {
                if self.gb.as_ref().is_none_or(|g| g.is_standard(m)) {
                    index[i] = std.len() as u32;
                    std.push(m);
                }
            }
            self.ring_basis.push(basis);
            self.std_basis.push(std);
            self.std_index.push(index);
            if e > 0 {
                let prev = (e - 1) as usize;
                let mut table = Vec::with_capacity(self.ring.nvars());
                for k in 0..self.ring.nvars() {
                    let xk = Monomial::var(k);
                    let col: Vec<Vec<(u32, u32)>> = self.std_basis[prev]
                        .iter()
                        .map(|&u| self.sparse_coords(&[(u.mul(xk), 1)], e))
                        .collect();
                    table.push(col);
                }
                self.var_mult.push(table);
            }
        }
    }

    fn ensure(&self, d: i32) {
        assert!(d <= self.max_degree(), "algebra not extended to degree {d}");
    }

    pub fn dim(&self, d: i32) -> usize {
        if d < 0 {
            return 0;
        }
        self.ensure(d);
        self.std_basis[d as usize].len()
    }

    pub fn std_basis(&self, d: i32) -> &[Monomial] {
        if d < 0 {
            return &[];
        }
        self.ensure(d);
        &self.std_basis[d as usize]
    }

    /// Normal-form coordinates in `A_e` of `Σ c·m`, all `m` of degree `e`.
    fn sparse_coords(&self, terms: &[(Monomial, u32)], e: u32) -> Vec<(u32, u32)> {
        let dense = self.dense_coords(terms.iter().copied(), e);
        dense
            .into_iter()
            .enumerate()
            .filter(|t| t.1 != 0)
            .map(|(i, c)| (i as u32, c))
            .collect()
    }

    fn dense_coords(&self, terms: impl Iterator<Item = (Monomial, u32)>, e: u32) -> Vec<u32> {
        let f = self.ring.field();
        let ed = e as usize;
        let index = &self.std_index[ed];
        let mut out = vec![0u32; self.std_basis[ed].len()];
        let mut spill: Option<Vec<u32>> = None;
        for (m, c) in terms {
            let r = self.ring.rank(m);
            let i = index[r];
            if i != NOT_STANDARD {
                out[i as usize] = f.add(out[i as usize], c);
            } else {
                let v = spill.get_or_insert_with(|| vec![0u32; self.ring_basis[ed].len()]);
                v[r] = f.add(v[r], c);
            }
        }
        if let Some(mut v) = spill {
            let gb = self.gb.as_ref().expect("nonstandard monomial without a quotient");
            gb.normal_form_dense_in(&mut v, &self.ring_basis[ed]);
            for (r, &c) in v.iter().enumerate() {
                if c != 0 {
                    let i = index[r];
                    debug_assert_ne!(i, NOT_STANDARD);
                    out[i as usize] = f.add(out[i as usize], c);
                }
            }
        }
        out
    }

    /// `out += c * f * u` in coordinates of `A_{deg f + deg u}`.
    pub fn add_product(&self, f: &HomogPoly, u: Monomial, c: u32, out: &mut [u32]) {
        let Some(df) = f.degree() else {
            return;
        };
        let e = df + u.degree();
        self.ensure(e as i32);
        let field = self.ring.field();
        let coords = self.dense_coords(f.terms().iter().map(|&(m, a)| (m.mul(u), field.mul(a, c))), e);
        for (o, x) in out.iter_mut().zip(coords) {
            if x != 0 {
                *o = field.add(*o, x);
            }
        }
    }

    /// Coordinates of a form of degree `e` in `A_e`.
    pub fn coords(&self, f: &HomogPoly, e: u32) -> Vec<u32> {
        self.ensure(e as i32);
        if f.is_zero() {
            return vec![0; self.dim(e as i32)];
        }
        assert_eq!(f.degree(), Some(e));
        self.dense_coords(f.terms().iter().copied(), e)
    }

    /// The form with coordinates `v` in `A_e` (standard representative).
    pub fn form(&self, e: i32, v: &[u32]) -> HomogPoly {
        if e < 0 {
            return HomogPoly::zero(self.ring);
        }
        let basis = self.std_basis(e);
        let terms = basis.iter().zip(v).filter(|t| *t.1 != 0).map(|(&m, &c)| (m, c));
        HomogPoly::from_terms(self.ring, terms).expect("standard monomials share a degree")
    }

    /// `out += c * x_k * v` where `v` has coordinates in `A_e`.
    pub fn add_var_times(&self, k: usize, e: i32, v: &[u32], c: u32, out: &mut [u32]) {
        if e < 0 {
            return;
        }
        self.ensure(e + 1);
        let f = self.ring.field();
        let table = &self.var_mult[e as usize][k];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let s = f.mul(a, c);
            for &(j, b) in &table[i] {
                let j = j as usize;
                out[j] = f.add(out[j], f.mul(s, b));
            }
        }
    }
}

/// Coordinates of `(⊕ A(-t_c))_d`: block offsets for each summand.
#[derive(Clone, Debug)]
pub struct Layout {
    pub degree: i32,
    pub offsets: Vec<usize>,
    pub sizes: Vec<usize>,
    pub total: usize,
}

impl Layout {
    pub fn new(alg: &QuotientAlgebra, twists: &[i32], d: i32) -> Self {
        let mut offsets = Vec::with_capacity(twists.len());
        let mut sizes = Vec::with_capacity(twists.len());
        let mut total = 0;
        for &t in twists {
            offsets.push(total);
            let s = alg.dim(d - t);
            sizes.push(s);
            total += s;
        }
        Layout { degree: d, offsets, sizes, total }
    }
}

/// Matrix of `M: (F1)_d -> (F0)_d` over `alg`; rows index `(F0)_d`.
pub fn map_in_degree(alg: &QuotientAlgebra, m: &GradedMatrix, d: i32) -> ScalarMatrix {
    let src = Layout::new(alg, m.col_twists(), d);
    let dst = Layout::new(alg, m.row_twists(), d);
    let field = alg.ring().field();
    let mut out = ScalarMatrix::zeros(field, dst.total, src.total);
    let mut col = vec![0u32; dst.total];
    for c in 0..m.ncols() {
        let basis = alg.std_basis(d - m.col_twists()[c]).to_vec();
        for (k, &u) in basis.iter().enumerate() {
            col.iter_mut().for_each(|x| *x = 0);
            for r in 0..m.nrows() {
                let e = m.get(r, c);
                if e.is_zero() {
                    continue;
                }
                let block = &mut col[dst.offsets[r]..dst.offsets[r] + dst.sizes[r]];
                alg.add_product(e, u, 1, block);
            }
            let j = src.offsets[c] + k;
            for (i, &v) in col.iter().enumerate() {
                if v != 0 {
                    out.set(i, j, v);
                }
            }
        }
    }
    out
}

/// A graded module known in degrees `min..=max`: dimensions and the
/// multiplication maps by each variable.
#[derive(Clone, Debug)]
pub struct TruncatedModule {
    ring: Ring,
    min_degree: i32,
    dims: Vec<usize>,
    /// `mult[d - min][k]`: `M_d -> M_{d+1}`, as a matrix with `dim M_{d+1}` rows.
    mult: Vec<Vec<ScalarMatrix>>,
}

impl TruncatedModule {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn min_degree(&self) -> i32 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i32 {
        self.min_degree + self.dims.len() as i32 - 1
    }

    pub fn dim(&self, d: i32) -> usize {
        if d < self.min_degree || d > self.max_degree() {
            return 0;
        }
        self.dims[(d - self.min_degree) as usize]
    }

    pub fn hilbert_values(&self) -> &[usize] {
        &self.dims
    }

    /// Multiplication by `x_k` from degree `d`; `None` past the truncation.
    pub fn mult(&self, k: usize, d: i32) -> Option<&ScalarMatrix> {
        if d < self.min_degree || d >= self.max_degree() {
            return None;
        }
        Some(&self.mult[(d - self.min_degree) as usize][k])
    }

    /// `R/I` in degrees `0..=max_degree`, by linear algebra on `I_d` only.
    pub fn from_ideal(ideal: &HomogeneousIdeal, max_degree: u32) -> Self {
        let ring = ideal.ring();
        let parts = degree_parts(ideal, max_degree);
        let quotients: Vec<QuotientCoords> = parts.iter().map(QuotientCoords::new).collect();
        let mut mult = Vec::new();
        for d in 0..max_degree as usize {
            let from = &quotients[d];
            let to = &quotients[d + 1];
            let basis_d = ring.basis(d as u32);
            let mut per_var = Vec::with_capacity(ring.nvars());
            for k in 0..ring.nvars() {
                let mut m = ScalarMatrix::zeros(ring.field(), to.dim(), from.dim());
                for (j, &col) in from.free_cols.iter().enumerate() {
                    let mut v = vec![0u32; parts[d + 1].ambient_dim()];
                    v[ring.rank(basis_d[col].mul(Monomial::var(k)))] = 1;
                    for (i, x) in to.project(&parts[d + 1], &mut v).into_iter().enumerate() {
                        if x != 0 {
                            m.set(i, j, x);
                        }
                    }
                }
                per_var.push(m);
            }
            mult.push(per_var);
        }
        TruncatedModule { ring, min_degree: 0, dims: quotients.iter().map(|q| q.dim()).collect(), mult }
    }

    /// `coker(P)` over the polynomial ring in degrees `min..=max`.
    pub fn from_presentation(p: &GradedMatrix, max_degree: i32) -> Result<Self> {
        let ring = p.ring();
        let min_degree = p.row_twists().iter().copied().min().ok_or(Error::OutOfRange("empty presentation".into()))?;
        if max_degree < min_degree {
            return Err(Error::IncreaseBounds("module truncated below its generators".into()));
        }
        let mut alg = QuotientAlgebra::polynomial(ring);
        alg.extend_to(max_degree - min_degree + 1);
        let spans = image_spans(&alg, p, min_degree, max_degree);
        let quotients: Vec<QuotientCoords> = spans.iter().map(QuotientCoords::new).collect();
        let mut mult = Vec::new();
        for d in min_degree..max_degree {
            let idx = (d - min_degree) as usize;
            let from_layout = Layout::new(&alg, p.row_twists(), d);
            let to_layout = Layout::new(&alg, p.row_twists(), d + 1);
            let (from, to) = (&quotients[idx], &quotients[idx + 1]);
            let mut per_var = Vec::with_capacity(ring.nvars());
            for k in 0..ring.nvars() {
                let mut m = ScalarMatrix::zeros(ring.field(), to.dim(), from.dim());
                for (j, &col) in from.free_cols.iter().enumerate() {
                    let mut e = vec![0u32; from_layout.total];
                    e[col] = 1;
                    let mut v = vec![0u32; to_layout.total];
                    shift_by_var(&alg, k, &e, p.row_twists(), &from_layout, &to_layout, &mut v);
                    for (i, x) in to.project(&spans[idx + 1], &mut v).into_iter().enumerate() {
                        if x != 0 {
                            m.set(i, j, x);
                        }
                    }
                }
                per_var.push(m);
            }
            mult.push(per_var);
        }
        Ok(TruncatedModule { ring, min_degree, dims: quotients.iter().map(|q| q.dim()).collect(), mult })
    }
}

/// `out += x_k * v`, for `v ∈ (⊕ A(-t))_d` and `out ∈ (⊕ A(-t))_{d+1}`.
pub fn shift_by_var(alg: &QuotientAlgebra, k: usize, v: &[u32], twists: &[i32], from: &Layout, to: &Layout, out: &mut [u32]) {
    for (c, &t) in twists.iter().enumerate() {
        let (o, s) = (from.offsets[c], from.sizes[c]);
        if s == 0 {
            continue;
        }
        let block = &v[o..o + s];
        if block.iter().all(|&x| x == 0) {
            continue;
        }
        let dst = &mut out[to.offsets[c]..to.offsets[c] + to.sizes[c]];
        alg.add_var_times(k, from.degree - t, block, 1, dst);
    }
}

/// Spans of `im(P)_d ⊆ (F0)_d` for `d` in `lo..=hi`.
pub fn image_spans(alg: &QuotientAlgebra, p: &GradedMatrix, lo: i32, hi: i32) -> Vec<EchelonBasis> {
    let field = alg.ring().field();
    let mut spans: Vec<EchelonBasis> = Vec::new();
    for d in lo..=hi {
        let layout = Layout::new(alg, p.row_twists(), d);
        let mut e = EchelonBasis::new(field, layout.total);
        if d > lo {
            let prev_layout = Layout::new(alg, p.row_twists(), d - 1);
            let prev: Vec<Vec<u32>> = spans.last().unwrap().vectors().map(|v| v.to_vec()).collect();
            'outer: for v in prev {
                for k in 0..alg.ring().nvars() {
                    if e.len() == layout.total {
                        break 'outer;
                    }
                    let mut w = vec![0u32; layout.total];
                    shift_by_var(alg, k, &v, p.row_twists(), &prev_layout, &layout, &mut w);
                    e.insert_owned(&mut w);
                }
            }
        }
        for c in 0..p.ncols() {
            if p.col_twists()[c] != d {
                continue;
            }
            let mut w = vec![0u32; layout.total];
            for r in 0..p.nrows() {
                let f = p.get(r, c);
                if !f.is_zero() {
                    let block = &mut w[layout.offsets[r]..layout.offsets[r] + layout.sizes[r]];
                    alg.add_product(f, Monomial::ONE, 1, block);
                }
            }
            e.insert_owned(&mut w);
        }
        spans.push(e);
    }
    spans
}

/// Coordinates on `V / W` given by the non-pivot columns of an echelon basis of `W`.
struct QuotientCoords {
    free_cols: Vec<usize>,
}

impl QuotientCoords {
    fn new(w: &EchelonBasis) -> Self {
        let free_cols = (0..w.ambient_dim()).filter(|&c| !w.is_pivot(c)).collect();
        QuotientCoords { free_cols }
    }

    fn dim(&self) -> usize {
        self.free_cols.len()
    }

    fn project(&self, w: &EchelonBasis, v: &mut [u32]) -> Vec<u32> {
        w.reduce(v);
        self.free_cols.iter().map(|&c| v[c]).collect()
    }
}
