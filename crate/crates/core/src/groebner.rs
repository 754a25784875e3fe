//! Gröbner bases of homogeneous ideals, Hilbert series, ideal quotients and
//! saturation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::{kernel_basis, EchelonBasis, ScalarMatrix};
use crate::monomial::{binomial, Monomial};
use crate::poly::{HomogPoly, Ring};

/// Ideal generated by homogeneous forms.
#[derive(Clone, Debug)]
pub struct HomogeneousIdeal {
    ring: Ring,
    generators: Vec<HomogPoly>,
    cached_gb: Option<GroebnerBasis>,
}

impl HomogeneousIdeal {
    /// Zero generators are dropped.
    pub fn new(ring: Ring, generators: Vec<HomogPoly>) -> Self {
        for g in &generators {
            assert_eq!(g.ring(), ring, "generator from another ring");
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        HomogeneousIdeal { ring, generators, cached_gb: None }
    }

    pub fn zero(ring: Ring) -> Self {
        Self::new(ring, Vec::new())
    }

    /// `(x0, ..., x_n)`.
    pub fn maximal(ring: Ring) -> Self {
        Self::new(ring, (0..ring.nvars()).map(|i| HomogPoly::var(ring, i)).collect())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[HomogPoly] {
        &self.generators
    }

    /// Computes and stores the Gröbner basis.
    pub fn with_groebner(mut self) -> Self {
        if self.cached_gb.is_none() {
            self.cached_gb = Some(buchberger(&self));
        }
        self
    }

    pub fn cached_groebner(&self) -> Option<&GroebnerBasis> {
        self.cached_gb.as_ref()
    }

    pub fn groebner(&self) -> GroebnerBasis {
        match &self.cached_gb {
            Some(g) => g.clone(),
            None => buchberger(self),
        }
    }

    pub fn generators_of_degree(&self, d: u32) -> impl Iterator<Item = &HomogPoly> {
        self.generators.iter().filter(move |g| g.degree() == Some(d))
    }
}

/// A reduced Gröbner basis (monic, no leading term divides another, tails
/// reduced). When `truncated_at` is set the basis is only guaranteed up to
/// that degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<HomogPoly>,
    leading: Vec<Monomial>,
    truncated_at: Option<u32>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn elements(&self) -> &[HomogPoly] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn truncated_at(&self) -> Option<u32> {
        self.truncated_at
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn divisor_of(&self, m: Monomial) -> Option<usize> {
        self.leading.iter().position(|l| l.divides(m))
    }

    pub fn is_standard(&self, m: Monomial) -> bool {
        self.divisor_of(m).is_none()
    }

    /// Standard monomials of degree `d`.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        self.ring.basis(d).into_iter().filter(|&m| self.is_standard(m)).collect()
    }

    pub fn normal_form(&self, f: &HomogPoly) -> HomogPoly {
        let Some(d) = f.degree() else {
            return f.clone();
        };
        let mut v = f.to_dense(d);
        self.reduce_dense(&mut v, d, true);
        HomogPoly::from_dense(self.ring, d, &v)
    }

    /// Normal form in dense coordinates of degree `d`.
    pub fn normal_form_dense(&self, v: &mut [u32], d: u32) {
        self.reduce_dense(v, d, true);
    }

    pub fn contains(&self, f: &HomogPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    fn reduce_dense(&self, v: &mut [u32], d: u32, full: bool) -> Option<usize> {
        self.reduce_dense_in(v, &self.ring.basis(d), full)
    }

    /// Normal form of a dense vector whose coordinates index `basis`
    /// (the full monomial basis of one degree, as from `Ring::basis`).
    pub fn normal_form_dense_in(&self, v: &mut [u32], basis: &[Monomial]) {
        self.reduce_dense_in(v, basis, true);
    }

    /// Descending sweep over a dense vector; with `full` unset, stops at the
    /// first irreducible term.
    fn reduce_dense_in(&self, v: &mut [u32], basis: &[Monomial], full: bool) -> Option<usize> {
        let f = self.ring.field();
        for idx in (0..v.len()).rev() {
            let c = v[idx];
            if c == 0 {
                continue;
            }
            let m = basis[idx];
            match self.divisor_of(m) {
                Some(k) => {
                    let q = m.div(self.leading[k]);
                    let nc = f.neg(c);
                    for &(t, a) in self.elements[k].terms() {
                        let j = self.ring.rank(t.mul(q));
                        v[j] = f.add(v[j], f.mul(nc, a));
                    }
                    debug_assert_eq!(v[idx], 0);
                }
                None if !full => return Some(idx),
                None => {}
            }
        }
        None
    }

    /// `dim (R/I)_d` from the leading ideal.
    pub fn hilbert_value(&self, d: u32) -> usize {
        self.ring.basis(d).into_iter().filter(|&m| self.is_standard(m)).count()
    }
}

/// Buchberger's algorithm with the normal selection strategy.
pub fn buchberger(ideal: &HomogeneousIdeal) -> GroebnerBasis {
    groebner_up_to(ideal, None)
}

/// Gröbner basis correct in degrees `<= max_degree`.
pub fn buchberger_truncated(ideal: &HomogeneousIdeal, max_degree: u32) -> GroebnerBasis {
    groebner_up_to(ideal, Some(max_degree))
}

fn groebner_up_to(ideal: &HomogeneousIdeal, bound: Option<u32>) -> GroebnerBasis {
    let ring = ideal.ring;
    let field = ring.field();
    let mut gb = GroebnerBasis { ring, elements: Vec::new(), leading: Vec::new(), truncated_at: bound };

    let mut inputs: BTreeMap<u32, Vec<&HomogPoly>> = BTreeMap::new();
    for g in &ideal.generators {
        inputs.entry(g.degree().unwrap()).or_default().push(g);
    }
    // pending pairs keyed by lcm degree
    let mut pairs: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    loop {
        let next_in = inputs.keys().next().copied();
        let next_pair = pairs.keys().next().copied();
        let d = match (next_in, next_pair) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        if bound.is_some_and(|b| d > b) {
            break;
        }
        let basis = ring.basis(d);
        let dim = basis.len();
        let mut candidates: Vec<Vec<u32>> = Vec::new();
        for g in inputs.remove(&d).unwrap_or_default() {
            candidates.push(g.to_dense(d));
        }
        let degree_pairs = pairs.remove(&d).unwrap_or_default();
        let mut new_elems = Vec::new();
        let process = |v: &mut Vec<u32>, gb: &mut GroebnerBasis, new_elems: &mut Vec<usize>| {
            gb.reduce_dense(v, d, true);
            if let Some(top) = v.iter().rposition(|&x| x != 0) {
                let inv = field.inv(v[top]).unwrap();
                for x in v.iter_mut() {
                    *x = field.mul(*x, inv);
                }
                let g = HomogPoly::from_dense(ring, d, v);
                gb.leading.push(basis[top]);
                gb.elements.push(g);
                new_elems.push(gb.elements.len() - 1);
            }
        };
        for mut v in candidates {
            process(&mut v, &mut gb, &mut new_elems);
        }
        for (i, j) in degree_pairs {
            if !pending.remove(&(i, j)) {
                continue;
            }
            let lcm = gb.leading[i].lcm(gb.leading[j]);
            let chain = (0..gb.elements.len()).any(|k| {
                k != i
                    && k != j
                    && gb.leading[k].divides(lcm)
                    && !pending.contains(&ordered(i, k))
                    && !pending.contains(&ordered(j, k))
            });
            if chain {
                continue;
            }
            let mut v = vec![0u32; dim];
            let qi = lcm.div(gb.leading[i]);
            let qj = lcm.div(gb.leading[j]);
            for &(t, a) in gb.elements[i].terms() {
                let r = ring.rank(t.mul(qi));
                v[r] = field.add(v[r], a);
            }
            for &(t, a) in gb.elements[j].terms() {
                let r = ring.rank(t.mul(qj));
                v[r] = field.sub(v[r], a);
            }
            process(&mut v, &mut gb, &mut new_elems);
        }
        for &k in &new_elems {
            for i in 0..k {
                let (a, b) = (gb.leading[i], gb.leading[k]);
                if a.is_coprime(b) {
                    continue;
                }
                let deg = a.lcm(b).degree();
                pairs.entry(deg).or_default().push((i, k));
                pending.insert((i, k));
            }
        }
    }
    autoreduce(&mut gb);
    gb
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Drops redundant elements and reduces tails; sorts by leading monomial.
fn autoreduce(gb: &mut GroebnerBasis) {
    let n = gb.elements.len();
    let keep: Vec<bool> = (0..n)
        .map(|i| !(0..n).any(|j| j != i && gb.leading[j].divides(gb.leading[i]) && (gb.leading[j] != gb.leading[i] || j < i)))
        .collect();
    let mut elems: Vec<(Monomial, HomogPoly)> = Vec::new();
    for i in 0..n {
        if keep[i] {
            elems.push((gb.leading[i], gb.elements[i].clone()));
        }
    }
    elems.sort_by_key(|a| a.0);
    gb.leading = elems.iter().map(|e| e.0).collect();
    gb.elements = elems.into_iter().map(|e| e.1).collect();
    let ring = gb.ring;
    for i in 0..gb.elements.len() {
        let g = &gb.elements[i];
        let d = g.degree().unwrap();
        let mut v = g.to_dense(d);
        let top = ring.rank(gb.leading[i]);
        let lead = v[top];
        v[top] = 0;
        gb.reduce_dense(&mut v, d, true);
        v[top] = lead;
        gb.elements[i] = HomogPoly::from_dense(ring, d, &v);
    }
}

pub fn normal_form(f: &HomogPoly, gb: &GroebnerBasis) -> HomogPoly {
    gb.normal_form(f)
}

/// Hilbert function values and numerator of the Hilbert series of `R/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub values: Vec<i64>,
    /// Coefficients of `(1 - t)^n H(t)`, lowest degree first.
    pub numerator: Vec<i64>,
}

impl HilbertData {
    /// Expands `numerator / (1-t)^n` up to degree `d`.
    pub fn value_from_numerator(numerator: &[i64], nvars: usize, d: i64) -> i64 {
        numerator
            .iter()
            .enumerate()
            .map(|(k, &c)| c * binomial(d - k as i64 + nvars as i64 - 1, nvars as i64 - 1) as i64)
            .sum()
    }

    /// Hilbert polynomial at `d` (any integer, including negative ones).
    pub fn polynomial_value(numerator: &[i64], nvars: usize, d: i64) -> i64 {
        numerator
            .iter()
            .enumerate()
            .map(|(k, &c)| c * poly_binomial(d - k as i64 + nvars as i64 - 1, nvars as i64 - 1))
            .sum()
    }
}

/// `C(x, k)` as a polynomial in `x` (valid for negative `x`).
pub fn poly_binomial(x: i64, k: i64) -> i64 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..k {
        num *= (x - i) as i128;
        den *= (i + 1) as i128;
    }
    (num / den) as i64
}

/// Hilbert series of `R/I` with values up to degree `max_degree`.
pub fn hilbert_series(ideal: &HomogeneousIdeal, max_degree: u32) -> HilbertData {
    let gb = ideal.groebner();
    hilbert_from_groebner(&gb, max_degree)
}

pub fn hilbert_from_groebner(gb: &GroebnerBasis, max_degree: u32) -> HilbertData {
    let n = gb.ring.nvars();
    let numerator = monomial_numerator(gb.leading.clone());
    let values = (0..=max_degree as i64)
        .map(|d| HilbertData::value_from_numerator(&numerator, n, d))
        .collect();
    HilbertData { values, numerator }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul_int(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_int(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &y) in b.iter().enumerate() {
        a[i + shift] += y;
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// Numerator `N(t)` with `H(R/I) = N(t)/(1-t)^n` for a monomial ideal,
/// by recursive pivot splitting `N(I) = N(I + (p)) + t^deg p N(I : p)`.
pub fn monomial_numerator(gens: Vec<Monomial>) -> Vec<i64> {
    trim(numerator_rec(minimalize(gens)))
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(*b)));
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut f = vec![0i64; d + 1];
            f[0] = 1;
            f[d] -= 1;
            acc = poly_mul_int(&acc, &f);
        }
        return acc;
    }
    // variable occurring in the most non-coprime generators
    let mut counts = [0usize; crate::monomial::MAX_VARS];
    for g in &gens {
        if g.degree() > 1 {
            for i in g.support() {
                counts[i] += 1;
            }
        }
    }
    let var = (0..counts.len()).max_by_key(|&i| (counts[i], usize::MAX - i)).unwrap();
    let mut exps: Vec<u32> = gens.iter().map(|g| g.exponent(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let mut pe = [0u32; crate::monomial::MAX_VARS];
    pe[var] = e;
    let pivot = Monomial::from_exponents(&pe);

    let mut plus = gens.clone();
    plus.push(pivot);
    let left = numerator_rec(minimalize(plus));
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(g.gcd(pivot))).collect();
    let right = numerator_rec(minimalize(colon));
    let mut out = left;
    poly_add_int(&mut out, &right, e as usize);
    out
}

/// `I_d` as a subspace of `R_d`, for `d = 0..=max_degree`, by spanning
/// monomial multiples of the generators.
pub fn degree_parts(ideal: &HomogeneousIdeal, max_degree: u32) -> Vec<EchelonBasis> {
    let ring = ideal.ring;
    let field = ring.field();
    let mut parts: Vec<EchelonBasis> = Vec::with_capacity(max_degree as usize + 1);
    for d in 0..=max_degree {
        let dim = ring.dim(d as i64);
        let mut e = EchelonBasis::new(field, dim);
        if d > 0 {
            let prev: Vec<Vec<u32>> = parts[d as usize - 1].vectors().map(|v| v.to_vec()).collect();
            let prev_basis = ring.basis(d - 1);
            for v in prev {
                for i in 0..ring.nvars() {
                    if e.len() == dim {
                        break;
                    }
                    let mut w = vec![0u32; dim];
                    let xi = Monomial::var(i);
                    for (k, &c) in v.iter().enumerate() {
                        if c != 0 {
                            w[ring.rank(prev_basis[k].mul(xi))] = c;
                        }
                    }
                    e.insert_owned(&mut w);
                }
            }
        }
        for g in ideal.generators_of_degree(d) {
            e.insert(&g.to_dense(d));
        }
        parts.push(e);
    }
    parts
}

/// Hilbert function of `R/I` by linear algebra only, independent of any
/// Gröbner basis.
pub fn hilbert_function_by_linear_algebra(ideal: &HomogeneousIdeal, max_degree: u32) -> Vec<i64> {
    let ring = ideal.ring;
    degree_parts(ideal, max_degree)
        .iter()
        .enumerate()
        .map(|(d, e)| ring.dim(d as i64) as i64 - e.len() as i64)
        .collect()
}

/// Basis of `{f in R_d : f h in I for all h in multipliers}`.
pub fn quotient_in_degree(gb: &GroebnerBasis, multipliers: &[HomogPoly], d: u32) -> Vec<HomogPoly> {
    let ring = gb.ring;
    let field = ring.field();
    let basis = ring.basis(d);
    // columns: monomials of R_d; rows: normal-form coordinates of m*h
    let mut row_blocks: Vec<Vec<Vec<u32>>> = Vec::new();
    for h in multipliers {
        let dh = d + h.degree().expect("nonzero multiplier");
        let standard: Vec<usize> = ring
            .basis(dh)
            .iter()
            .enumerate()
            .filter(|(_, m)| gb.is_standard(**m))
            .map(|(i, _)| i)
            .collect();
        let mut block = vec![vec![0u32; basis.len()]; standard.len()];
        let dim = ring.dim(dh as i64);
        for (col, &m) in basis.iter().enumerate() {
            let mut v = vec![0u32; dim];
            h.mul_monomial(m, 1).add_into_dense(&mut v, 1);
            gb.reduce_dense(&mut v, dh, true);
            for (row, &s) in standard.iter().enumerate() {
                block[row][col] = v[s];
            }
        }
        row_blocks.push(block);
    }
    let rows: Vec<Vec<u32>> = row_blocks.into_iter().flatten().collect();
    if rows.is_empty() {
        return basis.iter().map(|&m| HomogPoly::monomial(ring, m, 1)).collect();
    }
    let mat = ScalarMatrix::from_rows(field, basis.len(), &rows);
    kernel_basis(&mat)
        .into_iter()
        .map(|v| HomogPoly::from_dense(ring, d, &v))
        .collect()
}

/// Minimal generators, degree by degree, of an ideal given by its graded
/// pieces `parts[d]` (each a list of forms spanning the degree-`d` part).
pub fn generators_from_parts(ring: Ring, parts: &[Vec<HomogPoly>]) -> Vec<HomogPoly> {
    let mut gens = Vec::new();
    let mut ideal_so_far = HomogeneousIdeal::zero(ring);
    for (d, part) in parts.iter().enumerate() {
        let d = d as u32;
        let span = degree_parts(&ideal_so_far, d).pop().unwrap();
        let mut span = span;
        let mut added = false;
        for f in part {
            if f.is_zero() {
                continue;
            }
            if span.insert(&f.to_dense(d)) {
                gens.push(f.clone());
                added = true;
            }
        }
        if added {
            ideal_so_far = HomogeneousIdeal::new(ring, gens.clone());
        }
    }
    gens
}

/// `(I : J)` in degrees `<= max_degree`, as an ideal.
pub fn ideal_quotient(ideal: &HomogeneousIdeal, by: &[HomogPoly], max_degree: u32) -> HomogeneousIdeal {
    let gb = ideal.groebner();
    let parts: Vec<Vec<HomogPoly>> = (0..=max_degree).map(|d| quotient_in_degree(&gb, by, d)).collect();
    HomogeneousIdeal::new(ideal.ring, generators_from_parts(ideal.ring, &parts))
}

/// Saturation with respect to `(x0, ..., x_n)` by iterated quotients computed
/// in degrees up to `max_degree`.
pub fn saturate_irrelevant_bounded(ideal: &HomogeneousIdeal, max_degree: u32) -> HomogeneousIdeal {
    let ring = ideal.ring;
    let vars: Vec<HomogPoly> = (0..ring.nvars()).map(|i| HomogPoly::var(ring, i)).collect();
    let mut current = ideal.clone().with_groebner();
    let mut values = hilbert_from_groebner(current.cached_groebner().unwrap(), max_degree).values;
    loop {
        let next = ideal_quotient(&current, &vars, max_degree).with_groebner();
        let next_values = hilbert_from_groebner(next.cached_groebner().unwrap(), max_degree).values;
        if next_values == values {
            return current;
        }
        current = next;
        values = next_values;
    }
}

/// Saturation with the default bound: two past the top generator degree.
pub fn saturate_irrelevant(ideal: &HomogeneousIdeal) -> HomogeneousIdeal {
    let top = ideal.generators.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    saturate_irrelevant_bounded(ideal, top + 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::text::parse_poly;
    use proptest::prelude::*;
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ring(n: usize) -> Ring {
        Ring::new(n, PrimeField::default_field())
    }

    fn polys(r: Ring, s: &[&str]) -> Vec<HomogPoly> {
        s.iter().map(|t| parse_poly(r, t).unwrap()).collect()
    }

    fn random_form(r: Ring, d: u32, rng: &mut ChaCha8Rng) -> HomogPoly {
        let v: Vec<u32> = (0..r.dim(d as i64)).map(|_| rng.next_u32() % 31991).collect();
        HomogPoly::from_dense(r, d, &v)
    }

    fn check_gb(ideal: &HomogeneousIdeal, gb: &GroebnerBasis) {
        for g in ideal.generators() {
            assert!(gb.contains(g));
        }
        let top = gb.elements().iter().filter_map(|g| g.degree()).max().unwrap_or(0);
        let parts = degree_parts(ideal, top);
        for g in gb.elements() {
            let d = g.degree().unwrap();
            assert!(parts[d as usize].contains(&g.to_dense(d)));
        }
        // S-pairs reduce to zero
        let f = gb.ring().field();
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                let (a, b) = (gb.leading[i], gb.leading[j]);
                let l = a.lcm(b);
                let s = gb.elements[i].mul_monomial(l.div(a), 1).sub(&gb.elements[j].mul_monomial(l.div(b), 1));
                assert!(gb.contains(&s), "S-pair {i},{j} does not reduce");
                let _ = f;
            }
        }
        for (i, l) in gb.leading.iter().enumerate() {
            for (j, m) in gb.leading.iter().enumerate() {
                assert!(i == j || !l.divides(*m));
            }
        }
    }

    #[test]
    fn monomial_ideal_gives_minimal_generators() {
        let r = ring(3);
        let i = HomogeneousIdeal::new(r, polys(r, &["x0^2", "x0^2*x1", "x1*x2", "x0*x1*x2"]));
        let gb = buchberger(&i);
        assert_eq!(gb.elements(), &polys(r, &["x1*x2", "x0^2"])[..]);
    }

    #[test]
    fn generic_quadrics_have_complete_intersection_numerator() {
        let r = ring(3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let i = HomogeneousIdeal::new(r, vec![random_form(r, 2, &mut rng), random_form(r, 2, &mut rng)]);
        let gb = buchberger(&i);
        check_gb(&i, &gb);
        // (1 - t^2)^2
        assert_eq!(hilbert_from_groebner(&gb, 6).numerator, vec![1, 0, -2, 0, 1]);
    }

    #[test]
    fn numerators_of_trivial_ideals() {
        let r = ring(6);
        assert_eq!(hilbert_series(&HomogeneousIdeal::zero(r), 4).numerator, vec![1]);
        let x0 = HomogeneousIdeal::new(r, polys(r, &["x0"]));
        assert_eq!(hilbert_series(&x0, 4).numerator, vec![1, -1]);
    }

    #[test]
    fn normal_form_basics() {
        let r = ring(3);
        let i = HomogeneousIdeal::new(r, polys(r, &["x0^2 - x1*x2", "x1^2 - x0*x2"]));
        let gb = buchberger(&i);
        for g in i.generators() {
            assert!(normal_form(g, &gb).is_zero());
        }
        let one = HomogPoly::constant(r, 1);
        assert_eq!(normal_form(&one, &gb), one);
    }

    #[test]
    fn saturation_examples() {
        let r = ring(4);
        let prime = HomogeneousIdeal::new(r, polys(r, &["x0", "x1"]));
        let s = saturate_irrelevant(&prime);
        assert_eq!(hilbert_series(&s, 5).values, hilbert_series(&prime, 5).values);
        let m = HomogeneousIdeal::maximal(r);
        let s = saturate_irrelevant(&m);
        assert!(s.groebner().contains(&HomogPoly::constant(r, 1)));
    }

    #[test]
    fn saturation_removes_irrelevant_noise() {
        // twisted cubic I, then I ∩ m^3 style noise: replace the generators by
        // their products with all linear forms
        let r = ring(4);
        let tc = HomogeneousIdeal::new(
            r,
            polys(r, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]),
        );
        let mut noisy = Vec::new();
        for g in tc.generators() {
            for i in 0..4 {
                noisy.push(g.mul(&HomogPoly::var(r, i)));
            }
        }
        let noisy = HomogeneousIdeal::new(r, noisy);
        assert_ne!(hilbert_series(&noisy, 6).values, hilbert_series(&tc, 6).values);
        let s = saturate_irrelevant_bounded(&noisy, 5);
        let hs = hilbert_series(&s, 8);
        let ht = hilbert_series(&tc, 8);
        assert_eq!(hs.numerator, ht.numerator);
        // saturating again changes nothing
        let s2 = saturate_irrelevant_bounded(&s, 5);
        assert_eq!(hilbert_series(&s2, 8).values, hs.values);
    }

    #[test]
    fn quotient_by_variable() {
        let r = ring(3);
        let i = HomogeneousIdeal::new(r, polys(r, &["x0*x1", "x0*x2"]));
        let q = ideal_quotient(&i, &polys(r, &["x0"]), 3);
        let gb = q.groebner();
        assert!(gb.contains(&HomogPoly::var(r, 1)));
        assert!(gb.contains(&HomogPoly::var(r, 2)));
        assert!(!gb.contains(&HomogPoly::var(r, 0)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn groebner_hilbert_matches_linear_algebra(seed in any::<u64>(), n in 3usize..5, k in 1usize..4) {
            let r = ring(n);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let gens: Vec<HomogPoly> = (0..k)
                .map(|i| {
                    // sparse forms give less generic, more interesting bases
                    let mut f = random_form(r, 2 + (i as u32 % 2), &mut rng);
                    let keep = (rng.next_u32() % 4 + 2) as usize;
                    let ts: Vec<_> = f.terms().iter().copied().take(keep).collect();
                    f = HomogPoly::from_terms(r, ts).unwrap();
                    f
                })
                .collect();
            let ideal = HomogeneousIdeal::new(r, gens);
            let gb = buchberger(&ideal);
            check_gb(&ideal, &gb);
            let h = hilbert_from_groebner(&gb, 6);
            prop_assert_eq!(&h.values, &hilbert_function_by_linear_algebra(&ideal, 6));
            for d in 0..=6 {
                prop_assert_eq!(h.values[d], HilbertData::value_from_numerator(&h.numerator, n, d as i64));
            }
        }

        #[test]
        fn normal_form_is_idempotent(seed in any::<u64>()) {
            let r = ring(4);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let ideal = HomogeneousIdeal::new(r, vec![random_form(r, 2, &mut rng), random_form(r, 2, &mut rng), random_form(r, 3, &mut rng)]);
            let gb = buchberger(&ideal);
            let f = random_form(r, 4, &mut rng);
            let nf = gb.normal_form(&f);
            prop_assert_eq!(gb.normal_form(&nf), nf.clone());
            // f - NF(f) lies in the ideal
            let parts = degree_parts(&ideal, 4);
            prop_assert!(parts[4].contains(&f.sub(&nf).to_dense(4)));
        }
    }
}
