//! Homogeneous polynomials over a prime field.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{FieldScalar, PrimeField};
use crate::monomial::{count_monomials, monomials_of_degree, rank, Monomial, MAX_VARS};

/// Polynomial ring `F_p[x0, ..., x_{n-1}]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    nvars: usize,
    field: PrimeField,
}

impl Ring {
    pub fn new(nvars: usize, field: PrimeField) -> Self {
        assert!((1..=MAX_VARS).contains(&nvars), "unsupported number of variables");
        Ring { nvars, field }
    }

    #[inline]
    pub fn nvars(self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn dim(self, d: i64) -> usize {
        count_monomials(self.nvars, d)
    }

    pub fn basis(self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars, d)
    }

    #[inline]
    pub fn rank(self, m: Monomial) -> usize {
        rank(m, self.nvars)
    }
}

/// A homogeneous polynomial. Terms are kept strictly decreasing in grevlex
/// with nonzero coefficients; the zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogPoly {
    ring: Ring,
    terms: Vec<(Monomial, u32)>,
}

impl HomogPoly {
    pub fn zero(ring: Ring) -> Self {
        HomogPoly { ring, terms: Vec::new() }
    }

    pub fn constant(ring: Ring, c: u32) -> Self {
        Self::monomial(ring, Monomial::ONE, c)
    }

    pub fn monomial(ring: Ring, m: Monomial, c: u32) -> Self {
        let c = c % ring.field.modulus();
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        HomogPoly { ring, terms }
    }

    pub fn var(ring: Ring, i: usize) -> Self {
        assert!(i < ring.nvars);
        Self::monomial(ring, Monomial::var(i), 1)
    }

    /// Collects terms, merging duplicates and dropping zeros.
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (Monomial, u32)>) -> Result<Self> {
        let f = ring.field;
        let mut ts: Vec<(Monomial, u32)> = terms.into_iter().map(|(m, c)| (m, c % f.modulus())).collect();
        ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(ts.len());
        for (m, c) in ts {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = f.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        if let Some(&(m0, _)) = out.first() {
            if out.iter().any(|t| t.0.degree() != m0.degree()) {
                return Err(Error::NotHomogeneous);
            }
            let nv = ring.nvars;
            if out.iter().any(|t| t.0.support().any(|i| i >= nv)) {
                return Err(Error::OutOfRange("variable index".into()));
            }
        }
        Ok(HomogPoly { ring, terms: out })
    }

    /// Builds a form of degree `d` from coordinates in the basis `ring.basis(d)`.
    pub fn from_dense(ring: Ring, d: u32, coeffs: &[u32]) -> Self {
        let basis = ring.basis(d);
        assert_eq!(basis.len(), coeffs.len());
        let mut terms: Vec<(Monomial, u32)> = basis
            .into_iter()
            .zip(coeffs.iter().copied())
            .filter(|t| t.1 != 0)
            .collect();
        terms.reverse();
        HomogPoly { ring, terms }
    }

    /// Coordinates in the basis `ring.basis(d)`; `d` must match unless zero.
    pub fn to_dense(&self, d: u32) -> Vec<u32> {
        let mut v = vec![0u32; self.ring.dim(d as i64)];
        self.add_into_dense(&mut v, 1);
        v
    }

    /// `v += c * self` in dense coordinates of the polynomial's degree.
    pub fn add_into_dense(&self, v: &mut [u32], c: u32) {
        let f = self.ring.field;
        for &(m, a) in &self.terms {
            let i = self.ring.rank(m);
            v[i] = f.add(v[i], f.mul(a, c));
        }
    }

    #[inline]
    pub fn ring(&self) -> Ring {
        self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.degree())
    }

    pub fn leading(&self) -> Option<(Monomial, u32)> {
        self.terms.first().copied()
    }

    pub fn coefficient(&self, m: Monomial) -> u32 {
        self.terms
            .binary_search_by(|t| m.cmp(&t.0))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn merge(&self, other: &HomogPoly, sign: u32) -> HomogPoly {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let f = self.ring.field;
        let scale = |c: u32| if sign == 1 { c } else { f.neg(c) };
        if self.is_zero() {
            let terms = other.terms.iter().map(|&(m, c)| (m, scale(c))).collect();
            return HomogPoly { ring: self.ring, terms };
        }
        if !other.is_zero() {
            assert_eq!(self.degree(), other.degree(), "adding forms of different degrees");
        }
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                core::cmp::Ordering::Less => {
                    out.push((b[j].0, scale(b[j].1)));
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let c = f.add(a[i].1, scale(b[j].1));
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(m, c)| (m, scale(c))));
        HomogPoly { ring: self.ring, terms: out }
    }

    pub fn add(&self, other: &HomogPoly) -> HomogPoly {
        self.merge(other, 1)
    }

    pub fn sub(&self, other: &HomogPoly) -> HomogPoly {
        self.merge(other, 0)
    }

    pub fn neg(&self) -> HomogPoly {
        self.scale(self.ring.field.neg(1))
    }

    pub fn scale(&self, c: u32) -> HomogPoly {
        let f = self.ring.field;
        let c = c % f.modulus();
        if c == 0 {
            return HomogPoly::zero(self.ring);
        }
        let terms = self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect();
        HomogPoly { ring: self.ring, terms }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> HomogPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.ring.field.inv(c).expect("nonzero")),
        }
    }

    pub fn mul_monomial(&self, m: Monomial, c: u32) -> HomogPoly {
        let f = self.ring.field;
        let c = c % f.modulus();
        if c == 0 {
            return HomogPoly::zero(self.ring);
        }
        // multiplication by a monomial preserves grevlex order
        let terms = self.terms.iter().map(|&(t, a)| (t.mul(m), f.mul(a, c))).collect();
        HomogPoly { ring: self.ring, terms }
    }

    pub fn mul(&self, other: &HomogPoly) -> HomogPoly {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        if self.is_zero() || other.is_zero() {
            return HomogPoly::zero(self.ring);
        }
        let f = self.ring.field;
        let d = self.degree().unwrap() + other.degree().unwrap();
        let dim = self.ring.dim(d as i64);
        let products = self.terms.len() * other.terms.len();
        if dim <= 4 * products + 64 {
            let mut acc = vec![0u64; dim];
            for &(a, ca) in &self.terms {
                for &(b, cb) in &other.terms {
                    let i = self.ring.rank(a.mul(b));
                    acc[i] = (acc[i] + ca as u64 * cb as u64) % f.modulus() as u64;
                }
            }
            let v: Vec<u32> = acc.into_iter().map(|x| x as u32).collect();
            return HomogPoly::from_dense(self.ring, d, &v);
        }
        let mut ts = Vec::with_capacity(products);
        for &(a, ca) in &self.terms {
            for &(b, cb) in &other.terms {
                ts.push((a.mul(b), f.mul(ca, cb)));
            }
        }
        HomogPoly::from_terms(self.ring, ts).expect("product of forms is homogeneous")
    }

    pub fn pow(&self, e: u32) -> HomogPoly {
        let mut acc = HomogPoly::constant(self.ring, 1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Value at a point given by residues.
    pub fn eval(&self, point: &[u32]) -> u32 {
        assert_eq!(point.len(), self.ring.nvars);
        let f = self.ring.field;
        let d = match self.degree() {
            None => return 0,
            Some(d) => d as usize,
        };
        let mut powers: Vec<Vec<u32>> = Vec::with_capacity(point.len());
        for &x in point {
            let mut row = Vec::with_capacity(d + 1);
            let mut acc = 1u32;
            for _ in 0..=d {
                row.push(acc);
                acc = f.mul(acc, x);
            }
            powers.push(row);
        }
        let mut sum = 0u32;
        for &(m, c) in &self.terms {
            let mut t = c;
            for (i, row) in powers.iter().enumerate() {
                let e = m.exponent(i) as usize;
                if e > 0 {
                    t = f.mul(t, row[e]);
                }
            }
            sum = f.add(sum, t);
        }
        sum
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> HomogPoly {
        let f = self.ring.field;
        let xi = Monomial::var(i);
        let ts = self.terms.iter().filter_map(|&(m, c)| {
            let e = m.exponent(i);
            (e > 0).then(|| (m.div(xi), f.mul(c, f.reduce(e as u64))))
        });
        HomogPoly::from_terms(self.ring, ts).expect("derivative of a form")
    }

    /// Substitutes `x_i -> images[i]`; all images must share one degree.
    pub fn substitute(&self, images: &[HomogPoly]) -> HomogPoly {
        assert_eq!(images.len(), self.ring.nvars);
        let target = images[0].ring;
        let d = match self.degree() {
            None => return HomogPoly::zero(target),
            Some(d) => d,
        };
        let mut powers: Vec<Vec<HomogPoly>> = Vec::with_capacity(images.len());
        for g in images {
            let mut row = vec![HomogPoly::constant(target, 1)];
            for k in 1..=d as usize {
                let next = row[k - 1].mul(g);
                row.push(next);
            }
            powers.push(row);
        }
        let mut acc: Option<HomogPoly> = None;
        for &(m, c) in &self.terms {
            let mut t = HomogPoly::constant(target, c);
            for (i, row) in powers.iter().enumerate() {
                let e = m.exponent(i) as usize;
                if e > 0 {
                    t = t.mul(&row[e]);
                }
            }
            acc = Some(match acc {
                None => t,
                Some(a) if a.is_zero() => t,
                Some(a) if t.is_zero() => a,
                Some(a) => a.add(&t),
            });
        }
        acc.unwrap_or_else(|| HomogPoly::zero(target))
    }
}

/// `f * g`, rejecting operands over different primes.
pub fn poly_multiply(f: &HomogPoly, g: &HomogPoly) -> Result<HomogPoly> {
    let (a, b) = (f.ring.field.modulus(), g.ring.field.modulus());
    if a != b {
        return Err(Error::ModulusMismatch { left: a, right: b });
    }
    if f.ring != g.ring {
        return Err(Error::RingMismatch);
    }
    Ok(f.mul(g))
}

pub fn poly_evaluate(f: &HomogPoly, point: &[FieldScalar]) -> Result<FieldScalar> {
    let field = f.ring.field;
    if point.len() != f.ring.nvars {
        return Err(Error::DimensionMismatch { expected: f.ring.nvars, got: point.len() });
    }
    if let Some(q) = point.iter().find(|q| q.field() != field) {
        return Err(Error::ModulusMismatch { left: field.modulus(), right: q.field().modulus() });
    }
    let raw: Vec<u32> = point.iter().map(|q| q.value()).collect();
    Ok(field.scalar(f.eval(&raw)))
}

/// `⊕ R(-a_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedFreeModule {
    pub twists: Vec<i32>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i32>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// Degree a component in summand `i` must have for the element to be of degree `d`.
    pub fn component_degree(&self, i: usize, d: i32) -> i32 {
        d - self.twists[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(n: usize) -> Ring {
        Ring::new(n, PrimeField::default_field())
    }

    fn random_form(r: Ring, d: u32, coeffs: &[u32]) -> HomogPoly {
        let n = r.dim(d as i64);
        let v: Vec<u32> = (0..n).map(|i| coeffs[i % coeffs.len()] % r.field().modulus()).collect();
        HomogPoly::from_dense(r, d, &v)
    }

    // term-by-term product without the dense fast path
    fn naive_mul(f: &HomogPoly, g: &HomogPoly) -> HomogPoly {
        let fld = f.ring().field();
        let mut ts = Vec::new();
        for &(a, ca) in f.terms() {
            for &(b, cb) in g.terms() {
                ts.push((a.mul(b), fld.mul(ca, cb)));
            }
        }
        HomogPoly::from_terms(f.ring(), ts).unwrap()
    }

    #[test]
    fn square_of_variable() {
        let r = ring(6);
        let x0 = HomogPoly::var(r, 0);
        let sq = poly_multiply(&x0, &x0).unwrap();
        assert_eq!(sq.terms(), &[(Monomial::from_exponents(&[2]), 1)]);
        assert!(x0.mul(&HomogPoly::zero(r)).is_zero());
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let a = HomogPoly::var(ring(3), 0);
        let b = HomogPoly::var(Ring::new(3, PrimeField::new(7).unwrap()), 0);
        assert!(matches!(poly_multiply(&a, &b), Err(Error::ModulusMismatch { .. })));
    }

    #[test]
    fn evaluate_small() {
        let r = ring(6);
        let fld = r.field();
        let f = HomogPoly::var(r, 0).mul(&HomogPoly::var(r, 1));
        let pt: Vec<_> = [1, 1, 0, 0, 0, 0].iter().map(|&v| fld.scalar(v)).collect();
        assert_eq!(poly_evaluate(&f, &pt).unwrap().value(), 1);
        let zero: Vec<_> = (0..6).map(|_| fld.scalar(0)).collect();
        assert_eq!(poly_evaluate(&f, &zero).unwrap().value(), 0);
    }

    #[test]
    fn non_homogeneous_terms_rejected() {
        let r = ring(2);
        let ts = [(Monomial::var(0), 1), (Monomial::from_exponents(&[2]), 1)];
        assert_eq!(HomogPoly::from_terms(r, ts), Err(Error::NotHomogeneous));
    }

    #[test]
    fn derivative_of_cube() {
        let r = ring(2);
        let f = HomogPoly::var(r, 0).pow(3);
        let df = f.derivative(0);
        assert_eq!(df, HomogPoly::var(r, 0).pow(2).scale(3));
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0u32..31991, b in 0u32..31991, c in 0u32..31991) {
            let f = PrimeField::default_field();
            prop_assert_eq!(f.add(a, b), f.add(b, a));
            prop_assert_eq!(f.mul(a, b), f.mul(b, a));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
        }

        #[test]
        fn grevlex_is_a_monomial_order(
            a in proptest::collection::vec(0u32..6, 4),
            b in proptest::collection::vec(0u32..6, 4),
            c in proptest::collection::vec(0u32..6, 4),
        ) {
            let (ma, mb, mc) = (Monomial::from_exponents(&a), Monomial::from_exponents(&b), Monomial::from_exponents(&c));
            if ma.degree() < mb.degree() {
                prop_assert!(ma < mb);
            }
            if ma < mb {
                prop_assert!(ma.mul(mc) < mb.mul(mc));
            }
        }

        #[test]
        fn multiplication_associates_and_distributes(
            ca in proptest::collection::vec(0u32..31991, 1..12),
            cb in proptest::collection::vec(0u32..31991, 1..12),
            cc in proptest::collection::vec(0u32..31991, 1..12),
        ) {
            let r = ring(4);
            let f = random_form(r, 3, &ca);
            let g = random_form(r, 3, &cb);
            let h = random_form(r, 3, &cc);
            prop_assert_eq!(f.mul(&g), naive_mul(&f, &g));
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
            prop_assert_eq!(f.mul(&g).degree(), Some(6).filter(|_| !f.is_zero() && !g.is_zero()));
        }

        #[test]
        fn evaluation_is_a_ring_homomorphism(
            ca in proptest::collection::vec(0u32..31991, 1..8),
            cb in proptest::collection::vec(0u32..31991, 1..8),
            pt in proptest::collection::vec(0u32..31991, 3),
        ) {
            let r = ring(3);
            let fld = r.field();
            let f = random_form(r, 2, &ca);
            let g = random_form(r, 2, &cb);
            prop_assert_eq!(f.add(&g).eval(&pt), fld.add(f.eval(&pt), g.eval(&pt)));
            prop_assert_eq!(f.mul(&g).eval(&pt), fld.mul(f.eval(&pt), g.eval(&pt)));
            // direct expansion with u64 powers
            let mut direct = 0u64;
            for &(m, c) in f.terms() {
                let mut t = c as u64;
                for i in 0..3 {
                    for _ in 0..m.exponent(i) {
                        t = t * pt[i] as u64 % 31991;
                    }
                }
                direct = (direct + t) % 31991;
            }
            prop_assert_eq!(f.eval(&pt) as u64, direct);
        }

        #[test]
        fn dense_round_trip(c in proptest::collection::vec(0u32..31991, 1..20)) {
            let r = ring(5);
            let f = random_form(r, 3, &c);
            prop_assert_eq!(HomogPoly::from_dense(r, 3, &f.to_dense(3)), f);
        }
    }
}
