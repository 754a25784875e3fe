//! Prime field arithmetic.
//!
//! Hot loops work on raw `u32` residues through [`PrimeField`]; the
//! [`FieldScalar`] wrapper carries its modulus and is what the public API
//! hands out.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;

/// Default characteristic used as a stand-in for characteristic zero.
pub const DEFAULT_PRIME: u32 = 31991;

/// A prime modulus `p < 2^31`. Copyable context for residue arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Validates that `p` is an odd prime below 2^31.
    pub fn new(p: u32) -> Result<Self, Error> {
        if !(3..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Self { p })
    }

    pub fn default_field() -> Self {
        Self { p: DEFAULT_PRIME }
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }

    #[inline]
    pub fn reduce_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i64, (a % self.p) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.reduce_i64(t0))
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Maps a small signed integer into the field.
    pub fn from_i64(self, v: i64) -> u32 {
        self.reduce_i64(v)
    }

    /// Symmetric lift into `(-p/2, p/2]`, used when printing coefficients.
    pub fn lift_signed(self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn scalar(self, v: u32) -> FieldScalar {
        FieldScalar {
            value: v % self.p,
            p: self.p,
        }
    }
}

/// Deterministic trial division; moduli here are below 2^31.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A residue together with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    value: u32,
    p: u32,
}

impl FieldScalar {
    pub fn new(value: u64, field: PrimeField) -> Self {
        Self {
            value: field.reduce(value),
            p: field.modulus(),
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse; zero is rejected.
    pub fn inverse(self) -> Result<Self, Error> {
        self.field()
            .inv(self.value)
            .map(|value| Self { value, p: self.p })
            .ok_or(Error::NonInvertible)
    }

    fn check(self, other: Self) {
        assert_eq!(self.p, other.p, "field scalars over different primes");
    }
}

/// Free-standing form of [`FieldScalar::inverse`].
pub fn scalar_inverse(a: FieldScalar) -> Result<FieldScalar, Error> {
    a.inverse()
}

impl Add for FieldScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        Self {
            value: self.field().add(self.value, rhs.value),
            p: self.p,
        }
    }
}

impl Sub for FieldScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check(rhs);
        Self {
            value: self.field().sub(self.value, rhs.value),
            p: self.p,
        }
    }
}

impl Mul for FieldScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        Self {
            value: self.field().mul(self.value, rhs.value),
            p: self.p,
        }
    }
}

impl Neg for FieldScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            value: self.field().neg(self.value),
            p: self.p,
        }
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_inverses() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(scalar_inverse(f.scalar(2)).unwrap().value(), 4);
        let g = PrimeField::default_field();
        assert_eq!(g.scalar(1).inverse().unwrap().value(), 1);
    }

    #[test]
    fn inverse_of_12345_mod_31991() {
        // extended Euclid by hand-independent brute force search
        let f = PrimeField::default_field();
        let brute = (1..31991u64).find(|x| x * 12345 % 31991 == 1).unwrap();
        assert_eq!(f.scalar(12345).inverse().unwrap().value() as u64, brute);
        assert_eq!(brute, 8873);
    }

    #[test]
    fn zero_is_not_invertible() {
        let f = PrimeField::default_field();
        assert_eq!(f.scalar(0).inverse(), Err(Error::NonInvertible));
    }

    #[test]
    fn rejects_composites_and_tiny_primes() {
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(31989).is_err());
        assert!(PrimeField::new(32003).is_ok());
    }

    #[test]
    fn pow_matches_fermat() {
        let f = PrimeField::default_field();
        for a in [2u32, 3, 17, 31990] {
            assert_eq!(f.pow(a, 31990), 1);
        }
    }
}
