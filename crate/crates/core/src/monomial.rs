//! Packed monomials in at most eight variables, graded reverse lexicographic
//! order, and combinatorial ranking of the monomials of a fixed degree.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Maximum number of ring variables.
pub const MAX_VARS: usize = 8;
/// Exponents must stay below this bound (one spare bit per byte for SWAR tests).
pub const MAX_EXPONENT: u32 = 127;

const HIGH_BITS: u64 = 0x8080_8080_8080_8080;

/// Exponent vector, one byte per variable; byte `i` holds the exponent of `x_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut packed = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= MAX_EXPONENT, "exponent {e} too large");
            packed |= (e as u64) << (8 * i);
        }
        Monomial(packed)
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS);
        Monomial(1u64 << (8 * i))
    }

    pub fn packed(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn exponent(self, i: usize) -> u32 {
        ((self.0 >> (8 * i)) & 0xff) as u32
    }

    pub fn exponents(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    #[inline]
    pub fn degree(self) -> u32 {
        // horizontal byte sum
        let mut x = self.0;
        x = (x & 0x00ff_00ff_00ff_00ff) + ((x >> 8) & 0x00ff_00ff_00ff_00ff);
        x = (x & 0x0000_ffff_0000_ffff) + ((x >> 16) & 0x0000_ffff_0000_ffff);
        x = (x & 0x0000_0000_ffff_ffff) + (x >> 32);
        x as u32
    }

    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        let m = Monomial(self.0 + other.0);
        debug_assert!(m.0 & HIGH_BITS == 0, "exponent overflow");
        m
    }

    /// `self | other`
    #[inline]
    pub fn divides(self, other: Monomial) -> bool {
        ((other.0 | HIGH_BITS) - self.0) & HIGH_BITS == HIGH_BITS
    }

    /// `self / other`; caller guarantees divisibility.
    #[inline]
    pub fn div(self, other: Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0 - other.0)
    }

    pub fn checked_div(self, other: Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial(self.0 - other.0))
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        let mut out = 0u64;
        for i in 0..MAX_VARS {
            let a = (self.0 >> (8 * i)) & 0xff;
            let b = (other.0 >> (8 * i)) & 0xff;
            out |= a.max(b) << (8 * i);
        }
        Monomial(out)
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        let mut out = 0u64;
        for i in 0..MAX_VARS {
            let a = (self.0 >> (8 * i)) & 0xff;
            let b = (other.0 >> (8 * i)) & 0xff;
            out |= a.min(b) << (8 * i);
        }
        Monomial(out)
    }

    pub fn is_coprime(self, other: Monomial) -> bool {
        self.gcd(other) == Monomial::ONE
    }

    /// Indices of variables with a nonzero exponent.
    pub fn support(self) -> impl Iterator<Item = usize> {
        (0..MAX_VARS).filter(move |&i| self.exponent(i) > 0)
    }

    /// Graded reverse lexicographic comparison with `x0 > x1 > ... `.
    #[inline]
    pub fn grevlex_cmp(self, other: Monomial) -> Ordering {
        let (da, db) = (self.degree(), other.degree());
        if da != db {
            return da.cmp(&db);
        }
        for i in (0..MAX_VARS).rev() {
            let (a, b) = (self.exponent(i), other.exponent(i));
            if a != b {
                return b.cmp(&a);
            }
        }
        Ordering::Equal
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grevlex_cmp(*other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = (0..MAX_VARS).rev().find(|&i| self.exponent(i) > 0).map_or(1, |i| i + 1);
        write!(f, "{:?}", self.exponents(n))
    }
}

const BINOM_ROWS: usize = 160;
const BINOM_COLS: usize = MAX_VARS + 2;

const fn binomial_table() -> [[u64; BINOM_COLS]; BINOM_ROWS] {
    let mut t = [[0u64; BINOM_COLS]; BINOM_ROWS];
    let mut n = 0;
    while n < BINOM_ROWS {
        t[n][0] = 1;
        let mut k = 1;
        while k < BINOM_COLS {
            t[n][k] = if n == 0 { 0 } else { t[n - 1][k - 1] + t[n - 1][k] };
            k += 1;
        }
        n += 1;
    }
    t
}

static BINOM: [[u64; BINOM_COLS]; BINOM_ROWS] = binomial_table();

/// `C(n, k)` for the small `k` that occur in monomial counting.
pub fn binomial(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let (n, k) = (n as usize, k as usize);
    if n < BINOM_ROWS && k < BINOM_COLS {
        return BINOM[n][k];
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Number of monomials of degree `d` in `nvars` variables.
pub fn count_monomials(nvars: usize, d: i64) -> usize {
    if d < 0 {
        return 0;
    }
    binomial(d + nvars as i64 - 1, nvars as i64 - 1) as usize
}

/// All monomials of degree `d`, strictly increasing in grevlex.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    assert!((1..=MAX_VARS).contains(&nvars));
    let mut out = Vec::with_capacity(count_monomials(nvars, d as i64));
    let mut exps = [0u32; MAX_VARS];
    // descending lex on (a_{n-1}, ..., a_0) == ascending grevlex
    fn rec(pos: usize, rem: u32, exps: &mut [u32; MAX_VARS], nvars: usize, out: &mut Vec<Monomial>) {
        if pos == 0 {
            exps[0] = rem;
            out.push(Monomial::from_exponents(&exps[..nvars]));
            return;
        }
        for v in (0..=rem).rev() {
            exps[pos] = v;
            rec(pos - 1, rem - v, exps, nvars, out);
        }
        exps[pos] = 0;
    }
    rec(nvars - 1, d, &mut exps, nvars, &mut out);
    out
}

/// Position of `m` in [`monomials_of_degree`] for its degree.
#[inline]
pub fn rank(m: Monomial, nvars: usize) -> usize {
    let mut rem = m.degree() as i64;
    let mut r = 0u64;
    for idx in 0..nvars - 1 {
        let var = nvars - 1 - idx;
        let e = m.exponent(var) as i64;
        let parts = (nvars - 1 - idx) as i64;
        if e < rem {
            r += binomial(rem - e - 1 + parts, parts);
        }
        rem -= e;
    }
    r as usize
}
