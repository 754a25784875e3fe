//! Seeded randomness shared by the constructions.

use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::PrimeField;
use crate::poly::{HomogPoly, Ring};

pub type Rng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed for the `attempt`-th retry of a construction started from `seed`.
pub fn retry_seed(seed: u64, attempt: u32) -> u64 {
    if attempt == 0 {
        return seed;
    }
    // splitmix64 step keeps retries far apart
    let mut z = seed.wrapping_add((attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn scalar(rng: &mut Rng, field: PrimeField) -> u32 {
    (rng.next_u64() % field.modulus() as u64) as u32
}

pub fn nonzero_scalar(rng: &mut Rng, field: PrimeField) -> u32 {
    loop {
        let c = scalar(rng, field);
        if c != 0 {
            return c;
        }
    }
}

pub fn vector(rng: &mut Rng, field: PrimeField, n: usize) -> Vec<u32> {
    (0..n).map(|_| scalar(rng, field)).collect()
}

/// Form of degree `d` with independent uniform coefficients.
pub fn form(rng: &mut Rng, ring: Ring, d: u32) -> HomogPoly {
    let coeffs = vector(rng, ring.field(), ring.dim(d as i64));
    HomogPoly::from_dense(ring, d, &coeffs)
}

/// Random linear combination of `forms` (all of one degree).
pub fn combination(rng: &mut Rng, forms: &[HomogPoly]) -> HomogPoly {
    let ring = forms[0].ring();
    forms
        .iter()
        .fold(HomogPoly::zero(ring), |acc, f| acc.add(&f.scale(scalar(rng, ring.field()))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn retries_differ_and_are_stable() {
        assert_eq!(retry_seed(7, 0), 7);
        assert_ne!(retry_seed(7, 1), retry_seed(7, 2));
        assert_eq!(retry_seed(7, 3), retry_seed(7, 3));
    }

    #[test]
    fn forms_are_deterministic() {
        let r = Ring::new(3, PrimeField::default_field());
        let a = form(&mut rng_from_seed(1), r, 3);
        let b = form(&mut rng_from_seed(1), r, 3);
        assert_eq!(a, b);
        assert_eq!(a.degree(), Some(3));
    }
}
