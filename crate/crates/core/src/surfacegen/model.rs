use alloc::string::{String, ToString};

use crate::classifier::IntersectionData;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::HomogeneousIdeal;
use crate::random::retry_seed;

use super::enriques::enriques_pipeline;
use super::family::{Family, FamilyKind};
use super::implicit::implicitize;
use super::spec::{intersection_data, LinearSystemSpec};
use super::systems::{random_points, system_basis, RationalMap};

/// Retry budget for rational constructions.
pub const MAX_ATTEMPTS: u32 = 10;

/// An explicitly constructed surface together with how it was obtained.
#[derive(Clone, Debug)]
pub struct SurfaceModel {
    pub family: String,
    pub ideal: HomogeneousIdeal,
    pub spec: Option<LinearSystemSpec>,
    pub invariants: IntersectionData,
    /// Seed the caller asked for.
    pub seed: u64,
    /// Seed of the attempt that succeeded.
    pub used_seed: u64,
    pub attempts: u32,
}

impl SurfaceModel {
    pub fn prime(&self) -> u32 {
        self.ideal.ring().field().modulus()
    }
}

/// The embedding of a blowup of `P^2` or `F_e` at random points.
pub fn rational_map(spec: &LinearSystemSpec, field: PrimeField, seed: u64) -> Result<RationalMap> {
    let points = random_points(spec.ambient, field, spec.points(), seed);
    system_basis(spec, &points)
}

/// Runs `attempt` on `retry_seed(seed, k)` for `k < max` until it stops
/// reporting non-genericity.
pub fn with_retries<T>(seed: u64, max: u32, mut attempt: impl FnMut(u64) -> Result<T>) -> Result<(T, u64, u32)> {
    let mut last = String::new();
    for k in 0..max {
        let s = retry_seed(seed, k);
        match attempt(s) {
            Ok(v) => return Ok((v, s, k + 1)),
            Err(Error::NotGeneric(why)) => last = why,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityExhausted { attempts: max, last })
}

/// Image of the surface given by `spec` under a random choice of points,
/// cut out by forms of degree `<= degree_bound`.
pub fn construct_rational(family: &str, spec: &LinearSystemSpec, field: PrimeField, seed: u64, degree_bound: u32) -> Result<SurfaceModel> {
    let (ideal, used_seed, attempts) = with_retries(seed, MAX_ATTEMPTS, |s| {
        let map = rational_map(spec, field, s)?;
        Ok(implicitize(&map, degree_bound))
    })?;
    Ok(SurfaceModel {
        family: family.to_string(),
        ideal,
        spec: Some(spec.clone()),
        invariants: intersection_data(spec),
        seed,
        used_seed,
        attempts,
    })
}

pub fn construct_family(family: &Family, field: PrimeField, seed: u64) -> Result<SurfaceModel> {
    match &family.kind {
        FamilyKind::Rational(spec) => construct_rational(&family.id, spec, field, seed, 3),
        FamilyKind::Enriques => Ok(enriques_pipeline(field, seed)?.surface),
    }
}
