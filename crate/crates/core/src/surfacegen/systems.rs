use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{kernel_basis, ScalarMatrix};
use crate::monomial::{binomial, Monomial};
use crate::poly::{HomogPoly, Ring};
use crate::random::{nonzero_scalar, rng_from_seed};

use super::spec::{Ambient, LinearSystemSpec};

/// Points in the dense torus of the source surface, in the affine chart
/// `x0 = 1` of `P^2` or `t0 = x0 = 1` of the Cox ring of `F_e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    pub ambient: Ambient,
    pub field: PrimeField,
    pub points: Vec<[u32; 2]>,
    pub seed: u64,
}

/// `count` distinct torus points drawn from `seed`.
pub fn random_points(ambient: Ambient, field: PrimeField, count: usize, seed: u64) -> PointConfig {
    let mut rng = rng_from_seed(seed);
    let mut seen = BTreeSet::new();
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        let p = [nonzero_scalar(&mut rng, field), nonzero_scalar(&mut rng, field)];
        if seen.insert(p) {
            points.push(p);
        }
    }
    PointConfig { ambient, field, points, seed }
}

/// Affine exponents `(i, j)` of `u^i v^j` spanning the sections of the class.
fn section_monomials(spec: &LinearSystemSpec) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    match spec.ambient {
        Ambient::Plane => {
            for j in 0..=spec.b {
                for i in 0..=spec.b - j {
                    out.push((i, j));
                }
            }
        }
        Ambient::Hirzebruch(e) => {
            for j in 0..=spec.a {
                let Some(top) = spec.b.checked_sub(j * e) else { continue };
                for i in 0..=top {
                    out.push((i, j));
                }
            }
        }
    }
    out
}

/// Homogenizing degree for the sections of the class in the plane chart.
fn chart_degree(spec: &LinearSystemSpec) -> u32 {
    section_monomials(spec).iter().map(|&(i, j)| i + j).max().unwrap_or(0)
}

/// Sections of a linear system with assigned base points, written as forms
/// of one degree in `x0, x1, x2` with `u = x1/x0`, `v = x2/x0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMap {
    pub source: Ambient,
    pub forms: Vec<HomogPoly>,
}

impl RationalMap {
    pub fn target_vars(&self) -> usize {
        self.forms.len()
    }

    pub fn degree(&self) -> u32 {
        self.forms.first().and_then(|f| f.degree()).unwrap_or(0)
    }

    /// Image of the affine point `(u, v)`.
    pub fn apply(&self, p: [u32; 2]) -> Vec<u32> {
        let pt = [1, p[0], p[1]];
        self.forms.iter().map(|f| f.eval(&pt)).collect()
    }
}

/// Rows: Hasse derivatives `D^(s,t)` with `s + t < m` at each point.
fn condition_matrix(field: PrimeField, monos: &[(u32, u32)], spec: &LinearSystemSpec, pts: &PointConfig) -> ScalarMatrix {
    let mut rows = Vec::new();
    for (&m, p) in spec.multiplicities.iter().zip(&pts.points) {
        for s in 0..m {
            for t in 0..m - s {
                let row: Vec<u32> = monos
                    .iter()
                    .map(|&(i, j)| {
                        if i < s || j < t {
                            return 0;
                        }
                        let c = field.reduce(binomial(i as i64, s as i64) * binomial(j as i64, t as i64) % field.modulus() as u64);
                        let pw = field.mul(field.pow(p[0], (i - s) as u64), field.pow(p[1], (j - t) as u64));
                        field.mul(c, pw)
                    })
                    .collect();
                rows.push(row);
            }
        }
    }
    ScalarMatrix::from_rows(field, monos.len(), &rows)
}

/// Basis of the linear system; fails with `NotGeneric` when its dimension
/// differs from the expected one.
pub fn system_basis(spec: &LinearSystemSpec, points: &PointConfig) -> Result<RationalMap> {
    assert_eq!(spec.ambient, points.ambient);
    if points.points.len() < spec.points() {
        return Err(Error::DimensionMismatch { expected: spec.points(), got: points.points.len() });
    }
    let field = points.field;
    let monos = section_monomials(spec);
    let big_d = chart_degree(spec);
    let kernel = if spec.points() == 0 {
        (0..monos.len())
            .map(|k| {
                let mut v = alloc::vec![0; monos.len()];
                v[k] = 1;
                v
            })
            .collect()
    } else {
        kernel_basis(&condition_matrix(field, &monos, spec, points))
    };
    let expected = spec.expected_dimension().max(0) as usize;
    if kernel.len() != expected {
        return Err(Error::NotGeneric(alloc::format!("{spec}: {} sections, expected {expected}", kernel.len())));
    }
    let ring = Ring::new(3, field);
    let forms = kernel
        .iter()
        .map(|v| {
            let terms = monos.iter().zip(v).filter(|(_, &c)| c != 0).map(|(&(i, j), &c)| {
                (Monomial::from_exponents(&[big_d - i - j, i, j]), c)
            });
            HomogPoly::from_terms(ring, terms).expect("distinct monomials")
        })
        .collect();
    Ok(RationalMap { source: spec.ambient, forms })
}

/// Plane curves of degree `b0` with the assigned multiplicities.
pub fn plane_system_basis(spec: &LinearSystemSpec, points: &PointConfig) -> Result<RationalMap> {
    if spec.ambient != Ambient::Plane {
        return Err(Error::OutOfRange("spec is not on P^2".into()));
    }
    system_basis(spec, points)
}

/// Sections on `F_e`, enumerated from the Cox ring.
pub fn hirzebruch_system_basis(spec: &LinearSystemSpec, points: &PointConfig) -> Result<RationalMap> {
    if spec.ambient == Ambient::Plane {
        return Err(Error::OutOfRange("spec is not on a Hirzebruch surface".into()));
    }
    system_basis(spec, points)
}
