//! The Enriques surface of degree 10 in `P^5`, reached through its
//! projection `X'` from a point of the surface: a non-ACM surface of degree 9
//! and sectional genus 6 in `P^4` whose Hartshorne-Rao module is resolved
//! below. `X'` is the degeneracy locus of the six linear syzygies inside
//! the rank 7 second syzygy bundle of that module, and the adjoint map of
//! `X'` recovers the Enriques surface.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::classifier::IntersectionData;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{hilbert_from_groebner, HilbertData, HomogeneousIdeal};
use crate::linalg::{rank, solve_many, ScalarMatrix};
use crate::poly::{HomogPoly, Ring};
use crate::random::{form, rng_from_seed, vector};
use crate::resolve::{
    dualize_complex, graded_syzygies, minimal_resolution, BettiTable, FreeResolution, GradedMatrix,
    GradedModulePresentation, QuotientAlgebra, TruncatedModule,
};

use super::adjoint::{adjoint_point, adjoint_sections, rational_points};
use super::implicit::{ideal_through_points, surface_numbers, SurfaceNumbers};
use super::model::{with_retries, SurfaceModel};

pub const ENRIQUES_ATTEMPTS: u32 = 20;

/// Points sampled on `X'` to interpolate the cubics of the image.
const IMAGE_POINTS: usize = 70;

/// Betti table of the module: `3(-2) <- 10(-3) <- 6(-4)+15(-5) <- 25(-6) <- 12(-7) <- 1(-9)`.
pub fn hr_module_betti() -> BettiTable {
    BettiTable::from_entries([(0, 2, 3), (1, 3, 10), (2, 4, 6), (2, 5, 15), (3, 6, 25), (4, 7, 12), (5, 9, 1)])
}

/// Betti table of the Enriques surface in `P^5`.
pub fn enriques_betti() -> BettiTable {
    BettiTable::from_entries([(0, 0, 1), (1, 3, 10), (2, 4, 15), (3, 5, 6)])
}

/// Betti table of the ideal of `X'`.
pub fn projected_betti() -> BettiTable {
    BettiTable::from_entries([(0, 0, 1), (1, 5, 15), (2, 6, 25), (3, 7, 12), (4, 9, 1)])
}

#[derive(Clone, Debug)]
pub struct HrModule {
    pub presentation: GradedModulePresentation,
    pub resolution: FreeResolution,
    /// `dim M_d` for `d = 2, 3, 4`.
    pub hilbert: Vec<usize>,
    pub used_seed: u64,
    pub attempts: u32,
}

/// The Matlis dual of `R/J` for twelve random quadrics `J`, placed so that
/// it is generated in degree 2; its resolution is the dual of that of `R/J`.
fn hr_module_once(field: PrimeField, seed: u64) -> Result<(GradedModulePresentation, FreeResolution, Vec<usize>)> {
    let ring = Ring::new(5, field);
    let mut rng = rng_from_seed(seed);
    let quadrics: Vec<HomogPoly> = (0..12).map(|_| form(&mut rng, ring, 2)).collect();
    let artinian = minimal_resolution(&HomogeneousIdeal::new(ring, quadrics), 5, 2)?;
    if artinian.length() != 5 {
        return Err(Error::NotGeneric("twelve quadrics are not a complete intersection of finite colength".into()));
    }
    let differentials: Vec<GradedMatrix> = (1..=5).map(|i| artinian.differentials[5 - i].dual(-9)).collect();
    let resolution = FreeResolution { differentials, minimal: true };
    if resolution.betti() != hr_module_betti() {
        return Err(Error::NotGeneric(alloc::format!("module has Betti table\n{}", resolution.betti().to_text())));
    }
    let presentation = GradedModulePresentation::new(resolution.differentials[0].clone());
    let truncated = TruncatedModule::from_presentation(&presentation.presentation, 4)?;
    let hilbert = (2..=4).map(|d| truncated.dim(d)).collect();
    Ok((presentation, resolution, hilbert))
}

/// Random Hartshorne-Rao module of `X'`, retried until its Betti table is
/// the expected one.
pub fn hr_module(field: PrimeField, seed: u64) -> Result<HrModule> {
    let ((presentation, resolution, hilbert), used_seed, attempts) =
        with_retries(seed, ENRIQUES_ATTEMPTS, |s| hr_module_once(field, s))?;
    Ok(HrModule { presentation, resolution, hilbert, used_seed, attempts })
}

fn eval_matrix(m: &GradedMatrix, p: &[u32]) -> ScalarMatrix {
    let mut out = ScalarMatrix::zeros(m.ring().field(), m.nrows(), m.ncols());
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            out.set(r, c, m.get(r, c).eval(p));
        }
    }
    out
}

fn columns_of_twist(m: &GradedMatrix, t: i32) -> Vec<usize> {
    (0..m.ncols()).filter(|&c| m.col_twists()[c] == t).collect()
}

/// The 15 quintics through `X'`. For a quadratic syzygy `s`, `s ^ v_1 ^ ... ^ v_6`
/// is a section of `det E (24) = O(5)`; its value at a point is a 7x7 minor of
/// `[s | V]` divided by the complementary 3x3 minor of the presentation.
/// The quintics are interpolated from their values at random points.
fn projected_quintics(module: &FreeResolution, seed: u64) -> Result<Vec<HomogPoly>> {
    let a0 = &module.differentials[0];
    let d2 = &module.differentials[1];
    let ring = a0.ring();
    let field = ring.field();
    let v = d2.select_columns(&columns_of_twist(d2, 4));
    let q = d2.select_columns(&columns_of_twist(d2, 5));
    let mut rng = rng_from_seed(seed ^ 0x5157);

    let probe = vector(&mut rng, field, 5);
    let probe_a0 = eval_matrix(a0, &probe);
    let complement = (0..10usize)
        .flat_map(|i| (i + 1..10).flat_map(move |j| (j + 1..10).map(move |k| [i, j, k])))
        .find(|c| probe_a0.select_columns(c).determinant() != 0)
        .ok_or_else(|| Error::NotGeneric("presentation has rank < 3".into()))?;
    let rows: Vec<usize> = (0..10).filter(|r| !complement.contains(r)).collect();

    let basis = ring.basis(5);
    let wanted = basis.len() + 20;
    let mut evals: Vec<Vec<u32>> = Vec::with_capacity(wanted);
    let mut values: Vec<Vec<u32>> = Vec::with_capacity(wanted);
    while evals.len() < wanted {
        let p = vector(&mut rng, field, 5);
        let denom = eval_matrix(a0, &p).select_columns(&complement).determinant();
        if denom == 0 {
            continue;
        }
        let inv = field.inv(denom).expect("nonzero");
        let (vp, qp) = (eval_matrix(&v, &p).select_rows(&rows), eval_matrix(&q, &p).select_rows(&rows));
        let row = (0..q.ncols())
            .map(|s| {
                let mut m7 = ScalarMatrix::zeros(field, 7, 7);
                for r in 0..7 {
                    m7.set(r, 0, qp.get(r, s));
                    for c in 0..6 {
                        m7.set(r, c + 1, vp.get(r, c));
                    }
                }
                field.mul(m7.determinant(), inv)
            })
            .collect();
        values.push(row);
        evals.push(basis.iter().map(|&m| HomogPoly::monomial(ring, m, 1).eval(&p)).collect());
    }
    let lhs = ScalarMatrix::from_rows(field, basis.len(), &evals);
    let rhs = ScalarMatrix::from_rows(field, q.ncols(), &values);
    let coeffs = solve_many(&lhs, &rhs).ok_or_else(|| Error::NotGeneric("minor ratios are not quintics".into()))?;
    if rank(&coeffs) != q.ncols() {
        return Err(Error::NotGeneric("quintics are dependent".into()));
    }
    let t = coeffs.transpose();
    Ok((0..t.rows()).map(|s| HomogPoly::from_dense(ring, 5, t.row(s))).collect())
}

/// Resolution `R + R(-2)^3 <- R(-3)^10 <- R(-4)^6` of the homogeneous
/// coordinate ring `H^0_*(O_X')`: the six linear syzygies and the syzygies of
/// their transpose.
fn structure_sheaf_resolution(module: &FreeResolution) -> Result<FreeResolution> {
    let d2 = &module.differentials[1];
    let v = d2.select_columns(&columns_of_twist(d2, 4));
    let mut alg = QuotientAlgebra::polynomial(v.ring());
    let syz = graded_syzygies(&mut alg, &v.dual(0), 1);
    let res = FreeResolution { differentials: alloc::vec![syz.dual(0), v], minimal: true };
    let expected = BettiTable::from_entries([(0, 0, 1), (0, 2, 3), (1, 3, 10), (2, 4, 6)]);
    if res.betti() != expected || !res.is_complex(&alg) {
        return Err(Error::NotGeneric(alloc::format!("coordinate ring of X' has Betti table\n{}", res.betti().to_text())));
    }
    Ok(res)
}

#[derive(Clone, Debug)]
pub struct EnriquesConstruction {
    pub module: HrModule,
    pub projected: HomogeneousIdeal,
    pub projected_numbers: SurfaceNumbers,
    /// `h^1(I_X'(n))` for `n = 2, 3, 4`, from the Hilbert polynomial.
    pub projected_h1: Vec<i64>,
    pub structure_resolution: FreeResolution,
    /// Presentation of `omega_X'(1)`.
    pub omega: GradedModulePresentation,
    pub adjoint_sections: usize,
    pub image_numbers: SurfaceNumbers,
    pub surface: SurfaceModel,
}

fn pipeline_once(field: PrimeField, seed: u64) -> Result<EnriquesConstruction> {
    let (presentation, resolution, hilbert) = hr_module_once(field, seed)?;
    let quintics = projected_quintics(&resolution, seed)?;
    let ring = quintics[0].ring();
    let projected = HomogeneousIdeal::new(ring, quintics).with_groebner();
    let gb = projected.cached_groebner().unwrap();
    let numerator = hilbert_from_groebner(gb, 0).numerator;
    let projected_numbers = surface_numbers(&numerator, 5);
    if (projected_numbers.degree, projected_numbers.genus) != (9, 6) {
        return Err(Error::NotGeneric(alloc::format!("X' has invariants {projected_numbers:?}")));
    }
    let projected_h1 = (2..=4)
        .map(|n| HilbertData::polynomial_value(&numerator, 5, n) - gb.hilbert_value(n as u32) as i64)
        .collect();

    let structure_resolution = structure_sheaf_resolution(&resolution)?;
    let omega = dualize_complex(&structure_resolution, -4);
    let sections = adjoint_sections(&omega)?;

    let mut rng = rng_from_seed(seed ^ 0xad0);
    let on_x = rational_points(projected.generators(), IMAGE_POINTS, &mut rng, 20 * IMAGE_POINTS)?;
    let image: Vec<Vec<u32>> = on_x.iter().filter_map(|p| adjoint_point(&omega, p)).collect();
    let target = Ring::new(sections, field);
    let ideal = ideal_through_points(target, &image, 3);
    let image_gb = ideal.groebner();
    let image_numbers = surface_numbers(&hilbert_from_groebner(&image_gb, 0).numerator, sections);
    if image_numbers != (SurfaceNumbers { degree: 10, genus: 6, chi: 1 }) {
        return Err(Error::NotGeneric(alloc::format!("adjoint image has invariants {image_numbers:?}")));
    }
    let surface = SurfaceModel {
        family: "k2=0".to_string(),
        ideal: HomogeneousIdeal::new(target, ideal.generators().to_vec()),
        spec: None,
        invariants: IntersectionData { h2: 10, hk: 0, k2: 0, chi: 1, chi_top: Some(12), q: 0, p_g: 0 },
        seed,
        used_seed: seed,
        attempts: 1,
    };
    Ok(EnriquesConstruction {
        module: HrModule { presentation, resolution, hilbert, used_seed: seed, attempts: 1 },
        projected,
        projected_numbers,
        projected_h1,
        structure_resolution,
        omega,
        adjoint_sections: sections,
        image_numbers,
        surface,
    })
}

/// Builds `X'` from a random module and maps it to `P^5` by its adjoint
/// system, retrying on non-generic choices.
pub fn enriques_pipeline(field: PrimeField, seed: u64) -> Result<EnriquesConstruction> {
    let (mut out, used, attempts) = with_retries(seed, ENRIQUES_ATTEMPTS, |s| pipeline_once(field, s))?;
    out.surface.seed = seed;
    out.surface.used_seed = used;
    out.surface.attempts = attempts;
    out.module.used_seed = used;
    out.module.attempts = attempts;
    Ok(out)
}
