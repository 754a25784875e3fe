use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::groebner::{degree_parts, generators_from_parts, hilbert_from_groebner, saturate_irrelevant, HilbertData, HomogeneousIdeal};
use crate::linalg::{kernel_basis, ScalarMatrix};
use crate::monomial::Monomial;
use crate::poly::{HomogPoly, Ring};

use super::systems::RationalMap;

/// Pullbacks of all target monomials of degree `d`, in target-basis order.
fn pullbacks(map: &RationalMap, d: u32) -> Vec<HomogPoly> {
    let n = map.target_vars();
    let src = map.forms[0].ring();
    let mut memo: BTreeMap<Monomial, HomogPoly> = BTreeMap::new();
    memo.insert(Monomial::from_exponents(&alloc::vec![0; n]), HomogPoly::constant(src, 1));
    let target = Ring::new(n, src.field());
    for k in 1..=d {
        for m in target.basis(k) {
            let i = m.support().next().expect("positive degree");
            let prev = memo[&m.div(Monomial::var(i))].mul(&map.forms[i]);
            memo.insert(m, prev);
        }
    }
    target.basis(d).into_iter().map(|m| memo.remove(&m).unwrap()).collect()
}

/// Rows: target monomials of degree `d`; columns: source monomials of
/// degree `d * deg(map)`; entry = coefficient in the pulled-back form.
pub fn pullback_matrix(map: &RationalMap, d: u32) -> ScalarMatrix {
    let src = map.forms[0].ring();
    let big = d * map.degree();
    let rows: Vec<Vec<u32>> = pullbacks(map, d).iter().map(|f| f.to_dense(big)).collect();
    ScalarMatrix::from_rows(src.field(), src.dim(big as i64), &rows)
}

/// Degree-`d` forms on the target whose pullback vanishes.
pub fn relations_in_degree(map: &RationalMap, d: u32) -> Vec<HomogPoly> {
    let target = Ring::new(map.target_vars(), map.forms[0].ring().field());
    kernel_basis(&pullback_matrix(map, d).transpose())
        .into_iter()
        .map(|v| HomogPoly::from_dense(target, d, &v))
        .collect()
}

/// Ideal of the image generated in degrees `<= d`, then saturated.
pub fn implicitize(map: &RationalMap, d: u32) -> HomogeneousIdeal {
    let target = Ring::new(map.target_vars(), map.forms[0].ring().field());
    let parts: Vec<Vec<HomogPoly>> = (0..=d).map(|k| if k == 0 { Vec::new() } else { relations_in_degree(map, k) }).collect();
    let ideal = HomogeneousIdeal::new(target, generators_from_parts(target, &parts));
    saturate_irrelevant(&ideal)
}

/// Degree-`d` forms vanishing at every point.
pub fn forms_through_points(ring: Ring, points: &[Vec<u32>], d: u32) -> Vec<HomogPoly> {
    let basis = ring.basis(d);
    let rows: Vec<Vec<u32>> = points
        .iter()
        .map(|p| basis.iter().map(|&m| HomogPoly::monomial(ring, m, 1).eval(p)).collect())
        .collect();
    kernel_basis(&ScalarMatrix::from_rows(ring.field(), basis.len(), &rows))
        .into_iter()
        .map(|v| HomogPoly::from_dense(ring, d, &v))
        .collect()
}

/// Minimal generators of degree `<= d` of the ideal of a point sample.
pub fn ideal_through_points(ring: Ring, points: &[Vec<u32>], d: u32) -> HomogeneousIdeal {
    let parts: Vec<Vec<HomogPoly>> = (0..=d).map(|k| forms_through_points(ring, points, k)).collect();
    HomogeneousIdeal::new(ring, generators_from_parts(ring, &parts))
}

/// `dim I_m`.
pub fn h0_twist(ideal: &HomogeneousIdeal, m: u32) -> usize {
    degree_parts(ideal, m).pop().map_or(0, |e| e.len())
}

/// Degree, sectional genus and `chi(O)` of a surface, read off the Hilbert
/// polynomial of its (saturated) ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceNumbers {
    pub degree: i64,
    pub genus: i64,
    pub chi: i64,
}

pub fn surface_numbers(numerator: &[i64], nvars: usize) -> SurfaceNumbers {
    let p = |n| HilbertData::polynomial_value(numerator, nvars, n);
    let degree = p(2) - 2 * p(1) + p(0);
    let chi = p(0);
    SurfaceNumbers { degree, genus: degree + 1 + chi - p(1), chi }
}

pub fn ideal_surface_numbers(ideal: &HomogeneousIdeal) -> SurfaceNumbers {
    let gb = ideal.groebner();
    surface_numbers(&hilbert_from_groebner(&gb, 0).numerator, ideal.ring().nvars())
}
