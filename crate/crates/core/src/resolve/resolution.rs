use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, hilbert_from_groebner, HomogeneousIdeal};
use crate::linalg::{kernel_basis, rank, EchelonBasis, ScalarMatrix};
use crate::poly::HomogPoly;

use super::algebra::{map_in_degree, shift_by_var, Layout, QuotientAlgebra, TruncatedModule};
use super::betti::BettiTable;
use super::gmatrix::GradedMatrix;

/// A complex `F_0 <- F_1 <- ...` given by its differentials `d_1, d_2, ...`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub differentials: Vec<GradedMatrix>,
    pub minimal: bool,
}

/// Presentation `F_1 -> F_0` of the module `coker`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModulePresentation {
    pub presentation: GradedMatrix,
}

impl GradedModulePresentation {
    pub fn new(presentation: GradedMatrix) -> Self {
        GradedModulePresentation { presentation }
    }

    pub fn generator_degrees(&self) -> &[i32] {
        self.presentation.row_twists()
    }
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    /// Twists of `F_i`.
    pub fn twists(&self, i: usize) -> &[i32] {
        if i == 0 {
            self.differentials[0].row_twists()
        } else {
            self.differentials[i - 1].col_twists()
        }
    }

    pub fn betti(&self) -> BettiTable {
        if self.differentials.is_empty() {
            return BettiTable::new();
        }
        BettiTable::from_twists((0..=self.length()).map(|i| self.twists(i)))
    }

    /// Every product `d_i d_{i+1}` vanishes (modulo the algebra's ideal).
    pub fn is_complex(&self, alg: &QuotientAlgebra) -> bool {
        self.differentials.windows(2).all(|w| {
            w[0].compose(&w[1], alg.groebner())
                .map(|m| m.is_zero())
                .unwrap_or(false)
        })
    }

    pub fn has_unit_entries(&self) -> bool {
        self.differentials.iter().any(|d| d.unit_entry().is_some())
    }
}

/// Minimal generators of `ker(M)` over `alg` in internal degrees `<= max_degree`,
/// as the columns of a matrix with rows twisted like the columns of `M`.
pub fn graded_syzygies(alg: &mut QuotientAlgebra, m: &GradedMatrix, max_degree: i32) -> GradedMatrix {
    let ring = m.ring();
    let field = ring.field();
    let src_twists = m.col_twists().to_vec();
    let row_min = m.row_twists().iter().copied().min().unwrap_or(0);
    let lo = match src_twists.iter().copied().min() {
        Some(t) => t,
        None => return GradedMatrix::zero(ring, Vec::new(), Vec::new()),
    };
    alg.extend_to((max_degree - lo.min(row_min)).max(0) + 1);

    let mut gens: Vec<(i32, Vec<u32>)> = Vec::new();
    let mut prev_kernel: Vec<Vec<u32>> = Vec::new();
    let mut prev_layout: Option<Layout> = None;
    for d in lo..=max_degree {
        let layout = Layout::new(alg, &src_twists, d);
        let map = map_in_degree(alg, m, d);
        let kernel = if map.rows() == 0 {
            (0..layout.total)
                .map(|i| {
                    let mut v = vec![0u32; layout.total];
                    v[i] = 1;
                    v
                })
                .collect()
        } else {
            kernel_basis(&map)
        };
        let kdim = kernel.len();
        let mut lower = EchelonBasis::new(field, layout.total);
        if let Some(pl) = &prev_layout {
            'fill: for v in &prev_kernel {
                for k in 0..ring.nvars() {
                    if lower.len() == kdim {
                        break 'fill;
                    }
                    let mut w = vec![0u32; layout.total];
                    shift_by_var(alg, k, v, &src_twists, pl, &layout, &mut w);
                    lower.insert_owned(&mut w);
                }
            }
        }
        if lower.len() < kdim {
            for v in &kernel {
                if lower.insert(v) {
                    gens.push((d, v.clone()));
                }
                if lower.len() == kdim {
                    break;
                }
            }
        }
        prev_kernel = kernel;
        prev_layout = Some(layout);
    }

    let col_twists: Vec<i32> = gens.iter().map(|g| g.0).collect();
    let mut out = GradedMatrix::zero(ring, src_twists.clone(), col_twists);
    for (j, (d, v)) in gens.iter().enumerate() {
        let layout = Layout::new(alg, &src_twists, *d);
        for (r, &t) in src_twists.iter().enumerate() {
            let block = &v[layout.offsets[r]..layout.offsets[r] + layout.sizes[r]];
            if block.iter().any(|&x| x != 0) {
                out.set(r, j, alg.form(*d - t, block));
            }
        }
    }
    out
}

/// Drops columns of `p` that lie in the submodule generated by the others
/// (in degrees up to the largest column twist).
pub fn minimal_columns(alg: &mut QuotientAlgebra, p: &GradedMatrix) -> GradedMatrix {
    let ring = p.ring();
    let field = ring.field();
    if p.ncols() == 0 {
        return p.clone();
    }
    let lo = p.col_twists().iter().copied().min().unwrap();
    let hi = p.col_twists().iter().copied().max().unwrap();
    let row_min = p.row_twists().iter().copied().min().unwrap_or(0);
    alg.extend_to((hi - row_min).max(0) + 1);
    let mut order: Vec<usize> = (0..p.ncols()).collect();
    order.sort_by_key(|&c| p.col_twists()[c]);
    let mut keep = Vec::new();
    let mut span: Option<(Layout, EchelonBasis)> = None;
    for d in lo..=hi {
        let layout = Layout::new(alg, p.row_twists(), d);
        let mut e = EchelonBasis::new(field, layout.total);
        if let Some((pl, prev)) = &span {
            let vs: Vec<Vec<u32>> = prev.vectors().map(|v| v.to_vec()).collect();
            'fill: for v in vs {
                for k in 0..ring.nvars() {
                    if e.len() == layout.total {
                        break 'fill;
                    }
                    let mut w = vec![0u32; layout.total];
                    shift_by_var(alg, k, &v, p.row_twists(), pl, &layout, &mut w);
                    e.insert_owned(&mut w);
                }
            }
        }
        for &c in order.iter().filter(|&&c| p.col_twists()[c] == d) {
            let mut w = vec![0u32; layout.total];
            for r in 0..p.nrows() {
                let f = p.get(r, c);
                if !f.is_zero() {
                    alg.add_product(
                        f,
                        crate::monomial::Monomial::ONE,
                        1,
                        &mut w[layout.offsets[r]..layout.offsets[r] + layout.sizes[r]],
                    );
                }
            }
            if e.insert_owned(&mut w) {
                keep.push(c);
            }
        }
        span = Some((layout, e));
    }
    keep.sort_unstable();
    p.select_columns(&keep)
}

/// Removes unit entries from a presentation: each nonzero constant makes one
/// generator and one relation redundant.
pub fn minimize_presentation(p: &GradedMatrix, alg: &QuotientAlgebra) -> GradedMatrix {
    let mut m = p.clone();
    let field = m.ring().field();
    while let Some((r, c)) = m.unit_entry() {
        let u = m.get(r, c).terms()[0].1;
        let uinv = field.inv(u).unwrap();
        for c2 in 0..m.ncols() {
            if c2 == c || m.get(r, c2).is_zero() {
                continue;
            }
            let lambda = m.get(r, c2).scale(field.neg(uinv));
            m.add_column_multiple(c2, c, &lambda);
        }
        m.remove_row(r);
        m.remove_column(c);
        if let Some(gb) = alg.groebner() {
            m = m.reduce(gb);
        }
    }
    m
}

/// Removes unit entries from a complex by cancelling pairs of generators in
/// adjacent free modules, repeated until no unit entry is left.
pub fn minimize(res: &FreeResolution, alg: &QuotientAlgebra) -> FreeResolution {
    let mut ds = res.differentials.clone();
    let field = alg.ring().field();
    let gb = alg.groebner();
    loop {
        let Some((i, r, c)) = ds.iter().enumerate().find_map(|(i, d)| d.unit_entry().map(|(r, c)| (i, r, c))) else {
            break;
        };
        let u = ds[i].get(r, c).terms()[0].1;
        let uinv = field.inv(u).unwrap();
        // clear row r: col_{c2} -= (a/u) col_c, compensated by row_c += (a/u) row_{c2} in d_{i+1}
        for c2 in 0..ds[i].ncols() {
            if c2 == c || ds[i].get(r, c2).is_zero() {
                continue;
            }
            let lambda = ds[i].get(r, c2).scale(uinv);
            ds[i].add_column_multiple(c2, c, &lambda.neg());
            if i + 1 < ds.len() {
                ds[i + 1].add_row_multiple(c, c2, &lambda);
            }
        }
        // clear column c: row_{r2} -= (b/u) row_r, compensated by col_r += (b/u) col_{r2} in d_{i-1}
        for r2 in 0..ds[i].nrows() {
            if r2 == r || ds[i].get(r2, c).is_zero() {
                continue;
            }
            let mu = ds[i].get(r2, c).scale(uinv);
            ds[i].add_row_multiple(r2, r, &mu.neg());
            if i > 0 {
                ds[i - 1].add_column_multiple(r, r2, &mu);
            }
        }
        ds[i].remove_row(r);
        ds[i].remove_column(c);
        if i + 1 < ds.len() {
            ds[i + 1].remove_row(c);
        }
        if i > 0 {
            ds[i - 1].remove_column(r);
        }
        if let Some(gb) = gb {
            for d in ds.iter_mut() {
                *d = d.reduce(gb);
            }
        }
        while ds.last().is_some_and(|d| d.ncols() == 0) {
            ds.pop();
        }
    }
    FreeResolution { differentials: ds, minimal: true }
}

/// Minimal free resolution of `coker(d1)` over `alg`, computing generators of
/// the `i`-th module only in internal degrees `<= i + max_row`.
pub fn resolve_presentation(
    alg: &mut QuotientAlgebra,
    d1: &GradedMatrix,
    length_bound: usize,
    max_row: i32,
) -> Result<FreeResolution> {
    let mut first = minimize_presentation(d1, alg);
    first = minimal_columns(alg, &first);
    let mut ds = vec![first];
    while ds.len() < length_bound {
        let i = ds.len() + 1;
        let last = ds.last().unwrap();
        if last.ncols() == 0 {
            break;
        }
        let next = graded_syzygies(alg, last, i as i32 + max_row);
        if next.ncols() == 0 {
            break;
        }
        ds.push(next);
    }
    if ds.len() == length_bound && length_bound > 0 {
        let i = ds.len() + 1;
        let next = graded_syzygies(alg, ds.last().unwrap(), i as i32 + max_row);
        if next.ncols() != 0 {
            return Err(Error::IncreaseBounds(format!("resolution longer than {length_bound}")));
        }
    }
    Ok(FreeResolution { differentials: ds, minimal: true })
}

/// Minimal free resolution of `R/I` over the polynomial ring. The result is
/// checked against the Hilbert numerator of `I`.
pub fn minimal_resolution(ideal: &HomogeneousIdeal, length_bound: usize, max_row: i32) -> Result<FreeResolution> {
    let ring = ideal.ring();
    let mut alg = QuotientAlgebra::polynomial(ring);
    let d1 = GradedMatrix::row_of(ring, ideal.generators());
    let res = resolve_presentation(&mut alg, &d1, length_bound, max_row)?;
    let gb = match ideal.cached_groebner() {
        Some(g) => g.clone(),
        None => buchberger(ideal),
    };
    let top = res.betti().entries().map(|e| e.1).max().unwrap_or(0).max(0) as u32;
    let numerator = hilbert_from_groebner(&gb, top).numerator;
    let ours = if ideal.generators().is_empty() {
        vec![1]
    } else {
        res.betti().alternating_numerator()
    };
    if ours != numerator {
        return Err(Error::IncreaseBounds(format!(
            "Betti numbers do not reproduce the Hilbert numerator {numerator:?} (got {ours:?})"
        )));
    }
    Ok(res)
}

/// Resolution of a module given by a presentation, over the polynomial ring.
pub fn minimal_resolution_of_module(
    p: &GradedModulePresentation,
    length_bound: usize,
    max_row: i32,
) -> Result<FreeResolution> {
    let ring = p.presentation.ring();
    let mut alg = QuotientAlgebra::polynomial(ring);
    let res = resolve_presentation(&mut alg, &p.presentation, length_bound, max_row)?;
    // the Betti numbers must reproduce the Hilbert function of the cokernel
    let betti = res.betti();
    let lo = p.generator_degrees().iter().copied().min().unwrap_or(0);
    let hi = betti.entries().map(|e| e.1).max().unwrap_or(lo) + 1;
    let module = TruncatedModule::from_presentation(&p.presentation, hi)?;
    for d in lo..=hi {
        let from_betti: i64 = betti
            .entries()
            .filter(|e| e.1 <= d)
            .map(|(i, j, b)| {
                let s = if i % 2 == 0 { 1 } else { -1 };
                s * b as i64 * ring.dim((d - j) as i64) as i64
            })
            .sum();
        if from_betti != module.dim(d) as i64 {
            return Err(Error::IncreaseBounds(format!(
                "Betti numbers give dimension {from_betti} in degree {d}, module has {}",
                module.dim(d)
            )));
        }
    }
    Ok(res)
}

/// Cokernel of the transposed last differential, twisted: for the resolution
/// of `R/I` of length `c` this presents `Ext^c(R/I, R(twist))`.
pub fn dualize_complex(res: &FreeResolution, twist: i32) -> GradedModulePresentation {
    let last = res.differentials.last().expect("nonempty resolution");
    GradedModulePresentation::new(last.dual(twist))
}

/// `dim Ext^k(M, R)_degree`, where `res` resolves `M` over the polynomial ring.
pub fn ext_dimension(res: &FreeResolution, k: usize, degree: i32) -> usize {
    let ring = res.differentials.first().map(|d| d.ring()).expect("nonempty resolution");
    let mut alg = QuotientAlgebra::polynomial(ring);
    let n = res.length();
    if k > n {
        return 0;
    }
    // Hom(F_k, R)_degree = ⊕ R_{degree + a}
    let dual_twists = |i: usize| -> Vec<i32> { res.twists(i).iter().map(|&a| -a).collect() };
    let top = (0..=n).flat_map(|i| res.twists(i).iter().copied()).max().unwrap_or(0);
    alg.extend_to((degree + top).max(0) + 1);
    let here = Layout::new(&alg, &dual_twists(k), degree).total;
    // outgoing d_{k+1}^T : Hom(F_k) -> Hom(F_{k+1})
    let out_rank = if k < n {
        let m = res.differentials[k].dual(0);
        rank(&map_in_degree(&alg, &m, degree))
    } else {
        0
    };
    let in_rank = if k > 0 {
        let m = res.differentials[k - 1].dual(0);
        rank(&map_in_degree(&alg, &m, degree))
    } else {
        0
    };
    here - out_rank - in_rank
}

/// Matrix of `M` in degree `d` over the polynomial ring (exposed for checks).
pub fn degree_map(m: &GradedMatrix, d: i32) -> ScalarMatrix {
    let mut alg = QuotientAlgebra::polynomial(m.ring());
    let top = m.col_twists().iter().chain(m.row_twists()).map(|t| d - t).max().unwrap_or(0);
    alg.extend_to(top.max(0));
    map_in_degree(&alg, m, d)
}

/// Helper used by callers that hold forms rather than a matrix.
pub fn column_matrix(forms: &[HomogPoly], row_twists: Vec<i32>, col_twist: i32) -> GradedMatrix {
    let ring = forms[0].ring();
    let mut m = GradedMatrix::zero(ring, row_twists, vec![col_twist]);
    for (r, f) in forms.iter().enumerate() {
        m.set(r, 0, f.clone());
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::Ring;
    use crate::resolve::koszul::betti_via_koszul;
    use crate::text::parse_poly;
    use proptest::prelude::*;

    fn ring(n: usize) -> Ring {
        Ring::new(n, PrimeField::default_field())
    }

    fn ideal(r: Ring, gens: &[&str]) -> HomogeneousIdeal {
        HomogeneousIdeal::new(r, gens.iter().map(|g| parse_poly(r, g).unwrap()).collect())
    }

    fn assert_complex(res: &FreeResolution) {
        let alg = QuotientAlgebra::polynomial(res.differentials[0].ring());
        assert!(res.is_complex(&alg));
        assert!(!res.has_unit_entries());
    }

    #[test]
    fn hyperplane() {
        let r = ring(3);
        let res = minimal_resolution(&ideal(r, &["x0"]), 3, 2).unwrap();
        assert_eq!(res.length(), 1);
        assert_eq!(res.differentials[0].get(0, 0), &HomogPoly::var(r, 0));
    }

    #[test]
    fn zero_ideal_resolves_itself() {
        let res = minimal_resolution(&HomogeneousIdeal::zero(ring(2)), 3, 2).unwrap();
        assert_eq!(res.betti(), BettiTable::from_entries([(0, 0, 1)]));
    }

    #[test]
    fn syzygy_of_two_variables() {
        let r = ring(2);
        let mut alg = QuotientAlgebra::polynomial(r);
        let m = GradedMatrix::row_of(r, &[HomogPoly::var(r, 0), HomogPoly::var(r, 1)]);
        let s = graded_syzygies(&mut alg, &m, 4);
        assert_eq!(s.ncols(), 1);
        assert_eq!(s.col_twists(), &[2]);
        let (a, b) = (s.get(0, 0), s.get(1, 0));
        let c = a.coefficient(crate::monomial::Monomial::var(1));
        assert_eq!(a, &HomogPoly::var(r, 1).scale(c));
        assert_eq!(b, &HomogPoly::var(r, 0).scale(r.field().neg(c)));
    }

    #[test]
    fn injective_map_has_no_syzygies() {
        let r = ring(3);
        let mut alg = QuotientAlgebra::polynomial(r);
        let m = GradedMatrix::row_of(r, &[parse_poly(r, "x0^2").unwrap()]);
        assert_eq!(graded_syzygies(&mut alg, &m, 6).ncols(), 0);
    }

    #[test]
    fn twisted_cubic() {
        let r = ring(4);
        let i = ideal(r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        let res = minimal_resolution(&i, 4, 3).unwrap();
        assert_eq!(res.betti(), BettiTable::from_entries([(0, 0, 1), (1, 2, 3), (2, 3, 2)]));
        assert_complex(&res);
    }

    #[test]
    fn complete_intersection_of_quadrics() {
        let r = ring(3);
        let i = ideal(r, &["x0^2 + x1*x2", "x1^2 - 3*x0*x2"]);
        let res = minimal_resolution(&i, 3, 3).unwrap();
        assert_eq!(res.betti(), BettiTable::from_entries([(0, 0, 1), (1, 2, 2), (2, 4, 1)]));
    }

    #[test]
    fn small_bounds_are_reported() {
        let r = ring(3);
        let i = ideal(r, &["x0^2 + x1*x2", "x1^2 - 3*x0*x2"]);
        assert!(matches!(minimal_resolution(&i, 1, 3), Err(Error::IncreaseBounds(_))));
        assert!(matches!(minimal_resolution(&i, 3, 1), Err(Error::IncreaseBounds(_))));
    }

    #[test]
    fn non_minimal_generators_are_dropped() {
        let r = ring(3);
        let i = ideal(r, &["x0", "x0*x1", "x1"]);
        let res = minimal_resolution(&i, 3, 2).unwrap();
        assert_eq!(res.betti(), BettiTable::from_entries([(0, 0, 1), (1, 1, 2), (2, 2, 1)]));
    }

    #[test]
    fn minimize_cancels_unit_pair() {
        // Koszul complex on x0, x1 with a trivial summand R(-1) -> R(-1) attached at the end
        let r = ring(2);
        let x0 = HomogPoly::var(r, 0);
        let x1 = HomogPoly::var(r, 1);
        let one = HomogPoly::constant(r, 1);
        let d1 = GradedMatrix::new(r, vec![0], vec![1, 1], vec![x0.clone(), x1.clone()]).unwrap();
        let d2 = GradedMatrix::new(r, vec![1, 1], vec![2, 1], vec![x1.clone(), HomogPoly::zero(r), x0.neg(), HomogPoly::zero(r)])
            .unwrap();
        let d3 = GradedMatrix::new(r, vec![2, 1], vec![1], vec![HomogPoly::zero(r), one]).unwrap();
        let res = FreeResolution { differentials: vec![d1, d2, d3], minimal: false };
        let alg = QuotientAlgebra::polynomial(r);
        assert!(res.is_complex(&alg));
        let m = minimize(&res, &alg);
        assert!(m.is_complex(&alg));
        assert_eq!(m.betti(), BettiTable::from_entries([(0, 0, 1), (1, 1, 2), (2, 2, 1)]));
    }

    #[test]
    fn koszul_dual_presents_the_field() {
        let r = ring(5);
        let res = minimal_resolution(&HomogeneousIdeal::maximal(r), 5, 1).unwrap();
        assert_eq!(res.length(), 5);
        let p = dualize_complex(&res, -5);
        // R(-5)^dual twisted: generator in degree 0, relations the variables
        assert_eq!(p.generator_degrees(), &[0]);
        let m = TruncatedModule::from_presentation(&p.presentation, 3).unwrap();
        assert_eq!(m.hilbert_values(), &[1, 0, 0, 0]);
    }

    #[test]
    fn dual_of_dual_restores_twists() {
        let r = ring(4);
        let i = ideal(r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        let res = minimal_resolution(&i, 4, 3).unwrap();
        for d in &res.differentials {
            let back = d.dual(3).dual(3);
            assert_eq!(&back, d);
        }
        let p = dualize_complex(&res, 0);
        assert_eq!(p.generator_degrees(), &[-3, -3]);
    }

    #[test]
    fn ext_of_twisted_cubic() {
        // Ext^2(R/I, R)_d = H^0(ω_C(d + 4)) = H^0(O_{P^1}(3d + 10)) for the twisted cubic C
        let r = ring(4);
        let i = ideal(r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        let res = minimal_resolution(&i, 4, 3).unwrap();
        assert_eq!(ext_dimension(&res, 0, 0), 0);
        assert_eq!(ext_dimension(&res, 1, -2), 0);
        assert_eq!(ext_dimension(&res, 2, -3), 2);
        assert_eq!(ext_dimension(&res, 2, -4), 0);
        assert_eq!(ext_dimension(&res, 2, -2), 5);
    }

    #[test]
    fn module_resolution_certified() {
        let r = ring(3);
        // coker of (x0 x1) as a map R(-1)^2 -> R: R/(x0, x1)
        let m = GradedMatrix::row_of(r, &[HomogPoly::var(r, 0), HomogPoly::var(r, 1)]);
        let res = minimal_resolution_of_module(&GradedModulePresentation::new(m), 3, 2).unwrap();
        assert_eq!(res.betti(), BettiTable::from_entries([(0, 0, 1), (1, 1, 2), (2, 2, 1)]));
    }

    fn random_form(r: Ring, d: u32, coeffs: &[u32]) -> HomogPoly {
        HomogPoly::from_dense(r, d, &coeffs[..r.dim(d as i64)])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn resolution_agrees_with_koszul(
            degs in proptest::collection::vec(2u32..=3, 1..4),
            coeffs in proptest::collection::vec(proptest::collection::vec(0u32..4, 10), 3),
        ) {
            let r = ring(3);
            let gens: Vec<HomogPoly> = degs
                .iter()
                .zip(&coeffs)
                .map(|(&d, c)| random_form(r, d, c))
                .filter(|f| !f.is_zero())
                .collect();
            let i = HomogeneousIdeal::new(r, gens);
            let res = minimal_resolution(&i, 4, 6).unwrap();
            let k = betti_via_koszul(&i, 3, 6).unwrap();
            prop_assert_eq!(res.betti(), k);
            assert_complex(&res);
        }

        #[test]
        fn syzygies_multiply_back(coeffs in proptest::collection::vec(0u32..31991, 18)) {
            let r = ring(3);
            let forms: Vec<HomogPoly> = coeffs.chunks(3).map(|c| random_form(r, 1, c)).collect();
            let m = GradedMatrix::new(r, vec![0, 0], vec![1, 1, 1], forms).unwrap();
            let mut alg = QuotientAlgebra::polynomial(r);
            let s = graded_syzygies(&mut alg, &m, 5);
            prop_assert!(m.compose(&s, None).unwrap().is_zero());
            // the kernel in degree 5 is spanned by the result
            let layout = Layout::new(&alg, m.col_twists(), 5);
            let kdim = kernel_basis(&map_in_degree(&alg, &m, 5)).len();
            let mut span = EchelonBasis::new(r.field(), layout.total);
            for c in 0..s.ncols() {
                for u in r.basis((5 - s.col_twists()[c]) as u32) {
                    let mut w = vec![0u32; layout.total];
                    for row in 0..s.nrows() {
                        let f = s.get(row, c);
                        if !f.is_zero() {
                            alg.add_product(f, u, 1, &mut w[layout.offsets[row]..layout.offsets[row] + layout.sizes[row]]);
                        }
                    }
                    span.insert_owned(&mut w);
                }
            }
            prop_assert_eq!(span.len(), kdim);
        }
    }
}
