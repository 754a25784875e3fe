//! Resolutions over a cubic hypersurface ring `R_Y = R/(f)` containing a
//! surface `X`: the eventually 2-periodic tail, the matrix factorization it
//! carries, the F-type sequence `0 -> O_Y^6(-2) -> F -> I_{X/Y} -> 0`, and
//! sections of the normal bundle of `X` in `Y`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, hilbert_from_groebner, GroebnerBasis, HilbertData, HomogeneousIdeal};
use crate::random::{rng_from_seed, vector, Rng};
use crate::linalg::{rank, solve, ScalarMatrix};
use crate::poly::HomogPoly;
use crate::resolve::{
    graded_syzygies, map_in_degree, minimal_resolution, minimal_columns, minimize_presentation, BettiTable, FreeResolution,
    GradedMatrix, QuotientAlgebra,
};

/// Internal degree bound used for all checks on degree-10 surfaces.
pub const DEFAULT_DEGREE_BOUND: i32 = 9;
/// Steps needed to see two full periods after the tail starts.
pub const DEFAULT_STEPS: usize = 5;

fn hypersurface(f: &HomogPoly) -> QuotientAlgebra {
    QuotientAlgebra::quotient(buchberger(&HomogeneousIdeal::new(f.ring(), vec![f.clone()])))
}

/// Generators of `ker(M)` over `R/(f)` in internal degrees `<= degree_bound`.
pub fn quotient_syzygies(m: &GradedMatrix, f: &HomogPoly, degree_bound: i32) -> GradedMatrix {
    graded_syzygies(&mut hypersurface(f), m, degree_bound)
}

/// Minimal resolution of `R_X` over `R_Y`, truncated at a number of steps.
#[derive(Clone, Debug)]
pub struct QuotientResolution {
    pub f: HomogPoly,
    pub resolution: FreeResolution,
    /// First `k` with `d_{k+2}` shaped like `d_k` shifted by `deg f`.
    pub period_start: Option<usize>,
}

impl QuotientResolution {
    pub fn betti(&self) -> BettiTable {
        self.resolution.betti()
    }
}

fn detect_period(res: &FreeResolution, s: i32) -> Option<usize> {
    let n = res.length();
    let sorted = |i: usize| {
        let mut t = res.twists(i).to_vec();
        t.sort_unstable();
        t
    };
    let shifted = |i: usize| sorted(i).into_iter().map(|t| t + s).collect::<Vec<_>>();
    (1..=n.saturating_sub(2)).find(|&k| (k..=n - 2).all(|j| sorted(j + 2) == shifted(j) && sorted(j + 1) == shifted(j - 1)))
}

/// Resolution of `R_X` over `R` with the smallest row bound that reproduces
/// the Hilbert numerator.
pub fn resolution_over_ambient(ideal: &HomogeneousIdeal, max_row: i32) -> Result<FreeResolution> {
    let n = ideal.ring().nvars();
    let mut last = Error::IncreaseBounds("empty row range".into());
    for row in 1..=max_row.max(1) {
        match minimal_resolution(ideal, n, row) {
            Ok(r) => return Ok(r),
            Err(e @ Error::IncreaseBounds(_)) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

/// Minimal resolution of `R_X` over `R_Y`. Generators of step `i` are
/// searched up to the top degree of the Shamash module `G_i` (the minimal
/// resolution is a summand of it), capped at `degree_bound`.
pub fn resolve_over_cubic(ideal: &HomogeneousIdeal, f: &HomogPoly, steps: usize, degree_bound: i32) -> Result<QuotientResolution> {
    if !ideal.groebner().contains(f) {
        return Err(Error::NotInIdeal);
    }
    let s = f.degree().unwrap_or(0) as i32;
    let ambient = resolution_over_ambient(ideal, degree_bound)?;
    let shamash = shamash_start(&ambient, s, steps);
    let cap = |i: usize| shamash.entries().filter(|e| e.0 == i).map(|e| e.1).max().unwrap_or(0).min(degree_bound);

    let mut alg = hypersurface(f);
    let d1 = GradedMatrix::row_of(ideal.ring(), ideal.generators());
    let d1 = minimize_presentation(&d1.reduce(alg.groebner().unwrap()), &alg);
    let d1 = minimal_columns(&mut alg, &d1);
    let mut ds = Vec::new();
    if d1.ncols() > 0 {
        ds.push(d1);
    }
    while !ds.is_empty() && ds.len() < steps {
        let next = graded_syzygies(&mut alg, ds.last().unwrap(), cap(ds.len() + 1));
        if next.ncols() == 0 {
            break;
        }
        ds.push(next);
    }
    let resolution = FreeResolution { differentials: ds, minimal: true };
    let period_start = detect_period(&resolution, s);
    Ok(QuotientResolution { f: f.clone(), resolution, period_start })
}

/// A pair with `phi psi = psi phi = f Id`.
#[derive(Clone, Debug)]
pub struct MatrixFactorization {
    pub f: HomogPoly,
    pub phi: GradedMatrix,
    pub psi: GradedMatrix,
}

impl MatrixFactorization {
    /// Both products equal `f` times the identity, entry by entry over `R`.
    /// The products only compose after a shift by `deg f`, so twists are
    /// ignored here.
    pub fn verify(&self) -> bool {
        let is_f_id = |a: &GradedMatrix, b: &GradedMatrix| {
            let n = a.nrows();
            a.ncols() == b.nrows()
                && b.ncols() == n
                && (0..n).all(|r| {
                    (0..n).all(|c| {
                        let e = (0..a.ncols()).fold(HomogPoly::zero(self.f.ring()), |acc, k| acc.add(&a.get(r, k).mul(b.get(k, c))));
                        if r == c { e == self.f } else { e.is_zero() }
                    })
                })
        };
        is_f_id(&self.phi, &self.psi) && is_f_id(&self.psi, &self.phi)
    }

    /// Betti numbers of `psi` as a presentation: `15 6 / . 9` for the
    /// surfaces here.
    pub fn shape(&self) -> BettiTable {
        BettiTable::from_twists([self.psi.row_twists(), self.psi.col_twists()])
    }

    /// `deg det(phi) / deg f`, the rank of `coker phi` on `Y`.
    pub fn cokernel_rank(&self) -> i64 {
        let s: i64 = self.phi.col_twists().iter().map(|&t| t as i64).sum::<i64>()
            - self.phi.row_twists().iter().map(|&t| t as i64).sum::<i64>();
        s / self.f.degree().unwrap_or(1) as i64
    }
}

/// Reads `psi = d_k` and `phi = d_{k+1}` off the periodic tail (with `k`
/// the period start), normalizes twists so that `psi` lands in degree 0,
/// and rescales `phi` so that `psi phi = f Id` holds over `R`.
pub fn extract_mf(q: &QuotientResolution) -> Result<MatrixFactorization> {
    let k = q.period_start.ok_or(Error::PeriodNotReached)?;
    let ds = &q.resolution.differentials;
    if k + 1 > ds.len() {
        return Err(Error::PeriodNotReached);
    }
    let psi = &ds[k - 1];
    let phi = &ds[k];
    let shift = -psi.row_twists().iter().copied().min().unwrap_or(0);
    let (psi, phi) = (psi.shifted(shift), phi.shifted(shift));
    if psi.nrows() != phi.ncols() {
        return Err(Error::DimensionMismatch { expected: psi.nrows(), got: phi.ncols() });
    }
    let ring = q.f.ring();
    let field = ring.field();
    let n = psi.nrows();
    // psi phi = f H with H a scalar matrix
    let prod = psi.compose(&phi, None)?;
    let d = q.f.degree().unwrap();
    let lead = q.f.leading().unwrap();
    let mut h = ScalarMatrix::zeros(field, n, n);
    for r in 0..n {
        for c in 0..n {
            let e = prod.get(r, c);
            let scale = e.coefficient(lead.0);
            let scale = field.mul(scale, field.inv(lead.1).unwrap());
            if *e != q.f.scale(scale) || e.degree().is_some_and(|x| x != d) {
                return Err(Error::NotGeneric("product of consecutive maps is not a multiple of f".into()));
            }
            h.set(r, c, scale);
        }
    }
    let hinv = invert(&h).ok_or_else(|| Error::NotGeneric("periodicity map is singular".into()))?;
    let mut scaled = GradedMatrix::zero(ring, phi.row_twists().to_vec(), phi.col_twists().to_vec());
    for r in 0..phi.nrows() {
        for c in 0..n {
            let v = (0..n).fold(HomogPoly::zero(ring), |acc, j| acc.add(&phi.get(r, j).scale(hinv.get(j, c))));
            scaled.set(r, c, v);
        }
    }
    let mf = MatrixFactorization { f: q.f.clone(), phi: scaled, psi };
    if !mf.verify() {
        return Err(Error::NotGeneric("lifted factorization fails phi psi = f Id".into()));
    }
    Ok(mf)
}

fn invert(m: &ScalarMatrix) -> Option<ScalarMatrix> {
    let n = m.rows();
    crate::linalg::solve_many(m, &ScalarMatrix::identity(m.field(), n)).filter(|_| rank(m) == n)
}

/// Betti numbers of the first `steps + 1` modules of the Shamash resolution
/// `G_k = ⊕_j F_{k-2j}(-j s)` built from the `R`-resolution `F` of `R_X`.
pub fn shamash_start(f_res: &FreeResolution, s: i32, steps: usize) -> BettiTable {
    let mut table = BettiTable::new();
    for k in 0..=steps {
        for j in 0..=k / 2 {
            let i = k - 2 * j;
            if i > f_res.length() {
                continue;
            }
            for &t in f_res.twists(i) {
                table.add(k, t + j as i32 * s, 1);
            }
        }
    }
    table
}

/// Pairs `(i, j, count)`: `count` generators of degree `j` cancelled between
/// steps `i` and `i + 1` on the way from `shamash` to `minimal`, both read in
/// steps `<= steps`. Surplus left in the last step pairs with generators
/// beyond the window. `None` if the difference is not a union of such pairs.
pub fn cancellations(shamash: &BettiTable, minimal: &BettiTable, steps: usize) -> Option<Vec<(usize, i32, usize)>> {
    let mut diff: alloc::collections::BTreeMap<(usize, i32), i64> = alloc::collections::BTreeMap::new();
    for (i, j, b) in shamash.entries().filter(|e| e.0 <= steps) {
        *diff.entry((i, j)).or_default() += b as i64;
    }
    for (i, j, b) in minimal.entries().filter(|e| e.0 <= steps) {
        *diff.entry((i, j)).or_default() -= b as i64;
    }
    let mut pairs = Vec::new();
    for i in 0..steps {
        let here: Vec<(i32, i64)> = diff.range((i, i32::MIN)..=(i, i32::MAX)).map(|(k, &v)| (k.1, v)).collect();
        for (j, v) in here {
            if v < 0 {
                return None;
            }
            if v > 0 {
                let next = diff.entry((i + 1, j)).or_default();
                if *next < v {
                    return None;
                }
                *next -= v;
                diff.insert((i, j), 0);
                pairs.push((i, j, v as usize));
            }
        }
    }
    if diff.range((steps, i32::MIN)..=(steps, i32::MAX)).any(|(_, &v)| v < 0) {
        return None;
    }
    Some(pairs)
}

/// Outcome of checking `0 -> O_Y^6(-b) -> coker(phi)(-1) -> I_{X/Y} -> 0`
/// degree by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FTypeReport {
    pub rank: i64,
    /// Twist `b` for which the sequence is exact in all checked degrees.
    pub twist: Option<i32>,
    /// First degree where the dimension count fails, for each tried twist.
    pub failures: Vec<(i32, i32)>,
    /// Cubics that are the images of the nine degree-2 generators of `F`.
    pub map_to_ideal: Vec<HomogPoly>,
    pub degree_bound: i32,
    pub alpha_injective: bool,
}

impl FTypeReport {
    pub fn exact(&self) -> bool {
        self.twist.is_some() && self.alpha_injective && !self.map_to_ideal.is_empty()
    }
}

/// A random `F_p`-point of the hypersurface `f = 0`, found on random lines.
fn point_on_hypersurface(f: &HomogPoly, rng: &mut Rng) -> Vec<u32> {
    let field = f.ring().field();
    let n = f.ring().nvars();
    loop {
        let (a, b) = (vector(rng, field, n), vector(rng, field, n));
        let on_line = |t: u32| -> Vec<u32> { (0..n).map(|i| field.add(a[i], field.mul(t, b[i]))).collect() };
        if let Some(t) = (0..field.modulus()).find(|&t| f.eval(&on_line(t)) == 0) {
            let p = on_line(t);
            if p.iter().any(|&x| x != 0) {
                return p;
            }
        }
    }
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

/// Checks the sequence with `F = coker(phi)(-1)` and `L = O_Y^6(-b)` for
/// `b = 1, 2`. Exactness follows from: `alpha` injective (it is at a general
/// point of `Y` and `L` is torsion free), the nine generators mapping onto
/// generators of `I_{X/Y}` with `phi` going to zero, and the dimension count
/// in every degree `<= degree_bound`. `dim F_d` comes from the resolution
/// `0 -> R^15 -> R^15` of `coker phi`, exact since `psi phi = f Id`.
pub fn f_type_check(mf: &MatrixFactorization, ideal: &HomogeneousIdeal, degree_bound: i32, seed: u64) -> Result<FTypeReport> {
    let ring = ideal.ring();
    let field = ring.field();
    let f = &mf.f;
    let s = f.degree().unwrap() as i32;
    let low = *mf.phi.row_twists().iter().min().unwrap();
    let small: Vec<usize> = (0..mf.phi.nrows()).filter(|&r| mf.phi.row_twists()[r] == low).collect();
    let big: Vec<usize> = (0..mf.phi.nrows()).filter(|&r| mf.phi.row_twists()[r] != low).collect();

    let rdim = |d: i32| ring.dim(d as i64) as i64;
    let ry = |d: i32| rdim(d) - rdim(d - s);
    let f_dim = |d: i32| {
        mf.phi.row_twists().iter().map(|&t| rdim(d - 1 - t)).sum::<i64>()
            - mf.phi.col_twists().iter().map(|&t| rdim(d - 1 - t)).sum::<i64>()
    };
    let gb = ideal.groebner();
    let numerator = hilbert_from_groebner(&gb, degree_bound.max(0) as u32).numerator;
    let quotient_dim = |d: i32| HilbertData::value_from_numerator(&numerator, ring.nvars(), d as i64);
    let i_xy = |d: i32| rdim(d) - quotient_dim(d) - rdim(d - s);

    let mut failures = Vec::new();
    let mut twist = None;
    for b in [1, 2] {
        match (0..=degree_bound).find(|&d| f_dim(d) != small.len() as i64 * ry(d - b) + i_xy(d)) {
            Some(d) => failures.push((b, d)),
            None => twist = twist.or(Some(b)),
        }
    }

    // alpha at a general point of Y: the six generators stay independent
    // modulo the image of phi
    let mut rng = rng_from_seed(seed);
    let p = point_on_hypersurface(f, &mut rng);
    let phi_p = eval_matrix(&mf.phi, &p);
    let mut with_small = ScalarMatrix::zeros(field, mf.phi.nrows(), mf.phi.ncols() + small.len());
    for r in 0..mf.phi.nrows() {
        for c in 0..mf.phi.ncols() {
            with_small.set(r, c, phi_p.get(r, c));
        }
    }
    for (j, &r) in small.iter().enumerate() {
        with_small.set(r, mf.phi.ncols() + j, 1);
    }
    let alpha_injective = rank(&with_small) == rank(&phi_p) + small.len();

    // F -> I_{X/Y}: the remaining generators go to cubics g with g phi = 0 mod f
    let phi_big = mf.phi.select_rows(&big);
    let mut alg = hypersurface(f);
    let left = graded_syzygies(&mut alg, &phi_big.dual(0), s - big_twist(&phi_big));
    let mut map_to_ideal = Vec::new();
    if left.ncols() == 1 {
        let g: Vec<HomogPoly> = left.column(0);
        let deg_ok = g.iter().all(|p| p.is_zero() || p.degree() == Some(s as u32));
        let in_ideal = g.iter().all(|p| gb.contains(p));
        let mut span: Vec<Vec<u32>> = g.iter().map(|p| p.to_dense(s as u32)).collect();
        span.push(f.to_dense(s as u32));
        let cubics = rdim(s) - quotient_dim(s);
        let zero = phi_big.dual(0).compose(&left, alg.groebner())?.is_zero();
        if deg_ok && in_ideal && zero && rank(&ScalarMatrix::from_rows(field, rdim(s) as usize, &span)) as i64 == cubics {
            map_to_ideal = g;
        }
    }
    Ok(FTypeReport { rank: mf.cokernel_rank(), twist, failures, map_to_ideal, degree_bound, alpha_injective })
}

fn big_twist(m: &GradedMatrix) -> i32 {
    *m.row_twists().iter().max().unwrap()
}

/// Coefficients `a_i` of degree `deg f - deg g_i` with `f = sum a_i g_i`.
fn express(f: &HomogPoly, gens: &[HomogPoly]) -> Result<Vec<HomogPoly>> {
    let ring = f.ring();
    let d = f.degree().unwrap();
    let mut cols = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let Some(e) = g.degree() else { continue };
        if e > d {
            continue;
        }
        for m in ring.basis(d - e) {
            cols.push((i, m, g.mul_monomial(m, 1).to_dense(d)));
        }
    }
    let n = ring.dim(d as i64);
    let mut a = ScalarMatrix::zeros(ring.field(), n, cols.len());
    for (c, (_, _, v)) in cols.iter().enumerate() {
        for (r, &x) in v.iter().enumerate() {
            a.set(r, c, x);
        }
    }
    let x = solve(&a, &f.to_dense(d))?.ok_or(Error::NotInIdeal)?;
    let mut out = vec![HomogPoly::zero(ring); gens.len()];
    for ((i, m, _), &c) in cols.iter().zip(&x) {
        if c != 0 {
            out[*i] = out[*i].add(&HomogPoly::monomial(ring, *m, c));
        }
    }
    Ok(out)
}

/// `h^0(N_{X/Y}) = dim Hom(I_{X/Y}, R_X)_0`, for `X` arithmetically
/// Cohen-Macaulay so that `R_X` is the full section ring.
pub fn normal_sections(ideal: &HomogeneousIdeal, f: &HomogPoly) -> Result<usize> {
    let ring = ideal.ring();
    let gb: GroebnerBasis = ideal.groebner();
    if !gb.contains(f) {
        return Err(Error::NotInIdeal);
    }
    let gens = ideal.generators();
    let coeffs = express(f, gens)?;
    let top = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0) as i32;
    let mut alg_r = QuotientAlgebra::polynomial(ring);
    let d1 = GradedMatrix::row_of(ring, gens);
    let syz = graded_syzygies(&mut alg_r, &d1, top + 1);
    // relations of I_{X/Y}: syzygies of I_X and the expression of f
    let fdeg = f.degree().unwrap() as i32;
    let mut col_twists = syz.col_twists().to_vec();
    col_twists.push(fdeg);
    let mut rel = GradedMatrix::zero(ring, d1.col_twists().to_vec(), col_twists);
    for r in 0..syz.nrows() {
        for c in 0..syz.ncols() {
            rel.set(r, c, syz.get(r, c).clone());
        }
        rel.set(r, syz.ncols(), coeffs[r].clone());
    }
    let hom = rel.dual(0);
    let mut alg_x = QuotientAlgebra::quotient(gb);
    let top_twist = hom.row_twists().iter().chain(hom.col_twists()).map(|t| -t).max().unwrap_or(0);
    alg_x.extend_to(top_twist.max(0) + 1);
    let m = map_in_degree(&alg_x, &hom, 0);
    Ok(m.cols() - rank(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::Ring;
    use crate::text::parse_poly;

    fn ring(n: usize) -> Ring {
        Ring::new(n, PrimeField::default_field())
    }

    #[test]
    fn f_annihilates_the_hypersurface_ring() {
        let r = ring(3);
        let f = parse_poly(r, "x0^3 + x1^3 + x2^3").unwrap();
        let m = GradedMatrix::new(r, vec![0], vec![3], vec![f.clone()]).unwrap();
        let k = quotient_syzygies(&m, &f, 5);
        assert_eq!(k.ncols(), 1);
        assert_eq!(k.col_twists(), [3]);
        assert_eq!(*k.get(0, 0), HomogPoly::constant(r, 1));
    }

    #[test]
    fn kernel_of_a_variable_on_a_reducible_cubic() {
        let r = ring(3);
        let q = parse_poly(r, "x1^2 + x0*x2 + 2*x2^2").unwrap();
        let f = HomogPoly::var(r, 0).mul(&q);
        let m = GradedMatrix::new(r, vec![0], vec![1], vec![HomogPoly::var(r, 0)]).unwrap();
        let k = quotient_syzygies(&m, &f, 6);
        assert_eq!(k.ncols(), 1);
        let back = HomogPoly::var(r, 0).mul(k.get(0, 0));
        // multiply back: x0 * k lies in (f)
        let gb = buchberger(&HomogeneousIdeal::new(r, vec![f]));
        assert!(gb.normal_form(&back).is_zero());
        assert_eq!(k.get(0, 0).degree(), Some(2));
    }

    #[test]
    fn hypersurface_resolves_itself_trivially() {
        let r = ring(4);
        let f = parse_poly(r, "x0^3 - x1*x2*x3").unwrap();
        let ideal = HomogeneousIdeal::new(r, vec![f.clone()]);
        let q = resolve_over_cubic(&ideal, &f, 4, 6).unwrap();
        assert_eq!(q.resolution.length(), 0);
    }

    #[test]
    fn form_outside_the_ideal_is_refused() {
        let r = ring(4);
        let ideal = HomogeneousIdeal::new(r, vec![parse_poly(r, "x0*x1*x2").unwrap()]);
        let f = parse_poly(r, "x3^3").unwrap();
        assert_eq!(resolve_over_cubic(&ideal, &f, 3, 6).unwrap_err(), Error::NotInIdeal);
    }

    #[test]
    fn one_by_one_factorization() {
        let r = ring(3);
        let f = parse_poly(r, "x0*x1*x2 + x2^3").unwrap();
        let mf = MatrixFactorization {
            f: f.clone(),
            phi: GradedMatrix::new(r, vec![0], vec![3], vec![f.clone()]).unwrap(),
            psi: GradedMatrix::new(r, vec![0], vec![0], vec![HomogPoly::constant(r, 1)]).unwrap(),
        };
        assert!(mf.verify());
        assert_eq!(mf.cokernel_rank(), 1);
    }

    #[test]
    fn koszul_shamash_pairs() {
        // R_X = R/(x0^3, x1) over R/(x0^3): one cancellation in steps <= 2
        let r = ring(3);
        let ideal = HomogeneousIdeal::new(r, vec![parse_poly(r, "x0^3").unwrap(), HomogPoly::var(r, 1)]);
        let f_res = crate::resolve::minimal_resolution(&ideal, 3, 3).unwrap();
        let sh = shamash_start(&f_res, 3, 2);
        assert_eq!(sh.get(2, 3), 1);
        let q = resolve_over_cubic(&ideal, &parse_poly(r, "x0^3").unwrap(), 3, 8).unwrap();
        let pairs = cancellations(&sh, &q.betti(), 2).unwrap();
        assert_eq!(pairs, [(1, 3, 1)]);
    }
}
