//! Reproduction checks for the degree 10 surface table. Each public check
//! returns a one-line summary on success and the first discrepancy on failure;
//! the `acceptance` test target runs them all.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use serde_json::{json, Value};
use surfkit_cli::commands;
use surfkit_cli::config::RunConfig;
use surfkit_core::classifier::{classify, discriminant_invariants, ClassificationNode, Rule, Verdict};
use surfkit_core::field::PrimeField;
use surfkit_core::groebner::{hilbert_series, HomogeneousIdeal};
use surfkit_core::linalg::{kernel_basis, rank, ScalarMatrix};
use surfkit_core::mfcubic::{extract_mf, normal_sections, resolve_over_cubic, DEFAULT_DEGREE_BOUND, DEFAULT_STEPS};
use surfkit_core::random::{combination, form, rng_from_seed, scalar, vector};
use surfkit_core::resolve::{betti_via_koszul, minimal_resolution, BettiTable};
use surfkit_core::surfacegen::{
    accepted_families, adjoint_point, construct_family, enriques_betti, enriques_pipeline, family, h0_twist, random_points,
    rational_map, rational_points, rejected_families, Family, FamilyKind, SurfaceModel, SurfaceNumbers,
};
use surfkit_core::{Error, Ring, DEFAULT_PRIME};

/// Wall-clock limit for construct + betti on one family.
const BETTI_LIMIT: Duration = Duration::from_secs(120);
/// Wall-clock limit for one matrix factorization run.
const MF_LIMIT: Duration = Duration::from_secs(300);
const RANDOM_IDEALS: u64 = 20;
const FIELD_TRIPLES: usize = 10_000;
const RANK_MATRICES: u64 = 100;
const GB_IDEALS: u64 = 50;
const POINTS_PER_FAMILY: usize = 50;
const SEED: u64 = 1;

/// The seven table families and the six that lie on a quadric, built once.
pub struct Corpus {
    pub families: Vec<Family>,
    pub models: Vec<SurfaceModel>,
    pub rejected: Vec<SurfaceModel>,
}

impl Corpus {
    pub fn build() -> Result<Self, Error> {
        let families = accepted_families();
        let models = families.iter().map(|f| construct_family(f, field(), SEED)).collect::<Result<_, _>>()?;
        let rejected = rejected_families().iter().map(|f| construct_family(f, field(), SEED)).collect::<Result<_, _>>()?;
        Ok(Corpus { families, models, rejected })
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn field() -> PrimeField {
    PrimeField::default_field()
}

fn entries(b: &BettiTable) -> Value {
    json!(b.entries().map(|(i, j, v)| [i as i64, j as i64, v as i64]).collect::<Vec<_>>())
}

/// Criterion 1: `construct` then `betti` for each rational family.
pub fn betti_reproduction() -> Result<String, String> {
    let tmp = tempdir()?;
    let mut slowest = Duration::ZERO;
    for fam in accepted_families().iter().filter(|f| f.spec().is_some()) {
        let cfg = RunConfig { out: tmp.join(&fam.id), ..config() };
        let start = Instant::now();
        commands::construct(&fam.id, &cfg).map_err(|e| e.to_string())?;
        let out = commands::betti(&cfg.out.join("ideal.txt"), &cfg).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        let report: Value = serde_json::from_str(&out.json).map_err(|e| e.to_string())?;
        ensure(report["resolution"]["entries"] == entries(&enriques_betti()), || {
            format!("{}: table {}", fam.id, report["resolution"]["text"])
        })?;
        ensure(took <= BETTI_LIMIT, || format!("{} took {took:?}", fam.id))?;
    }
    let _ = std::fs::remove_dir_all(&tmp);
    Ok(format!("six rational families give 1 | 10@3 15@4 6@5, slowest {:.1}s", slowest.as_secs_f64()))
}

fn config() -> RunConfig {
    RunConfig { prime: DEFAULT_PRIME, seed: SEED, degree_bound: None, out: PathBuf::new(), json: true, rows: None }
}

fn tempdir() -> Result<PathBuf, String> {
    let dir = std::env::temp_dir().join(format!("surfkit-repro-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    Ok(dir)
}

/// Both Betti algorithms, raising the row bound until the resolution closes.
fn cross_check(ideal: &HomogeneousIdeal) -> Result<bool, String> {
    let n = ideal.ring().nvars();
    for row in 1..=12 {
        match minimal_resolution(ideal, n, row) {
            Ok(res) => {
                let koszul = betti_via_koszul(ideal, n, row as u32).map_err(|e| e.to_string())?;
                return Ok(koszul == res.betti());
            }
            Err(Error::IncreaseBounds(_)) => continue,
            Err(e) => return Err(e.to_string()),
        }
    }
    Err("resolution did not close by row 12".into())
}

fn random_ideal(seed: u64) -> HomogeneousIdeal {
    let mut rng = rng_from_seed(seed);
    let n = 3 + (seed % 2) as usize;
    let ring = Ring::new(n, field());
    let count = 2 + (scalar(&mut rng, field()) % 3) as usize;
    let gens = (0..count)
        .map(|_| {
            let d = 1 + scalar(&mut rng, field()) % 3;
            form(&mut rng, ring, d)
        })
        .collect();
    HomogeneousIdeal::new(ring, gens)
}

/// Criterion 2.
pub fn koszul_cross_oracle(c: &Corpus) -> Result<String, String> {
    let mut count = 0;
    for m in c.models.iter().chain(&c.rejected) {
        ensure(cross_check(&m.ideal)?, || format!("tables differ on {}", m.family))?;
        count += 1;
    }
    for s in 0..RANDOM_IDEALS {
        let ideal = random_ideal(s);
        ensure(cross_check(&ideal)?, || format!("tables differ on random ideal {s}"))?;
        count += 1;
    }
    Ok(format!("{count} ideals, tables agree"))
}

/// Criterion 3.
pub fn hilbert_data(c: &Corpus) -> Result<String, String> {
    for m in &c.models {
        let h = hilbert_series(&m.ideal, 5);
        ensure(h.values == [1, 6, 21, 46, 81, 126], || format!("{}: values {:?}", m.family, h.values))?;
        ensure(h.numerator == [1, 0, 0, -10, 15, -6], || format!("{}: numerator {:?}", m.family, h.numerator))?;
    }
    Ok(format!("{} families: 1 6 21 46 81 126, numerator 1 - 10t^3 + 15t^4 - 6t^5", c.models.len()))
}

/// Criterion 4.
pub fn rejected_quadrics(c: &Corpus) -> Result<String, String> {
    for m in &c.rejected {
        let q = h0_twist(&m.ideal, 2);
        ensure(q == 1, || format!("{} lies on {q} quadrics", m.family))?;
    }
    let attempts: Vec<u32> = c.rejected.iter().map(|m| m.attempts).collect();
    Ok(format!("{} families on exactly one quadric, attempts {attempts:?}", c.rejected.len()))
}

fn golden_tree() -> &'static str {
    include_str!("../../core/tests/fixtures/classification.txt")
}

/// Criterion 5.
pub fn classification() -> Result<String, String> {
    let tree = classify(10, 6);
    let ids: Vec<String> = accepted_families().into_iter().map(|f| f.id).collect();
    ensure(tree.accepted() == ids, || format!("accepted {:?}", tree.accepted()))?;
    ensure(tree.k2_range == Some((-6, 0)), || format!("top K^2 range {:?}", tree.k2_range))?;
    ensure(tree.children().len() == 7, || "top level should branch on K^2 = -6..0".into())?;
    // accepted leaves carry the linear system of their family
    for n in tree.walk() {
        if let Verdict::Accepted(id) = &n.verdict {
            let fam = family(id).map_err(|e| e.to_string())?;
            ensure(n.model.as_ref() == fam.spec(), || format!("{id}: model {:?}", n.model))?;
        }
    }
    let minus_one = &tree.children()[5];
    let killed = minus_one.walk().any(|n| matches!(&n.verdict, Verdict::Rejected { reason, .. } if reason.contains("3chi = 4")));
    ensure(killed, || "K^2=-1 has no 3chi = 4 leaf".into())?;
    let prunings = tree.walk().filter(|n| n.rule == Rule::DoublePoint).count();
    ensure(prunings > 0, || "no double point prunings".into())?;
    ensure(tree.render() == golden_tree(), || "tree differs from the golden file".into())?;
    Ok(format!("7 accepted leaves, {prunings} double point prunings, golden tree matches"))
}

/// Criterion 6.
pub fn discriminants() -> Result<String, String> {
    let mut deltas = Vec::new();
    for t in -6..=0 {
        let r = discriminant_invariants(t).map_err(|e| e.to_string())?;
        ensure((r.x2, r.delta) == (48 + 2 * t, 44 + 6 * t), || format!("t={t}: {r:?}"))?;
        deltas.push(r.delta);
    }
    ensure(deltas == [8, 14, 20, 26, 32, 38, 44], || format!("deltas {deltas:?}"))?;
    Ok(format!("delta column {deltas:?}"))
}

const SHAPE: &str = "      0  1\ntot: 15 15\n  0: 15  6\n  1:  .  9\n";

/// Criterion 7.
pub fn matrix_factorizations(c: &Corpus) -> Result<String, String> {
    let mut slowest = Duration::ZERO;
    for m in &c.models {
        for s in [11, 12] {
            let start = Instant::now();
            let f = combination(&mut rng_from_seed(s), m.ideal.generators());
            let q = resolve_over_cubic(&m.ideal, &f, DEFAULT_STEPS, DEFAULT_DEGREE_BOUND).map_err(|e| e.to_string())?;
            let mf = extract_mf(&q).map_err(|e| e.to_string())?;
            let took = start.elapsed();
            slowest = slowest.max(took);
            ensure(mf.verify(), || format!("{}: phi psi != f Id", m.family))?;
            ensure((mf.phi.nrows(), mf.phi.ncols(), mf.psi.nrows(), mf.psi.ncols()) == (15, 15, 15, 15), || {
                format!("{}: sizes {}x{}", m.family, mf.phi.nrows(), mf.phi.ncols())
            })?;
            ensure(mf.shape().to_text() == SHAPE, || format!("{}: shape\n{}", m.family, mf.shape().to_text()))?;
            ensure(took <= MF_LIMIT, || format!("{} took {took:?}", m.family))?;
        }
    }
    Ok(format!("{} runs, 15x15 with shape 15 6 / . 9, slowest {:.1}s", 2 * c.models.len(), slowest.as_secs_f64()))
}

/// Criterion 8.
pub fn normal_bundles(c: &Corpus) -> Result<String, String> {
    let mut got = Vec::new();
    for (m, fam) in c.models.iter().zip(&c.families) {
        for s in [21, 22, 23] {
            let run = |seed| {
                let f = combination(&mut rng_from_seed(seed), m.ideal.generators());
                normal_sections(&m.ideal, &f)
            };
            let n = match run(s) {
                Ok(n) => n,
                // one fresh cubic on a non-generic choice
                Err(Error::NotGeneric(_)) => run(s + 1000).map_err(|e| e.to_string())?,
                Err(e) => return Err(e.to_string()),
            };
            ensure(n as i64 == -2 * fam.k2, || format!("{}: {n} sections", fam.id))?;
        }
        got.push(-2 * fam.k2);
    }
    Ok(format!("normal sections {got:?} for three cubics each"))
}

/// Criterion 9.
pub fn enriques() -> Result<String, String> {
    let out = enriques_pipeline(field(), SEED).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    // Hilbert series 3t^2 + 10t^3 + 6t^4
    if out.module.hilbert != [3, 10, 6] {
        failures.push(format!("module Hilbert function {:?} in degrees 2..4, expected [3, 10, 6]", out.module.hilbert));
    }
    let quintics = out.projected.generators();
    if quintics.len() != 15 || quintics.iter().any(|f| f.degree() != Some(5)) {
        failures.push(format!("X' has {} generators", quintics.len()));
    }
    if (out.projected_numbers.degree, out.projected_numbers.genus) != (9, 6) {
        failures.push(format!("X' has {:?}", out.projected_numbers));
    }
    if out.image_numbers != (SurfaceNumbers { degree: 10, genus: 6, chi: 1 }) {
        failures.push(format!("image has {:?}", out.image_numbers));
    }
    let betti = minimal_resolution(&out.surface.ideal, 5, 3).map_err(|e| e.to_string())?.betti();
    if betti != enriques_betti() {
        failures.push(format!("image Betti table\n{}", betti.to_text()));
    }
    let summary = format!(
        "X' degree {} genus {} with {} quintics, image degree {}, Betti (*) {}, attempts {}",
        out.projected_numbers.degree,
        out.projected_numbers.genus,
        quintics.len(),
        out.image_numbers.degree,
        betti == enriques_betti(),
        out.module.attempts
    );
    if failures.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{}; {summary}", failures.join("; ")))
    }
}

/// Criterion 10.
pub fn properties(c: &Corpus) -> Result<String, String> {
    let f = field();
    let p = f.modulus() as u64;
    let mut rng = rng_from_seed(SEED);
    for _ in 0..FIELD_TRIPLES {
        let (a, b, c) = (scalar(&mut rng, f), scalar(&mut rng, f), scalar(&mut rng, f));
        let (x, y, z) = (a as u64, b as u64, c as u64);
        ensure(f.add(a, b) as u64 == (x + y) % p && f.mul(a, b) as u64 == x * y % p, || format!("field ops at {a},{b}"))?;
        ensure(f.mul(a, f.add(b, c)) as u64 == x * ((y + z) % p) % p, || format!("distributivity at {a},{b},{c}"))?;
        ensure(a == 0 || f.inv(a).is_some_and(|i| x * i as u64 % p == 1), || format!("inverse of {a}"))?;
    }
    for s in 0..RANK_MATRICES {
        let mut rng = rng_from_seed(s);
        let (rows, cols, k) = (1 + s as usize % 13, 1 + (s as usize * 7) % 13, (s as usize * 5) % 13);
        let m = if k == 0 {
            ScalarMatrix::zeros(f, rows, cols)
        } else {
            let a = ScalarMatrix::from_vec(f, rows, k, vector(&mut rng, f, rows * k));
            a.mul(&ScalarMatrix::from_vec(f, k, cols, vector(&mut rng, f, k * cols)))
        };
        let ker = kernel_basis(&m);
        ensure(rank(&m) + ker.len() == cols, || format!("rank-nullity fails on matrix {s}"))?;
        ensure(ker.iter().all(|v| m.mul_vec(v).iter().all(|&x| x == 0)), || format!("bad kernel on matrix {s}"))?;
    }
    for s in 0..GB_IDEALS {
        let ideal = random_ideal(1000 + s);
        let gb = ideal.groebner();
        let h = form(&mut rng_from_seed(s), ideal.ring(), 4);
        let r = gb.normal_form(&h);
        ensure(gb.normal_form(&r) == r && gb.contains(&h.sub(&r)), || format!("normal form on ideal {s}"))?;
    }
    for (m, fam) in c.models.iter().zip(&c.families) {
        let images: Vec<Vec<u32>> = match &fam.kind {
            FamilyKind::Rational(spec) => {
                let map = rational_map(spec, f, m.used_seed).map_err(|e| e.to_string())?;
                random_points(spec.ambient, f, POINTS_PER_FAMILY, 4321).points.into_iter().map(|q| map.apply(q)).collect()
            }
            FamilyKind::Enriques => {
                let out = enriques_pipeline(f, m.seed).map_err(|e| e.to_string())?;
                let mut rng = rng_from_seed(4321);
                let pts = rational_points(out.projected.generators(), POINTS_PER_FAMILY, &mut rng, 40 * POINTS_PER_FAMILY)
                    .map_err(|e| e.to_string())?;
                pts.iter().filter_map(|q| adjoint_point(&out.omega, q)).collect()
            }
        };
        ensure(images.len() == POINTS_PER_FAMILY, || format!("{}: only {} points", fam.id, images.len()))?;
        for q in &images {
            ensure(m.ideal.generators().iter().all(|g| g.eval(q) == 0), || format!("{}: equation nonzero at a point", fam.id))?;
        }
    }
    let tree = classify(10, 6);
    let branches = check_branches(&tree)?;
    Ok(format!(
        "{FIELD_TRIPLES} triples, {RANK_MATRICES} matrices, {GB_IDEALS} normal forms, {POINTS_PER_FAMILY} points x {} families, {branches} branches",
        c.models.len()
    ))
}

fn check_branches(node: &ClassificationNode) -> Result<usize, String> {
    let d = &node.data;
    let mut count = 0;
    for c in node.children() {
        if let Some(a) = c.blown_down {
            let e = &c.data;
            let ok = e.h2 == d.h2 + 2 * d.hk + d.k2 && e.hk == d.hk + d.k2 && e.k2 == d.k2 + a && e.chi == d.chi;
            ensure(ok && (e.h2 + e.hk) % 2 == 0, || format!("adjunction identity fails at {}", c.label))?;
            count += 1;
        }
        count += check_branches(c)?;
    }
    Ok(count)
}
