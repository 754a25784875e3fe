use std::fs;
use std::path::{Path, PathBuf};

use surfkit_core::classifier::{classify, discriminant_invariants, expected_normal_sections};
use surfkit_core::field::PrimeField;
use surfkit_core::groebner::{degree_parts, hilbert_series, HomogeneousIdeal};
use surfkit_core::mfcubic::{extract_mf, normal_sections, resolve_over_cubic, DEFAULT_DEGREE_BOUND, DEFAULT_STEPS};
use surfkit_core::random::{combination, rng_from_seed};
use surfkit_core::resolve::{betti_via_koszul, minimal_resolution, BettiTable};
use surfkit_core::surfacegen::{
    accepted_families, construct_rational, enriques_betti, enriques_pipeline, family, h0_twist, ideal_surface_numbers, FamilyKind,
    SurfaceModel,
};
use surfkit_core::text::{format_polys, parse_polys};
use surfkit_core::{HomogPoly, Ring};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::report::*;

/// Default degree bound for implicitization and for the Betti rows.
const SURFACE_BOUND: u32 = 3;
/// Hilbert function values printed by default.
const HILBERT_BOUND: u32 = 5;
/// Salt for the seed of the random cubic through a surface.
const CUBIC_SALT: u64 = 0xc0b1c;

pub struct Output {
    pub text: String,
    pub json: String,
}

impl Output {
    fn new(text: String, value: &impl serde::Serialize) -> Result<Self, CliError> {
        Ok(Output { text, json: serde_json::to_string_pretty(value)? + "\n" })
    }
}

fn field(cfg: &RunConfig) -> Result<PrimeField, CliError> {
    Ok(PrimeField::new(cfg.prime)?)
}

pub fn read_ideal(path: &Path) -> Result<HomogeneousIdeal, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let (ring, polys) = parse_polys(&text)?;
    Ok(HomogeneousIdeal::new(ring, polys))
}

pub struct Constructed {
    pub model: SurfaceModel,
    pub meta: Meta,
}

pub fn build(id: &str, cfg: &RunConfig) -> Result<Constructed, CliError> {
    let fam = family(id)?;
    let field = field(cfg)?;
    let bound = cfg.bound_or(SURFACE_BOUND);
    let (model, seeds) = match &fam.kind {
        FamilyKind::Rational(spec) => {
            let model = construct_rational(&fam.id, spec, field, cfg.seed, bound)?;
            let seeds = vec![SeedLog { name: "points".into(), seed: model.used_seed }];
            (model, seeds)
        }
        FamilyKind::Enriques => {
            let model = enriques_pipeline(field, cfg.seed)?.surface;
            let s = model.used_seed;
            let seeds = vec![
                SeedLog { name: "module_quadrics".into(), seed: s },
                SeedLog { name: "quintic_interpolation".into(), seed: s ^ 0x5157 },
                SeedLog { name: "points_on_projection".into(), seed: s ^ 0xad0 },
            ];
            (model, seeds)
        }
    };
    let mut generator_degrees = Vec::new();
    for f in model.ideal.generators() {
        let d = f.degree().unwrap_or(0) as usize;
        if generator_degrees.len() <= d {
            generator_degrees.resize(d + 1, 0);
        }
        generator_degrees[d] += 1;
    }
    let meta = Meta {
        family: model.family.clone(),
        spec: model.spec.as_ref().map(|s| s.to_string()),
        prime: cfg.prime,
        nvars: model.ideal.ring().nvars(),
        degree_bound: bound,
        seed: model.seed,
        used_seed: model.used_seed,
        attempts: model.attempts,
        seeds,
        generator_degrees,
        numbers: ideal_surface_numbers(&model.ideal).into(),
        intersections: model.invariants.into(),
    };
    Ok(Constructed { model, meta })
}

fn write_model(dir: &Path, c: &Constructed) -> Result<String, CliError> {
    fs::create_dir_all(dir)?;
    let ideal = c.model.ideal.ring();
    fs::write(dir.join("ideal.txt"), format_polys(ideal, c.model.ideal.generators()))?;
    let meta = serde_json::to_string_pretty(&c.meta)? + "\n";
    fs::write(dir.join("meta.json"), &meta)?;
    Ok(meta)
}

pub fn construct(id: &str, cfg: &RunConfig) -> Result<Output, CliError> {
    let c = build(id, cfg)?;
    let meta = write_model(&cfg.out, &c)?;
    let m = &c.meta;
    let text = format!(
        "{}: {} generators in P^{} (by degree {:?}), degree {}, genus {}, chi {}\nseed {} (attempt {}), wrote {}\n",
        m.family,
        c.model.ideal.generators().len(),
        m.nvars - 1,
        m.generator_degrees,
        m.numbers.degree,
        m.numbers.genus,
        m.numbers.chi,
        m.used_seed,
        m.attempts,
        cfg.out.display(),
    );
    Ok(Output { text, json: meta })
}

/// Koszul and resolution tables of `R/I` in rows `<= max_row`.
pub fn betti_tables(ideal: &HomogeneousIdeal, max_row: u32) -> Result<(BettiTable, BettiTable), CliError> {
    let n = ideal.ring().nvars();
    let koszul = betti_via_koszul(ideal, n, max_row)?;
    let res = minimal_resolution(ideal, n, max_row as i32)?.betti();
    Ok((koszul, res))
}

pub fn betti(path: &Path, cfg: &RunConfig) -> Result<Output, CliError> {
    let ideal = read_ideal(path)?;
    let (koszul, res) = betti_tables(&ideal, cfg.bound_or(SURFACE_BOUND))?;
    let agree = koszul == res;
    let report = BettiReport { koszul: (&koszul).into(), resolution: (&res).into(), agree };
    let text = format!(
        "koszul:\n{}resolution:\n{}{}\n",
        koszul.to_text(),
        res.to_text(),
        if agree { "tables agree" } else { "TABLES DIFFER" }
    );
    let out = Output::new(text, &report)?;
    if !agree {
        return Err(CliError::mismatch(format!("{}Koszul and resolution Betti tables differ", out.text)));
    }
    Ok(out)
}

pub fn hilbert(path: &Path, cfg: &RunConfig) -> Result<Output, CliError> {
    let ideal = read_ideal(path)?;
    let h = hilbert_series(&ideal, cfg.bound_or(HILBERT_BOUND));
    let text = format!("values: {:?}\nnumerator: {}\n", h.values, numerator_text(&h.numerator));
    Output::new(text, &HilbertReport { values: h.values, numerator: h.numerator })
}

/// `1 - 10t^3 + 15t^4 - 6t^5`.
pub fn numerator_text(c: &[i64]) -> String {
    let mut out = String::new();
    for (k, &a) in c.iter().enumerate().filter(|(_, &a)| a != 0) {
        match (out.is_empty(), a < 0) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        let a = a.unsigned_abs();
        if k == 0 || a != 1 {
            out.push_str(&a.to_string());
        }
        match k {
            0 => {}
            1 => out.push('t'),
            _ => out.push_str(&format!("t^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A random cubic in the ideal, from the full degree 3 part.
pub fn random_cubic(ideal: &HomogeneousIdeal, seed: u64) -> Result<(HomogPoly, u64), CliError> {
    let ring: Ring = ideal.ring();
    let cubics: Vec<HomogPoly> = degree_parts(ideal, 3)
        .pop()
        .map(|e| e.vectors().map(|v| HomogPoly::from_dense(ring, 3, v)).collect())
        .unwrap_or_default();
    if cubics.is_empty() {
        return Err(CliError::usage("the ideal contains no cubic"));
    }
    let s = seed ^ CUBIC_SALT;
    Ok((combination(&mut rng_from_seed(s), &cubics), s))
}

pub fn mf_report(ideal: &HomogeneousIdeal, cfg: &RunConfig) -> Result<MfReport, CliError> {
    let (f, cubic_seed) = random_cubic(ideal, cfg.seed)?;
    let bound = cfg.degree_bound.map_or(DEFAULT_DEGREE_BOUND, |b| b as i32);
    let q = resolve_over_cubic(ideal, &f, DEFAULT_STEPS, bound)?;
    let mf = extract_mf(&q)?;
    Ok(MfReport {
        cubic: f.to_string(),
        cubic_seed,
        quotient_betti: (&q.betti()).into(),
        period_start: q.period_start,
        shape: (&mf.shape()).into(),
        rows: mf.phi.nrows(),
        cols: mf.phi.ncols(),
        cokernel_rank: mf.cokernel_rank(),
        verified: mf.verify(),
    })
}

pub fn mf(path: &Path, cfg: &RunConfig) -> Result<Output, CliError> {
    let ideal = read_ideal(path)?;
    let r = mf_report(&ideal, cfg)?;
    let text = format!(
        "cubic seed {}\nresolution over the cubic:\n{}period starts at step {}\nmatrix factorization {}x{}, shape\n{}rank of coker phi: {}\nphi psi = psi phi = f Id: {}\n",
        r.cubic_seed,
        r.quotient_betti.text,
        r.period_start.map_or("-".into(), |k| k.to_string()),
        r.rows,
        r.cols,
        r.shape.text,
        r.cokernel_rank,
        if r.verified { "pass" } else { "FAIL" },
    );
    let verified = r.verified;
    let out = Output::new(text, &r)?;
    if !verified {
        return Err(CliError::mismatch(format!("{}matrix factorization check failed", out.text)));
    }
    Ok(out)
}

pub fn normal_bundle(path: &Path, cfg: &RunConfig) -> Result<Output, CliError> {
    let ideal = read_ideal(path)?;
    let (f, cubic_seed) = random_cubic(&ideal, cfg.seed)?;
    let n = normal_sections(&ideal, &f)?;
    Output::new(format!("{n}\n"), &NormalReport { cubic: f.to_string(), cubic_seed, normal_sections: n })
}

pub fn classify_cmd(verify: bool, cfg: &RunConfig) -> Result<Output, CliError> {
    let tree = classify(10, 6);
    let accepted = tree.accepted();
    let mut text = tree.render();
    text.push_str(&format!("accepted: {}\n", accepted.join(" ")));
    let verification = if verify {
        let mut checks = Vec::new();
        for id in tree.needs_computation() {
            let c = build(&id, cfg)?;
            let quadrics = h0_twist(&c.model.ideal, 2);
            text.push_str(&format!("{id}: h0(I(2)) = {quadrics}\n"));
            checks.push(QuadricCheck { family: id, quadrics, confirmed: quadrics == 1 });
        }
        Some(checks)
    } else {
        None
    };
    let failed = verification.iter().flatten().any(|c| !c.confirmed);
    let out = Output::new(text, &ClassifyReport { accepted, tree: (&tree).into(), verification })?;
    if failed {
        return Err(CliError::mismatch(format!("{}a rejected family does not lie on exactly one quadric", out.text)));
    }
    Ok(out)
}

fn cell(name: &'static str, expected: impl ToString, got: impl ToString) -> Cell {
    let (expected, got) = (expected.to_string(), got.to_string());
    Cell { name, pass: expected == got, expected, got }
}

/// Construct, resolve, and factor one row, keeping its files in `dir`.
pub fn table_row(id: &str, cfg: &RunConfig, dir: PathBuf) -> Result<RowReport, CliError> {
    let fam = family(id)?;
    let row_cfg = RunConfig { out: dir, degree_bound: None, ..cfg.clone() };
    let c = build(id, &row_cfg)?;
    write_model(&row_cfg.out, &c)?;
    let ideal = &c.model.ideal;
    let (koszul, res) = betti_tables(ideal, SURFACE_BOUND)?;
    let mut cells = vec![
        cell("betti", enriques_betti().to_text(), res.to_text()),
        cell("koszul_agrees", true, koszul == res),
    ];
    let n = &c.meta.numbers;
    cells.push(cell("degree_genus_chi", "10 6 1", format!("{} {} {}", n.degree, n.genus, n.chi)));
    let disc = discriminant_invariants(fam.k2)?;
    let x2 = c.model.invariants.normal_self_intersection();
    cells.push(cell("delta", disc.delta, 3 * x2 - 100));
    let mf = mf_report(ideal, &row_cfg)?;
    cells.push(cell("mf_shape", "15 6 / . 9", shape_short(&mf)));
    cells.push(cell("mf_identity", true, mf.verified));
    let (f, _) = random_cubic(ideal, row_cfg.seed)?;
    cells.push(cell("normal_sections", expected_normal_sections(fam.k2), normal_sections(ideal, &f)?));
    Ok(RowReport { family: fam.id, k2: fam.k2, cells })
}

fn shape_short(r: &MfReport) -> String {
    let e = &r.shape.entries;
    let get = |i: i64, j: i64| e.iter().find(|x| x[0] == i && x[1] == j).map_or(".".to_string(), |x| x[2].to_string());
    format!("{} {} / {} {}", get(0, 0), get(1, 1), get(0, 1), get(1, 2))
}

pub fn verify_table(cfg: &RunConfig) -> Result<Output, CliError> {
    let ids: Vec<String> = match &cfg.rows {
        Some(rows) => rows.clone(),
        None => accepted_families().into_iter().map(|f| f.id).collect(),
    };
    for id in &ids {
        let fam = family(id)?;
        if !fam.accepted {
            return Err(CliError::usage(format!("{id} is not a row of the table")));
        }
    }
    let results: Vec<Result<RowReport, CliError>> = std::thread::scope(|s| {
        let handles: Vec<_> = ids
            .iter()
            .map(|id| {
                let dir = cfg.out.join(id);
                s.spawn(move || table_row(id, cfg, dir))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("row thread panicked")).collect()
    });
    let rows = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let pass = rows.iter().all(|r| r.cells.iter().all(|c| c.pass));
    let mut text = String::new();
    if let Some(first) = rows.first() {
        text.push_str(&format!("{:<6}", "K^2"));
        for c in &first.cells {
            text.push_str(&format!(" {:>16}", c.name));
        }
        text.push('\n');
    }
    for r in &rows {
        text.push_str(&format!("{:<6}", r.k2));
        for c in &r.cells {
            let v = if c.pass { format!("ok {}", compact(&c.got)) } else { format!("FAIL {}", compact(&c.got)) };
            text.push_str(&format!(" {v:>16}"));
        }
        text.push('\n');
    }
    text.push_str(if pass { "all cells pass\n" } else { "some cells FAIL\n" });
    let out = Output::new(text, &TableReport { rows, pass })?;
    if !pass {
        return Err(CliError::mismatch(out.text));
    }
    Ok(out)
}

/// Betti tables are multi-line; the summary only says whether they matched.
fn compact(s: &str) -> String {
    if s.contains('\n') {
        "table".into()
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numerators_print_like_series() {
        assert_eq!(numerator_text(&[1, 0, 0, -10, 15, -6]), "1 - 10t^3 + 15t^4 - 6t^5");
        assert_eq!(numerator_text(&[1, -1]), "1 - t");
        assert_eq!(numerator_text(&[0, 0, 3]), "3t^2");
        assert_eq!(numerator_text(&[-1]), "-1");
        assert_eq!(numerator_text(&[]), "0");
    }
}
