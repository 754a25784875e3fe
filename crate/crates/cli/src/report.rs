//! JSON shapes for command output. Field order is fixed by the struct
//! definitions, so equal inputs serialize to equal bytes.

use serde::Serialize;
use surfkit_core::classifier::{ClassificationNode, IntersectionData, Verdict};
use surfkit_core::resolve::BettiTable;
use surfkit_core::surfacegen::SurfaceNumbers;

#[derive(Serialize)]
pub struct Betti {
    /// `[i, j, beta]` with `j` the internal degree.
    pub entries: Vec<[i64; 3]>,
    pub text: String,
}

impl From<&BettiTable> for Betti {
    fn from(b: &BettiTable) -> Self {
        Betti {
            entries: b.entries().map(|(i, j, v)| [i as i64, j as i64, v as i64]).collect(),
            text: b.to_text(),
        }
    }
}

#[derive(Serialize)]
pub struct Numbers {
    pub degree: i64,
    pub genus: i64,
    pub chi: i64,
}

impl From<SurfaceNumbers> for Numbers {
    fn from(n: SurfaceNumbers) -> Self {
        Numbers { degree: n.degree, genus: n.genus, chi: n.chi }
    }
}

#[derive(Serialize)]
pub struct Intersections {
    pub h2: i64,
    pub hk: i64,
    pub k2: i64,
    pub chi: i64,
}

impl From<IntersectionData> for Intersections {
    fn from(d: IntersectionData) -> Self {
        Intersections { h2: d.h2, hk: d.hk, k2: d.k2, chi: d.chi }
    }
}

#[derive(Serialize)]
pub struct SeedLog {
    pub name: String,
    pub seed: u64,
}

#[derive(Serialize)]
pub struct Meta {
    pub family: String,
    pub spec: Option<String>,
    pub prime: u32,
    pub nvars: usize,
    pub degree_bound: u32,
    pub seed: u64,
    pub used_seed: u64,
    pub attempts: u32,
    /// Every random choice, so the run can be replayed.
    pub seeds: Vec<SeedLog>,
    /// Number of minimal generators in each degree, starting at 0.
    pub generator_degrees: Vec<usize>,
    pub numbers: Numbers,
    pub intersections: Intersections,
}

#[derive(Serialize)]
pub struct BettiReport {
    pub koszul: Betti,
    pub resolution: Betti,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct HilbertReport {
    pub values: Vec<i64>,
    pub numerator: Vec<i64>,
}

#[derive(Serialize)]
pub struct MfReport {
    pub cubic: String,
    pub cubic_seed: u64,
    pub quotient_betti: Betti,
    pub period_start: Option<usize>,
    pub shape: Betti,
    pub rows: usize,
    pub cols: usize,
    pub cokernel_rank: i64,
    pub verified: bool,
}

#[derive(Serialize)]
pub struct NormalReport {
    pub cubic: String,
    pub cubic_seed: u64,
    pub normal_sections: usize,
}

#[derive(Serialize)]
pub struct Node {
    pub label: String,
    pub rule: &'static str,
    pub h2: i64,
    pub hk: i64,
    pub k2: i64,
    pub ambient: i64,
    pub blown_down: Option<i64>,
    pub model: Option<String>,
    pub verdict: &'static str,
    /// Family id for accepted and same-as leaves, reason for rejections.
    pub detail: Option<String>,
    pub needs_computation: Option<String>,
    pub children: Vec<Node>,
}

impl From<&ClassificationNode> for Node {
    fn from(n: &ClassificationNode) -> Self {
        let (verdict, detail, needs) = match &n.verdict {
            Verdict::Accepted(id) => ("accepted", Some(id.clone()), None),
            Verdict::SameAs(id) => ("same_as", Some(id.clone()), None),
            Verdict::Rejected { reason, needs_computation } => ("rejected", Some(reason.clone()), needs_computation.clone()),
            Verdict::Branch(_) => ("branch", None, None),
        };
        Node {
            label: n.label.clone(),
            rule: n.rule.name(),
            h2: n.data.h2,
            hk: n.data.hk,
            k2: n.data.k2,
            ambient: n.ambient,
            blown_down: n.blown_down,
            model: n.model.as_ref().map(|m| m.to_string()),
            verdict,
            detail,
            needs_computation: needs,
            children: n.children().iter().map(Node::from).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct QuadricCheck {
    pub family: String,
    pub quadrics: usize,
    pub confirmed: bool,
}

#[derive(Serialize)]
pub struct ClassifyReport {
    pub accepted: Vec<String>,
    pub tree: Node,
    pub verification: Option<Vec<QuadricCheck>>,
}

#[derive(Serialize)]
pub struct RowReport {
    pub family: String,
    pub k2: i64,
    pub cells: Vec<Cell>,
}

#[derive(Serialize)]
pub struct Cell {
    pub name: &'static str,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct TableReport {
    pub rows: Vec<RowReport>,
    pub pass: bool,
}
