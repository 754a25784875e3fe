use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use crate::surfacegen::{family_of_spec, Ambient, LinearSystemSpec};

use super::lookup::lookup;
use super::{adjoint_h0, adjunction_step, double_point_residue, hk_from_genus, hodge_bound, IntersectionData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Children range over the values allowed by Hodge index and `(H+K)^2 >= 0`.
    Hodge,
    /// The adjoint map lands in `P^2`.
    AdjointPositivity,
    DoublePoint,
    /// Small-degree classification table.
    Lookup,
    /// Maximal degree surface whose ideal must contain a quadric.
    QuadricCheck,
    /// No smooth surface of `P^3` has the data.
    NoBlowupModel,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Hodge => "hodge",
            Rule::AdjointPositivity => "adjoint_positivity",
            Rule::DoublePoint => "double_point",
            Rule::Lookup => "lookup",
            Rule::QuadricCheck => "quadric_check",
            Rule::NoBlowupModel => "no_blowup_model",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// A Table family, by id.
    Accepted(String),
    /// The same surface as an accepted family.
    SameAs(String),
    /// Excluded; `needs_computation` names the family whose `h^0(I(2)) = 1`
    /// certifies the exclusion.
    Rejected { reason: String, needs_computation: Option<String> },
    Branch(Vec<ClassificationNode>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationNode {
    pub label: String,
    pub data: IntersectionData,
    /// `N` with the surface in `P^N`.
    pub ambient: i64,
    /// Lines contracted by the adjunction map from the parent.
    pub blown_down: Option<i64>,
    /// Range of the next `K^2` the children run over.
    pub k2_range: Option<(i64, i64)>,
    pub rule: Rule,
    /// Blowup description of the original surface, on model leaves.
    pub model: Option<LinearSystemSpec>,
    pub verdict: Verdict,
}

impl ClassificationNode {
    pub fn children(&self) -> &[ClassificationNode] {
        match &self.verdict {
            Verdict::Branch(c) => c,
            _ => &[],
        }
    }

    /// Depth-first walk.
    pub fn walk(&self) -> Box<dyn Iterator<Item = &ClassificationNode> + '_> {
        Box::new(core::iter::once(self).chain(self.children().iter().flat_map(|c| c.walk())))
    }

    pub fn accepted(&self) -> Vec<String> {
        self.walk()
            .filter_map(|n| match &n.verdict {
                Verdict::Accepted(id) => Some(id.clone()),
                _ => None,
            })
            .collect()
    }

    /// Family ids behind the quadric-check leaves.
    pub fn needs_computation(&self) -> Vec<String> {
        let mut ids: Vec<String> = self
            .walk()
            .filter_map(|n| match &n.verdict {
                Verdict::Rejected { needs_computation: Some(id), .. } => Some(id.clone()),
                _ => None,
            })
            .collect();
        ids.dedup();
        ids
    }

    /// Indented text, one node per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let d = &self.data;
        let _ = write!(out, "{:width$}{} ", "", self.label, width = 2 * depth);
        if self.model.is_none() {
            let _ = write!(out, "[{} {}; {}] P^{}", d.h2, d.hk, d.k2, self.ambient);
            if let Some(a) = self.blown_down {
                let _ = write!(out, " a={a}");
            }
            out.push(' ');
        }
        let _ = write!(out, "({})", self.rule.name());
        if let Some((lo, hi)) = self.k2_range {
            let _ = write!(out, " next K^2 in [{lo}, {hi}]");
        }
        match &self.verdict {
            Verdict::Accepted(id) => {
                let _ = write!(out, ": accepted {id}");
            }
            Verdict::SameAs(id) => {
                let _ = write!(out, ": same as {id}");
            }
            Verdict::Rejected { reason, .. } => {
                let _ = write!(out, ": rejected, {reason}");
            }
            Verdict::Branch(_) => {}
        }
        out.push('\n');
        for c in self.children() {
            c.render_into(out, depth + 1);
        }
    }
}

fn node(label: String, data: IntersectionData, ambient: i64, rule: Rule, verdict: Verdict) -> ClassificationNode {
    ClassificationNode { label, data, ambient, blown_down: None, k2_range: None, rule, model: None, verdict }
}

fn rejected(reason: impl Into<String>) -> Verdict {
    Verdict::Rejected { reason: reason.into(), needs_computation: None }
}

/// Case tree for smooth regular surfaces of degree `d` and sectional genus
/// `pi` in `P^5` with `chi = 1`.
pub fn classify(d: i64, pi: i64) -> ClassificationNode {
    let hk = hk_from_genus(d, pi);
    let n = adjoint_h0(1, pi) - 1;
    let hi = hodge_bound(d, hk).unwrap_or(0);
    // the adjoint image spans P^n, so its degree d + K^2 is at least n - 1
    let lo = n - 1 - d;
    let children = (lo..=hi)
        .map(|k2| surface(format!("K^2={k2}"), IntersectionData::rational_like(d, hk, k2), 5, &[]))
        .collect();
    let mut root = node(
        format!("d={d} pi={pi}"),
        IntersectionData::rational_like(d, hk, hi),
        5,
        Rule::Hodge,
        Verdict::Branch(children),
    );
    root.k2_range = Some((lo, hi));
    root
}

/// Node for a surface reached after the adjunction steps recorded in
/// `chain` (lines contracted at each step, outermost first).
fn surface(label: String, data: IntersectionData, ambient: i64, chain: &[i64]) -> ClassificationNode {
    let genus = data.sectional_genus();
    let level = chain.len();
    if let Some(entry) = lookup(data.h2, genus, data.k2) {
        let mut out = node(format!("{label} {}", entry.name), data, ambient, Rule::Lookup, Verdict::Branch(Vec::new()));
        if entry.enriques {
            out.verdict = if level == 0 { Verdict::Accepted("k2=0".into()) } else { rejected("not an adjunction image") };
            return out;
        }
        let mut leaves = Vec::new();
        for template in &entry.models {
            let mut e = 0;
            loop {
                let model = template.instance(e);
                let spec = lift(&model, chain);
                // H.C0 >= 1 bounds e on ruled models
                if !template.ambient_is_fixed() && spec.dot_c0().is_some_and(|v| v < 1) {
                    break;
                }
                leaves.push(model_leaf(&model, spec, data));
                if template.ambient_is_fixed() {
                    break;
                }
                e += 1;
            }
        }
        out.verdict = Verdict::Branch(leaves);
        return out;
    }
    if ambient == 3 {
        return node(label, data, ambient, Rule::NoBlowupModel, rejected("no smooth surface in P^3 with these invariants"));
    }
    let h = adjoint_h0(data.chi, genus);
    let next = adjunction_step(&data, 0);
    let sub = |k: i64| format!("K_{}^2={k}", level + 1);
    if h == 3 {
        // birational onto the plane: everything with K^2 < 9 is contracted
        let a = 9 - data.k2;
        let mut child = surface(format!("X_{} = P^2", level + 1), adjunction_step(&data, a), 2, &extend(chain, a));
        child.blown_down = Some(a);
        return node(label, data, ambient, Rule::AdjointPositivity, Verdict::Branch(alloc::vec![child]));
    }
    let lo = data.k2.max(-2 * next.hk - next.h2);
    let hi = match hodge_bound(next.h2, next.hk) {
        Ok(v) => v,
        Err(_) => return node(label, data, ambient, Rule::Hodge, rejected("adjoint image has no positive degree")),
    };
    let mut children = Vec::new();
    for k2 in lo..=hi {
        let a = k2 - data.k2;
        let child_data = adjunction_step(&data, a);
        let mut child = if h - 1 == 4 && double_point_residue(child_data.h2, child_data.hk, child_data.k2, child_data.chi) != 0
        {
            node(sub(k2), child_data, h - 1, Rule::DoublePoint, rejected(double_point_reason(&child_data)))
        } else {
            surface(sub(k2), child_data, h - 1, &extend(chain, a))
        };
        child.blown_down = Some(a);
        children.push(child);
    }
    let mut out = node(label, data, ambient, Rule::Hodge, Verdict::Branch(children));
    out.k2_range = Some((lo, hi));
    out
}

fn extend(chain: &[i64], a: i64) -> Vec<i64> {
    let mut v = chain.to_vec();
    v.push(a);
    v
}

/// `12 chi = c` has no solution with `chi = 1`; state it in lowest terms.
fn double_point_reason(d: &IntersectionData) -> String {
    let c = -double_point_residue(d.h2, d.hk, d.k2, 0);
    let g = gcd(12, c.abs()).max(1);
    format!("double point formula forces {}chi = {}", 12 / g, c / g)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Pulls a model of the last adjunction image back to the original surface:
/// `H_j = H_{j+1} - K_j`, with `K_j` on the blowup at all points contracted so far.
fn lift(model: &LinearSystemSpec, chain: &[i64]) -> LinearSystemSpec {
    let mut spec = model.clone();
    let mut points = spec.points();
    for &a in chain.iter().rev() {
        points += a as usize;
        spec = spec.add(&LinearSystemSpec::anticanonical(spec.ambient, points));
    }
    spec.multiplicities.sort_unstable_by(|x, y| y.cmp(x));
    spec
}

/// `F_0` and `F_1` blown up in points are blowups of `P^2`; this gives the
/// plane model of a class (with the first point on `F_0` playing the role of
/// the contracted line).
fn plane_model(spec: &LinearSystemSpec) -> Option<LinearSystemSpec> {
    let (a, b) = (spec.a, spec.b);
    let mut m = match spec.ambient {
        Ambient::Plane => return Some(spec.clone()),
        // C0 = E0, f = L - E0
        Ambient::Hirzebruch(1) => {
            let mut m = alloc::vec![b.checked_sub(a)?];
            m.extend_from_slice(&spec.multiplicities);
            LinearSystemSpec { ambient: Ambient::Plane, a: 0, b, multiplicities: m }
        }
        // C0 = L - E2, f = L - E1, E_p = L - E1 - E2
        Ambient::Hirzebruch(0) => {
            let (&m1, rest) = spec.multiplicities.split_first()?;
            let mut m = alloc::vec![b.checked_sub(m1)?, a.checked_sub(m1)?];
            m.extend_from_slice(rest);
            LinearSystemSpec { ambient: Ambient::Plane, a: 0, b: (a + b).checked_sub(m1)?, multiplicities: m }
        }
        Ambient::Hirzebruch(_) => return None,
    };
    m.multiplicities.retain(|&x| x > 0);
    m.multiplicities.sort_unstable_by(|x, y| y.cmp(x));
    Some(m)
}

fn model_leaf(model: &LinearSystemSpec, spec: LinearSystemSpec, data: IntersectionData) -> ClassificationNode {
    let label = format!("{model} => X = {spec}");
    let (rule, verdict) = judge(&spec);
    let mut leaf = node(label, data, 0, rule, verdict);
    leaf.model = Some(spec);
    leaf
}

fn judge(spec: &LinearSystemSpec) -> (Rule, Verdict) {
    if let Some(f) = family_of_spec(spec) {
        return if f.accepted {
            (Rule::Lookup, Verdict::Accepted(f.id))
        } else {
            let reason = "degree 10 in P^5 with h^0(I(2)) = 1".to_string();
            (Rule::QuadricCheck, Verdict::Rejected { reason, needs_computation: Some(f.id) })
        };
    }
    if let Some(f) = plane_model(spec).as_ref().and_then(family_of_spec) {
        return if f.accepted {
            (Rule::Lookup, Verdict::SameAs(f.id))
        } else {
            let reason = format!("same surface as {}, not ACM", f.id);
            (Rule::QuadricCheck, Verdict::Rejected { reason, needs_computation: Some(f.id) })
        };
    }
    (Rule::Lookup, rejected("H is not very ample"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::adjunction_step;
    use crate::surfacegen::{accepted_families, intersection_data, rejected_families};

    #[test]
    fn seven_accepted_leaves() {
        let tree = classify(10, 6);
        let mut got = tree.accepted();
        got.sort();
        let mut want: Vec<String> = accepted_families().into_iter().map(|f| f.id).collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn root_range() {
        let tree = classify(10, 6);
        assert_eq!(tree.k2_range, Some((-6, 0)));
        assert_eq!(tree.children().len(), 7);
    }

    #[test]
    fn quadric_checks_cover_rejected_families() {
        let tree = classify(10, 6);
        let mut got = tree.needs_computation();
        got.sort();
        got.dedup();
        let mut want: Vec<String> = rejected_families().into_iter().map(|f| f.id).collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn first_branch() {
        let tree = classify(10, 6);
        let k6 = &tree.children()[0];
        assert_eq!(k6.k2_range, Some((8, 9)));
        let k1: Vec<i64> = k6.children().iter().map(|c| c.data.k2).collect();
        assert_eq!(k1, [8, 9]);
    }

    #[test]
    fn double_point_kills_k2_minus_one_branch() {
        let tree = classify(10, 6);
        let k1 = &tree.children()[5];
        assert_eq!(k1.data.k2, -1);
        let zero = k1.children().iter().find(|c| c.data.k2 == 0).unwrap();
        let x2 = &zero.children()[0];
        assert_eq!(x2.rule, Rule::DoublePoint);
        assert_eq!(x2.verdict, rejected("double point formula forces 3chi = 4"));
    }

    #[test]
    fn adjunction_identities_on_every_edge() {
        let tree = classify(10, 6);
        for n in tree.walk() {
            for c in n.children() {
                if let Some(a) = c.blown_down {
                    let step = adjunction_step(&n.data, a);
                    assert_eq!(step.h2, n.data.h2 + 2 * n.data.hk + n.data.k2);
                    assert_eq!(step.hk, n.data.hk + n.data.k2);
                    assert_eq!(c.data.k2, n.data.k2 + a);
                    assert_eq!((c.data.h2, c.data.hk, c.data.chi), (step.h2, step.hk, n.data.chi));
                }
            }
        }
    }

    #[test]
    fn model_leaves_recover_the_original_surface() {
        let tree = classify(10, 6);
        for n in tree.walk() {
            if let Some(spec) = &n.model {
                let x = intersection_data(spec);
                assert_eq!((x.h2, x.hk), (10, 0), "{}", n.label);
            }
        }
    }

    #[test]
    fn golden_tree() {
        assert_eq!(classify(10, 6).render(), include_str!("../../tests/fixtures/classification.txt"));
    }

    #[test]
    fn plane_models_of_ruled_classes() {
        let f0: LinearSystemSpec = "f0(4,5;2^6,1^6)".parse().unwrap();
        assert_eq!(plane_model(&f0).unwrap().to_string(), "p2(7;3,2^6,1^6)");
        let f1: LinearSystemSpec = "f1(4,7;2^6,1^6)".parse().unwrap();
        assert_eq!(plane_model(&f1).unwrap().to_string(), "p2(7;3,2^6,1^6)");
        let q: LinearSystemSpec = "f0(5,5;2^10)".parse().unwrap();
        assert_eq!(plane_model(&q).unwrap().to_string(), "p2(8;3^2,2^9)");
    }
}
