use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

use super::spec::LinearSystemSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// Blowup of `P^2` or `F_e` embedded by a linear system.
    Rational(LinearSystemSpec),
    /// Enriques surface, built from its degree 9 projection in `P^4`.
    Enriques,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub id: String,
    pub k2: i64,
    pub kind: FamilyKind,
    /// Satisfies N_{3,3}; the others are expected to lie on a quadric.
    pub accepted: bool,
}

impl Family {
    pub fn spec(&self) -> Option<&LinearSystemSpec> {
        match &self.kind {
            FamilyKind::Rational(s) => Some(s),
            FamilyKind::Enriques => None,
        }
    }
}

fn accepted(k2: i64, spec: LinearSystemSpec) -> Family {
    Family { id: alloc::format!("k2={k2}"), k2, kind: FamilyKind::Rational(spec), accepted: true }
}

fn rejected(k2: i64, spec: LinearSystemSpec) -> Family {
    Family { id: spec.to_string(), k2, kind: FamilyKind::Rational(spec), accepted: false }
}

/// The seven families of degree 10 and sectional genus 6 with N_{3,3},
/// ordered by `K^2`.
pub fn accepted_families() -> Vec<Family> {
    let p = LinearSystemSpec::plane;
    let mut v = alloc::vec![
        accepted(-6, p(5, &[(1, 15)])),
        accepted(-5, p(6, &[(2, 4), (1, 10)])),
        accepted(-4, p(7, &[(3, 1), (2, 6), (1, 6)])),
        accepted(-3, p(7, &[(2, 9), (1, 3)])),
        accepted(-2, p(9, &[(3, 6), (2, 4), (1, 1)])),
        accepted(-1, p(10, &[(3, 10)])),
    ];
    v.push(Family { id: "k2=0".into(), k2: 0, kind: FamilyKind::Enriques, accepted: true });
    v
}

/// Degree 10, genus 6 rational surfaces that lie on a quadric.
pub fn rejected_families() -> Vec<Family> {
    let f = LinearSystemSpec::hirzebruch;
    alloc::vec![
        rejected(-6, f(0, 4, 3, &[(1, 14)])),
        rejected(-3, LinearSystemSpec::plane(9, &[(3, 7), (2, 1), (1, 4)])),
        rejected(-3, f(0, 4, 6, &[(2, 9), (1, 2)])),
        rejected(-3, f(1, 4, 8, &[(2, 9), (1, 2)])),
        rejected(-3, f(2, 4, 10, &[(2, 9), (1, 2)])),
        rejected(-2, LinearSystemSpec::plane(8, &[(3, 2), (2, 9)])),
    ]
}

pub fn all_families() -> Vec<Family> {
    let mut v = accepted_families();
    v.extend(rejected_families());
    v
}

/// Looks a family up by id (`k2=-6`, ..., `k2=0`, or a rejected spec such
/// as `f0(4,3;1^14)`).
pub fn family(id: &str) -> Result<Family> {
    let id = id.trim();
    all_families()
        .into_iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::Parse(alloc::format!("unknown family {id}")))
}

/// The family whose spec equals `spec`, if any.
pub fn family_of_spec(spec: &LinearSystemSpec) -> Option<Family> {
    all_families().into_iter().find(|f| f.spec() == Some(spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surfacegen::spec::blowup_invariants;

    #[test]
    fn catalog_invariants() {
        for f in all_families() {
            if let Some(s) = f.spec() {
                assert_eq!(blowup_invariants(s), (10, 6, f.k2), "{}", f.id);
                assert_eq!(s.expected_dimension(), 6, "{}", f.id);
            }
        }
        assert_eq!(accepted_families().len(), 7);
    }

    #[test]
    fn lookup_by_id() {
        assert_eq!(family("k2=-4").unwrap().k2, -4);
        assert_eq!(family("f0(4,3;1^14)").unwrap().k2, -6);
        assert!(family("bogus").is_err());
        assert_eq!(family("k2=0").unwrap().kind, FamilyKind::Enriques);
    }
}
