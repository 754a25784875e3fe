//! Smooth surfaces of small degree by `(degree, sectional genus, K^2)`,
//! after the classifications of Ionescu and Livorni.

use alloc::vec::Vec;

use crate::surfacegen::{Ambient, LinearSystemSpec};

/// A birational model, possibly depending on the Hirzebruch invariant `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelTemplate {
    Fixed(LinearSystemSpec),
    /// `a C_0 + (b + e) f - sum E_i` on `F_e`, for every admissible `e`.
    Ruled { a: u32, b: u32, points: usize },
}

impl ModelTemplate {
    pub fn instance(&self, e: u32) -> LinearSystemSpec {
        match self {
            ModelTemplate::Fixed(s) => s.clone(),
            ModelTemplate::Ruled { a, b, points } => LinearSystemSpec::hirzebruch(e, *a, b + e, &[(1, *points)]),
        }
    }

    pub fn ambient_is_fixed(&self) -> bool {
        matches!(self, ModelTemplate::Fixed(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LookupEntry {
    pub name: &'static str,
    /// Empty for the Enriques surface, which is not rational.
    pub models: Vec<ModelTemplate>,
    pub enriques: bool,
}

pub fn lookup(degree: i64, genus: i64, k2: i64) -> Option<LookupEntry> {
    let p = |b0, m: &[(u32, usize)]| ModelTemplate::Fixed(LinearSystemSpec::plane(b0, m));
    let entry = |name, models| Some(LookupEntry { name, models, enriques: false });
    match (degree, genus, k2) {
        (1, 0, 9) => entry("plane", alloc::vec![p(1, &[])]),
        (2, 0, 8) => entry(
            "smooth quadric",
            alloc::vec![ModelTemplate::Fixed(LinearSystemSpec {
                ambient: Ambient::Hirzebruch(0),
                a: 1,
                b: 1,
                multiplicities: Vec::new()
            })],
        ),
        (2, 0, 7) => entry("plane blown up in 2 points onto a quadric", alloc::vec![p(2, &[(1, 2)])]),
        (3, 1, 3) => entry("cubic surface", alloc::vec![p(3, &[(1, 6)])]),
        (4, 0, 9) => entry("Veronese surface", alloc::vec![p(2, &[])]),
        (4, 0, 8) => entry(
            "quartic scroll",
            alloc::vec![ModelTemplate::Fixed(LinearSystemSpec::hirzebruch(0, 2, 1, &[]))],
        ),
        (5, 1, 5) => entry("del Pezzo surface", alloc::vec![p(3, &[(1, 4)])]),
        (6, 2, 2) => entry(
            "conic bundle with 6 singular fibres",
            alloc::vec![p(4, &[(2, 1), (1, 6)]), ModelTemplate::Ruled { a: 2, b: 3, points: 6 }],
        ),
        (7, 3, 1) => entry("plane model with 7 double points", alloc::vec![p(6, &[(2, 7), (1, 1)])]),
        (7, 3, -1) => entry("conic bundle with 9 singular fibres", alloc::vec![ModelTemplate::Ruled { a: 2, b: 4, points: 9 }]),
        (10, 6, 0) => Some(LookupEntry { name: "Enriques surface", models: Vec::new(), enriques: true }),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surfacegen::blowup_invariants;

    #[test]
    fn models_match_their_keys() {
        let keys = [(1, 0, 9), (2, 0, 8), (2, 0, 7), (3, 1, 3), (4, 0, 9), (4, 0, 8), (5, 1, 5), (6, 2, 2), (7, 3, 1), (7, 3, -1)];
        for (d, g, k2) in keys {
            let entry = lookup(d, g, k2).unwrap();
            for m in &entry.models {
                for e in 0..3 {
                    assert_eq!(blowup_invariants(&m.instance(e)), (d, g, k2), "{}", entry.name);
                }
            }
        }
        assert!(lookup(4, 2, 0).is_none());
        assert!(lookup(10, 6, 0).unwrap().enriques);
    }
}
