//! Integer invariants of smooth surfaces and the adjunction-theoretic case
//! tree for surfaces of degree 10 and sectional genus 6 in `P^5`.

mod lookup;
mod tree;

pub use lookup::{lookup, LookupEntry, ModelTemplate};
pub use tree::{classify, ClassificationNode, Rule, Verdict};

use crate::error::{Error, Result};
use crate::groebner::poly_binomial;

/// Numerical data of a smooth surface: `H^2`, `H.K`, `K^2`, `chi(O)`,
/// topological Euler number, irregularity and geometric genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntersectionData {
    pub h2: i64,
    pub hk: i64,
    pub k2: i64,
    pub chi: i64,
    pub chi_top: Option<i64>,
    pub q: i64,
    pub p_g: i64,
}

impl IntersectionData {
    /// Regular surface with `chi = 1` (`q = p_g = 0`).
    pub fn rational_like(h2: i64, hk: i64, k2: i64) -> Self {
        IntersectionData { h2, hk, k2, chi: 1, chi_top: None, q: 0, p_g: 0 }
    }

    pub fn degree(&self) -> i64 {
        self.h2
    }

    pub fn sectional_genus(&self) -> i64 {
        (self.h2 + self.hk) / 2 + 1
    }

    /// `c_2` of the normal bundle in a cubic fourfold, `6H^2 + 3HK + K^2 - chi_top`;
    /// Noether's formula supplies `chi_top` when it is not recorded.
    pub fn normal_self_intersection(&self) -> i64 {
        let chi_top = self.chi_top.unwrap_or(12 * self.chi - self.k2);
        6 * self.h2 + 3 * self.hk + self.k2 - chi_top
    }
}

/// `chi(I_X(m))` for a surface `X` in `P^5`.
pub fn chi_ideal_twist(d: i64, pi: i64, q: i64, p_g: i64, m: i64) -> i64 {
    poly_binomial(m + 5, 5) - m * (m + 1) / 2 * d + m * (pi - 1) - 1 + q - p_g
}

pub fn hk_from_genus(d: i64, pi: i64) -> i64 {
    2 * pi - 2 - d
}

/// Largest `K^2` allowed by the Hodge index theorem, `floor((HK)^2 / H^2)`.
pub fn hodge_bound(h2: i64, hk: i64) -> Result<i64> {
    if h2 <= 0 {
        return Err(Error::OutOfRange(alloc::format!("H^2 = {h2} must be positive")));
    }
    Ok((hk * hk).div_euclid(h2))
}

/// Data of the adjunction image after contracting `a` exceptional lines.
pub fn adjunction_step(data: &IntersectionData, a: i64) -> IntersectionData {
    IntersectionData {
        h2: data.h2 + 2 * data.hk + data.k2,
        hk: data.hk + data.k2,
        k2: data.k2 + a,
        chi: data.chi,
        chi_top: data.chi_top.map(|c| c - a),
        q: data.q,
        p_g: data.p_g,
    }
}

/// `h^0(O(H + K))` when the adjoint system is non-special.
pub fn adjoint_h0(chi: i64, pi: i64) -> i64 {
    chi + pi - 1
}

/// Left side of the double point formula for a smooth surface in `P^4`.
pub fn double_point_residue(d: i64, hk: i64, k2: i64, chi: i64) -> i64 {
    d * d - 10 * d - 5 * hk - 2 * k2 + 12 * chi
}

pub fn chi_top_blowup(base: i64, points: i64) -> i64 {
    base + points
}

/// Degree 10 surface in a cubic fourfold: `X^2` and the discriminant of the
/// lattice spanned by `h^2` and `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiscriminantRecord {
    pub t: i64,
    pub x2: i64,
    pub delta: i64,
}

pub fn discriminant_invariants(t: i64) -> Result<DiscriminantRecord> {
    if !(-6..=0).contains(&t) {
        return Err(Error::OutOfRange(alloc::format!("K^2 = {t} outside [-6, 0]")));
    }
    // H^2 = 10, HK = 0, chi = 1
    let x2 = IntersectionData::rational_like(10, 0, t).normal_self_intersection();
    Ok(DiscriminantRecord { t, x2, delta: 3 * x2 - 100 })
}

pub fn expected_normal_sections(t: i64) -> i64 {
    -2 * t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn riemann_roch_twists() {
        assert_eq!(chi_ideal_twist(10, 6, 0, 0, 3), 10);
        assert_eq!(chi_ideal_twist(10, 6, 0, 0, 2), 0);
        assert_eq!(chi_ideal_twist(7, 2, 0, 0, 0), 0);
        assert_eq!(chi_ideal_twist(10, 6, 0, 0, 1), 0);
    }

    #[test]
    fn genus_and_hodge() {
        assert_eq!(hk_from_genus(10, 6), 0);
        assert_eq!(hk_from_genus(9, 6), 1);
        // the plane itself
        assert_eq!(hk_from_genus(1, 0), -3);
        assert_eq!(hodge_bound(10, 0), Ok(0));
        assert_eq!(hodge_bound(4, -6), Ok(9));
        assert_eq!(hodge_bound(1, 0), Ok(0));
        assert!(hodge_bound(0, 1).is_err());
    }

    #[test]
    fn adjunction_examples() {
        let x = IntersectionData::rational_like(10, 0, -6);
        let x1 = adjunction_step(&x, 15);
        assert_eq!((x1.h2, x1.hk, x1.k2), (4, -6, 9));
        let y = adjunction_step(&IntersectionData::rational_like(10, 0, -5), 10);
        assert_eq!((y.h2, y.hk, y.k2), (5, -5, 5));
        assert_eq!(adjunction_step(&x, 0).k2, -6);
    }

    #[test]
    fn adjoint_and_double_point() {
        assert_eq!(adjoint_h0(1, 6), 6);
        assert_eq!(adjoint_h0(1, 3), 3);
        assert_eq!(adjoint_h0(1, 1), 1);
        assert_eq!(double_point_residue(6, -2, -1, 1), 0);
        assert_eq!(double_point_residue(0, 0, 0, 0), 0);
        // residue -16 + 12 chi never vanishes
        for chi in -5..5 {
            assert_eq!(double_point_residue(7, -1, 0, chi), -16 + 12 * chi);
            assert_ne!(double_point_residue(7, -1, 0, chi), 0);
        }
    }

    #[test]
    fn discriminants() {
        let deltas: alloc::vec::Vec<i64> = (-6..=0).map(|t| discriminant_invariants(t).unwrap().delta).collect();
        assert_eq!(deltas, [8, 14, 20, 26, 32, 38, 44]);
        assert_eq!(discriminant_invariants(-6).unwrap().x2, 36);
        assert_eq!(discriminant_invariants(0).unwrap().x2, 48);
        assert_eq!(discriminant_invariants(-3).unwrap(), DiscriminantRecord { t: -3, x2: 42, delta: 26 });
        assert!(discriminant_invariants(1).is_err());
        for t in -6..=0 {
            let r = discriminant_invariants(t).unwrap();
            assert_eq!(r.delta.rem_euclid(6), 2);
            assert!(6 < r.delta && r.delta <= 44);
        }
    }

    #[test]
    fn normal_sections_and_chi_top() {
        assert_eq!(expected_normal_sections(-6), 12);
        assert_eq!(expected_normal_sections(0), 0);
        assert_eq!(expected_normal_sections(-1), 2);
        assert_eq!(chi_top_blowup(3, 15), 18);
        assert_eq!(chi_top_blowup(3, 14), 17);
        assert_eq!(chi_top_blowup(7, 0), 7);
    }
}
