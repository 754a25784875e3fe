use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::classifier::{chi_top_blowup, IntersectionData};
use crate::error::{Error, Result};

/// Source surface of a linear system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    Plane,
    /// Hirzebruch surface `F_e`.
    Hirzebruch(u32),
}

impl Ambient {
    /// Canonical class degree data: `K^2` of the minimal model.
    fn k2(self) -> i64 {
        match self {
            Ambient::Plane => 9,
            Ambient::Hirzebruch(_) => 8,
        }
    }

    fn chi_top(self) -> i64 {
        match self {
            Ambient::Plane => 3,
            Ambient::Hirzebruch(_) => 4,
        }
    }
}

/// A divisor class on a blowup of `P^2` (`b0 L - sum b_i E_i`) or of `F_e`
/// (`a C_0 + b f - sum m_i E_i`), with one multiplicity per base point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearSystemSpec {
    pub ambient: Ambient,
    /// Coefficient of `C_0`; unused (0) on the plane.
    pub a: u32,
    /// `b0` on the plane, the fibre coefficient on `F_e`.
    pub b: u32,
    pub multiplicities: Vec<u32>,
}

impl LinearSystemSpec {
    pub fn plane(b0: u32, multiplicities: &[(u32, usize)]) -> Self {
        LinearSystemSpec { ambient: Ambient::Plane, a: 0, b: b0, multiplicities: expand(multiplicities) }
    }

    pub fn hirzebruch(e: u32, a: u32, b: u32, multiplicities: &[(u32, usize)]) -> Self {
        LinearSystemSpec { ambient: Ambient::Hirzebruch(e), a, b, multiplicities: expand(multiplicities) }
    }

    pub fn points(&self) -> usize {
        self.multiplicities.len()
    }

    /// `(H^2, H.K)`.
    pub fn intersections(&self) -> (i64, i64) {
        let (a, b) = (self.a as i64, self.b as i64);
        let sq: i64 = self.multiplicities.iter().map(|&m| (m as i64) * (m as i64)).sum();
        let lin: i64 = self.multiplicities.iter().map(|&m| m as i64).sum();
        match self.ambient {
            Ambient::Plane => (b * b - sq, -3 * b + lin),
            Ambient::Hirzebruch(e) => {
                let e = e as i64;
                // C0^2 = -e, C0.f = 1, f^2 = 0, K = -2 C0 - (e + 2) f
                (-e * a * a + 2 * a * b - sq, e * a - 2 * a - 2 * b + lin)
            }
        }
    }

    /// Sections of the class before imposing the points.
    pub fn ambient_sections(&self) -> i64 {
        match self.ambient {
            Ambient::Plane => {
                let b = self.b as i64;
                (b + 1) * (b + 2) / 2
            }
            Ambient::Hirzebruch(e) => (0..=self.a as i64).map(|k| (self.b as i64 - k * e as i64 + 1).max(0)).sum(),
        }
    }

    /// Ambient sections minus `m(m+1)/2` conditions per point of multiplicity `m`.
    pub fn expected_dimension(&self) -> i64 {
        let conditions: i64 = self.multiplicities.iter().map(|&m| (m as i64) * (m as i64 + 1) / 2).sum();
        self.ambient_sections() - conditions
    }

    /// `H . C_0` on `F_e`; `None` on the plane.
    pub fn dot_c0(&self) -> Option<i64> {
        match self.ambient {
            Ambient::Plane => None,
            Ambient::Hirzebruch(e) => Some(self.b as i64 - e as i64 * self.a as i64),
        }
    }

    /// Anticanonical class on the same blowup.
    pub fn anticanonical(ambient: Ambient, points: usize) -> Self {
        let (a, b) = match ambient {
            Ambient::Plane => (0, 3),
            Ambient::Hirzebruch(e) => (2, e + 2),
        };
        LinearSystemSpec { ambient, a, b, multiplicities: alloc::vec![1; points] }
    }

    /// Class sum on a common blowup; the shorter multiplicity list is padded
    /// with zeros (points not yet blown up).
    pub fn add(&self, other: &LinearSystemSpec) -> LinearSystemSpec {
        assert_eq!(self.ambient, other.ambient);
        let n = self.points().max(other.points());
        let m = (0..n)
            .map(|i| self.multiplicities.get(i).copied().unwrap_or(0) + other.multiplicities.get(i).copied().unwrap_or(0))
            .collect();
        LinearSystemSpec { ambient: self.ambient, a: self.a + other.a, b: self.b + other.b, multiplicities: m }
    }
}

fn expand(groups: &[(u32, usize)]) -> Vec<u32> {
    groups.iter().flat_map(|&(m, n)| core::iter::repeat_n(m, n)).collect()
}

/// `(d, pi, K^2)` of the blowup embedded by the spec.
pub fn blowup_invariants(spec: &LinearSystemSpec) -> (i64, i64, i64) {
    let (h2, hk) = spec.intersections();
    let pi = (h2 + hk) / 2 + 1;
    (h2, pi, spec.ambient.k2() - spec.points() as i64)
}

/// Full numerical data of a rational surface given by the spec.
pub fn intersection_data(spec: &LinearSystemSpec) -> IntersectionData {
    let (h2, hk) = spec.intersections();
    let (_, _, k2) = blowup_invariants(spec);
    IntersectionData {
        h2,
        hk,
        k2,
        chi: 1,
        chi_top: Some(chi_top_blowup(spec.ambient.chi_top(), spec.points() as i64)),
        q: 0,
        p_g: 0,
    }
}

impl fmt::Display for LinearSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ambient {
            Ambient::Plane => write!(f, "p2({};", self.b)?,
            Ambient::Hirzebruch(e) => write!(f, "f{e}({},{};", self.a, self.b)?,
        }
        let mut first = true;
        let mut i = 0;
        while i < self.multiplicities.len() {
            let m = self.multiplicities[i];
            let run = self.multiplicities[i..].iter().take_while(|&&x| x == m).count();
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if run == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{m}^{run}")?;
            }
            i += run;
        }
        f.write_str(")")
    }
}

impl core::str::FromStr for LinearSystemSpec {
    type Err = Error;

    /// Parses the display form, e.g. `p2(7;3,2^6,1^6)` or `f1(4,8;2^9,1^2)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let s = s.trim();
        let open = s.find('(').ok_or_else(bad)?;
        let body = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let (head, tail) = body.split_once(';').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        let mut mults = Vec::new();
        for part in tail.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part.split_once('^') {
                Some((m, n)) => mults.push((num(m)?, num(n)? as usize)),
                None => mults.push((num(part)?, 1)),
            }
        }
        let prefix = &s[..open];
        if prefix == "p2" {
            return Ok(LinearSystemSpec::plane(num(head)?, &mults));
        }
        let e = prefix.strip_prefix('f').ok_or_else(bad).and_then(num)?;
        let (a, b) = head.split_once(',').ok_or_else(bad)?;
        Ok(LinearSystemSpec::hirzebruch(e, num(a)?, num(b)?, &mults))
    }
}

impl LinearSystemSpec {
    pub fn id(&self) -> String {
        self.to_string()
    }
}
