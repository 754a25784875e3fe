use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

/// Graded Betti numbers `β_{i,j}`, keyed by homological index `i` and
/// internal degree `j`. Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), usize>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, i32, usize)>) -> Self {
        let mut t = Self::new();
        for (i, j, b) in entries {
            t.add(i, j, b);
        }
        t
    }

    /// Betti numbers of a complex given by the twists of its free modules.
    pub fn from_twists<'a>(twists: impl IntoIterator<Item = &'a [i32]>) -> Self {
        let mut t = Self::new();
        for (i, tw) in twists.into_iter().enumerate() {
            for &j in tw {
                t.add(i, j, 1);
            }
        }
        t
    }

    pub fn add(&mut self, i: usize, j: i32, b: usize) {
        if b > 0 {
            *self.entries.entry((i, j)).or_insert(0) += b;
        }
    }

    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i32, usize)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total rank of the `i`-th free module.
    pub fn total(&self, i: usize) -> usize {
        self.entries().filter(|e| e.0 == i).map(|e| e.2).sum()
    }

    /// Largest `i` with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// Restriction to homological indices `<= i_max`.
    pub fn truncate(&self, i_max: usize) -> BettiTable {
        BettiTable::from_entries(self.entries().filter(|e| e.0 <= i_max))
    }

    /// `Σ (-1)^i β_{i,j} t^j`, indexed from `t^0`. Negative degrees are not expected.
    pub fn alternating_numerator(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|k| k.1).max().unwrap_or(0).max(0) as usize;
        let mut out = alloc::vec![0i64; top + 1];
        for (i, j, b) in self.entries() {
            assert!(j >= 0, "negative internal degree in numerator");
            let s = if i % 2 == 0 { 1 } else { -1 };
            out[j as usize] += s * b as i64;
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }

    /// Laurent version of [`alternating_numerator`](Self::alternating_numerator): (lowest degree, coefficients).
    pub fn alternating_sum(&self) -> (i32, Vec<i64>) {
        let lo = self.entries.keys().map(|k| k.1).min().unwrap_or(0);
        let hi = self.entries.keys().map(|k| k.1).max().unwrap_or(0);
        let mut out = alloc::vec![0i64; (hi - lo + 1) as usize];
        for (i, j, b) in self.entries() {
            let s = if i % 2 == 0 { 1 } else { -1 };
            out[(j - lo) as usize] += s * b as i64;
        }
        (lo, out)
    }

    /// Aligned text in the row convention: row `j - i`, column `i`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{self}");
        s
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return writeln!(f, "(zero)");
        }
        let cols = self.projective_dimension().unwrap() + 1;
        let rows: Vec<i32> = {
            let lo = self.entries().map(|(i, j, _)| j - i as i32).min().unwrap();
            let hi = self.entries().map(|(i, j, _)| j - i as i32).max().unwrap();
            (lo..=hi).collect()
        };
        let width = (0..cols).map(|i| alloc::format!("{}", self.total(i)).len()).max().unwrap_or(1) + 1;
        write!(f, "{:>4}", "")?;
        for i in 0..cols {
            write!(f, "{i:>width$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>4}", "tot:")?;
        for i in 0..cols {
            write!(f, "{:>width$}", self.total(i))?;
        }
        writeln!(f)?;
        for r in rows {
            write!(f, "{:>4}", alloc::format!("{r}:"))?;
            for i in 0..cols {
                let b = self.get(i, r + i as i32);
                if b == 0 {
                    write!(f, "{:>width$}", ".")?;
                } else {
                    write!(f, "{b:>width$}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `N_{d,p}`: no entry with `1 <= i <= p` sits in a row `j - i >= d`.
pub fn check_property_n(b: &BettiTable, d: i32, p: usize) -> bool {
    b.entries().all(|(i, j, _)| i == 0 || i > p || j - (i as i32) < d)
}

/// Projective dimension equals the codimension.
pub fn is_acm(b: &BettiTable, codim: usize) -> bool {
    b.projective_dimension().unwrap_or(0) == codim
}

/// Largest row index `j - i` of the table.
pub fn regularity(b: &BettiTable) -> i32 {
    b.entries().map(|(i, j, _)| j - i as i32).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> BettiTable {
        BettiTable::from_entries([(0, 0, 1), (1, 3, 10), (2, 4, 15), (3, 5, 6)])
    }

    #[test]
    fn star_table_predicates() {
        let b = star();
        assert!(check_property_n(&b, 3, 3));
        assert!(is_acm(&b, 3));
        assert_eq!(regularity(&b), 2);
        assert_eq!(b.alternating_numerator(), alloc::vec![1, 0, 0, -10, 15, -6]);
    }

    #[test]
    fn quadric_regular_sequence() {
        let b = BettiTable::from_entries([(0, 0, 1), (1, 2, 2), (2, 4, 1)]);
        assert!(!check_property_n(&b, 2, 2));
        assert!(check_property_n(&b, 3, 2));
        // entry at i = 1 in row 3
        let bad = BettiTable::from_entries([(0, 0, 1), (1, 4, 1)]);
        assert!(!check_property_n(&bad, 3, 3));
    }

    #[test]
    fn polynomial_ring() {
        let b = BettiTable::from_entries([(0, 0, 1)]);
        assert_eq!(regularity(&b), 0);
        assert!(is_acm(&b, 0));
    }

    #[test]
    fn text_layout() {
        let text = star().to_text();
        let expected = "      0  1  2  3\ntot:  1 10 15  6\n  0:  1  .  .  .\n  1:  .  .  .  .\n  2:  . 10 15  6\n";
        assert_eq!(text, expected);
    }
}
