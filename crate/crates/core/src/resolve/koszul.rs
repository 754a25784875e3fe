use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::HomogeneousIdeal;
use crate::linalg::{rank, ScalarMatrix};

use super::algebra::TruncatedModule;
use super::betti::BettiTable;

/// Subsets of `{0..n}` of size `i`, as bitmasks in increasing order.
fn subsets(n: usize, i: usize) -> Vec<u32> {
    (0u32..1 << n).filter(|s| s.count_ones() as usize == i).collect()
}

/// Koszul differential `Λ^i ⊗ M_a -> Λ^{i-1} ⊗ M_{a+1}`.
fn koszul_map(m: &TruncatedModule, i: usize, a: i32) -> ScalarMatrix {
    let n = m.ring().nvars();
    let field = m.ring().field();
    let src = subsets(n, i);
    let dst = subsets(n, i - 1);
    let (da, db) = (m.dim(a), m.dim(a + 1));
    let mut out = ScalarMatrix::zeros(field, dst.len() * db, src.len() * da);
    if da == 0 || db == 0 {
        return out;
    }
    for (si, &s) in src.iter().enumerate() {
        let mut pos = 0;
        for t in 0..n {
            if s & (1 << t) == 0 {
                continue;
            }
            let sign_neg = pos % 2 == 1;
            pos += 1;
            let ti = dst.binary_search(&(s & !(1 << t))).unwrap();
            let x = m.mult(t, a).expect("degree inside truncation");
            for r in 0..db {
                for c in 0..da {
                    let v = x.get(r, c);
                    if v != 0 {
                        let v = if sign_neg { field.neg(v) } else { v };
                        out.set(ti * db + r, si * da + c, v);
                    }
                }
            }
        }
    }
    out
}

/// Betti numbers of a truncated module from Koszul homology: rows `a` with
/// `min_degree <= a <= a_max`, homological positions `<= i_max`.
pub fn module_betti_via_koszul(m: &TruncatedModule, i_max: usize, a_max: i32) -> Result<BettiTable> {
    if a_max >= m.max_degree() {
        return Err(Error::IncreaseBounds(alloc::format!(
            "module known up to degree {}, need {}",
            m.max_degree(),
            a_max + 1
        )));
    }
    let n = m.ring().nvars();
    let mut table = BettiTable::new();
    for a in m.min_degree()..=a_max {
        for i in 0..=i_max.min(n) {
            let dim = crate::monomial::binomial(n as i64, i as i64) as usize * m.dim(a);
            if dim == 0 {
                continue;
            }
            let out_rank = if i > 0 { rank(&koszul_map(m, i, a)) } else { 0 };
            let in_rank = if i < n && a > m.min_degree() { rank(&koszul_map(m, i + 1, a - 1)) } else { 0 };
            table.add(i, a + i as i32, dim - out_rank - in_rank);
        }
    }
    Ok(table)
}

/// Betti numbers of `R/I` in rows `0..=j_max`, computed from the Koszul
/// complex on the truncated quotient. No Gröbner basis is involved.
pub fn betti_via_koszul(ideal: &HomogeneousIdeal, i_max: usize, j_max: u32) -> Result<BettiTable> {
    let m = TruncatedModule::from_ideal(ideal, j_max + 1);
    module_betti_via_koszul(&m, i_max, j_max as i32)
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
    fn zero_ideal() {
        let b = betti_via_koszul(&HomogeneousIdeal::zero(ring(3)), 3, 3).unwrap();
        assert_eq!(b, BettiTable::from_entries([(0, 0, 1)]));
    }

    #[test]
    fn regular_sequence_of_quadrics() {
        let r = ring(3);
        let q1 = parse_poly(r, "x0^2 + x1*x2").unwrap();
        let q2 = parse_poly(r, "x1^2 - 3*x0*x2").unwrap();
        let b = betti_via_koszul(&HomogeneousIdeal::new(r, alloc::vec![q1, q2]), 3, 3).unwrap();
        assert_eq!(b, BettiTable::from_entries([(0, 0, 1), (1, 2, 2), (2, 4, 1)]));
    }

    #[test]
    fn maximal_ideal_is_koszul() {
        let r = ring(4);
        let b = betti_via_koszul(&HomogeneousIdeal::maximal(r), 4, 2).unwrap();
        let expected = BettiTable::from_entries([(0, 0, 1), (1, 1, 4), (2, 2, 6), (3, 3, 4), (4, 4, 1)]);
        assert_eq!(b, expected);
    }

    #[test]
    fn module_row_bound_checked() {
        let m = TruncatedModule::from_ideal(&HomogeneousIdeal::zero(ring(2)), 2);
        assert!(module_betti_via_koszul(&m, 2, 2).is_err());
        assert!(module_betti_via_koszul(&m, 2, 1).is_ok());
    }
}
