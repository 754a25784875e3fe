use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{kernel_basis, ScalarMatrix};
use crate::poly::{HomogPoly, Ring};
use crate::random::{vector, Rng};
use crate::resolve::{GradedModulePresentation, TruncatedModule};

/// `h^0` of the module presented by `p` in degree 0; for a presentation of
/// `omega_X(1)` this is the number of adjoint forms.
pub fn adjoint_sections(p: &GradedModulePresentation) -> Result<usize> {
    if p.generator_degrees().iter().all(|&d| d > 0) {
        return Ok(0);
    }
    Ok(TruncatedModule::from_presentation(&p.presentation, 0)?.dim(0))
}

/// Image of a point under the map given by the degree-0 generators of a
/// line bundle presented by `p` (all generators in degree 0): the left
/// kernel of the evaluated presentation matrix.
pub fn adjoint_point(p: &GradedModulePresentation, point: &[u32]) -> Option<Vec<u32>> {
    let m = &p.presentation;
    let field = m.ring().field();
    let mut at = ScalarMatrix::zeros(field, m.ncols(), m.nrows());
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            at.set(c, r, m.get(r, c).eval(point));
        }
    }
    let mut k = kernel_basis(&at);
    if k.len() != 1 {
        return None;
    }
    k.pop()
}

/// Polynomials over `F_p` in one variable, lowest degree first.
fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn rem(field: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut a = a.to_vec();
    let lead_inv = field.inv(*b.last().unwrap()).unwrap();
    while a.len() >= b.len() {
        let q = field.mul(*a.last().unwrap(), lead_inv);
        let shift = a.len() - b.len();
        for (i, &c) in b.iter().enumerate() {
            a[shift + i] = field.sub(a[shift + i], field.mul(q, c));
        }
        a = trim(a);
    }
    a
}

fn gcd(field: PrimeField, a: Vec<u32>, b: Vec<u32>) -> Vec<u32> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = rem(field, &a, &b);
        a = b;
        b = r;
    }
    a
}

fn eval_univariate(field: PrimeField, f: &[u32], t: u32) -> u32 {
    f.iter().rev().fold(0, |acc, &c| field.add(field.mul(acc, t), c))
}

/// Roots in `F_p` of a nonzero polynomial.
fn roots(field: PrimeField, g: &[u32]) -> Vec<u32> {
    match g.len() {
        0 | 1 => Vec::new(),
        2 => alloc::vec![field.neg(field.mul(g[0], field.inv(g[1]).unwrap()))],
        _ => (0..field.modulus()).filter(|&t| eval_univariate(field, g, t) == 0).collect(),
    }
}

/// Restriction of `f` to the plane `a + s b + t c`, as a table
/// `coef[j][k]` of `s^j t^k`.
fn restrict(f: &HomogPoly, plane: &[Vec<u32>; 3]) -> Vec<Vec<u32>> {
    let field = f.ring().field();
    let r3 = Ring::new(3, field);
    let images: Vec<HomogPoly> = (0..f.ring().nvars())
        .map(|i| {
            (0..3).fold(HomogPoly::zero(r3), |acc, k| acc.add(&HomogPoly::var(r3, k).scale(plane[k][i])))
        })
        .collect();
    let g = f.substitute(&images);
    let d = f.degree().unwrap_or(0) as usize;
    let mut coef = alloc::vec![alloc::vec![0u32; d + 1]; d + 1];
    for &(m, c) in g.terms() {
        coef[m.exponent(1) as usize][m.exponent(2) as usize] = c;
    }
    coef
}

fn at_s(field: PrimeField, coef: &[Vec<u32>], s: u32) -> Vec<u32> {
    let d = coef.len();
    (0..d)
        .map(|k| (0..d).rev().fold(0, |acc, j| field.add(field.mul(acc, s), coef[j][k])))
        .collect()
}

/// `count` rational points on the scheme cut out by `gens`, found on
/// random planes where two random members of the ideal meet.
pub fn rational_points(gens: &[HomogPoly], count: usize, rng: &mut Rng, max_planes: usize) -> Result<Vec<Vec<u32>>> {
    let ring = gens[0].ring();
    let field = ring.field();
    let n = ring.nvars();
    let mut out: Vec<Vec<u32>> = Vec::new();
    for _ in 0..max_planes {
        let plane = [vector(rng, field, n), vector(rng, field, n), vector(rng, field, n)];
        let f = crate::random::combination(rng, gens);
        let g = crate::random::combination(rng, gens);
        let (cf, cg) = (restrict(&f, &plane), restrict(&g, &plane));
        for s in 0..field.modulus() {
            let h = gcd(field, at_s(field, &cf, s), at_s(field, &cg, s));
            for t in roots(field, &h) {
                let p: Vec<u32> =
                    (0..n).map(|i| field.add(plane[0][i], field.add(field.mul(s, plane[1][i]), field.mul(t, plane[2][i])))).collect();
                if p.iter().all(|&x| x == 0) || gens.iter().any(|q| q.eval(&p) != 0) {
                    continue;
                }
                out.push(p);
                if out.len() == count {
                    return Ok(out);
                }
            }
        }
    }
    Err(Error::NotGeneric(alloc::format!("found only {} of {count} rational points", out.len())))
}
