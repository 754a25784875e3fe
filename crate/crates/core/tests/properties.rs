use proptest::prelude::*;
use surfkit_core::classifier::{adjunction_step, classify, ClassificationNode, IntersectionData};
use surfkit_core::field::PrimeField;
use surfkit_core::groebner::HomogeneousIdeal;
use surfkit_core::linalg::{kernel_basis, rank, ScalarMatrix};
use surfkit_core::random::{form, rng_from_seed, vector};
use surfkit_core::surfacegen::{accepted_families, construct_family, random_points, rational_map, FamilyKind};
use surfkit_core::Ring;

const P: u64 = 31991;

fn field() -> PrimeField {
    PrimeField::default_field()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn field_axioms_against_integers(a in 0u32..31991, b in 0u32..31991, c in 0u32..31991) {
        let f = field();
        let (x, y, z) = (a as u64, b as u64, c as u64);
        prop_assert_eq!(f.add(a, b) as u64, (x + y) % P);
        prop_assert_eq!(f.mul(a, b) as u64, x * y % P);
        prop_assert_eq!(f.sub(a, b) as u64, (x + P - y) % P);
        prop_assert_eq!(f.mul(a, f.add(b, c)) as u64, x * ((y + z) % P) % P);
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        if a != 0 {
            let inv = f.inv(a).unwrap();
            prop_assert_eq!(x * inv as u64 % P, 1);
        } else {
            prop_assert!(f.inv(0).is_none());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rank_plus_nullity_is_width(rows in 1usize..14, cols in 1usize..14, k in 0usize..14, seed in any::<u64>()) {
        // a product of random rows x k and k x cols factors has rank <= k
        let f = field();
        let mut rng = rng_from_seed(seed);
        let a = ScalarMatrix::from_vec(f, rows, k, vector(&mut rng, f, rows * k));
        let b = ScalarMatrix::from_vec(f, k, cols, vector(&mut rng, f, k * cols));
        let m = if k == 0 { ScalarMatrix::zeros(f, rows, cols) } else { a.mul(&b) };
        let ker = kernel_basis(&m);
        let r = rank(&m);
        prop_assert_eq!(r + ker.len(), cols);
        prop_assert!(r <= k.min(rows).min(cols));
        prop_assert_eq!(r, rank(&m.transpose()));
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn normal_form_is_idempotent(seed in any::<u64>(), n in 2usize..5, gens in 1usize..4, d in 1u32..5) {
        let ring = Ring::new(n, field());
        let mut rng = rng_from_seed(seed);
        let g: Vec<_> = (0..gens).map(|i| form(&mut rng, ring, 1 + (i as u32 % 3))).collect();
        let ideal = HomogeneousIdeal::new(ring, g.clone());
        let gb = ideal.groebner();
        let h = form(&mut rng, ring, d);
        let r = gb.normal_form(&h);
        prop_assert_eq!(gb.normal_form(&r), r.clone());
        prop_assert!(gb.contains(&h.sub(&r)));
        for q in &g {
            prop_assert!(gb.normal_form(q).is_zero());
        }
    }

    #[test]
    fn adjunction_step_keeps_the_pullback_identities(h2 in 1i64..40, hk in -30i64..30, k2 in -12i64..10, a in 0i64..12) {
        // H' = H + K and K = K' + sum of a exceptional lines E with E.H' = 0
        let x = IntersectionData { chi_top: Some(12 - k2), ..IntersectionData::rational_like(h2, hk, k2) };
        let y = adjunction_step(&x, a);
        prop_assert_eq!(y.h2, h2 + 2 * hk + k2);
        prop_assert_eq!(y.hk, hk + k2);
        prop_assert_eq!(y.k2, k2 + a);
        prop_assert_eq!(y.chi, x.chi);
        prop_assert_eq!(12 * y.chi, y.k2 + y.chi_top.unwrap());
    }
}

#[test]
fn implicit_equations_vanish_on_fifty_points_per_family() {
    for fam in accepted_families() {
        let FamilyKind::Rational(spec) = &fam.kind else { continue };
        let model = construct_family(&fam, field(), 3).unwrap();
        let map = rational_map(spec, field(), model.used_seed).unwrap();
        for p in random_points(spec.ambient, field(), 50, 1234).points {
            let image = map.apply(p);
            assert!(image.iter().any(|&c| c != 0));
            assert!(model.ideal.generators().iter().all(|f| f.eval(&image) == 0), "{}", fam.id);
        }
    }
}

fn check_branches(node: &ClassificationNode) {
    let d = &node.data;
    assert_eq!((d.h2 + d.hk) % 2, 0, "{} has a non-integral genus", node.label);
    for child in node.children() {
        if let Some(a) = child.blown_down {
            let c = &child.data;
            assert_eq!(c.h2, d.h2 + 2 * d.hk + d.k2, "{}", child.label);
            assert_eq!(c.hk, d.hk + d.k2, "{}", child.label);
            assert_eq!(c.k2, d.k2 + a, "{}", child.label);
            assert_eq!(c.chi, d.chi, "{}", child.label);
            assert!(a >= 0);
        }
        check_branches(child);
    }
}

#[test]
fn adjunction_identities_hold_on_every_branch() {
    let tree = classify(10, 6);
    assert!(tree.walk().filter(|n| n.blown_down.is_some()).count() > 10);
    check_branches(&tree);
}
