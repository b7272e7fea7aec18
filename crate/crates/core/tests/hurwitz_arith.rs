mod common;

use common::*;
use hurwitz_core::constructions::Recipe;
use hurwitz_core::hurwitz::{
    coefficient_set, geometric_inverse_jet, hpoly_mul, idempotent_jets, multiply, one_minus_rx, opoly_mul, pack_nested,
    HurwitzJet, HurwitzPoly, NestedPoly, OrdinaryPoly, Product,
};
use hurwitz_core::{Elem, Ring};
use proptest::prelude::*;

fn nth(ring: &Ring, i: u64) -> Elem {
    ring.element(i % ring.size().unwrap()).unwrap()
}

fn vector(ring: &Ring, idx: &[u64]) -> Vec<Elem> {
    idx.iter().map(|&i| nth(ring, i)).collect()
}

fn coeff(v: &[Elem], ring: &Ring, i: usize) -> Elem {
    v.get(i).cloned().unwrap_or_else(|| ring.zero())
}

/// The first four coefficients written out by hand with binomial weights.
fn expansion(ring: &Ring, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let t = |i: usize, j: usize, k: i64| ring.scale(k, &ring.mul(&a[i], &b[j]));
    let sum = |xs: Vec<Elem>| xs.iter().fold(ring.zero(), |acc, x| ring.add(&acc, x));
    vec![
        t(0, 0, 1),
        sum(vec![t(0, 1, 1), t(1, 0, 1)]),
        sum(vec![t(0, 2, 1), t(1, 1, 2), t(2, 0, 1)]),
        sum(vec![t(0, 3, 1), t(1, 2, 3), t(2, 1, 3), t(3, 0, 1)]),
    ]
}

proptest! {
    #[test]
    fn low_coefficients_match_the_expansion(a in prop::collection::vec(any::<u64>(), 4), b in prop::collection::vec(any::<u64>(), 4)) {
        for recipe in [zn(7), mat(zn(2), 2), comm(3, &[('x', 2), ('y', 2)])] {
            let ring = build(recipe);
            let (a, b) = (vector(&ring, &a), vector(&ring, &b));
            let c = multiply(&ring, Product::Hurwitz, &a, &b).unwrap();
            let want = expansion(&ring, &a, &b);
            for (n, w) in want.iter().enumerate() {
                prop_assert_eq!(coeff(&c, &ring, n), w.clone());
            }
        }
    }

    #[test]
    fn hurwitz_product_is_associative(a in prop::collection::vec(any::<u64>(), 0..4), b in prop::collection::vec(any::<u64>(), 0..4), c in prop::collection::vec(any::<u64>(), 0..4)) {
        for recipe in [zn(12), mat(zn(2), 2), triv(zn(3)), twist_gf4()] {
            let ring = build(recipe);
            let (a, b, c) = (vector(&ring, &a), vector(&ring, &b), vector(&ring, &c));
            let h = |x: &[Elem], y: &[Elem]| multiply(&ring, Product::Hurwitz, x, y).unwrap();
            prop_assert_eq!(h(&h(&a, &b), &c), h(&a, &h(&b, &c)));
        }
    }

    #[test]
    fn hurwitz_product_distributes(a in prop::collection::vec(any::<u64>(), 1..4), b in prop::collection::vec(any::<u64>(), 1..4), c in prop::collection::vec(any::<u64>(), 1..4)) {
        let ring = build(ut(zn(3), 2));
        let (a, b, c) = (vector(&ring, &a), vector(&ring, &b), vector(&ring, &c));
        let pa = HurwitzPoly::new(&ring, a).unwrap();
        let pb = HurwitzPoly::new(&ring, b).unwrap();
        let pc = HurwitzPoly::new(&ring, c).unwrap();
        let left = pa.mul(&pb.add(&pc).unwrap()).unwrap();
        let right = pa.mul(&pb).unwrap().add(&pa.mul(&pc).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn commutative_coefficients_give_a_commutative_product(a in prop::collection::vec(any::<u64>(), 0..5), b in prop::collection::vec(any::<u64>(), 0..5)) {
        let ring = build(comm(3, &[('x', 2), ('y', 2)]));
        let (a, b) = (vector(&ring, &a), vector(&ring, &b));
        prop_assert_eq!(
            multiply(&ring, Product::Hurwitz, &a, &b).unwrap(),
            multiply(&ring, Product::Hurwitz, &b, &a).unwrap()
        );
    }

    #[test]
    fn jets_truncate_exact_products(a in prop::collection::vec(any::<u64>(), 4), b in prop::collection::vec(any::<u64>(), 4), n in 0usize..6) {
        let ring = build(mat(zn(2), 2));
        let (a, b) = (vector(&ring, &a), vector(&ring, &b));
        let exact = multiply(&ring, Product::Hurwitz, &a, &b).unwrap();
        let cut = |v: &[Elem]| (0..=n).map(|i| coeff(v, &ring, i)).collect::<Vec<_>>();
        let jet = multiply(&ring, Product::Jet(n), &cut(&a), &cut(&b)).unwrap();
        prop_assert_eq!(jet, cut(&exact));
    }

    #[test]
    fn packing_preserves_coefficient_sets(f in prop::collection::vec(prop::collection::vec(any::<u64>(), 1..3), 1..4), g in prop::collection::vec(prop::collection::vec(any::<u64>(), 1..3), 1..4)) {
        let ring = build(zn(6));
        let nested = |v: &[Vec<u64>]| {
            NestedPoly::new(&ring, v.iter().map(|c| HurwitzPoly::new(&ring, vector(&ring, c)).unwrap()).collect()).unwrap()
        };
        let (nf, ng) = (nested(&f), nested(&g));
        let packed = pack_nested(&nf, &ng, 200).unwrap();
        let set = |ps: &[HurwitzPoly]| {
            let mut s: Vec<Elem> = ps.iter().flat_map(|p| p.coeffs().to_vec()).filter(|x| !ring.is_zero(x)).collect();
            s.sort();
            s.dedup();
            s
        };
        let mut packed_set = coefficient_set(&packed.f);
        packed_set.retain(|x| !ring.is_zero(x));
        packed_set.sort();
        prop_assert_eq!(packed_set, set(nf.coeffs()));
    }
}

#[test]
fn geometric_inverse_over_z5() {
    let ring = build(zn(5));
    let r = el(&ring, "2");
    let inv = geometric_inverse_jet(&ring, &r, 6);
    assert_eq!(inv.render(), "<1,2,3,3,4,0,0>");
    assert_eq!(one_minus_rx(&ring, &r, 6).mul(&inv).unwrap(), HurwitzJet::identity(&ring, 6));
}

#[test]
fn inverse_identity_holds_for_every_element() {
    for recipe in [zn(4), zn(5), gf4(), mat(zn(2), 2), triv(zn(3))] {
        let ring = build(recipe.clone());
        for r in ring.elements().unwrap() {
            let product = one_minus_rx(&ring, &r, 8).mul(&geometric_inverse_jet(&ring, &r, 8)).unwrap();
            assert_eq!(product, HurwitzJet::identity(&ring, 8), "{recipe}, r = {}", ring.render(&r));
        }
    }
}

#[test]
fn square_of_x_carries_the_binomial_weight() {
    let ring = build(zn(4));
    let x = HurwitzJet::parse(&ring, "<0,1,0>").unwrap();
    assert_eq!(x.mul(&x).unwrap().render(), "<0,0,2>");
    let jets = build(Recipe::HJet(b(zn(4)), 2));
    let x = el(&jets, "<0,1,0>");
    assert_eq!(jets.render(&jets.mul(&x, &x)), "<0,0,2>");
}

#[test]
fn ordinary_and_hurwitz_products_differ_by_weights() {
    let ring = build(Recipe::Z);
    let f = OrdinaryPoly::parse(&ring, "<1,1>").unwrap();
    assert_eq!(opoly_mul(&f, &f).unwrap().render(), "<1,2,1>");
    let h = HurwitzPoly::parse(&ring, "<1,1>").unwrap();
    assert_eq!(hpoly_mul(&h, &h).unwrap().render(), "<1,2,2>");
}

#[test]
fn x_is_nilpotent_in_positive_characteristic() {
    // x^p = p! x^p in hR, which vanishes in characteristic p.
    for p in [2u64, 3, 5] {
        let ring = build(gf(p));
        let x = vec![ring.zero(), ring.one()];
        let mut power = vec![ring.one()];
        for _ in 0..p {
            power = multiply(&ring, Product::Hurwitz, &power, &x).unwrap();
        }
        assert!(power.iter().all(|c| ring.is_zero(c)), "p = {p}");
    }
}

#[test]
fn example_pairs_multiply_to_zero() {
    let ring = build(example_ring(2));
    let f = els(&ring, &["a", "a*b"]);
    let g = els(&ring, &["c", "b*c"]);
    assert!(multiply(&ring, Product::Hurwitz, &f, &g).unwrap().is_empty());
    assert_eq!(ring.render(&ring.mul(&f[0], &g[1])), "1*a*b*c");
    let poly = HurwitzPoly::new(&ring, f).unwrap();
    assert_eq!(show(&ring, &coefficient_set(&poly)), ["1*a", "1*a*b"]);

    let ring = build(example_ring(3));
    let f = els(&ring, &["a", "-a*b"]);
    let g = els(&ring, &["c", "b*c", "2*b*b*c"]);
    assert!(multiply(&ring, Product::Hurwitz, &f, &g).unwrap().is_empty());
}

#[test]
fn commutative_monomial_pair_is_zero_under_both_products() {
    // The T^2 coefficient of the Hurwitz product is -2y^2, and y^2 = 0 here.
    let ring = build(comm(3, &[('x', 2), ('y', 2)]));
    let f = els(&ring, &["x", "y"]);
    let g = els(&ring, &["x", "-y"]);
    assert!(multiply(&ring, Product::Ordinary, &f, &g).unwrap().is_empty());
    assert!(multiply(&ring, Product::Hurwitz, &f, &g).unwrap().is_empty());
    assert_eq!(multiply(&ring, Product::Jet(2), &f, &g).unwrap().len(), 3);
}

#[test]
fn idempotent_jets_of_z4_are_constant() {
    let ring = build(zn(4));
    let jets: Vec<String> = idempotent_jets(&ring, 4).unwrap().iter().map(|j| j.render()).collect();
    assert_eq!(jets, ["<0,0,0,0,0>", "<1,0,0,0,0>"]);
}

#[test]
fn idempotent_jets_of_abelian_rings_are_constant() {
    for recipe in [zn(6), zn(8), triv(zn(3))] {
        let ring = build(recipe.clone());
        assert!(idempotent_jets(&ring, 4).unwrap().iter().all(|j| j.is_constant()), "{recipe}");
    }
}

#[test]
fn upper_triangular_ring_has_a_non_constant_idempotent_jet() {
    let ring = build(ut(zn(2), 2));
    let jets: Vec<String> = idempotent_jets(&ring, 1).unwrap().iter().map(|j| j.render()).collect();
    assert!(jets.contains(&"<[[1,0],[0,0]],[[0,1],[0,0]]>".to_string()), "{jets:?}");
    let e = HurwitzJet::parse(&ring, "<[[1,0],[0,0]],[[0,1],[0,0]]>").unwrap();
    assert_eq!(e.mul(&e).unwrap(), e);
}

#[test]
fn constant_nested_polynomials_pack_to_adjacent_positions() {
    let ring = build(zn(6));
    let c = |s: &str| HurwitzPoly::parse(&ring, s).unwrap();
    let f = NestedPoly::new(&ring, vec![c("<2>"), c("<3>")]).unwrap();
    let g = NestedPoly::new(&ring, vec![c("<1>"), c("<5>")]).unwrap();
    let packed = pack_nested(&f, &g, 10).unwrap();
    assert_eq!(packed.schedule, vec![1, 1]);
    assert_eq!(packed.f.render(), "<2,3>");
    assert_eq!(packed.g.render(), "<1,5>");
}

#[test]
fn packing_reports_schedule_overflow() {
    let ring = build(zn(6));
    let c = |s: &str| HurwitzPoly::parse(&ring, s).unwrap();
    let f = NestedPoly::new(&ring, vec![c("<1,1,1>"), c("<1,1,1>"), c("<1>")]).unwrap();
    assert!(pack_nested(&f, &f, 4).is_err());
}

#[test]
fn mismatched_rings_are_rejected() {
    let a = build(zn(4));
    let b4 = build(zn(4));
    let f = HurwitzPoly::new(&a, vec![a.one()]).unwrap();
    let g = HurwitzPoly::new(&b4, vec![b4.one()]).unwrap();
    assert!(f.mul(&g).is_err());
    let j = HurwitzJet::identity(&a, 2);
    assert!(j.mul(&HurwitzJet::identity(&a, 3)).is_err());
}
