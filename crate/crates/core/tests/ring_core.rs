mod common;

use common::*;
use hurwitz_core::constructions::{crt_decompose, crt_split, make_corner, Recipe};
use hurwitz_core::ring::{
    ideal_closure, ideal_power_is_zero, idempotents, lower_nilradical, nilpotents, radicals, right_annihilator,
    ring_axioms,
};
use hurwitz_core::Status;

#[test]
fn every_catalog_ring_satisfies_the_axioms() {
    for recipe in finite_catalog() {
        let ring = build(recipe.clone());
        let v = ring_axioms(&ring, 2_000_000, 7).unwrap();
        assert_eq!(v.status, Status::Holds, "{recipe}: {:?}", v.witness.map(|w| w.fields()));
    }
}

#[test]
fn infinite_rings_pass_sampled_axioms() {
    for recipe in [Recipe::Z, triv(Recipe::Z), Recipe::Prod(vec![Recipe::Z, Recipe::Z]), example_ring(2)] {
        let ring = build(recipe.clone());
        let v = ring_axioms(&ring, 3000, 1).unwrap();
        assert_eq!(v.status, Status::Holds, "{recipe}");
    }
}

#[test]
fn enumeration_lists_size_distinct_elements() {
    for recipe in finite_catalog() {
        let ring = build(recipe.clone());
        let n = ring.size().unwrap();
        let mut xs: Vec<_> = ring.elements().unwrap().collect();
        assert_eq!(xs.len() as u64, n, "{recipe}");
        assert!(xs.contains(&ring.zero()) && xs.contains(&ring.one()), "{recipe}");
        xs.sort();
        xs.dedup();
        assert_eq!(xs.len() as u64, n, "{recipe}: duplicates");
        for (i, x) in ring.elements().unwrap().enumerate() {
            assert_eq!(ring.index_of(&x).unwrap(), i as u64);
        }
    }
}

#[test]
fn canonical_strings_round_trip() {
    for recipe in finite_catalog() {
        let ring = build(recipe.clone());
        for x in ring.elements().unwrap().take(300) {
            let s = ring.render(&x);
            assert_eq!(ring.parse(&s).unwrap(), x, "{recipe}: {s}");
        }
    }
}

#[test]
fn characteristic_is_the_additive_order_of_one() {
    for recipe in finite_catalog() {
        let ring = build(recipe.clone());
        let c = ring.characteristic();
        assert!(c > 0, "{recipe}");
        assert!(ring.is_zero(&ring.scale(c as i64, &ring.one())), "{recipe}");
        for m in 1..c {
            assert!(!ring.is_zero(&ring.scale(m as i64, &ring.one())), "{recipe}: {m}");
        }
    }
    assert_eq!(build(Recipe::Z).characteristic(), 0);
}

#[test]
fn scaling_by_negative_integers_negates() {
    let ring = build(mat(zn(4), 2));
    for x in ring.elements().unwrap().step_by(7) {
        for k in 0..6i64 {
            assert_eq!(ring.scale(-k, &x), ring.neg(&ring.scale(k, &x)));
        }
    }
}

#[test]
fn annihilator_of_two_in_z6() {
    let ring = build(zn(6));
    let r = right_annihilator(&ring, &[el(&ring, "2")]).unwrap();
    assert_eq!(show(&ring, &r), ["0", "3"]);
}

#[test]
fn nilpotents_of_z12() {
    let ring = build(zn(12));
    assert_eq!(show(&ring, &nilpotents(&ring).unwrap()), ["0", "6"]);
}

#[test]
fn radicals_of_z8_are_the_even_residues() {
    let ring = build(zn(8));
    let r = radicals(&ring).unwrap();
    for ideal in [&r.lower, &r.upper, &r.jacobson] {
        assert_eq!(show(&ring, &ideal.elements()), ["0", "2", "4", "6"]);
    }
    assert_eq!(show(&ring, &r.nilpotents), ["0", "2", "4", "6"]);
    assert!(r.chain_collapses());
}

#[test]
fn lower_nilradical_of_full_matrices_is_zero() {
    let ring = build(mat(zn(2), 2));
    assert!(lower_nilradical(&ring).unwrap().is_zero());
    assert_eq!(nilpotents(&ring).unwrap().len(), 4);
}

#[test]
fn z12_modulo_six_is_z6() {
    let q = build(Recipe::Quot { base: b(zn(12)), ideal: vec!["6".into()] });
    assert_eq!(q.size(), Some(6));
    assert_eq!(q.characteristic(), 6);
}

#[test]
fn ideal_closure_is_closed() {
    let ring = build(ut(zn(3), 2));
    let i = ideal_closure(&ring, &[el(&ring, "[[0,1],[0,0]]")]).unwrap();
    assert_eq!(i.len(), 3);
    i.validate().unwrap();
    assert!(ideal_power_is_zero(&i, 2).unwrap());
}

#[test]
fn idempotents_of_z6() {
    let ring = build(zn(6));
    assert_eq!(show(&ring, &idempotents(&ring).unwrap()), ["0", "1", "3", "4"]);
}

#[test]
fn corner_of_z6_at_three_has_two_elements() {
    let ring = build(zn(6));
    let c = make_corner(&ring, &el(&ring, "3")).unwrap();
    assert_eq!(c.size(), Some(2));
    assert_eq!(c.render(&c.one()), "3");
    let d = make_corner(&ring, &el(&ring, "4")).unwrap();
    assert_eq!(d.size(), Some(3));
    assert_eq!(d.characteristic(), 3);
}

#[test]
fn crt_decomposition_of_twelve() {
    assert_eq!(crt_decompose(12).unwrap(), vec![4, 3]);
    assert_eq!(crt_decompose(7).unwrap(), vec![7]);
    assert!(crt_decompose(1).is_err());
}

#[test]
fn crt_split_is_a_ring_isomorphism() {
    for n in (2..=120).chain([210, 360, 997, 1000]) {
        let split = crt_split(n).unwrap();
        split.verify().unwrap_or_else(|e| panic!("n = {n}: {e}"));
        assert_eq!(split.factors.iter().product::<u64>(), n);
    }
}

#[test]
fn zn_rejects_zero_and_one() {
    assert!(Recipe::Zn(0).build().is_err());
    assert!(Recipe::Zn(1).build().is_err());
}

#[test]
fn quotient_by_the_whole_ring_is_the_zero_ring() {
    let q = build(Recipe::Quot { base: b(zn(4)), ideal: vec!["1".into()] });
    assert!(q.is_trivial());
    assert_eq!(q.size(), Some(1));
}

#[test]
fn gf_needs_an_irreducible_modulus() {
    assert!(Recipe::GF { p: 2, modulus: Some(vec![1, 0, 1]) }.build().is_err());
    assert!(Recipe::GF { p: 4, modulus: None }.build().is_err());
    assert_eq!(build(gf4()).size(), Some(4));
}
