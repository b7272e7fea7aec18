mod common;

use common::*;
use hurwitz_core::constructions::Recipe;
use hurwitz_core::hurwitz::{multiply, Product};
use hurwitz_core::properties::*;
use hurwitz_core::ring::Elem;
use hurwitz_core::{Mode, Ring, Status, Verdict};

fn exhaustive() -> SearchOpts {
    SearchOpts::new(Mode::Exhaustive)
}

fn directed() -> SearchOpts {
    SearchOpts::new(Mode::Directed)
}

fn assert_witness(v: &Verdict) {
    if v.is_fails() {
        let w = v.witness.as_ref().expect("Fails without a witness");
        assert!(w.revalidate(), "witness does not revalidate: {:?}", w.fields());
    }
}

fn holds(v: Verdict) -> Verdict {
    assert_witness(&v);
    assert_eq!(v.status, Status::Holds, "{v:?}");
    v
}

fn fails(v: Verdict) -> Verdict {
    assert_witness(&v);
    assert_eq!(v.status, Status::Fails, "{v:?}");
    v
}

#[test]
fn reduced_and_semiprime_examples() {
    let z6 = build(zn(6));
    holds(check_reduced(&z6, &exhaustive()).unwrap());
    holds(check_semiprime(&z6, &exhaustive()).unwrap());

    let m = build(mat(zn(2), 2));
    let v = fails(check_reduced(&m, &exhaustive()).unwrap());
    let x = v.witness.unwrap().fields().f;
    assert!(x == "[[0,1],[0,0]]" || x == "[[0,0],[1,0]]", "{x}");
    holds(check_semiprime(&m, &exhaustive()).unwrap());

    let z4 = build(zn(4));
    let v = fails(check_reduced(&z4, &exhaustive()).unwrap());
    assert_eq!(v.witness.unwrap().fields().f, "2");
    let v = fails(check_semiprime(&z4, &exhaustive()).unwrap());
    assert_eq!(v.witness.unwrap().fields().f, "2");
}

#[test]
fn ifp_examples() {
    let m = build(mat(zn(2), 2));
    fails(check_ifp(&m, &exhaustive()).unwrap());
    for n in [2, 4, 6, 12] {
        holds(check_ifp(&build(zn(n)), &exhaustive()).unwrap());
    }
}

#[test]
fn abelian_examples() {
    holds(check_abelian(&build(zn(6)), &exhaustive()).unwrap());
    fails(check_abelian(&build(ut(zn(2), 2)), &exhaustive()).unwrap());
    fails(check_abelian(&build(Recipe::Quat(3)), &exhaustive()).unwrap());
}

#[test]
fn ordinary_armendariz_examples() {
    let s = build(comm(3, &[('x', 2), ('y', 2)]));
    let f = els(&s, &["x", "y"]);
    let g = els(&s, &["x", "-y"]);
    fails(check_pair(&s, Product::Ordinary, &f, &g).unwrap());
    fails(check_armendariz(&s, &directed()).unwrap());

    let s = build(comm(3, &[('x', 3), ('y', 2)]));
    let f = els(&s, &["x^2", "y"]);
    let g = els(&s, &["x^2", "-y"]);
    fails(check_pair(&s, Product::Ordinary, &f, &g).unwrap());

    let gf2 = build(gf(2));
    holds(check_armendariz(&gf2, &exhaustive().degree(3)).unwrap());
}

#[test]
fn hurwitz_armendariz_on_the_word_ring() {
    for p in [2, 3] {
        let ring = build(example_ring(p));
        let v = fails(check_hurwitz_armendariz(&ring, &directed().degree(2)).unwrap());
        let fields = v.witness.unwrap().fields();
        assert_eq!(fields.value, "1*a*b*c", "p = {p}");
    }
    let ring = build(example_ring(2));
    let v = fails(check_pair(&ring, Product::Hurwitz, &els(&ring, &["a", "a*b"]), &els(&ring, &["c", "b*c"])).unwrap());
    assert_eq!(v.witness.unwrap().fields().value, "1*a*b*c");
}

#[test]
fn positive_characteristic_is_never_hurwitz_armendariz() {
    // e_1 e_{n-1} = n e_n in hR, which is zero in characteristic n.
    for recipe in [zn(2), zn(3), zn(4), zn(6), gf4(), triv(zn(3)), mat(zn(2), 2)] {
        let ring = build(recipe.clone());
        let v = fails(check_hurwitz_armendariz(&ring, &directed().degree(3)).unwrap());
        assert!(v.bounds.degree <= 3, "{recipe}");
    }
    let z4 = build(zn(4));
    let f = els(&z4, &["0", "1"]);
    let g = els(&z4, &["0", "0", "0", "1"]);
    assert!(multiply(&z4, Product::Hurwitz, &f, &g).unwrap().is_empty());
    fails(check_pair(&z4, Product::Hurwitz, &f, &g).unwrap());
}

#[test]
fn ordinary_armendariz_on_z4_is_exhaustive() {
    let v = holds(check_armendariz(&build(zn(4)), &exhaustive().degree(2)).unwrap());
    assert_eq!(v.bounds.mode, Mode::Exhaustive);
    assert_eq!(v.bounds.samples, 4096);
}

#[test]
fn nproduct_on_z4() {
    let z4 = build(zn(4));
    assert!(check_nproduct_armendariz(&z4, 3, &directed()).is_err());
    holds(scan_nproduct(&z4, 3, &SearchOpts::new(Mode::Random).samples(500)).unwrap());
}

#[test]
fn nproduct_over_the_integers() {
    let z = build(Recipe::Z);
    let opts = SearchOpts::new(Mode::Random).degree(2).trunc(8).samples(500).seed(3);
    holds(check_nproduct_armendariz(&z, 3, &opts).unwrap());
    assert!(scan_nproduct(&z, 1, &opts).is_err());
}

#[test]
fn radical_chain_examples() {
    let z12 = build(zn(12));
    let chain = check_radical_chain(&z12).unwrap();
    holds(chain.verdict.clone());
    assert!(chain.radicals.chain_collapses());
    assert_eq!(show(&z12, &chain.radicals.jacobson.elements()), ["0", "6"]);

    let m = build(mat(zn(2), 2));
    let chain = check_radical_chain(&m).unwrap();
    fails(chain.verdict.clone());
    fails(chain.ifp.clone());
    assert!(chain.consistent);
    assert!(chain.radicals.lower.is_zero());

    let u = build(ut(zn(3), 2));
    let chain = check_radical_chain(&u).unwrap();
    holds(chain.verdict);
    assert_eq!(chain.radicals.nilpotents.len(), 3);
    fails(check_armendariz(&u, &directed()).unwrap());
}

#[test]
fn baer_and_pp_examples() {
    let z6 = build(zn(6));
    holds(check_baer(&z6).unwrap());
    holds(check_pp(&z6).unwrap());
    let z4 = build(zn(4));
    let v = fails(check_baer(&z4).unwrap());
    assert_eq!(v.witness.unwrap().fields().f, "{2}");
    fails(check_pp(&z4).unwrap());
    for recipe in [gf(5), gf4()] {
        holds(check_baer(&build(recipe)).unwrap());
    }
}

#[test]
fn polynomial_transfer_fails_by_characteristic() {
    let z6 = build(zn(6));
    let opts = SearchOpts::new(Mode::Random).degree(4).samples(200).seed(214);
    fails(scan_baer_transfer(&z6, &opts).unwrap());
    fails(scan_pp_transfer(&z6, &opts).unwrap());
}

#[test]
fn annihilator_count_for_two_in_z4() {
    // Coefficients must lie in r(2) = {0,2}: 2^3 of the 4^3 polynomials.
    let z4 = build(zn(4));
    let count = AnnihilatorCount::of(&z4, &els(&z4, &["2"]), 2).unwrap();
    assert_eq!(count, AnnihilatorCount { annihilated: 8, total: 64 });
    let count = AnnihilatorCount::of(&z4, &els(&z4, &["0"]), 2).unwrap();
    assert_eq!(count.annihilated, 64);
}

#[test]
fn constant_annihilators_are_coefficientwise() {
    let opts = SearchOpts::new(Mode::Exhaustive).degree(2).samples(50).seed(211);
    for recipe in [zn(4), gf4(), zn(6)] {
        holds(scan_constant_annihilators(&build(recipe), &opts).unwrap());
    }
}

#[test]
fn polynomial_annihilators_fail_by_characteristic() {
    let opts = SearchOpts::new(Mode::Exhaustive).degree(2).samples(50).seed(211);
    for recipe in [zn(4), gf4()] {
        fails(scan_polynomial_annihilators(&build(recipe), &opts).unwrap());
    }
}

#[test]
fn square_zero_criterion() {
    let t = build(triv(zn(3)));
    let report = check_square_zero_regular(&t, &els(&t, &["(0|1)"]), &directed().degree(3)).unwrap();
    assert!(report.hypotheses_hold());
    assert_eq!(report.ideal.len(), 3);
    fails(report.verdict());

    let z4 = build(zn(4));
    let report = check_square_zero_regular(&z4, &els(&z4, &["2"]), &directed().degree(3)).unwrap();
    assert!(report.hypotheses_hold());
    fails(report.verdict());

    let z8 = build(zn(8));
    let report = check_square_zero_regular(&z8, &els(&z8, &["2"]), &directed()).unwrap();
    assert!(!report.square_zero);
    assert_eq!(report.verdict().status, Status::Unknown);

    let z = build(Recipe::Z);
    let opts = SearchOpts::new(Mode::Random).degree(3).trunc(8).samples(2000).seed(5);
    holds(check_hurwitz_armendariz(&z, &opts).unwrap());
}

#[test]
fn idempotent_split_examples() {
    let zz = build(Recipe::Prod(vec![Recipe::Z, Recipe::Z]));
    let opts = SearchOpts::new(Mode::Random).degree(2).samples(1000).seed(312);
    let split = check_idempotent_split(&zz, &el(&zz, "(1,0)"), &opts).unwrap();
    holds(split.whole);
    holds(split.on_corner);
    holds(split.on_complement);
    assert!(!split.contradiction);

    // Both corners of Zn(6) have positive characteristic, so all three fail.
    let z6 = build(zn(6));
    let split = check_idempotent_split(&z6, &el(&z6, "3"), &directed().degree(3)).unwrap();
    fails(split.whole);
    fails(split.on_corner);
    fails(split.on_complement);
    assert_eq!(split.corner.size(), Some(2));
    assert_eq!(split.complement.size(), Some(3));

    let split = check_idempotent_split(&z6, &z6.one(), &directed()).unwrap();
    assert_eq!(split.on_complement.bounds.mode, Mode::Trivial);

    assert!(check_idempotent_split(&z6, &el(&z6, "2"), &directed()).is_err());
    let u = build(ut(zn(2), 2));
    assert!(check_idempotent_split(&u, &el(&u, "[[1,0],[0,0]]"), &directed()).is_err());
}

#[test]
fn insertion_on_hurwitz_polynomials() {
    let z = build(Recipe::Z);
    let opts = SearchOpts::new(Mode::Random).degree(2).trunc(8).samples(200).seed(24);
    holds(check_ifp_hurwitz(&z, &opts).unwrap());
    let z4 = build(zn(4));
    assert!(check_ifp_hurwitz(&z4, &directed().degree(2)).is_err());
    holds(scan_ifp_hurwitz(&z4, &SearchOpts::new(Mode::Random).degree(2).samples(200)).unwrap());
    fails(scan_ifp_hurwitz(&build(ut(zn(3), 2)), &SearchOpts::new(Mode::Random).degree(1).samples(200)).unwrap());
}

#[test]
fn zero_ring_is_flagged_trivial() {
    let zero = build(Recipe::Quot { base: b(zn(4)), ideal: vec!["1".into()] });
    assert!(zero.is_trivial());
    for v in [
        check_armendariz(&zero, &exhaustive()).unwrap(),
        check_hurwitz_armendariz(&zero, &directed()).unwrap(),
        check_reduced(&zero, &exhaustive()).unwrap(),
    ] {
        assert_eq!(v.bounds.mode, Mode::Trivial, "{v:?}");
        assert_eq!(v.status, Status::Unknown);
    }
}

#[test]
fn exhaustive_search_refuses_oversized_spaces() {
    let m = build(mat(zn(2), 2));
    let r = check_armendariz(&m, &exhaustive().degree(4).budget(1000));
    assert!(r.is_err());
}

/// Implications that must hold between verdicts on every finite ring.
#[test]
fn verdicts_are_mutually_consistent() {
    let opts = exhaustive().budget(5_000_000);
    for recipe in finite_catalog() {
        let ring: Ring = build(recipe.clone());
        let reduced = check_reduced(&ring, &opts).unwrap();
        let semiprime = check_semiprime(&ring, &opts).unwrap();
        let ifp = check_ifp(&ring, &opts).unwrap();
        let abelian = check_abelian(&ring, &opts).unwrap();
        for v in [&reduced, &semiprime, &ifp, &abelian] {
            assert_witness(v);
        }
        if reduced.is_holds() {
            assert!(semiprime.is_holds(), "{recipe}: reduced but not semiprime");
            assert!(ifp.is_holds(), "{recipe}: reduced without IFP");
        }
        if ifp.is_holds() {
            assert!(abelian.is_holds(), "{recipe}: IFP but not Abelian");
        }
        let armendariz = check_armendariz(&ring, &directed()).unwrap();
        assert_witness(&armendariz);
        if armendariz.is_holds() {
            assert!(abelian.is_holds(), "{recipe}: Armendariz (directed) but not Abelian");
        }
        if let Ok(chain) = check_radical_chain(&ring) {
            assert!(chain.consistent, "{recipe}");
            if reduced.is_holds() {
                assert!(chain.radicals.nilpotents.len() == 1, "{recipe}");
            }
        }
    }
}

/// A Fails found by a weaker mode is never contradicted by a stronger one.
#[test]
fn modes_agree_on_failures() {
    for recipe in [zn(4), triv(zn(4)), ut(zn(2), 2), comm(2, &[('x', 3)])] {
        let ring = build(recipe.clone());
        let d = check_armendariz(&ring, &directed()).unwrap();
        let e = check_armendariz(&ring, &exhaustive().degree(1)).unwrap();
        assert_witness(&d);
        assert_witness(&e);
        if d.is_fails() {
            assert!(e.is_fails(), "{recipe}");
        }
        if e.is_holds() {
            assert!(!d.is_fails(), "{recipe}");
        }
    }
}

#[test]
fn witnesses_revalidate_from_their_fields() {
    let ring = build(comm(3, &[('x', 2), ('y', 2)]));
    let v = fails(check_armendariz(&ring, &directed()).unwrap());
    let w = v.witness.unwrap();
    let f: Vec<Elem> =
        w.fields().f.trim_matches(|c| c == '<' || c == '>').split(',').map(|s| ring.parse(s).unwrap()).collect();
    let g: Vec<Elem> =
        w.fields().g.trim_matches(|c| c == '<' || c == '>').split(',').map(|s| ring.parse(s).unwrap()).collect();
    assert!(multiply(&ring, Product::Ordinary, &f, &g).unwrap().is_empty());
    let (i, j) = (w.fields().i, w.fields().j);
    assert_eq!(ring.render(&ring.mul(&f[i], &g[j])), w.fields().value);
}
