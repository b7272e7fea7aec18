#![allow(dead_code)]

use hurwitz_core::constructions::{Endo, Pattern, Recipe};
use hurwitz_core::{Elem, Ring};

pub fn b(r: Recipe) -> Box<Recipe> {
    Box::new(r)
}

pub fn gf(p: u64) -> Recipe {
    Recipe::GF { p, modulus: None }
}

pub fn gf4() -> Recipe {
    Recipe::GF { p: 2, modulus: Some(vec![1, 1, 1]) }
}

pub fn zn(n: u64) -> Recipe {
    Recipe::Zn(n)
}

pub fn triv(r: Recipe) -> Recipe {
    Recipe::Triv(b(r))
}

pub fn mat(r: Recipe, k: usize) -> Recipe {
    Recipe::Mat(b(r), k)
}

pub fn ut(r: Recipe, k: usize) -> Recipe {
    Recipe::UT(b(r), k)
}

pub fn comm(p: u64, caps: &[(char, u32)]) -> Recipe {
    Recipe::CommQ { base: b(gf(p)), caps: caps.to_vec() }
}

pub fn twist_gf4() -> Recipe {
    Recipe::Twist { base: b(gf4()), endo: Endo::Frobenius }
}

pub fn example_ring(p: u64) -> Recipe {
    Recipe::FreeQ {
        base: b(gf(p)),
        gens: vec!['a', 'b', 'c'],
        patterns: vec![Pattern::Word("cc".into()), Pattern::Word("ac".into()), Pattern::Gap("c".into(), "c".into())],
        max_len: 8,
    }
}

pub fn build(r: Recipe) -> Ring {
    r.build().unwrap_or_else(|e| panic!("building {r}: {e}"))
}

pub fn el(ring: &Ring, s: &str) -> Elem {
    ring.parse(s).unwrap_or_else(|e| panic!("parsing {s} in {ring}: {e}"))
}

pub fn els(ring: &Ring, xs: &[&str]) -> Vec<Elem> {
    xs.iter().map(|s| el(ring, s)).collect()
}

pub fn show(ring: &Ring, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|x| ring.render(x)).collect()
}

/// Small finite rings spanning every finite construction.
pub fn finite_catalog() -> Vec<Recipe> {
    vec![
        zn(2),
        zn(4),
        zn(6),
        zn(8),
        zn(12),
        gf(5),
        gf4(),
        Recipe::Prod(vec![zn(2), zn(3)]),
        mat(zn(2), 2),
        ut(zn(2), 2),
        ut(zn(3), 2),
        Recipe::UTc { base: b(zn(2)), ideal: vec![], k: 3 },
        triv(zn(3)),
        triv(zn(4)),
        Recipe::TrivQ { base: b(zn(4)), ideal: vec!["2".into()] },
        twist_gf4(),
        comm(3, &[('x', 2), ('y', 2)]),
        comm(2, &[('x', 3)]),
        Recipe::Quat(3),
        Recipe::HJet(b(gf(2)), 1),
        Recipe::HJet(b(zn(4)), 1),
        Recipe::Quot { base: b(zn(12)), ideal: vec!["6".into()] },
    ]
}
