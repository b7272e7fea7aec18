//! Named, deterministic reproductions of the worked examples and
//! counterexamples, each producing a [`Report`].
//!
//! Every scenario owns a default seed; [`run_scenario_seeded`] overrides it.
//! Reports are byte-stable for a given `(id, seed, version)`: searches are
//! sequential and all randomness flows from the seed.

use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constructions::{crt_split, Endo, Pattern, Recipe};
use crate::hurwitz::{geometric_inverse_jet, one_minus_rx, pack_nested, HurwitzJet, HurwitzPoly, NestedPoly, Product};
use crate::properties::{
    check_abelian, check_armendariz, check_baer, check_constant_idempotent_jets, check_hurwitz_armendariz,
    check_ideal_armendariz, check_idempotent_split, check_ifp, check_pair, check_pp, check_radical_chain,
    check_reduced, check_semiprime, check_square_zero_regular, scan_baer_transfer, scan_constant_annihilators,
    scan_ifp_hurwitz, scan_nproduct, scan_polynomial_annihilators, scan_pp_transfer, SearchOpts,
};
use crate::ring::{ideal_closure, Elem, Ring};
use crate::verdict::{Bounds, Claim, Mode, Status, Verdict, Witness};
use crate::{Error, Result};

/// One named verdict in a report.
#[derive(Clone, Debug)]
pub struct Check {
    pub property: String,
    pub verdict: Verdict,
}

/// Structured output of a scenario or a single `check` run.
#[derive(Clone, Debug)]
pub struct Report {
    /// `None` for ad hoc checks.
    pub scenario: Option<String>,
    /// Canonical ring spec; several rings are joined by `"; "`.
    pub ring: String,
    pub checks: Vec<Check>,
    pub narrative: Vec<String>,
    pub seed: u64,
}

impl Report {
    /// A report holding a single check.
    pub fn single(ring: impl Into<String>, property: impl Into<String>, verdict: Verdict, seed: u64) -> Report {
        let mut report = Report { scenario: None, ring: ring.into(), checks: Vec::new(), narrative: Vec::new(), seed };
        report.checks.push(Check { property: property.into(), verdict });
        report.narrative = report.checks.iter().map(summary_line).collect();
        report
    }

    /// `Fails` if any check fails, else `Unknown` if any is unknown.
    pub fn overall(&self) -> Status {
        let statuses = self.checks.iter().map(|c| c.verdict.status);
        if statuses.clone().any(|s| s == Status::Fails) {
            Status::Fails
        } else if statuses.clone().any(|s| s == Status::Unknown) {
            Status::Unknown
        } else {
            Status::Holds
        }
    }

    pub fn check(&self, property: &str) -> Option<&Verdict> {
        self.checks.iter().find(|c| c.property == property).map(|c| &c.verdict)
    }

    /// Every `Fails` carries a witness that re-validates.
    pub fn witnesses_valid(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.verdict.is_fails())
            .all(|c| c.verdict.witness.as_ref().is_some_and(|w| w.revalidate()))
    }
}

fn summary_line(c: &Check) -> String {
    let v = &c.verdict;
    let mut line = format!("{}: {} ({}, {} samples)", c.property, v.status, v.bounds.mode, v.bounds.samples);
    if let Some(w) = &v.witness {
        let f = w.fields();
        line.push_str(&format!("; f={} g={} i={} j={} value={}", f.f, f.g, f.i, f.j, f.value));
    }
    if let Some(n) = &v.note {
        line.push_str(&format!("; {n}"));
    }
    line
}

/// A registered scenario.
pub struct Scenario {
    pub id: &'static str,
    /// Topics this scenario reproduces; used by the coverage test.
    pub topics: &'static [&'static str],
    pub seed: u64,
    run: fn(&mut Ctx) -> Result<()>,
}

static REGISTRY: &[Scenario] = &[
    Scenario { id: "ex2_1", topics: &["monomial-quotient-counterexample", "hurwitz-product"], seed: 21, run: ex2_1 },
    Scenario {
        id: "ex2_2",
        topics: &["monomial-quotient-counterexample", "armendariz-definitions"],
        seed: 22,
        run: ex2_2,
    },
    Scenario { id: "prop2_4_inverse", topics: &["inverse-series", "hurwitz-ifp"], seed: 24, run: prop2_4_inverse },
    Scenario { id: "prop2_6_chain", topics: &["radical-chain"], seed: 26, run: prop2_6_chain },
    Scenario { id: "rem2_7_4_quaternions", topics: &["quaternions"], seed: 274, run: rem2_7_4_quaternions },
    Scenario { id: "cor2_9", topics: &["semiprime-reduced"], seed: 29, run: cor2_9 },
    Scenario { id: "prop2_11_maps", topics: &["annihilator-maps", "n-product"], seed: 211, run: prop2_11_maps },
    Scenario { id: "lem2_12_idempotents", topics: &["idempotent-jets"], seed: 212, run: lem2_12_idempotents },
    Scenario { id: "thm2_14_baer", topics: &["baer-transfer"], seed: 214, run: thm2_14_baer },
    Scenario { id: "thm2_15_pp", topics: &["pp-transfer"], seed: 215, run: thm2_15_pp },
    Scenario { id: "prop3_1_packing", topics: &["packing"], seed: 31, run: prop3_1_packing },
    Scenario { id: "prop3_2_crt", topics: &["crt-images"], seed: 32, run: prop3_2_crt },
    Scenario { id: "rem3_3", topics: &["commutative-monomial-counterexample"], seed: 33, run: rem3_3 },
    Scenario { id: "ex3_11", topics: &["commutative-monomial-counterexample"], seed: 311, run: ex3_11 },
    Scenario { id: "prop3_4_truncation", topics: &["truncated-jets"], seed: 34, run: prop3_4_truncation },
    Scenario { id: "prop3_5_trivial", topics: &["trivial-extensions"], seed: 35, run: prop3_5_trivial },
    Scenario { id: "cor3_7_matrices", topics: &["constant-diagonal-matrices"], seed: 37, run: cor3_7_matrices },
    Scenario {
        id: "prop3_9_sqzero",
        topics: &["square-zero-ideal", "twisted-extension"],
        seed: 39,
        run: prop3_9_sqzero,
    },
    Scenario { id: "cor3_12_split", topics: &["idempotent-split"], seed: 312, run: cor3_12_split },
    Scenario {
        id: "cor3_12_final_counterexample",
        topics: &["upper-triangular-counterexample"],
        seed: 3120,
        run: cor3_12_final_counterexample,
    },
];

pub fn registry() -> &'static [Scenario] {
    REGISTRY
}

pub fn scenario_ids() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|s| s.id)
}

pub fn find_scenario(id: &str) -> Result<&'static Scenario> {
    REGISTRY.iter().find(|s| s.id == id).ok_or_else(|| Error::UnknownScenario(id.to_owned()))
}

/// Runs `id` with its default seed.
pub fn run_scenario(id: &str) -> Result<Report> {
    let s = find_scenario(id)?;
    run_scenario_seeded(id, s.seed)
}

pub fn run_scenario_seeded(id: &str, seed: u64) -> Result<Report> {
    let s = find_scenario(id)?;
    let mut ctx = Ctx { seed, rings: Vec::new(), entries: Vec::new(), notes: Vec::new() };
    (s.run)(&mut ctx)?;
    ctx.finish(id)
}

struct Ctx {
    seed: u64,
    rings: Vec<String>,
    entries: Vec<(String, String, Verdict)>,
    notes: Vec<String>,
}

impl Ctx {
    fn build(&mut self, recipe: &Recipe) -> Result<Ring> {
        let ring = recipe.build()?;
        self.register(&recipe.to_string());
        Ok(ring)
    }

    fn register(&mut self, label: &str) {
        if !self.rings.iter().any(|r| r == label) {
            self.rings.push(label.to_owned());
        }
    }

    fn opts(&self, mode: Mode) -> SearchOpts {
        SearchOpts::new(mode).seed(self.seed)
    }

    fn push(&mut self, property: &str, ring: &str, verdict: Verdict) {
        self.register(ring);
        self.entries.push((property.to_owned(), ring.to_owned(), verdict));
    }

    fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    fn finish(self, id: &str) -> Result<Report> {
        let several = self.rings.len() > 1;
        let checks: Vec<Check> = self
            .entries
            .into_iter()
            .map(|(p, r, verdict)| Check { property: if several { format!("{p} @ {r}") } else { p }, verdict })
            .collect();
        let mut narrative: Vec<String> = checks.iter().map(summary_line).collect();
        narrative.extend(self.notes);
        let report =
            Report { scenario: Some(id.to_owned()), ring: self.rings.join("; "), checks, narrative, seed: self.seed };
        if !report.witnesses_valid() {
            return Err(Error::Internal(format!("scenario {id} produced a witness that does not re-validate")));
        }
        Ok(report)
    }
}

fn b(r: Recipe) -> Box<Recipe> {
    Box::new(r)
}

fn gf(p: u64) -> Recipe {
    Recipe::GF { p, modulus: None }
}

fn gf4() -> Recipe {
    Recipe::GF { p: 2, modulus: Some(vec![1, 1, 1]) }
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// `F<a,b,c>` modulo words containing `cc`, `ac` or `c...c`, cut off at length 8.
fn example_ring(field: Recipe) -> Recipe {
    Recipe::FreeQ {
        base: b(field),
        gens: vec!['a', 'b', 'c'],
        patterns: vec![Pattern::Word("cc".into()), Pattern::Word("ac".into()), Pattern::Gap("c".into(), "c".into())],
        max_len: 8,
    }
}

fn elems(ring: &Ring, lits: &[&str]) -> Result<Vec<Elem>> {
    lits.iter().map(|s| ring.parse(s)).collect()
}

fn ex2_1(ctx: &mut Ctx) -> Result<()> {
    for p in [2, 3] {
        let recipe = example_ring(gf(p));
        let ring = ctx.build(&recipe)?;
        let v = check_hurwitz_armendariz(&ring, &ctx.opts(Mode::Directed).degree(2))?;
        ctx.push("hurwitz-armendariz", &recipe.to_string(), v);
    }
    ctx.note("f = a - ab x and g = sum k! b^k c x^k multiply to zero; the series stops once k! vanishes in the field");
    Ok(())
}

fn ex2_2(ctx: &mut Ctx) -> Result<()> {
    let recipe = example_ring(gf(3));
    let ring = ctx.build(&recipe)?;
    let label = recipe.to_string();
    let v = check_hurwitz_armendariz(&ring, &ctx.opts(Mode::Directed).degree(2))?;
    ctx.push("hurwitz-armendariz", &label, v);
    let v = check_armendariz(&ring, &ctx.opts(Mode::Directed).degree(1))?;
    ctx.push("armendariz", &label, v);
    let v = check_armendariz(&ring, &ctx.opts(Mode::Random).degree(2).samples(2000))?;
    ctx.push("armendariz", &label, v);
    ctx.note("only the Hurwitz-type failure and a bounded ordinary Armendariz scan are reproduced");
    Ok(())
}

/// `(1 - r x) * sum k! r^k x^k` equals 1 in the jet ring of `order`, for
/// every element `r` of a finite ring.
fn inverse_identity(ring: &Ring, order: usize, seed: u64) -> Result<Verdict> {
    let one = HurwitzJet::identity(ring, order);
    let mut count = 0;
    for r in ring.elements()? {
        count += 1;
        let product = one_minus_rx(ring, &r, order).mul(&geometric_inverse_jet(ring, &r, order))?;
        let bounds = Bounds { degree: order, trunc: order, mode: Mode::Exhaustive, samples: count, seed };
        if product != one {
            return Ok(Verdict::fails(bounds, Witness::new(ring, Claim::InverseSeries { r, order })));
        }
    }
    Ok(Verdict::holds(Bounds { degree: order, trunc: order, mode: Mode::Exhaustive, samples: count, seed }))
}

fn prop2_4_inverse(ctx: &mut Ctx) -> Result<()> {
    let rings = [Recipe::Zn(4), Recipe::Zn(5), gf4(), Recipe::Mat(b(Recipe::Zn(2)), 2), Recipe::Triv(b(Recipe::Zn(3)))];
    for recipe in rings {
        let ring = ctx.build(&recipe)?;
        let v = inverse_identity(&ring, 8, ctx.seed)?;
        ctx.push("inverse-series", &recipe.to_string(), v);
    }
    for recipe in [Recipe::Zn(4), Recipe::Triv(b(Recipe::Zn(3)))] {
        let ring = ctx.build(&recipe)?;
        let v = scan_ifp_hurwitz(&ring, &ctx.opts(Mode::Random).degree(2).samples(200))?;
        ctx.push("ifp-hurwitz", &recipe.to_string(), v);
    }
    ctx.note("inverse-series: every r, jets of order 8");
    ctx.note("ifp-hurwitz: exact zero products f g = 0 tested against random h for f h g = 0");
    Ok(())
}

fn prop2_6_chain(ctx: &mut Ctx) -> Result<()> {
    let catalog = [
        Recipe::Zn(8),
        Recipe::Zn(12),
        Recipe::Triv(b(Recipe::Zn(4))),
        Recipe::CommQ { base: b(gf(3)), caps: vec![('x', 2), ('y', 2)] },
        Recipe::Mat(b(Recipe::Zn(2)), 2),
        Recipe::UT(b(Recipe::Zn(3)), 2),
    ];
    for recipe in catalog {
        let ring = ctx.build(&recipe)?;
        let label = recipe.to_string();
        let chain = check_radical_chain(&ring)?;
        let r = &chain.radicals;
        ctx.note(format!(
            "{label}: |N| = {}, |N0| = {}, |N*| = {}, |J| = {}{}",
            r.nilpotents.len(),
            r.lower.len(),
            r.upper.len(),
            r.jacobson.len(),
            if chain.consistent { "" } else { "; IFP holds but the lower nilradical misses a nilpotent" }
        ));
        ctx.push("radical-chain", &label, chain.verdict);
        ctx.push("ifp", &label, chain.ifp);
    }
    Ok(())
}

fn rem2_7_4_quaternions(ctx: &mut Ctx) -> Result<()> {
    let recipe = Recipe::Quat(3);
    let ring = ctx.build(&recipe)?;
    let label = recipe.to_string();
    let v = check_abelian(&ring, &ctx.opts(Mode::Exhaustive))?;
    ctx.push("abelian", &label, v);
    let v = check_armendariz(&ring, &ctx.opts(Mode::Directed).degree(1))?;
    ctx.push("armendariz", &label, v);
    Ok(())
}

fn cor2_9(ctx: &mut Ctx) -> Result<()> {
    for recipe in [Recipe::Zn(6), Recipe::Zn(4), Recipe::Zn(12), gf4(), Recipe::Mat(b(Recipe::Zn(2)), 2)] {
        let ring = ctx.build(&recipe)?;
        let label = recipe.to_string();
        let reduced = check_reduced(&ring, &ctx.opts(Mode::Exhaustive))?;
        let semiprime = check_semiprime(&ring, &ctx.opts(Mode::Exhaustive))?;
        if semiprime.is_holds() && reduced.is_fails() {
            ctx.note(format!("{label}: semiprime but not reduced, so the equivalence needs its hypothesis here"));
        }
        ctx.push("reduced", &label, reduced);
        ctx.push("semiprime", &label, semiprime);
    }
    Ok(())
}

fn prop2_11_maps(ctx: &mut Ctx) -> Result<()> {
    for recipe in [Recipe::Zn(4), gf4()] {
        let ring = ctx.build(&recipe)?;
        let label = recipe.to_string();
        let opts = ctx.opts(Mode::Exhaustive).degree(2).samples(50);
        let v = scan_constant_annihilators(&ring, &opts)?;
        ctx.push("constant-annihilators", &label, v);
        let v = scan_polynomial_annihilators(&ring, &opts)?;
        ctx.push("polynomial-annihilators", &label, v);
    }
    let recipe = Recipe::Zn(4);
    let ring = ctx.build(&recipe)?;
    let v = scan_nproduct(&ring, 3, &ctx.opts(Mode::Random).degree(2).samples(500))?;
    ctx.push("nproduct-armendariz n=3", &recipe.to_string(), v);
    ctx.note("constant-annihilators: degree <= 2 polynomials killed by U are exactly those with coefficients in r(U)");
    ctx.note("polynomial-annihilators: r(V) in degree <= 2 against {g : C_g in r(C_V)}, sampled V");
    Ok(())
}

fn lem2_12_idempotents(ctx: &mut Ctx) -> Result<()> {
    let cases = [
        (Recipe::Zn(4), 4),
        (Recipe::Zn(6), 4),
        (Recipe::Zn(8), 4),
        (Recipe::Triv(b(Recipe::Zn(3))), 4),
        (Recipe::UT(b(Recipe::Zn(2)), 2), 1),
    ];
    for (recipe, order) in cases {
        let ring = ctx.build(&recipe)?;
        let label = recipe.to_string();
        let (jets, v) = check_constant_idempotent_jets(&ring, order, ctx.seed)?;
        let listed: Vec<String> = jets.iter().filter(|j| !j.is_constant()).map(|j| j.render()).collect();
        ctx.note(format!(
            "{label}: {} idempotent jets of order {order}, non-constant: [{}]",
            jets.len(),
            listed.join(", ")
        ));
        ctx.push("constant-idempotent-jets", &label, v);
    }
    Ok(())
}

fn thm2_14_baer(ctx: &mut Ctx) -> Result<()> {
    for recipe in [Recipe::Zn(6), Recipe::Zn(4)] {
        let ring = ctx.build(&recipe)?;
        let v = check_baer(&ring)?;
        ctx.push("baer", &recipe.to_string(), v);
    }
    let recipe = Recipe::Zn(6);
    let ring = ctx.build(&recipe)?;
    let v = scan_baer_transfer(&ring, &ctx.opts(Mode::Exhaustive).degree(4).samples(200))?;
    ctx.push("baer-transfer", &recipe.to_string(), v);
    ctx.note(
        "baer-transfer runs without the Hurwitz-type hypothesis, which no ring of positive characteristic satisfies",
    );
    Ok(())
}

fn thm2_15_pp(ctx: &mut Ctx) -> Result<()> {
    for recipe in [Recipe::Zn(6), Recipe::Zn(4), Recipe::UT(b(Recipe::Zn(2)), 2)] {
        let ring = ctx.build(&recipe)?;
        let v = check_pp(&ring)?;
        ctx.push("pp", &recipe.to_string(), v);
    }
    let recipe = Recipe::Zn(6);
    let ring = ctx.build(&recipe)?;
    let v = scan_pp_transfer(&ring, &ctx.opts(Mode::Exhaustive).degree(4).samples(200))?;
    ctx.push("pp-transfer", &recipe.to_string(), v);
    ctx.note("pp is checked on a commutative and a noncommutative ring; pp-transfer runs without the Hurwitz-type hypothesis");
    Ok(())
}

/// Random nested pairs over `ring` with `F G = 0`, checking whether the
/// packed polynomials still multiply to zero.
fn packing_trials(ring: &Ring, trials: u64, seed: u64) -> Result<Verdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let poly = |rng: &mut ChaCha8Rng| -> Result<HurwitzPoly> {
        HurwitzPoly::new(ring, (0..2).map(|_| ring.sample(rng)).collect())
    };
    let nested = |rng: &mut ChaCha8Rng| -> Result<NestedPoly> { NestedPoly::new(ring, vec![poly(rng)?, poly(rng)?]) };
    let mut hits = 0u64;
    for _ in 0..trials {
        let f = nested(&mut rng)?;
        let g = nested(&mut rng)?;
        if f.is_zero() || g.is_zero() || !f.mul(&g)?.is_zero() {
            continue;
        }
        hits += 1;
        let packed = pack_nested(&f, &g, 64)?;
        if !packed.f.mul(&packed.g)?.is_zero() {
            let claim = Claim::Packing {
                f: f.coeffs().iter().map(|c| c.coeffs().to_vec()).collect(),
                packed_f: packed.f.coeffs().to_vec(),
                packed_g: packed.g.coeffs().to_vec(),
                nested_g: g.coeffs().iter().map(|c| c.coeffs().to_vec()).collect(),
            };
            let bounds = Bounds { degree: 1, trunc: 0, mode: Mode::Random, samples: hits, seed };
            return Ok(Verdict::fails(bounds, Witness::new(ring, claim)));
        }
    }
    let bounds = Bounds { degree: 1, trunc: 0, mode: Mode::Random, samples: hits, seed };
    Ok(Verdict::holds(bounds))
}

fn prop3_1_packing(ctx: &mut Ctx) -> Result<()> {
    for recipe in [Recipe::Zn(4), Recipe::Zn(6), Recipe::Triv(b(Recipe::Zn(2)))] {
        let ring = ctx.build(&recipe)?;
        let v = packing_trials(&ring, 20_000, ctx.seed)?;
        ctx.push("packing-preserves-zero-products", &recipe.to_string(), v);
    }
    ctx.note(
        "experiment: nested pairs of T-degree 1 with x-degree 1 coefficients; samples counts the pairs with F G = 0",
    );
    Ok(())
}

fn prop3_2_crt(ctx: &mut Ctx) -> Result<()> {
    for n in [12, 30] {
        let recipe = Recipe::Zn(n);
        ctx.build(&recipe)?;
        let split = crt_split(n)?;
        split.verify()?;
        let bounds = Bounds { samples: n, seed: ctx.seed, ..Bounds::new(Mode::Exhaustive) };
        ctx.note(format!("Zn({n}) ~ product of Zn(q) for q in {:?}", split.factors));
        ctx.push("crt-isomorphism", &recipe.to_string(), Verdict::holds(bounds));
    }
    for recipe in [Recipe::Zn(12), Recipe::Zn(4)] {
        let ring = ctx.build(&recipe)?;
        let v = check_armendariz(&ring, &ctx.opts(Mode::Directed).degree(1))?;
        ctx.push("armendariz", &recipe.to_string(), v);
    }
    let recipe = Recipe::Zn(4);
    let ring = ctx.build(&recipe)?;
    let v = check_armendariz(&ring, &ctx.opts(Mode::Exhaustive).degree(2))?;
    ctx.push("armendariz", &recipe.to_string(), v);
    let recipe = Recipe::Zn(12);
    let ring = ctx.build(&recipe)?;
    let v = check_hurwitz_armendariz(&ring, &ctx.opts(Mode::Directed).degree(2))?;
    ctx.push("hurwitz-armendariz", &recipe.to_string(), v);
    let ring = ctx.build(&Recipe::Z)?;
    let v = check_hurwitz_armendariz(&ring, &ctx.opts(Mode::Random).degree(3).trunc(8).samples(10_000))?;
    ctx.push("hurwitz-armendariz", "Z", v);
    ctx.note("images Zn(n) of Z have positive characteristic; x^a and x^b with n | C(a+b,a) multiply to zero in the Hurwitz ring");
    Ok(())
}

fn rem3_3(ctx: &mut Ctx) -> Result<()> {
    let recipe = Recipe::CommQ { base: b(gf(3)), caps: vec![('x', 2), ('y', 2)] };
    let ring = ctx.build(&recipe)?;
    let label = recipe.to_string();
    let f = elems(&ring, &["x", "y"])?;
    let g = elems(&ring, &["x", "-y"])?;
    let v = check_pair(&ring, Product::Ordinary, &f, &g)?;
    ctx.push("armendariz (x+yT)(x-yT)", &label, v);
    let v = check_pair(&ring, Product::Hurwitz, &f, &g)?;
    ctx.push("hurwitz-armendariz (x+yT)(x-yT)", &label, v);
    let v = check_armendariz(&ring, &ctx.opts(Mode::Exhaustive).degree(1))?;
    ctx.push("armendariz", &label, v);
    ctx.note("the T^2 coefficient of the Hurwitz product is -2y^2, which is 0 because y^2 = 0");
    Ok(())
}

fn ex3_11(ctx: &mut Ctx) -> Result<()> {
    let cases: [(u32, u32, [&str; 2], [&str; 2]); 4] = [
        (2, 2, ["x", "y"], ["x", "-y"]),
        (3, 2, ["x^2", "y"], ["x^2", "-y"]),
        (4, 4, ["x^2", "y^2"], ["x^2", "-y^2"]),
        (5, 4, ["x^3", "y^2"], ["x^3", "-y^2"]),
    ];
    for (cx, cy, f, g) in cases {
        let recipe = Recipe::CommQ { base: b(gf(3)), caps: vec![('x', cx), ('y', cy)] };
        let ring = ctx.build(&recipe)?;
        let v = check_pair(&ring, Product::Ordinary, &elems(&ring, &f)?, &elems(&ring, &g)?)?;
        ctx.push("armendariz", &recipe.to_string(), v);
    }
    ctx.note("m = 2 and m = 4 for both F[x,y]/(x^m,y^m) and F[x,y]/(x^(m+1),y^m)");
    Ok(())
}

fn prop3_4_truncation(ctx: &mut Ctx) -> Result<()> {
    let recipe = Recipe::HJet(b(gf(2)), 1);
    let ring = ctx.build(&recipe)?;
    let label = recipe.to_string();
    let v = check_armendariz(&ring, &ctx.opts(Mode::Exhaustive).degree(2))?;
    ctx.push("armendariz", &label, v);
    let v = check_hurwitz_armendariz(&ring, &ctx.opts(Mode::Directed).degree(2))?;
    ctx.push("hurwitz-armendariz", &label, v);
    let recipe = Recipe::HJet(b(Recipe::Zn(4)), 1);
    let ring = ctx.build(&recipe)?;
    let v = check_armendariz(&ring, &ctx.opts(Mode::Directed).degree(1))?;
    ctx.push("armendariz", &recipe.to_string(), v);
    Ok(())
}

fn prop3_5_trivial(ctx: &mut Ctx) -> Result<()> {
    for recipe in [Recipe::Triv(b(Recipe::Zn(3))), Recipe::Triv(b(Recipe::Zn(4)))] {
        let ring = ctx.build(&recipe)?;
        let v = check_armendariz(&ring, &ctx.opts(Mode::Directed).degree(1))?;
        ctx.push("armendariz", &recipe.to_string(), v);
    }
    let recipe = Recipe::Triv(b(Recipe::Zn(3)));
    let ring = ctx.build(&recipe)?;
    let v = check_hurwitz_armendariz(&ring, &ctx.opts(Mode::Directed).degree(3))?;
    ctx.push("hurwitz-armendariz", &recipe.to_string(), v);
    let recipe = Recipe::Triv(b(Recipe::Z));
    let ring = ctx.build(&recipe)?;
    let v = check_hurwitz_armendariz(&ring, &ctx.opts(Mode::Random).degree(2).samples(2000))?;
    ctx.push("hurwitz-armendariz", &recipe.to_string(), v);
    Ok(())
}

fn cor3_7_matrices(ctx: &mut Ctx) -> Result<()> {
    let cases = [
        Recipe::UTc { base: b(Recipe::Zn(2)), ideal: Vec::new(), k: 3 },
        Recipe::UTc { base: b(Recipe::Zn(6)), ideal: strings(&["3"]), k: 3 },
        Recipe::TrivQ { base: b(Recipe::Zn(6)), ideal: strings(&["3"]) },
    ];
    for recipe in cases {
        let ring = ctx.build(&recipe)?;
        let label = recipe.to_string();
        let v = check_armendariz(&ring, &ctx.opts(Mode::Directed).degree(1))?;
        ctx.push("armendariz", &label, v);
        let v = check_hurwitz_armendariz(&ring, &ctx.opts(Mode::Directed).degree(2))?;
        ctx.push("hurwitz-armendariz", &label, v);
    }
    let recipe = Recipe::UTc { base: b(Recipe::Z), ideal: Vec::new(), k: 3 };
    let ring = ctx.build(&recipe)?;
    let v = check_hurwitz_armendariz(&ring, &ctx.opts(Mode::Random).degree(2).samples(2000))?;
    ctx.push("hurwitz-armendariz", &recipe.to_string(), v);
    Ok(())
}

fn prop3_9_sqzero(ctx: &mut Ctx) -> Result<()> {
    let cases =
        [(Recipe::Triv(b(Recipe::Zn(3))), "(0|1)"), (Recipe::Twist { base: b(gf4()), endo: Endo::Frobenius }, "(0|1)")];
    let random = ctx.opts(Mode::Random).degree(3).samples(100_000);
    for (recipe, j) in cases {
        let ring = ctx.build(&recipe)?;
        let label = recipe.to_string();
        let report = check_square_zero_regular(&ring, &elems(&ring, &[j])?, &random)?;
        let hyp = if report.square_zero {
            report.regular_outside.clone()
        } else {
            Verdict::unknown(report.regular_outside.bounds, "J^2 != 0")
        };
        ctx.push("square-zero-regular-hypotheses", &label, hyp);
        ctx.push("hurwitz-armendariz", &label, report.verdict());
    }
    let recipe = Recipe::Zn(4);
    let ring = ctx.build(&recipe)?;
    let report = check_square_zero_regular(&ring, &elems(&ring, &["2"])?, &ctx.opts(Mode::Directed).degree(2))?;
    let label = recipe.to_string();
    ctx.push("square-zero-regular-hypotheses", &label, report.regular_outside.clone());
    ctx.push("hurwitz-armendariz", &label, report.verdict());
    let ring = ctx.build(&Recipe::Z)?;
    let v = check_hurwitz_armendariz(&ring, &ctx.opts(Mode::Random).degree(3).trunc(8).samples(10_000))?;
    ctx.push("hurwitz-armendariz", "Z", v);
    ctx.note("elements outside J are required to be regular in R itself");
    Ok(())
}

fn cor3_12_split(ctx: &mut Ctx) -> Result<()> {
    let cases = [
        (Recipe::Prod(vec![Recipe::Z, Recipe::Z]), "(1,0)", ctx.opts(Mode::Random).degree(2).samples(2000)),
        (Recipe::Zn(6), "3", ctx.opts(Mode::Directed).degree(2)),
    ];
    for (recipe, e, opts) in cases {
        let ring = ctx.build(&recipe)?;
        let label = recipe.to_string();
        let e = ring.parse(e)?;
        let split = check_idempotent_split(&ring, &e, &opts)?;
        let corner = split.corner.label().to_owned();
        let complement = split.complement.label().to_owned();
        let bounds = split.whole.bounds;
        ctx.push("hurwitz-armendariz", &label, split.whole);
        ctx.push("hurwitz-armendariz", &corner, split.on_corner);
        ctx.push("hurwitz-armendariz", &complement, split.on_complement);
        let agree = if split.contradiction {
            Verdict::unknown(bounds, "the three verdicts contradict the corner equivalence")
        } else {
            Verdict::holds(bounds)
        };
        ctx.push("corner-equivalence", &label, agree);
    }
    Ok(())
}

fn cor3_12_final_counterexample(ctx: &mut Ctx) -> Result<()> {
    let recipe = Recipe::UT(b(Recipe::Zn(3)), 2);
    let ring = ctx.build(&recipe)?;
    let label = recipe.to_string();
    let v = check_abelian(&ring, &ctx.opts(Mode::Exhaustive))?;
    ctx.push("abelian", &label, v);
    let v = check_armendariz(&ring, &ctx.opts(Mode::Directed).degree(1))?;
    ctx.push("armendariz", &label, v);
    let e12 = "[[0,1],[0,0]]";
    let ideal = ideal_closure(&ring, &elems(&ring, &[e12])?)?;
    let v = check_ideal_armendariz(&ring, &ideal.elements(), Product::Ordinary, &ctx.opts(Mode::Exhaustive).degree(2))?;
    ctx.push("armendariz on I", &label, v);
    let quotient = Recipe::Quot { base: b(recipe.clone()), ideal: strings(&[e12]) };
    let q = ctx.build(&quotient)?;
    let v = check_armendariz(&q, &ctx.opts(Mode::Directed).degree(1))?;
    ctx.push("armendariz", &quotient.to_string(), v);
    let v = check_armendariz(&q, &ctx.opts(Mode::Exhaustive).degree(2))?;
    ctx.push("armendariz", &quotient.to_string(), v);
    let v = check_ifp(&ring, &ctx.opts(Mode::Exhaustive))?;
    ctx.push("ifp", &label, v);
    ctx.note("I = strictly upper triangular matrices, R/I = Zn(3) x Zn(3); R/I has characteristic 3, so the Hurwitz-type reading fails there too");
    Ok(())
}
