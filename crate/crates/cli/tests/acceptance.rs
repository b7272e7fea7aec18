//! Acceptance criteria AC1-AC11, one line each. Exits non-zero if any fails.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hurwitz_core::constructions::{Endo, Recipe};
use hurwitz_core::hurwitz::{
    geometric_inverse_jet, idempotent_jets, jet_mul, multiply, one_minus_rx, HurwitzJet, Product,
};
use hurwitz_core::properties::{
    check_armendariz, check_baer, check_hurwitz_armendariz, check_ifp, check_square_zero_regular, scan_baer_transfer,
    scan_constant_annihilators, scan_polynomial_annihilators, SearchOpts,
};
use hurwitz_core::ring::{radicals, Elem};
use hurwitz_core::scenarios::{run_scenario, scenario_ids, Report};
use hurwitz_core::verdict::Claim;
use hurwitz_core::{Mode, Ring, Status, Verdict};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

type Criterion = fn() -> Result<Outcome, String>;

fn b(r: Recipe) -> Box<Recipe> {
    Box::new(r)
}

fn build(r: &Recipe) -> Result<Ring, String> {
    r.build().map_err(|e| format!("{r}: {e}"))
}

fn gf4() -> Recipe {
    Recipe::GF { p: 2, modulus: Some(vec![1, 1, 1]) }
}

fn e<T>(r: hurwitz_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn rendered_set(ring: &Ring, xs: &[Elem]) -> Vec<String> {
    let mut v: Vec<String> = xs.iter().map(|x| ring.render(x)).collect();
    v.sort();
    v
}

/// The displayed low coefficients a0b0, a0b1 + a1b0, a0b2 + 2a1b1 + a2b0,
/// a0b3 + 3a1b2 + 3a2b1 + a3b0, written out term by term.
fn displayed_expansion(ring: &Ring, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let t = |i: usize, j: usize, k: i64| ring.scale(k, &ring.mul(&a[i], &b[j]));
    let sum = |xs: &[Elem]| xs.iter().fold(ring.zero(), |acc, x| ring.add(&acc, x));
    vec![
        t(0, 0, 1),
        sum(&[t(0, 1, 1), t(1, 0, 1)]),
        sum(&[t(0, 2, 1), t(1, 1, 2), t(2, 0, 1)]),
        sum(&[t(0, 3, 1), t(1, 2, 3), t(2, 1, 3), t(3, 0, 1)]),
    ]
}

fn ac1() -> Result<Outcome, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut mismatches = 0;
    let mut tuples = 0;
    for recipe in [Recipe::Zn(7), Recipe::Mat(b(Recipe::Zn(2)), 2)] {
        let ring = build(&recipe)?;
        for _ in 0..1000 {
            let a: Vec<Elem> = (0..4).map(|_| ring.sample(&mut rng)).collect();
            let c: Vec<Elem> = (0..4).map(|_| ring.sample(&mut rng)).collect();
            let product = e(multiply(&ring, Product::Hurwitz, &a, &c))?;
            let want = displayed_expansion(&ring, &a, &c);
            let got = |n: usize| product.get(n).cloned().unwrap_or_else(|| ring.zero());
            if (0..4).any(|n| got(n) != want[n]) {
                mismatches += 1;
            }
            tuples += 1;
        }
    }
    Ok(outcome(mismatches == 0, format!("{tuples} tuples over Zn(7) and Mat(Zn(2),2), {mismatches} mismatches")))
}

fn ac2() -> Result<Outcome, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let rings = [Recipe::Zn(4), Recipe::Zn(5), gf4(), Recipe::Mat(b(Recipe::Zn(2)), 2), Recipe::Triv(b(Recipe::Zn(3)))];
    let mut failures = Vec::new();
    for recipe in &rings {
        let ring = build(recipe)?;
        for _ in 0..100 {
            let r = ring.sample(&mut rng);
            let product = e(jet_mul(&one_minus_rx(&ring, &r, 8), &geometric_inverse_jet(&ring, &r, 8)))?;
            if product != HurwitzJet::identity(&ring, 8) {
                failures.push(format!("{recipe} r={}", ring.render(&r)));
            }
        }
    }
    Ok(outcome(failures.is_empty(), format!("500 draws, order 8, {} failures {failures:?}", failures.len())))
}

fn ac3() -> Result<Outcome, String> {
    let report = e(run_scenario("ex2_1"))?;
    let mut details = Vec::new();
    let mut pass = report.checks.len() == 2;
    for check in &report.checks {
        let v = &check.verdict;
        let Some(w) = &v.witness else {
            pass = false;
            details.push(format!("{}: {}", check.property, v.status));
            continue;
        };
        let Claim::ZeroProduct { f, g, product: Product::Hurwitz, i, j } = w.claim() else {
            pass = false;
            continue;
        };
        let ring = w.ring();
        let exact_zero = e(multiply(ring, Product::Hurwitz, f, g))?.iter().all(|c| ring.is_zero(c));
        let value = ring.render(&ring.mul(&f[*i], &g[*j]));
        pass &= v.status == Status::Fails && w.revalidate() && exact_zero && value == "1*a*b*c";
        details.push(format!("{} -> {value}", ring.label()));
    }
    Ok(outcome(pass, format!("Fails with exact zero products: {}", details.join(", "))))
}

fn ac4() -> Result<Outcome, String> {
    let mut pass = true;
    let mut counts = Vec::new();
    let abelian = [Recipe::Zn(4), Recipe::Zn(6), Recipe::Zn(8), Recipe::Triv(b(Recipe::Zn(3)))];
    for recipe in &abelian {
        let ring = build(recipe)?;
        let jets = e(idempotent_jets(&ring, 4))?;
        pass &= jets.iter().all(HurwitzJet::is_constant);
        counts.push(format!("{recipe}:{}", jets.len()));
    }
    let ut = build(&Recipe::UT(b(Recipe::Zn(2)), 2))?;
    let jets: Vec<String> = e(idempotent_jets(&ut, 1))?.iter().map(HurwitzJet::render).collect();
    let found = jets.iter().any(|j| j == "<[[1,0],[0,0]],[[0,1],[0,0]]>");
    pass &= found;
    Ok(outcome(pass, format!("constant only for [{}]; UT(Zn(2),2) has <E11,E12>: {found}", counts.join(" "))))
}

fn ac5() -> Result<Outcome, String> {
    let mut pass = true;
    let mut notes = Vec::new();
    let rings = [
        Recipe::Zn(8),
        Recipe::Zn(12),
        Recipe::Triv(b(Recipe::Zn(4))),
        Recipe::CommQ { base: b(Recipe::GF { p: 3, modulus: None }), caps: vec![('x', 2), ('y', 2)] },
    ];
    for recipe in &rings {
        let ring = build(recipe)?;
        let r = e(radicals(&ring))?;
        let n = rendered_set(&ring, &r.nilpotents);
        let equal = n == rendered_set(&ring, &r.lower.elements()) && n == rendered_set(&ring, &r.jacobson.elements());
        pass &= equal;
        notes.push(format!("{recipe}: |N|={} equal={equal}", n.len()));
    }
    let m = build(&Recipe::Mat(b(Recipe::Zn(2)), 2))?;
    let r = e(radicals(&m))?;
    let ifp = e(check_ifp(&m, &SearchOpts::new(Mode::Exhaustive)))?;
    let split = r.lower.is_zero() && r.nilpotents.len() > 1 && ifp.is_fails();
    pass &= split;
    notes.push(format!("Mat(Zn(2),2): N_0={{0}}, |N|={}, ifp {}", r.nilpotents.len(), ifp.status));
    Ok(outcome(pass, notes.join("; ")))
}

fn ac6() -> Result<Outcome, String> {
    let gf2 = build(&Recipe::HJet(b(Recipe::GF { p: 2, modulus: None }), 1))?;
    let holds = e(check_armendariz(&gf2, &SearchOpts::new(Mode::Exhaustive).degree(2)))?;
    let z4 = build(&Recipe::HJet(b(Recipe::Zn(4)), 1))?;
    let fails = e(check_armendariz(&z4, &SearchOpts::new(Mode::Directed).degree(1)))?;
    let pass = holds.is_holds()
        && holds.bounds.mode == Mode::Exhaustive
        && holds.bounds.samples == 4096
        && fails.is_fails()
        && fails.bounds.samples <= 16u64.pow(4)
        && fails.witness.as_ref().is_some_and(|w| w.revalidate());
    let witness = fails.witness.as_ref().map(|w| format!("f={} g={}", w.fields().f, w.fields().g)).unwrap_or_default();
    Ok(outcome(
        pass,
        format!(
            "HJet(GF(2),1) {} over {} pairs; HJet(Zn(4),1) {} after {} tuples, {witness}",
            holds.status, holds.bounds.samples, fails.status, fails.bounds.samples
        ),
    ))
}

fn witness_text(v: &Verdict) -> String {
    match &v.witness {
        Some(w) => {
            let f = w.fields();
            format!("f={} g={} value={}", f.f, f.g, f.value)
        }
        None => String::new(),
    }
}

fn ac7() -> Result<Outcome, String> {
    let z6 = build(&Recipe::Zn(6))?;
    let z4 = build(&Recipe::Zn(4))?;
    let transfer = e(scan_baer_transfer(&z6, &SearchOpts::new(Mode::Exhaustive).degree(4).samples(200).seed(SEED)))?;
    let baer6 = e(check_baer(&z6))?;
    let baer4 = e(check_baer(&z4))?;
    let r2 = baer4.witness.as_ref().map(|w| w.fields().f == "{2}").unwrap_or(false);
    let pass = transfer.is_holds() && baer6.is_holds() && baer4.is_fails() && r2;
    let detail = format!(
        "Zn(6) transfer {} ({}); baer(Zn(6)) {}; baer(Zn(4)) {} at r(2)",
        transfer.status,
        if transfer.is_fails() { witness_text(&transfer) } else { format!("{} instances", transfer.bounds.samples) },
        baer6.status,
        baer4.status
    );
    Ok(outcome(pass, detail))
}

fn ac8() -> Result<Outcome, String> {
    let mut pass = true;
    let mut notes = Vec::new();
    for recipe in [Recipe::Zn(4), gf4()] {
        let ring = build(&recipe)?;
        let opts = SearchOpts::new(Mode::Exhaustive).degree(2).samples(50).seed(SEED);
        let constant = e(scan_constant_annihilators(&ring, &opts))?;
        let polys = e(scan_polynomial_annihilators(&ring, &opts))?;
        pass &= constant.is_holds() && polys.is_holds();
        notes.push(format!(
            "{recipe}: constant U {}, sampled V {} {}",
            constant.status,
            polys.status,
            witness_text(&polys)
        ));
    }
    Ok(outcome(pass, notes.join("; ")))
}

fn scenario_ok(id: &str, report: &Report, required: &[(&str, Status)]) -> Result<bool, String> {
    let mut ok = report.witnesses_valid();
    for (property, status) in required {
        match report.check(property) {
            Some(v) => ok &= v.status == *status,
            None => return Err(format!("{id} has no check `{property}`")),
        }
    }
    Ok(ok)
}

fn ac9() -> Result<Outcome, String> {
    let mut pass = true;
    let mut notes = Vec::new();
    let rem = e(run_scenario("rem3_3"))?;
    pass &= scenario_ok(
        "rem3_3",
        &rem,
        &[("armendariz (x+yT)(x-yT)", Status::Fails), ("hurwitz-armendariz (x+yT)(x-yT)", Status::Fails)],
    )?;
    let ex = e(run_scenario("ex3_11"))?;
    pass &= scenario_ok(
        "ex3_11",
        &ex,
        &[
            ("armendariz @ CommQ(GF(3),{x:2,y:2})", Status::Fails),
            ("armendariz @ CommQ(GF(3),{x:3,y:2})", Status::Fails),
        ],
    )?;
    let quat = e(run_scenario("rem2_7_4_quaternions"))?;
    pass &= scenario_ok("rem2_7_4_quaternions", &quat, &[("abelian", Status::Fails), ("armendariz", Status::Fails)])?;
    let ut = e(run_scenario("cor3_12_final_counterexample"))?;
    let quotient = "Quot(UT(Zn(3),2),[[[0,1],[0,0]]])";
    pass &= scenario_ok(
        "cor3_12_final_counterexample",
        &ut,
        &[
            ("abelian @ UT(Zn(3),2)", Status::Fails),
            ("armendariz @ UT(Zn(3),2)", Status::Fails),
            ("armendariz on I @ UT(Zn(3),2)", Status::Holds),
            (&format!("armendariz @ {quotient}"), Status::Holds),
        ],
    )?;
    for r in [&rem, &ex, &quat, &ut] {
        let fails = r.checks.iter().filter(|c| c.verdict.is_fails()).count();
        notes.push(format!("{} {fails} revalidated witnesses", r.scenario.as_deref().unwrap_or("?")));
    }
    Ok(outcome(pass, notes.join(", ")))
}

fn ac10() -> Result<Outcome, String> {
    let mut pass = true;
    let mut notes = Vec::new();
    let cases = [Recipe::Triv(b(Recipe::Zn(3))), Recipe::Twist { base: b(gf4()), endo: Endo::Frobenius }];
    for recipe in &cases {
        let ring = build(recipe)?;
        let j = e(ring.parse("(0|1)"))?;
        let opts = SearchOpts::new(Mode::Random).degree(3).samples(100_000).seed(SEED);
        let report = e(check_square_zero_regular(&ring, &[j], &opts))?;
        let v = report.verdict();
        pass &= report.hypotheses_hold() && v.is_holds();
        notes.push(format!(
            "{recipe}: hypotheses {}, search {} after {} pairs {}",
            report.hypotheses_hold(),
            v.status,
            v.bounds.samples,
            witness_text(&v)
        ));
    }
    let z = build(&Recipe::Z)?;
    let v =
        e(check_hurwitz_armendariz(&z, &SearchOpts::new(Mode::Random).degree(3).trunc(8).samples(10_000).seed(SEED)))?;
    pass &= v.is_holds();
    notes.push(format!("Z: {} over {} pairs at truncation 8", v.status, v.bounds.samples));
    Ok(outcome(pass, notes.join("; ")))
}

fn hurwitz(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .env_remove("HURWITZ_BUDGET")
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned()))
}

fn ac11() -> Result<Outcome, String> {
    let (_, first) = hurwitz(&["reproduce", "all", "--json"])?;
    let (_, second) = hurwitz(&["reproduce", "all", "--json"])?;
    let identical = first == second;
    let parsed: Value = serde_json::from_str(&first).map_err(|e| e.to_string())?;
    let reports = parsed.as_array().ok_or("not an array")?;
    let schema: Result<Vec<()>, String> = reports.iter().map(common::check_schema).collect();
    let golden: Value = serde_json::from_str(include_str!("golden/expectations.json")).map_err(|e| e.to_string())?;
    let mut mismatched = Vec::new();
    for case in golden["commands"].as_array().ok_or("golden commands")? {
        let args: Vec<&str> = case["args"].as_array().ok_or("args")?.iter().filter_map(Value::as_str).collect();
        let (code, _) = hurwitz(&args)?;
        if Some(code as u64) != case["exit"].as_u64() {
            mismatched.push(args.join(" "));
        }
    }
    for (id, expected) in golden["scenarios"].as_object().ok_or("golden scenarios")? {
        let (code, _) = hurwitz(&["reproduce", id])?;
        if Some(code as u64) != expected["exit"].as_u64() {
            mismatched.push(format!("reproduce {id}"));
        }
    }
    let pass = identical && schema.is_ok() && mismatched.is_empty() && reports.len() == scenario_ids().count();
    Ok(outcome(
        pass,
        format!(
            "{} reports, byte-identical {identical}, schema {}, exit-code mismatches {mismatched:?}",
            reports.len(),
            schema.err().unwrap_or_else(|| "ok".into())
        ),
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, Criterion, Duration); 11] = [
        ("AC1", "Hurwitz product expansion", ac1, Duration::from_secs(1)),
        ("AC2", "inverse of 1 - rx", ac2, Duration::from_secs(5)),
        ("AC3", "word-ring witness abc", ac3, Duration::from_secs(1)),
        ("AC4", "idempotent jets", ac4, Duration::from_secs(30)),
        ("AC5", "radical chain", ac5, Duration::from_secs(10)),
        ("AC6", "truncated jets at n = 2", ac6, Duration::from_secs(60)),
        ("AC7", "Baer and p.p. transfer", ac7, Duration::from_secs(60)),
        ("AC8", "annihilator maps", ac8, Duration::from_secs(60)),
        ("AC9", "counterexample battery", ac9, Duration::from_secs(60)),
        ("AC10", "positive battery", ac10, Duration::from_secs(120)),
        ("AC11", "determinism and schema", ac11, Duration::from_secs(600)),
    ];
    let mut passed = 0;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (pass, detail) = match result {
            Ok(o) => (o.pass && elapsed < limit, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        passed += pass as usize;
        println!(
            "{id:<5} {} {name}: {detail} [{} ms, limit {} ms]",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_millis(),
            limit.as_millis()
        );
    }
    println!("acceptance: {passed} of 11 criteria pass");
    if passed == 11 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
