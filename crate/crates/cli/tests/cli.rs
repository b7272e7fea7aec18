mod common;

use std::process::Command;

use hurwitz_cli::commands::{cmd_check, cmd_reproduce, Flags};
use hurwitz_cli::output::JsonReport;
use hurwitz_core::scenarios::run_scenario;
use hurwitz_core::Mode;
use serde_json::Value;

const GOLDEN: &str = include_str!("golden/expectations.json");

fn hurwitz(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hurwitz")).args(args).env_remove("HURWITZ_BUDGET").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn golden() -> Value {
    serde_json::from_str(GOLDEN).unwrap()
}

#[test]
fn exit_codes_match_the_golden_table() {
    for case in golden()["commands"].as_array().unwrap() {
        let args: Vec<&str> = case["args"].as_array().unwrap().iter().map(|a| a.as_str().unwrap()).collect();
        let (code, _, stderr) = hurwitz(&args);
        assert_eq!(code as u64, case["exit"].as_u64().unwrap(), "{args:?}: {stderr}");
    }
}

#[test]
fn scenario_statuses_match_the_golden_table() {
    let golden = golden();
    let table = golden["scenarios"].as_object().unwrap();
    assert_eq!(table.len(), hurwitz_core::scenarios::scenario_ids().count());
    for (id, expected) in table {
        let report = run_scenario(id).unwrap();
        assert!(report.witnesses_valid(), "{id}");
        let got: Vec<(String, String)> =
            report.checks.iter().map(|c| (c.property.clone(), c.verdict.status.as_str().to_string())).collect();
        let want: Vec<(String, String)> = expected["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| (c["property"].as_str().unwrap().to_string(), c["status"].as_str().unwrap().to_string()))
            .collect();
        assert_eq!(got, want, "{id}");
        let code = hurwitz_cli::output::exit_code(report.overall());
        assert_eq!(code as u64, expected["exit"].as_u64().unwrap(), "{id}");
    }
}

#[test]
fn word_ring_check_prints_the_witness() {
    let (code, stdout, _) = hurwitz(&[
        "check",
        "hurwitz-armendariz",
        "--ring",
        "FreeQ(GF(2),[a,b,c],[cc,ac,c*c],8)",
        "--deg",
        "2",
        "--json",
    ]);
    assert_eq!(code, 1);
    let report: JsonReport = serde_json::from_str(&stdout).unwrap();
    let w = report.checks[0].witness.as_ref().unwrap();
    assert_eq!((w.f.as_str(), w.g.as_str(), w.value.as_str()), ("<1*a,1*a*b>", "<1*c,1*b*c>", "1*a*b*c"));
}

#[test]
fn full_registry_json_is_stable_and_well_formed() {
    let (code, first, _) = hurwitz(&["reproduce", "all", "--json"]);
    let (_, second, _) = hurwitz(&["reproduce", "all", "--json"]);
    assert_eq!(code, 1);
    assert_eq!(first, second);
    let parsed: Value = serde_json::from_str(&first).unwrap();
    let reports = parsed.as_array().unwrap();
    assert_eq!(reports.len(), hurwitz_core::scenarios::scenario_ids().count());
    for r in reports {
        common::check_schema(r).unwrap();
        assert_eq!(r["timing_ms"], 0);
    }
}

#[test]
fn json_round_trips() {
    let out = cmd_reproduce("prop3_9_sqzero", None, &Flags { json: true, ..Flags::default() }).unwrap();
    let parsed: JsonReport = serde_json::from_str(&out.output).unwrap();
    assert_eq!(hurwitz_cli::output::to_json(&parsed), out.output);
    let holds = cmd_reproduce("prop2_4_inverse", None, &Flags { json: true, ..Flags::default() }).unwrap();
    assert!(holds.output.contains("\"status\": \"holds\""));
    assert!(!holds.output.contains("\"f\""));
    let parsed: Value = serde_json::from_str(&holds.output).unwrap();
    assert!(parsed["checks"].as_array().unwrap().iter().all(|c| c["witness"].is_null()));
}

#[test]
fn seed_determines_random_output() {
    let flags = |seed| Flags { json: true, mode: Mode::Random, deg: 3, samples: 2000, seed, ..Flags::default() };
    let run = |seed| cmd_check("hurwitz-armendariz", "Triv(Zn(3))", &flags(seed)).unwrap().output;
    assert_eq!(run(7), run(7));
    assert_ne!(run(7), run(8));
    let (_, a, _) = hurwitz(&["reproduce", "prop3_1_packing", "--seed", "5", "--json"]);
    let (_, b, _) = hurwitz(&["reproduce", "prop3_1_packing", "--seed", "5", "--json"]);
    assert_eq!(a, b);
    assert!(a.contains("\"seed\": 5"));
}

#[test]
fn timing_is_zero_unless_asked_for() {
    let (_, plain, _) = hurwitz(&["reproduce", "ex2_2", "--json"]);
    let (_, timed, _) = hurwitz(&["reproduce", "ex2_2", "--json", "--timing"]);
    let t = |s: &str| serde_json::from_str::<Value>(s).unwrap()["timing_ms"].as_u64().unwrap();
    assert_eq!(t(&plain), 0);
    assert!(t(&timed) > 0);
}

#[test]
fn budget_comes_from_the_environment_unless_given() {
    let args = ["check", "armendariz", "--ring", "Zn(4)", "--mode", "exhaustive", "--deg", "2"];
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_hurwitz"));
        cmd.args(args).args(extra);
        match env {
            Some(v) => cmd.env("HURWITZ_BUDGET", v),
            None => cmd.env_remove("HURWITZ_BUDGET"),
        };
        cmd.output().unwrap().status.code().unwrap()
    };
    assert_eq!(run(None, &[]), 0);
    assert_eq!(run(Some("100"), &[]), 4);
    assert_eq!(run(Some("100"), &["--budget", "5000"]), 0);
}

#[test]
fn out_writes_the_report_to_a_file() {
    let path = std::env::temp_dir().join(format!("hurwitz-cli-test-{}.json", std::process::id()));
    let (code, stdout, _) = hurwitz(&["reproduce", "ex2_1", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let report: JsonReport = serde_json::from_str(&written).unwrap();
    assert_eq!(report.scenario.as_deref(), Some("ex2_1"));
}

#[test]
fn parse_errors_name_the_position() {
    let (code, _, stderr) = hurwitz(&["check", "reduced", "--ring", "Zn()"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("arity error at 1:4"), "{stderr}");
    let (code, _, stderr) = hurwitz(&["check", "reduced", "--ring", "Quot(Zn(4),[2,q])"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("1:15"), "{stderr}");
}

#[test]
fn text_output_lists_checks() {
    let (code, stdout, _) = hurwitz(&["reproduce", "rem3_3"]);
    assert_eq!(code, 1);
    assert!(stdout.starts_with("scenario rem3_3 (seed 33)\nring CommQ(GF(3),{x:2,y:2})\n"), "{stdout}");
    assert!(stdout.contains("value=2*x*y"));
    let (code, stdout, _) = hurwitz(&["radicals", "--ring", "Zn(12)"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("N(R)  {0,6}"), "{stdout}");
}
