//! Command implementations, independent of argument parsing.

use std::fmt::Write as _;
use std::time::Instant;

use hurwitz_core::properties::{
    check_abelian, check_annihilator_maps, check_armendariz, check_baer, check_constant_idempotent_jets,
    check_hurwitz_armendariz, check_ifp, check_pp, check_radical_chain, check_reduced, check_semiprime,
    scan_baer_transfer, scan_pp_transfer, SearchOpts, DEFAULT_BUDGET,
};
use hurwitz_core::ring::{idempotents, left_annihilator, right_annihilator, Elem};
use hurwitz_core::scenarios::{find_scenario, registry, run_scenario_seeded, Report};
use hurwitz_core::{Error as CoreError, Mode, Ring, Status, Verdict};
use serde::Serialize;

use crate::dsl::{parse_ring_spec, parse_set_literal, validate, SpecError, ValidateError};
use crate::output::{exit_code, render_text, to_json, JsonCheck, JsonReport};

pub const PROPERTIES: &[&str] = &[
    "reduced",
    "semiprime",
    "abelian",
    "ifp",
    "armendariz",
    "hurwitz-armendariz",
    "baer",
    "pp",
    "radical-chain",
    "baer-transfer",
    "pp-transfer",
    "annihilator-maps",
];

/// Exit code for usage and parse errors.
pub const EXIT_USAGE: u8 = 3;
/// Exit code for missing capabilities and exhausted budgets.
pub const EXIT_RESOURCE: u8 = 4;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Spec(SpecError),
    Core(CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Spec(_) => EXIT_USAGE,
            CliError::Core(CoreError::CapabilityMissing(_) | CoreError::BudgetExceeded(_) | CoreError::Internal(_)) => {
                EXIT_RESOURCE
            }
            CliError::Core(_) => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Spec(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> Self {
        CliError::Spec(e)
    }
}

impl From<ValidateError> for CliError {
    fn from(e: ValidateError) -> Self {
        match e {
            ValidateError::Spec(e) => CliError::Spec(e),
            ValidateError::Core(e) => CliError::Core(e),
        }
    }
}

/// Search flags shared by `check` and friends.
#[derive(Clone, Debug)]
pub struct Flags {
    pub deg: usize,
    pub trunc: usize,
    pub mode: Mode,
    pub samples: u64,
    pub seed: u64,
    pub json: bool,
    pub budget: u64,
    pub timing: bool,
}

impl Default for Flags {
    fn default() -> Flags {
        let d = SearchOpts::default();
        Flags {
            deg: d.degree,
            trunc: d.trunc,
            mode: d.mode,
            samples: d.samples,
            seed: d.seed,
            json: false,
            budget: DEFAULT_BUDGET,
            timing: false,
        }
    }
}

impl Flags {
    fn opts(&self) -> SearchOpts {
        SearchOpts::new(self.mode)
            .degree(self.deg)
            .trunc(self.trunc)
            .samples(self.samples)
            .seed(self.seed)
            .budget(self.budget)
    }
}

/// What a command prints and the code it exits with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub output: String,
}

pub fn parse_mode(s: &str) -> Result<Mode, CliError> {
    match s {
        "exhaustive" | "random" | "directed" => Ok(Mode::parse(s).expect("listed modes parse")),
        other => Err(CliError::Usage(format!("unknown mode `{other}`; use exhaustive, random or directed"))),
    }
}

pub fn load_ring(text: &str) -> Result<Ring, CliError> {
    let spec = parse_ring_spec(text)?;
    Ok(validate(&spec)?)
}

fn parse_elements(ring: &Ring, set: &str) -> Result<Vec<Elem>, CliError> {
    let lits = parse_set_literal(set)?;
    lits.iter()
        .map(|lit| {
            ring.parse(&lit.value).map_err(|e| {
                CliError::Spec(SpecError::Literal {
                    line: lit.span.line,
                    col: lit.span.col,
                    literal: lit.value.clone(),
                    message: e.to_string(),
                })
            })
        })
        .collect()
}

fn elapsed_ms(start: Instant, flags: &Flags) -> u64 {
    if flags.timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    }
}

fn report_outcome(report: &Report, start: Instant, flags: &Flags) -> Outcome {
    let ms = elapsed_ms(start, flags);
    let output = if flags.json {
        to_json(&JsonReport::from_report(report, ms))
    } else {
        render_text(report, flags.timing.then_some(ms))
    };
    Outcome { code: exit_code(report.overall()), output }
}

fn run_property(ring: &Ring, property: &str, flags: &Flags) -> Result<(Verdict, Vec<String>), CliError> {
    let opts = flags.opts();
    let mut notes = Vec::new();
    let v = match property {
        "reduced" => check_reduced(ring, &opts)?,
        "semiprime" => check_semiprime(ring, &opts)?,
        "abelian" => check_abelian(ring, &opts)?,
        "ifp" => check_ifp(ring, &opts)?,
        "armendariz" => check_armendariz(ring, &opts)?,
        "hurwitz-armendariz" => check_hurwitz_armendariz(ring, &opts)?,
        "baer" => check_baer(ring)?,
        "pp" => check_pp(ring)?,
        "radical-chain" => {
            let chain = check_radical_chain(ring)?;
            let r = &chain.radicals;
            notes.push(format!(
                "|N| = {}, |N_*| = {}, |N^*| = {}, |J| = {}; ifp {}",
                r.nilpotents.len(),
                r.lower.len(),
                r.upper.len(),
                r.jacobson.len(),
                chain.ifp.status
            ));
            if !chain.consistent {
                notes.push("inconsistent: IFP holds but the radicals differ".into());
            }
            chain.verdict
        }
        "baer-transfer" => scan_baer_transfer(ring, &opts)?,
        "pp-transfer" => scan_pp_transfer(ring, &opts)?,
        "annihilator-maps" => check_annihilator_maps(ring, &opts)?,
        other => {
            return Err(CliError::Usage(format!("unknown property `{other}`; known: {}", PROPERTIES.join(", "))));
        }
    };
    Ok((v, notes))
}

pub fn cmd_check(property: &str, ring_text: &str, flags: &Flags) -> Result<Outcome, CliError> {
    if !PROPERTIES.contains(&property) {
        return Err(CliError::Usage(format!("unknown property `{property}`; known: {}", PROPERTIES.join(", "))));
    }
    let start = Instant::now();
    let ring = load_ring(ring_text)?;
    let (verdict, notes) = run_property(&ring, property, flags)?;
    let mut report = Report::single(ring.label(), property, verdict, flags.seed);
    report.narrative.extend(notes);
    Ok(report_outcome(&report, start, flags))
}

/// Runs one scenario, or every scenario for `all`. `seed` overrides each
/// scenario's own seed.
pub fn cmd_reproduce(id: &str, seed: Option<u64>, flags: &Flags) -> Result<Outcome, CliError> {
    let ids: Vec<&str> =
        if id == "all" { registry().iter().map(|s| s.id).collect() } else { vec![find_scenario(id)?.id] };
    let mut reports = Vec::new();
    for id in &ids {
        let start = Instant::now();
        let scenario = find_scenario(id)?;
        let report = run_scenario_seeded(id, seed.unwrap_or(scenario.seed))?;
        reports.push((report, elapsed_ms(start, flags)));
    }
    let worst = reports
        .iter()
        .map(|(r, _)| r.overall())
        .max_by_key(|s| match s {
            Status::Holds => 0,
            Status::Unknown => 1,
            Status::Fails => 2,
        })
        .unwrap_or(Status::Holds);
    let output = if flags.json {
        let json: Vec<JsonReport> = reports.iter().map(|(r, ms)| JsonReport::from_report(r, *ms)).collect();
        if id == "all" {
            to_json(&json)
        } else {
            to_json(&json[0])
        }
    } else {
        let texts: Vec<String> = reports.iter().map(|(r, ms)| render_text(r, flags.timing.then_some(*ms))).collect();
        texts.join("\n")
    };
    Ok(Outcome { code: exit_code(worst), output })
}

#[derive(Serialize)]
struct RadicalsJson {
    ring: String,
    nilpotents: Vec<String>,
    lower_nilradical: Vec<String>,
    upper_nilradical: Vec<String>,
    jacobson: Vec<String>,
    collapses: bool,
}

fn render_all(ring: &Ring, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|x| ring.render(x)).collect()
}

fn braces(xs: &[String]) -> String {
    format!("{{{}}}", xs.join(","))
}

/// The nilpotent set and the three radicals; exits 0 when they all agree.
pub fn cmd_radicals(ring_text: &str, flags: &Flags) -> Result<Outcome, CliError> {
    let ring = load_ring(ring_text)?;
    let r = hurwitz_core::ring::radicals(&ring)?;
    let data = RadicalsJson {
        ring: ring.label().to_string(),
        nilpotents: render_all(&ring, &r.nilpotents),
        lower_nilradical: render_all(&ring, &r.lower.elements()),
        upper_nilradical: render_all(&ring, &r.upper.elements()),
        jacobson: render_all(&ring, &r.jacobson.elements()),
        collapses: r.chain_collapses(),
    };
    let output = if flags.json {
        to_json(&data)
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "ring {}", data.ring);
        let _ = writeln!(s, "  N(R)  {}", braces(&data.nilpotents));
        let _ = writeln!(s, "  N_*   {}", braces(&data.lower_nilradical));
        let _ = writeln!(s, "  N^*   {}", braces(&data.upper_nilradical));
        let _ = writeln!(s, "  J(R)  {}", braces(&data.jacobson));
        let _ = writeln!(s, "chain collapses: {}", data.collapses);
        s
    };
    Ok(Outcome { code: if data.collapses { 0 } else { 1 }, output })
}

#[derive(Serialize)]
struct AnnihilatorJson {
    ring: String,
    set: Vec<String>,
    right: Vec<String>,
    right_generator: Option<String>,
    left: Vec<String>,
    left_generator: Option<String>,
}

/// An idempotent `e` with `eR = ann` (right) or `Re = ann` (left).
fn idempotent_generator(ring: &Ring, ann: &[Elem], right: bool) -> Result<Option<Elem>, CliError> {
    let all: Vec<Elem> = ring.elements()?.collect();
    let mut target: Vec<u64> = ann.iter().map(|x| ring.index_of(x)).collect::<Result<_, _>>()?;
    target.sort_unstable();
    for e in idempotents(ring)? {
        let mut generated: Vec<u64> = all
            .iter()
            .map(|r| ring.index_of(&if right { ring.mul(&e, r) } else { ring.mul(r, &e) }))
            .collect::<Result<_, _>>()?;
        generated.sort_unstable();
        generated.dedup();
        if generated == target {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// Right and left annihilators of a finite set, and an idempotent generating
/// each if there is one. Exits 0 when both are generated by idempotents.
pub fn cmd_annihilator(ring_text: &str, set: &str, flags: &Flags) -> Result<Outcome, CliError> {
    let ring = load_ring(ring_text)?;
    let elems = parse_elements(&ring, set)?;
    let right = right_annihilator(&ring, &elems)?;
    let left = left_annihilator(&ring, &elems)?;
    let right_gen = idempotent_generator(&ring, &right, true)?;
    let left_gen = idempotent_generator(&ring, &left, false)?;
    let data = AnnihilatorJson {
        ring: ring.label().to_string(),
        set: render_all(&ring, &elems),
        right: render_all(&ring, &right),
        right_generator: right_gen.as_ref().map(|e| ring.render(e)),
        left: render_all(&ring, &left),
        left_generator: left_gen.as_ref().map(|e| ring.render(e)),
    };
    let code = if data.right_generator.is_some() && data.left_generator.is_some() { 0 } else { 1 };
    let output = if flags.json {
        to_json(&data)
    } else {
        let generator = |g: &Option<String>| match g {
            Some(e) => format!("generated by the idempotent {e}"),
            None => "no idempotent generator".to_string(),
        };
        let mut s = String::new();
        let _ = writeln!(s, "ring {}", data.ring);
        let _ =
            writeln!(s, "  r({}) = {}; {}", braces(&data.set), braces(&data.right), generator(&data.right_generator));
        let _ = writeln!(s, "  l({}) = {}; {}", braces(&data.set), braces(&data.left), generator(&data.left_generator));
        s
    };
    Ok(Outcome { code, output })
}

#[derive(Serialize)]
struct JetsJson {
    ring: String,
    order: usize,
    jets: Vec<String>,
    check: JsonCheck,
}

/// All idempotent jets of the given order; exits 0 when all are constant.
pub fn cmd_idempotent_jets(ring_text: &str, order: usize, flags: &Flags) -> Result<Outcome, CliError> {
    let ring = load_ring(ring_text)?;
    let (jets, verdict) = check_constant_idempotent_jets(&ring, order, flags.seed)?;
    let rendered: Vec<String> = jets.iter().map(|j| j.render()).collect();
    let report = Report::single(ring.label(), "constant-idempotent-jets", verdict, flags.seed);
    let output = if flags.json {
        let json = JsonReport::from_report(&report, 0);
        let data = JetsJson {
            ring: ring.label().to_string(),
            order,
            jets: rendered,
            check: json.checks.into_iter().next().expect("one check"),
        };
        to_json(&data)
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "ring {}", ring.label());
        let _ = writeln!(s, "{} idempotent jets of order {order}", rendered.len());
        for j in &rendered {
            let _ = writeln!(s, "  {j}");
        }
        for line in &report.narrative {
            let _ = writeln!(s, "{line}");
        }
        s
    };
    Ok(Outcome { code: exit_code(report.overall()), output })
}
