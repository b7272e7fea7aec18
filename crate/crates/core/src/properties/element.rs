//! Element-level properties: reduced, semiprime, Abelian, IFP.

use alloc::vec::Vec;

use super::{exact_under_truncation, over_budget, SearchOpts};
use crate::ring::{Elem, FiniteTable, Ring};
use crate::verdict::{Claim, Mode, Verdict, Witness};
use crate::Result;

enum Scope<'a> {
    Table(&'a FiniteTable),
    Sample(Vec<Elem>),
}

/// Random draws added to the pool for rings without tables; the pairwise
/// scans are quadratic or cubic in this list.
const SAMPLE_CAP: u64 = 192;

/// Exhaustive over the operation table when there is one (and the caller did
/// not ask for random mode); otherwise the pool plus up to [`SAMPLE_CAP`]
/// random draws.
fn scope<'a>(ring: &'a Ring, opts: &SearchOpts) -> Result<Scope<'a>> {
    if opts.mode != Mode::Random {
        match ring.table() {
            Ok(t) => return Ok(Scope::Table(t)),
            Err(e) if opts.mode == Mode::Exhaustive => return Err(e),
            Err(_) => {}
        }
    }
    let mut rng = opts.rng();
    let mut xs = ring.pool();
    xs.extend((0..opts.samples.min(SAMPLE_CAP)).map(|_| ring.sample(&mut rng)));
    Ok(Scope::Sample(xs))
}

fn sample_mode(opts: &SearchOpts) -> Mode {
    if opts.mode == Mode::Random {
        Mode::Random
    } else {
        Mode::Directed
    }
}

fn el(ring: &Ring, t: &FiniteTable, i: u32) -> Elem {
    ring.wrap(t.value(i).clone())
}

/// No `x != 0` with `x^2 = 0`.
pub fn check_reduced(ring: &Ring, opts: &SearchOpts) -> Result<Verdict> {
    if ring.is_trivial() {
        return Ok(Verdict::trivial(opts.element_bounds(opts.mode, 0)));
    }
    match scope(ring, opts)? {
        Scope::Table(t) => {
            let bounds = opts.element_bounds(Mode::Exhaustive, t.len() as u64);
            for x in t.indices() {
                if x != t.zero() && t.mul(x, x) == t.zero() {
                    return Ok(Verdict::fails(bounds, Witness::new(ring, Claim::SquareZero { x: el(ring, t, x) })));
                }
            }
            Ok(Verdict::holds(bounds))
        }
        Scope::Sample(xs) => {
            let bounds = opts.element_bounds(sample_mode(opts), xs.len() as u64);
            for x in xs {
                if !ring.is_zero(&x) && ring.is_zero(&ring.mul(&x, &x)) {
                    let w = Witness::new(ring, Claim::SquareZero { x: x.clone() });
                    if exact_under_truncation(ring, &[core::slice::from_ref(&x), core::slice::from_ref(&x)]) {
                        return Ok(Verdict::fails(bounds, w));
                    }
                    return Ok(Verdict::unknown(bounds, "square-zero element only within the word-length cap"));
                }
            }
            Ok(Verdict::holds(bounds))
        }
    }
}

/// No `a != 0` with `aRa = 0`.
pub fn check_semiprime(ring: &Ring, opts: &SearchOpts) -> Result<Verdict> {
    if ring.is_trivial() {
        return Ok(Verdict::trivial(opts.element_bounds(opts.mode, 0)));
    }
    match scope(ring, opts)? {
        Scope::Table(t) => {
            let n = t.len() as u64;
            if n * n > opts.budget {
                return Err(over_budget("semiprime scan", n * n, opts.budget));
            }
            let bounds = opts.element_bounds(Mode::Exhaustive, n);
            for a in t.indices().filter(|&a| a != t.zero()) {
                if t.indices().all(|r| t.mul(t.mul(a, r), a) == t.zero()) {
                    let w = Witness::new(ring, Claim::NilpotentIdeal { a: el(ring, t, a) });
                    return Ok(Verdict::fails(bounds, w));
                }
            }
            Ok(Verdict::holds(bounds))
        }
        Scope::Sample(xs) => {
            let bounds = opts.element_bounds(sample_mode(opts), xs.len() as u64);
            for a in xs.iter().filter(|a| !ring.is_zero(a)) {
                if xs.iter().all(|r| ring.is_zero(&ring.mul(&ring.mul(a, r), a))) {
                    return Ok(Verdict::unknown(
                        bounds,
                        alloc::format!(
                            "{} kills every sampled r in aRa; not certifiable without enumeration",
                            ring.render(a)
                        ),
                    ));
                }
            }
            Ok(Verdict::holds(bounds))
        }
    }
}

/// Every idempotent is central.
pub fn check_abelian(ring: &Ring, opts: &SearchOpts) -> Result<Verdict> {
    if ring.is_trivial() {
        return Ok(Verdict::trivial(opts.element_bounds(opts.mode, 0)));
    }
    match scope(ring, opts)? {
        Scope::Table(t) => {
            let bounds = opts.element_bounds(Mode::Exhaustive, t.len() as u64);
            for e in t.indices().filter(|&e| t.mul(e, e) == e) {
                if let Some(r) = t.indices().find(|&r| t.mul(e, r) != t.mul(r, e)) {
                    let w = Witness::new(ring, Claim::NonCentral { e: el(ring, t, e), r: el(ring, t, r) });
                    return Ok(Verdict::fails(bounds, w));
                }
            }
            Ok(Verdict::holds(bounds))
        }
        Scope::Sample(xs) => {
            let bounds = opts.element_bounds(sample_mode(opts), xs.len() as u64);
            for e in xs.iter().filter(|e| ring.mul(e, e) == **e) {
                if let Some(r) = xs.iter().find(|r| ring.mul(e, r) != ring.mul(r, e)) {
                    let w = Witness::new(ring, Claim::NonCentral { e: e.clone(), r: r.clone() });
                    return Ok(Verdict::fails(bounds, w));
                }
            }
            Ok(Verdict::holds(bounds))
        }
    }
}

/// Insertion of factors: `ab = 0` implies `arb = 0` for all `r`.
pub fn check_ifp(ring: &Ring, opts: &SearchOpts) -> Result<Verdict> {
    if ring.is_trivial() {
        return Ok(Verdict::trivial(opts.element_bounds(opts.mode, 0)));
    }
    match scope(ring, opts)? {
        Scope::Table(t) => {
            let n = t.len() as u64;
            let pairs: Vec<(u32, u32)> = t
                .indices()
                .flat_map(|a| t.indices().map(move |b| (a, b)))
                .filter(|&(a, b)| a != t.zero() && b != t.zero() && t.mul(a, b) == t.zero())
                .collect();
            let cost = pairs.len() as u64 * n;
            if cost > opts.budget {
                return Err(over_budget("IFP scan", cost, opts.budget));
            }
            let bounds = opts.element_bounds(Mode::Exhaustive, pairs.len() as u64);
            for (a, b) in pairs {
                if let Some(r) = t.indices().find(|&r| t.mul(t.mul(a, r), b) != t.zero()) {
                    let claim = Claim::Insertion { a: el(ring, t, a), r: el(ring, t, r), b: el(ring, t, b) };
                    return Ok(Verdict::fails(bounds, Witness::new(ring, claim)));
                }
            }
            Ok(Verdict::holds(bounds))
        }
        Scope::Sample(xs) => {
            let mut count = 0u64;
            let mut candidate = None;
            for a in xs.iter().filter(|a| !ring.is_zero(a)) {
                for b in xs.iter().filter(|b| !ring.is_zero(b)) {
                    if !ring.is_zero(&ring.mul(a, b)) {
                        continue;
                    }
                    count += 1;
                    let Some(r) = xs.iter().find(|r| !ring.is_zero(&ring.mul(&ring.mul(a, r), b))) else {
                        continue;
                    };
                    let claim = Claim::Insertion { a: a.clone(), r: r.clone(), b: b.clone() };
                    if exact_under_truncation(ring, &[core::slice::from_ref(a), core::slice::from_ref(b)]) {
                        let bounds = opts.element_bounds(sample_mode(opts), count);
                        return Ok(Verdict::fails(bounds, Witness::new(ring, claim)));
                    }
                    candidate.get_or_insert(claim);
                }
            }
            let bounds = opts.element_bounds(sample_mode(opts), count);
            match candidate {
                Some(_) => Ok(Verdict::unknown(bounds, "insertion failures found only within the word-length cap")),
                None => Ok(Verdict::holds(bounds)),
            }
        }
    }
}
