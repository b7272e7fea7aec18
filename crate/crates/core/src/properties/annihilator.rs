//! Annihilator properties: Baer, p.p., their transfer to Hurwitz
//! polynomials, and the correspondence between annihilators in `R` and in
//! the polynomial ring.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

use super::search::{all_vectors, Mult};
use super::{check_hurwitz_armendariz, over_budget, space, SearchOpts};
use crate::hurwitz::Product;
use crate::ring::{FiniteTable, Ring};
use crate::verdict::{Bounds, Claim, Mode, Side, Verdict, Witness};
use crate::{Error, Result};

/// Distinct intersections explored before the Baer check gives up.
const LATTICE_LIMIT: usize = 1 << 14;

type Bits = Vec<bool>;

fn right_ann(t: &FiniteTable, set: &[u32]) -> Bits {
    t.indices().map(|x| set.iter().all(|&a| t.mul(a, x) == t.zero())).collect()
}

fn left_ann(t: &FiniteTable, set: &[u32]) -> Bits {
    t.indices().map(|x| set.iter().all(|&a| t.mul(x, a) == t.zero())).collect()
}

/// `eR` (right side) or `Re` (left side) for every idempotent `e`, in order.
fn idempotent_ideals(t: &FiniteTable, side: Side) -> Vec<(u32, Bits)> {
    t.indices()
        .filter(|&e| t.mul(e, e) == e)
        .map(|e| {
            let mut bits = vec![false; t.len()];
            for x in t.indices() {
                let y = match side {
                    Side::Right => t.mul(e, x),
                    Side::Left => t.mul(x, e),
                };
                bits[y as usize] = true;
            }
            (e, bits)
        })
        .collect()
}

fn generator(ideals: &[(u32, Bits)], bits: &Bits) -> Option<u32> {
    ideals.iter().find(|(_, b)| b == bits).map(|(e, _)| *e)
}

fn bits_elems(ring: &Ring, t: &FiniteTable, bits: &Bits) -> Vec<crate::Elem> {
    t.indices().filter(|&i| bits[i as usize]).map(|i| ring.wrap(t.value(i).clone())).collect()
}

fn elems(ring: &Ring, t: &FiniteTable, xs: &[u32]) -> Vec<crate::Elem> {
    xs.iter().map(|&i| ring.wrap(t.value(i).clone())).collect()
}

fn element_bounds(samples: u64) -> Bounds {
    Bounds { samples, ..Bounds::new(Mode::Exhaustive) }
}

/// Every right annihilator of a nonempty subset is `eR` for an idempotent
/// `e`. Such annihilators are the intersections of singleton annihilators;
/// that lattice is closed under intersection and each member tested.
pub fn check_baer(ring: &Ring) -> Result<Verdict> {
    if ring.is_trivial() {
        return Ok(Verdict::trivial(Bounds::new(Mode::Exhaustive)));
    }
    let t = ring.table()?;
    let ideals = idempotent_ideals(t, Side::Right);
    let singles: Vec<Bits> = t.indices().map(|a| right_ann(t, &[a])).collect();
    let mut seen: BTreeMap<Bits, ()> = BTreeMap::new();
    let mut members: Vec<(Bits, Vec<u32>)> = Vec::new();
    let fail = |members: &[(Bits, Vec<u32>)]| -> Option<Verdict> {
        let (bits, set) = members.last()?;
        if generator(&ideals, bits).is_some() {
            return None;
        }
        let claim =
            Claim::Annihilator { side: Side::Right, set: elems(ring, t, set), annihilator: bits_elems(ring, t, bits) };
        Some(Verdict::fails(element_bounds(members.len() as u64), Witness::new(ring, claim)))
    };
    for a in t.indices() {
        let bits = singles[a as usize].clone();
        if seen.insert(bits.clone(), ()).is_none() {
            members.push((bits, vec![a]));
            if let Some(v) = fail(&members) {
                return Ok(v);
            }
        }
    }
    let mut k = 0;
    while k < members.len() {
        let (bits, set) = members[k].clone();
        for a in t.indices() {
            let meet: Bits = bits.iter().zip(&singles[a as usize]).map(|(x, y)| *x && *y).collect();
            if seen.contains_key(&meet) {
                continue;
            }
            if members.len() >= LATTICE_LIMIT {
                return Err(over_budget("annihilator lattice", LATTICE_LIMIT as u64 + 1, LATTICE_LIMIT as u64));
            }
            let mut set = set.clone();
            set.push(a);
            seen.insert(meet.clone(), ());
            members.push((meet, set));
            if let Some(v) = fail(&members) {
                return Ok(v);
            }
        }
        k += 1;
    }
    Ok(Verdict::holds(element_bounds(members.len() as u64)))
}

/// Every `r(a)` is `eR` and every `l(a)` is `Re` for idempotents `e`.
pub fn check_pp(ring: &Ring) -> Result<Verdict> {
    if ring.is_trivial() {
        return Ok(Verdict::trivial(Bounds::new(Mode::Exhaustive)));
    }
    let t = ring.table()?;
    let right = idempotent_ideals(t, Side::Right);
    let left = idempotent_ideals(t, Side::Left);
    for a in t.indices() {
        for (side, bits, ideals) in [(Side::Right, right_ann(t, &[a]), &right), (Side::Left, left_ann(t, &[a]), &left)]
        {
            if generator(ideals, &bits).is_none() {
                let claim =
                    Claim::Annihilator { side, set: elems(ring, t, &[a]), annihilator: bits_elems(ring, t, &bits) };
                return Ok(Verdict::fails(element_bounds(a as u64 + 1), Witness::new(ring, claim)));
            }
        }
    }
    Ok(Verdict::holds(element_bounds(t.len() as u64)))
}

fn require_hypotheses(ring: &Ring, base: Verdict, name: &str, opts: &SearchOpts) -> Result<()> {
    if !base.is_holds() {
        return Err(Error::HypothesisNotEstablished(format!("{ring} is not {name} ({})", base.status)));
    }
    let directed = SearchOpts { mode: Mode::Directed, ..*opts };
    let ha = check_hurwitz_armendariz(ring, &directed)?;
    if !ha.is_holds() {
        return Err(Error::HypothesisNotEstablished(format!(
            "{ring} is not Armendariz of the Hurwitz series type at degree {} ({})",
            opts.degree, ha.status
        )));
    }
    Ok(())
}

/// Baer transfer with the theorem's hypotheses checked first.
pub fn check_baer_transfer(ring: &Ring, opts: &SearchOpts) -> Result<Verdict> {
    require_hypotheses(ring, check_baer(ring)?, "Baer", opts)?;
    scan_baer_transfer(ring, opts)
}

/// p.p. transfer with the theorem's hypotheses checked first.
pub fn check_pp_transfer(ring: &Ring, opts: &SearchOpts) -> Result<Verdict> {
    require_hypotheses(ring, check_pp(ring)?, "p.p.", opts)?;
    scan_pp_transfer(ring, opts)
}

/// A random polynomial whose coefficients are all left multiples `z r` of one
/// random `z`, so its coefficient set has a nontrivial annihilator more often
/// than a uniform draw would.
fn draw_poly(t: &FiniteTable, len: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let n = t.len() as u32;
    let z = rng.gen_range(0..n);
    (0..len).map(|_| t.mul(z, rng.gen_range(0..n))).collect()
}

/// The sampled sets: `{0}`, `{1}`, then random sets of one to three polynomials.
fn draw_sets(t: &FiniteTable, opts: &SearchOpts, single: bool) -> Vec<Vec<Vec<u32>>> {
    let mut rng = opts.rng();
    let mut out = vec![vec![vec![t.zero()]], vec![vec![t.one()]]];
    while (out.len() as u64) < opts.samples.max(2) {
        let k = if single { 1 } else { rng.gen_range(1..=3) };
        let set = (0..k).map(|_| draw_poly(t, opts.degree + 1, &mut rng)).collect();
        out.push(set);
    }
    out.truncate(opts.samples.max(1) as usize);
    out
}

fn coefficient_union(set: &[Vec<u32>]) -> Vec<u32> {
    let mut cs: Vec<u32> = set.iter().flatten().copied().collect();
    cs.sort_unstable();
    cs.dedup();
    cs
}

fn annihilates(t: &FiniteTable, m: &Mult, side: Side, set: &[Vec<u32>], g: &[u32]) -> bool {
    set.iter().all(|f| match side {
        Side::Right => m.vanishes(t, f, g),
        Side::Left => m.vanishes(t, g, f),
    })
}

fn polys(ring: &Ring, t: &FiniteTable, set: &[Vec<u32>]) -> Vec<Vec<crate::Elem>> {
    set.iter().map(|f| elems(ring, t, f)).collect()
}

/// Shared driver of the transfer scans: for each sampled set `A` with
/// coefficient annihilator `e R` (resp. `R e`), every `g` of degree at most
/// `d` must satisfy `A g = 0` exactly when `e g = g` (resp. `g A = 0` exactly
/// when `g e = g`).
fn transfer(ring: &Ring, opts: &SearchOpts, sides: &[Side], single: bool) -> Result<Verdict> {
    if ring.is_trivial() {
        return Ok(Verdict::trivial(opts.bounds(0)));
    }
    let t = ring.table()?;
    let per_set = space(t.len() as u64, opts.degree + 1);
    let cost = per_set.saturating_mul(opts.samples).saturating_mul(sides.len() as u64);
    if cost > opts.budget {
        return Err(over_budget("transfer scan", cost, opts.budget));
    }
    let all: Vec<u32> = t.indices().collect();
    let gs = all_vectors(&all, opts.degree + 1);
    let m = Mult::new(t.characteristic(), Product::Hurwitz, opts.degree + 1);
    let bounds = |count| Bounds { mode: Mode::Exhaustive, ..opts.bounds(count) };
    let ideals: Vec<(Side, Vec<(u32, Bits)>)> = sides.iter().map(|&s| (s, idempotent_ideals(t, s))).collect();
    let mut skipped = 0u64;
    let mut tested = 0u64;
    for set in draw_sets(t, opts, single) {
        let cs = coefficient_union(&set);
        for (side, ideals) in &ideals {
            let ann = match side {
                Side::Right => right_ann(t, &cs),
                Side::Left => left_ann(t, &cs),
            };
            let Some(e) = generator(ideals, &ann) else {
                skipped += 1;
                continue;
            };
            tested += 1;
            for g in &gs {
                let killed = annihilates(t, &m, *side, &set, g);
                let fixed = g.iter().all(|&c| {
                    let y = match side {
                        Side::Right => t.mul(e, c),
                        Side::Left => t.mul(c, e),
                    };
                    y == c
                });
                if killed != fixed {
                    let claim = Claim::Transfer {
                        side: *side,
                        set: polys(ring, t, &set),
                        g: elems(ring, t, g),
                        e: ring.wrap(t.value(e).clone()),
                    };
                    return Ok(Verdict::fails(bounds(tested), Witness::new(ring, claim)));
                }
            }
        }
    }
    let v = Verdict::holds(bounds(tested));
    Ok(if skipped > 0 {
        v.with_note(format!("{skipped} sampled instances had no idempotent generator and were skipped"))
    } else {
        v
    })
}

/// Ungated Baer transfer scan on exact Hurwitz polynomials.
pub fn scan_baer_transfer(ring: &Ring, opts: &SearchOpts) -> Result<Verdict> {
    transfer(ring, opts, &[Side::Right], false)
}

/// Ungated p.p. transfer scan, single polynomials, both sides.
pub fn scan_pp_transfer(ring: &Ring, opts: &SearchOpts) -> Result<Verdict> {
    transfer(ring, opts, &[Side::Right, Side::Left], true)
}

/// How many polynomials of bounded degree a constant set annihilates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnnihilatorCount {
    pub annihilated: u64,
    pub total: u64,
}

impl AnnihilatorCount {
    /// Polynomials of degree at most `degree` with `U g = 0`.
    pub fn of(ring: &Ring, set: &[crate::Elem], degree: usize) -> Result<AnnihilatorCount> {
        let t = ring.table()?;
        let us: Vec<Vec<u32>> = set.iter().map(|u| ring.index_of(u).map(|i| vec![i as u32])).collect::<Result<_>>()?;
        let all: Vec<u32> = t.indices().collect();
        let m = Mult::new(t.characteristic(), Product::Hurwitz, degree + 1);
        let gs = all_vectors(&all, degree + 1);
        let annihilated = gs.iter().filter(|g| annihilates(t, &m, Side::Right, &us, g)).count() as u64;
        Ok(AnnihilatorCount { annihilated, total: gs.len() as u64 })
    }
}

/// For constant sets `U`, `U g = 0` exactly when every coefficient of `g`
/// lies in `r(U)`. Tests every singleton and `samples` random subsets
/// against every `g` of degree at most `d`.
pub fn scan_constant_annihilators(ring: &Ring, opts: &SearchOpts) -> Result<Verdict> {
    if ring.is_trivial() {
        return Ok(Verdict::trivial(opts.bounds(0)));
    }
    let t = ring.table()?;
    let mut rng = opts.rng();
    let n = t.len() as u32;
    let mut sets: Vec<Vec<u32>> = t.indices().map(|u| vec![u]).collect();
    for _ in 0..opts.samples {
        let k = rng.gen_range(2..=3);
        sets.push((0..k).map(|_| rng.gen_range(0..n)).collect());
    }
    let cost = space(n as u64, opts.degree + 1).saturating_mul(sets.len() as u64);
    if cost > opts.budget {
        return Err(over_budget("constant annihilator scan", cost, opts.budget));
    }
    let sets: Vec<Vec<Vec<u32>>> = sets.into_iter().map(|s| s.into_iter().map(|u| vec![u]).collect()).collect();
    correspondence(ring, t, opts, sets)
}

/// For sampled finite sets `V` of polynomials, `V g = 0` exactly when every
/// coefficient of `g` lies in `r(C_V)`. This is the bounded form of the
/// annihilator correspondence, which needs the Hurwitz-type Armendariz
/// property: a failure on a ring verified to have it is an inconsistency.
pub fn scan_polynomial_annihilators(ring: &Ring, opts: &SearchOpts) -> Result<Verdict> {
    if ring.is_trivial() {
        return Ok(Verdict::trivial(opts.bounds(0)));
    }
    let t = ring.table()?;
    let cost = space(t.len() as u64, opts.degree + 1).saturating_mul(opts.samples);
    if cost > opts.budget {
        return Err(over_budget("polynomial annihilator scan", cost, opts.budget));
    }
    let sets = draw_sets(t, opts, false);
    correspondence(ring, t, opts, sets)
}

fn correspondence(ring: &Ring, t: &FiniteTable, opts: &SearchOpts, sets: Vec<Vec<Vec<u32>>>) -> Result<Verdict> {
    let all: Vec<u32> = t.indices().collect();
    let gs = all_vectors(&all, opts.degree + 1);
    let m = Mult::new(t.characteristic(), Product::Hurwitz, opts.degree + 1);
    let mut tested = 0u64;
    for set in &sets {
        tested += 1;
        let ann = right_ann(t, &coefficient_union(set));
        for g in &gs {
            let killed = annihilates(t, &m, Side::Right, set, g);
            let inside = g.iter().all(|&c| ann[c as usize]);
            if killed != inside {
                let claim = Claim::AnnihilatorMap { set: polys(ring, t, set), g: elems(ring, t, g) };
                let bounds = Bounds { mode: Mode::Exhaustive, ..opts.bounds(tested) };
                return Ok(Verdict::fails(bounds, Witness::new(ring, claim)));
            }
        }
    }
    Ok(Verdict::holds(Bounds { mode: Mode::Exhaustive, ..opts.bounds(tested) }))
}

/// Both halves of the annihilator correspondence; the constant half first.
pub fn check_annihilator_maps(ring: &Ring, opts: &SearchOpts) -> Result<Verdict> {
    let constant = scan_constant_annihilators(ring, opts)?;
    if !constant.is_holds() {
        return Ok(constant);
    }
    scan_polynomial_annihilators(ring, opts)
}
