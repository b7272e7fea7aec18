//! Element- and ideal-level structure of finite rings: annihilators,
//! idempotents, nilpotents, units and the radicals.

use alloc::format;
use alloc::vec::Vec;

use super::ideal::{additive_closure, ideal_closure, nilpotency_index};
use super::{Elem, FiniteTable, IdealHandle, Ring};
use crate::{Error, Result};

fn indices_of(ring: &Ring, s: &[Elem]) -> Result<Vec<u32>> {
    s.iter().map(|x| ring.index_of(x).map(|i| i as u32)).collect()
}

fn collect(ring: &Ring, t: &FiniteTable, pred: impl Fn(u32) -> bool) -> Vec<Elem> {
    t.indices().filter(|&i| pred(i)).map(|i| ring.wrap(t.value(i).clone())).collect()
}

/// `r(S) = {a : Sa = 0}`.
pub fn right_annihilator(ring: &Ring, s: &[Elem]) -> Result<Vec<Elem>> {
    let t = ring.table()?;
    let s = indices_of(ring, s)?;
    Ok(collect(ring, t, |a| s.iter().all(|&x| t.mul(x, a) == t.zero())))
}

/// `l(S) = {b : bS = 0}`.
pub fn left_annihilator(ring: &Ring, s: &[Elem]) -> Result<Vec<Elem>> {
    let t = ring.table()?;
    let s = indices_of(ring, s)?;
    Ok(collect(ring, t, |b| s.iter().all(|&x| t.mul(b, x) == t.zero())))
}

pub fn idempotents(ring: &Ring) -> Result<Vec<Elem>> {
    let t = ring.table()?;
    Ok(collect(ring, t, |e| t.mul(e, e) == e))
}

/// First idempotent `e` (enumeration order) with some `r` such that `er != re`.
pub fn noncentral_idempotent(ring: &Ring) -> Result<Option<(Elem, Elem)>> {
    let t = ring.table()?;
    for e in t.indices().filter(|&e| t.mul(e, e) == e) {
        if let Some(r) = t.indices().find(|&r| t.mul(e, r) != t.mul(r, e)) {
            return Ok(Some((ring.wrap(t.value(e).clone()), ring.wrap(t.value(r).clone()))));
        }
    }
    Ok(None)
}

pub(crate) fn is_nilpotent_index(t: &FiniteTable, x: u32) -> bool {
    let mut p = x;
    for _ in 0..t.len() {
        if p == t.zero() {
            return true;
        }
        p = t.mul(p, x);
    }
    p == t.zero()
}

/// `N(R)`, the set of nilpotent elements.
pub fn nilpotents(ring: &Ring) -> Result<Vec<Elem>> {
    let t = ring.table()?;
    Ok(collect(ring, t, |x| is_nilpotent_index(t, x)))
}

pub fn is_unit(ring: &Ring, x: &Elem) -> Result<bool> {
    let t = ring.table()?;
    Ok(t.is_unit(ring.index_of(x)? as u32))
}

/// `r(a) = 0 = l(a)`.
pub fn is_regular(ring: &Ring, a: &Elem) -> Result<bool> {
    let t = ring.table()?;
    let a = ring.index_of(a)? as u32;
    let z = t.zero();
    Ok(t.indices().all(|x| x == z || (t.mul(a, x) != z && t.mul(x, a) != z)))
}

fn sum_of(ring: &Ring, t: &FiniteTable, parts: &[IdealHandle]) -> IdealHandle {
    let seeds: Vec<u32> = parts.iter().flat_map(|p| p.indices().collect::<Vec<_>>()).collect();
    IdealHandle::from_members(ring, Vec::new(), additive_closure(t, seeds))
}

/// Sum of the principal ideals `(x)`, over candidates `x`, that satisfy
/// `accept`. Candidates already inside the running sum are skipped since
/// their principal ideal adds nothing.
fn sum_of_principal(
    ring: &Ring,
    t: &FiniteTable,
    candidates: impl Iterator<Item = u32>,
    mut accept: impl FnMut(&IdealHandle) -> Result<bool>,
) -> Result<IdealHandle> {
    let mut sum = IdealHandle::from_members(ring, Vec::new(), additive_closure(t, []));
    for x in candidates {
        if sum.contains_index(x) {
            continue;
        }
        let p = ideal_closure(ring, &[ring.wrap(t.value(x).clone())])?;
        if accept(&p)? {
            sum = sum_of(ring, t, &[sum, p]);
        }
    }
    Ok(sum)
}

/// Wedderburn radical `N_0`: the sum of all nilpotent principal two-sided
/// ideals. The result is checked to be nilpotent.
pub fn lower_nilradical(ring: &Ring) -> Result<IdealHandle> {
    let t = ring.table()?;
    let bound = t.len() as u32;
    let nil: Vec<u32> = t.indices().filter(|&x| is_nilpotent_index(t, x)).collect();
    let sum = sum_of_principal(ring, t, nil.into_iter(), |p| Ok(nilpotency_index(p, bound)?.is_some()))?;
    if nilpotency_index(&sum, bound)?.is_none() {
        return Err(Error::Internal(format!("sum of nilpotent ideals of {ring} is not nilpotent")));
    }
    Ok(sum)
}

fn nil_ideal_sum(ring: &Ring) -> Result<IdealHandle> {
    let t = ring.table()?;
    let nil: Vec<u32> = t.indices().filter(|&x| is_nilpotent_index(t, x)).collect();
    sum_of_principal(ring, t, nil.into_iter(), |p| Ok(p.indices().all(|i| is_nilpotent_index(t, i))))
}

/// `{x : 1 - rxs is a unit for all r, s}`.
fn quasi_regular_set(ring: &Ring) -> Result<IdealHandle> {
    let t = ring.table()?;
    let one = t.one();
    let good: Vec<bool> = t.indices().map(|y| t.is_unit(t.sub(one, y))).collect();
    let members: Vec<bool> = t
        .indices()
        .map(|x| {
            t.indices().all(|r| {
                let rx = t.mul(r, x);
                t.indices().all(|s| good[t.mul(rx, s) as usize])
            })
        })
        .collect();
    Ok(IdealHandle::from_members(ring, Vec::new(), members))
}

fn agree(ring: &Ring, name: &str, lower: &IdealHandle, other: IdealHandle) -> Result<IdealHandle> {
    if *lower != other {
        return Err(Error::Internal(format!(
            "{name} of {ring} differs from the lower nilradical ({} vs {} elements)",
            other.len(),
            lower.len()
        )));
    }
    Ok(other)
}

/// Upper nilradical `N^*`: the sum of all nil ideals. For finite rings this
/// coincides with the lower nilradical; a divergence is an internal error.
pub fn upper_nilradical(ring: &Ring) -> Result<IdealHandle> {
    let lower = lower_nilradical(ring)?;
    agree(ring, "upper nilradical", &lower, nil_ideal_sum(ring)?)
}

/// `J(R) = {x : 1 - rxs is a unit for all r, s}`.
pub fn jacobson_radical(ring: &Ring) -> Result<IdealHandle> {
    let lower = lower_nilradical(ring)?;
    agree(ring, "Jacobson radical", &lower, quasi_regular_set(ring)?)
}

/// All radicals of a finite ring, computed by independent routes.
#[derive(Clone, Debug)]
pub struct Radicals {
    pub nilpotents: Vec<Elem>,
    pub lower: IdealHandle,
    pub upper: IdealHandle,
    pub jacobson: IdealHandle,
}

impl Radicals {
    /// `N_0 = N_* = N^* = N(R)` as sets.
    pub fn chain_collapses(&self) -> bool {
        self.nilpotents.len() == self.lower.len()
    }
}

pub fn radicals(ring: &Ring) -> Result<Radicals> {
    let lower = lower_nilradical(ring)?;
    let upper = agree(ring, "upper nilradical", &lower, nil_ideal_sum(ring)?)?;
    let jacobson = agree(ring, "Jacobson radical", &lower, quasi_regular_set(ring)?)?;
    Ok(Radicals { nilpotents: nilpotents(ring)?, lower, upper, jacobson })
}

/// Coset ring `R/I` with canonical representatives.
pub fn quotient_ring(ring: &Ring, ideal: &IdealHandle) -> Result<Ring> {
    crate::constructions::make_quotient_by(ring, ideal)
}
