use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{Elem, FiniteTable, Ring};
use crate::{Error, Result};

/// A two-sided ideal of a finite ring, materialized as its full element set.
#[derive(Clone, Debug)]
pub struct IdealHandle {
    ring: Ring,
    generators: Vec<Elem>,
    members: Vec<bool>,
}

impl PartialEq for IdealHandle {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.members == other.members
    }
}

impl Eq for IdealHandle {}

impl IdealHandle {
    pub(crate) fn from_members(ring: &Ring, generators: Vec<Elem>, members: Vec<bool>) -> IdealHandle {
        IdealHandle { ring: ring.clone(), generators, members }
    }

    /// Wraps an explicit element set, rejecting it unless it is a two-sided ideal.
    pub fn from_elements(ring: &Ring, elements: &[Elem]) -> Result<IdealHandle> {
        let t = ring.table()?;
        let mut members = vec![false; t.len()];
        for x in elements {
            members[ring.index_of(x)? as usize] = true;
        }
        let ideal = IdealHandle::from_members(ring, elements.to_vec(), members);
        ideal.validate()?;
        Ok(ideal)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i as u32)
    }

    /// Elements in enumeration order.
    pub fn elements(&self) -> Vec<Elem> {
        self.indices().map(|i| self.ring.element(i as u64).expect("index from table")).collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.len() == self.members.len()
    }

    pub fn contains(&self, x: &Elem) -> bool {
        self.ring.index_of(x).map(|i| self.members[i as usize]).unwrap_or(false)
    }

    pub fn contains_index(&self, i: u32) -> bool {
        self.members[i as usize]
    }

    /// Checks closure under addition, negation and two-sided multiplication.
    pub fn validate(&self) -> Result<()> {
        let t = self.ring.table()?;
        if !self.members[t.zero() as usize] {
            return Err(Error::InvalidIdeal("does not contain zero".into()));
        }
        let mine: Vec<u32> = self.indices().collect();
        for &a in &mine {
            if !self.members[t.neg(a) as usize] {
                return Err(Error::InvalidIdeal(format!(
                    "not closed under negation at {}",
                    self.ring.render_value(t.value(a))
                )));
            }
            for &b in &mine {
                if !self.members[t.add(a, b) as usize] {
                    return Err(Error::InvalidIdeal("not closed under addition".into()));
                }
            }
            for r in t.indices() {
                if !self.members[t.mul(r, a) as usize] || !self.members[t.mul(a, r) as usize] {
                    return Err(Error::InvalidIdeal(format!(
                        "not closed under multiplication by {}",
                        self.ring.render_value(t.value(r))
                    )));
                }
            }
        }
        for g in &self.generators {
            if !self.contains(g) {
                return Err(Error::InvalidIdeal("generator is not a member".into()));
            }
        }
        Ok(())
    }
}

/// Additive subgroup generated by `seeds`.
pub(crate) fn additive_closure(t: &FiniteTable, seeds: impl IntoIterator<Item = u32>) -> Vec<bool> {
    let mut members = vec![false; t.len()];
    members[t.zero() as usize] = true;
    let mut list = vec![t.zero()];
    for s in seeds {
        if members[s as usize] {
            continue;
        }
        let base = list.clone();
        let mut cur = s;
        while !members[cur as usize] {
            for &b in &base {
                let v = t.add(b, cur);
                if !members[v as usize] {
                    members[v as usize] = true;
                    list.push(v);
                }
            }
            cur = t.add(cur, s);
        }
    }
    members
}

/// Smallest two-sided ideal containing `gens`.
pub fn ideal_closure(ring: &Ring, gens: &[Elem]) -> Result<IdealHandle> {
    let t = ring.table()?;
    let mut seeds = Vec::new();
    let mut seen = vec![false; t.len()];
    for g in gens {
        let gi = ring.index_of(g)? as u32;
        for r in t.indices() {
            let rg = t.mul(r, gi);
            for s in t.indices() {
                let v = t.mul(rg, s);
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    seeds.push(v);
                }
            }
        }
    }
    Ok(IdealHandle::from_members(ring, gens.to_vec(), additive_closure(t, seeds)))
}

/// Ideal generated by all products `ij`.
pub fn ideal_product(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    if i.ring.id() != j.ring.id() {
        return Err(Error::RingMismatch);
    }
    let t = i.ring.table()?;
    let mut seen = vec![false; t.len()];
    let mut seeds = Vec::new();
    for a in i.indices() {
        for b in j.indices() {
            let v = t.mul(a, b);
            if !seen[v as usize] {
                seen[v as usize] = true;
                seeds.push(v);
            }
        }
    }
    Ok(IdealHandle::from_members(&i.ring, Vec::new(), additive_closure(t, seeds)))
}

pub fn ideal_power(i: &IdealHandle, m: u32) -> Result<IdealHandle> {
    if m == 0 {
        return Err(Error::Domain("ideal power needs m >= 1".into()));
    }
    let mut acc = i.clone();
    for _ in 1..m {
        if acc.is_zero() {
            break;
        }
        acc = ideal_product(&acc, i)?;
    }
    Ok(acc)
}

/// Whether `I^m = 0`.
pub fn ideal_power_is_zero(i: &IdealHandle, m: u32) -> Result<bool> {
    Ok(ideal_power(i, m)?.is_zero())
}

/// Smallest `m ≤ bound` with `I^m = 0`.
pub(crate) fn nilpotency_index(i: &IdealHandle, bound: u32) -> Result<Option<u32>> {
    let mut acc = i.clone();
    for m in 1..=bound {
        if acc.is_zero() {
            return Ok(Some(m));
        }
        let next = ideal_product(&acc, i)?;
        if next == acc {
            return Ok(None);
        }
        acc = next;
    }
    Ok(acc.is_zero().then_some(bound))
}
