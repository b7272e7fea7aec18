use alloc::format;
use alloc::vec::Vec;

use super::conv::Weights;
use super::poly::HurwitzJet;
use crate::ring::{FiniteTable, Ring, Weight};
use crate::{Error, Result};

/// Cap on the number of idempotent jets [`idempotent_jets`] will return.
pub const JET_LIMIT: usize = 1 << 20;

/// Every idempotent jet of order `order`, in lexicographic enumeration order.
///
/// Solved degree by degree: `e_0^2 = e_0`, then for each `n >= 1` every `e_n`
/// with `sum_k C(n,k) e_k e_{n-k} = e_n` given `e_0..e_{n-1}`.
pub fn idempotent_jets(ring: &Ring, order: usize) -> Result<Vec<HurwitzJet>> {
    idempotent_jets_bounded(ring, order, JET_LIMIT)
}

pub fn idempotent_jets_bounded(ring: &Ring, order: usize, limit: usize) -> Result<Vec<HurwitzJet>> {
    let t = ring.table()?;
    let w = Weights::new(t.characteristic(), order);
    let mut found = Vec::new();
    let mut partial = Vec::with_capacity(order + 1);
    extend(t, &w, order, &mut partial, &mut found, limit)?;
    Ok(found
        .into_iter()
        .map(|idx: Vec<u32>| {
            let coeffs = idx.iter().map(|&i| ring.wrap(t.value(i).clone())).collect();
            HurwitzJet::new(ring, coeffs).expect("nonempty")
        })
        .collect())
}

fn weighted(t: &FiniteTable, w: &Weight, x: u32) -> u32 {
    match w {
        Weight::Zero => t.zero(),
        Weight::One => x,
        Weight::Int(k) => {
            let k = (k.magnitude() % t.characteristic()).iter_u64_digits().next().unwrap_or(0);
            t.scale(k, x)
        }
    }
}

fn extend(
    t: &FiniteTable,
    w: &Weights,
    order: usize,
    partial: &mut Vec<u32>,
    found: &mut Vec<Vec<u32>>,
    limit: usize,
) -> Result<()> {
    let n = partial.len();
    if n > order {
        if found.len() >= limit {
            return Err(Error::BudgetExceeded(format!("more than {limit} idempotent jets")));
        }
        found.push(partial.clone());
        return Ok(());
    }
    if n == 0 {
        for e in t.indices().filter(|&e| t.mul(e, e) == e) {
            partial.push(e);
            extend(t, w, order, partial, found, limit)?;
            partial.pop();
        }
        return Ok(());
    }
    let mut rest = t.zero();
    for k in 1..n {
        let term = t.mul(partial[k], partial[n - k]);
        rest = t.add(rest, weighted(t, w.get(n, k), term));
    }
    let e0 = partial[0];
    for x in t.indices() {
        let lhs = t.add(t.add(t.mul(e0, x), t.mul(x, e0)), rest);
        if lhs == x {
            partial.push(x);
            extend(t, w, order, partial, found, limit)?;
            partial.pop();
        }
    }
    Ok(())
}
