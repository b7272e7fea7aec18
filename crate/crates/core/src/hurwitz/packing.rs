use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::conv::Weights;
use super::poly::HurwitzPoly;
use crate::ring::{Ring, Weight};
use crate::{Error, Result};

/// A polynomial in `T` whose coefficients are Hurwitz polynomials in `x`,
/// multiplied as an element of `h(hR)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedPoly {
    ring: Ring,
    coeffs: Vec<HurwitzPoly>,
}

impl NestedPoly {
    pub fn new(ring: &Ring, coeffs: Vec<HurwitzPoly>) -> Result<NestedPoly> {
        if coeffs.iter().any(|c| c.ring().id() != ring.id()) {
            return Err(Error::RingMismatch);
        }
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(NestedPoly { ring: ring.clone(), coeffs })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[HurwitzPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Hurwitz product in `T` with `hR` coefficients.
    pub fn mul(&self, other: &NestedPoly) -> Result<NestedPoly> {
        if self.ring.id() != other.ring.id() {
            return Err(Error::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return NestedPoly::new(&self.ring, Vec::new());
        }
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        let w = Weights::new(self.ring.characteristic(), len - 1);
        let mut out = vec![HurwitzPoly::zero(&self.ring); len];
        for (k, fk) in self.coeffs.iter().enumerate() {
            for (m, gm) in other.coeffs.iter().enumerate() {
                let term = fk.mul(gm)?;
                let term = match w.get(k + m, k) {
                    Weight::Zero => continue,
                    Weight::One => term,
                    Weight::Int(c) => scale_poly(&term, c)?,
                };
                out[k + m] = out[k + m].add(&term)?;
            }
        }
        NestedPoly::new(&self.ring, out)
    }

    pub fn render(&self) -> String {
        let mut out = String::from("[");
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&c.render());
        }
        out.push(']');
        out
    }
}

fn scale_poly(f: &HurwitzPoly, k: &BigInt) -> Result<HurwitzPoly> {
    let ring = f.ring();
    HurwitzPoly::new(ring, f.coeffs().iter().map(|c| ring.scale_big(k, c)).collect())
}

/// Output of [`pack_nested`].
#[derive(Clone, Debug)]
pub struct Packing {
    pub f: HurwitzPoly,
    pub g: HurwitzPoly,
    /// `k_n` for each `T`-degree `n`.
    pub schedule: Vec<usize>,
}

fn degree_or_zero(p: Option<&HurwitzPoly>) -> usize {
    p.and_then(|p| p.degree()).unwrap_or(0)
}

/// Flattens `F = sum f_n T^n` to `f_0 + f_1 x^{k_1} + f_2 x^{2 k_2} + ...`
/// with `k_n = deg f_0 + ... + deg f_n + deg g_0 + ... + deg g_n + 1`, the
/// coefficients of `f_n` placed from position `n k_n` on. The zero
/// polynomial counts as degree 0. `G` is packed with the same schedule.
pub fn pack_nested(f: &NestedPoly, g: &NestedPoly, max_degree: usize) -> Result<Packing> {
    if f.ring.id() != g.ring.id() {
        return Err(Error::RingMismatch);
    }
    let ring = &f.ring;
    let len = f.coeffs.len().max(g.coeffs.len());
    let mut schedule = Vec::with_capacity(len);
    let mut running = 0usize;
    for n in 0..len {
        running += degree_or_zero(f.coeffs.get(n)) + degree_or_zero(g.coeffs.get(n));
        schedule.push(running + 1);
    }
    let place = |p: &NestedPoly| -> Result<HurwitzPoly> {
        let mut out: Vec<_> = Vec::new();
        for (n, fnn) in p.coeffs.iter().enumerate() {
            let start = n * schedule[n];
            for (m, c) in fnn.coeffs().iter().enumerate() {
                let pos = start + m;
                if pos > max_degree {
                    return Err(Error::ScheduleOverflow(format!(
                        "packed degree {pos} exceeds the configured maximum {max_degree}"
                    )));
                }
                if out.len() <= pos {
                    out.resize(pos + 1, ring.zero());
                }
                out[pos] = c.clone();
            }
        }
        HurwitzPoly::new(ring, out)
    };
    Ok(Packing { f: place(f)?, g: place(g)?, schedule })
}
