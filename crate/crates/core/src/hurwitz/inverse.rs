use alloc::vec::Vec;

use num_bigint::BigInt;

use super::poly::HurwitzJet;
use crate::ring::{factorial, Elem, Ring};

/// `(k! r^k)` for `k = 0..=order`: the Hurwitz inverse of `1 - rx`, truncated.
/// In characteristic `p > 0` every term from `k = p` on is zero.
pub fn geometric_inverse_jet(ring: &Ring, r: &Elem, order: usize) -> HurwitzJet {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = ring.one();
    for k in 0..=order {
        let weight = BigInt::from(factorial(k as u64));
        coeffs.push(ring.scale_big(&weight, &power));
        power = ring.mul(&power, r);
    }
    HurwitzJet::new(ring, coeffs).expect("coefficients come from ring")
}

/// The jet `(1, -r, 0, ..., 0)`.
pub fn one_minus_rx(ring: &Ring, r: &Elem, order: usize) -> HurwitzJet {
    let mut coeffs = alloc::vec![ring.zero(); order + 1];
    coeffs[0] = ring.one();
    if order >= 1 {
        coeffs[1] = ring.neg(r);
    }
    HurwitzJet::new(ring, coeffs).expect("coefficients come from ring")
}
