use alloc::vec;
use alloc::vec::Vec;

use crate::ring::Value;

/// Rings with at most this many elements use all of them as their pool.
pub const POOL_ALL: u64 = 64;

/// Mixed-radix digits of `index`, first digit most significant.
pub fn digits(mut index: u64, radices: &[u64]) -> Vec<u64> {
    let mut out = vec![0; radices.len()];
    for (slot, &r) in out.iter_mut().zip(radices).rev() {
        *slot = index % r;
        index /= r;
    }
    out
}

pub fn undigits(ds: impl IntoIterator<Item = u64>, radices: &[u64]) -> u64 {
    ds.into_iter().zip(radices).fold(0, |acc, (d, &r)| acc * r + d)
}

/// Product of sizes, `None` when any factor is infinite or the product overflows.
pub fn size_product(sizes: impl IntoIterator<Item = Option<u64>>) -> Option<u64> {
    sizes.into_iter().try_fold(1u64, |acc, s| acc.checked_mul(s?))
}

pub fn size_power(size: Option<u64>, exp: usize) -> Option<u64> {
    size_product(core::iter::repeat_n(size, exp))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// lcm of characteristics, where 0 (characteristic zero) absorbs.
pub fn char_lcm(chars: impl IntoIterator<Item = u64>) -> u64 {
    chars.into_iter().fold(1, |acc, c| if acc == 0 || c == 0 { 0 } else { acc / gcd(acc, c) * c })
}

/// Tuples drawn from per-slot candidate lists, in mixed-radix order, at
/// most `limit` of them.
pub fn tuples(slots: &[Vec<Value>], limit: usize) -> Vec<Vec<Value>> {
    let radices: Vec<u64> = slots.iter().map(|s| s.len() as u64).collect();
    if radices.contains(&0) {
        return Vec::new();
    }
    let total = size_product(radices.iter().map(|&r| Some(r))).unwrap_or(u64::MAX);
    (0..total.min(limit as u64))
        .map(|i| digits(i, &radices).iter().zip(slots).map(|(&d, s)| s[d as usize].clone()).collect())
        .collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}
