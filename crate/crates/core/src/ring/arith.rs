use alloc::format;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};

use super::{RingImpl, Value};
use crate::{Error, Result};

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> Result<BigUint> {
    if k > n {
        return Err(Error::Domain(format!("binomial C({n},{k}) needs k <= n")));
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // C(n, i) * (n - i) is divisible by i + 1
        acc = acc * (n - i) / (i + 1);
    }
    Ok(acc)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// An integer multiplier already reduced for a ring's characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Weight {
    Zero,
    One,
    Int(BigInt),
}

impl Weight {
    pub fn reduce(w: &BigUint, characteristic: u64) -> Weight {
        let w = if characteristic > 0 { w % characteristic } else { w.clone() };
        if w.is_zero() {
            Weight::Zero
        } else if w.is_one() {
            Weight::One
        } else {
            Weight::Int(BigInt::from_biguint(Sign::Plus, w))
        }
    }

    pub fn binomial(n: u64, k: u64, characteristic: u64) -> Weight {
        Weight::reduce(&binomial(n, k).expect("k <= n"), characteristic)
    }

    pub fn apply<R: RingImpl + ?Sized>(&self, ring: &R, a: &Value) -> Value {
        match self {
            Weight::Zero => ring.zero(),
            Weight::One => a.clone(),
            Weight::Int(k) => ring.scale(k, a),
        }
    }
}

pub(crate) fn scale_by_doubling<R: RingImpl + ?Sized>(ring: &R, k: &BigInt, a: &Value) -> Value {
    let magnitude = k.magnitude();
    let ch = ring.characteristic();
    let magnitude = if ch > 0 { magnitude % ch } else { magnitude.clone() };
    let mut acc = ring.zero();
    if let Some(small) = magnitude.to_u64() {
        let mut base = a.clone();
        let mut m = small;
        while m > 0 {
            if m & 1 == 1 {
                acc = ring.add(&acc, &base);
            }
            m >>= 1;
            if m > 0 {
                base = ring.add(&base, &base);
            }
        }
    } else {
        for bit in (0..magnitude.bits()).rev() {
            acc = ring.add(&acc, &acc);
            if magnitude.bit(bit) {
                acc = ring.add(&acc, a);
            }
        }
    }
    if k.sign() == Sign::Minus {
        ring.neg(&acc)
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn pascal(rows: usize) -> Vec<Vec<u64>> {
        let mut t = vec![vec![1u64]];
        for n in 1..rows {
            let prev = &t[n - 1];
            let mut row = vec![1u64; n + 1];
            for k in 1..n {
                row[k] = prev[k - 1] + prev[k];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn binomial_matches_pascal_recurrence() {
        let t = pascal(40);
        for (n, row) in t.iter().enumerate() {
            for (k, &c) in row.iter().enumerate() {
                assert_eq!(binomial(n as u64, k as u64).unwrap(), BigUint::from(c), "C({n},{k})");
            }
        }
        assert_eq!(binomial(3, 1).unwrap(), BigUint::from(3u32));
        assert_eq!(binomial(5, 2).unwrap(), BigUint::from(10u32));
    }

    #[test]
    fn binomial_is_one_at_k_zero_and_rejects_k_above_n() {
        for n in 0..50 {
            assert!(binomial(n, 0).unwrap().is_one());
        }
        assert!(matches!(binomial(2, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn binomial_does_not_overflow() {
        // C(100, 50) = 100891344545564193334812497256
        assert_eq!(binomial(100, 50).unwrap().to_str_radix(10), "100891344545564193334812497256");
    }

    #[test]
    fn weight_reduces_mod_characteristic() {
        assert_eq!(Weight::binomial(2, 1, 2), Weight::Zero);
        assert_eq!(Weight::binomial(3, 1, 2), Weight::One);
        assert_eq!(Weight::binomial(4, 2, 4), Weight::Int(BigInt::from(2)));
        assert_eq!(Weight::binomial(4, 2, 0), Weight::Int(BigInt::from(6)));
    }
}
