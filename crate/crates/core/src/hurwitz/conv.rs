//! The one convolution routine behind every product in the crate: exact
//! Hurwitz and ordinary polynomial products, jet products, the truncated
//! Hurwitz ring construction and the table-driven searches.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::ring::{FiniteTable, RingImpl, Value, Weight};

/// Coefficient arithmetic a convolution can run over.
pub trait Coeffs {
    type E: Clone + PartialEq;
    fn zero(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn weigh(&self, w: &Weight, a: &Self::E) -> Self::E;
    fn characteristic(&self) -> u64;
}

impl Coeffs for FiniteTable {
    type E = u32;

    fn zero(&self) -> u32 {
        FiniteTable::zero(self)
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        FiniteTable::add(self, *a, *b)
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        FiniteTable::mul(self, *a, *b)
    }

    fn weigh(&self, w: &Weight, a: &u32) -> u32 {
        match w {
            Weight::Zero => FiniteTable::zero(self),
            Weight::One => *a,
            Weight::Int(k) => {
                let ch = FiniteTable::characteristic(self);
                let k = (k.magnitude() % ch).iter_u64_digits().next().unwrap_or(0);
                self.scale(k, *a)
            }
        }
    }

    fn characteristic(&self) -> u64 {
        FiniteTable::characteristic(self)
    }
}

/// Raw payload arithmetic of a ring implementation.
pub struct ValueOps<'a>(pub &'a dyn RingImpl);

impl Coeffs for ValueOps<'_> {
    type E = Value;

    fn zero(&self) -> Value {
        self.0.zero()
    }

    fn add(&self, a: &Value, b: &Value) -> Value {
        self.0.add(a, b)
    }

    fn mul(&self, a: &Value, b: &Value) -> Value {
        self.0.mul(a, b)
    }

    fn weigh(&self, w: &Weight, a: &Value) -> Value {
        w.apply(self.0, a)
    }

    fn characteristic(&self) -> u64 {
        self.0.characteristic()
    }
}

/// Binomial weights `C(n,k)` reduced modulo a characteristic, rows `0..=max_n`.
#[derive(Clone, Debug)]
pub struct Weights {
    characteristic: u64,
    rows: Vec<Vec<Weight>>,
}

impl Weights {
    pub fn new(characteristic: u64, max_n: usize) -> Weights {
        let mut exact: Vec<BigUint> = vec![BigUint::from(1u8)];
        let mut rows = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            if n > 0 {
                let mut next = vec![BigUint::from(1u8); n + 1];
                for k in 1..n {
                    next[k] = &exact[k - 1] + &exact[k];
                }
                if characteristic > 0 {
                    for c in next.iter_mut() {
                        *c %= characteristic;
                    }
                }
                exact = next;
            }
            rows.push(exact.iter().map(|c| Weight::reduce(c, characteristic)).collect());
        }
        Weights { characteristic, rows }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> &Weight {
        &self.rows[n][k]
    }

    /// Whether `C(n,k)` vanishes in this characteristic.
    pub fn vanishes(&self, n: usize, k: usize) -> bool {
        self.rows[n][k] == Weight::Zero
    }
}

/// `c_n = sum_k w(n,k) a_k b_{n-k}` for `n < len`, where `w` is the binomial
/// weight (Hurwitz) or 1 (`weights = None`, ordinary). Missing coefficients
/// count as zero.
pub fn convolve<C: Coeffs + ?Sized>(c: &C, weights: Option<&Weights>, a: &[C::E], b: &[C::E], len: usize) -> Vec<C::E> {
    let zero = c.zero();
    let mut out = vec![zero.clone(); len];
    if let Some(w) = weights {
        assert!(len == 0 || w.max_n() + 1 >= len, "weight table too small");
    }
    for (k, ak) in a.iter().enumerate().take(len) {
        if *ak == zero {
            continue;
        }
        for (m, bm) in b.iter().enumerate().take(len - k) {
            if *bm == zero {
                continue;
            }
            let n = k + m;
            let term = c.mul(ak, bm);
            if term == zero {
                continue;
            }
            let term = match weights {
                Some(w) => match w.get(n, k) {
                    Weight::Zero => continue,
                    Weight::One => term,
                    wt => c.weigh(wt, &term),
                },
                None => term,
            };
            out[n] = c.add(&out[n], &term);
        }
    }
    out
}

/// Full-length product of two coefficient vectors (`la + lb - 1` terms).
pub fn full_product<C: Coeffs + ?Sized>(c: &C, weights: Option<&Weights>, a: &[C::E], b: &[C::E]) -> Vec<C::E> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    convolve(c, weights, a, b, a.len() + b.len() - 1)
}
