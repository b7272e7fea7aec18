use alloc::vec::Vec;

use super::{RingImpl, Value};

/// Addition, negation and multiplication tables of a small finite ring,
/// indexed by enumeration order.
#[derive(Debug)]
pub struct FiniteTable {
    n: usize,
    values: Vec<Value>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: u32,
    one: u32,
    characteristic: u64,
}

impl FiniteTable {
    pub(crate) fn build(ring: &dyn RingImpl, n: usize) -> FiniteTable {
        let values: Vec<Value> = (0..n as u64).map(|i| ring.element_at(i)).collect();
        let idx = |v: &Value| ring.index_of(v) as u32;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in &values {
            for b in &values {
                add.push(idx(&ring.add(a, b)));
                mul.push(idx(&ring.mul(a, b)));
            }
        }
        let neg = values.iter().map(|a| idx(&ring.neg(a))).collect();
        let (zero, one) = (idx(&ring.zero()), idx(&ring.one()));
        let mut t = FiniteTable { n, zero, one, values, add, mul, neg, characteristic: 0 };
        let mut m = 1u64;
        let mut acc = one;
        while acc != zero {
            acc = t.add(acc, one);
            m += 1;
        }
        t.characteristic = m;
        t
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn value(&self, i: u32) -> &Value {
        &self.values[i as usize]
    }

    /// Additive order of one.
    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn zero(&self) -> u32 {
        self.zero
    }

    pub fn one(&self) -> u32 {
        self.one
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// `k`-fold sum of `a`.
    pub fn scale(&self, k: u64, a: u32) -> u32 {
        let (mut acc, mut base, mut m) = (self.zero, a, k);
        while m > 0 {
            if m & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            m >>= 1;
        }
        acc
    }

    pub fn indices(&self) -> core::ops::Range<u32> {
        0..self.n as u32
    }

    pub fn is_unit(&self, a: u32) -> bool {
        self.indices().any(|b| self.mul(a, b) == self.one && self.mul(b, a) == self.one)
    }
}
