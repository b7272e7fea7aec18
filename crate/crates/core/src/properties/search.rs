//! Shared machinery for the polynomial zero-divisor searches: one engine
//! that runs either over operation tables (indices) or over raw payloads.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

use crate::hurwitz::{Coeffs, Product, ValueOps, Weights};
use crate::ring::{Elem, FiniteTable, Ring, Value};

/// Where coefficients come from and how they are multiplied.
pub(crate) trait Arena {
    type C: Coeffs;
    fn ops(&self) -> &Self::C;
    fn ring(&self) -> &Ring;
    fn elem(&self, e: &<Self::C as Coeffs>::E) -> Elem;
    fn lift(&self, x: &Elem) -> <Self::C as Coeffs>::E;
    fn draw(&self, rng: &mut ChaCha8Rng) -> <Self::C as Coeffs>::E;
    /// Every element in enumeration order, when affordable.
    fn everything(&self) -> Option<Vec<<Self::C as Coeffs>::E>>;
}

pub(crate) struct TableArena<'a> {
    pub ring: &'a Ring,
    pub table: &'a FiniteTable,
}

impl Arena for TableArena<'_> {
    type C = FiniteTable;
    fn ops(&self) -> &FiniteTable {
        self.table
    }
    fn ring(&self) -> &Ring {
        self.ring
    }
    fn elem(&self, e: &u32) -> Elem {
        self.ring.wrap(self.table.value(*e).clone())
    }
    fn lift(&self, x: &Elem) -> u32 {
        self.ring.index_of(x).expect("table rings are enumerable") as u32
    }
    fn draw(&self, rng: &mut ChaCha8Rng) -> u32 {
        rng.gen_range(0..self.table.len() as u32)
    }
    fn everything(&self) -> Option<Vec<u32>> {
        Some(self.table.indices().collect())
    }
}

pub(crate) struct ValueArena<'a> {
    pub ring: &'a Ring,
    pub ops: ValueOps<'a>,
}

impl<'a> ValueArena<'a> {
    pub fn new(ring: &'a Ring) -> ValueArena<'a> {
        ValueArena { ring, ops: ValueOps(ring.imp()) }
    }
}

impl<'a> Arena for ValueArena<'a> {
    type C = ValueOps<'a>;
    fn ops(&self) -> &ValueOps<'a> {
        &self.ops
    }
    fn ring(&self) -> &Ring {
        self.ring
    }
    fn elem(&self, e: &Value) -> Elem {
        self.ring.wrap(e.clone())
    }
    fn lift(&self, x: &Elem) -> Value {
        x.value().clone()
    }
    fn draw(&self, rng: &mut ChaCha8Rng) -> Value {
        self.ring.imp().sample(rng)
    }
    fn everything(&self) -> Option<Vec<Value>> {
        None
    }
}

pub(crate) type E<A> = <<A as Arena>::C as Coeffs>::E;

/// A product rule with its weights precomputed for vectors of bounded length.
pub(crate) struct Mult {
    product: Product,
    weights: Option<Weights>,
}

impl Mult {
    /// Weights cover factors with at most `max_len` coefficients each.
    pub fn new(characteristic: u64, product: Product, max_len: usize) -> Mult {
        let weights = match product {
            Product::Ordinary => None,
            Product::Hurwitz => Some(Weights::new(characteristic, (2 * max_len).saturating_sub(2))),
            Product::Jet(n) => Some(Weights::new(characteristic, n)),
        };
        Mult { product, weights }
    }

    /// Whether the product of `a` and `b` is zero, stopping at the first
    /// nonzero coefficient.
    pub fn vanishes<C: Coeffs>(&self, c: &C, a: &[C::E], b: &[C::E]) -> bool {
        if a.is_empty() || b.is_empty() {
            return true;
        }
        let full = a.len() + b.len() - 1;
        let len = match self.product {
            Product::Jet(n) => full.min(n + 1),
            _ => full,
        };
        let zero = c.zero();
        for n in 0..len {
            let mut acc = zero.clone();
            let lo = n.saturating_sub(b.len() - 1);
            for k in lo..=n.min(a.len() - 1) {
                let term = c.mul(&a[k], &b[n - k]);
                if term == zero {
                    continue;
                }
                let term = match &self.weights {
                    Some(w) => c.weigh(w.get(n, k), &term),
                    None => term,
                };
                acc = c.add(&acc, &term);
            }
            if acc != zero {
                return false;
            }
        }
        true
    }
}

/// First `(i, j)`, lexicographically, with `a_i b_j != 0`.
pub(crate) fn violation<C: Coeffs>(c: &C, a: &[C::E], b: &[C::E]) -> Option<(usize, usize)> {
    let zero = c.zero();
    for (i, x) in a.iter().enumerate() {
        if *x == zero {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if c.mul(x, y) != zero {
                return Some((i, j));
            }
        }
    }
    None
}

/// A zero product with a nonzero coefficient product `f_i g_j`.
#[derive(Clone, Debug)]
pub(crate) struct Hit<T> {
    pub f: Vec<T>,
    pub g: Vec<T>,
    pub i: usize,
    pub j: usize,
}

pub(crate) fn test_pair<C: Coeffs>(c: &C, m: &Mult, f: &[C::E], g: &[C::E]) -> Option<Hit<C::E>> {
    let (i, j) = violation(c, f, g)?;
    if m.vanishes(c, f, g) {
        Some(Hit { f: f.to_vec(), g: g.to_vec(), i, j })
    } else {
        None
    }
}

pub(crate) fn to_elems<A: Arena>(arena: &A, v: &[E<A>]) -> Vec<Elem> {
    v.iter().map(|x| arena.elem(x)).collect()
}

/// Advances `digits` (most significant first) through `0..radix`; false on wrap.
pub(crate) fn odometer(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// All vectors of `len` entries drawn from `elems`, in lexicographic order.
pub(crate) fn all_vectors<T: Clone>(elems: &[T], len: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    if elems.is_empty() {
        return out;
    }
    let mut digits = vec![0usize; len];
    loop {
        out.push(digits.iter().map(|&d| elems[d].clone()).collect());
        if !odometer(&mut digits, elems.len()) {
            return out;
        }
    }
}

/// Every pair of coefficient vectors with `deg + 1` entries, `f` major.
/// Returns the first hit and the number of pairs examined.
pub(crate) fn exhaustive<A: Arena>(arena: &A, elems: &[E<A>], m: &Mult, deg: usize) -> (Option<Hit<E<A>>>, u64) {
    let vectors = all_vectors(elems, deg + 1);
    let c = arena.ops();
    let mut count = 0u64;
    for f in &vectors {
        for g in &vectors {
            count += 1;
            if let Some(hit) = test_pair(c, m, f, g) {
                return (Some(hit), count);
            }
        }
    }
    (None, count)
}

pub(crate) fn random_vector<A: Arena>(arena: &A, len: usize, rng: &mut ChaCha8Rng) -> Vec<E<A>> {
    (0..len).map(|_| arena.draw(rng)).collect()
}

/// `samples` uniformly drawn pairs of vectors with `len` entries.
pub(crate) fn random<A: Arena>(
    arena: &A,
    m: &Mult,
    len: usize,
    samples: u64,
    rng: &mut ChaCha8Rng,
) -> (Option<Hit<E<A>>>, u64) {
    let c = arena.ops();
    for k in 0..samples {
        let f = random_vector(arena, len, rng);
        let g = random_vector(arena, len, rng);
        if let Some(hit) = test_pair(c, m, &f, &g) {
            return (Some(hit), k + 1);
        }
    }
    (None, samples)
}

/// Pairs `(x, y)` from `elems` with `xy = 0`, in lexicographic order.
pub(crate) fn zero_pairs<C: Coeffs>(c: &C, elems: &[C::E]) -> Vec<(C::E, C::E)> {
    let zero = c.zero();
    let mut out = Vec::new();
    for x in elems {
        for y in elems {
            if c.mul(x, y) == zero {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out
}

/// Degree-one scan: a product `(a0 + a1 x)(b0 + b1 x)` can only vanish when
/// `a0 b0 = 0` and `a1 b1 = 0`, so pairing up the zero-product list covers
/// every degree-one counterexample over `elems`. Returns the first hit in
/// lexicographic order of `(a0, b0, a1, b1)`, the count, and whether the
/// scan finished within `budget`.
pub(crate) fn degree_one<C: Coeffs>(c: &C, m: &Mult, elems: &[C::E], budget: u64) -> (Option<Hit<C::E>>, u64, bool) {
    let pairs = zero_pairs(c, elems);
    let mut count = 0u64;
    for (a0, b0) in &pairs {
        for (a1, b1) in &pairs {
            if count >= budget {
                return (None, count, false);
            }
            count += 1;
            let f = [a0.clone(), a1.clone()];
            let g = [b0.clone(), b1.clone()];
            if let Some(hit) = test_pair(c, m, &f, &g) {
                return (Some(hit), count, true);
            }
        }
    }
    (None, count, true)
}
