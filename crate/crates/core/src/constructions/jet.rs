use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::RngCore;

use super::util::{digits, size_power, tuples, undigits, POOL_ALL};
use crate::hurwitz::{convolve, render_coeffs, ValueOps, Weights};
use crate::ring::{Cursor, Ring, RingImpl, Value};
use crate::Result;

/// Jets `(c_0, ..., c_N)` under the truncated Hurwitz product, i.e. `hR/(x^{N+1})`.
struct Jets {
    base: Ring,
    order: usize,
    weights: Weights,
    size: Option<u64>,
    radices: Vec<u64>,
}

impl Jets {
    fn b(&self) -> &dyn RingImpl {
        self.base.imp()
    }

    fn map(&self, v: &Value, f: impl Fn(&Value) -> Value) -> Value {
        Value::Tuple(v.tuple().iter().map(f).collect())
    }
}

impl RingImpl for Jets {
    fn zero(&self) -> Value {
        Value::Tuple(alloc::vec![self.b().zero(); self.order + 1])
    }
    fn one(&self) -> Value {
        let mut cs = alloc::vec![self.b().zero(); self.order + 1];
        cs[0] = self.b().one();
        Value::Tuple(cs)
    }
    fn add(&self, a: &Value, b: &Value) -> Value {
        Value::Tuple(a.tuple().iter().zip(b.tuple()).map(|(x, y)| self.b().add(x, y)).collect())
    }
    fn neg(&self, a: &Value) -> Value {
        self.map(a, |x| self.b().neg(x))
    }
    fn mul(&self, a: &Value, b: &Value) -> Value {
        Value::Tuple(convolve(&ValueOps(self.b()), Some(&self.weights), a.tuple(), b.tuple(), self.order + 1))
    }
    fn scale(&self, k: &num_bigint::BigInt, a: &Value) -> Value {
        self.map(a, |x| self.b().scale(k, x))
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn size(&self) -> Option<u64> {
        self.size
    }
    fn element_at(&self, index: u64) -> Value {
        Value::Tuple(digits(index, &self.radices).into_iter().map(|d| self.b().element_at(d)).collect())
    }
    fn index_of(&self, v: &Value) -> u64 {
        undigits(v.tuple().iter().map(|x| self.b().index_of(x)), &self.radices)
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Value {
        Value::Tuple((0..=self.order).map(|_| self.b().sample(rng)).collect())
    }
    fn pool(&self) -> Vec<Value> {
        if let Some(n) = self.size.filter(|&n| n <= POOL_ALL) {
            return (0..n).map(|i| self.element_at(i)).collect();
        }
        let per = match self.order {
            0 => 64,
            1 => 8,
            2 => 4,
            _ => 2,
        };
        let slots: Vec<Vec<Value>> =
            (0..=self.order).map(|_| self.b().pool().into_iter().take(per).collect()).collect();
        tuples(&slots, POOL_ALL as usize).into_iter().map(Value::Tuple).collect()
    }
    fn write(&self, v: &Value, out: &mut String) {
        let coeffs: Vec<_> = v.tuple().iter().map(|x| self.base.wrap(x.clone())).collect();
        out.push_str(&render_coeffs(&self.base, &coeffs));
    }
    fn parse(&self, cur: &mut Cursor<'_>) -> Result<Value> {
        cur.expect('<')?;
        let mut cs = Vec::with_capacity(self.order + 1);
        for i in 0..=self.order {
            if i > 0 {
                cur.expect(',')?;
            }
            cs.push(self.b().parse(cur)?);
        }
        cur.expect('>')?;
        Ok(Value::Tuple(cs))
    }
}

/// `hR/(x^{N+1})` as jets of order `N`; enumeration is mixed radix with
/// `c_0` most significant.
pub fn make_hurwitz_truncated(base: &Ring, order: usize) -> Result<Ring> {
    let size = size_power(base.size(), order + 1);
    let radices = alloc::vec![base.size().unwrap_or(1); order + 1];
    let weights = Weights::new(base.characteristic(), order);
    Ok(Ring::new(format!("HJet({},{order})", base.label()), Jets { base: base.clone(), order, weights, size, radices }))
}
