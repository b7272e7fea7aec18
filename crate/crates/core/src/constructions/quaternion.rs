use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng as _, RngCore};

use super::util::{digits, undigits, POOL_ALL};
use crate::ring::{Cursor, Ring, RingImpl, Value};
use crate::{Error, Result};

/// Quaternions `a + bi + cj + dk` with coefficients in `Z/n`.
struct Quaternions {
    n: u64,
}

impl Quaternions {
    fn q(&self, v: &Value) -> [u64; 4] {
        let t = v.tuple();
        [t[0].res(), t[1].res(), t[2].res(), t[3].res()]
    }

    fn pack(&self, q: [i128; 4]) -> Value {
        let n = self.n as i128;
        Value::Tuple(q.iter().map(|&x| Value::Res(x.rem_euclid(n) as u64)).collect())
    }
}

impl RingImpl for Quaternions {
    fn zero(&self) -> Value {
        self.pack([0; 4])
    }
    fn one(&self) -> Value {
        self.pack([1, 0, 0, 0])
    }
    fn add(&self, a: &Value, b: &Value) -> Value {
        let (x, y) = (self.q(a), self.q(b));
        self.pack(core::array::from_fn(|i| x[i] as i128 + y[i] as i128))
    }
    fn neg(&self, a: &Value) -> Value {
        let x = self.q(a);
        self.pack(core::array::from_fn(|i| -(x[i] as i128)))
    }
    fn mul(&self, a: &Value, b: &Value) -> Value {
        let [a1, b1, c1, d1] = self.q(a).map(|x| x as i128);
        let [a2, b2, c2, d2] = self.q(b).map(|x| x as i128);
        self.pack([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }
    fn scale(&self, k: &BigInt, a: &Value) -> Value {
        let k = k.mod_floor(&BigInt::from(self.n)).to_i128().expect("reduced");
        let x = self.q(a);
        self.pack(core::array::from_fn(|i| k * x[i] as i128))
    }
    fn characteristic(&self) -> u64 {
        self.n
    }
    fn size(&self) -> Option<u64> {
        self.n.checked_pow(4)
    }
    fn element_at(&self, index: u64) -> Value {
        let ds = digits(index, &[self.n; 4]);
        Value::Tuple(ds.into_iter().map(Value::Res).collect())
    }
    fn index_of(&self, v: &Value) -> u64 {
        undigits(self.q(v), &[self.n; 4])
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Value {
        Value::Tuple((0..4).map(|_| Value::Res(rng.gen_range(0..self.n))).collect())
    }
    fn pool(&self) -> Vec<Value> {
        let size = self.size().unwrap_or(u64::MAX);
        (0..size.min(POOL_ALL)).map(|i| self.element_at(i)).collect()
    }
    fn write(&self, v: &Value, out: &mut String) {
        let [a, b, c, d] = self.q(v);
        let _ = write!(out, "({a},{b},{c},{d})");
    }
    fn parse(&self, cur: &mut Cursor<'_>) -> Result<Value> {
        cur.expect('(')?;
        let mut q = [0i128; 4];
        for (i, slot) in q.iter_mut().enumerate() {
            if i > 0 {
                cur.expect(',')?;
            }
            *slot = cur.int()?.mod_floor(&BigInt::from(self.n)).to_i128().expect("reduced");
        }
        cur.expect(')')?;
        Ok(self.pack(q))
    }
}

/// `Z/n`-quaternions with `i^2 = j^2 = k^2 = ijk = -1`, written `(a,b,c,d)`;
/// enumeration is mixed radix with `a` most significant.
pub fn make_quaternion_mod(n: u64) -> Result<Ring> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("Quat needs n >= 2, got {n}")));
    }
    if n > u32::MAX as u64 {
        return Err(Error::InvalidParameter("Quat modulus too large".into()));
    }
    Ok(Ring::new(format!("Quat({n})"), Quaternions { n }))
}
