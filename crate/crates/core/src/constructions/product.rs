//! Direct products and the Chinese-remainder decomposition of `Z/n`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::RngCore;

use super::util::{char_lcm, digits, size_product, tuples, undigits, POOL_ALL};
use super::zmod::make_zmod;
use crate::ring::{Cursor, Ring, RingImpl, Value};
use crate::{Error, Result};

struct Product {
    parts: Vec<Ring>,
    size: Option<u64>,
    radices: Vec<u64>,
}

impl Product {
    fn map2(&self, a: &Value, b: &Value, op: impl Fn(&dyn RingImpl, &Value, &Value) -> Value) -> Value {
        Value::Tuple(
            self.parts.iter().zip(a.tuple().iter().zip(b.tuple())).map(|(r, (x, y))| op(r.imp(), x, y)).collect(),
        )
    }
}

impl RingImpl for Product {
    fn zero(&self) -> Value {
        Value::Tuple(self.parts.iter().map(|r| r.imp().zero()).collect())
    }
    fn one(&self) -> Value {
        Value::Tuple(self.parts.iter().map(|r| r.imp().one()).collect())
    }
    fn add(&self, a: &Value, b: &Value) -> Value {
        self.map2(a, b, |r, x, y| r.add(x, y))
    }
    fn neg(&self, a: &Value) -> Value {
        Value::Tuple(self.parts.iter().zip(a.tuple()).map(|(r, x)| r.imp().neg(x)).collect())
    }
    fn mul(&self, a: &Value, b: &Value) -> Value {
        self.map2(a, b, |r, x, y| r.mul(x, y))
    }
    fn scale(&self, k: &num_bigint::BigInt, a: &Value) -> Value {
        Value::Tuple(self.parts.iter().zip(a.tuple()).map(|(r, x)| r.imp().scale(k, x)).collect())
    }
    fn characteristic(&self) -> u64 {
        char_lcm(self.parts.iter().map(|r| r.characteristic()))
    }
    fn size(&self) -> Option<u64> {
        self.size
    }
    fn element_at(&self, index: u64) -> Value {
        let ds = digits(index, &self.radices);
        Value::Tuple(self.parts.iter().zip(ds).map(|(r, d)| r.imp().element_at(d)).collect())
    }
    fn index_of(&self, v: &Value) -> u64 {
        undigits(self.parts.iter().zip(v.tuple()).map(|(r, x)| r.imp().index_of(x)), &self.radices)
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Value {
        Value::Tuple(self.parts.iter().map(|r| r.imp().sample(rng)).collect())
    }
    fn pool(&self) -> Vec<Value> {
        if let Some(n) = self.size.filter(|&n| n <= POOL_ALL) {
            return (0..n).map(|i| self.element_at(i)).collect();
        }
        let per = match self.parts.len() {
            1 => 64,
            2 => 8,
            3 => 4,
            _ => 2,
        };
        let slots: Vec<Vec<Value>> =
            self.parts.iter().map(|r| r.imp().pool().into_iter().take(per).collect()).collect();
        tuples(&slots, 64).into_iter().map(Value::Tuple).collect()
    }
    fn write(&self, v: &Value, out: &mut String) {
        out.push('(');
        for (i, (r, x)) in self.parts.iter().zip(v.tuple()).enumerate() {
            if i > 0 {
                out.push(',');
            }
            r.imp().write(x, out);
        }
        out.push(')');
    }
    fn parse(&self, cur: &mut Cursor<'_>) -> Result<Value> {
        cur.expect('(')?;
        let mut xs = Vec::with_capacity(self.parts.len());
        for (i, r) in self.parts.iter().enumerate() {
            if i > 0 {
                cur.expect(',')?;
            }
            xs.push(r.imp().parse(cur)?);
        }
        cur.expect(')')?;
        Ok(Value::Tuple(xs))
    }
}

/// Componentwise product `R_1 x ... x R_k`; enumeration is mixed radix with
/// the first factor most significant.
pub fn make_product(parts: &[Ring]) -> Result<Ring> {
    if parts.is_empty() {
        return Err(Error::InvalidParameter("Prod needs at least one factor".into()));
    }
    let size = size_product(parts.iter().map(|r| r.size()));
    let radices = parts.iter().map(|r| r.size().unwrap_or(1)).collect();
    let labels: Vec<&str> = parts.iter().map(|r| r.label()).collect();
    let label = format!("Prod({})", labels.join(","));
    Ok(Ring::new(label, Product { parts: parts.to_vec(), size, radices }))
}

/// Prime-power factors of `n` by increasing prime, e.g. `12 -> [4, 3]`.
pub fn crt_decompose(n: u64) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("crt_decompose needs n >= 2, got {n}")));
    }
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut q = 1;
            while m.is_multiple_of(p) {
                m /= p;
                q *= p;
            }
            out.push(q);
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    Ok(out)
}

/// `Z/n` together with `prod Z/q_i` over its prime-power factors and the map
/// `x -> (x mod q_i)`, checked to be a ring isomorphism.
pub struct CrtSplit {
    pub whole: Ring,
    pub factors: Vec<u64>,
    pub product: Ring,
}

impl CrtSplit {
    pub fn image(&self, x: u64) -> Value {
        Value::Tuple(self.factors.iter().map(|&q| Value::Res(x % q)).collect())
    }

    /// Exhaustively checks that the map is a bijection preserving `+`, `*` and 1.
    pub fn verify(&self) -> Result<()> {
        let n = self.whole.size().expect("finite");
        let imp = self.product.imp();
        let mut seen = alloc::vec![false; n as usize];
        for x in 0..n {
            let ix = imp.index_of(&self.image(x)) as usize;
            if core::mem::replace(&mut seen[ix], true) {
                return Err(Error::Internal(format!("CRT map is not injective at {x}")));
            }
        }
        if self.image(1 % n) != imp.one() {
            return Err(Error::Internal("CRT map does not preserve 1".into()));
        }
        for x in 0..n {
            for y in 0..n {
                let (fx, fy) = (self.image(x), self.image(y));
                if self.image((x + y) % n) != imp.add(&fx, &fy)
                    || self.image(((x as u128 * y as u128) % n as u128) as u64) != imp.mul(&fx, &fy)
                {
                    return Err(Error::Internal(format!("CRT map is not a homomorphism at ({x},{y})")));
                }
            }
        }
        Ok(())
    }
}

pub fn crt_split(n: u64) -> Result<CrtSplit> {
    let factors = crt_decompose(n)?;
    let parts = factors.iter().map(|&q| make_zmod(q)).collect::<Result<Vec<_>>>()?;
    Ok(CrtSplit { whole: make_zmod(n)?, product: make_product(&parts)?, factors })
}
