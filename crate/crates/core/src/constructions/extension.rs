//! Trivial extensions `T(R,M)` and twisted extensions `K(+)_h K`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::RngCore;

use super::quotient::quotient_parts;
use super::util::{size_product, POOL_ALL};
use crate::ring::{Cursor, Elem, Ring, RingImpl, Value};
use crate::{Error, Result};

enum Action {
    /// `(a,m)(b,n) = (ab, an + mb)` with `m, n` in the module ring.
    Bimodule,
    /// `(a,m)(b,n) = (ab, h(a)n + bm)`; `h` tabulated by element index.
    Twisted(Vec<Value>),
}

struct Pairs {
    base: Ring,
    module: Ring,
    action: Action,
    size: Option<u64>,
}

impl Pairs {
    fn a(&self) -> &dyn RingImpl {
        self.base.imp()
    }

    fn m(&self) -> &dyn RingImpl {
        self.module.imp()
    }

    fn pair(a: Value, m: Value) -> Value {
        Value::Tuple(alloc::vec![a, m])
    }
}

fn split(v: &Value) -> (&Value, &Value) {
    let t = v.tuple();
    (&t[0], &t[1])
}

impl RingImpl for Pairs {
    fn zero(&self) -> Value {
        Pairs::pair(self.a().zero(), self.m().zero())
    }
    fn one(&self) -> Value {
        Pairs::pair(self.a().one(), self.m().zero())
    }
    fn add(&self, x: &Value, y: &Value) -> Value {
        let ((a, m), (b, n)) = (split(x), split(y));
        Pairs::pair(self.a().add(a, b), self.m().add(m, n))
    }
    fn neg(&self, x: &Value) -> Value {
        let (a, m) = split(x);
        Pairs::pair(self.a().neg(a), self.m().neg(m))
    }
    fn mul(&self, x: &Value, y: &Value) -> Value {
        let ((a, m), (b, n)) = (split(x), split(y));
        let second = match &self.action {
            Action::Bimodule => self.m().add(&self.m().mul(a, n), &self.m().mul(m, b)),
            Action::Twisted(h) => {
                let ha = &h[self.a().index_of(a) as usize];
                self.m().add(&self.m().mul(ha, n), &self.m().mul(b, m))
            }
        };
        Pairs::pair(self.a().mul(a, b), second)
    }
    fn scale(&self, k: &num_bigint::BigInt, x: &Value) -> Value {
        let (a, m) = split(x);
        Pairs::pair(self.a().scale(k, a), self.m().scale(k, m))
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn size(&self) -> Option<u64> {
        self.size
    }
    fn element_at(&self, index: u64) -> Value {
        let mm = self.module.size().expect("enumerable");
        Pairs::pair(self.a().element_at(index / mm), self.m().element_at(index % mm))
    }
    fn index_of(&self, v: &Value) -> u64 {
        let (a, m) = split(v);
        self.a().index_of(a) * self.module.size().expect("enumerable") + self.m().index_of(m)
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Value {
        Pairs::pair(self.a().sample(rng), self.m().sample(rng))
    }
    fn pool(&self) -> Vec<Value> {
        if let Some(n) = self.size.filter(|&n| n <= POOL_ALL) {
            return (0..n).map(|i| self.element_at(i)).collect();
        }
        let mut out = Vec::new();
        for a in self.a().pool().into_iter().take(8) {
            for m in self.m().pool().into_iter().take(8) {
                out.push(Pairs::pair(a.clone(), m));
            }
        }
        out
    }
    fn write(&self, v: &Value, out: &mut String) {
        let (a, m) = split(v);
        out.push('(');
        self.a().write(a, out);
        out.push('|');
        self.m().write(m, out);
        out.push(')');
    }
    fn parse(&self, cur: &mut Cursor<'_>) -> Result<Value> {
        cur.expect('(')?;
        let a = self.a().parse(cur)?;
        cur.expect('|')?;
        let m = self.m().parse(cur)?;
        cur.expect(')')?;
        Ok(Pairs::pair(a, m))
    }
}

fn pairs(label: String, base: &Ring, module: &Ring, action: Action) -> Ring {
    let size = size_product([base.size(), module.size()]);
    Ring::new(label, Pairs { base: base.clone(), module: module.clone(), action, size })
}

/// `T(R,R)`: pairs `(a|m)` with `(a,m)(b,n) = (ab, an + mb)`. Enumeration
/// has `a` most significant.
pub fn make_trivial_extension(base: &Ring) -> Result<Ring> {
    Ok(pairs(format!("Triv({})", base.label()), base, base, Action::Bimodule))
}

/// `T(S, S/I)` with `S` acting on `S/I` through the quotient map.
pub fn make_trivial_extension_quotient(base: &Ring, ideal_gens: &[Elem]) -> Result<Ring> {
    let (quotient, _) = quotient_parts(base, ideal_gens)?;
    let gens: Vec<String> = ideal_gens.iter().map(|g| base.render(g)).collect();
    let label = format!("TrivQ({},[{}])", base.label(), gens.join(","));
    Ok(pairs(label, base, &quotient, Action::Bimodule))
}

/// A ring endomorphism of a finite field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Endo {
    Id,
    /// `x -> x^p`.
    Frobenius,
    /// The endomorphism sending the field generator `t` to this literal.
    Image(String),
}

impl core::fmt::Display for Endo {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Endo::Id => f.write_str("id"),
            Endo::Frobenius => f.write_str("frob"),
            Endo::Image(s) => f.write_str(s),
        }
    }
}

fn is_field(k: &Ring) -> Result<bool> {
    let t = k.table()?;
    let commutative = t.indices().all(|a| t.indices().all(|b| t.mul(a, b) == t.mul(b, a)));
    Ok(commutative && t.len() > 1 && t.indices().filter(|&a| a != t.zero()).all(|a| t.is_unit(a)))
}

/// Tabulates `h` over the field and checks `h(1) = 1`, additivity and
/// multiplicativity on every pair.
fn endomorphism_table(k: &Ring, endo: &Endo) -> Result<Vec<Value>> {
    let t = k.table()?;
    let p = t.characteristic();
    let n = t.len();
    let values: Vec<Value> = match endo {
        Endo::Id => t.indices().map(|i| t.value(i).clone()).collect(),
        Endo::Frobenius => t
            .indices()
            .map(|x| {
                let mut acc = t.one();
                for _ in 0..p {
                    acc = t.mul(acc, x);
                }
                t.value(acc).clone()
            })
            .collect(),
        Endo::Image(lit) => {
            let u = k.parse(lit).map_err(|e| Error::InvalidEndomorphism(format!("image of t: {e}")))?;
            let u = k.index_of(&u)? as u32;
            // Element index i spells the coefficients of t^0, t^1, ... in base p.
            t.indices()
                .map(|x| {
                    let (mut rest, mut power, mut acc) = (x as u64, t.one(), t.zero());
                    while rest > 0 {
                        acc = t.add(acc, t.scale(rest % p, power));
                        power = t.mul(power, u);
                        rest /= p;
                    }
                    t.value(acc).clone()
                })
                .collect()
        }
    };
    let h: Vec<u32> = values.iter().map(|v| k.imp().index_of(v) as u32).collect();
    if h[t.one() as usize] != t.one() {
        return Err(Error::InvalidEndomorphism(format!("{endo} does not fix 1")));
    }
    for a in 0..n as u32 {
        for b in 0..n as u32 {
            if h[t.add(a, b) as usize] != t.add(h[a as usize], h[b as usize]) {
                return Err(Error::InvalidEndomorphism(format!("{endo} is not additive")));
            }
            if h[t.mul(a, b) as usize] != t.mul(h[a as usize], h[b as usize]) {
                return Err(Error::InvalidEndomorphism(format!("{endo} is not multiplicative")));
            }
        }
    }
    Ok(values)
}

/// `K(+)_h K`: pairs with `(a,m)(b,n) = (ab, h(a)n + bm)` over a finite field.
pub fn make_twisted_extension(field: &Ring, endo: &Endo) -> Result<Ring> {
    if !is_field(field)? {
        return Err(Error::InvalidParameter(format!("Twist needs a finite field, got {field}")));
    }
    let h = endomorphism_table(field, endo)?;
    let label = format!("Twist({},{endo})", field.label());
    Ok(pairs(label, field, field, Action::Twisted(h)))
}
