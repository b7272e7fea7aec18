//! `Z`, `Z/n` and finite fields.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng as _, RngCore};

use super::util::{digits, is_prime, undigits, POOL_ALL};
use crate::ring::{Cursor, Ring, RingImpl, Value};
use crate::{Error, Result};

/// Integers sampled for `Z` lie in `[-SAMPLE_RADIUS, SAMPLE_RADIUS]`.
pub const SAMPLE_RADIUS: i64 = 16;

struct Integers;

impl RingImpl for Integers {
    fn zero(&self) -> Value {
        Value::Int(BigInt::from(0))
    }
    fn one(&self) -> Value {
        Value::Int(BigInt::from(1))
    }
    fn add(&self, a: &Value, b: &Value) -> Value {
        Value::Int(a.int() + b.int())
    }
    fn neg(&self, a: &Value) -> Value {
        Value::Int(-a.int())
    }
    fn mul(&self, a: &Value, b: &Value) -> Value {
        Value::Int(a.int() * b.int())
    }
    fn scale(&self, k: &BigInt, a: &Value) -> Value {
        Value::Int(k * a.int())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn size(&self) -> Option<u64> {
        None
    }
    fn element_at(&self, _: u64) -> Value {
        unreachable!("Z is not enumerable")
    }
    fn index_of(&self, _: &Value) -> u64 {
        unreachable!("Z is not enumerable")
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Value {
        Value::Int(BigInt::from(rng.gen_range(-SAMPLE_RADIUS..=SAMPLE_RADIUS)))
    }
    fn pool(&self) -> Vec<Value> {
        [0i64, 1, -1, 2, -2, 3, -3].iter().map(|&k| Value::Int(BigInt::from(k))).collect()
    }
    fn write(&self, v: &Value, out: &mut String) {
        let _ = write!(out, "{}", v.int());
    }
    fn parse(&self, cur: &mut Cursor<'_>) -> Result<Value> {
        Ok(Value::Int(cur.int()?))
    }
}

/// The integers: characteristic 0, not enumerable, sampled from a bounded range.
pub fn make_integers() -> Ring {
    Ring::new("Z", Integers)
}

struct Residues {
    n: u64,
}

impl RingImpl for Residues {
    fn zero(&self) -> Value {
        Value::Res(0)
    }
    fn one(&self) -> Value {
        Value::Res(1 % self.n)
    }
    fn add(&self, a: &Value, b: &Value) -> Value {
        Value::Res(((a.res() as u128 + b.res() as u128) % self.n as u128) as u64)
    }
    fn neg(&self, a: &Value) -> Value {
        Value::Res((self.n - a.res()) % self.n)
    }
    fn mul(&self, a: &Value, b: &Value) -> Value {
        Value::Res(((a.res() as u128 * b.res() as u128) % self.n as u128) as u64)
    }
    fn scale(&self, k: &BigInt, a: &Value) -> Value {
        let k = k.mod_floor(&BigInt::from(self.n)).to_u64().expect("reduced");
        self.mul(&Value::Res(k), a)
    }
    fn characteristic(&self) -> u64 {
        self.n
    }
    fn size(&self) -> Option<u64> {
        Some(self.n)
    }
    fn element_at(&self, index: u64) -> Value {
        Value::Res(index)
    }
    fn index_of(&self, v: &Value) -> u64 {
        v.res()
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Value {
        Value::Res(rng.gen_range(0..self.n))
    }
    fn pool(&self) -> Vec<Value> {
        (0..self.n.min(POOL_ALL)).map(Value::Res).collect()
    }
    fn write(&self, v: &Value, out: &mut String) {
        let _ = write!(out, "{}", v.res());
    }
    fn parse(&self, cur: &mut Cursor<'_>) -> Result<Value> {
        let k = cur.int()?;
        Ok(Value::Res(k.mod_floor(&BigInt::from(self.n)).to_u64().expect("reduced")))
    }
}

/// `Z/n`, elements `0..n` in order.
pub fn make_zmod(n: u64) -> Result<Ring> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("Zn needs n >= 2, got {n}")));
    }
    Ok(Ring::new(format!("Zn({n})"), Residues { n }))
}

/// `GF(p^k)` as `GF(p)[t]/(m(t))`. Element index `sum c_i p^i` is stored as
/// the residue payload; `c_0` is the constant term.
struct ExtensionField {
    p: u64,
    /// Monic modulus, low to high, length `k + 1`.
    modulus: Vec<u64>,
    size: u64,
}

impl ExtensionField {
    fn k(&self) -> usize {
        self.modulus.len() - 1
    }

    fn radices(&self) -> Vec<u64> {
        alloc::vec![self.p; self.k()]
    }

    /// Coefficients `c_0..c_{k-1}`.
    fn coeffs(&self, v: &Value) -> Vec<u64> {
        let mut ds = digits(v.res(), &self.radices());
        ds.reverse();
        ds
    }

    fn pack(&self, cs: &[u64]) -> Value {
        Value::Res(undigits(cs.iter().rev().copied(), &self.radices()))
    }

    fn reduce(&self, mut prod: Vec<u64>) -> Vec<u64> {
        let k = self.k();
        let p = self.p;
        for deg in (k..prod.len()).rev() {
            let c = prod[deg] % p;
            if c == 0 {
                continue;
            }
            for (i, &m) in self.modulus.iter().enumerate() {
                let at = deg - k + i;
                prod[at] = (prod[at] + (p - c) * m % p) % p;
            }
        }
        prod.truncate(k);
        prod.resize(k, 0);
        prod
    }
}

impl RingImpl for ExtensionField {
    fn zero(&self) -> Value {
        Value::Res(0)
    }
    fn one(&self) -> Value {
        Value::Res(1)
    }
    fn add(&self, a: &Value, b: &Value) -> Value {
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let s: Vec<u64> = x.iter().zip(&y).map(|(a, b)| (a + b) % self.p).collect();
        self.pack(&s)
    }
    fn neg(&self, a: &Value) -> Value {
        let s: Vec<u64> = self.coeffs(a).iter().map(|c| (self.p - c) % self.p).collect();
        self.pack(&s)
    }
    fn mul(&self, a: &Value, b: &Value) -> Value {
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let mut prod = alloc::vec![0u64; 2 * self.k()];
        for (i, &a) in x.iter().enumerate() {
            for (j, &b) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % self.p;
            }
        }
        self.pack(&self.reduce(prod))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn size(&self) -> Option<u64> {
        Some(self.size)
    }
    fn element_at(&self, index: u64) -> Value {
        Value::Res(index)
    }
    fn index_of(&self, v: &Value) -> u64 {
        v.res()
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Value {
        Value::Res(rng.gen_range(0..self.size))
    }
    fn pool(&self) -> Vec<Value> {
        (0..self.size.min(POOL_ALL)).map(Value::Res).collect()
    }
    fn write(&self, v: &Value, out: &mut String) {
        out.push_str(&render_poly(&self.coeffs(v), 't'));
    }
    fn parse(&self, cur: &mut Cursor<'_>) -> Result<Value> {
        let cs = parse_poly(cur, 't', self.p)?;
        let mut r = poly_mod(&cs, &self.modulus, self.p);
        r.resize(self.k(), 0);
        Ok(self.pack(&r))
    }
}

/// Renders `sum c_i v^i` with descending powers, e.g. `2*t^2+t+1`.
pub fn render_poly(cs: &[u64], var: char) -> String {
    let mut out = String::new();
    for (i, &c) in cs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        match (i, c) {
            (0, c) => {
                let _ = write!(out, "{c}");
            }
            (_, 1) => out.push(var),
            (_, c) => {
                let _ = write!(out, "{c}*{var}");
            }
        }
        if i > 1 {
            let _ = write!(out, "^{i}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses a signed sum of terms `c`, `c*v`, `v`, `v^e`, `c*v^e` with
/// coefficients reduced mod `p`; returns coefficients low to high.
pub fn parse_poly(cur: &mut Cursor<'_>, var: char, p: u64) -> Result<Vec<u64>> {
    let mut cs: Vec<u64> = Vec::new();
    let mut first = true;
    loop {
        let negative = if cur.eat('-') {
            true
        } else if first || cur.eat('+') {
            false
        } else {
            break;
        };
        first = false;
        let mut coeff = BigInt::from(1);
        let mut has_coeff = false;
        if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = cur.int()?;
            has_coeff = true;
        }
        let mut exp = 0u64;
        let has_var = if has_coeff { cur.eat('*') } else { true };
        if has_var {
            if cur.peek() != Some(var) {
                return Err(cur.error(format!("expected `{var}`")));
            }
            cur.eat(var);
            exp = 1;
            if cur.eat('^') {
                exp = cur.uint()?;
            }
        }
        if negative {
            coeff = -coeff;
        }
        let c = coeff.mod_floor(&BigInt::from(p)).to_u64().expect("reduced");
        let e = exp as usize;
        if cs.len() <= e {
            cs.resize(e + 1, 0);
        }
        cs[e] = (cs[e] + c) % p;
    }
    Ok(cs)
}

fn poly_mod(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let inv_lead = inverse_mod(m[dm], p);
    while r.len() > dm {
        let top = *r.last().expect("nonempty");
        if top != 0 {
            let f = top * inv_lead % p;
            let shift = r.len() - 1 - dm;
            for (i, &mc) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - f * mc % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    (1..p).find(|&x| a * x % p == 1).expect("nonzero element of a prime field")
}

/// Whether the monic polynomial `m` (low to high) is irreducible over GF(p).
pub fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = m.len() - 1;
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut cand: Vec<u64> = digits(idx, &alloc::vec![p; d]);
            cand.reverse();
            cand.push(1);
            if poly_mod(m, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Parses a modulus literal such as `t^2+t+1`.
pub fn parse_modulus(text: &str, p: u64) -> Result<Vec<u64>> {
    let mut cur = Cursor::new(text);
    let mut cs = parse_poly(&mut cur, 't', p)?;
    cur.finish()?;
    while cs.last() == Some(&0) {
        cs.pop();
    }
    Ok(cs)
}

/// `GF(p)` or, with a modulus, `GF(p)[t]/(modulus)`.
pub fn make_gf(p: u64, modulus: Option<&[u64]>) -> Result<Ring> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("GF needs a prime characteristic, got {p}")));
    }
    let Some(m) = modulus else {
        return Ok(Ring::new(format!("GF({p})"), Residues { n: p }));
    };
    let mut m: Vec<u64> = m.iter().map(|c| c % p).collect();
    while m.last() == Some(&0) {
        m.pop();
    }
    if m.len() < 3 {
        return Err(Error::InvalidParameter("GF modulus must have degree at least 2".into()));
    }
    if m.last() != Some(&1) {
        return Err(Error::InvalidParameter("GF modulus must be monic".into()));
    }
    if !is_irreducible(&m, p) {
        return Err(Error::InvalidParameter(format!("{} is reducible over GF({p})", render_poly(&m, 't'))));
    }
    let k = m.len() - 1;
    let size = p.checked_pow(k as u32).ok_or_else(|| Error::InvalidParameter("field too large".into()))?;
    let label = format!("GF({p},{})", render_poly(&m, 't'));
    Ok(Ring::new(label, ExtensionField { p, modulus: m, size }))
}
