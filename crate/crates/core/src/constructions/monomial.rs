//! Monomial quotients of free and commutative polynomial algebras.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use rand::{Rng as _, RngCore};

use super::util::{digits, size_power, undigits, POOL_ALL};
use crate::ring::{Cursor, Ring, RingImpl, Value, Word};
use crate::{Error, Result};

/// Largest enumerable size for the monomial constructions.
pub const ENUM_LIMIT: u64 = 1 << 24;
/// Largest word basis a free monomial quotient will materialize.
pub const BASIS_LIMIT: usize = 1 << 20;

/// A forbidden subword: a literal word, or `w1*w2`, meaning `w1`, then a
/// nonempty gap, then `w2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    Word(String),
    Gap(String, String),
}

impl core::fmt::Display for Pattern {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Pattern::Word(w) => f.write_str(w),
            Pattern::Gap(a, b) => write!(f, "{a}*{b}"),
        }
    }
}

enum IdxPattern {
    Word(Word),
    Gap(Word, Word),
}

fn find_from(hay: &[u8], needle: &[u8], from: usize) -> Option<usize> {
    (from..=hay.len().checked_sub(needle.len())?).find(|&i| hay[i..].starts_with(needle))
}

impl IdxPattern {
    fn matches(&self, w: &[u8]) -> bool {
        match self {
            IdxPattern::Word(p) => find_from(w, p, 0).is_some(),
            IdxPattern::Gap(p, q) => match find_from(w, p, 0) {
                Some(i) => find_from(w, q, i + p.len() + 1).is_some(),
                None => false,
            },
        }
    }
}

fn shortlex(a: &Word, b: &Word) -> core::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Parses an optional coefficient: an integer or a parenthesized literal of
/// the coefficient ring. Returns `None` when neither is present.
fn parse_coefficient(field: &Ring, cur: &mut Cursor<'_>) -> Result<Option<Value>> {
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            let k = cur.int()?;
            Ok(Some(field.imp().scale(&k, &field.imp().one())))
        }
        Some('(') => {
            cur.expect('(')?;
            let v = field.imp().parse(cur)?;
            cur.expect(')')?;
            Ok(Some(v))
        }
        _ => Ok(None),
    }
}

fn write_coefficient(field: &Ring, c: &Value, out: &mut String) {
    let s = field.render_value(c);
    if s.bytes().all(|b| b.is_ascii_digit()) {
        out.push_str(&s);
    } else {
        let _ = write!(out, "({s})");
    }
}

struct FreeMonomial {
    field: Ring,
    gens: Vec<char>,
    patterns: Vec<IdxPattern>,
    max_len: usize,
    /// Basis words in shortlex order; the empty word first.
    basis: Vec<Word>,
    size: Option<u64>,
    radices: Vec<u64>,
}

impl FreeMonomial {
    fn f(&self) -> &dyn RingImpl {
        self.field.imp()
    }

    fn is_basis(&self, w: &[u8]) -> bool {
        w.len() <= self.max_len && !self.patterns.iter().any(|p| p.matches(w))
    }

    fn normalize(&self, terms: BTreeMap<(usize, Word), Value>) -> Value {
        let z = self.f().zero();
        Value::Words(terms.into_iter().filter(|(_, c)| *c != z).map(|((_, w), c)| (w, c)).collect())
    }

    fn accumulate(&self, terms: &mut BTreeMap<(usize, Word), Value>, w: Word, c: Value) {
        let key = (w.len(), w);
        let entry = terms.entry(key).or_insert_with(|| self.f().zero());
        *entry = self.f().add(entry, &c);
    }

    fn generator(&self, cur: &mut Cursor<'_>) -> Result<u8> {
        let at = cur.offset();
        let g = cur.letter()?;
        self.gens
            .iter()
            .position(|&x| x == g)
            .map(|i| i as u8)
            .ok_or_else(|| Error::Literal { offset: at, msg: format!("unknown generator `{g}`") })
    }

    fn word_value(&self, w: Word) -> Value {
        Value::Words(alloc::vec![(w, self.f().one())])
    }
}

impl RingImpl for FreeMonomial {
    fn zero(&self) -> Value {
        Value::Words(Vec::new())
    }
    fn one(&self) -> Value {
        self.normalize(BTreeMap::from([((0, Vec::new()), self.f().one())]))
    }
    fn add(&self, a: &Value, b: &Value) -> Value {
        let mut terms = BTreeMap::new();
        for (w, c) in a.words().iter().chain(b.words()) {
            self.accumulate(&mut terms, w.clone(), c.clone());
        }
        self.normalize(terms)
    }
    fn neg(&self, a: &Value) -> Value {
        Value::Words(a.words().iter().map(|(w, c)| (w.clone(), self.f().neg(c))).collect())
    }
    fn mul(&self, a: &Value, b: &Value) -> Value {
        let mut terms = BTreeMap::new();
        for (u, c) in a.words() {
            for (v, d) in b.words() {
                if u.len() + v.len() > self.max_len {
                    continue;
                }
                let mut w = u.clone();
                w.extend_from_slice(v);
                if self.patterns.iter().any(|p| p.matches(&w)) {
                    continue;
                }
                self.accumulate(&mut terms, w, self.f().mul(c, d));
            }
        }
        self.normalize(terms)
    }
    fn scale(&self, k: &BigInt, a: &Value) -> Value {
        let terms = a.words().iter().map(|(w, c)| ((w.len(), w.clone()), self.f().scale(k, c))).collect();
        self.normalize(terms)
    }
    fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }
    fn size(&self) -> Option<u64> {
        self.size
    }
    fn element_at(&self, index: u64) -> Value {
        let ds = digits(index, &self.radices);
        let terms = self.basis.iter().zip(ds).map(|(w, d)| ((w.len(), w.clone()), self.f().element_at(d))).collect();
        self.normalize(terms)
    }
    fn index_of(&self, v: &Value) -> u64 {
        let mut coeffs: BTreeMap<&Word, &Value> = BTreeMap::new();
        for (w, c) in v.words() {
            coeffs.insert(w, c);
        }
        let ds = self.basis.iter().map(|w| coeffs.get(w).map(|c| self.f().index_of(c)).unwrap_or(0));
        undigits(ds, &self.radices)
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Value {
        let short = self.basis.iter().take_while(|w| w.len() <= 3).count();
        let mut terms = BTreeMap::new();
        for _ in 0..rng.gen_range(0..=3) {
            let w = self.basis[rng.gen_range(0..short)].clone();
            let c = self.f().sample(rng);
            self.accumulate(&mut terms, w, c);
        }
        self.normalize(terms)
    }
    fn pool(&self) -> Vec<Value> {
        let mut out = alloc::vec![self.zero()];
        out.extend(self.basis.iter().take(POOL_ALL as usize - 1).map(|w| self.word_value(w.clone())));
        out
    }
    fn write(&self, v: &Value, out: &mut String) {
        let terms = v.words();
        if terms.is_empty() {
            out.push('0');
        }
        for (i, (w, c)) in terms.iter().enumerate() {
            if i > 0 {
                out.push('+');
            }
            write_coefficient(&self.field, c, out);
            for &g in w {
                out.push('*');
                out.push(self.gens[g as usize]);
            }
        }
    }
    fn parse(&self, cur: &mut Cursor<'_>) -> Result<Value> {
        let mut terms = BTreeMap::new();
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
            let coeff = parse_coefficient(&self.field, cur)?;
            let mut word = Word::new();
            if coeff.is_none() {
                word.push(self.generator(cur)?);
                while cur.eat('*') || matches!(cur.peek(), Some(c) if c.is_ascii_alphabetic()) {
                    word.push(self.generator(cur)?);
                }
            } else {
                while cur.eat('*') {
                    word.push(self.generator(cur)?);
                }
            }
            let mut c = coeff.unwrap_or_else(|| self.f().one());
            if negative {
                c = self.f().neg(&c);
            }
            if self.is_basis(&word) {
                self.accumulate(&mut terms, word, c);
            }
        }
        Ok(self.normalize(terms))
    }
    fn truncation(&self) -> Option<usize> {
        Some(self.max_len)
    }
}

/// `F<gens>` modulo the monomial ideal spanned by words containing a
/// forbidden pattern, cut off at word length `max_len`: words longer than
/// `max_len` are set to zero. Enumeration runs over coefficient vectors
/// indexed by the shortlex word basis, the empty word most significant.
pub fn make_free_monomial_quotient(field: &Ring, gens: &[char], patterns: &[Pattern], max_len: usize) -> Result<Ring> {
    if max_len < 2 {
        return Err(Error::InvalidParameter(format!("word-length cap must be at least 2, got {max_len}")));
    }
    if gens.is_empty() || gens.len() > 26 {
        return Err(Error::InvalidParameter("FreeQ needs between 1 and 26 generators".into()));
    }
    for (i, g) in gens.iter().enumerate() {
        if !g.is_ascii_alphabetic() || gens[..i].contains(g) {
            return Err(Error::InvalidParameter(format!("generator `{g}` is invalid or repeated")));
        }
    }
    if field.size().is_none() {
        return Err(Error::InvalidParameter("FreeQ needs a finite coefficient field".into()));
    }
    let to_word = |s: &str| -> Result<Word> {
        if s.is_empty() {
            return Err(Error::InvalidParameter("empty pattern word".into()));
        }
        s.chars()
            .map(|c| {
                gens.iter()
                    .position(|&g| g == c)
                    .map(|i| i as u8)
                    .ok_or_else(|| Error::InvalidParameter(format!("pattern references unknown generator `{c}`")))
            })
            .collect()
    };
    let idx_patterns = patterns
        .iter()
        .map(|p| {
            Ok(match p {
                Pattern::Word(w) => IdxPattern::Word(to_word(w)?),
                Pattern::Gap(a, b) => IdxPattern::Gap(to_word(a)?, to_word(b)?),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut ring = FreeMonomial {
        field: field.clone(),
        gens: gens.to_vec(),
        patterns: idx_patterns,
        max_len,
        basis: Vec::new(),
        size: None,
        radices: Vec::new(),
    };
    let mut layer: Vec<Word> = alloc::vec![Vec::new()];
    ring.basis.push(Vec::new());
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..gens.len() as u8 {
                let mut v = w.clone();
                v.push(g);
                if ring.is_basis(&v) {
                    next.push(v);
                }
            }
        }
        next.sort_by(shortlex);
        ring.basis.extend(next.iter().cloned());
        if ring.basis.len() > BASIS_LIMIT {
            return Err(Error::InvalidParameter(format!("word basis exceeds {BASIS_LIMIT} words")));
        }
        layer = next;
    }
    ring.size = size_power(field.size(), ring.basis.len()).filter(|&n| n <= ENUM_LIMIT);
    ring.radices = alloc::vec![field.size().expect("finite"); ring.basis.len()];
    let pats: Vec<String> = patterns.iter().map(|p| format!("{p}")).collect();
    let gen_list: Vec<String> = gens.iter().map(|g| String::from(*g)).collect();
    let label = format!("FreeQ({},[{}],[{}],{max_len})", field.label(), gen_list.join(","), pats.join(","));
    Ok(Ring::new(label, ring))
}

struct CommMonomial {
    field: Ring,
    vars: Vec<(char, u32)>,
    caps: Vec<u64>,
    /// Monomial index pair -> product index, `None` when a cap overflows.
    table: Vec<Option<usize>>,
    monomials: usize,
    /// Monomial indices in rendering order: by total degree, then exponents descending.
    order: Vec<usize>,
    size: Option<u64>,
    radices: Vec<u64>,
}

impl CommMonomial {
    fn f(&self) -> &dyn RingImpl {
        self.field.imp()
    }

    fn coeffs<'a>(&self, v: &'a Value) -> &'a [Value] {
        v.tuple()
    }

    fn lift(&self, f: impl FnMut(usize) -> Value) -> Value {
        Value::Tuple((0..self.monomials).map(f).collect())
    }
}

impl RingImpl for CommMonomial {
    fn zero(&self) -> Value {
        self.lift(|_| self.f().zero())
    }
    fn one(&self) -> Value {
        self.lift(|i| if i == 0 { self.f().one() } else { self.f().zero() })
    }
    fn add(&self, a: &Value, b: &Value) -> Value {
        let (a, b) = (self.coeffs(a), self.coeffs(b));
        self.lift(|i| self.f().add(&a[i], &b[i]))
    }
    fn neg(&self, a: &Value) -> Value {
        let a = self.coeffs(a);
        self.lift(|i| self.f().neg(&a[i]))
    }
    fn mul(&self, a: &Value, b: &Value) -> Value {
        let (a, b) = (self.coeffs(a), self.coeffs(b));
        let zero = self.f().zero();
        let mut out = alloc::vec![zero.clone(); self.monomials];
        for (i, x) in a.iter().enumerate() {
            if *x == zero {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if *y == zero {
                    continue;
                }
                if let Some(k) = self.table[i * self.monomials + j] {
                    out[k] = self.f().add(&out[k], &self.f().mul(x, y));
                }
            }
        }
        Value::Tuple(out)
    }
    fn scale(&self, k: &BigInt, a: &Value) -> Value {
        let a = self.coeffs(a);
        self.lift(|i| self.f().scale(k, &a[i]))
    }
    fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }
    fn size(&self) -> Option<u64> {
        self.size
    }
    fn element_at(&self, index: u64) -> Value {
        let ds = digits(index, &self.radices);
        Value::Tuple(ds.into_iter().map(|d| self.f().element_at(d)).collect())
    }
    fn index_of(&self, v: &Value) -> u64 {
        undigits(self.coeffs(v).iter().map(|c| self.f().index_of(c)), &self.radices)
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Value {
        self.lift(|_| self.f().sample(rng))
    }
    fn pool(&self) -> Vec<Value> {
        if let Some(n) = self.size.filter(|&n| n <= POOL_ALL) {
            return (0..n).map(|i| self.element_at(i)).collect();
        }
        let mut out = alloc::vec![self.zero()];
        let cs: Vec<Value> = self.f().pool().into_iter().filter(|c| *c != self.f().zero()).take(2).collect();
        for &m in &self.order {
            for c in &cs {
                out.push(self.lift(|i| if i == m { c.clone() } else { self.f().zero() }));
            }
        }
        out.truncate(POOL_ALL as usize);
        out
    }
    fn write(&self, v: &Value, out: &mut String) {
        let cs = self.coeffs(v);
        let zero = self.f().zero();
        let mut any = false;
        for &m in &self.order {
            if cs[m] == zero {
                continue;
            }
            if any {
                out.push('+');
            }
            any = true;
            write_coefficient(&self.field, &cs[m], out);
            let exps = digits(m as u64, &self.caps);
            for ((name, _), e) in self.vars.iter().zip(exps) {
                match e {
                    0 => {}
                    1 => {
                        let _ = write!(out, "*{name}");
                    }
                    e => {
                        let _ = write!(out, "*{name}^{e}");
                    }
                }
            }
        }
        if !any {
            out.push('0');
        }
    }
    fn parse(&self, cur: &mut Cursor<'_>) -> Result<Value> {
        let mut acc = self.zero();
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
            let coeff = parse_coefficient(&self.field, cur)?;
            let mut exps = alloc::vec![0u64; self.vars.len()];
            let mut need_var = coeff.is_none();
            loop {
                if !need_var && !cur.eat('*') {
                    break;
                }
                need_var = false;
                let at = cur.offset();
                let name = cur.letter()?;
                let v = self
                    .vars
                    .iter()
                    .position(|(n, _)| *n == name)
                    .ok_or_else(|| Error::Literal { offset: at, msg: format!("unknown variable `{name}`") })?;
                exps[v] += if cur.eat('^') { cur.uint()? } else { 1 };
            }
            let mut c = coeff.unwrap_or_else(|| self.f().one());
            if negative {
                c = self.f().neg(&c);
            }
            if exps.iter().zip(&self.caps).all(|(e, cap)| e < cap) {
                let m = undigits(exps, &self.caps) as usize;
                let term = self.lift(|i| if i == m { c.clone() } else { self.f().zero() });
                acc = self.add(&acc, &term);
            }
        }
        Ok(acc)
    }
}

/// `F[x, y, ...]/(x^{cap_x}, y^{cap_y}, ...)`. Monomials are indexed mixed
/// radix over exponents, first variable most significant; enumeration runs
/// over coefficient vectors with the constant monomial most significant.
pub fn make_comm_monomial_quotient(field: &Ring, caps: &[(char, u32)]) -> Result<Ring> {
    if caps.is_empty() || caps.len() > 2 {
        return Err(Error::InvalidParameter("CommQ supports one or two variables".into()));
    }
    for (i, (v, cap)) in caps.iter().enumerate() {
        if *cap < 1 {
            return Err(Error::InvalidParameter(format!("cap of `{v}` must be at least 1")));
        }
        if !v.is_ascii_alphabetic() || caps[..i].iter().any(|(w, _)| w == v) {
            return Err(Error::InvalidParameter(format!("variable `{v}` is invalid or repeated")));
        }
    }
    if field.size().is_none() {
        return Err(Error::InvalidParameter("CommQ needs a finite coefficient field".into()));
    }
    let caps_u: Vec<u64> = caps.iter().map(|(_, c)| *c as u64).collect();
    let monomials = caps_u.iter().product::<u64>() as usize;
    let mut table = Vec::with_capacity(monomials * monomials);
    for i in 0..monomials {
        let ei = digits(i as u64, &caps_u);
        for j in 0..monomials {
            let ej = digits(j as u64, &caps_u);
            let sum: Vec<u64> = ei.iter().zip(&ej).map(|(a, b)| a + b).collect();
            table.push(if sum.iter().zip(&caps_u).all(|(e, c)| e < c) {
                Some(undigits(sum, &caps_u) as usize)
            } else {
                None
            });
        }
    }
    let mut order: Vec<usize> = (0..monomials).collect();
    order.sort_by_key(|&m| {
        let e = digits(m as u64, &caps_u);
        (e.iter().sum::<u64>(), core::cmp::Reverse(e))
    });
    let size = size_power(field.size(), monomials).filter(|&n| n <= ENUM_LIMIT);
    let radices = alloc::vec![field.size().expect("finite"); monomials];
    let parts: Vec<String> = caps.iter().map(|(v, c)| format!("{v}:{c}")).collect();
    let label = format!("CommQ({},{{{}}})", field.label(), parts.join(","));
    Ok(Ring::new(
        label,
        CommMonomial {
            field: field.clone(),
            vars: caps.to_vec(),
            caps: caps_u,
            table,
            monomials,
            order,
            size,
            radices,
        },
    ))
}
