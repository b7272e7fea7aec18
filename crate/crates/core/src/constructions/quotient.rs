//! Coset rings `R/I` and corner rings `eR`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::RngCore;

use super::util::POOL_ALL;
use crate::ring::{ideal_closure, Cursor, Elem, IdealHandle, Ring, RingImpl, Value};
use crate::{Error, Result};

/// Coset bookkeeping of a finite ring modulo an ideal. Each coset is
/// represented by its member of least enumeration index.
pub(crate) struct Cosets {
    parent: Ring,
    /// Parent index -> coset index.
    coset_of: Vec<u32>,
    /// Coset index -> parent index of its representative.
    reps: Vec<u32>,
}

impl Cosets {
    pub(crate) fn new(ideal: &IdealHandle) -> Result<Cosets> {
        let parent = ideal.ring().clone();
        let t = parent.table()?;
        let members: Vec<u32> = ideal.indices().collect();
        let mut coset_of = alloc::vec![u32::MAX; t.len()];
        let mut reps = Vec::new();
        for x in t.indices() {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &m in &members {
                coset_of[t.add(x, m) as usize] = c;
            }
        }
        Ok(Cosets { parent, coset_of, reps })
    }

    pub(crate) fn len(&self) -> usize {
        self.reps.len()
    }

    /// Canonical representative of the coset of `v`.
    pub(crate) fn reduce(&self, v: &Value) -> Value {
        let i = self.parent.imp().index_of(v) as usize;
        self.rep_value(self.coset_of[i])
    }

    fn rep_value(&self, coset: u32) -> Value {
        self.parent.imp().element_at(self.reps[coset as usize] as u64)
    }
}

pub(crate) struct Quotient {
    cosets: Arc<Cosets>,
}

impl Quotient {
    pub(crate) fn new(cosets: Arc<Cosets>) -> Quotient {
        Quotient { cosets }
    }

    fn p(&self) -> &dyn RingImpl {
        self.cosets.parent.imp()
    }
}

impl RingImpl for Quotient {
    fn zero(&self) -> Value {
        self.cosets.reduce(&self.p().zero())
    }
    fn one(&self) -> Value {
        self.cosets.reduce(&self.p().one())
    }
    fn add(&self, a: &Value, b: &Value) -> Value {
        self.cosets.reduce(&self.p().add(a, b))
    }
    fn neg(&self, a: &Value) -> Value {
        self.cosets.reduce(&self.p().neg(a))
    }
    fn mul(&self, a: &Value, b: &Value) -> Value {
        self.cosets.reduce(&self.p().mul(a, b))
    }
    fn scale(&self, k: &num_bigint::BigInt, a: &Value) -> Value {
        self.cosets.reduce(&self.p().scale(k, a))
    }
    fn characteristic(&self) -> u64 {
        let one = self.one();
        let zero = self.zero();
        let mut acc = one.clone();
        let mut m = 1;
        while acc != zero {
            acc = self.add(&acc, &one);
            m += 1;
        }
        m
    }
    fn size(&self) -> Option<u64> {
        Some(self.cosets.len() as u64)
    }
    fn element_at(&self, index: u64) -> Value {
        self.cosets.rep_value(index as u32)
    }
    fn index_of(&self, v: &Value) -> u64 {
        let i = self.p().index_of(v) as usize;
        self.cosets.coset_of[i] as u64
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Value {
        self.cosets.reduce(&self.p().sample(rng))
    }
    fn pool(&self) -> Vec<Value> {
        (0..(self.cosets.len() as u64).min(POOL_ALL)).map(|i| self.element_at(i)).collect()
    }
    fn write(&self, v: &Value, out: &mut String) {
        self.p().write(v, out);
    }
    fn parse(&self, cur: &mut Cursor<'_>) -> Result<Value> {
        let v = self.p().parse(cur)?;
        Ok(self.cosets.reduce(&v))
    }
}

fn quotient_label(ring: &Ring, shown: &[Elem]) -> String {
    let parts: Vec<String> = shown.iter().map(|x| ring.render(x)).collect();
    format!("Quot({},[{}])", ring.label(), parts.join(","))
}

/// `R/I` for a validated ideal `I` of a finite ring.
pub fn make_quotient_by(ring: &Ring, ideal: &IdealHandle) -> Result<Ring> {
    if ideal.ring().id() != ring.id() {
        return Err(Error::RingMismatch);
    }
    ideal.validate()?;
    let shown = if ideal.generators().is_empty() { ideal.elements() } else { ideal.generators().to_vec() };
    let cosets = Arc::new(Cosets::new(ideal)?);
    Ok(Ring::new(quotient_label(ring, &shown), Quotient::new(cosets)))
}

/// `R/(gens)`.
pub fn make_quotient(ring: &Ring, gens: &[Elem]) -> Result<Ring> {
    let ideal = ideal_closure(ring, gens)?;
    make_quotient_by(ring, &ideal)
}

pub(crate) fn quotient_parts(ring: &Ring, gens: &[Elem]) -> Result<(Ring, Arc<Cosets>)> {
    let ideal = ideal_closure(ring, gens)?;
    let cosets = Arc::new(Cosets::new(&ideal)?);
    let q = Ring::new(quotient_label(ring, gens), Quotient::new(cosets.clone()));
    Ok((q, cosets))
}

/// `eR` for a central idempotent `e`, with identity `e`.
struct Corner {
    parent: Ring,
    e: Value,
    elements: Option<Vec<Value>>,
    index: BTreeMap<Value, u64>,
}

impl Corner {
    fn p(&self) -> &dyn RingImpl {
        self.parent.imp()
    }

    fn project(&self, v: &Value) -> Value {
        self.p().mul(&self.e, v)
    }
}

impl RingImpl for Corner {
    fn zero(&self) -> Value {
        self.p().zero()
    }
    fn one(&self) -> Value {
        self.e.clone()
    }
    fn add(&self, a: &Value, b: &Value) -> Value {
        self.p().add(a, b)
    }
    fn neg(&self, a: &Value) -> Value {
        self.p().neg(a)
    }
    fn mul(&self, a: &Value, b: &Value) -> Value {
        self.p().mul(a, b)
    }
    fn scale(&self, k: &num_bigint::BigInt, a: &Value) -> Value {
        self.p().scale(k, a)
    }
    fn characteristic(&self) -> u64 {
        let zero = self.zero();
        let bound = match self.p().characteristic() {
            0 => 1 << 12,
            c => c,
        };
        let mut acc = self.e.clone();
        for m in 1..=bound {
            if acc == zero {
                return m;
            }
            acc = self.add(&acc, &self.e);
        }
        0
    }
    fn size(&self) -> Option<u64> {
        self.elements.as_ref().map(|v| v.len() as u64)
    }
    fn element_at(&self, index: u64) -> Value {
        self.elements.as_ref().expect("enumerable")[index as usize].clone()
    }
    fn index_of(&self, v: &Value) -> u64 {
        self.index[v]
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Value {
        self.project(&self.p().sample(rng))
    }
    fn pool(&self) -> Vec<Value> {
        let mut out: Vec<Value> = Vec::new();
        for v in self.p().pool() {
            let x = self.project(&v);
            if !out.contains(&x) {
                out.push(x);
            }
        }
        out
    }
    fn write(&self, v: &Value, out: &mut String) {
        self.p().write(v, out);
    }
    fn parse(&self, cur: &mut Cursor<'_>) -> Result<Value> {
        let at = cur.offset();
        let v = self.p().parse(cur)?;
        if self.project(&v) != v {
            return Err(Error::Literal { offset: at, msg: "element is not in the corner ring".into() });
        }
        Ok(v)
    }
}

/// Corner ring `eR` of a central idempotent `e`, unital with identity `e`.
/// Enumeration follows the parent: elements `ex` in order of first occurrence.
pub fn make_corner(ring: &Ring, e: &Elem) -> Result<Ring> {
    if ring.mul(e, e) != *e {
        return Err(Error::NotIdempotent);
    }
    let imp = ring.imp();
    let ev = e.value().clone();
    let mut index = BTreeMap::new();
    let elements = match ring.size() {
        Some(n) if n <= 1 << 16 => {
            let mut out = Vec::new();
            for i in 0..n {
                let x = imp.mul(&ev, &imp.element_at(i));
                if !index.contains_key(&x) {
                    index.insert(x.clone(), out.len() as u64);
                    out.push(x);
                }
            }
            Some(out)
        }
        _ => None,
    };
    let label = format!("Corner({},{})", ring.label(), ring.render(e));
    Ok(Ring::new(label, Corner { parent: ring.clone(), e: ev, elements, index }))
}
