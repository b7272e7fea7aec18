//! Effective rings.
//!
//! A [`Ring`] is a cheaply clonable handle around a construction-specific
//! [`RingImpl`]. Elements are plain [`Value`] payloads tagged with the id of
//! the ring that produced them; every operation on [`Elem`]s checks that tag
//! and panics on a mismatch, so nested constructions can never silently
//! coerce values between rings.
//!
//! Enumeration order is part of each construction's contract: index `i` maps
//! to the element whose mixed-radix digits (first component most significant)
//! spell `i`. Exhaustive searches are reproducible because of it.

mod arith;
pub(crate) mod axioms;
mod ideal;
mod literal;
mod structure;
mod table;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use once_cell::race::OnceBox;
use rand::RngCore;

use crate::{Error, Result};

pub use arith::{binomial, factorial, Weight};
pub use axioms::ring_axioms;
pub use ideal::{ideal_closure, ideal_power_is_zero, ideal_product, IdealHandle};
pub use literal::Cursor;
pub use structure::{
    idempotents, is_regular, is_unit, jacobson_radical, left_annihilator, lower_nilradical, nilpotents,
    noncentral_idempotent, quotient_ring, radicals, right_annihilator, upper_nilradical, Radicals,
};
pub use table::FiniteTable;

/// Largest ring for which a full operation table is materialized.
pub const TABLE_LIMIT: u64 = 1024;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Opaque identity of a constructed ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u64);

/// A generator word of a free monomial quotient (generator indices).
pub type Word = Vec<u8>;

/// Canonical element payload. Which variant a ring uses, and what the
/// components mean, is fixed by its construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Int(BigInt),
    Res(u64),
    Tuple(Vec<Value>),
    /// Sparse linear combination of basis words, sorted, zero coefficients dropped.
    Words(Vec<(Word, Value)>),
}

impl Value {
    pub fn res(&self) -> u64 {
        match self {
            Value::Res(r) => *r,
            other => panic!("expected a residue payload, got {other:?}"),
        }
    }

    pub fn int(&self) -> &BigInt {
        match self {
            Value::Int(i) => i,
            other => panic!("expected an integer payload, got {other:?}"),
        }
    }

    pub fn tuple(&self) -> &[Value] {
        match self {
            Value::Tuple(t) => t,
            other => panic!("expected a tuple payload, got {other:?}"),
        }
    }

    pub fn words(&self) -> &[(Word, Value)] {
        match self {
            Value::Words(w) => w,
            other => panic!("expected a word-combination payload, got {other:?}"),
        }
    }
}

/// Behaviour of one ring construction, on raw payloads.
pub trait RingImpl: Send + Sync {
    fn zero(&self) -> Value;
    fn one(&self) -> Value;
    fn add(&self, a: &Value, b: &Value) -> Value;
    fn neg(&self, a: &Value) -> Value;
    fn mul(&self, a: &Value, b: &Value) -> Value;

    fn sub(&self, a: &Value, b: &Value) -> Value {
        self.add(a, &self.neg(b))
    }

    /// `k`-fold sum of `a` (negated for negative `k`).
    fn scale(&self, k: &BigInt, a: &Value) -> Value {
        arith::scale_by_doubling(self, k, a)
    }

    /// 0 means characteristic zero.
    fn characteristic(&self) -> u64;

    /// Number of elements when the ring can be enumerated.
    fn size(&self) -> Option<u64>;

    /// Element with the given enumeration index; `index < size`.
    fn element_at(&self, index: u64) -> Value;

    /// Inverse of [`RingImpl::element_at`].
    fn index_of(&self, v: &Value) -> u64;

    fn sample(&self, rng: &mut dyn RngCore) -> Value;

    /// A short deterministic list of "small" elements, used to seed directed
    /// searches on rings too large to enumerate.
    fn pool(&self) -> Vec<Value>;

    fn write(&self, v: &Value, out: &mut String);

    fn parse(&self, cur: &mut Cursor<'_>) -> Result<Value>;

    /// Word-length cap for truncated constructions.
    fn truncation(&self) -> Option<usize> {
        None
    }
}

/// Capability flags of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Capabilities {
    pub enumerable: bool,
    pub samplable: bool,
}

struct RingInner {
    id: RingId,
    label: String,
    imp: Box<dyn RingImpl>,
    table: OnceBox<FiniteTable>,
}

/// Handle to an effective ring.
#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Ring").field(&self.0.label).finish()
    }
}

/// Rings compare by identity: two separately built copies are different rings.
impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        self.id() == other.id()
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.label)
    }
}

/// An element of a ring: payload plus owner.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem {
    ring: RingId,
    value: Value,
}

impl Elem {
    pub fn owner(&self) -> RingId {
        self.ring
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn into_value(self) -> Value {
        self.value
    }
}

impl Ring {
    pub fn new(label: impl Into<String>, imp: impl RingImpl + 'static) -> Ring {
        Ring(Arc::new(RingInner {
            id: RingId(NEXT_ID.fetch_add(1, Ordering::Relaxed)),
            label: label.into(),
            imp: Box::new(imp),
            table: OnceBox::new(),
        }))
    }

    pub fn id(&self) -> RingId {
        self.0.id
    }

    /// The ring-spec text this ring was built from.
    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn imp(&self) -> &dyn RingImpl {
        &*self.0.imp
    }

    pub fn characteristic(&self) -> u64 {
        self.imp().characteristic()
    }

    pub fn size(&self) -> Option<u64> {
        self.imp().size()
    }

    pub fn capabilities(&self) -> Capabilities {
        Capabilities { enumerable: self.size().is_some(), samplable: true }
    }

    /// The zero ring: representable, but checkers flag it instead of judging it.
    pub fn is_trivial(&self) -> bool {
        self.imp().one() == self.imp().zero()
    }

    pub fn truncation(&self) -> Option<usize> {
        self.imp().truncation()
    }

    /// Wraps a payload produced by this ring's own implementation.
    pub fn wrap(&self, value: Value) -> Elem {
        Elem { ring: self.id(), value }
    }

    fn own<'a>(&self, x: &'a Elem) -> &'a Value {
        assert_eq!(x.ring, self.id(), "element used with a ring it does not belong to ({self})");
        &x.value
    }

    pub fn owns(&self, x: &Elem) -> bool {
        x.ring == self.id()
    }

    pub fn zero(&self) -> Elem {
        self.wrap(self.imp().zero())
    }

    pub fn one(&self) -> Elem {
        self.wrap(self.imp().one())
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.wrap(self.imp().add(self.own(a), self.own(b)))
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        self.wrap(self.imp().neg(self.own(a)))
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.wrap(self.imp().sub(self.own(a), self.own(b)))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.wrap(self.imp().mul(self.own(a), self.own(b)))
    }

    pub fn scale(&self, k: i64, a: &Elem) -> Elem {
        self.scale_big(&BigInt::from(k), a)
    }

    pub fn scale_big(&self, k: &BigInt, a: &Elem) -> Elem {
        self.wrap(self.imp().scale(k, self.own(a)))
    }

    pub fn pow(&self, a: &Elem, n: u32) -> Elem {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        *self.own(a) == self.imp().zero()
    }

    /// Element at enumeration index `index`.
    pub fn element(&self, index: u64) -> Result<Elem> {
        match self.size() {
            Some(n) if index < n => Ok(self.wrap(self.imp().element_at(index))),
            Some(n) => Err(Error::InvalidParameter(alloc::format!("index {index} out of range for ring of size {n}"))),
            None => Err(self.not_enumerable()),
        }
    }

    pub fn index_of(&self, x: &Elem) -> Result<u64> {
        match self.size() {
            Some(_) => Ok(self.imp().index_of(self.own(x))),
            None => Err(self.not_enumerable()),
        }
    }

    /// All elements, in enumeration order.
    pub fn elements(&self) -> Result<impl Iterator<Item = Elem> + '_> {
        let n = self.size().ok_or_else(|| self.not_enumerable())?;
        Ok((0..n).map(move |i| self.wrap(self.imp().element_at(i))))
    }

    /// Elements of the index range `range`, for splitting exhaustive work.
    pub fn elements_in(&self, range: core::ops::Range<u64>) -> Result<impl Iterator<Item = Elem> + '_> {
        let n = self.size().ok_or_else(|| self.not_enumerable())?;
        let end = range.end.min(n);
        Ok((range.start.min(end)..end).map(move |i| self.wrap(self.imp().element_at(i))))
    }

    pub fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        self.wrap(self.imp().sample(rng))
    }

    /// Deterministic small elements (all elements for small finite rings).
    pub fn pool(&self) -> Vec<Elem> {
        self.imp().pool().into_iter().map(|v| self.wrap(v)).collect()
    }

    /// Canonical string form.
    pub fn render(&self, x: &Elem) -> String {
        let mut out = String::new();
        self.imp().write(self.own(x), &mut out);
        out
    }

    pub fn render_value(&self, v: &Value) -> String {
        let mut out = String::new();
        self.imp().write(v, &mut out);
        out
    }

    /// Parses a canonical (or equivalent) element literal.
    pub fn parse(&self, text: &str) -> Result<Elem> {
        let mut cur = Cursor::new(text);
        let v = self.imp().parse(&mut cur)?;
        cur.finish()?;
        Ok(self.wrap(v))
    }

    /// Operation tables, built once on first use.
    pub fn table(&self) -> Result<&FiniteTable> {
        if let Some(t) = self.0.table.get() {
            return Ok(t);
        }
        let n = self.size().ok_or_else(|| self.not_enumerable())?;
        if n > TABLE_LIMIT {
            return Err(Error::CapabilityMissing(alloc::format!(
                "{self} has {n} elements; exhaustive structure scans are limited to {TABLE_LIMIT}"
            )));
        }
        let table = FiniteTable::build(self.imp(), n as usize);
        Ok(self.0.table.get_or_init(|| Box::new(table)))
    }

    pub(crate) fn not_enumerable(&self) -> Error {
        Error::CapabilityMissing(alloc::format!("{self} is not enumerable"))
    }
}
