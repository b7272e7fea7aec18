use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::marker::PhantomData;

use super::conv::{convolve, full_product, ValueOps, Weights};
use crate::ring::{Cursor, Elem, Ring, Value};
use crate::{Error, Result};

/// Which multiplication a coefficient vector is taken under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Product {
    /// Plain convolution, the product of `R[x]`.
    Ordinary,
    /// Binomially weighted convolution, exact, the product of `hR`.
    Hurwitz,
    /// Hurwitz product truncated after order `N`, the product of `hR/(x^{N+1})`.
    Jet(usize),
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Product::Ordinary => f.write_str("ordinary"),
            Product::Hurwitz => f.write_str("hurwitz"),
            Product::Jet(n) => write!(f, "jet order {n}"),
        }
    }
}

fn weights_for(ring: &Ring, product: Product, len: usize) -> Option<Weights> {
    match product {
        Product::Ordinary => None,
        _ => Some(Weights::new(ring.characteristic(), len.max(1) - 1)),
    }
}

fn trim(ring: &Ring, mut v: Vec<Value>) -> Vec<Value> {
    let z = ring.imp().zero();
    while v.last() == Some(&z) {
        v.pop();
    }
    v
}

/// Product of raw coefficient vectors. Polynomial results are trimmed; jet
/// results have exactly `N + 1` terms.
pub fn multiply_values(ring: &Ring, product: Product, a: &[Value], b: &[Value]) -> Vec<Value> {
    let ops = ValueOps(ring.imp());
    match product {
        Product::Jet(n) => {
            let w = weights_for(ring, product, n + 1);
            convolve(&ops, w.as_ref(), a, b, n + 1)
        }
        _ => {
            let len = (a.len() + b.len()).saturating_sub(1);
            let w = weights_for(ring, product, len);
            trim(ring, full_product(&ops, w.as_ref(), a, b))
        }
    }
}

/// Product of element vectors owned by `ring`.
pub fn multiply(ring: &Ring, product: Product, a: &[Elem], b: &[Elem]) -> Result<Vec<Elem>> {
    if !a.iter().chain(b).all(|x| ring.owns(x)) {
        return Err(Error::RingMismatch);
    }
    let a: Vec<Value> = a.iter().map(|x| x.value().clone()).collect();
    let b: Vec<Value> = b.iter().map(|x| x.value().clone()).collect();
    Ok(multiply_values(ring, product, &a, &b).into_iter().map(|v| ring.wrap(v)).collect())
}

pub(crate) fn render_coeffs(ring: &Ring, coeffs: &[Elem]) -> String {
    let mut out = String::from("<");
    if coeffs.is_empty() {
        out.push('0');
    }
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&ring.render(c));
    }
    out.push('>');
    out
}

pub(crate) fn parse_coeffs(ring: &Ring, text: &str) -> Result<Vec<Elem>> {
    let mut cur = Cursor::new(text);
    cur.expect('<')?;
    let mut out = Vec::new();
    if !cur.eat('>') {
        loop {
            out.push(ring.wrap(ring.imp().parse(&mut cur)?));
            if cur.eat('>') {
                break;
            }
            cur.expect(',')?;
        }
    }
    cur.finish()?;
    Ok(out)
}

/// Marker for the multiplication a [`Poly`] uses.
pub trait PolyKind: Clone + fmt::Debug {
    const PRODUCT: Product;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hurwitz;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ordinary;

impl PolyKind for Hurwitz {
    const PRODUCT: Product = Product::Hurwitz;
}

impl PolyKind for Ordinary {
    const PRODUCT: Product = Product::Ordinary;
}

/// A polynomial with coefficients in one ring, trailing zeros trimmed.
#[derive(Clone, Debug)]
pub struct Poly<K: PolyKind> {
    ring: Ring,
    coeffs: Vec<Elem>,
    kind: PhantomData<K>,
}

/// Element of the Hurwitz polynomial ring `hR`.
pub type HurwitzPoly = Poly<Hurwitz>;
/// Element of `R[x]`.
pub type OrdinaryPoly = Poly<Ordinary>;

impl<K: PolyKind> PartialEq for Poly<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.coeffs == other.coeffs
    }
}

impl<K: PolyKind> Eq for Poly<K> {}

impl<K: PolyKind> Poly<K> {
    pub fn new(ring: &Ring, coeffs: Vec<Elem>) -> Result<Self> {
        if !coeffs.iter().all(|c| ring.owns(c)) {
            return Err(Error::RingMismatch);
        }
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Ok(Poly { ring: ring.clone(), coeffs, kind: PhantomData })
    }

    pub fn zero(ring: &Ring) -> Self {
        Poly { ring: ring.clone(), coeffs: Vec::new(), kind: PhantomData }
    }

    pub fn constant(ring: &Ring, c: Elem) -> Result<Self> {
        Self::new(ring, alloc::vec![c])
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        Self::new(ring, parse_coeffs(ring, text)?)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// `a_i`, zero past the end.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ring.id() != other.ring.id() {
            return Err(Error::RingMismatch);
        }
        Self::new(&self.ring, multiply(&self.ring, K::PRODUCT, &self.coeffs, &other.coeffs)?)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.ring.id() != other.ring.id() {
            return Err(Error::RingMismatch);
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        let sum = (0..n).map(|i| self.ring.add(&self.coeff(i), &other.coeff(i))).collect();
        Self::new(&self.ring, sum)
    }

    /// The jet of order `n` this polynomial maps to.
    pub fn to_jet(&self, n: usize) -> HurwitzJet {
        let coeffs = (0..=n).map(|i| self.coeff(i)).collect();
        HurwitzJet { ring: self.ring.clone(), coeffs }
    }

    pub fn render(&self) -> String {
        render_coeffs(&self.ring, &self.coeffs)
    }
}

impl<K: PolyKind> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `hpoly_mul`: exact Hurwitz product.
pub fn hpoly_mul(f: &HurwitzPoly, g: &HurwitzPoly) -> Result<HurwitzPoly> {
    f.mul(g)
}

/// `opoly_mul`: ordinary polynomial product.
pub fn opoly_mul(f: &OrdinaryPoly, g: &OrdinaryPoly) -> Result<OrdinaryPoly> {
    f.mul(g)
}

/// Truncated Hurwitz series `(c_0, ..., c_N)`.
#[derive(Clone, Debug)]
pub struct HurwitzJet {
    ring: Ring,
    coeffs: Vec<Elem>,
}

impl PartialEq for HurwitzJet {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.coeffs == other.coeffs
    }
}

impl Eq for HurwitzJet {}

impl HurwitzJet {
    /// Jet of order `coeffs.len() - 1`.
    pub fn new(ring: &Ring, coeffs: Vec<Elem>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter("a jet needs at least one coefficient".into()));
        }
        if !coeffs.iter().all(|c| ring.owns(c)) {
            return Err(Error::RingMismatch);
        }
        Ok(HurwitzJet { ring: ring.clone(), coeffs })
    }

    pub fn identity(ring: &Ring, order: usize) -> Self {
        let mut coeffs = alloc::vec![ring.zero(); order + 1];
        coeffs[0] = ring.one();
        HurwitzJet { ring: ring.clone(), coeffs }
    }

    pub fn zero(ring: &Ring, order: usize) -> Self {
        HurwitzJet { ring: ring.clone(), coeffs: alloc::vec![ring.zero(); order + 1] }
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        Self::new(ring, parse_coeffs(ring, text)?)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    /// Whether every coefficient past the constant term is zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs[1..].iter().all(|c| self.ring.is_zero(c))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        jet_mul(self, other)
    }

    /// Exact polynomial with the same coefficients.
    pub fn to_poly(&self) -> HurwitzPoly {
        HurwitzPoly::new(&self.ring, self.coeffs.clone()).expect("same ring")
    }

    pub fn render(&self) -> String {
        render_coeffs(&self.ring, &self.coeffs)
    }
}

impl fmt::Display for HurwitzJet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Truncated Hurwitz product of two jets of the same order.
pub fn jet_mul(f: &HurwitzJet, g: &HurwitzJet) -> Result<HurwitzJet> {
    if f.ring.id() != g.ring.id() {
        return Err(Error::RingMismatch);
    }
    if f.order() != g.order() {
        return Err(Error::OrderMismatch(f.order(), g.order()));
    }
    let coeffs = multiply(&f.ring, Product::Jet(f.order()), &f.coeffs, &g.coeffs)?;
    Ok(HurwitzJet { ring: f.ring.clone(), coeffs })
}

/// `C_f`: the distinct coefficients of `f`, in order of first appearance.
pub fn coefficient_set<K: PolyKind>(f: &Poly<K>) -> Vec<Elem> {
    let mut out: Vec<Elem> = Vec::new();
    for c in f.coeffs() {
        if !out.contains(c) {
            out.push(c.clone());
        }
    }
    out
}

/// `C_V`: the union of `C_f` over `f` in `V`.
pub fn coefficient_set_of<K: PolyKind>(v: &[Poly<K>]) -> Vec<Elem> {
    let mut out: Vec<Elem> = Vec::new();
    for f in v {
        for c in coefficient_set(f) {
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    out
}
