//! Three-valued verdicts with explicit search bounds and re-checkable
//! witnesses.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::hurwitz::{geometric_inverse_jet, multiply, one_minus_rx, render_coeffs, HurwitzJet, Product};
use crate::ring::{self, Elem, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Holds,
    Fails,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Unknown => "unknown",
        }
    }

    pub fn parse(s: &str) -> Option<Status> {
        match s {
            "holds" => Some(Status::Holds),
            "fails" => Some(Status::Fails),
            "unknown" => Some(Status::Unknown),
            _ => None,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How a search space was covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exhaustive,
    Random,
    Directed,
    /// The zero ring: nothing to search, flagged instead of judged.
    Trivial,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Random => "random",
            Mode::Directed => "directed",
            Mode::Trivial => "trivial",
        }
    }

    pub fn parse(s: &str) -> Option<Mode> {
        match s {
            "exhaustive" => Some(Mode::Exhaustive),
            "random" => Some(Mode::Random),
            "directed" => Some(Mode::Directed),
            "trivial" => Some(Mode::Trivial),
            _ => None,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Effort behind a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bounds {
    /// Largest polynomial degree searched (0 for element-level checks).
    pub degree: usize,
    /// Jet truncation order used (0 when no jets were involved).
    pub trunc: usize,
    pub mode: Mode,
    /// Number of candidates examined.
    pub samples: u64,
    pub seed: u64,
}

impl Bounds {
    pub fn new(mode: Mode) -> Bounds {
        Bounds { degree: 0, trunc: 0, mode, samples: 0, seed: 0 }
    }
}

/// Which one-sided annihilator a witness refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "l",
            Side::Right => "r",
        }
    }
}

/// What a witness certifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    /// `law` fails at `(x, y, z)`.
    Axiom { law: String, x: Elem, y: Elem, z: Elem },
    /// `x != 0` and `x^2 = 0`.
    SquareZero { x: Elem },
    /// `a != 0` and `aRa = 0`.
    NilpotentIdeal { a: Elem },
    /// `e` is idempotent and `er != re`.
    NonCentral { e: Elem, r: Elem },
    /// `ab = 0` but `arb != 0`.
    Insertion { a: Elem, r: Elem, b: Elem },
    /// `f g = 0` under `product` while `a_i b_j != 0`.
    ZeroProduct { f: Vec<Elem>, g: Vec<Elem>, product: Product, i: usize, j: usize },
    /// `f_1 ... f_n = 0` under `product` while the product of the chosen
    /// coefficients is nonzero.
    NProduct { factors: Vec<Vec<Elem>>, product: Product, indices: Vec<usize> },
    /// The annihilator of `set` on `side` is not generated by an idempotent.
    Annihilator { side: Side, set: Vec<Elem>, annihilator: Vec<Elem> },
    /// A non-constant idempotent jet.
    IdempotentJet { jet: Vec<Elem> },
    /// `x` is nilpotent but outside the lower nilradical.
    Radical { x: Elem },
    /// `a` lies outside the ideal but is a zero divisor: `ab = 0` or `ba = 0`.
    ZeroDivisor { a: Elem, b: Elem },
    /// Exact polynomial discrepancy in an annihilator transfer: exactly one of
    /// "`set` annihilates `g` on `side`" and "`g = e g`" (resp. `g e`) holds,
    /// where `e` generates the annihilator of the coefficient set.
    Transfer { side: Side, set: Vec<Vec<Elem>>, g: Vec<Elem>, e: Elem },
    /// Exactly one of "`set · g = 0`" and "`C_g ⊆ r(C_set)`" holds.
    AnnihilatorMap { set: Vec<Vec<Elem>>, g: Vec<Elem> },
    /// Nested polynomials with `F G = 0` whose packed images do not multiply to 0.
    Packing { f: Vec<Vec<Elem>>, packed_f: Vec<Elem>, packed_g: Vec<Elem>, nested_g: Vec<Vec<Elem>> },
    /// `f h g != 0` although `f g = 0` (exact Hurwitz products).
    PolyInsertion { f: Vec<Elem>, h: Vec<Elem>, g: Vec<Elem> },
    /// `(1 - r x)` times `sum k! r^k x^k` is not the identity jet of `order`.
    InverseSeries { r: Elem, order: usize },
}

/// A claim together with the ring its elements live in.
#[derive(Clone, Debug)]
pub struct Witness {
    ring: Ring,
    claim: Claim,
}

impl PartialEq for Witness {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.claim == other.claim
    }
}

/// The flat, string-valued view of a witness used in reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessFields {
    pub f: String,
    pub g: String,
    pub i: usize,
    pub j: usize,
    pub value: String,
}

fn render_set(ring: &Ring, xs: &[Elem]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| ring.render(x)).collect();
    format!("{{{}}}", parts.join(","))
}

fn render_polys(ring: &Ring, ps: &[Vec<Elem>]) -> String {
    let parts: Vec<String> = ps.iter().map(|p| render_coeffs(ring, p)).collect();
    format!("{{{}}}", parts.join(","))
}

fn all_zero(ring: &Ring, v: &[Elem]) -> bool {
    v.iter().all(|x| ring.is_zero(x))
}

fn coeff(ring: &Ring, v: &[Elem], i: usize) -> Elem {
    v.get(i).cloned().unwrap_or_else(|| ring.zero())
}

fn hmul(ring: &Ring, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    multiply(ring, Product::Hurwitz, a, b).expect("witness elements share the ring")
}

fn side_product(ring: &Ring, side: Side, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    match side {
        Side::Right => hmul(ring, f, g),
        Side::Left => hmul(ring, g, f),
    }
}

fn scale_poly(ring: &Ring, side: Side, e: &Elem, g: &[Elem]) -> Vec<Elem> {
    g.iter()
        .map(|c| match side {
            Side::Right => ring.mul(e, c),
            Side::Left => ring.mul(c, e),
        })
        .collect()
}

fn annihilates_all(ring: &Ring, side: Side, set: &[Vec<Elem>], g: &[Elem]) -> bool {
    set.iter().all(|f| all_zero(ring, &side_product(ring, side, f, g)))
}

fn coefficient_union(set: &[Vec<Elem>]) -> Vec<Elem> {
    let mut out: Vec<Elem> = Vec::new();
    for f in set {
        for c in f {
            if !out.contains(c) {
                out.push(c.clone());
            }
        }
    }
    out
}

fn nested_mul(ring: &Ring, f: &[Vec<Elem>], g: &[Vec<Elem>]) -> Option<bool> {
    use crate::hurwitz::{HurwitzPoly, NestedPoly};
    let to = |p: &[Vec<Elem>]| -> Option<NestedPoly> {
        let coeffs = p.iter().map(|c| HurwitzPoly::new(ring, c.clone()).ok()).collect::<Option<Vec<_>>>()?;
        NestedPoly::new(ring, coeffs).ok()
    };
    Some(to(f)?.mul(&to(g)?).ok()?.is_zero())
}

fn inverse_pair(ring: &Ring, r: &Elem, order: usize) -> (HurwitzJet, HurwitzJet) {
    (one_minus_rx(ring, r, order), geometric_inverse_jet(ring, r, order))
}

impl Witness {
    pub fn new(ring: &Ring, claim: Claim) -> Witness {
        Witness { ring: ring.clone(), claim }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn claim(&self) -> &Claim {
        &self.claim
    }

    /// Re-evaluates the defining equations from the stored elements.
    pub fn revalidate(&self) -> bool {
        let r = &self.ring;
        match &self.claim {
            Claim::Axiom { law, x, y, z } => match crate::ring::axioms::law_holds(r, law, x, y, z) {
                Some(ok) => !ok,
                None => false,
            },
            Claim::SquareZero { x } => !r.is_zero(x) && r.is_zero(&r.mul(x, x)),
            Claim::NilpotentIdeal { a } => {
                !r.is_zero(a)
                    && match r.elements() {
                        Ok(mut it) => it.all(|s| r.is_zero(&r.mul(&r.mul(a, &s), a))),
                        Err(_) => false,
                    }
            }
            Claim::NonCentral { e, r: x } => r.mul(e, e) == *e && r.mul(e, x) != r.mul(x, e),
            Claim::Insertion { a, r: x, b } => r.is_zero(&r.mul(a, b)) && !r.is_zero(&r.mul(&r.mul(a, x), b)),
            Claim::ZeroProduct { f, g, product, i, j } => {
                let p = multiply(r, *product, f, g).expect("same ring");
                all_zero(r, &p) && !r.is_zero(&r.mul(&coeff(r, f, *i), &coeff(r, g, *j)))
            }
            Claim::NProduct { factors, product, indices } => {
                if factors.is_empty() || factors.len() != indices.len() {
                    return false;
                }
                let mut acc = factors[0].clone();
                for f in &factors[1..] {
                    acc = multiply(r, *product, &acc, f).expect("same ring");
                }
                let mut c = r.one();
                for (f, &i) in factors.iter().zip(indices) {
                    c = r.mul(&c, &coeff(r, f, i));
                }
                all_zero(r, &acc) && !r.is_zero(&c)
            }
            Claim::Annihilator { side, set, annihilator } => {
                let computed = match side {
                    Side::Right => ring::right_annihilator(r, set),
                    Side::Left => ring::left_annihilator(r, set),
                };
                let Ok(computed) = computed else { return false };
                if computed != *annihilator {
                    return false;
                }
                let Ok(ids) = ring::idempotents(r) else { return false };
                let Ok(all) = r.elements().map(|it| it.collect::<Vec<_>>()) else { return false };
                !ids.iter().any(|e| {
                    let mut gen: Vec<Elem> = all
                        .iter()
                        .map(|x| match side {
                            Side::Right => r.mul(e, x),
                            Side::Left => r.mul(x, e),
                        })
                        .collect();
                    gen.sort();
                    gen.dedup();
                    let mut ann = annihilator.clone();
                    ann.sort();
                    gen == ann
                })
            }
            Claim::IdempotentJet { jet } => {
                let n = jet.len().saturating_sub(1);
                let sq = multiply(r, Product::Jet(n), jet, jet).expect("same ring");
                sq == *jet && !all_zero(r, jet.get(1..).unwrap_or(&[]))
            }
            Claim::Radical { x } => {
                let nil = (1..=r.size().unwrap_or(0).max(1)).any(|k| r.is_zero(&r.pow(x, k as u32)));
                match ring::lower_nilradical(r) {
                    Ok(n0) => nil && !n0.contains(x),
                    Err(_) => false,
                }
            }
            Claim::ZeroDivisor { a, b } => !r.is_zero(b) && (r.is_zero(&r.mul(a, b)) || r.is_zero(&r.mul(b, a))),
            Claim::Transfer { side, set, g, e } => {
                let ann = annihilates_all(r, *side, set, g);
                let fixed = scale_poly(r, *side, e, g) == *g;
                ann != fixed
            }
            Claim::AnnihilatorMap { set, g } => {
                let ann = annihilates_all(r, Side::Right, set, g);
                let cv = coefficient_union(set);
                let Ok(rc) = ring::right_annihilator(r, &cv) else { return false };
                let inside = g.iter().all(|c| rc.contains(c));
                ann != inside
            }
            Claim::Packing { f, packed_f, packed_g, nested_g } => {
                nested_mul(r, f, nested_g) == Some(true) && !all_zero(r, &hmul(r, packed_f, packed_g))
            }
            Claim::PolyInsertion { f, h, g } => {
                all_zero(r, &hmul(r, f, g)) && !all_zero(r, &hmul(r, &hmul(r, f, h), g))
            }
            Claim::InverseSeries { r: x, order } => {
                let (f, g) = inverse_pair(r, x, *order);
                f.mul(&g).map(|p| p != HurwitzJet::identity(r, *order)).unwrap_or(false)
            }
        }
    }

    /// String view for reports.
    pub fn fields(&self) -> WitnessFields {
        let r = &self.ring;
        let el = |x: &Elem| r.render(x);
        let poly = |p: &[Elem]| render_coeffs(r, p);
        let w = |f: String, g: String, i: usize, j: usize, value: String| WitnessFields { f, g, i, j, value };
        match &self.claim {
            Claim::Axiom { law, x, y, z } => {
                w(format!("({},{},{})", el(x), el(y), el(z)), law.clone(), 0, 0, law.clone())
            }
            Claim::SquareZero { x } => w(el(x), el(x), 0, 0, el(x)),
            Claim::NilpotentIdeal { a } => w(el(a), el(a), 0, 0, el(a)),
            Claim::NonCentral { e, r: x } => w(el(e), el(x), 0, 0, el(&r.sub(&r.mul(e, x), &r.mul(x, e)))),
            Claim::Insertion { a, r: x, b } => w(el(a), el(b), 0, 0, el(&r.mul(&r.mul(a, x), b))),
            Claim::ZeroProduct { f, g, i, j, .. } => {
                w(poly(f), poly(g), *i, *j, el(&r.mul(&coeff(r, f, *i), &coeff(r, g, *j))))
            }
            Claim::NProduct { factors, indices, .. } => {
                let fs: Vec<String> = factors.iter().map(|f| poly(f)).collect();
                let is: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
                let mut c = r.one();
                for (f, &i) in factors.iter().zip(indices) {
                    c = r.mul(&c, &coeff(r, f, i));
                }
                w(fs.join("*"), is.join(","), indices[0], indices.get(1).copied().unwrap_or(0), el(&c))
            }
            Claim::Annihilator { side, set, annihilator } => {
                w(render_set(r, set), side.as_str().to_string(), 0, 0, render_set(r, annihilator))
            }
            Claim::IdempotentJet { jet } => w(poly(jet), poly(jet), 0, 0, poly(jet)),
            Claim::Radical { x } => w(el(x), el(x), 0, 0, el(x)),
            Claim::ZeroDivisor { a, b } => w(el(a), el(b), 0, 0, el(a)),
            Claim::Transfer { side, set, g, e } => {
                w(render_polys(r, set), poly(g), 0, 0, poly(&scale_poly(r, *side, e, g)))
            }
            Claim::AnnihilatorMap { set, g } => {
                let first = set.iter().map(|f| hmul(r, f, g)).find(|p| !all_zero(r, p)).unwrap_or_default();
                w(render_polys(r, set), poly(g), 0, 0, poly(&first))
            }
            Claim::Packing { f, nested_g, packed_f, packed_g, .. } => {
                w(render_polys(r, f), render_polys(r, nested_g), 0, 0, poly(&hmul(r, packed_f, packed_g)))
            }
            Claim::PolyInsertion { f, h, g } => w(poly(f), poly(g), 0, 0, poly(&hmul(r, &hmul(r, f, h), g))),
            Claim::InverseSeries { r: x, order } => {
                let (f, g) = inverse_pair(r, x, *order);
                let value = f.mul(&g).map(|p| p.render()).unwrap_or_default();
                w(f.render(), g.render(), 0, 0, value)
            }
        }
    }
}

/// Outcome of one property check.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: Status,
    pub bounds: Bounds,
    /// Present on every `Fails`; an `Unknown` may carry an uncertified candidate.
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl Verdict {
    pub fn holds(bounds: Bounds) -> Verdict {
        Verdict { status: Status::Holds, bounds, witness: None, note: None }
    }

    pub fn fails(bounds: Bounds, witness: Witness) -> Verdict {
        Verdict { status: Status::Fails, bounds, witness: Some(witness), note: None }
    }

    pub fn unknown(bounds: Bounds, note: impl Into<String>) -> Verdict {
        Verdict { status: Status::Unknown, bounds, witness: None, note: Some(note.into()) }
    }

    /// The verdict for the zero ring.
    pub fn trivial(bounds: Bounds) -> Verdict {
        let bounds = Bounds { mode: Mode::Trivial, ..bounds };
        Verdict::unknown(bounds, "zero ring: flagged as a trivial case")
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Verdict {
        self.note = Some(note.into());
        self
    }

    pub fn is_holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.status == Status::Fails
    }
}
