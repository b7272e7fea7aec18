//! Composite checks that combine several verdicts: the radical chain, the
//! square-zero-ideal criterion, corner splittings, and insertion of factors
//! in the Hurwitz polynomial ring.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng as _;

use super::{check_abelian, check_hurwitz_armendariz, check_ifp, exact_under_truncation, SearchOpts};
use crate::constructions::make_corner;
use crate::hurwitz::{idempotent_jets, multiply, HurwitzJet, Product};
use crate::ring::{ideal_closure, ideal_product, radicals, Elem, IdealHandle, Radicals, Ring};
use crate::verdict::{Bounds, Claim, Mode, Verdict, Witness};
use crate::{Error, Result};

/// Radicals of a finite ring and how they compare.
#[derive(Clone, Debug)]
pub struct RadicalChain {
    pub radicals: Radicals,
    pub ifp: Verdict,
    /// `Holds` when `N_0 = N_* = N^* = J = N(R)`; otherwise `Fails` with a
    /// nilpotent element outside the lower nilradical.
    pub verdict: Verdict,
    /// IFP forces `N_* = N(R)`; false means the two computations disagree.
    pub consistent: bool,
}

pub fn check_radical_chain(ring: &Ring) -> Result<RadicalChain> {
    let radicals = radicals(ring)?;
    let ifp = check_ifp(ring, &SearchOpts::new(Mode::Exhaustive).budget(u64::MAX))?;
    let bounds = Bounds { samples: ring.size().unwrap_or(0), ..Bounds::new(Mode::Exhaustive) };
    let outside = radicals.nilpotents.iter().find(|x| !radicals.lower.contains(x)).cloned();
    let verdict = match outside {
        None => Verdict::holds(bounds),
        Some(x) => Verdict::fails(bounds, Witness::new(ring, Claim::Radical { x })),
    };
    let consistent = !(ifp.is_holds() && !radicals.chain_collapses());
    Ok(RadicalChain { radicals, ifp, verdict, consistent })
}

/// The square-zero-ideal criterion: `J^2 = 0` and every element outside `J`
/// is regular (a non-zero-divisor of `R`), followed by a bounded
/// Hurwitz-type Armendariz search when both hold.
#[derive(Clone, Debug)]
pub struct SquareZeroReport {
    pub ideal: IdealHandle,
    pub square_zero: bool,
    pub regular_outside: Verdict,
    pub hurwitz: Option<Verdict>,
}

impl SquareZeroReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.square_zero && self.regular_outside.is_holds()
    }

    /// The search verdict when the hypotheses hold, `Unknown` otherwise.
    pub fn verdict(&self) -> Verdict {
        match &self.hurwitz {
            Some(v) if self.hypotheses_hold() => v.clone(),
            _ => Verdict::unknown(self.regular_outside.bounds, "hypotheses of the square-zero criterion not met"),
        }
    }
}

pub fn check_square_zero_regular(ring: &Ring, j_gens: &[Elem], opts: &SearchOpts) -> Result<SquareZeroReport> {
    let ideal = ideal_closure(ring, j_gens)?;
    let square_zero = ideal_product(&ideal, &ideal)?.is_zero();
    let t = ring.table()?;
    let bounds = Bounds { samples: t.len() as u64, ..Bounds::new(Mode::Exhaustive) };
    let mut regular_outside = Verdict::holds(bounds);
    'scan: for a in t.indices().filter(|&a| !ideal.contains_index(a)) {
        for b in t.indices().filter(|&b| b != t.zero()) {
            if t.mul(a, b) == t.zero() || t.mul(b, a) == t.zero() {
                let claim = Claim::ZeroDivisor { a: ring.wrap(t.value(a).clone()), b: ring.wrap(t.value(b).clone()) };
                regular_outside = Verdict::fails(bounds, Witness::new(ring, claim));
                break 'scan;
            }
        }
    }
    let hurwitz =
        if square_zero && regular_outside.is_holds() { Some(check_hurwitz_armendariz(ring, opts)?) } else { None };
    Ok(SquareZeroReport { ideal, square_zero, regular_outside, hurwitz })
}

/// Hurwitz-type Armendariz verdicts for `R`, `eR` and `(1-e)R`.
#[derive(Clone, Debug)]
pub struct SplitReport {
    pub corner: Ring,
    pub complement: Ring,
    pub whole: Verdict,
    pub on_corner: Verdict,
    pub on_complement: Verdict,
    /// The three verdicts contradict "`R` has the property iff both corners do".
    pub contradiction: bool,
}

fn settled_holds(v: &Verdict) -> bool {
    v.is_holds() || v.bounds.mode == Mode::Trivial
}

pub fn check_idempotent_split(ring: &Ring, e: &Elem, opts: &SearchOpts) -> Result<SplitReport> {
    if ring.mul(e, e) != *e {
        return Err(Error::NotIdempotent);
    }
    if check_abelian(ring, opts)?.is_fails() {
        return Err(Error::NotAbelian);
    }
    let f = ring.sub(&ring.one(), e);
    let corner = make_corner(ring, e)?;
    let complement = make_corner(ring, &f)?;
    let whole = check_hurwitz_armendariz(ring, opts)?;
    let on_corner = check_hurwitz_armendariz(&corner, opts)?;
    let on_complement = check_hurwitz_armendariz(&complement, opts)?;
    let contradiction = (whole.is_holds() && (on_corner.is_fails() || on_complement.is_fails()))
        || (settled_holds(&on_corner) && settled_holds(&on_complement) && whole.is_fails());
    Ok(SplitReport { corner, complement, whole, on_corner, on_complement, contradiction })
}

/// Requires a bounded Hurwitz-type Armendariz `Holds`, then runs
/// [`scan_ifp_hurwitz`].
pub fn check_ifp_hurwitz(ring: &Ring, opts: &SearchOpts) -> Result<Verdict> {
    let base = check_hurwitz_armendariz(ring, opts)?;
    if !base.is_holds() {
        return Err(Error::HypothesisNotEstablished(format!(
            "{ring} is not Armendariz of the Hurwitz series type at degree {} ({})",
            opts.degree, base.status
        )));
    }
    scan_ifp_hurwitz(ring, opts)
}

/// Exact zero products `f g = 0` of Hurwitz polynomials, built as integer
/// combinations `f = sum k_i a x^i`, `g = sum l_j b x^j` of a zero product
/// `ab = 0`, plus any directed Hurwitz-type witness; each is tested against
/// random `h` for `f h g = 0`.
pub fn scan_ifp_hurwitz(ring: &Ring, opts: &SearchOpts) -> Result<Verdict> {
    if ring.is_trivial() {
        return Ok(Verdict::trivial(opts.bounds(0)));
    }
    let candidates: Vec<Elem> = match ring.table() {
        Ok(_) => ring.elements()?.collect(),
        Err(_) => ring.pool(),
    };
    let zero_pairs: Vec<(Elem, Elem)> = candidates
        .iter()
        .flat_map(|a| candidates.iter().map(move |b| (a.clone(), b.clone())))
        .filter(|(a, b)| ring.is_zero(&ring.mul(a, b)))
        .collect();
    let mut rng = opts.rng();
    let mut pairs: Vec<(Vec<Elem>, Vec<Elem>)> = Vec::new();
    let directed = SearchOpts { mode: Mode::Directed, ..*opts };
    if let Some(w) = check_hurwitz_armendariz(ring, &directed)?.witness {
        if let Claim::ZeroProduct { f, g, product: Product::Hurwitz, .. } = w.claim() {
            pairs.push((f.clone(), g.clone()));
        }
    }
    let multiples = |x: &Elem, rng: &mut rand_chacha::ChaCha8Rng| -> Vec<Elem> {
        (0..=opts.degree).map(|_| ring.scale_big(&BigInt::from(rng.gen_range(-3i64..=3)), x)).collect()
    };
    while (pairs.len() as u64) < opts.samples {
        let Some((a, b)) = zero_pairs.choose(&mut rng) else { break };
        let f = multiples(a, &mut rng);
        let g = multiples(b, &mut rng);
        pairs.push((f, g));
    }
    let bounds = |count| Bounds { mode: Mode::Random, ..opts.bounds(count) };
    let mut tested = 0u64;
    for (f, g) in &pairs {
        if !multiply(ring, Product::Hurwitz, f, g)?.iter().all(|c| ring.is_zero(c))
            || !exact_under_truncation(ring, &[f, g])
        {
            continue;
        }
        tested += 1;
        for _ in 0..4 {
            let h: Vec<Elem> = (0..=opts.degree).map(|_| ring.sample(&mut rng)).collect();
            let fh = multiply(ring, Product::Hurwitz, f, &h)?;
            if !multiply(ring, Product::Hurwitz, &fh, g)?.iter().all(|c| ring.is_zero(c)) {
                let claim = Claim::PolyInsertion { f: f.clone(), h, g: g.clone() };
                return Ok(Verdict::fails(bounds(tested), Witness::new(ring, claim)));
            }
        }
    }
    Ok(Verdict::holds(bounds(tested)))
}

/// Idempotent jets of order `order`, with `Holds` when all of them are
/// constant and `Fails` on the first non-constant one.
pub fn check_constant_idempotent_jets(ring: &Ring, order: usize, seed: u64) -> Result<(Vec<HurwitzJet>, Verdict)> {
    let jets = idempotent_jets(ring, order)?;
    let bounds = Bounds { degree: order, trunc: order, mode: Mode::Exhaustive, samples: jets.len() as u64, seed };
    let v = match jets.iter().find(|j| !j.is_constant()) {
        None => Verdict::holds(bounds),
        Some(j) => Verdict::fails(bounds, Witness::new(ring, Claim::IdempotentJet { jet: j.coeffs().to_vec() })),
    };
    Ok((jets, v))
}
