//! Decision procedures and falsifiers for ring properties.
//!
//! Every checker returns a [`Verdict`]: `Fails` always carries a witness
//! that re-validates from its own fields, `Holds` always carries the bounds it
//! was established at, and anything a search cannot settle is `Unknown`.
//! Searches are sequential and deterministic; random modes draw from a
//! ChaCha8 stream seeded with [`SearchOpts::seed`].

mod annihilator;
mod armendariz;
mod element;
mod report;
mod search;

use alloc::format;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ring::{Elem, Ring, Value};
use crate::verdict::{Bounds, Mode};
use crate::Error;

pub use annihilator::{
    check_annihilator_maps, check_baer, check_baer_transfer, check_pp, check_pp_transfer, scan_baer_transfer,
    scan_constant_annihilators, scan_polynomial_annihilators, scan_pp_transfer, AnnihilatorCount,
};
pub use armendariz::{
    check_armendariz, check_hurwitz_armendariz, check_ideal_armendariz, check_nproduct_armendariz, check_pair,
    scan_nproduct,
};
pub use element::{check_abelian, check_ifp, check_reduced, check_semiprime};
pub use report::{
    check_constant_idempotent_jets, check_idempotent_split, check_ifp_hurwitz, check_radical_chain,
    check_square_zero_regular, scan_ifp_hurwitz, RadicalChain, SplitReport, SquareZeroReport,
};

/// Default cap on the number of candidates an exhaustive search may visit.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Search parameters shared by all checkers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOpts {
    /// Largest polynomial degree searched.
    pub degree: usize,
    /// Jet truncation order; 0 searches exact polynomials only.
    pub trunc: usize,
    pub mode: Mode,
    /// Draws for random modes; sampled instances for the transfer checks.
    pub samples: u64,
    pub seed: u64,
    /// Exhaustive spaces larger than this are refused.
    pub budget: u64,
}

impl Default for SearchOpts {
    fn default() -> SearchOpts {
        SearchOpts { degree: 1, trunc: 0, mode: Mode::Directed, samples: 10_000, seed: 0, budget: DEFAULT_BUDGET }
    }
}

impl SearchOpts {
    pub fn new(mode: Mode) -> SearchOpts {
        SearchOpts { mode, ..SearchOpts::default() }
    }

    pub fn degree(self, degree: usize) -> SearchOpts {
        SearchOpts { degree, ..self }
    }

    pub fn trunc(self, trunc: usize) -> SearchOpts {
        SearchOpts { trunc, ..self }
    }

    pub fn samples(self, samples: u64) -> SearchOpts {
        SearchOpts { samples, ..self }
    }

    pub fn seed(self, seed: u64) -> SearchOpts {
        SearchOpts { seed, ..self }
    }

    pub fn budget(self, budget: u64) -> SearchOpts {
        SearchOpts { budget, ..self }
    }

    pub(crate) fn bounds(&self, samples: u64) -> Bounds {
        Bounds { degree: self.degree, trunc: self.trunc, mode: self.mode, samples, seed: self.seed }
    }

    pub(crate) fn element_bounds(&self, mode: Mode, samples: u64) -> Bounds {
        Bounds { degree: 0, trunc: 0, mode, samples, seed: self.seed }
    }

    pub(crate) fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// `base^exp`, saturating.
pub(crate) fn space(base: u64, exp: usize) -> u64 {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

pub(crate) fn over_budget(what: &str, cost: u64, budget: u64) -> Error {
    Error::BudgetExceeded(format!("{what} needs {cost} candidates, budget is {budget}"))
}

/// Longest basis word in an element of a word-truncated ring (0 otherwise).
fn word_length(v: &Value) -> usize {
    match v {
        Value::Words(terms) => terms.iter().map(|(w, _)| w.len()).max().unwrap_or(0),
        _ => 0,
    }
}

/// In a ring whose words are cut off at length `L`, a product computed there
/// is exact when the factors' word lengths add up to at most `L`. Zero
/// products found in such a ring are only evidence about the untruncated
/// ring when this holds.
pub(crate) fn exact_under_truncation(ring: &Ring, factors: &[&[Elem]]) -> bool {
    match ring.truncation() {
        None => true,
        Some(cap) => {
            let total: usize =
                factors.iter().map(|f| f.iter().map(|x| word_length(x.value())).max().unwrap_or(0)).sum();
            total <= cap
        }
    }
}
