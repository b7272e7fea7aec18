//! Hurwitz series and Hurwitz polynomial rings over effective coefficient
//! rings, together with decision procedures and falsifiers for the ring
//! properties that govern their zero divisors (Armendariz, IFP, Baer, p.p.,
//! radical equalities, annihilator correspondences).
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the ring-spec
//! DSL parser and the command-line front end live in `hurwitz-cli`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;

pub mod constructions;
pub mod hurwitz;
pub mod properties;
pub mod ring;
pub mod scenarios;
pub mod verdict;

pub use error::{Error, Result};
pub use ring::{Elem, Ring, RingId, Value};
pub use verdict::{Bounds, Mode, Status, Verdict, Witness};

/// Version string embedded in every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
