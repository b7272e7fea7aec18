//! Hurwitz polynomial and jet arithmetic.
//!
//! The Hurwitz product is `c_n = sum_k C(n,k) a_k b_{n-k}`, with the standard
//! binomial coefficient. Polynomials ([`HurwitzPoly`]) are multiplied exactly;
//! jets ([`HurwitzJet`]) are Hurwitz series cut off after a fixed order `N`.
//! A zero product of jets is only a fact about `hR/(x^{N+1})`: `x` itself is
//! a nilpotent jet but not a nilpotent series.

mod conv;
mod idempotent;
mod inverse;
mod packing;
mod poly;

pub use conv::{convolve, full_product, Coeffs, ValueOps, Weights};
pub use idempotent::{idempotent_jets, idempotent_jets_bounded, JET_LIMIT};
pub use inverse::{geometric_inverse_jet, one_minus_rx};
pub use packing::{pack_nested, NestedPoly, Packing};
pub(crate) use poly::render_coeffs;
pub use poly::{
    coefficient_set, coefficient_set_of, hpoly_mul, jet_mul, multiply, multiply_values, opoly_mul, Hurwitz, HurwitzJet,
    HurwitzPoly, Ordinary, OrdinaryPoly, Poly, PolyKind, Product,
};
