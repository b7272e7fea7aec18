//! Builders for every concrete ring used by the checkers and scenarios.
//!
//! [`Recipe`] is the structured form of a ring-spec string such as
//! `FreeQ(GF(2),[a,b,c],[cc,ac,c*c],8)`; its `Display` impl prints that
//! canonical text and [`Recipe::build`] constructs the ring.

mod extension;
mod jet;
mod matrix;
mod monomial;
mod product;
mod quaternion;
mod quotient;
mod util;
mod zmod;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::ring::{Elem, Ring};
use crate::{Error, Result};

pub use extension::{make_trivial_extension, make_trivial_extension_quotient, make_twisted_extension, Endo};
pub use jet::make_hurwitz_truncated;
pub use matrix::{make_const_diag_ut, make_matrix_full, make_upper_triangular};
pub use monomial::{make_comm_monomial_quotient, make_free_monomial_quotient, Pattern, BASIS_LIMIT, ENUM_LIMIT};
pub use product::{crt_decompose, crt_split, make_product, CrtSplit};
pub use quaternion::make_quaternion_mod;
pub use quotient::{make_corner, make_quotient, make_quotient_by};
pub use util::is_prime;
pub use zmod::{is_irreducible, make_gf, make_integers, make_zmod, parse_modulus, render_poly, SAMPLE_RADIUS};

/// Structured description of a ring construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Recipe {
    Z,
    Zn(u64),
    /// `GF(p)`, or `GF(p)[t]/(modulus)` with the monic modulus given low to high.
    GF {
        p: u64,
        modulus: Option<Vec<u64>>,
    },
    Prod(Vec<Recipe>),
    Mat(Box<Recipe>, usize),
    UT(Box<Recipe>, usize),
    /// Constant-diagonal `k x k` upper triangular matrices over `S` with
    /// upper entries in `S/I`, `I` generated by the element literals.
    UTc {
        base: Box<Recipe>,
        ideal: Vec<String>,
        k: usize,
    },
    Triv(Box<Recipe>),
    TrivQ {
        base: Box<Recipe>,
        ideal: Vec<String>,
    },
    Twist {
        base: Box<Recipe>,
        endo: Endo,
    },
    FreeQ {
        base: Box<Recipe>,
        gens: Vec<char>,
        patterns: Vec<Pattern>,
        max_len: usize,
    },
    CommQ {
        base: Box<Recipe>,
        caps: Vec<(char, u32)>,
    },
    Quat(u64),
    HJet(Box<Recipe>, usize),
    Quot {
        base: Box<Recipe>,
        ideal: Vec<String>,
    },
}

fn parse_elems(ring: &Ring, lits: &[String]) -> Result<Vec<Elem>> {
    lits.iter().map(|s| ring.parse(s)).collect()
}

impl Recipe {
    /// Constructor keyword, e.g. `"FreeQ"`.
    pub fn kind(&self) -> &'static str {
        match self {
            Recipe::Z => "Z",
            Recipe::Zn(_) => "Zn",
            Recipe::GF { .. } => "GF",
            Recipe::Prod(_) => "Prod",
            Recipe::Mat(..) => "Mat",
            Recipe::UT(..) => "UT",
            Recipe::UTc { .. } => "UTc",
            Recipe::Triv(_) => "Triv",
            Recipe::TrivQ { .. } => "TrivQ",
            Recipe::Twist { .. } => "Twist",
            Recipe::FreeQ { .. } => "FreeQ",
            Recipe::CommQ { .. } => "CommQ",
            Recipe::Quat(_) => "Quat",
            Recipe::HJet(..) => "HJet",
            Recipe::Quot { .. } => "Quot",
        }
    }

    pub fn build(&self) -> Result<Ring> {
        match self {
            Recipe::Z => Ok(make_integers()),
            Recipe::Zn(n) => make_zmod(*n),
            Recipe::GF { p, modulus } => make_gf(*p, modulus.as_deref()),
            Recipe::Prod(parts) => {
                if parts.len() < 2 {
                    return Err(Error::InvalidParameter("Prod needs at least two factors".into()));
                }
                make_product(&parts.iter().map(Recipe::build).collect::<Result<Vec<_>>>()?)
            }
            Recipe::Mat(r, k) => make_matrix_full(&r.build()?, *k),
            Recipe::UT(r, k) => make_upper_triangular(&r.build()?, *k),
            Recipe::UTc { base, ideal, k } => {
                let s = base.build()?;
                make_const_diag_ut(&s, &parse_elems(&s, ideal)?, *k)
            }
            Recipe::Triv(r) => make_trivial_extension(&r.build()?),
            Recipe::TrivQ { base, ideal } => {
                let s = base.build()?;
                make_trivial_extension_quotient(&s, &parse_elems(&s, ideal)?)
            }
            Recipe::Twist { base, endo } => make_twisted_extension(&base.build()?, endo),
            Recipe::FreeQ { base, gens, patterns, max_len } => {
                make_free_monomial_quotient(&base.build()?, gens, patterns, *max_len)
            }
            Recipe::CommQ { base, caps } => make_comm_monomial_quotient(&base.build()?, caps),
            Recipe::Quat(n) => make_quaternion_mod(*n),
            Recipe::HJet(r, n) => make_hurwitz_truncated(&r.build()?, *n),
            Recipe::Quot { base, ideal } => {
                let s = base.build()?;
                make_quotient(&s, &parse_elems(&s, ideal)?)
            }
        }
    }
}

fn list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, open: char, items: &[T], close: char) -> fmt::Result {
    write!(f, "{open}")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "{close}")
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Z => f.write_str("Z"),
            Recipe::Zn(n) => write!(f, "Zn({n})"),
            Recipe::GF { p, modulus: None } => write!(f, "GF({p})"),
            Recipe::GF { p, modulus: Some(m) } => write!(f, "GF({p},{})", render_poly(m, 't')),
            Recipe::Prod(parts) => {
                f.write_str("Prod")?;
                list(f, '(', parts, ')')
            }
            Recipe::Mat(r, k) => write!(f, "Mat({r},{k})"),
            Recipe::UT(r, k) => write!(f, "UT({r},{k})"),
            Recipe::UTc { base, ideal, k } => {
                write!(f, "UTc({base},")?;
                list(f, '[', ideal, ']')?;
                write!(f, ",{k})")
            }
            Recipe::Triv(r) => write!(f, "Triv({r})"),
            Recipe::TrivQ { base, ideal } => {
                write!(f, "TrivQ({base},")?;
                list(f, '[', ideal, ']')?;
                f.write_str(")")
            }
            Recipe::Twist { base, endo } => write!(f, "Twist({base},{endo})"),
            Recipe::FreeQ { base, gens, patterns, max_len } => {
                write!(f, "FreeQ({base},")?;
                list(f, '[', gens, ']')?;
                f.write_str(",")?;
                list(f, '[', patterns, ']')?;
                write!(f, ",{max_len})")
            }
            Recipe::CommQ { base, caps } => {
                write!(f, "CommQ({base},{{")?;
                for (i, (v, c)) in caps.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}:{c}")?;
                }
                f.write_str("})")
            }
            Recipe::Quat(n) => write!(f, "Quat({n})"),
            Recipe::HJet(r, n) => write!(f, "HJet({r},{n})"),
            Recipe::Quot { base, ideal } => {
                write!(f, "Quot({base},")?;
                list(f, '[', ideal, ']')?;
                f.write_str(")")
            }
        }
    }
}
