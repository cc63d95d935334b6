//! Combinatorics of category O at rational central character.
//!
//! The crate builds finite root data, their Weyl and affine Weyl groups,
//! Kazhdan-Lusztig polynomials, and from a rational coweight the endoscopic
//! Coxeter system whose parabolic quotient labels the composition factors of
//! Verma modules over the Langlands dual Lie algebra. A brute-force Verma
//! module oracle at rank at most two provides independent ground truth.
//!
//! Everything here is `no_std` with `alloc`; file formats, parallel table
//! fills and the command-line interface live in the `endokl` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod affine_strata;
pub mod coxeter;
pub mod endoscopy;
pub mod folding;
pub mod klpoly;
pub mod linalg;
pub mod multiplicity;
pub mod oracle;
pub mod poly;
pub mod rootsys;

pub use coxeter::{CoxeterElement, CoxeterSystem};
pub use endoscopy::StratificationDatum;
pub use klpoly::{KLCache, KLPolynomial};
pub use multiplicity::MultiplicityMatrix;
pub use rootsys::{CartanType, RationalCoweight, RootDatum};

/// Exact rational numbers used for coweights and pairings.
pub type Rational = num_rational::Ratio<i64>;
