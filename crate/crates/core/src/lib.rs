//! Narrow-sense BCH codes of length `(q^m - 1)/(q - 1)` over GF(q).
//!
//! The crate builds the field tower, cyclotomic cosets and coset leaders,
//! generator polynomials, Bose distances through NDS decompositions,
//! and weight distributions, both in closed form for the ternary families
//! and by exhaustive enumeration.

pub mod error;
pub mod analysis;
pub mod bch;
pub mod cosets;
pub mod gf;
pub mod nds;
pub mod poly;

pub use error::{Error, Result};
