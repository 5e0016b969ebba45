//! Chromatic symmetric functions of natural unit interval graphs.
//!
//! Expansions are exact. The scalar ring is a type parameter bounded by
//! [`symfunc::Coefficient`]; the aliases below fix the two rings used in practice.

pub mod coefficients;
pub mod error;
pub mod injections;
pub mod order;
pub mod symfunc;
pub mod tableaux;
pub mod verifier;
mod text;

pub use error::{Error, Result};
pub use order::{enumerate_hessenberg, BounceData, HessenbergFunction};
pub use symfunc::{Basis, Partition, TPoly};
pub use tableaux::FTableau;
pub use text::parse_int_list;

/// Integer-coefficient expansion.
pub type Expansion = symfunc::SymExpansion<num_bigint::BigInt>;
/// Expansion with coefficients in `Z[t]`.
pub type TExpansion = symfunc::SymExpansion<TPoly>;
/// Integer polynomial in `x_1..x_N`.
pub type Poly = symfunc::MultiPoly<num_bigint::BigInt>;
