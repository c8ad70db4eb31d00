//! Exact computation of Lê numbers, Milnor numbers and polar intersection data
//! for complex polynomial hypersurfaces with a one-dimensional critical locus,
//! together with the monodromy constraints they imply.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and the
//! command-line driver live in the companion `nexus-cli` crate.
//!
//! Module map:
//!
//! - [`poly`]: rational multivariate polynomials, integer univariate polynomials, parsing.
//! - [`cyclotomic`]: characteristic polynomials as products of cyclotomic factors.
//! - [`local`]: Mora normal forms, local standard bases, colengths, quotients, saturation.
//! - [`le`]: μ₀, the relative polar curve, λ⁰, λ¹ and ω for a chosen slice form.
//! - [`constraints`]: divisibility and rank bounds, non-splitting analysis, trace checks.
//! - [`arrangement`]: central plane arrangements in three variables.
#![no_std]

extern crate alloc;

pub mod arrangement;
pub mod constraints;
pub mod cyclotomic;
mod error;
pub mod le;
pub mod local;
pub mod poly;

pub use error::{Error, ParseError, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
