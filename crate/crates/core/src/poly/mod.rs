//! Exact polynomial arithmetic: rational multivariate polynomials, integer
//! univariate polynomials, linear coordinate changes and a small text parser.

mod matrix;
mod monomial;
mod multi;
mod parse;
mod uni;

pub use matrix::RationalMatrix;
pub use monomial::Monomial;
pub use multi::MultiPoly;
pub use parse::parse;
pub use uni::UniPoly;
