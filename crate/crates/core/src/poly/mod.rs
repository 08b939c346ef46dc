//! Sparse multivariate polynomials over `Q`.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_poly;
pub(crate) use parse::{parse_with, write_terms, ParseTarget};
pub use polynomial::{DegreeInfo, Poly};
pub use ring::RingSpec;
