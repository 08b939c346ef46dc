//! Exact computation of the annihilator of `1/f` for a reduced plane curve `f`.
//!
//! The localization `Q[x,y]_f` is generated by `1/f` as a module over the Weyl
//! algebra `A_2`, so presenting it amounts to finding `Ann(1/f)`. This crate
//! computes it iteratively: for `d = 1, 2, ...` it builds the left ideal
//! generated by all annihilating operators of order at most `d`, reads off the
//! multiplicity of the fiber over the singular point in the characteristic
//! cycle of that truncation, and stops once it matches `m - 1`, where `m` is the
//! multiplicity of the curve at the origin.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`]: sparse polynomials over `Q`, monomial orders, parsing/printing.
//! * [`groebner`]: commutative Buchberger for ideals and free modules,
//!   syzygies, quotients, saturation, elimination and dimension counts.
//! * [`weyl`]: Weyl algebra arithmetic, the action on `g·f^k`, left Gröbner
//!   bases and characteristic ideals.
//! * [`annihilator`]: truncated annihilators, local multiplicities, the
//!   genericity test and the main iteration.
//!
//! ```
//! use curveloc::annihilator::{kappa_and_annihilator, KappaConfig};
//! use curveloc::poly::{parse_poly, RingSpec};
//!
//! let ring = RingSpec::new(["x", "y"]).unwrap();
//! let cusp = parse_poly("x^2-y^3", &ring).unwrap();
//! let result = kappa_and_annihilator(&cusp, &KappaConfig::default()).unwrap();
//! assert_eq!(result.kappa, 1);
//! assert_eq!(result.curve_multiplicity, 2);
//! ```

pub mod annihilator;
mod error;
pub mod groebner;
pub mod poly;
pub mod weyl;

pub use error::{Error, Result};
pub use num_rational::BigRational as Rational;
