//! Annihilators of `1/f` for plane curves, computed order by order.
//!
//! `Ann^(d)(f^a)` is generated by the operators `Σ_{|α|≤d} c_α ∂^α` whose
//! coefficient vectors are syzygies of the numerators of `∂^α·f^a` over a
//! common power of `f`. Its characteristic ideal is intersected with a plane
//! `ξ = a, η = b` through a point of the fiber over the origin; the length of
//! that intersection at the origin is `m^(d)`. The iteration stops at the first
//! `d` with `m^(d) = m − 1`, where `m` is the multiplicity of the curve.
//!
//! ```
//! use curveloc::annihilator::{m_d, reiffen, LocalMultiplicity};
//! use curveloc::Rational;
//!
//! let f = reiffen(4, 5).unwrap();
//! let point = (Rational::from_integer(0.into()), Rational::from_integer(1.into()));
//! assert_eq!(m_d(&f, -1, 1, &point).unwrap(), LocalMultiplicity::Finite(4));
//! ```

mod curve;
mod kappa;
mod multiplicity;
mod truncation;

pub use curve::{check_genericity, curve_multiplicity, reiffen, validate_curve, CurveInput};
pub use kappa::{
    kappa_and_annihilator, kappa_with_progress, KappaConfig, KappaResult, TruncationReport,
    DEFAULT_LADDER,
};
pub use multiplicity::{fiber_multiplicity, local_multiplicity_at_origin, m_d, LocalMultiplicity};
pub use truncation::{
    derivative_numerators, multi_indices, syzygy_operators, truncated_annihilator,
};
