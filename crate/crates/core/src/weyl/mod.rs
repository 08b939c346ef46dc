//! The Weyl algebra `A_n = Q[x_1..x_n]<∂_1..∂_n>` with `∂_i x_i − x_i ∂_i = 1`.
//!
//! Operators are kept in the normal form `Σ q x^α ∂^β` (all `x` to the left)
//! and stored as commutative polynomials in `x, dx`, so the commutative
//! Buchberger kernel can run unchanged once it is handed the Weyl product for
//! left multiplication by a monomial.
//!
//! ```
//! use curveloc::poly::RingSpec;
//! use curveloc::weyl::parse_weyl;
//!
//! let ring = RingSpec::new(["x", "y"]).unwrap();
//! let p = parse_weyl("dx", &ring).unwrap() * parse_weyl("x", &ring).unwrap();
//! assert_eq!(p.to_string(), "x*dx+1");
//! ```

mod action;
mod element;
mod ideal;

pub use action::{apply_to_twisted_power, TwistedPower};
pub use element::{parse_weyl, symbol_ring, weyl_multiply, WeylElement};
pub use ideal::{
    char_ideal, weyl_groebner, weyl_groebner_with, weyl_ideal_equal, weyl_membership,
    weyl_normal_form, CharIdeal, WeylIdeal, WeylOrder,
};
