use num_traits::Zero;

use crate::groebner::{is_squarefree, saturate_by_ideal, syzygies, Ideal};
use crate::poly::{Monomial, Poly, RingSpec};
use crate::weyl::symbol_ring;
use crate::{Error, Rational, Result};

/// A validated plane curve through the origin with no singular points elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveInput {
    pub f: Poly,
    /// Exponent of `f` whose annihilator is computed.
    pub a: i64,
    /// Whether the origin is a singular point of `f = 0`.
    pub singular_at_origin: bool,
}

/// Checks that `f` is a reduced plane curve through the origin whose only
/// possible singular point is the origin.
pub fn validate_curve(f: &Poly) -> Result<CurveInput> {
    let ring = f.ring();
    if ring.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: ring.arity(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantCurve);
    }
    if !is_squarefree(f)? {
        return Err(Error::NotSquarefree);
    }
    if !f.constant_term().is_zero() {
        return Err(Error::MissesOrigin);
    }
    let (fx, fy) = (f.partial_derivative(0)?, f.partial_derivative(1)?);
    let singular = Ideal::new(ring, [f.clone(), fx.clone(), fy.clone()])?;
    let away = saturate_by_ideal(&singular, &[Poly::var(ring, 0), Poly::var(ring, 1)])?;
    if !away.is_unit() {
        return Err(Error::SingularAwayFromOrigin {
            witness: away.to_string(),
        });
    }
    let singular_at_origin = fx.constant_term().is_zero() && fy.constant_term().is_zero();
    Ok(CurveInput {
        f: f.clone(),
        a: -1,
        singular_at_origin,
    })
}

/// Order of vanishing of `f` at the origin.
pub fn curve_multiplicity(f: &Poly) -> Result<u32> {
    let info = f.degree_info()?;
    if !f.constant_term().is_zero() {
        return Err(Error::MissesOrigin);
    }
    Ok(info.min)
}

/// `x^p + y^q + x·y^(q−1)` in `Q[x, y]`.
pub fn reiffen(p: u32, q: u32) -> Result<Poly> {
    if p < 4 || q < p + 1 {
        return Err(Error::InvalidReiffen { p, q });
    }
    let ring = RingSpec::new(["x", "y"])?;
    let one = Rational::from_integer(1.into());
    Ok(Poly::from_terms(
        &ring,
        [
            (Monomial::from([p, 0]), one.clone()),
            (Monomial::from([0, q]), one.clone()),
            (Monomial::from([1, q - 1]), one),
        ],
    ))
}

/// Whether the plane `ξ = a, η = b` meets the closure of the conormal of the
/// smooth part of the curve away from the fiber over the origin, i.e. whether
/// `(0, 0, a, b)` lies outside that closure.
pub fn check_genericity(f: &Poly, a: &Rational, b: &Rational) -> Result<bool> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let ring = f.ring();
    if ring.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: ring.arity(),
        });
    }
    let conormal = conormal_closure(f)?;
    let zero = Rational::zero();
    Ok(!conormal.vanishes_at(&[zero.clone(), zero, a.clone(), b.clone()])?)
}

/// `(⟨uξ + vη : u f_x + v f_y = 0⟩ + ⟨f⟩) : ⟨x, y⟩^∞` in `Q[x, y, ξ, η]`.
pub(crate) fn conormal_closure(f: &Poly) -> Result<Ideal> {
    let ring = f.ring();
    let sym = symbol_ring(ring);
    let (fx, fy) = (f.partial_derivative(0)?, f.partial_derivative(1)?);
    let embed = |p: &Poly| p.remap(&sym, &[0, 1]);
    let (xi, eta) = (Poly::var(&sym, 2), Poly::var(&sym, 3));
    let mut gens = vec![embed(f)];
    for s in syzygies(&[fx, fy])? {
        let c = s.components();
        gens.push(&(&embed(&c[0]) * &xi) + &(&embed(&c[1]) * &eta));
    }
    let ideal = Ideal::new(&sym, gens)?;
    saturate_by_ideal(&ideal, &[Poly::var(&sym, 0), Poly::var(&sym, 1)])
}
