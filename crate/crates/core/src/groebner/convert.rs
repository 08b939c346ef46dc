use rustc_hash::FxHashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::domain::{Integers, Rationals};
use super::engine::{collect_sorted, Term, TermOrder, Vector};
use crate::poly::{Monomial, Poly, RingSpec};
use crate::Rational;

/// Clears denominators of a list of polynomials placed in components
/// `first_comp, first_comp+1, ...`; returns the integer vector and the common
/// denominator `D` such that `vector = D·(p_0, p_1, ...)`.
pub(crate) fn to_vector(order: &TermOrder, parts: &[(u32, &Poly)]) -> (Vector<BigInt>, BigInt) {
    let den = parts
        .iter()
        .flat_map(|(_, p)| p.terms().iter())
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut acc: FxHashMap<(u32, Monomial), BigInt> = FxHashMap::default();
    for (comp, p) in parts {
        for (m, c) in p.terms() {
            let v = c.numer() * (&den / c.denom());
            *acc.entry((*comp, m.clone())).or_insert_with(BigInt::zero) += v;
        }
    }
    (collect_sorted(&Integers, order, acc), den)
}

pub(crate) fn poly_to_vector(order: &TermOrder, p: &Poly) -> Vector<BigInt> {
    to_vector(order, &[(0, p)]).0
}

/// A polynomial as a rational vector in component 0.
pub(crate) fn poly_to_rational_vector(order: &TermOrder, p: &Poly) -> Vector<Rational> {
    let acc: FxHashMap<(u32, Monomial), Rational> = p
        .terms()
        .iter()
        .map(|(m, c)| ((0, m.clone()), c.clone()))
        .collect();
    collect_sorted(&Rationals, order, acc)
}

/// Extracts component `comp` of an integer vector as a rational polynomial, dividing by `scale`.
pub(crate) fn component(ring: &RingSpec, v: &[Term<BigInt>], comp: u32, scale: &BigInt) -> Poly {
    let s = Rational::from_integer(scale.clone());
    Poly::from_terms(
        ring,
        v.iter()
            .filter(|t| t.comp == comp)
            .map(|t| (t.mon.clone(), Rational::from_integer(t.coeff.clone()) / &s)),
    )
}

pub(crate) fn vector_to_poly(ring: &RingSpec, v: &[Term<BigInt>]) -> Poly {
    component(ring, v, 0, &BigInt::one())
}

pub(crate) fn rational_vector_to_poly(ring: &RingSpec, v: &[Term<Rational>]) -> Poly {
    Poly::from_terms(
        ring,
        v.iter()
            .filter(|t| t.comp == 0)
            .map(|t| (t.mon.clone(), t.coeff.clone())),
    )
}
