//! Commutative Gröbner bases over `Q`.
//!
//! Everything here is built on one fraction-free Buchberger kernel working on
//! vectors of terms, which covers ideals (rank one) and submodules of free
//! modules alike. Syzygies are read off a Gröbner basis of the graph
//! `{(v_i, e_i)}` under an order in which the first slot dominates.

pub(crate) mod convert;
pub(crate) mod domain;
pub(crate) mod engine;
mod ideal;
pub(crate) mod modular;
mod module;

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

pub use engine::{PositionRule, Selection};
pub use ideal::{
    eliminate, ideal_quotient, intersect, is_squarefree, krull_dimension, polynomial_gcd,
    quotient_vector_space_dim, saturate_by_ideal, saturate_by_poly,
};
pub use module::{
    module_contains, syzygies, syzygies_with, ModuleOrder, ModuleVector, SyzygyOptions,
};

use crate::poly::{MonomialOrder, Poly, RingSpec};
use crate::{Error, Rational, Result};
use convert::{poly_to_vector, vector_to_poly};
use domain::{Integers, Rationals};
use engine::{Buchberger, Commutative, TermOrder};

/// An ideal of `Q[x_1..x_n]` given by generators, with a write-once cache of
/// its reduced Gröbner basis for one order.
#[derive(Clone)]
pub struct Ideal {
    ring: RingSpec,
    generators: Vec<Poly>,
    gb: OnceLock<(MonomialOrder, Vec<Poly>)>,
}

impl Ideal {
    /// Zero generators are dropped. All generators must live in `ring`.
    pub fn new(ring: &RingSpec, generators: impl IntoIterator<Item = Poly>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
            gb: OnceLock::new(),
        })
    }

    /// Builds an ideal whose generators are known to be the reduced basis for `order`.
    pub(crate) fn from_groebner(ring: &RingSpec, basis: Vec<Poly>, order: MonomialOrder) -> Self {
        let ideal = Ideal {
            ring: ring.clone(),
            generators: basis.clone(),
            gb: OnceLock::new(),
        };
        let _ = ideal.gb.set((order, basis));
        ideal
    }

    pub fn unit(ring: &RingSpec) -> Self {
        Self::from_groebner(ring, vec![Poly::one(ring)], MonomialOrder::GrevLex)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// Reduced Gröbner basis; cached the first time it is requested.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Vec<Poly> {
        if let Some((o, gb)) = self.gb.get() {
            if o == order {
                return gb.clone();
            }
        }
        let gb = groebner_basis(&self.generators, order);
        let _ = self.gb.set((order.clone(), gb.clone()));
        gb
    }

    /// The cached `GrevLex` basis.
    pub(crate) fn grevlex_basis(&self) -> Vec<Poly> {
        self.groebner_basis(&MonomialOrder::GrevLex)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        if p.is_zero() {
            return true;
        }
        let gb = self.grevlex_basis();
        normal_form(p, &gb, &MonomialOrder::GrevLex).is_zero()
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    pub fn equals(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.grevlex_basis() == other.grevlex_basis()
    }

    pub fn is_unit(&self) -> bool {
        self.grevlex_basis().iter().any(|g| g.is_constant())
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Whether every generator vanishes at the origin.
    pub fn vanishes_at_origin(&self) -> bool {
        self.generators.iter().all(|g| g.constant_term().is_zero())
    }

    /// Whether every generator vanishes at `point`.
    pub fn vanishes_at(&self, point: &[Rational]) -> Result<bool> {
        for g in &self.generators {
            if !g.evaluate(point)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Scales so that the leading coefficient under `order` is one.
fn monic_in(p: Poly, order: &MonomialOrder) -> Poly {
    match p.leading_term(order) {
        Some((_, c)) => {
            let inv = c.recip();
            p.scale(&inv)
        }
        None => p,
    }
}

/// Reduced Gröbner basis with monic elements, sorted by descending leading monomial.
pub fn groebner_basis(generators: &[Poly], order: &MonomialOrder) -> Vec<Poly> {
    let Some(first) = generators.first() else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    let term_order = TermOrder::ideal(order.clone());
    let gens = generators
        .iter()
        .map(|g| poly_to_vector(&term_order, g))
        .collect();
    modular::modular_groebner(&term_order, &Commutative, gens, Selection::Normal)
        .into_iter()
        .map(|v| monic_in(vector_to_poly(&ring, &v), order))
        .collect()
}

/// Remainder of `p` on division by a Gröbner basis `gb` (w.r.t. `order`).
pub fn normal_form(p: &Poly, gb: &[Poly], order: &MonomialOrder) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    let term_order = TermOrder::ideal(order.clone());
    let pv = convert::poly_to_rational_vector(&term_order, p);
    let basis: Vec<_> = gb
        .iter()
        .map(|g| convert::poly_to_rational_vector(&term_order, g))
        .collect();
    let r = Buchberger::new(&Rationals, &term_order, &Commutative).normal_form(pv, &basis);
    convert::rational_vector_to_poly(p.ring(), &r)
}

/// Checks that every S-pair of `gb` reduces to zero.
pub fn is_groebner_basis(gb: &[Poly], order: &MonomialOrder) -> bool {
    let term_order = TermOrder::ideal(order.clone());
    let basis: Vec<_> = gb.iter().map(|g| poly_to_vector(&term_order, g)).collect();
    Buchberger::new(&Integers, &term_order, &Commutative).is_groebner(&basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ring() -> RingSpec {
        RingSpec::new(["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(s, &ring()).unwrap()
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(&ring(), gens.iter().map(|s| p(s))).unwrap()
    }

    #[test]
    fn lex_basis_by_hand_elimination() {
        // y(x^2-1) - x(xy-1) = x - y, then x^2-1 ≡ y^2-1 mod x-y
        let gb = groebner_basis(&[p("x^2-1"), p("x*y-1")], &MonomialOrder::Lex);
        assert_eq!(gb, vec![p("x-y"), p("y^2-1")]);
        assert!(is_groebner_basis(&gb, &MonomialOrder::Lex));
    }

    #[test]
    fn trivial_bases() {
        assert_eq!(
            groebner_basis(&[p("x-y")], &MonomialOrder::GrevLex),
            vec![p("x-y")]
        );
        assert_eq!(
            groebner_basis(&[p("x-y")], &MonomialOrder::Lex),
            vec![p("x-y")]
        );
        assert_eq!(
            groebner_basis(&[p("x"), p("x+1")], &MonomialOrder::GrevLex),
            vec![p("1")]
        );
        assert!(groebner_basis(&[], &MonomialOrder::GrevLex).is_empty());
        assert!(Ideal::new(&ring(), [p("0")])
            .unwrap()
            .grevlex_basis()
            .is_empty());
    }

    #[test]
    fn normal_forms() {
        let gb = groebner_basis(&[p("x-y")], &MonomialOrder::GrevLex);
        assert_eq!(
            normal_form(&p("x^2"), &gb, &MonomialOrder::GrevLex),
            p("y^2")
        );
        // Euler relation for the quasi-homogeneous cusp
        let gb = groebner_basis(&[p("2x"), p("-3y^2")], &MonomialOrder::GrevLex);
        assert!(normal_form(&p("x^2-y^3"), &gb, &MonomialOrder::GrevLex).is_zero());
        let gb = groebner_basis(&[p("x"), p("y")], &MonomialOrder::GrevLex);
        assert_eq!(normal_form(&p("1"), &gb, &MonomialOrder::GrevLex), p("1"));
        // exact rational remainder
        let gb = groebner_basis(&[p("2x-1")], &MonomialOrder::GrevLex);
        assert_eq!(
            normal_form(&p("x^2"), &gb, &MonomialOrder::GrevLex),
            p("1/4")
        );
    }

    #[test]
    fn membership_and_equality() {
        assert!(ideal(&["x^2-1", "x*y-1"]).contains(&p("x-y")));
        assert!(!ideal(&["x", "y"]).contains(&p("1")));
        assert!(ideal(&["x", "y"]).equals(&ideal(&["y", "x+y"])));
        assert!(!ideal(&["x"]).equals(&ideal(&["x", "y"])));
        assert!(ideal(&["x"]).is_subset_of(&ideal(&["x", "y"])));
        assert!(ideal(&["x", "x+1"]).is_unit());
    }

    #[test]
    fn cache_is_write_once_and_order_aware() {
        let i = ideal(&["x^2-1", "x*y-1"]);
        let lex = i.groebner_basis(&MonomialOrder::Lex);
        let grevlex = i.groebner_basis(&MonomialOrder::GrevLex);
        assert_eq!(lex, vec![p("x-y"), p("y^2-1")]);
        assert!(is_groebner_basis(&grevlex, &MonomialOrder::GrevLex));
        assert_eq!(i.groebner_basis(&MonomialOrder::Lex), lex);
    }
}
