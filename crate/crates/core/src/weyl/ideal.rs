use rustc_hash::FxHashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::groebner::domain::{Domain, Integers};
use crate::groebner::engine::{
    collect_sorted, shift, Buchberger, LeftMultiplication, Selection, Term, TermOrder, Vector,
};
use crate::groebner::modular::modular_groebner;
use crate::groebner::{krull_dimension, Ideal};
use crate::poly::{Monomial, MonomialOrder, Poly, RingSpec};
use crate::{Error, Result};

use super::element::{monomial_product, operator_ring, symbol_ring};
use super::WeylElement;

/// The order used for left Gröbner bases: total `∂`-degree first (weight
/// `(0, 1)`), ties broken by `GrevLex` on all `2n` exponents.
///
/// It refines the order filtration, which is what makes leading forms of a
/// Gröbner basis generate the characteristic ideal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeylOrder;

impl WeylOrder {
    pub fn monomial_order(&self, n: usize) -> MonomialOrder {
        MonomialOrder::operator_order(n)
    }
}

/// Left multiplication in `A_n` for the Buchberger kernel.
pub(crate) struct WeylAlgebra {
    pub n: usize,
}

impl LeftMultiplication for WeylAlgebra {
    fn commutative(&self) -> bool {
        false
    }

    fn mul_monomial<D: Domain>(
        &self,
        dom: &D,
        order: &TermOrder,
        m: &Monomial,
        p: &[Term<D::C>],
    ) -> Vector<D::C> {
        if m.exponents()[self.n..].iter().all(|&e| e == 0) {
            // x^α commutes with the coefficients
            return shift(m, p);
        }
        let mut acc: FxHashMap<(u32, Monomial), D::C> =
            FxHashMap::with_capacity_and_hasher(p.len() * 2, Default::default());
        for t in p {
            for (mon, k) in monomial_product(self.n, m, &t.mon) {
                let c = dom.mul(&dom.lift_integer(&k), &t.coeff);
                acc.entry((t.comp, mon))
                    .and_modify(|e| *e = dom.add(e, &c))
                    .or_insert(c);
            }
        }
        collect_sorted(dom, order, acc)
    }
}

fn engine_order(n: usize) -> TermOrder {
    TermOrder::ideal(MonomialOrder::operator_order(n))
}

fn to_vector(order: &TermOrder, w: &WeylElement) -> Vector<BigInt> {
    crate::groebner::convert::poly_to_vector(order, w.operator_poly())
}

fn from_vector(ring: &RingSpec, v: &[Term<BigInt>]) -> WeylElement {
    let op = operator_ring(ring).expect("operator ring");
    WeylElement::from_operator_poly(ring, crate::groebner::convert::vector_to_poly(&op, v))
}

/// Reduced left Gröbner basis for [`WeylOrder`]: integer coefficients with
/// content 1, positive leading coefficients, descending leading monomials.
pub fn weyl_groebner(generators: &[WeylElement], _order: &WeylOrder) -> Vec<WeylElement> {
    weyl_groebner_with(generators, Selection::Normal)
}

/// [`weyl_groebner`] with an explicit pair selection strategy.
pub fn weyl_groebner_with(generators: &[WeylElement], selection: Selection) -> Vec<WeylElement> {
    let Some(first) = generators.first() else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    let n = ring.arity();
    let order = engine_order(n);
    let alg = WeylAlgebra { n };
    let gens = generators.iter().map(|g| to_vector(&order, g)).collect();
    modular_groebner(&order, &alg, gens, selection)
        .iter()
        .map(|v| from_vector(&ring, v))
        .collect()
}

/// Remainder of left division of `p` by a left Gröbner basis, up to a nonzero scalar.
pub fn weyl_normal_form(p: &WeylElement, gb: &[WeylElement]) -> WeylElement {
    let n = p.ring().arity();
    let order = engine_order(n);
    let alg = WeylAlgebra { n };
    let basis: Vec<Vector<BigInt>> = gb.iter().map(|g| to_vector(&order, g)).collect();
    let r = Buchberger::new(&Integers, &order, &alg).normal_form(to_vector(&order, p), &basis);
    from_vector(p.ring(), &r)
}

/// A left ideal of the Weyl algebra, with a write-once cache of its left
/// Gröbner basis.
#[derive(Clone)]
pub struct WeylIdeal {
    ring: RingSpec,
    generators: Vec<WeylElement>,
    gb: OnceLock<Vec<WeylElement>>,
}

impl WeylIdeal {
    /// Zero generators are dropped.
    pub fn new(ring: &RingSpec, generators: impl IntoIterator<Item = WeylElement>) -> Result<Self> {
        operator_ring(ring)?;
        let mut gens = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(WeylIdeal {
            ring: ring.clone(),
            generators: gens,
            gb: OnceLock::new(),
        })
    }

    /// An ideal whose reduced Gröbner basis is already known.
    pub(crate) fn with_groebner_basis(
        ring: &RingSpec,
        generators: Vec<WeylElement>,
        gb: Vec<WeylElement>,
    ) -> Self {
        WeylIdeal {
            ring: ring.clone(),
            generators,
            gb: OnceLock::from(gb),
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    /// The reduced left Gröbner basis, computed once.
    pub fn groebner_basis(&self) -> &[WeylElement] {
        self.gb
            .get_or_init(|| weyl_groebner(&self.generators, &WeylOrder))
    }

    /// Left membership.
    pub fn contains(&self, p: &WeylElement) -> bool {
        p.is_zero() || weyl_normal_form(p, self.groebner_basis()).is_zero()
    }

    pub fn is_subset_of(&self, other: &WeylIdeal) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    pub fn equals(&self, other: &WeylIdeal) -> bool {
        self.ring == other.ring && self.groebner_basis() == other.groebner_basis()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis()
            .iter()
            .any(|g| g.operator_poly().is_constant())
    }

    /// Leading forms of the Gröbner basis under the order filtration.
    pub fn char_ideal(&self) -> CharIdeal {
        let ring = symbol_ring(&self.ring);
        let symbols: Vec<Poly> = self
            .groebner_basis()
            .iter()
            .map(WeylElement::principal_symbol)
            .collect();
        CharIdeal {
            ideal: Ideal::new(&ring, symbols).expect("symbols share a ring"),
        }
    }
}

impl fmt::Debug for WeylIdeal {
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

/// `p ∈ I`.
pub fn weyl_membership(p: &WeylElement, ideal: &WeylIdeal) -> bool {
    ideal.contains(p)
}

/// Equality of left ideals.
pub fn weyl_ideal_equal(a: &WeylIdeal, b: &WeylIdeal) -> bool {
    a.equals(b)
}

/// The characteristic ideal `gr(I) ⊂ Q[x, ξ]`.
#[derive(Clone, Debug)]
pub struct CharIdeal {
    ideal: Ideal,
}

impl CharIdeal {
    pub fn ring(&self) -> &RingSpec {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn generators(&self) -> &[Poly] {
        self.ideal.generators()
    }

    pub fn dimension(&self) -> i64 {
        krull_dimension(&self.ideal)
    }
}

pub fn char_ideal(ideal: &WeylIdeal) -> CharIdeal {
    ideal.char_ideal()
}
