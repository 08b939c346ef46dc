use std::fmt;

use super::convert::{component, to_vector};
use super::domain::Integers;
use super::engine::{Buchberger, Commutative, PositionRule, Selection, TermOrder, Vector};
use super::modular::lift_groebner;
use crate::poly::{MonomialOrder, Poly, RingSpec};
use crate::{Error, Result};

/// An element of the free module `R^N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    ring: RingSpec,
    components: Vec<Poly>,
}

impl ModuleVector {
    pub fn new(ring: &RingSpec, components: Vec<Poly>) -> Result<Self> {
        if components.iter().any(|c| c.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(ModuleVector {
            ring: ring.clone(),
            components,
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    /// `Σ c_i v_i`.
    pub fn dot(&self, v: &[Poly]) -> Result<Poly> {
        if v.len() != self.components.len() {
            return Err(Error::ArityMismatch {
                expected: self.components.len(),
                found: v.len(),
            });
        }
        let mut acc = Poly::zero(&self.ring);
        for (c, x) in self.components.iter().zip(v) {
            acc = acc.try_add(&c.try_mul(x)?)?;
        }
        Ok(acc)
    }
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Monomial order on a free module: a base order, a rule for positions, and an
/// optional slot that dominates every other slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
    pub lead_slot: Option<usize>,
    pub rule: PositionRule,
}

impl ModuleOrder {
    pub(crate) fn term_order(&self) -> TermOrder {
        TermOrder {
            base: self.base.clone(),
            lead_slot: self.lead_slot.map(|s| s as u32),
            rule: self.rule,
        }
    }
}

/// Knobs for [`syzygies_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyOptions {
    /// Order used on the relation part `R^N`; the extra value slot always dominates.
    pub base: MonomialOrder,
    pub rule: PositionRule,
    pub selection: Selection,
}

impl Default for SyzygyOptions {
    fn default() -> Self {
        SyzygyOptions {
            base: MonomialOrder::GrevLex,
            rule: PositionRule::TermOverPosition,
            selection: Selection::Normal,
        }
    }
}

/// Generators of the module `{c ∈ R^N : Σ c_i v_i = 0}`.
pub fn syzygies(v: &[Poly]) -> Result<Vec<ModuleVector>> {
    syzygies_with(v, &SyzygyOptions::default())
}

/// [`syzygies`] with an explicit module order and selection strategy.
///
/// A Gröbner basis of `{(v_i, e_i)} ⊂ R ⊕ R^N` is computed with the first slot
/// dominating; its elements with vanishing first slot form a Gröbner basis of
/// the syzygy module.
pub fn syzygies_with(v: &[Poly], options: &SyzygyOptions) -> Result<Vec<ModuleVector>> {
    let Some(first) = v.first() else {
        return Err(Error::InvalidArgument("syzygies of an empty vector".into()));
    };
    let ring = first.ring().clone();
    if v.iter().any(|p| p.ring() != &ring) {
        return Err(Error::RingMismatch);
    }
    let order = ModuleOrder {
        base: options.base.clone(),
        lead_slot: Some(0),
        rule: options.rule,
    }
    .term_order();
    let one = Poly::one(&ring);
    let gens = v
        .iter()
        .enumerate()
        .map(|(i, p)| to_vector(&order, &[(0, p), (i as u32 + 1, &one)]).0)
        .collect();
    let to_module = |b: &[super::engine::Term<num_bigint::BigInt>]| {
        let one_scale = num_bigint::BigInt::from(1);
        let comps = (1..=v.len() as u32)
            .map(|c| component(&ring, b, c, &one_scale))
            .collect();
        ModuleVector::new(&ring, comps)
    };
    let engine = Buchberger::new(&Integers, &order, &Commutative);
    // only the syzygy part is lifted: the cofactor rows of the graph basis
    // carry far larger coefficients
    let certify = |basis: &[Vector<num_bigint::BigInt>], _: &[Vector<num_bigint::BigInt>]| {
        basis.iter().all(|b| {
            to_module(b)
                .and_then(|m| m.dot(v))
                .is_ok_and(|p| p.is_zero())
        }) && engine.is_groebner(basis)
    };
    let basis = match lift_groebner(
        &order,
        &Commutative,
        gens,
        options.selection,
        |t| t.comp != 0,
        certify,
    ) {
        Ok(basis) => basis,
        Err(gens) => engine
            .groebner_basis(gens)
            .into_iter()
            .filter(|b| b.iter().all(|t| t.comp != 0))
            .collect(),
    };
    basis.iter().map(|b| to_module(b)).collect()
}

/// Whether `v` lies in the submodule generated by `gens`.
pub fn module_contains(gens: &[ModuleVector], v: &ModuleVector) -> bool {
    if v.is_zero() {
        return true;
    }
    let order = ModuleOrder {
        base: MonomialOrder::GrevLex,
        lead_slot: None,
        rule: PositionRule::PositionOverTerm,
    }
    .term_order();
    let vec_of = |m: &ModuleVector| {
        let parts: Vec<(u32, &Poly)> = m
            .components()
            .iter()
            .enumerate()
            .map(|(i, p)| (i as u32, p))
            .collect();
        to_vector(&order, &parts).0
    };
    let engine = Buchberger::new(&Integers, &order, &Commutative);
    let basis = engine.groebner_basis(gens.iter().map(vec_of).collect());
    engine.normal_form(vec_of(v), &basis).is_empty()
}
