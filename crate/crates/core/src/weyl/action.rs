use std::collections::HashMap;
use std::fmt;

use crate::poly::{Monomial, Poly};
use crate::{Error, Rational, Result};

use super::WeylElement;

/// The element `g·f^k` of the localization `Q[x]_f`.
///
/// Numerator and exponent are kept exactly as produced; no factor of `f` is
/// ever cancelled, so an operator annihilates `g·f^k` iff the numerator of the
/// result is literally zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwistedPower {
    f: Poly,
    g: Poly,
    k: i64,
}

impl TwistedPower {
    pub fn new(f: &Poly, g: &Poly, k: i64) -> Result<Self> {
        if f.ring() != g.ring() {
            return Err(Error::RingMismatch);
        }
        if f.is_constant() {
            return Err(Error::ConstantCurve);
        }
        Ok(TwistedPower {
            f: f.clone(),
            g: g.clone(),
            k,
        })
    }

    /// `1·f^k`.
    pub fn power(f: &Poly, k: i64) -> Result<Self> {
        Self::new(f, &Poly::one(f.ring()), k)
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn numerator(&self) -> &Poly {
        &self.g
    }

    pub fn exponent(&self) -> i64 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.g.is_zero()
    }

    /// The same element written over `f^(k−s)`, i.e. numerator times `f^s`.
    pub fn lower_exponent(&self, s: u32) -> TwistedPower {
        TwistedPower {
            f: self.f.clone(),
            g: &self.g * &self.f.pow(s),
            k: self.k - i64::from(s),
        }
    }

    /// `∂_i · (g f^k) = (∂g/∂x_i · f + k·g·∂f/∂x_i) · f^(k−1)`.
    pub fn differentiate(&self, i: usize) -> Result<TwistedPower> {
        let dg = self.g.partial_derivative(i)?;
        let df = self.f.partial_derivative(i)?;
        let k = Rational::from_integer(self.k.into());
        let g = &(&dg * &self.f) + &(&self.g * &df).scale(&k);
        Ok(TwistedPower {
            f: self.f.clone(),
            g,
            k: self.k - 1,
        })
    }
}

impl fmt::Debug for TwistedPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*({})^{}", self.g, self.f, self.k)
    }
}

/// `Q · (g f^k)`, written over `f^(k − ord Q)`; zero operators give `0·f^k`.
pub fn apply_to_twisted_power(q: &WeylElement, t: &TwistedPower) -> Result<TwistedPower> {
    let ring = q.ring();
    if ring != t.f.ring() {
        return Err(Error::RingMismatch);
    }
    let n = ring.arity();
    let Ok(ord) = q.operator_order() else {
        return Ok(TwistedPower {
            f: t.f.clone(),
            g: Poly::zero(ring),
            k: t.k,
        });
    };
    let mut derivatives: HashMap<Monomial, TwistedPower> = HashMap::new();
    derivatives.insert(Monomial::one(n), t.clone());
    let mut numerator = Poly::zero(ring);
    for (alpha, beta, c) in q.terms() {
        let d = derivative(&mut derivatives, &beta)?;
        let lift = ord - beta.degree();
        let g = d.g.shift(&alpha).scale(&c);
        numerator = &numerator + &(&g * &t.f.pow(lift));
    }
    Ok(TwistedPower {
        f: t.f.clone(),
        g: numerator,
        k: t.k - i64::from(ord),
    })
}

/// `∂^β · t`, memoised over multi-indices.
fn derivative(
    cache: &mut HashMap<Monomial, TwistedPower>,
    beta: &Monomial,
) -> Result<TwistedPower> {
    if let Some(d) = cache.get(beta) {
        return Ok(d.clone());
    }
    let i = beta
        .exponents()
        .iter()
        .position(|&e| e > 0)
        .expect("nonzero multi-index");
    let mut prev = beta.clone();
    prev.exponents_mut()[i] -= 1;
    let d = derivative(cache, &prev)?.differentiate(i)?;
    cache.insert(beta.clone(), d.clone());
    Ok(d)
}
