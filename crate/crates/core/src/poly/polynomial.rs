use rustc_hash::FxHashMap;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, RingSpec};
use crate::{Error, Rational, Result};

/// A sparse polynomial with rational coefficients.
///
/// Terms are kept sorted by descending `GrevLex` with no zero coefficients, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: RingSpec,
    terms: Vec<(Monomial, Rational)>,
}

/// Largest and smallest total degree among the terms of a nonzero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeInfo {
    pub total: u32,
    pub min: u32,
}

impl Poly {
    pub fn zero(ring: &RingSpec) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingSpec) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &RingSpec, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.arity()), c)
    }

    pub fn from_int(ring: &RingSpec, c: i64) -> Self {
        Self::constant(ring, Rational::from_integer(c.into()))
    }

    /// The variable `x_index`.
    pub fn var(ring: &RingSpec, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.arity(), index, 1), Rational::one())
    }

    pub fn monomial(ring: &RingSpec, m: Monomial, c: Rational) -> Self {
        assert_eq!(
            m.arity(),
            ring.arity(),
            "monomial arity does not match ring"
        );
        if c.is_zero() {
            return Self::zero(ring);
        }
        Poly {
            ring: ring.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Builds a polynomial from arbitrary terms: equal monomials are merged and zeros dropped.
    pub fn from_terms(
        ring: &RingSpec,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (m, c) in terms {
            assert_eq!(
                m.arity(),
                ring.arity(),
                "monomial arity does not match ring"
            );
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &RingSpec, acc: FxHashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| MonomialOrder::GrevLex.compare(&b.0, &a.0));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    /// Terms in descending `GrevLex` order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Coefficient of `m` (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| MonomialOrder::GrevLex.compare(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// The constant coefficient, i.e. the value at the origin.
    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    /// Leading monomial and coefficient with respect to `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        if *order == MonomialOrder::GrevLex {
            return self.terms.first().map(|(m, c)| (m, c));
        }
        self.terms
            .iter()
            .max_by(|a, b| order.compare(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    pub fn degree_info(&self) -> Result<DegreeInfo> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let degrees = self.terms.iter().map(|(m, _)| m.degree());
        let (min, total) = degrees.fold((u32::MAX, 0), |(lo, hi), d| (lo.min(d), hi.max(d)));
        Ok(DegreeInfo { total, min })
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => MonomialOrder::GrevLex.compare(&a.0, &b.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if negate { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &self.terms[i].1 - &other.terms[j].1
                    } else {
                        &self.terms[i].1 + &other.terms[j].1
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        let mut acc: FxHashMap<Monomial, Rational> =
            FxHashMap::with_capacity_and_hasher(self.len() * other.len(), Default::default());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                acc.entry(ma * mb).and_modify(|e| *e += &c).or_insert(c);
            }
        }
        Self::from_map(&self.ring, acc)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by the monomial `m`.
    pub fn shift(&self, m: &Monomial) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t * m, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ring);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.product(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `x_index`.
    pub fn partial_derivative(&self, index: usize) -> Result<Poly> {
        if index >= self.ring.arity() {
            return Err(Error::IndexOutOfRange {
                index,
                arity: self.ring.arity(),
            });
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m[index] > 0)
            .map(|(m, c)| {
                let mut m = m.clone();
                let e = m[index];
                m.exponents_mut()[index] = e - 1;
                (m, c * Rational::from_integer(e.into()))
            });
        // lowering one exponent by one keeps GrevLex order among the survivors
        Ok(Poly {
            ring: self.ring.clone(),
            terms: terms.collect(),
        })
    }

    /// Substitutes rational values for some variables; the result lives in the
    /// ring with those variables removed.
    pub fn substitute(&self, assignment: &[(usize, Rational)]) -> Result<Poly> {
        let arity = self.ring.arity();
        for (i, _) in assignment {
            if *i >= arity {
                return Err(Error::IndexOutOfRange { index: *i, arity });
            }
        }
        let assigned: Vec<usize> = assignment.iter().map(|(i, _)| *i).collect();
        let ring = if assigned.len() == arity && {
            let mut s = assigned.clone();
            s.sort_unstable();
            s.dedup();
            s.len() == arity
        } {
            RingSpec::constants()
        } else {
            self.ring.without(&assigned)
        };
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut c = c.clone();
            for (i, v) in assignment {
                c *= pow_rational(v, m[*i]);
            }
            if c.is_zero() {
                continue;
            }
            let rest = Monomial::new(
                m.exponents()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !assigned.contains(i))
                    .map(|(_, &e)| e),
            );
            *acc.entry(rest).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_map(&ring, acc))
    }

    /// Value at a point (one rational per variable).
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ring.arity() {
            return Err(Error::ArityMismatch {
                expected: self.ring.arity(),
                found: point.len(),
            });
        }
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= pow_rational(v, e);
                }
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Exact quotient `self / divisor`; fails unless the division leaves no remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        self.check_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (lm, lc) = divisor.terms[0].clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let q = m.checked_div(&lm).ok_or(Error::NotDivisible)?;
            let qc = c / &lc;
            rem = rem.merge(&divisor.shift(&q).scale(&qc), true);
            quot.push((q, qc));
        }
        Ok(Poly {
            ring: self.ring.clone(),
            terms: quot,
        })
    }

    /// Divides by the leading coefficient (w.r.t. `GrevLex`); zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Scales to integer coefficients with content 1 and positive leading
    /// coefficient under `order`.
    pub fn primitive(&self, order: &MonomialOrder) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let den = self
            .terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let num = self.terms.iter().fold(BigInt::zero(), |acc, (_, c)| {
            acc.gcd(&(c.numer() * (&den / c.denom())))
        });
        let mut s = Rational::new(den, num);
        if self.leading_term(order).unwrap().1.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    /// Reinterprets the polynomial in `ring`, which must have the same arity.
    pub fn with_ring(&self, ring: &RingSpec) -> Poly {
        assert_eq!(ring.arity(), self.ring.arity());
        Poly {
            ring: ring.clone(),
            terms: self.terms.clone(),
        }
    }

    /// Reorders or embeds the variables: variable `i` of `self` becomes variable
    /// `map[i]` of `ring`. The map must be injective.
    pub fn remap(&self, ring: &RingSpec, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.ring.arity());
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = Monomial::one(ring.arity());
            for (i, &target) in map.iter().enumerate() {
                e.exponents_mut()[target] = m[i];
            }
            (e, c.clone())
        });
        Self::from_terms(ring, terms)
    }
}

pub(crate) fn pow_rational(v: &Rational, e: u32) -> Rational {
    num_traits::pow::pow(v.clone(), e as usize)
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;

            fn $method(self, rhs: &Poly) -> Poly {
                self.$body(rhs).expect("polynomials from different rings")
            }
        }

        impl $trait<Poly> for Poly {
            type Output = Poly;

            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
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

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x-y") * &p("x+y"), p("x^2-y^2"));
        assert_eq!(&p("x^2-y^3") + &p("y^3"), p("x^2"));
        assert_eq!(p("x+y").pow(0), p("1"));
        assert_eq!(p("x+y").pow(3), p("x^3+3*x^2*y+3*x*y^2+y^3"));
        assert_eq!(p("x").scale(&q(1, 2)), p("1/2 x"));
        assert!((&p("x") - &p("x")).is_zero());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let other = RingSpec::new(["x", "z"]).unwrap();
        let a = Poly::var(&ring(), 0);
        let b = Poly::var(&other, 0);
        assert_eq!(a.try_add(&b), Err(Error::RingMismatch));
        assert_eq!(a.try_mul(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn derivatives() {
        let f = p("x^2-y^3");
        assert_eq!(f.partial_derivative(0).unwrap(), p("2x"));
        assert_eq!(f.partial_derivative(1).unwrap(), p("-3y^2"));
        assert!(p("7").partial_derivative(0).unwrap().is_zero());
        assert_eq!(
            f.partial_derivative(2),
            Err(Error::IndexOutOfRange { index: 2, arity: 2 })
        );
    }

    #[test]
    fn degrees() {
        assert_eq!(
            p("x^4+y^5+x*y^4").degree_info().unwrap(),
            DegreeInfo { total: 5, min: 4 }
        );
        assert_eq!(
            p("x^2-y^3").degree_info().unwrap(),
            DegreeInfo { total: 3, min: 2 }
        );
        assert_eq!(
            p("5").degree_info().unwrap(),
            DegreeInfo { total: 0, min: 0 }
        );
        assert_eq!(p("0").degree_info(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn substitution() {
        let r4 = RingSpec::new(["x", "y", "xi", "eta"]).unwrap();
        let e = parse_poly("x*xi+y*eta", &r4).unwrap();
        let s = e.substitute(&[(2, q(0, 1)), (3, q(1, 1))]).unwrap();
        assert_eq!(s, p("y"));
        let origin = p("x^2-y^3")
            .substitute(&[(0, q(0, 1)), (1, q(0, 1))])
            .unwrap();
        assert!(origin.is_zero());
        assert_eq!(origin.ring().arity(), 0);
        let r1 = RingSpec::new(["xi"]).unwrap();
        let sq = parse_poly("xi^2", &r1)
            .unwrap()
            .substitute(&[(0, q(2, 1))])
            .unwrap();
        assert_eq!(sq.constant_term(), q(4, 1));
        assert!(p("x").substitute(&[(5, q(0, 1))]).is_err());
    }

    #[test]
    fn exact_division_and_normalisation() {
        assert_eq!(p("x^2-y^2").div_exact(&p("x+y")).unwrap(), p("x-y"));
        assert_eq!(p("x^2+1").div_exact(&p("x")), Err(Error::NotDivisible));
        assert_eq!(
            p("-2/3x+4/9y").primitive(&MonomialOrder::GrevLex),
            p("3x-2y")
        );
        assert_eq!(p("2x+4").monic(), p("x+2"));
        assert_eq!(p("x^2-y^3").evaluate(&[q(1, 1), q(1, 1)]).unwrap(), q(0, 1));
    }
}
