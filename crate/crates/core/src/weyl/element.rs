use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::{parse_with, write_terms, Monomial, MonomialOrder, ParseTarget, Poly, RingSpec};
use crate::{Error, Rational, Result};

/// The names `x_1..x_n, dx_1..dx_n` used to store and print operators.
pub(crate) fn operator_ring(ring: &RingSpec) -> Result<RingSpec> {
    ring.with_back(ring.names().iter().map(|v| format!("d{v}")))
}

/// The commutative ring `Q[x, ξ]` that principal symbols live in.
pub fn symbol_ring(ring: &RingSpec) -> RingSpec {
    let n = ring.arity();
    if n == 2 {
        if let Ok(r) = ring.with_back(["xi", "eta"]) {
            return r;
        }
    }
    let extra: Vec<String> = ring
        .names()
        .iter()
        .map(|v| ring.fresh_name(&format!("xi_{v}")))
        .collect();
    ring.with_back(extra).expect("fresh symbol names")
}

/// `x^a ∂^b · x^c ∂^d` in normal form, with integer coefficients.
///
/// Per variable, `∂^b x^c = Σ_k C(b,k)·c!/(c−k)!·x^(c−k) ∂^(b−k)`.
pub(crate) fn monomial_product(n: usize, a: &Monomial, b: &Monomial) -> Vec<(Monomial, BigInt)> {
    let mut out: Vec<(Monomial, BigInt)> = vec![(a * b, BigInt::one())];
    for i in 0..n {
        let (dl, xr) = (a[n + i], b[i]);
        let kmax = dl.min(xr);
        if kmax == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(out.len() * (kmax as usize + 1));
        for (m, c) in &out {
            let mut coeff = BigInt::one();
            for k in 0..=kmax {
                if k > 0 {
                    // C(dl,k)·xr!/(xr−k)! from its value at k−1
                    coeff = coeff * BigInt::from(dl - k + 1) * BigInt::from(xr - k + 1)
                        / BigInt::from(k);
                }
                let mut mk = m.clone();
                let e = mk.exponents_mut();
                e[i] -= k;
                e[n + i] -= k;
                next.push((mk, c * &coeff));
            }
        }
        out = next;
    }
    out
}

/// A differential operator `Σ q_{αβ} x^α ∂^β` with rational coefficients.
///
/// `ring` names the commutative variables; the derivation for `x` prints as `dx`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    ring: RingSpec,
    poly: Poly,
}

impl WeylElement {
    fn wrap(ring: &RingSpec, poly: Poly) -> Self {
        WeylElement {
            ring: ring.clone(),
            poly,
        }
    }

    pub fn zero(ring: &RingSpec) -> Self {
        Self::wrap(
            ring,
            Poly::zero(&operator_ring(ring).expect("operator ring")),
        )
    }

    pub fn one(ring: &RingSpec) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &RingSpec, c: Rational) -> Self {
        Self::wrap(
            ring,
            Poly::constant(&operator_ring(ring).expect("operator ring"), c),
        )
    }

    /// Multiplication by `x_i`.
    pub fn x(ring: &RingSpec, i: usize) -> Self {
        Self::wrap(
            ring,
            Poly::var(&operator_ring(ring).expect("operator ring"), i),
        )
    }

    /// The derivation `∂_i`.
    pub fn d(ring: &RingSpec, i: usize) -> Self {
        Self::wrap(
            ring,
            Poly::var(
                &operator_ring(ring).expect("operator ring"),
                ring.arity() + i,
            ),
        )
    }

    /// Builds `Σ c·x^α ∂^β` from `(α, β, c)` triples.
    pub fn from_terms(
        ring: &RingSpec,
        terms: impl IntoIterator<Item = (Monomial, Monomial, Rational)>,
    ) -> Result<Self> {
        let op = operator_ring(ring)?;
        let n = ring.arity();
        let mut out = Vec::new();
        for (alpha, beta, c) in terms {
            if alpha.arity() != n || beta.arity() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: alpha.arity().max(beta.arity()),
                });
            }
            out.push((
                Monomial::new(alpha.exponents().iter().chain(beta.exponents()).copied()),
                c,
            ));
        }
        Ok(Self::wrap(ring, Poly::from_terms(&op, out)))
    }

    /// A polynomial acting by multiplication.
    pub fn from_poly(p: &Poly) -> Result<Self> {
        let ring = p.ring();
        let op = operator_ring(ring)?;
        let map: Vec<usize> = (0..ring.arity()).collect();
        Ok(Self::wrap(ring, p.remap(&op, &map)))
    }

    /// Reads an operator stored as a commutative polynomial in `x, dx`.
    pub(crate) fn from_operator_poly(ring: &RingSpec, poly: Poly) -> Self {
        debug_assert_eq!(poly.ring().arity(), 2 * ring.arity());
        Self::wrap(ring, poly)
    }

    pub(crate) fn operator_poly(&self) -> &Poly {
        &self.poly
    }

    /// The commutative ring of coefficients.
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// `(α, β, q_{αβ})` for every term, descending in the operator order.
    pub fn terms(&self) -> Vec<(Monomial, Monomial, Rational)> {
        let n = self.ring.arity();
        self.sorted_terms()
            .into_iter()
            .map(|(m, c)| {
                (
                    Monomial::from(&m.exponents()[..n]),
                    Monomial::from(&m.exponents()[n..]),
                    c.clone(),
                )
            })
            .collect()
    }

    fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let order = MonomialOrder::operator_order(self.ring.arity());
        let mut terms: Vec<_> = self.poly.terms().iter().map(|(m, c)| (m, c)).collect();
        terms.sort_by(|a, b| order.compare(b.0, a.0));
        terms
    }

    /// Leading `x^α ξ^β` and its coefficient in the operator order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.poly
            .leading_term(&MonomialOrder::operator_order(self.ring.arity()))
    }

    pub fn len(&self) -> usize {
        self.poly.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poly.is_empty()
    }

    fn check_ring(&self, other: &WeylElement) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check_ring(other)?;
        Ok(Self::wrap(&self.ring, self.poly.try_add(&other.poly)?))
    }

    pub fn try_sub(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check_ring(other)?;
        Ok(Self::wrap(&self.ring, self.poly.try_sub(&other.poly)?))
    }

    /// The product `self · other` in normal form.
    pub fn try_mul(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check_ring(other)?;
        Ok(weyl_multiply_unchecked(self, other))
    }

    pub fn scale(&self, c: &Rational) -> WeylElement {
        Self::wrap(&self.ring, self.poly.scale(c))
    }

    pub fn pow(&self, e: u32) -> WeylElement {
        let mut acc = WeylElement::one(&self.ring);
        for _ in 0..e {
            acc = weyl_multiply_unchecked(&acc, self);
        }
        acc
    }

    /// Maximal `|β|` over the terms.
    pub fn operator_order(&self) -> Result<u32> {
        let n = self.ring.arity();
        self.poly
            .terms()
            .iter()
            .map(|(m, _)| m.exponents()[n..].iter().sum::<u32>())
            .max()
            .ok_or(Error::ZeroOperator)
    }

    /// Sum of the top-order terms with `∂_i` replaced by `ξ_i`; zero for zero.
    pub fn principal_symbol(&self) -> Poly {
        let target = symbol_ring(&self.ring);
        let Ok(ord) = self.operator_order() else {
            return Poly::zero(&target);
        };
        let n = self.ring.arity();
        Poly::from_terms(
            &target,
            self.poly
                .terms()
                .iter()
                .filter(|(m, _)| m.exponents()[n..].iter().sum::<u32>() == ord)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Scales to integer coefficients with content 1 and positive leading
    /// coefficient in the operator order.
    pub fn primitive(&self) -> WeylElement {
        Self::wrap(
            &self.ring,
            self.poly
                .primitive(&MonomialOrder::operator_order(self.ring.arity())),
        )
    }
}

/// `P · Q` in normal form.
pub fn weyl_multiply(p: &WeylElement, q: &WeylElement) -> Result<WeylElement> {
    p.try_mul(q)
}

fn weyl_multiply_unchecked(p: &WeylElement, q: &WeylElement) -> WeylElement {
    let n = p.ring.arity();
    let op = p.poly.ring();
    let mut acc = std::collections::HashMap::<Monomial, Rational>::new();
    for (ma, ca) in p.poly.terms() {
        for (mb, cb) in q.poly.terms() {
            let c = ca * cb;
            for (m, k) in monomial_product(n, ma, mb) {
                let v = &c * Rational::from_integer(k);
                acc.entry(m).and_modify(|e| *e += &v).or_insert(v);
            }
        }
    }
    let terms = acc.into_iter().filter(|(_, c)| !c.is_zero());
    WeylElement::wrap(&p.ring, Poly::from_terms(op, terms))
}

/// Parses operators such as `3*x*dx+2*y*dy+6`; juxtaposition multiplies in
/// the Weyl algebra, so `dx*x` parses to `x*dx+1`.
pub fn parse_weyl(text: &str, ring: &RingSpec) -> Result<WeylElement> {
    operator_ring(ring)?;
    parse_with(text, &WeylTarget(ring))
}

struct WeylTarget<'a>(&'a RingSpec);

impl ParseTarget for WeylTarget<'_> {
    type Elem = WeylElement;

    fn constant(&self, c: Rational) -> WeylElement {
        WeylElement::constant(self.0, c)
    }

    fn generator(&self, name: &str) -> Option<WeylElement> {
        if let Some(i) = self.0.index_of(name) {
            return Some(WeylElement::x(self.0, i));
        }
        let i = self.0.index_of(name.strip_prefix('d')?)?;
        Some(WeylElement::d(self.0, i))
    }

    fn add(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        a + b
    }

    fn sub(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        a - b
    }

    fn mul(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        weyl_multiply_unchecked(a, b)
    }

    fn neg(&self, a: &WeylElement) -> WeylElement {
        -a
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.sorted_terms().into_iter(), self.poly.ring().names())
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares term lists in the operator order, leading terms first.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        let order = MonomialOrder::operator_order(self.ring.arity());
        let (a, b) = (self.sorted_terms(), other.sorted_terms());
        for (x, y) in a.iter().zip(&b) {
            let o = order.compare(x.0, y.0).then_with(|| x.1.cmp(y.1));
            if o != Ordering::Equal {
                return o;
            }
        }
        a.len().cmp(&b.len())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:ident) => {
        impl $trait<&WeylElement> for &WeylElement {
            type Output = WeylElement;

            fn $method(self, rhs: &WeylElement) -> WeylElement {
                self.$op(rhs)
                    .expect("operands live in different Weyl algebras")
            }
        }

        impl $trait for WeylElement {
            type Output = WeylElement;

            fn $method(self, rhs: WeylElement) -> WeylElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &WeylElement {
    type Output = WeylElement;

    fn neg(self) -> WeylElement {
        self.scale(&-Rational::one())
    }
}

impl Neg for WeylElement {
    type Output = WeylElement;

    fn neg(self) -> WeylElement {
        -&self
    }
}
