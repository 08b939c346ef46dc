use std::collections::HashMap;

use crate::groebner::syzygies;
use crate::poly::{Monomial, Poly, RingSpec};
use crate::weyl::{
    apply_to_twisted_power, weyl_groebner, weyl_normal_form, TwistedPower, WeylElement, WeylIdeal,
    WeylOrder,
};
use crate::{Error, Result};

/// Multi-indices of `n` variables with `|α| ≤ d`, by degree and then
/// lexicographically descending: `(0,0), (1,0), (0,1), (2,0), …`.
pub fn multi_indices(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for k in 0..=d {
        let mut current = vec![0u32; n];
        fill(&mut current, 0, k, &mut out);
    }
    out
}

fn fill(current: &mut Vec<u32>, var: usize, left: u32, out: &mut Vec<Monomial>) {
    if var + 1 == current.len() {
        current[var] = left;
        out.push(Monomial::new(current.iter().copied()));
        return;
    }
    for e in (0..=left).rev() {
        current[var] = e;
        fill(current, var + 1, left - e, out);
    }
    current[var] = 0;
}

/// For every `|α| ≤ d`, the numerator `N_α` with `∂^α·f^a = N_α·f^(a−d)`.
pub fn derivative_numerators(f: &Poly, a: i64, d: u32) -> Result<Vec<(Monomial, Poly)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.ring().arity();
    let base = TwistedPower::power(f, a)?;
    let mut cache: HashMap<Monomial, TwistedPower> = HashMap::new();
    let mut out = Vec::new();
    for alpha in multi_indices(n, d) {
        let t = if alpha.is_one() {
            base.clone()
        } else {
            let i = alpha.exponents().iter().position(|&e| e > 0).unwrap();
            let mut prev = alpha.clone();
            prev.exponents_mut()[i] -= 1;
            let p = if prev.is_one() { &base } else { &cache[&prev] };
            p.differentiate(i)?
        };
        let lifted = t.lower_exponent(d - alpha.degree());
        out.push((alpha.clone(), lifted.numerator().clone()));
        cache.insert(alpha, t);
    }
    Ok(out)
}

/// Operators `Σ_α c_α(x) ∂^α` read off syzygies `(c_α)` of the numerators.
pub fn syzygy_operators(
    ring: &RingSpec,
    numerators: &[(Monomial, Poly)],
) -> Result<Vec<WeylElement>> {
    let values: Vec<Poly> = numerators.iter().map(|(_, p)| p.clone()).collect();
    let mut out = Vec::new();
    for s in syzygies(&values)? {
        let terms = numerators
            .iter()
            .zip(s.components())
            .flat_map(|((alpha, _), c)| {
                c.terms()
                    .iter()
                    .map(move |(m, q)| (m.clone(), alpha.clone(), q.clone()))
            });
        out.push(WeylElement::from_terms(ring, terms)?.primitive());
    }
    Ok(out)
}

/// The truncations `Ann^(1)(f^a) ⊆ Ann^(2)(f^a) ⊆ …`, one order at a time.
///
/// Each step reduces the new operators modulo the previous Gröbner basis and
/// only completes the nonzero remainders, which is far cheaper than starting
/// from the syzygy generators.
pub(crate) struct TruncationChain {
    f: Poly,
    a: i64,
    target: TwistedPower,
    d: u32,
    gb: Vec<WeylElement>,
}

impl TruncationChain {
    pub fn new(f: &Poly, a: i64) -> Result<Self> {
        if f.is_constant() {
            return Err(Error::ConstantCurve);
        }
        let target = TwistedPower::power(f, a)?;
        Ok(TruncationChain {
            f: f.clone(),
            a,
            target,
            d: 0,
            gb: Vec::new(),
        })
    }

    /// `Ann^(d+1)(f^a)` for the current order `d`.
    pub fn advance(&mut self) -> Result<WeylIdeal> {
        self.d += 1;
        let ring = self.f.ring();
        let numerators = derivative_numerators(&self.f, self.a, self.d)?;
        let ops = syzygy_operators(ring, &numerators)?;
        for op in &ops {
            let image = apply_to_twisted_power(op, &self.target)?;
            assert!(
                image.is_zero(),
                "syzygy operator {op} does not annihilate f^{}",
                self.a
            );
        }
        let fresh: Vec<WeylElement> = ops
            .iter()
            .map(|op| weyl_normal_form(op, &self.gb))
            .filter(|r| !r.is_zero())
            .map(|r| r.primitive())
            .collect();
        let mut generators = self.gb.clone();
        if !fresh.is_empty() {
            generators.extend(fresh);
            self.gb = weyl_groebner(&generators, &WeylOrder);
        }
        Ok(WeylIdeal::with_groebner_basis(
            ring,
            generators,
            self.gb.clone(),
        ))
    }
}

/// The left ideal generated by all operators of order at most `d` that
/// annihilate `f^a`.
///
/// The operators come from syzygies of the numerators in
/// [`derivative_numerators`] and are checked to annihilate `f^a`. The
/// returned generators are a Gröbner basis of `Ann^(d−1)(f^a)` together with
/// the order-`d` operators not already in it.
pub fn truncated_annihilator(f: &Poly, a: i64, d: u32) -> Result<WeylIdeal> {
    let mut chain = TruncationChain::new(f, a)?;
    let mut ideal = None;
    for _ in 0..d {
        ideal = Some(chain.advance()?);
    }
    match ideal {
        Some(i) => Ok(i),
        None => WeylIdeal::new(f.ring(), []),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::weyl::parse_weyl;

    fn ring() -> RingSpec {
        RingSpec::new(["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(s, &ring()).unwrap()
    }

    #[test]
    fn index_order() {
        let idx: Vec<Vec<u32>> = multi_indices(2, 2)
            .iter()
            .map(|m| m.exponents().to_vec())
            .collect();
        assert_eq!(
            idx,
            vec![
                vec![0, 0],
                vec![1, 0],
                vec![0, 1],
                vec![2, 0],
                vec![1, 1],
                vec![0, 2]
            ]
        );
        assert_eq!(multi_indices(1, 3).len(), 4);
    }

    #[test]
    fn cusp_numerators() {
        let n = derivative_numerators(&p("x^2-y^3"), -1, 1).unwrap();
        let polys: Vec<Poly> = n.into_iter().map(|(_, q)| q).collect();
        assert_eq!(polys, vec![p("x^2-y^3"), p("-2x"), p("3y^2")]);
    }

    #[test]
    fn line_numerators() {
        let r = RingSpec::new(["x"]).unwrap();
        let x = parse_poly("x", &r).unwrap();
        let n = derivative_numerators(&x, 3, 1).unwrap();
        assert_eq!(n[0].1, parse_poly("x", &r).unwrap());
        assert_eq!(n[1].1, parse_poly("3", &r).unwrap());
        let n = derivative_numerators(&x, -1, 0).unwrap();
        assert_eq!(n, vec![(Monomial::one(1), parse_poly("1", &r).unwrap())]);
    }

    #[test]
    fn cusp_first_truncation() {
        let ann = truncated_annihilator(&p("x^2-y^3"), -1, 1).unwrap();
        let expected = WeylIdeal::new(
            &ring(),
            ["3*x*dx+2*y*dy+6", "3*y^2*dx+2*x*dy", "y^3*dy-x^2*dy+3*y^2"]
                .map(|s| parse_weyl(s, &ring()).unwrap()),
        )
        .unwrap();
        assert!(ann.equals(&expected));
    }

    #[test]
    fn line_truncations() {
        let r = RingSpec::new(["x"]).unwrap();
        let x = parse_poly("x", &r).unwrap();
        let w = |s: &str| parse_weyl(s, &r).unwrap();
        let low = WeylIdeal::new(&r, [w("x*dx-3")]).unwrap();
        for d in 1..=3 {
            assert!(
                truncated_annihilator(&x, 3, d).unwrap().equals(&low),
                "d = {d}"
            );
        }
        let high = WeylIdeal::new(&r, [w("x*dx-3"), w("dx^4")]).unwrap();
        assert!(truncated_annihilator(&x, 3, 4).unwrap().equals(&high));
    }
}
