#![allow(dead_code)]

pub mod oracle;

use curveloc::annihilator::{
    kappa_and_annihilator, truncated_annihilator, KappaConfig, LocalMultiplicity,
};
use curveloc::groebner::{module_contains, syzygies};
use curveloc::poly::{parse_poly, Monomial, Poly, RingSpec};
use curveloc::weyl::{apply_to_twisted_power, TwistedPower, WeylElement};
use curveloc::Rational;
use proptest::prelude::*;
use rand::Rng;

pub fn xy() -> RingSpec {
    RingSpec::new(["x", "y"]).unwrap()
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn poly(s: &str) -> Poly {
    parse_poly(s, &xy()).unwrap()
}

/// Curves singular only at the origin, cheap enough to run to termination.
pub fn curve_suite() -> Vec<Poly> {
    [
        "x^2-y^3",
        "x^2-y^2",
        "x^2-y^4",
        "x^3-y^4",
        "x*y*(x-y)",
        "x^4+y^5+x*y^4",
        "x^4+y^6+x*y^5",
    ]
    .into_iter()
    .map(poly)
    .collect()
}

pub fn random_poly(rng: &mut impl Rng, ring: &RingSpec, max_deg: u32, max_terms: usize) -> Poly {
    let n = ring.arity();
    let terms = (0..rng.gen_range(1..=max_terms)).map(|_| {
        let mut budget = rng.gen_range(0..=max_deg);
        let exps: Vec<u32> = (0..n)
            .map(|_| {
                let e = rng.gen_range(0..=budget);
                budget -= e;
                e
            })
            .collect();
        (Monomial::new(exps), q(rng.gen_range(-5..=5)))
    });
    Poly::from_terms(ring, terms.collect::<Vec<_>>())
}

pub fn random_nonzero_poly(
    rng: &mut impl Rng,
    ring: &RingSpec,
    max_deg: u32,
    max_terms: usize,
) -> Poly {
    loop {
        let p = random_poly(rng, ring, max_deg, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_weyl(
    rng: &mut impl Rng,
    ring: &RingSpec,
    max_x: u32,
    max_d: u32,
    max_terms: usize,
) -> WeylElement {
    let n = ring.arity();
    let terms: Vec<_> = (0..rng.gen_range(1..=max_terms))
        .map(|_| {
            let xs: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_x)).collect();
            let ds: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_d)).collect();
            (
                Monomial::new(xs),
                Monomial::new(ds),
                q(rng.gen_range(-4..=4)),
            )
        })
        .collect();
    WeylElement::from_terms(ring, terms).unwrap()
}

/// Proptest strategy wrapping a seeded generator.
pub fn seeded<T: std::fmt::Debug>(
    make: impl Fn(&mut rand_chacha::ChaCha8Rng) -> T + Clone,
) -> impl Strategy<Value = T> {
    use rand::SeedableRng;
    any::<u64>().prop_map(move |seed| make(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed)))
}

/// `g·f^k` and `h·f^l` denote the same function.
pub fn same_function(a: &TwistedPower, b: &TwistedPower) -> bool {
    let low = a.exponent().min(b.exponent());
    let lift = |t: &TwistedPower| t.numerator() * &t.f().pow((t.exponent() - low) as u32);
    lift(a) == lift(b)
}

/// Syzygy identity, plus completeness against the dense kernel in degrees `≤ bound`.
pub fn check_syzygies(v: &[Poly], bound: u32) -> Result<(), String> {
    let syz = syzygies(v).map_err(|e| e.to_string())?;
    for s in &syz {
        if !s.dot(v).map_err(|e| e.to_string())?.is_zero() {
            return Err(format!("{s:?} is not a syzygy of {v:?}"));
        }
    }
    for k in oracle::syzygy_kernel(v, bound) {
        if !module_contains(&syz, &k) {
            return Err(format!(
                "kernel vector {k:?} of {v:?} is missing from the syzygy module"
            ));
        }
    }
    Ok(())
}

pub fn check_weyl_triple(a: &WeylElement, b: &WeylElement, c: &WeylElement) -> Result<(), String> {
    if &(a * b) * c != a * &(b * c) {
        return Err(format!("associativity fails for {a}, {b}, {c}"));
    }
    if !a.is_zero() && !b.is_zero() {
        let ab = a * b;
        if ab.principal_symbol() != &a.principal_symbol() * &b.principal_symbol() {
            return Err(format!("symbol of {a} * {b} is not the product of symbols"));
        }
        if ab.operator_order().unwrap() != a.operator_order().unwrap() + b.operator_order().unwrap()
        {
            return Err(format!("order of {a} * {b} is not additive"));
        }
    }
    Ok(())
}

/// Chain inclusions, annihilation, monotone multiplicities and Bernstein bounds along a full run.
pub fn check_curve_chain(f: &Poly) -> Result<u32, String> {
    let result = kappa_and_annihilator(f, &KappaConfig::default()).map_err(|e| e.to_string())?;
    let m = result.curve_multiplicity as u64;
    let inverse = TwistedPower::power(f, -1).unwrap();
    let mut previous: Option<curveloc::weyl::WeylIdeal> = None;
    for d in 1..=result.kappa + 1 {
        let ann = truncated_annihilator(f, -1, d).map_err(|e| e.to_string())?;
        for g in ann.generators() {
            if g.operator_order().unwrap() > d {
                return Err(format!("{f}: generator {g} exceeds order {d}"));
            }
            if !apply_to_twisted_power(g, &inverse).unwrap().is_zero() {
                return Err(format!("{f}: {g} does not annihilate 1/f"));
            }
        }
        if let Some(prev) = &previous {
            if !prev.is_subset_of(&ann) {
                return Err(format!(
                    "{f}: Ann^({}) is not contained in Ann^({d})",
                    d - 1
                ));
            }
        }
        let dim = ann.char_ideal().dimension();
        if !ann.is_unit() && !(2..=4).contains(&dim) {
            return Err(format!("{f}: dim Char Ann^({d}) = {dim}"));
        }
        previous = Some(ann);
    }
    let finite: Vec<u64> = result
        .trace
        .iter()
        .filter_map(|t| match t.m {
            LocalMultiplicity::Finite(v) => Some(v),
            _ => None,
        })
        .collect();
    if finite.windows(2).any(|w| w[1] > w[0]) || finite.iter().any(|&v| v + 1 < m) {
        return Err(format!("{f}: multiplicities {finite:?} with m = {m}"));
    }
    if !result.smooth {
        let last = result.trace.last().map(|t| t.m);
        if last != Some(LocalMultiplicity::Finite(m - 1))
            || result.trace.len() != result.kappa as usize
        {
            return Err(format!("{f}: trace does not end at m - 1"));
        }
    }
    let dim = result.annihilator.char_ideal().dimension();
    if dim != 2 {
        return Err(format!("{f}: dim Char Ann = {dim} at termination"));
    }
    if !result.annihilator.equals(previous.as_ref().unwrap()) {
        return Err(format!("{f}: Ann^(κ+1) differs from Ann^(κ)"));
    }
    Ok(result.kappa)
}
