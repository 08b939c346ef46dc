use crate::poly::Poly;
use crate::weyl::{WeylElement, WeylIdeal};
use crate::{Error, Rational, Result};

use super::truncation::TruncationChain;
use super::{
    check_genericity, curve_multiplicity, fiber_multiplicity, validate_curve, LocalMultiplicity,
};

/// Small-integer directions tried, in order, for the plane `ξ = a, η = b`.
pub const DEFAULT_LADDER: [(i64, i64); 16] = [
    (0, 1),
    (1, 0),
    (1, 1),
    (1, -1),
    (2, 1),
    (1, 2),
    (2, -1),
    (1, -2),
    (3, 1),
    (1, 3),
    (3, -1),
    (1, -3),
    (3, 2),
    (2, 3),
    (3, -2),
    (2, -3),
];

#[derive(Clone, Debug)]
pub struct KappaConfig {
    /// Largest truncation order tried before giving up.
    pub max_d: u32,
    /// Use this point instead of searching the ladder.
    pub point: Option<(Rational, Rational)>,
    pub ladder: Vec<(i64, i64)>,
    /// Consecutive undefined multiplicities tolerated before moving to the
    /// next generic point.
    pub undefined_patience: u32,
}

impl Default for KappaConfig {
    fn default() -> Self {
        KappaConfig {
            max_d: 50,
            point: None,
            ladder: DEFAULT_LADDER.to_vec(),
            undefined_patience: 3,
        }
    }
}

/// One step of the iteration.
#[derive(Clone, Debug)]
pub struct TruncationReport {
    pub d: u32,
    /// Operators of order at most `d` generating `Ann^(d)(f^-1)`.
    pub generators: Vec<WeylElement>,
    /// Generators of the characteristic ideal of the truncation.
    pub char_gens: Vec<Poly>,
    /// Krull dimension of the characteristic ideal.
    pub char_dimension: i64,
    pub m: LocalMultiplicity,
    pub point: (Rational, Rational),
}

#[derive(Clone, Debug)]
pub struct KappaResult {
    pub kappa: u32,
    pub annihilator: WeylIdeal,
    pub curve_multiplicity: u32,
    pub trace: Vec<TruncationReport>,
    pub genericity_point: (Rational, Rational),
    /// The curve has no singular point at all; `kappa` is 1 without running the iteration.
    pub smooth: bool,
}

fn rational_point((a, b): (i64, i64)) -> (Rational, Rational) {
    (
        Rational::from_integer(a.into()),
        Rational::from_integer(b.into()),
    )
}

/// Generic points in ladder order, tested lazily.
struct PointSearch<'a> {
    f: &'a Poly,
    candidates: Vec<(Rational, Rational)>,
    next: usize,
}

impl PointSearch<'_> {
    fn next_generic(&mut self) -> Result<Option<(Rational, Rational)>> {
        while self.next < self.candidates.len() {
            let p = self.candidates[self.next].clone();
            self.next += 1;
            if check_genericity(self.f, &p.0, &p.1)? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }
}

struct Step {
    ann: WeylIdeal,
    report: TruncationReport,
}

fn step(chain: &mut TruncationChain, d: u32, point: &(Rational, Rational)) -> Result<Step> {
    let ann = chain.advance()?;
    let ch = ann.char_ideal();
    let m = fiber_multiplicity(&ch, point)?;
    let report = TruncationReport {
        d,
        generators: ann.generators().to_vec(),
        char_gens: ch.ideal().grevlex_basis(),
        char_dimension: ch.dimension(),
        m,
        point: point.clone(),
    };
    Ok(Step { ann, report })
}

/// Finds the smallest `d` for which `Ann^(d)(f^-1)` is the whole annihilator
/// of `f^-1`, using the multiplicity of the fiber over the origin as the
/// stopping test.
pub fn kappa_and_annihilator(f: &Poly, config: &KappaConfig) -> Result<KappaResult> {
    kappa_with_progress(f, config, |_| {})
}

/// [`kappa_and_annihilator`] calling `progress` after every truncation.
pub fn kappa_with_progress(
    f: &Poly,
    config: &KappaConfig,
    mut progress: impl FnMut(&TruncationReport),
) -> Result<KappaResult> {
    let input = validate_curve(f)?;
    let m = curve_multiplicity(f)?;
    let candidates = match &config.point {
        Some(p) => vec![p.clone()],
        None => config.ladder.iter().copied().map(rational_point).collect(),
    };
    let tried = candidates.len();
    let mut search = PointSearch {
        f,
        candidates,
        next: 0,
    };
    let Some(mut point) = search.next_generic()? else {
        return Err(Error::NoGenericPoint { tried });
    };

    let mut chain = TruncationChain::new(f, -1)?;
    if !input.singular_at_origin {
        let s = step(&mut chain, 1, &point)?;
        progress(&s.report);
        return Ok(KappaResult {
            kappa: 1,
            annihilator: s.ann,
            curve_multiplicity: m,
            trace: vec![s.report],
            genericity_point: point,
            smooth: true,
        });
    }

    let target = LocalMultiplicity::Finite(u64::from(m - 1));
    let mut steps: Vec<Step> = Vec::new();
    let mut undefined_run = 0;
    for d in 1..=config.max_d {
        let s = step(&mut chain, d, &point)?;
        progress(&s.report);
        let m_d = s.report.m;
        steps.push(s);
        if m_d == target {
            return Ok(finish(steps, m, point));
        }
        if m_d != LocalMultiplicity::Undefined {
            undefined_run = 0;
            continue;
        }
        undefined_run += 1;
        if undefined_run < config.undefined_patience {
            continue;
        }
        let Some(next) = search.next_generic()? else {
            continue;
        };
        point = next;
        undefined_run = 0;
        for s in steps.iter_mut() {
            s.report.m = fiber_multiplicity(&s.ann.char_ideal(), &point)?;
            s.report.point = point.clone();
        }
        if let Some(k) = steps.iter().position(|s| s.report.m == target) {
            steps.truncate(k + 1);
            return Ok(finish(steps, m, point));
        }
    }
    Err(Error::CapExceeded {
        cap: config.max_d as usize,
    })
}

fn finish(mut steps: Vec<Step>, m: u32, point: (Rational, Rational)) -> KappaResult {
    let last = steps.pop().expect("at least one step");
    let mut trace: Vec<TruncationReport> = steps.into_iter().map(|s| s.report).collect();
    let kappa = last.report.d;
    trace.push(last.report);
    KappaResult {
        kappa,
        annihilator: last.ann,
        curve_multiplicity: m,
        trace,
        genericity_point: point,
        smooth: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, RingSpec};

    fn p(s: &str) -> Poly {
        parse_poly(s, &RingSpec::new(["x", "y"]).unwrap()).unwrap()
    }

    #[test]
    fn cusp_stops_at_order_one() {
        let r = kappa_and_annihilator(&p("x^2-y^3"), &KappaConfig::default()).unwrap();
        assert_eq!(r.kappa, 1);
        assert_eq!(r.curve_multiplicity, 2);
        assert_eq!(r.trace.len(), 1);
        assert_eq!(r.trace[0].m, LocalMultiplicity::Finite(1));
        assert_eq!(r.genericity_point, rational_point((0, 1)));
        assert_eq!(r.trace[0].char_dimension, 2);
    }

    #[test]
    fn smooth_curves_take_the_fast_path() {
        let r = kappa_and_annihilator(&p("y-x^2"), &KappaConfig::default()).unwrap();
        assert!(r.smooth);
        assert_eq!(r.kappa, 1);
        assert_eq!(r.curve_multiplicity, 1);
    }

    #[test]
    fn explicit_point_must_be_generic() {
        let config = KappaConfig {
            point: Some(rational_point((1, 0))),
            ..KappaConfig::default()
        };
        let err = kappa_and_annihilator(&p("x^2-y^3"), &config).unwrap_err();
        assert_eq!(err, Error::NoGenericPoint { tried: 1 });
    }

    #[test]
    fn cap_is_reported() {
        let config = KappaConfig {
            max_d: 1,
            ..KappaConfig::default()
        };
        let f = crate::annihilator::reiffen(4, 5).unwrap();
        assert_eq!(
            kappa_and_annihilator(&f, &config).unwrap_err(),
            Error::CapExceeded { cap: 1 }
        );
    }
}
