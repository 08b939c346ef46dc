use std::collections::BTreeMap;
use std::time::Instant;

use curveloc::annihilator::{
    check_genericity, fiber_multiplicity, kappa_with_progress, reiffen as reiffen_curve,
    truncated_annihilator, KappaConfig, DEFAULT_LADDER,
};
use curveloc::poly::{parse_poly, Poly, RingSpec};
use curveloc::Rational;
use serde::Serialize;
use serde_json::Value;

use crate::report::{millis, multiplicity_value, point_strings, print_json, KappaReport};
use crate::{Common, Failure, KappaArgs};

pub fn parse_curve(text: &str) -> Result<Poly, Failure> {
    let ring = RingSpec::new(["x", "y"])?;
    Ok(parse_poly(text, &ring)?)
}

pub fn parse_point(text: &str) -> Result<(Rational, Rational), Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [a, b] = parts.as_slice() else {
        return Err(Failure::usage(format!("point must be `a,b`, got `{text}`")));
    };
    let parse = |s: &str| {
        s.parse::<Rational>()
            .map_err(|_| Failure::usage(format!("not a rational number: `{s}`")))
    };
    Ok((parse(a)?, parse(b)?))
}

pub fn kappa_config(args: &KappaArgs) -> Result<KappaConfig, Failure> {
    let point = args.point.as_deref().map(parse_point).transpose()?;
    Ok(KappaConfig {
        max_d: args.max_d,
        point,
        ..KappaConfig::default()
    })
}

/// Runs the κ iteration, logging each order to standard error.
pub fn kappa_report(f: &Poly, config: &KappaConfig, log: bool) -> Result<KappaReport, Failure> {
    let start = Instant::now();
    let mut last = start;
    let mut timings = BTreeMap::new();
    let result = kappa_with_progress(f, config, |r| {
        let now = Instant::now();
        let ms = millis(now - last);
        last = now;
        timings.insert(format!("d{}", r.d), ms);
        if log {
            eprintln!("d = {}  m = {}  ({ms} ms)", r.d, r.m);
        }
    })?;
    timings.insert("total".to_string(), millis(start.elapsed()));
    Ok(KappaReport::new(f.to_string(), &result, timings))
}

fn emit_kappa(f: &Poly, args: &KappaArgs, common: &Common) -> Result<(), Failure> {
    let config = kappa_config(args)?;
    let report = kappa_report(f, &config, !common.json)?;
    if common.json {
        print_json(&report);
    } else {
        print!("{}", report.text());
        eprintln!("total {} ms", report.timings_ms["total"]);
    }
    Ok(())
}

pub fn kappa(poly: &str, args: &KappaArgs, common: &Common) -> Result<(), Failure> {
    emit_kappa(&parse_curve(poly)?, args, common)
}

pub fn reiffen(p: u32, q: Option<u32>, args: &KappaArgs, common: &Common) -> Result<(), Failure> {
    let f = reiffen_curve(p, q.unwrap_or(p + 1))?;
    emit_kappa(&f, args, common)
}

#[derive(Serialize)]
struct AnnReport {
    f: String,
    a: i64,
    d: u32,
    generators: Vec<String>,
}

pub fn ann(poly: &str, vars: &str, a: i64, d: u32, common: &Common) -> Result<(), Failure> {
    let ring = RingSpec::new(vars.split(',').map(str::trim))?;
    let f = parse_poly(poly, &ring)?;
    let ideal = truncated_annihilator(&f, a, d)?;
    let report = AnnReport {
        f: f.to_string(),
        a,
        d,
        generators: ideal
            .groebner_basis()
            .iter()
            .map(ToString::to_string)
            .collect(),
    };
    if common.json {
        print_json(&report);
    } else {
        for g in &report.generators {
            println!("{g}");
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CharReport {
    f: String,
    a: i64,
    d: u32,
    generators: Vec<String>,
    dimension: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<Value>,
}

pub fn char_ideal(
    poly: &str,
    a: i64,
    d: u32,
    point: Option<&str>,
    common: &Common,
) -> Result<(), Failure> {
    let f = parse_curve(poly)?;
    let point = point.map(parse_point).transpose()?;
    let ch = truncated_annihilator(&f, a, d)?.char_ideal();
    let m = point
        .as_ref()
        .map(|p| fiber_multiplicity(&ch, p))
        .transpose()?;
    let report = CharReport {
        f: f.to_string(),
        a,
        d,
        generators: ch.generators().iter().map(ToString::to_string).collect(),
        dimension: ch.dimension(),
        point: point.as_ref().map(point_strings),
        m: m.map(multiplicity_value),
    };
    if common.json {
        print_json(&report);
    } else {
        for g in &report.generators {
            println!("{g}");
        }
        println!("dimension = {}", report.dimension);
        if let (Some(p), Some(m)) = (&report.point, m) {
            println!("m at ({}, {}) = {m}", p[0], p[1]);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct GenericityEntry {
    point: [String; 2],
    generic: bool,
}

pub fn genericity(poly: &str, point: Option<&str>, common: &Common) -> Result<(), Failure> {
    let f = parse_curve(poly)?;
    let candidates: Vec<(Rational, Rational)> = match point {
        Some(p) => vec![parse_point(p)?],
        None => DEFAULT_LADDER
            .iter()
            .map(|&(a, b)| {
                (
                    Rational::from_integer(a.into()),
                    Rational::from_integer(b.into()),
                )
            })
            .collect(),
    };
    let mut entries = Vec::new();
    for p in &candidates {
        let generic = check_genericity(&f, &p.0, &p.1)?;
        entries.push(GenericityEntry {
            point: point_strings(p),
            generic,
        });
        if generic && point.is_none() {
            break;
        }
    }
    if common.json {
        print_json(&entries);
    } else {
        for e in &entries {
            let verdict = if e.generic { "generic" } else { "not generic" };
            println!("({}, {}) {verdict}", e.point[0], e.point[1]);
        }
    }
    Ok(())
}
