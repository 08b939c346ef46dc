use std::collections::BTreeMap;

use curveloc::annihilator::{KappaResult, LocalMultiplicity};
use curveloc::Rational;
use serde::Serialize;
use serde_json::Value;

pub fn multiplicity_value(m: LocalMultiplicity) -> Value {
    match m {
        LocalMultiplicity::Finite(k) => Value::from(k),
        other => Value::from(other.to_string()),
    }
}

pub fn point_strings(p: &(Rational, Rational)) -> [String; 2] {
    [p.0.to_string(), p.1.to_string()]
}

#[derive(Serialize)]
pub struct TraceEntry {
    pub d: u32,
    pub m: Value,
    pub generators: Vec<String>,
}

#[derive(Serialize)]
pub struct KappaReport {
    pub f: String,
    pub a: i64,
    pub kappa: u32,
    pub curve_multiplicity: u32,
    pub genericity_point: [String; 2],
    pub smooth: bool,
    pub trace: Vec<TraceEntry>,
    pub annihilator: Vec<String>,
    pub timings_ms: BTreeMap<String, f64>,
}

impl KappaReport {
    pub fn new(f: String, r: &KappaResult, timings_ms: BTreeMap<String, f64>) -> Self {
        KappaReport {
            f,
            a: -1,
            kappa: r.kappa,
            curve_multiplicity: r.curve_multiplicity,
            genericity_point: point_strings(&r.genericity_point),
            smooth: r.smooth,
            trace: r
                .trace
                .iter()
                .map(|t| TraceEntry {
                    d: t.d,
                    m: multiplicity_value(t.m),
                    generators: t.generators.iter().map(ToString::to_string).collect(),
                })
                .collect(),
            annihilator: r
                .annihilator
                .groebner_basis()
                .iter()
                .map(ToString::to_string)
                .collect(),
            timings_ms,
        }
    }

    /// The deterministic text form; timings are not included.
    pub fn text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("f = {}\n", self.f));
        out.push_str(&format!("kappa = {}\n", self.kappa));
        out.push_str(&format!(
            "curve multiplicity = {}\n",
            self.curve_multiplicity
        ));
        out.push_str(&format!(
            "genericity point = ({}, {})\n",
            self.genericity_point[0], self.genericity_point[1]
        ));
        if self.smooth {
            out.push_str("smooth curve: no singular points, kappa = 1 without iteration\n");
        }
        out.push_str("trace:\n");
        for t in &self.trace {
            let m = match &t.m {
                Value::String(s) => s.clone(),
                v => v.to_string(),
            };
            out.push_str(&format!(
                "  d = {}  m = {}  generators = {}\n",
                t.d,
                m,
                t.generators.len()
            ));
        }
        out.push_str("annihilator:\n");
        for g in &self.annihilator {
            out.push_str(&format!("  {g}\n"));
        }
        out
    }
}

pub fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serialisable report")
    );
}

pub fn millis(d: std::time::Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}
