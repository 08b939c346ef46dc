use curveloc::annihilator::{reiffen, KappaConfig};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::commands::kappa_report;
use crate::report::print_json;
use crate::{Common, Failure};

#[derive(Serialize)]
struct Row {
    p: u32,
    q: u32,
    kappa: Option<u32>,
    m: Vec<Value>,
    timings_ms: Vec<f64>,
    error: Option<String>,
}

#[derive(Serialize)]
struct Table {
    rows: Vec<Row>,
}

fn cell(p: u32, q: u32, max_d: u32) -> Row {
    let config = KappaConfig {
        max_d,
        ..KappaConfig::default()
    };
    let outcome = reiffen(p, q)
        .map_err(Failure::from)
        .and_then(|f| kappa_report(&f, &config, false));
    match outcome {
        Ok(r) => Row {
            p,
            q,
            kappa: Some(r.kappa),
            m: r.trace.iter().map(|t| t.m.clone()).collect(),
            timings_ms: r
                .trace
                .iter()
                .map(|t| r.timings_ms[&format!("d{}", t.d)])
                .collect(),
            error: None,
        },
        Err(e) => Row {
            p,
            q,
            kappa: None,
            m: Vec::new(),
            timings_ms: Vec::new(),
            error: Some(e.message),
        },
    }
}

fn m_text(m: &[Value]) -> String {
    m.iter()
        .map(|v| match v {
            Value::String(s) => s.clone(),
            v => v.to_string(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run(
    p_min: u32,
    p_max: u32,
    q_offsets: &[u32],
    jobs: usize,
    max_d: u32,
    common: &Common,
) -> Result<(), Failure> {
    if p_min < 4 {
        return Err(Failure::usage(format!(
            "Reiffen curves need p >= 4, got p={p_min}"
        )));
    }
    if p_max < p_min {
        return Err(Failure::usage("--p-max is smaller than --p-min"));
    }
    if q_offsets.contains(&0) {
        return Err(Failure::usage("q offsets must be at least 1"));
    }
    let cells: Vec<(u32, u32)> = (p_min..=p_max)
        .flat_map(|p| q_offsets.iter().map(move |k| (p, p + k)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Failure {
            code: 1,
            message: e.to_string(),
        })?;
    let rows: Vec<Row> =
        pool.install(|| cells.par_iter().map(|&(p, q)| cell(p, q, max_d)).collect());
    if common.json {
        print_json(&Table { rows });
        return Ok(());
    }
    println!("{:<4}{:<4}{:<7}m^(d)", "p", "q", "kappa");
    for r in &rows {
        match (&r.kappa, &r.error) {
            (Some(k), _) => println!("{:<4}{:<4}{:<7}{}", r.p, r.q, k, m_text(&r.m)),
            (None, Some(e)) => println!("{:<4}{:<4}{:<7}error: {e}", r.p, r.q, "-"),
            (None, None) => unreachable!("a row has either a result or an error"),
        }
        let times: Vec<String> = r.timings_ms.iter().map(|t| format!("{t}")).collect();
        eprintln!("p={} q={} timings (ms): {}", r.p, r.q, times.join(" "));
    }
    Ok(())
}
