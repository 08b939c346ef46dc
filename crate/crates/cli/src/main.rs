//! `curveloc`: annihilator orders of plane curves from the command line.
//!
//! Results go to standard output, logs and timings of text reports to
//! standard error. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | internal failure |
//! | 2 | usage or parse error |
//! | 3 | degenerate curve (zero, constant or not reduced) |
//! | 4 | curve does not pass through the origin |
//! | 5 | curve is singular away from the origin |
//! | 6 | no stopping order found below `--max-d` |
//! | 7 | no generic plane among the candidate points |

mod commands;
mod experiment;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use curveloc::Error;

#[derive(Parser, Debug)]
#[command(
    name = "curveloc",
    version,
    about = "Annihilators of 1/f for plane curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct CurveArgs {
    /// The curve f in x, y, e.g. "x^2-y^3".
    #[arg(short = 'f', long = "poly")]
    pub poly: String,
}

#[derive(Args, Debug, Clone)]
pub struct KappaArgs {
    /// Use this point (a,b) for the plane ξ=a, η=b instead of the built-in ladder.
    #[arg(long, value_name = "a,b", allow_hyphen_values = true)]
    pub point: Option<String>,
    /// Give up after this truncation order.
    #[arg(long = "max-d", value_name = "N", default_value_t = 50)]
    pub max_d: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Annihilator order κ(f^-1) and generators of Ann(f^-1).
    Kappa {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        kappa: KappaArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Generators of the truncated annihilator Ann^(d)(f^a).
    Ann {
        #[command(flatten)]
        curve: CurveArgs,
        /// Exponent a of f^a.
        #[arg(short = 'a', long = "exponent", default_value_t = -1, allow_hyphen_values = true)]
        exponent: i64,
        /// Truncation order d.
        #[arg(short = 'd', long = "order")]
        order: u32,
        /// Comma-separated ring variables.
        #[arg(long, value_name = "NAMES", default_value = "x,y")]
        vars: String,
        #[command(flatten)]
        common: Common,
    },
    /// Characteristic ideal of Ann^(d)(f^a), with m^(d) at a point when given.
    CharIdeal {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(short = 'a', long = "exponent", default_value_t = -1, allow_hyphen_values = true)]
        exponent: i64,
        #[arg(short = 'd', long = "order")]
        order: u32,
        #[arg(long, value_name = "a,b", allow_hyphen_values = true)]
        point: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Whether the plane ξ=a, η=b is generic for f; without --point, the ladder is scanned.
    Genericity {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, value_name = "a,b", allow_hyphen_values = true)]
        point: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// κ for the Reiffen curve x^p + y^q + x*y^(q-1).
    Reiffen {
        #[arg(short = 'p')]
        p: u32,
        /// Defaults to p+1.
        #[arg(short = 'q')]
        q: Option<u32>,
        #[command(flatten)]
        kappa: KappaArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Table of κ and m^(d) over a range of Reiffen curves.
    Experiment {
        #[arg(long = "p-min", default_value_t = 4)]
        p_min: u32,
        #[arg(long = "p-max", default_value_t = 6)]
        p_max: u32,
        /// Offsets k in q = p + k, comma separated.
        #[arg(long = "q-offsets", value_delimiter = ',', default_value = "1")]
        q_offsets: Vec<u32>,
        /// Worker threads for independent cells.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long = "max-d", default_value_t = 50)]
        max_d: u32,
        #[command(flatten)]
        common: Common,
    },
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Syntax { .. }
            | Error::UnknownVariable { .. }
            | Error::InvalidRing(_)
            | Error::ArityMismatch { .. }
            | Error::InvalidReiffen { .. }
            | Error::ZeroDirection
            | Error::InvalidArgument(_) => 2,
            Error::ZeroPolynomial | Error::ConstantCurve | Error::NotSquarefree => 3,
            Error::MissesOrigin => 4,
            Error::SingularAwayFromOrigin { .. } => 5,
            Error::CapExceeded { .. } => 6,
            Error::NoGenericPoint { .. } => 7,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Kappa {
            curve,
            kappa,
            common,
        } => commands::kappa(&curve.poly, &kappa, &common),
        Command::Ann {
            curve,
            exponent,
            order,
            vars,
            common,
        } => commands::ann(&curve.poly, &vars, exponent, order, &common),
        Command::CharIdeal {
            curve,
            exponent,
            order,
            point,
            common,
        } => commands::char_ideal(&curve.poly, exponent, order, point.as_deref(), &common),
        Command::Genericity {
            curve,
            point,
            common,
        } => commands::genericity(&curve.poly, point.as_deref(), &common),
        Command::Reiffen {
            p,
            q,
            kappa,
            common,
        } => commands::reiffen(p, q, &kappa, &common),
        Command::Experiment {
            p_min,
            p_max,
            q_offsets,
            jobs,
            max_d,
            common,
        } => experiment::run(p_min, p_max, &q_offsets, jobs, max_d, &common),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
