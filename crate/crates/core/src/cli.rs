//! The `lefzeta` command line. Every result is printed as compact JSON on
//! stdout; exit code 0 means success (or the check holds), 1 means a check
//! failed, 2 means bad input.

use std::ffi::OsString;
use std::path::Path;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::algebra::rational::{self, Rational, RationalStr};
use crate::algebra::Matrix;
use crate::duality::{self, PairingTriple, TripleRepr};
use crate::error::Error;
use crate::knot::{self, parse_braid, AlexanderPoly};
use crate::zeta::{self, FunctionalEquationReport, GradedAction, ZetaFunction};

pub const DEFAULT_SERIES_LEN: usize = 16;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "lefzeta", version, about = "Exact Lefschetz zeta functions and Alexander polynomials")]
struct Cli {
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand, Debug)]
enum Group {
    /// Zeta functions of graded actions
    #[command(subcommand)]
    Zeta(ZetaCmd),
    /// Pairings and their adjoints
    #[command(subcommand)]
    Duality(DualityCmd),
    /// Braid closures and Alexander polynomials
    #[command(subcommand)]
    Knot(KnotCmd),
}

#[derive(Subcommand, Debug)]
enum ZetaCmd {
    /// Rational form, factors and Taylor series of the zeta function
    Compute {
        action: String,
        #[arg(long, default_value_t = DEFAULT_SERIES_LEN)]
        series: usize,
    },
    /// Lefschetz number of the k-th iterate
    Lefschetz {
        action: String,
        #[arg(short = 'k', allow_hyphen_values = true)]
        k: i64,
    },
    /// Boundary form of the functional equation
    VerifyFe {
        zeta: String,
        #[arg(long)]
        boundary: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
    },
    /// Closed form of the functional equation, with its sign
    VerifyClosed {
        zeta: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
    },
}

#[derive(Subcommand, Debug)]
enum DualityCmd {
    /// Check the pairing relation and both determinant identities
    Check { triple: String },
    /// Complete (f, P, λ) to a triple
    Adjoint {
        f: String,
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
}

#[derive(Subcommand, Debug)]
enum KnotCmd {
    /// Normalized Alexander polynomial of the braid closure
    Alexander {
        #[arg(allow_hyphen_values = true)]
        braid: String,
    },
    /// Zeta function of the covering translation
    Zeta {
        #[arg(allow_hyphen_values = true)]
        braid: String,
    },
    /// Lefschetz numbers of the iterated covering translation
    Lefschetz {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        #[arg(short = 'N', default_value_t = DEFAULT_SERIES_LEN)]
        n: usize,
    },
    /// Functional equation and reciprocity
    Verify {
        #[arg(allow_hyphen_values = true)]
        braid: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn json<T: Serialize>(code: i32, v: &T) -> Output {
        let mut stdout = serde_json::to_string(v).expect("serializable");
        stdout.push('\n');
        Output { code, stdout, stderr: String::new() }
    }

    fn input_error(msg: impl std::fmt::Display) -> Output {
        Output { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code, stdout: String::new(), stderr: text }
            } else {
                Output { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.group) {
        Ok(out) => out,
        Err(e) => Output::input_error(e),
    }
}

fn load<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T, Error> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))?
    } else if matches!(arg.trim_start().chars().next(), Some('{' | '[')) {
        arg.to_string()
    } else {
        return Err(Error::Parse(format!("{arg}: no such file")));
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{arg}: {e}")))
}

fn check_code(holds: bool) -> i32 {
    if holds {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

#[derive(Serialize)]
struct ComputeOut<'a> {
    #[serde(flatten)]
    zeta: &'a ZetaFunction,
    euler_characteristic: i64,
    series: Vec<RationalStr>,
}

#[derive(Serialize)]
struct LefschetzOut {
    k: i64,
    #[serde(with = "rational::serde_str")]
    lefschetz: Rational,
}

#[derive(Serialize)]
struct LefschetzSeqOut {
    lefschetz: Vec<RationalStr>,
}

#[derive(Serialize)]
struct DualityCheckOut {
    pairing: bool,
    det_product: bool,
    char_identity: bool,
    holds: bool,
}

#[derive(Serialize)]
struct KnotVerifyOut<'a> {
    #[serde(flatten)]
    report: &'a FunctionalEquationReport,
    reciprocal: bool,
    alexander: &'a AlexanderPoly,
}

fn strs(v: Vec<Rational>) -> Vec<RationalStr> {
    v.into_iter().map(RationalStr).collect()
}

fn dispatch(group: Group) -> Result<Output, Error> {
    Ok(match group {
        Group::Zeta(cmd) => match cmd {
            ZetaCmd::Compute { action, series } => {
                let a: GradedAction = load(&action)?;
                let z = a.zeta();
                let out = ComputeOut {
                    zeta: &z,
                    euler_characteristic: a.euler_characteristic(),
                    series: strs(z.series(series)?),
                };
                Output::json(EXIT_OK, &out)
            }
            ZetaCmd::Lefschetz { action, k } => {
                let a: GradedAction = load(&action)?;
                Output::json(EXIT_OK, &LefschetzOut { k, lefschetz: a.lefschetz_number(k)? })
            }
            ZetaCmd::VerifyFe { zeta, boundary, lambda, chi } => {
                let zf: ZetaFunction = load(&zeta)?;
                let zb: ZetaFunction = load(&boundary)?;
                let r = zeta::verify_functional_equation(&zf, &zb, &rational::parse(&lambda)?, chi)?;
                Output::json(check_code(r.holds), &r)
            }
            ZetaCmd::VerifyClosed { zeta, lambda, chi } => {
                let zf: ZetaFunction = load(&zeta)?;
                let r = zeta::verify_closed_functional_equation(&zf, &rational::parse(&lambda)?, chi)?;
                Output::json(check_code(r.holds), &r)
            }
        },
        Group::Duality(cmd) => match cmd {
            DualityCmd::Check { triple } => {
                let t = load::<TripleRepr>(&triple)?.into_unchecked()?;
                let pairing = t.respects_pairing();
                let det_product = duality::check_det_product(&t);
                let char_identity = duality::check_char_identity(&t);
                let holds = pairing && det_product && char_identity;
                Output::json(check_code(holds), &DualityCheckOut { pairing, det_product, char_identity, holds })
            }
            DualityCmd::Adjoint { f, p, lambda } => {
                let f: Matrix = load(&f)?;
                let p: Matrix = load(&p)?;
                let t = PairingTriple::complete(f, p, rational::parse(&lambda)?)?;
                Output::json(EXIT_OK, &t)
            }
        },
        Group::Knot(cmd) => match cmd {
            KnotCmd::Alexander { braid } => {
                let d = knot::alexander_from_braid(&parse_braid(&braid)?)?;
                Output::json(EXIT_OK, &d)
            }
            KnotCmd::Zeta { braid } => {
                let d = knot::alexander_from_braid(&parse_braid(&braid)?)?;
                Output::json(EXIT_OK, &knot::zeta_from_alexander(&d))
            }
            KnotCmd::Lefschetz { braid, n } => {
                let d = knot::alexander_from_braid(&parse_braid(&braid)?)?;
                Output::json(EXIT_OK, &LefschetzSeqOut { lefschetz: strs(knot::knot_lefschetz_numbers(&d, n)) })
            }
            KnotCmd::Verify { braid } => {
                let d = knot::alexander_from_braid(&parse_braid(&braid)?)?;
                let report = knot::verify_knot_functional_equation(&d);
                let reciprocal = knot::is_reciprocal(&d);
                let out = KnotVerifyOut { report: &report, reciprocal, alexander: &d };
                Output::json(check_code(report.holds && reciprocal), &out)
            }
        },
    })
}
