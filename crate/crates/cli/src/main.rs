//! `symage` command-line frontend.
//!
//! Exit codes: 0 success, 1 selftest discrepancy, 2 usage error, 3 domain
//! error. Failures print a single `error[<kind>]: <reason>` line on stderr.

mod report;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use symage::plurigenera::{self, KodairaDim, Regime};
use symage::quotient::{self, MonomialRep};
use symage::{sympower, Error, DEFAULT_CLOSURE_CAP};

use crate::report::{Format, Report};

const CLOSURE_CAP_VAR: &str = "QC_CLOSURE_CAP";

#[derive(Parser)]
#[command(
    name = "symage",
    version,
    about = "Age criterion for quotient singularities and symmetric powers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the singularities of S^d X for dim X = n.
    Sympower {
        #[arg(long = "dim", value_name = "N")]
        dim: u64,
        #[arg(long = "points", value_name = "D")]
        points: usize,
        /// Include the per-class age table.
        #[arg(long)]
        table: bool,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Classify C^N / G for a monomial group read from a JSON file.
    Analyze {
        #[arg(long, value_name = "FILE")]
        rep: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Plurigenera of a desingularized symmetric power.
    Plurigenera {
        #[arg(long = "dim", value_name = "N")]
        dim: u64,
        #[arg(long = "points", value_name = "D")]
        points: u64,
        /// Comma-separated `m=P_m(X)` pairs.
        #[arg(long, value_name = "M1=P1,M2=P2,...", value_parser = parse_pm)]
        pm: PmList,
        /// Kodaira dimension of X: an integer or `-inf`.
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Minimal genus of a curve through d general points.
    GenusBound {
        #[arg(long, value_enum)]
        regime: RegimeArg,
        #[arg(long = "points", value_name = "D")]
        points: u64,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Cross-check closed forms against the numeric oracle and Burnside counts.
    Selftest {
        #[arg(long, default_value_t = 6)]
        max_dim: u64,
        #[arg(long, default_value_t = 9)]
        max_points: usize,
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RegimeArg {
    Nonneg,
    General,
}

#[derive(Clone, Debug)]
struct PmList(Vec<(u64, u64)>);

fn parse_pm(s: &str) -> Result<PmList, String> {
    s.split(',')
        .filter(|item| !item.trim().is_empty())
        .map(|item| {
            let (m, p) = item
                .split_once('=')
                .ok_or_else(|| format!("expected M=P, found {item:?}"))?;
            let m = m.trim().parse().map_err(|_| format!("bad m in {item:?}"))?;
            let p = p
                .trim()
                .parse()
                .map_err(|_| format!("bad P_m in {item:?}"))?;
            Ok((m, p))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(PmList)
}

enum Failure {
    Usage(String),
    Domain(Error),
    Discrepancy(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::Parse(_) => Failure::Usage(e.to_string()),
            other => Failure::Domain(other),
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidInput(_) => "invalid-input",
        Error::UnsupportedDimension { .. } | Error::QuasiReflections { .. } => "quasi-reflection",
        Error::GroupTooLarge { .. } => "closure-cap",
        Error::MatrixTooLarge { .. } => "matrix-cap",
        Error::InsufficientData { .. } => "insufficient-data",
        Error::Arithmetic(_) => "arithmetic",
        Error::Parse(_) => "parse",
    }
}

fn closure_cap() -> Result<usize, Failure> {
    match std::env::var(CLOSURE_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!("{CLOSURE_CAP_VAR}={v:?} is not a positive integer"))
        }),
        Err(_) => Ok(DEFAULT_CLOSURE_CAP),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Sympower {
            dim,
            points,
            table,
            format,
        } => {
            let verdict = sympower::verdict(dim, points)?;
            let rows = if table {
                Some(sympower::class_table(dim, points)?)
            } else {
                None
            };
            Ok(Report::Sympower {
                n: dim,
                d: points,
                verdict,
                table: rows,
            }
            .render(format))
        }
        Command::Analyze { rep, format } => {
            let text = std::fs::read_to_string(&rep)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", rep.display())))?;
            let parsed = MonomialRep::from_json(&text)?;
            let group = parsed.close(closure_cap()?)?;
            let verdict = quotient::analyze(&group)?;
            Ok(Report::Analyze {
                rep: parsed,
                verdict,
            }
            .render(format))
        }
        Command::Plurigenera {
            dim,
            points,
            pm,
            kappa,
            format,
        } => {
            let table = plurigenera::plurigenus_table(dim, points, &pm.0)?;
            let kappa = match kappa {
                None => None,
                Some(k) => {
                    let k: KodairaDim = k.parse()?;
                    let value = match k {
                        KodairaDim::NegInfinity => None,
                        KodairaDim::Finite(v) => Some(v),
                    };
                    let k = KodairaDim::checked(value, Some(dim))?;
                    Some((k, plurigenera::kodaira_scale(k, points)))
                }
            };
            Ok(Report::Plurigenera { table, kappa }.render(format))
        }
        Command::GenusBound {
            regime,
            points,
            format,
        } => {
            if points == 0 {
                return Err(Failure::Usage("--points must be at least 1".into()));
            }
            let regime = match regime {
                RegimeArg::Nonneg => Regime::NonnegativeKodaira,
                RegimeArg::General => Regime::GeneralType,
            };
            let genus = plurigenera::genus_bound(regime, points);
            Ok(Report::GenusBound {
                regime,
                d: points,
                genus,
            }
            .render(format))
        }
        Command::Selftest {
            max_dim,
            max_points,
            tolerance,
            format,
        } => {
            if max_dim < 2 || max_points < 1 {
                return Err(Failure::Usage(
                    "selftest needs --max-dim >= 2 and --max-points >= 1".into(),
                ));
            }
            if !(tolerance.is_finite() && tolerance > 0.0) {
                return Err(Failure::Usage("--tolerance must be positive".into()));
            }
            let outcome = selftest::run(max_dim, max_points, tolerance, closure_cap()?)?;
            let text = Report::Selftest(outcome.clone()).render(format);
            if outcome.passed() {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::Discrepancy(format!(
                    "{} of {} checks failed",
                    outcome.failed_count(),
                    outcome.checks.len()
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Discrepancy(reason)) => {
            eprintln!("error[discrepancy]: {reason}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(reason)) => {
            eprintln!("error[usage]: {reason}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error[{}]: {e}", error_kind(&e));
            ExitCode::from(3)
        }
    }
}
