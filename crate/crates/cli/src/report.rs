//! Report rendering. JSON goes through `serde_json::Value`, whose maps keep
//! keys sorted, so equal reports serialize to identical bytes.

use std::fmt::Write;

use clap::ValueEnum;
use serde_json::{json, Value};
use symage::plurigenera::{KodairaDim, PlurigenusTable, Regime};
use symage::quotient::MonomialRep;
use symage::{AgeRecord, SingularityVerdict};

use crate::selftest::Outcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
}

pub enum Report {
    Sympower {
        n: u64,
        d: usize,
        verdict: SingularityVerdict,
        table: Option<Vec<AgeRecord>>,
    },
    Analyze {
        rep: MonomialRep,
        verdict: SingularityVerdict,
    },
    Plurigenera {
        table: PlurigenusTable,
        kappa: Option<(KodairaDim, KodairaDim)>,
    },
    GenusBound {
        regime: Regime,
        d: u64,
        genus: u64,
    },
    Selftest(Outcome),
}

fn regime_name(regime: Regime) -> &'static str {
    match regime {
        Regime::NonnegativeKodaira => "nonneg",
        Regime::GeneralType => "general",
    }
}

fn to_value<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report data serializes")
}

impl Report {
    fn command(&self) -> &'static str {
        match self {
            Report::Sympower { .. } => "sympower",
            Report::Analyze { .. } => "analyze",
            Report::Plurigenera { .. } => "plurigenera",
            Report::GenusBound { .. } => "genus-bound",
            Report::Selftest(_) => "selftest",
        }
    }

    fn payload(&self) -> Value {
        match self {
            Report::Sympower {
                n,
                d,
                verdict,
                table,
            } => {
                let mut v = json!({ "n": n, "d": d, "verdict": to_value(verdict) });
                if let Some(rows) = table {
                    v["table"] = to_value(rows);
                }
                v
            }
            Report::Analyze { rep, verdict } => json!({
                "rep": to_value(&rep.to_file()),
                "verdict": to_value(verdict),
            }),
            Report::Plurigenera { table, kappa } => {
                let mut v = json!({ "table": to_value(table) });
                if let Some((x, sigma)) = kappa {
                    v["kappa_x"] = to_value(x);
                    v["kappa_sigma"] = to_value(sigma);
                }
                v
            }
            Report::GenusBound { regime, d, genus } => json!({
                "regime": regime_name(*regime),
                "d": d,
                "minimal_genus": genus,
            }),
            Report::Selftest(outcome) => json!({
                "passed": outcome.passed(),
                "failed": outcome.failed_count(),
                "outcome": to_value(outcome),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        let doc = json!({
            "command": self.command(),
            "meta": { "tool": "symage", "version": env!("CARGO_PKG_VERSION") },
            "result": self.payload(),
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("value serializes");
        text.push('\n');
        text
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Md => self.to_markdown(),
        }
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        match self {
            Report::Sympower {
                n,
                d,
                verdict,
                table,
            } => {
                writeln!(s, "# Symmetric power: n = {n}, d = {d}\n").unwrap();
                verdict_lines(&mut s, verdict);
                if let Some(rows) = table {
                    writeln!(s, "\n| class | size | order | S | age | det |").unwrap();
                    writeln!(s, "|---|---|---|---|---|---|").unwrap();
                    for r in rows {
                        writeln!(
                            s,
                            "| {} | {} | {} | {} | {} | {} |",
                            r.cycle_type,
                            r.class_size,
                            r.order,
                            r.s_sum,
                            r.age,
                            if r.det_is_plus_one { "+1" } else { "-1" }
                        )
                        .unwrap();
                    }
                }
            }
            Report::Analyze { rep, verdict } => {
                writeln!(
                    s,
                    "# Monomial group: N = {}, root order {}, {} generators\n",
                    rep.dimension(),
                    rep.root_order(),
                    rep.generators().len()
                )
                .unwrap();
                verdict_lines(&mut s, verdict);
            }
            Report::Plurigenera { table, kappa } => {
                writeln!(s, "# Plurigenera: n = {}, d = {}\n", table.n, table.d).unwrap();
                writeln!(s, "| m | P_m(X) | P_m(Sigma_d) | mn even |").unwrap();
                writeln!(s, "|---|---|---|---|").unwrap();
                for r in &table.rows {
                    writeln!(
                        s,
                        "| {} | {} | {} | {} |",
                        r.m, r.p_m_x, r.p_m_sigma, r.valid
                    )
                    .unwrap();
                }
                if let Some((x, sigma)) = kappa {
                    writeln!(s, "\n- kappa(X): {x}\n- kappa(Sigma_d): {sigma}").unwrap();
                }
            }
            Report::GenusBound { regime, d, genus } => {
                writeln!(
                    s,
                    "# Genus bound: regime {}, d = {d}\n",
                    regime_name(*regime)
                )
                .unwrap();
                writeln!(s, "- minimal genus: {genus}").unwrap();
            }
            Report::Selftest(outcome) => {
                writeln!(
                    s,
                    "# Selftest: n <= {}, d <= {}, tolerance {:e}\n",
                    outcome.max_dim, outcome.max_points, outcome.tolerance
                )
                .unwrap();
                for c in &outcome.checks {
                    match &c.detail {
                        None => writeln!(s, "- PASS {}", c.name).unwrap(),
                        Some(detail) => writeln!(s, "- FAIL {}: {detail}", c.name).unwrap(),
                    }
                }
                writeln!(
                    s,
                    "\n{} checks, {} failed",
                    outcome.checks.len(),
                    outcome.failed_count()
                )
                .unwrap();
            }
        }
        s
    }
}

fn verdict_lines(s: &mut String, v: &SingularityVerdict) {
    writeln!(s, "- canonical: {}", v.canonical).unwrap();
    writeln!(s, "- terminal: {}", v.terminal).unwrap();
    writeln!(s, "- gorenstein: {}", v.gorenstein).unwrap();
    writeln!(s, "- index: {}", v.index).unwrap();
    writeln!(s, "- group order: {}", v.group_order).unwrap();
    writeln!(s, "- min age: {}", v.min_age).unwrap();
}
