use serde::Serialize;
use symage::combinatorics::{factorial, CycleType};
use symage::plurigenera::{invariant_dim_burnside, sym_dim};
use symage::quotient::{analyze, MonomialRep};
use symage::sympower::{self, bruteforce_check, DEFAULT_MATRIX_CAP};
use symage::{Age, Error, Witness};

/// Largest degree for which the symmetric group is materialized.
const CROSS_ENGINE_MAX_POINTS: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub checks: Vec<Check>,
    pub max_dim: u64,
    pub max_points: usize,
    pub tolerance: f64,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_count(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    fn push(&mut self, name: String, problems: Vec<String>) {
        self.checks.push(Check {
            name,
            passed: problems.is_empty(),
            detail: (!problems.is_empty()).then(|| problems.join("; ")),
        });
    }
}

pub fn run(
    max_dim: u64,
    max_points: usize,
    tolerance: f64,
    closure_cap: usize,
) -> Result<Outcome, Error> {
    let mut out = Outcome {
        checks: Vec::new(),
        max_dim,
        max_points,
        tolerance,
    };
    for n in 2..=max_dim {
        for d in 1..=max_points {
            let report = bruteforce_check(n, d, tolerance, DEFAULT_MATRIX_CAP)?;
            let problems = report
                .failures()
                .map(|c| {
                    format!(
                        "class {}: {}",
                        c.cycle_type,
                        c.discrepancy.as_deref().unwrap_or("failed")
                    )
                })
                .collect();
            out.push(format!("oracle n={n} d={d}"), problems);
            out.push(format!("verdict n={n} d={d}"), verdict_problems(n, d)?);
        }
    }
    for d in 1..=10usize {
        let mut problems = Vec::new();
        for p in 0..=10u64 {
            let burnside = invariant_dim_burnside(p, d)?;
            let binomial = sym_dim(p, d as u64);
            if burnside != binomial {
                problems.push(format!("p={p}: Burnside {burnside} != binomial {binomial}"));
            }
        }
        out.push(format!("burnside d={d} p=0..10"), problems);
    }
    for n in 2..=max_dim.min(4) {
        for d in 1..=max_points.min(CROSS_ENGINE_MAX_POINTS) {
            if factorial(d) > closure_cap.into() {
                continue;
            }
            let group = MonomialRep::symmetric_power(n as usize, d)?.close(closure_cap)?;
            let materialized = analyze(&group)?;
            let closed = sympower::verdict(n, d)?;
            let problems = if materialized.same_classification(&closed) {
                Vec::new()
            } else {
                vec![format!(
                    "materialized {materialized:?} vs closed form {closed:?}"
                )]
            };
            out.push(format!("cross-engine n={n} d={d}"), problems);
        }
    }
    Ok(out)
}

/// Laws the closed-form verdict must satisfy for every `(n, d)`.
fn verdict_problems(n: u64, d: usize) -> Result<Vec<String>, Error> {
    let v = sympower::verdict(n, d)?;
    let mut problems = Vec::new();
    if !v.canonical {
        problems.push("not canonical".to_string());
    }
    let expected_index = if n.is_multiple_of(2) || d == 1 { 1 } else { 2 };
    if v.index != expected_index {
        problems.push(format!("index {} != {expected_index}", v.index));
    }
    if d >= 2 {
        if v.min_age.age() != Some(Age::new(n, 2)) {
            problems.push(format!("minimal age {} != {n}/2", v.min_age));
        }
        let transposition = Witness::Class {
            cycle_type: CycleType::transposition(d)?,
        };
        if v.min_age.witness() != Some(&transposition) {
            problems.push(format!("minimum not at the transposition: {}", v.min_age));
        }
    }
    Ok(problems)
}
