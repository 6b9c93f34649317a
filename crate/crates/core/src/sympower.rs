//! The local model of a symmetric power: `S_d` acting on `C^{nd}` as `n`
//! copies of its permutation representation.
//!
//! The representation is Galois-stable, so one representative per conjugacy
//! class decides the whole group and nothing is materialized.
//!
//! Terminality is reported alongside the canonical verdict: it comes out of
//! the same scan.

use num_bigint::BigUint;
use serde::Serialize;

use crate::agecalc::{
    age, age_closed_form, cycle_eigen_exponents, is_quasi_reflection, nfold, AgeRecord,
};
use crate::combinatorics::{factorial, partitions, CycleType};
use crate::error::{Error, Result};
use crate::numeric;
use crate::quotient::{MinAge, SingularityVerdict, Witness};

/// Largest `n*d` the numeric oracle will build a dense matrix for.
pub const DEFAULT_MATRIX_CAP: usize = 64;

fn check(n: u64, d: usize) -> Result<()> {
    if n <= 1 {
        return Err(Error::UnsupportedDimension { n });
    }
    if d == 0 {
        return Err(Error::InvalidInput(
            "number of points d must be at least 1".into(),
        ));
    }
    Ok(())
}

/// One [`AgeRecord`] per conjugacy class of `S_d`, canonical partition order.
pub fn class_table(n: u64, d: usize) -> Result<Vec<AgeRecord>> {
    check(n, d)?;
    Ok(partitions(d)?
        .into_iter()
        .map(|t| AgeRecord::new(t, n))
        .collect())
}

/// Canonical / terminal / Gorenstein verdict and index for `C^{nd} / S_d`.
pub fn verdict(n: u64, d: usize) -> Result<SingularityVerdict> {
    let table = class_table(n, d)?;
    let mut quasi = Vec::new();
    let mut min: Option<&AgeRecord> = None;
    let mut index = 1;
    for row in &table {
        if !row.det_is_plus_one {
            index = 2;
        }
        if row.cycle_type.is_identity() {
            continue;
        }
        if is_quasi_reflection(&nfold(&cycle_eigen_exponents(&row.cycle_type), n)) {
            quasi.push(format!("class {}", row.cycle_type));
        }
        if min.is_none_or(|best| row.age < best.age) {
            min = Some(row);
        }
    }
    if !quasi.is_empty() {
        return Err(Error::QuasiReflections { elements: quasi });
    }
    let min_age = match min {
        None => MinAge::Infinite,
        Some(row) => MinAge::Attained {
            age: row.age,
            witness: Witness::Class {
                cycle_type: row.cycle_type.clone(),
            },
        },
    };
    let (canonical, terminal) = match min_age.age() {
        None => (true, true),
        Some(a) => (a >= crate::Age::one(), a > crate::Age::one()),
    };
    Ok(SingularityVerdict {
        canonical,
        terminal,
        gorenstein: index == 1,
        index,
        min_age,
        quasi_reflections: Vec::new(),
        group_order: factorial(d),
    })
}

/// Outcome of the numeric oracle for one conjugacy class.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassCheck {
    pub cycle_type: CycleType,
    pub passed: bool,
    /// Largest `|arg(λ) r / 2π - round(..)|` over the spectrum.
    pub max_deviation: f64,
    pub discrepancy: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BruteforceReport {
    pub n: u64,
    pub d: usize,
    pub tolerance: f64,
    pub classes: Vec<ClassCheck>,
}

impl BruteforceReport {
    pub fn passed(&self) -> bool {
        self.classes.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClassCheck> {
        self.classes.iter().filter(|c| !c.passed)
    }
}

/// Rebuilds every class as an explicit `nd x nd` permutation matrix, recovers
/// exponents from numeric eigenvalues and compares against both the per-cycle
/// construction and the closed-form sum.
pub fn bruteforce_check(
    n: u64,
    d: usize,
    tolerance: f64,
    matrix_cap: usize,
) -> Result<BruteforceReport> {
    check(n, d)?;
    let size = n as usize * d;
    if size > matrix_cap {
        return Err(Error::MatrixTooLarge {
            size,
            cap: matrix_cap,
        });
    }
    let classes = partitions(d)?
        .into_iter()
        .map(|t| check_class(t, n, tolerance))
        .collect();
    Ok(BruteforceReport {
        n,
        d,
        tolerance,
        classes,
    })
}

fn check_class(t: CycleType, n: u64, tolerance: f64) -> ClassCheck {
    let built = nfold(&cycle_eigen_exponents(&t), n);
    let order = built.order();
    let perm = numeric::factor_permutation(&t.representative(), n as usize);
    let fail = |t: CycleType, max_deviation: f64, msg: String| ClassCheck {
        cycle_type: t,
        passed: false,
        max_deviation,
        discrepancy: Some(msg),
    };

    let Some(values) = numeric::eigenvalues(&numeric::permutation_matrix(&perm)) else {
        return fail(t, f64::NAN, "Schur iteration did not converge".into());
    };
    let mut max_deviation = 0.0f64;
    let mut recovered = Vec::with_capacity(values.len());
    for (re, im) in values {
        let r = numeric::recover_exponent(re, im, order);
        max_deviation = max_deviation.max(r.deviation).max(r.modulus_error);
        recovered.push(r.exponent);
    }
    if max_deviation >= tolerance {
        return fail(
            t,
            max_deviation,
            format!(
                "exponent recovery deviation {max_deviation:e} exceeds tolerance {tolerance:e}"
            ),
        );
    }
    recovered.sort_unstable();
    if recovered != built.exponents() {
        return fail(
            t,
            max_deviation,
            format!(
                "numeric exponents {recovered:?} differ from construction {:?}",
                built.exponents()
            ),
        );
    }
    let numeric_sum: u64 = recovered.iter().sum();
    let (built_sum, built_age) = age(&built);
    let (closed_sum, closed_age) = age_closed_form(&t, n);
    if numeric_sum != closed_sum || built_sum != closed_sum || built_age != closed_age {
        return fail(
            t,
            max_deviation,
            format!("S mismatch: numeric {numeric_sum}, construction {built_sum}, closed form {closed_sum}"),
        );
    }
    ClassCheck {
        cycle_type: t,
        passed: true,
        max_deviation,
        discrepancy: None,
    }
}

/// Sum of class sizes in a table; equals `d!`.
pub fn table_order(table: &[AgeRecord]) -> BigUint {
    table.iter().map(|r| &r.class_size).sum()
}
