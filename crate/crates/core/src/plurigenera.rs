//! Plurigenera and Kodaira dimension of a desingularized symmetric power.
//!
//! For `n = dim X` and `m n` even, `P_m(Σ_d) = binomial(d + P_m(X) - 1, d)`,
//! the dimension of the `d`-th symmetric power of `H^0(X, ω^m)`. Rows with
//! `m n` odd are still evaluated but flagged as not covered.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::combinatorics::classes;
use crate::error::{Error, Result};
use crate::quotient::serialize_decimal;

/// Kodaira dimension: `-inf` or a nonnegative integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KodairaDim {
    NegInfinity,
    Finite(u64),
}

impl KodairaDim {
    /// Rejects finite values above `ambient` when it is given.
    pub fn checked(value: Option<u64>, ambient: Option<u64>) -> Result<Self> {
        match (value, ambient) {
            (None, _) => Ok(KodairaDim::NegInfinity),
            (Some(k), Some(n)) if k > n => Err(Error::InvalidInput(format!(
                "Kodaira dimension {k} exceeds the dimension {n}"
            ))),
            (Some(k), _) => Ok(KodairaDim::Finite(k)),
        }
    }
}

impl fmt::Display for KodairaDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaDim::NegInfinity => write!(f, "-inf"),
            KodairaDim::Finite(k) => write!(f, "{k}"),
        }
    }
}

impl FromStr for KodairaDim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" | "-infinity" | "-∞" => Ok(KodairaDim::NegInfinity),
            other => other
                .parse()
                .map(KodairaDim::Finite)
                .map_err(|_| Error::InvalidInput(format!("not a Kodaira dimension: {s:?}"))),
        }
    }
}

/// Integers as JSON numbers, `-inf` as a string.
impl Serialize for KodairaDim {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            KodairaDim::NegInfinity => serializer.serialize_str("-inf"),
            KodairaDim::Finite(k) => serializer.serialize_u64(*k),
        }
    }
}

/// `κ(Σ_d) = d κ(X)`.
pub fn kodaira_scale(kappa: KodairaDim, d: u64) -> KodairaDim {
    match kappa {
        KodairaDim::NegInfinity => KodairaDim::NegInfinity,
        KodairaDim::Finite(k) => KodairaDim::Finite(d * k),
    }
}

fn binomial(top: u64, k: u64) -> BigUint {
    if k > top {
        return BigUint::zero();
    }
    let k = k.min(top - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(top - i) / BigUint::from(i + 1);
    }
    acc
}

/// Dimension of `Sym^d` of a `p`-dimensional space: `binomial(p + d - 1, d)`,
/// zero when `p = 0`.
pub fn sym_dim(p: u64, d: u64) -> BigUint {
    if p == 0 {
        return BigUint::zero();
    }
    binomial(p + d - 1, d)
}

/// `dim (V^{⊗d})^{S_d}` for `dim V = p`, by averaging the trace of each
/// permutation: `(1/d!) Σ_classes |class| p^{cycles}`.
pub fn invariant_dim_burnside(p: u64, d: usize) -> Result<BigUint> {
    let mut total = BigRational::zero();
    let mut group_order = BigUint::zero();
    for class in classes(d)? {
        let trace = BigUint::from(p).pow(class.cycle_type.num_cycles() as u32);
        total += BigRational::from_integer((&class.size * trace).into());
        group_order += class.size;
    }
    let average = total / BigRational::from_integer(group_order.into());
    if !average.is_integer() {
        return Err(Error::Arithmetic(format!(
            "Burnside average {average} for p={p}, d={d} is not an integer"
        )));
    }
    average
        .to_integer()
        .to_biguint()
        .ok_or_else(|| Error::Arithmetic("negative Burnside average".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlurigenusRow {
    pub m: u64,
    pub p_m_x: u64,
    #[serde(serialize_with = "serialize_decimal")]
    pub p_m_sigma: BigUint,
    /// `m n` even.
    pub valid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlurigenusTable {
    pub d: u64,
    pub n: u64,
    pub rows: Vec<PlurigenusRow>,
}

/// Fills in `P_m(Σ_d)` and the parity flag for each `(m, P_m(X))`.
pub fn plurigenus_table(n: u64, d: u64, rows: &[(u64, u64)]) -> Result<PlurigenusTable> {
    if n < 2 {
        return Err(Error::UnsupportedDimension { n });
    }
    if d == 0 {
        return Err(Error::InvalidInput(
            "number of points d must be at least 1".into(),
        ));
    }
    let rows = rows
        .iter()
        .map(|&(m, p)| {
            if m == 0 {
                return Err(Error::InvalidInput("m must be at least 1".into()));
            }
            Ok(PlurigenusRow {
                m,
                p_m_x: p,
                p_m_sigma: sym_dim(p, d),
                valid: (m * n).is_even(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PlurigenusTable { d, n, rows })
}

/// Minimal genus of a curve through `d` general points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `κ(X) >= 0`: `g >= d`.
    NonnegativeKodaira,
    /// `X` of general type: `g > d`.
    GeneralType,
}

pub fn genus_bound(regime: Regime, d: u64) -> u64 {
    match regime {
        Regime::NonnegativeKodaira => d,
        Regime::GeneralType => d + 1,
    }
}

/// Least-squares slope of `log P_m(Σ_d)` against `log m` over the rows with
/// `m n` even and `P_m(Σ_d) > 0`.
pub fn growth_exponent_check(n: u64, d: u64, samples: &[(u64, u64)]) -> Result<f64> {
    let table = plurigenus_table(n, d, samples)?;
    let points: Vec<(f64, f64)> = table
        .rows
        .iter()
        .filter(|r| r.valid && !r.p_m_sigma.is_zero())
        .map(|r| {
            let y = r.p_m_sigma.to_f64().unwrap_or(f64::INFINITY);
            ((r.m as f64).ln(), y.ln())
        })
        .collect();
    if points.len() < 3 {
        return Err(Error::InsufficientData {
            found: points.len(),
            needed: 3,
        });
    }
    let count = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / count;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / count;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    if sxx == 0.0 {
        return Err(Error::InsufficientData {
            found: 1,
            needed: 3,
        });
    }
    Ok(sxy / sxx)
}
