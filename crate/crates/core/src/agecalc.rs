//! Eigenvalue exponents and ages of permutation-type group elements.
//!
//! An element of order `r` has eigenvalues `ε^{a_i}` for a primitive `r`-th
//! root of unity `ε` and integers `0 <= a_i < r`. Everything here is carried
//! out on the integers `a_i`; no complex arithmetic is involved.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{class_size, element_order, CycleType};
use crate::error::{Error, Result};

/// Exact age `S / r` of a group element, always in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Age(Ratio<u64>);

impl Age {
    pub fn new(sum: u64, order: u64) -> Self {
        Age(Ratio::new(sum, order))
    }

    pub fn zero() -> Self {
        Age(Ratio::zero())
    }

    pub fn one() -> Self {
        Age(Ratio::from_integer(1))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_ratio(&self) -> Ratio<u64> {
        self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl From<Ratio<u64>> for Age {
    fn from(r: Ratio<u64>) -> Self {
        Age(r)
    }
}

/// Always written as `p/q`, including integers (`1/1`).
impl fmt::Display for Age {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Age {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("not a rational: {s:?}"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let q: u64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        Ok(Age::new(p, q))
    }
}

impl Serialize for Age {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Age {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Determinant of a permutation-type element: `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn pow(self, n: u64) -> Sign {
        if self == Sign::Minus && n % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.value())
    }
}

/// Order `r` of an element plus the multiset of exponents `a_i` of its
/// eigenvalues `ε^{a_i}`. The multiset is stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EigenExponents {
    order: u64,
    exponents: Vec<u64>,
}

impl EigenExponents {
    pub fn new(order: u64, mut exponents: Vec<u64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidInput("element order must be positive".into()));
        }
        if exponents.is_empty() {
            return Err(Error::InvalidInput(
                "exponent multiset must be nonempty".into(),
            ));
        }
        if let Some(&a) = exponents.iter().find(|&&a| a >= order) {
            return Err(Error::InvalidInput(format!(
                "exponent {a} out of range for order {order}"
            )));
        }
        exponents.sort_unstable();
        Ok(Self { order, exponents })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn dimension(&self) -> usize {
        self.exponents.len()
    }

    /// Count of eigenvalues different from 1.
    pub fn nontrivial_count(&self) -> usize {
        self.exponents.iter().filter(|&&a| a != 0).count()
    }

    /// True when the multiset is fixed by `a -> k*a mod r` for every unit `k`,
    /// so the age does not depend on which primitive root is chosen.
    pub fn is_galois_stable(&self) -> bool {
        let r = self.order;
        (1..r).filter(|k| k.gcd(&r) == 1).all(|k| {
            let mut twisted: Vec<u64> = self.exponents.iter().map(|a| a * k % r).collect();
            twisted.sort_unstable();
            twisted == self.exponents
        })
    }
}

/// Exponents of a permutation with cycle type `t` acting on `C^d`.
///
/// A cycle of length `r_i` contributes `{ j * r/r_i : 0 <= j < r_i }` where
/// `r` is the lcm of all cycle lengths.
pub fn cycle_eigen_exponents(t: &CycleType) -> EigenExponents {
    let r = element_order(t);
    let mut exponents = Vec::with_capacity(t.degree());
    for &len in t.parts() {
        let step = r / len as u64;
        exponents.extend((0..len as u64).map(|j| j * step));
    }
    exponents.sort_unstable();
    EigenExponents {
        order: r,
        exponents,
    }
}

/// Direct sum of `n` copies: every multiplicity scaled by `n`.
pub fn nfold(e: &EigenExponents, n: u64) -> EigenExponents {
    let mut exponents = Vec::with_capacity(e.exponents.len() * n as usize);
    for &a in &e.exponents {
        exponents.extend(std::iter::repeat_n(a, n as usize));
    }
    EigenExponents {
        order: e.order,
        exponents,
    }
}

/// `(S, S / r)` where `S` is the sum of the exponents.
pub fn age(e: &EigenExponents) -> (u64, Age) {
    let s: u64 = e.exponents.iter().sum();
    (s, Age::new(s, e.order))
}

/// `S = n/2 * sum_i r_i' r_i (r_i - 1)` with `r_i' = r / r_i`, for `n` copies
/// of the permutation representation.
pub fn age_closed_form(t: &CycleType, n: u64) -> (u64, Age) {
    let r = element_order(t);
    let bracket: u64 = t
        .parts()
        .iter()
        .map(|&len| {
            let len = len as u64;
            (r / len) * len * (len - 1)
        })
        .sum();
    let doubled = n * bracket;
    // r_i (r_i - 1) is even, so the halving is exact.
    debug_assert!(doubled.is_even());
    let s = doubled / 2;
    (s, Age::new(s, r))
}

/// `det h(σ) = sign(σ)^n`.
pub fn det_sign(t: &CycleType, n: u64) -> Sign {
    let sign = if t.sign() == 1 {
        Sign::Plus
    } else {
        Sign::Minus
    };
    sign.pow(n)
}

/// A quasi-reflection has exactly one eigenvalue different from 1.
pub fn is_quasi_reflection(e: &EigenExponents) -> bool {
    e.nontrivial_count() == 1
}

/// Age data of one conjugacy class of `S_d` acting on `n` copies of `C^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgeRecord {
    pub cycle_type: CycleType,
    pub n: u64,
    pub order: u64,
    #[serde(serialize_with = "crate::quotient::serialize_decimal")]
    pub class_size: BigUint,
    pub s_sum: u64,
    pub age: Age,
    pub det_is_plus_one: bool,
}

impl AgeRecord {
    pub fn new(cycle_type: CycleType, n: u64) -> Self {
        let (s_sum, age) = age_closed_form(&cycle_type, n);
        Self {
            order: element_order(&cycle_type),
            class_size: class_size(&cycle_type),
            det_is_plus_one: det_sign(&cycle_type, n) == Sign::Plus,
            cycle_type,
            n,
            s_sum,
            age,
        }
    }
}

impl PartialOrd for AgeRecord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by age, ties broken by the reverse of the canonical partition order.
impl Ord for AgeRecord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.age
            .cmp(&other.age)
            .then_with(|| other.cycle_type.cmp(&self.cycle_type))
    }
}
