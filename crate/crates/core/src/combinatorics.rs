//! Conjugacy classes of the symmetric group `S_d`.
//!
//! A class is determined by its cycle type, an integer partition of `d`.
//! Fixed points are kept as explicit parts of size 1 so `sum(parts) == d`
//! always holds.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cycle type of a permutation in `S_d`: cycle lengths in non-increasing
/// order, fixed points included.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    /// Builds a cycle type from arbitrary-order parts. Parts are sorted into
    /// non-increasing order; zero parts and an empty list are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidInput(
                "cycle type needs at least one part".into(),
            ));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidInput("cycle lengths must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn identity(d: usize) -> Result<Self> {
        check_degree(d)?;
        Ok(Self { parts: vec![1; d] })
    }

    /// The class `(2, 1^{d-2})`. Requires `d >= 2`.
    pub fn transposition(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidInput(format!("S_{d} has no transpositions")));
        }
        let mut parts = vec![1; d - 1];
        parts[0] = 2;
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The degree `d` of the symmetric group this class lives in.
    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of cycles, fixed points included.
    pub fn num_cycles(&self) -> usize {
        self.parts.len()
    }

    pub fn is_identity(&self) -> bool {
        self.parts[0] == 1
    }

    /// `+1` for even permutations, `-1` for odd: `(-1)^(d - cycles)`.
    pub fn sign(&self) -> i8 {
        if (self.degree() - self.num_cycles()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// A concrete permutation of `{0, .., d-1}` with this cycle type: cycles
    /// occupy consecutive blocks, longest first.
    pub fn representative(&self) -> Vec<usize> {
        let mut perm = Vec::with_capacity(self.degree());
        let mut start = 0;
        for &len in &self.parts {
            for j in 0..len {
                perm.push(start + (j + 1) % len);
            }
            start += len;
        }
        perm
    }
}

impl TryFrom<Vec<usize>> for CycleType {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<CycleType> for Vec<usize> {
    fn from(t: CycleType) -> Self {
        t.parts
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A conjugacy class of `S_d` with its size and element order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassInfo {
    pub cycle_type: CycleType,
    #[serde(serialize_with = "crate::quotient::serialize_decimal")]
    pub size: BigUint,
    pub order: u64,
}

impl ClassInfo {
    pub fn new(cycle_type: CycleType) -> Self {
        let size = class_size(&cycle_type);
        let order = element_order(&cycle_type);
        Self {
            cycle_type,
            size,
            order,
        }
    }
}

fn check_degree(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidInput("degree d must be at least 1".into()));
    }
    Ok(())
}

/// Every partition of `d`, once each, in reverse-lexicographic order:
/// `(d)` first and `(1, .., 1)` last.
pub fn partitions(d: usize) -> Result<Vec<CycleType>> {
    check_degree(d)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(d);
    extend_partitions(d, d, &mut current, &mut out);
    Ok(out)
}

fn extend_partitions(
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<CycleType>,
) {
    if remaining == 0 {
        out.push(CycleType {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        extend_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// All conjugacy classes of `S_d` in canonical partition order.
pub fn classes(d: usize) -> Result<Vec<ClassInfo>> {
    Ok(partitions(d)?.into_iter().map(ClassInfo::new).collect())
}

pub fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Number of permutations with cycle type `t`: `d! / prod(i^{m_i} m_i!)`.
pub fn class_size(t: &CycleType) -> BigUint {
    let centralizer = t
        .multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (part, mult)| {
            acc * BigUint::from(part).pow(mult as u32) * factorial(mult)
        });
    factorial(t.degree()) / centralizer
}

/// Order of any permutation of cycle type `t`: the lcm of its parts.
pub fn element_order(t: &CycleType) -> u64 {
    t.parts.iter().fold(1u64, |acc, &p| acc.lcm(&(p as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn ct(parts: &[usize]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    /// Euler's pentagonal-number recurrence for p(k).
    fn partition_count(k: usize) -> u64 {
        let mut p = vec![0i64; k + 1];
        p[0] = 1;
        for m in 1..=k as i64 {
            let mut total = 0i64;
            for j in 1.. {
                let g1 = j * (3 * j - 1) / 2;
                if g1 > m {
                    break;
                }
                let sign = if j % 2 == 1 { 1 } else { -1 };
                total += sign * p[(m - g1) as usize];
                let g2 = j * (3 * j + 1) / 2;
                if g2 <= m {
                    total += sign * p[(m - g2) as usize];
                }
            }
            p[m as usize] = total;
        }
        p[k] as u64
    }

    /// Cycle type of an explicit permutation, by walking its cycles.
    fn cycle_type_of(perm: &[usize]) -> CycleType {
        let mut seen = vec![false; perm.len()];
        let mut parts = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            parts.push(len);
        }
        CycleType::new(parts).unwrap()
    }

    fn all_permutations(d: usize) -> Vec<Vec<usize>> {
        fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if prefix.len() == used.len() {
                out.push(prefix.clone());
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i);
                    go(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut vec![false; d], &mut out);
        out
    }

    #[test]
    fn partitions_of_one() {
        assert_eq!(partitions(1).unwrap(), vec![ct(&[1])]);
    }

    #[test]
    fn partitions_of_four_in_reverse_lex_order() {
        let expected = vec![
            ct(&[4]),
            ct(&[3, 1]),
            ct(&[2, 2]),
            ct(&[2, 1, 1]),
            ct(&[1, 1, 1, 1]),
        ];
        assert_eq!(partitions(4).unwrap(), expected);
        assert_eq!(partition_count(4), 5);
    }

    #[test]
    fn partition_counts_match_pentagonal_recurrence() {
        assert_eq!(partition_count(10), 42);
        for d in 1..=20 {
            assert_eq!(
                partitions(d).unwrap().len() as u64,
                partition_count(d),
                "d={d}"
            );
        }
    }

    #[test]
    fn partitions_reject_zero() {
        assert!(matches!(partitions(0), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn partitions_are_distinct_and_well_formed() {
        for d in 1..=12 {
            let ps = partitions(d).unwrap();
            let mut sorted = ps.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), ps.len());
            for (a, b) in ps.iter().zip(ps.iter().skip(1)) {
                assert!(a.parts() > b.parts(), "not reverse-lex: {a} before {b}");
            }
            for p in &ps {
                assert_eq!(p.degree(), d);
                assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
                assert!(p.parts().iter().all(|&x| x >= 1));
            }
        }
    }

    #[test]
    fn class_sizes_against_enumeration() {
        assert_eq!(class_size(&ct(&[1, 1, 1])), BigUint::from(1u32));
        assert_eq!(class_size(&ct(&[2, 1])), BigUint::from(3u32));
        assert_eq!(class_size(&ct(&[3, 2])), BigUint::from(20u32));
        for d in 1..=6 {
            let perms = all_permutations(d);
            for t in partitions(d).unwrap() {
                let count = perms.iter().filter(|p| cycle_type_of(p) == t).count();
                assert_eq!(class_size(&t), BigUint::from(count), "class {t}");
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for d in 1..=10 {
            let total = classes(d)
                .unwrap()
                .into_iter()
                .fold(BigUint::zero(), |acc, c| acc + c.size);
            assert_eq!(total, factorial(d));
        }
    }

    #[test]
    fn element_orders() {
        assert_eq!(element_order(&ct(&[1, 1, 1, 1])), 1);
        assert_eq!(element_order(&ct(&[3, 2])), 6);
        assert_eq!(element_order(&ct(&[6, 4])), 12);
        for d in 1..=10 {
            let dfact = factorial(d);
            for t in partitions(d).unwrap() {
                let r = element_order(&t);
                assert_eq!(r == 1, t.is_identity());
                assert!((&dfact % BigUint::from(r)).is_zero());
                assert!(t.parts().iter().all(|&p| r.is_multiple_of(p as u64)));
            }
        }
    }

    #[test]
    fn representative_has_requested_cycle_type() {
        for d in 1..=8 {
            for t in partitions(d).unwrap() {
                assert_eq!(cycle_type_of(&t.representative()), t);
            }
        }
    }

    #[test]
    fn sign_and_constructors() {
        assert_eq!(ct(&[2, 1]).sign(), -1);
        assert_eq!(ct(&[3]).sign(), 1);
        assert_eq!(CycleType::transposition(4).unwrap(), ct(&[2, 1, 1]));
        assert!(CycleType::transposition(1).is_err());
        assert!(CycleType::new(vec![2, 0]).is_err());
        assert_eq!(ct(&[1, 3, 2]).parts(), &[3, 2, 1]);
        assert_eq!(ct(&[2, 1, 1]).to_string(), "(2,1,1)");
    }
}
