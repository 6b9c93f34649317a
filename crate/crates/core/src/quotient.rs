//! Verdict engine for quotients `C^N / G` by finite monomial groups.
//!
//! A monomial matrix has exactly one nonzero entry per column, a power of a
//! fixed primitive `m`-th root of unity `ζ`. Finite groups of such matrices
//! cover both the symmetric-power model and the classical cyclic quotients
//! `1/r(a_1, .., a_N)`.
//!
//! The criterion applied: with no quasi-reflections in `G`, the quotient is
//! canonical iff every non-identity element has age at least 1, and terminal
//! iff every non-identity element has age greater than 1. The index is the
//! order of the determinant character.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize, Serializer};

use crate::agecalc::{age, is_quasi_reflection, Age, EigenExponents};
use crate::combinatorics::CycleType;
use crate::error::{Error, Result};

pub const DEFAULT_CLOSURE_CAP: usize = 20_000;

/// Monomial matrix over `Z/m`: column `i` holds `ζ_m^{exponents[i]}` in row
/// `perm[i]`. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialMatrix {
    perm: Vec<usize>,
    exponents: Vec<u64>,
    root_order: u64,
}

impl MonomialMatrix {
    /// Validates `perm` as a bijection of `0..N` and reduces exponents mod `m`.
    pub fn new(perm: Vec<usize>, exponents: Vec<u64>, root_order: u64) -> Result<Self> {
        let n = perm.len();
        if n == 0 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        if root_order == 0 {
            return Err(Error::InvalidInput("root_order must be at least 1".into()));
        }
        if exponents.len() != n {
            return Err(Error::InvalidInput(format!(
                "expected {n} exponents, found {}",
                exponents.len()
            )));
        }
        let mut seen = vec![false; n];
        for &j in &perm {
            if j >= n || seen[j] {
                return Err(Error::InvalidInput(format!(
                    "{:?} is not a permutation of 1..{n}",
                    perm.iter().map(|p| p + 1).collect::<Vec<_>>()
                )));
            }
            seen[j] = true;
        }
        let exponents = exponents.into_iter().map(|k| k % root_order).collect();
        Ok(Self {
            perm,
            exponents,
            root_order,
        })
    }

    pub fn identity(dimension: usize, root_order: u64) -> Self {
        Self {
            perm: (0..dimension).collect(),
            exponents: vec![0; dimension],
            root_order,
        }
    }

    pub fn dimension(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn root_order(&self) -> u64 {
        self.root_order
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j) && self.exponents.iter().all(|&k| k == 0)
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.dimension(), rhs.dimension());
        debug_assert_eq!(self.root_order, rhs.root_order);
        let m = self.root_order;
        // (A B) e_i = ζ^{b_i} A e_{πB(i)} = ζ^{b_i + a_{πB(i)}} e_{πA(πB(i))}
        let perm = rhs.perm.iter().map(|&j| self.perm[j]).collect();
        let exponents = rhs
            .perm
            .iter()
            .zip(&rhs.exponents)
            .map(|(&j, &b)| (b + self.exponents[j]) % m)
            .collect();
        Self {
            perm,
            exponents,
            root_order: m,
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.dimension();
        let m = self.root_order;
        let mut perm = vec![0; n];
        let mut exponents = vec![0; n];
        for (i, &j) in self.perm.iter().enumerate() {
            perm[j] = i;
            exponents[j] = (m - self.exponents[i]) % m;
        }
        Self {
            perm,
            exponents,
            root_order: m,
        }
    }

    /// Eigenvalue exponents at the element's own order.
    ///
    /// On a cycle of length `l` whose entries multiply to `ζ_m^K`, the `l`-th
    /// power of the matrix is `ζ_m^K` times the identity, so the eigenvalues
    /// there are the `l`-th roots of `ζ_m^K`: `exp(2πi (K + m j) / (m l))`.
    pub fn eigen_exponents(&self) -> EigenExponents {
        let m = self.root_order;
        let cycles = self.cycles();
        let common = cycles
            .iter()
            .fold(m, |acc, (len, _)| acc.lcm(&(m * *len as u64)));
        let mut raw = Vec::with_capacity(self.dimension());
        for &(len, k) in &cycles {
            let len = len as u64;
            let scale = common / (m * len);
            raw.extend((0..len).map(|j| (k + m * j) * scale));
        }
        let shrink = raw.iter().fold(common, |acc, &a| acc.gcd(&a));
        let order = common / shrink;
        EigenExponents::new(order, raw.into_iter().map(|a| a / shrink).collect())
            .expect("exponents below the element order")
    }

    /// Order of the element.
    pub fn order(&self) -> u64 {
        self.eigen_exponents().order()
    }

    /// `det = sign(π) ζ_m^{Σk}` as an exponent of a primitive `2m`-th root.
    pub fn det_exponent(&self) -> u64 {
        let m = self.root_order;
        let transpositions: usize = self.cycles().iter().map(|(len, _)| len - 1).sum();
        let sign_part = if transpositions % 2 == 1 { m } else { 0 };
        let total: u64 = self.exponents.iter().sum();
        (sign_part + 2 * total) % (2 * m)
    }

    /// Multiplicative order of `det`.
    pub fn det_order(&self) -> u64 {
        let two_m = 2 * self.root_order;
        two_m / two_m.gcd(&self.det_exponent())
    }

    /// `(length, exponent sum mod m)` for each cycle of the permutation.
    fn cycles(&self) -> Vec<(usize, u64)> {
        let n = self.dimension();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut len, mut k, mut i) = (0, 0, start);
            while !seen[i] {
                seen[i] = true;
                k += self.exponents[i];
                i = self.perm[i];
                len += 1;
            }
            out.push((len, k % self.root_order));
        }
        out
    }

    pub fn witness(&self) -> Witness {
        Witness::Element {
            perm: self.perm.iter().map(|p| p + 1).collect(),
            exponents: self.exponents.clone(),
        }
    }
}

/// Generator as written in a representation file: `perm` holds 1-based images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub exponents: Vec<u64>,
    pub perm: Vec<usize>,
}

/// On-disk form of a [`MonomialRep`]. Field order is alphabetical so the
/// canonical JSON is the plain serialization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub dimension: usize,
    pub generators: Vec<GeneratorSpec>,
    pub root_order: u64,
}

/// A finite group of `N x N` monomial matrices given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialRep {
    dimension: usize,
    root_order: u64,
    generators: Vec<MonomialMatrix>,
}

impl MonomialRep {
    pub fn new(dimension: usize, root_order: u64, generators: Vec<MonomialMatrix>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        if root_order == 0 {
            return Err(Error::InvalidInput("root_order must be at least 1".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.dimension() != dimension || g.root_order() != root_order {
                return Err(Error::InvalidInput(format!(
                    "generator {} does not match dimension {dimension} and root_order {root_order}",
                    i + 1
                )));
            }
        }
        Ok(Self {
            dimension,
            root_order,
            generators,
        })
    }

    /// The cyclic quotient `1/r(a_1, .., a_N)`: generated by `diag(ζ_r^{a_i})`.
    pub fn cyclic(r: u64, weights: &[u64]) -> Result<Self> {
        let g = MonomialMatrix::new((0..weights.len()).collect(), weights.to_vec(), r)?;
        Self::new(weights.len(), r, vec![g])
    }

    /// `S_d` permuting the factors of `C^{nd} = C^n x .. x C^n`, generated by
    /// the adjacent transpositions.
    pub fn symmetric_power(n: usize, d: usize) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::InvalidInput("n and d must be at least 1".into()));
        }
        let generators = (0..d - 1)
            .map(|i| {
                let mut points: Vec<usize> = (0..d).collect();
                points.swap(i, i + 1);
                let perm = points
                    .iter()
                    .flat_map(|&p| (0..n).map(move |c| p * n + c))
                    .collect();
                MonomialMatrix::new(perm, vec![0; n * d], 1)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n * d, 1, generators)
    }

    pub fn from_file(file: &RepFile) -> Result<Self> {
        let generators = file
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| {
                if g.perm.len() != file.dimension {
                    return Err(Error::InvalidInput(format!(
                        "generator {} has {} perm entries, expected {}",
                        i + 1,
                        g.perm.len(),
                        file.dimension
                    )));
                }
                if g.perm.contains(&0) {
                    return Err(Error::InvalidInput(format!(
                        "generator {}: perm images are 1-based",
                        i + 1
                    )));
                }
                let perm = g.perm.iter().map(|p| p - 1).collect();
                MonomialMatrix::new(perm, g.exponents.clone(), file.root_order)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(file.dimension, file.root_order, generators)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: RepFile = serde_json::from_str(text)?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> RepFile {
        RepFile {
            dimension: self.dimension,
            root_order: self.root_order,
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorSpec {
                    perm: g.perm.iter().map(|p| p + 1).collect(),
                    exponents: g.exponents.clone(),
                })
                .collect(),
        }
    }

    /// Compact JSON, keys sorted, exponents reduced mod `root_order`.
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("plain data serializes")
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn root_order(&self) -> u64 {
        self.root_order
    }

    pub fn generators(&self) -> &[MonomialMatrix] {
        &self.generators
    }

    /// Conjugates every generator by the permutation matrix of `basis`.
    pub fn conjugate_by(&self, basis: &[usize]) -> Result<Self> {
        let p = MonomialMatrix::new(basis.to_vec(), vec![0; basis.len()], self.root_order)?;
        let p_inv = p.inverse();
        let generators = self
            .generators
            .iter()
            .map(|g| p.mul(g).mul(&p_inv))
            .collect();
        Self::new(self.dimension, self.root_order, generators)
    }

    /// Breadth-first closure under multiplication, identity first.
    pub fn close(&self, cap: usize) -> Result<MonomialGroup> {
        let identity = MonomialMatrix::identity(self.dimension, self.root_order);
        let mut seen: HashSet<MonomialMatrix> = HashSet::new();
        let mut elements = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.mul(&x);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
            elements.push(x);
        }
        Ok(MonomialGroup {
            rep: self.clone(),
            elements,
        })
    }
}

/// Shorthand for [`MonomialRep::close`].
pub fn close_group(rep: &MonomialRep, cap: usize) -> Result<MonomialGroup> {
    rep.close(cap)
}

/// A representation together with every element of the group it generates.
#[derive(Clone, Debug)]
pub struct MonomialGroup {
    rep: MonomialRep,
    elements: Vec<MonomialMatrix>,
}

impl MonomialGroup {
    pub fn rep(&self) -> &MonomialRep {
        &self.rep
    }

    /// Elements in breadth-first order; the identity comes first.
    pub fn elements(&self) -> &[MonomialMatrix] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// lcm of the element orders.
    pub fn exponent(&self) -> u64 {
        self.elements.iter().fold(1, |acc, g| acc.lcm(&g.order()))
    }
}

/// Identifies the element or class a verdict field refers to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// 1-based permutation images and root-of-unity exponents.
    Element {
        exponents: Vec<u64>,
        perm: Vec<usize>,
    },
    /// A conjugacy class of `S_d`.
    Class { cycle_type: CycleType },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Element { perm, exponents } => {
                write!(f, "perm={perm:?} exponents={exponents:?}")
            }
            Witness::Class { cycle_type } => write!(f, "class {cycle_type}"),
        }
    }
}

/// Smallest age over non-identity elements; infinite for the trivial group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinAge {
    Infinite,
    Attained { age: Age, witness: Witness },
}

impl MinAge {
    pub fn age(&self) -> Option<Age> {
        match self {
            MinAge::Infinite => None,
            MinAge::Attained { age, .. } => Some(*age),
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            MinAge::Infinite => None,
            MinAge::Attained { witness, .. } => Some(witness),
        }
    }
}

impl fmt::Display for MinAge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinAge::Infinite => write!(f, "inf"),
            MinAge::Attained { age, witness } => write!(f, "{age} at {witness}"),
        }
    }
}

impl Serialize for MinAge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        match self {
            MinAge::Infinite => serializer.serialize_str("inf"),
            MinAge::Attained { age, witness } => {
                let mut s = serializer.serialize_struct("MinAge", 2)?;
                s.serialize_field("age", age)?;
                s.serialize_field("witness", witness)?;
                s.end()
            }
        }
    }
}

pub(crate) fn serialize_decimal<S: Serializer>(
    value: &BigUint,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

/// Classification of a quotient singularity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityVerdict {
    pub canonical: bool,
    pub gorenstein: bool,
    #[serde(serialize_with = "serialize_decimal")]
    pub group_order: BigUint,
    pub index: u64,
    pub min_age: MinAge,
    pub quasi_reflections: Vec<Witness>,
    pub terminal: bool,
}

impl SingularityVerdict {
    /// Verdict for a smooth point (trivial group).
    pub fn smooth() -> Self {
        Self {
            canonical: true,
            gorenstein: true,
            group_order: BigUint::from(1u32),
            index: 1,
            min_age: MinAge::Infinite,
            quasi_reflections: Vec::new(),
            terminal: true,
        }
    }

    /// Same flags, index, order and minimal age; witnesses may differ.
    pub fn same_classification(&self, other: &Self) -> bool {
        self.canonical == other.canonical
            && self.terminal == other.terminal
            && self.gorenstein == other.gorenstein
            && self.index == other.index
            && self.group_order == other.group_order
            && self.min_age.age() == other.min_age.age()
    }
}

/// Scans every element of `group` and applies the age criterion.
pub fn analyze(group: &MonomialGroup) -> Result<SingularityVerdict> {
    let mut quasi = Vec::new();
    let mut min: Option<(Age, &MonomialMatrix)> = None;
    let mut index = 1u64;
    for g in group.elements() {
        index = index.lcm(&g.det_order());
        if g.is_identity() {
            continue;
        }
        let e = g.eigen_exponents();
        if is_quasi_reflection(&e) {
            quasi.push(g.witness().to_string());
            continue;
        }
        let (_, a) = age(&e);
        if min.is_none_or(|(best, _)| a < best) {
            min = Some((a, g));
        }
    }
    if !quasi.is_empty() {
        return Err(Error::QuasiReflections { elements: quasi });
    }
    let min_age = match min {
        None => MinAge::Infinite,
        Some((age, g)) => MinAge::Attained {
            age,
            witness: g.witness(),
        },
    };
    let one = Age::one();
    let (canonical, terminal) = match min_age.age() {
        None => (true, true),
        Some(a) => (a >= one, a > one),
    };
    Ok(SingularityVerdict {
        canonical,
        terminal,
        gorenstein: index == 1,
        index,
        min_age,
        quasi_reflections: Vec::new(),
        group_order: BigUint::from(group.order()),
    })
}
