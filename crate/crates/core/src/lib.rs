//! Exact age computations for finite quotient singularities.
//!
//! The crate classifies quotients `C^N / G` by a finite group `G` with the
//! age (Reid–Tai) criterion, with a closed-form specialization to the local
//! model of a symmetric power `S^d X = C^{nd} / S_d`, and the plurigenus and
//! Kodaira-dimension formulas that follow from it.
//!
//! All ages are exact rationals. Floating point appears only in the numeric
//! eigenvalue oracle ([`numeric`]) and in the growth-exponent fit of
//! [`plurigenera::growth_exponent_check`].

pub mod agecalc;
pub mod combinatorics;
mod error;
pub mod numeric;
pub mod plurigenera;
pub mod quotient;
pub mod sympower;

pub use agecalc::{Age, AgeRecord, EigenExponents, Sign};
pub use combinatorics::{ClassInfo, CycleType};
pub use error::{Error, Result};
pub use plurigenera::{KodairaDim, PlurigenusRow, PlurigenusTable, Regime};
pub use quotient::{
    MinAge, MonomialGroup, MonomialMatrix, MonomialRep, SingularityVerdict, Witness,
    DEFAULT_CLOSURE_CAP,
};
pub use sympower::{BruteforceReport, ClassCheck, DEFAULT_MATRIX_CAP};
