//! Shared inputs for the benchmarks.

use symage::MonomialRep;

/// `(n, d)` pairs for the closed-form symmetric-power scans.
pub const SYMPOWER_CASES: &[(u64, usize)] = &[(2, 5), (3, 9), (6, 9), (3, 16)];

/// Monomial groups small enough to close under the default cap.
pub fn monomial_cases() -> Vec<(&'static str, MonomialRep)> {
    vec![
        ("1/7(1,2,4)", MonomialRep::cyclic(7, &[1, 2, 4]).unwrap()),
        ("S_4 on C^8", MonomialRep::symmetric_power(2, 4).unwrap()),
        ("S_5 on C^15", MonomialRep::symmetric_power(3, 5).unwrap()),
        ("S_6 on C^12", MonomialRep::symmetric_power(2, 6).unwrap()),
    ]
}
