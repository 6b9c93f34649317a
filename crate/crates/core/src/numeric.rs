//! Floating-point eigenvalue oracle for permutation matrices.
//!
//! This path shares nothing with the exact exponent bookkeeping in
//! [`crate::agecalc`]: it builds a dense 0/1 matrix, runs a real Schur
//! decomposition and reads exponents off the arguments of the eigenvalues.

use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector};

/// Dense matrix with `M[perm[i], i] = 1`, i.e. `M e_i = e_{perm[i]}`.
pub fn permutation_matrix(perm: &[usize]) -> DMatrix<f64> {
    let n = perm.len();
    let mut m = DMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        m[(j, i)] = 1.0;
    }
    m
}

/// The permutation of `C^{n d} = C^n x .. x C^n` induced by permuting the `d`
/// factors with `perm`. Coordinate `(point i, copy c)` sits at index `i*n + c`.
pub fn factor_permutation(perm: &[usize], n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(perm.len() * n);
    for &target in perm {
        out.extend((0..n).map(|c| target * n + c));
    }
    out
}

/// Householder reflection `I - 2 v v^T / |v|^2` for a fixed dense `v`.
/// Conjugating by it keeps the spectrum but removes the 0/1 structure that
/// can stall an unshifted QR sweep.
fn mixing_reflection(n: usize) -> DMatrix<f64> {
    let v = DVector::from_fn(n, |i, _| 1.0 + ((i as f64) * 0.7390851332).sin());
    let scale = 2.0 / v.norm_squared();
    DMatrix::identity(n, n) - (&v * v.transpose()) * scale
}

/// Numeric eigenvalues `(re, im)` of a real square matrix, or `None` if the
/// Schur iteration does not converge.
pub fn eigenvalues(m: &DMatrix<f64>) -> Option<Vec<(f64, f64)>> {
    let n = m.nrows();
    let h = mixing_reflection(n);
    let conjugated = &h * m * &h;
    let schur = nalgebra::linalg::Schur::try_new(conjugated, 1e-14, 10_000)?;
    let values = schur.complex_eigenvalues();
    Some(values.iter().map(|z| (z.re, z.im)).collect())
}

/// Result of reading an exponent off one eigenvalue.
#[derive(Clone, Copy, Debug)]
pub struct Recovered {
    pub exponent: u64,
    /// `|arg(λ) r / 2π - nearest integer|`.
    pub deviation: f64,
    /// `||λ| - 1|`.
    pub modulus_error: f64,
}

/// Maps `λ = e^{iθ}` to the integer `a` in `[0, r)` with `θ ≈ 2π a / r`.
pub fn recover_exponent(re: f64, im: f64, order: u64) -> Recovered {
    let r = order as f64;
    let mut t = im.atan2(re) / TAU * r;
    if t < 0.0 {
        t += r;
    }
    let nearest = t.round();
    let deviation = (t - nearest).abs();
    let exponent = (nearest as i64).rem_euclid(order as i64) as u64;
    Recovered {
        exponent,
        deviation,
        modulus_error: (re.hypot(im) - 1.0).abs(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_matrix_maps_basis_vectors() {
        let m = permutation_matrix(&[1, 2, 0]);
        assert_eq!(m[(1, 0)], 1.0);
        assert_eq!(m[(2, 1)], 1.0);
        assert_eq!(m[(0, 2)], 1.0);
        assert_eq!(m.sum(), 3.0);
    }

    #[test]
    fn factor_permutation_moves_blocks() {
        assert_eq!(factor_permutation(&[1, 0], 2), vec![2, 3, 0, 1]);
        assert_eq!(factor_permutation(&[0, 1, 2], 1), vec![0, 1, 2]);
    }

    #[test]
    fn three_cycle_spectrum() {
        let values = eigenvalues(&permutation_matrix(&[1, 2, 0])).unwrap();
        let mut exps: Vec<u64> = values
            .iter()
            .map(|&(re, im)| {
                let rec = recover_exponent(re, im, 3);
                assert!(rec.deviation < 1e-9);
                assert!(rec.modulus_error < 1e-9);
                rec.exponent
            })
            .collect();
        exps.sort_unstable();
        assert_eq!(exps, vec![0, 1, 2]);
    }

    #[test]
    fn exponent_recovery_wraps_negative_angles() {
        let theta = -TAU / 4.0;
        let rec = recover_exponent(theta.cos(), theta.sin(), 4);
        assert_eq!(rec.exponent, 3);
        let rec = recover_exponent(1.0, -1e-15, 5);
        assert_eq!(rec.exponent, 0);
    }
}
