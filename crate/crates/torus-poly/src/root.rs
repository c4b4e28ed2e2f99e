//! Loop values and sector eigenvalues at odd roots of unity.
//!
//! At level r (odd, ≥ 3) the loop value is d = 2cos(π/r) and each even label
//! j carries the small-loop eigenvalue λ_j = sin(2(j+1)π/r)/sin((j+1)π/r).
//! For r = 5 everything lands in Q(√5): d = φ, λ₀ = φ, λ₂ = −φ⁻¹.

use crate::golden::GoldenNumber;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("level r must be an odd integer >= 3, got {0}")]
    InvalidLevel(i64),
    #[error("label {label} out of range for r = {r} (even labels 0..=r-3)")]
    InvalidLabel { label: i64, r: i64 },
}

/// Numeric sector data for one odd level r.
#[derive(Debug, Clone, PartialEq)]
pub struct RootOfUnityData {
    pub r: i64,
    /// Loop value d = 2cos(π/r).
    pub d: f64,
    /// λ_j for even labels j = 0, 2, …, r−3, in that order.
    pub lambda: Vec<f64>,
}

pub fn check_level(r: i64) -> Result<(), RootError> {
    if r < 3 || r % 2 == 0 {
        return Err(RootError::InvalidLevel(r));
    }
    Ok(())
}

/// The quantum integer [n] at level r, in its real form sin(nπ/r)/sin(π/r).
pub fn quantum_integer(n: i64, r: i64) -> Result<f64, RootError> {
    check_level(r)?;
    let x = PI / r as f64;
    Ok((n as f64 * x).sin() / x.sin())
}

/// Δ_n = [n+1], the value of the n-colored unknot.
pub fn delta(n: i64, r: i64) -> Result<f64, RootError> {
    quantum_integer(n + 1, r)
}

/// Eigenvalue of a small loop encircling a label-j core curve.
pub fn loop_eigenvalue_f64(j: i64, r: i64) -> Result<f64, RootError> {
    check_level(r)?;
    if j < 0 || j > r - 2 || j % 2 != 0 {
        return Err(RootError::InvalidLabel { label: j, r });
    }
    let x = (j + 1) as f64 * PI / r as f64;
    Ok((2.0 * x).sin() / x.sin())
}

/// Exact golden-field eigenvalues at r = 5: λ₀ = φ, λ₂ = −φ⁻¹.
pub fn loop_eigenvalue_r5(j: i64) -> Result<GoldenNumber, RootError> {
    match j {
        0 => Ok(GoldenNumber::phi()),
        2 => Ok(-GoldenNumber::phi_inv()),
        _ => Err(RootError::InvalidLabel { label: j, r: 5 }),
    }
}

/// Even labels at level r: 0, 2, …, r−3.
pub fn even_labels(r: i64) -> impl Iterator<Item = i64> {
    (0..=r - 3).step_by(2)
}

pub fn root_data(r: i64) -> Result<RootOfUnityData, RootError> {
    check_level(r)?;
    let d = 2.0 * (PI / r as f64).cos();
    let lambda = even_labels(r)
        .map(|j| loop_eigenvalue_f64(j, r))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RootOfUnityData { r, d, lambda })
}

impl RootOfUnityData {
    /// Exact golden forms of (d, λ₀, λ₂); only r = 5 lives in Q(√5).
    pub fn exact_r5(&self) -> Option<(GoldenNumber, Vec<GoldenNumber>)> {
        if self.r != 5 {
            return None;
        }
        Some((
            GoldenNumber::phi(),
            vec![GoldenNumber::phi(), -GoldenNumber::phi_inv()],
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    #[test]
    fn bracket_two_at_r5_is_phi() {
        let v = quantum_integer(2, 5).unwrap();
        assert!((v - GoldenNumber::phi().to_f64()).abs() < TOL);
    }

    #[test]
    fn bracket_one_is_one() {
        for r in [3, 5, 7, 9, 11] {
            assert!((quantum_integer(1, r).unwrap() - 1.0).abs() < TOL);
        }
    }

    #[test]
    fn bracket_three_at_r5_is_phi() {
        // sin(3π/5) = sin(2π/5)
        let v = quantum_integer(3, 5).unwrap();
        assert!((v - GoldenNumber::phi().to_f64()).abs() < TOL);
    }

    #[test]
    fn r5_exact_values() {
        let data = root_data(5).unwrap();
        let (d, lambda) = data.exact_r5().unwrap();
        assert_eq!(d, GoldenNumber::phi());
        assert_eq!(lambda[0], GoldenNumber::phi());
        assert_eq!(lambda[1], -GoldenNumber::phi_inv());
        assert!((data.d - d.to_f64()).abs() < TOL);
        for (num, exact) in data.lambda.iter().zip(&lambda) {
            assert!((num - exact.to_f64()).abs() < TOL);
        }
    }

    #[test]
    fn r3_values() {
        let data = root_data(3).unwrap();
        assert!((data.d - 1.0).abs() < TOL);
        assert_eq!(data.lambda.len(), 1);
        assert!((data.lambda[0] - 1.0).abs() < TOL);
    }

    #[test]
    fn r7_lambda_list_length() {
        let data = root_data(7).unwrap();
        assert!((data.d - 2.0 * (PI / 7.0).cos()).abs() < TOL);
        assert_eq!(data.lambda.len(), 3);
        assert!((data.lambda[0] - data.d).abs() < TOL);
    }

    #[test]
    fn rejects_even_or_small_levels() {
        assert!(root_data(4).is_err());
        assert!(root_data(1).is_err());
        assert!(root_data(-5).is_err());
    }
}
