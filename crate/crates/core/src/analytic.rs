//! Closed forms used as oracles for the grid numerics.
//!
//! Nothing here touches the grid code; the point is to have a second,
//! independent route to every number the numerical modules report.

use std::f64::consts::{E, PI};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum AnalyticError {
    #[error("sigma must be positive, got {0}")]
    NonPositiveSigma(f64),
    #[error("length must be positive, got {0}")]
    NonPositiveLength(f64),
    #[error("Planck constant must be positive, got {0}")]
    NonPositiveH(f64),
}

fn positive(v: f64) -> bool {
    v.is_finite() && v > 0.0
}

/// `½·ln(2πe·σ²)`, the differential entropy of a normal density.
pub fn gaussian_entropy(sigma: f64) -> Result<f64, AnalyticError> {
    if !positive(sigma) {
        return Err(AnalyticError::NonPositiveSigma(sigma));
    }
    Ok(0.5 * (2.0 * PI * E * sigma * sigma).ln())
}

/// `ln ℓ`, the differential entropy of a uniform density on an interval of length `ℓ`.
pub fn uniform_entropy(length: f64) -> Result<f64, AnalyticError> {
    if !positive(length) {
        return Err(AnalyticError::NonPositiveLength(length));
    }
    Ok(length.ln())
}

/// Momentum spread `1/(4πσ_x)` of a minimum-uncertainty state (`h = 1`).
pub fn min_uncertainty_sigma_p(sigma_x: f64) -> Result<f64, AnalyticError> {
    if !positive(sigma_x) {
        return Err(AnalyticError::NonPositiveSigma(sigma_x));
    }
    Ok(1.0 / (4.0 * PI * sigma_x))
}

/// Lower bound `ln(h·e/2)` on the joint position/momentum entropy.
pub fn joint_bound(h_constant: f64) -> Result<f64, AnalyticError> {
    if !positive(h_constant) {
        return Err(AnalyticError::NonPositiveH(h_constant));
    }
    Ok((h_constant * E / 2.0).ln())
}
