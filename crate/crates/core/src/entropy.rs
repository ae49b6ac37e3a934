//! Differential entropies of grid densities and the joint information
//! `L = H_x + H_p` of a position/momentum pair.

use std::f64::consts::LN_2;

use serde::Serialize;
use thiserror::Error;

use crate::wavegrid::{to_momentum, MomentumState, PositionState};

/// Slack below the bound that still counts as satisfied.
pub const BOUND_TOLERANCE: f64 = 1e-6;

/// Margin below which a state is treated as saturating the bound.
pub const EQUALITY_TOLERANCE: f64 = 1e-4;

/// Allowed deviation of `Σρ·Δ` from one in [`differential_entropy`].
pub const DENSITY_NORM_TOLERANCE: f64 = 1e-8;

/// `ln(e/2)`, the lower bound on `L` in units with `h = 1`.
pub const JOINT_BOUND: f64 = 1.0 - LN_2;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum EntropyError {
    #[error("density integrates to {0}, not 1")]
    NotNormalized(f64),
    #[error("density has a negative or non-finite sample at index {0}")]
    InvalidDensity(usize),
    #[error("spacing must be positive, got {0}")]
    InvalidSpacing(f64),
}

/// Midpoint-rule `-Σ ρ_i ln ρ_i · Δ`, with `0·ln 0 = 0`. May be negative.
pub fn differential_entropy(density: &[f64], spacing: f64) -> Result<f64, EntropyError> {
    if !(spacing.is_finite() && spacing > 0.0) {
        return Err(EntropyError::InvalidSpacing(spacing));
    }
    if let Some(i) = density.iter().position(|p| !(p.is_finite() && *p >= 0.0)) {
        return Err(EntropyError::InvalidDensity(i));
    }
    let mass = density.iter().sum::<f64>() * spacing;
    let normalized = (mass - 1.0).abs() <= DENSITY_NORM_TOLERANCE;
    if !normalized {
        return Err(EntropyError::NotNormalized(mass));
    }
    let sum: f64 = density.iter().filter(|&&p| p > 0.0).map(|&p| p * p.ln()).sum();
    Ok(-sum * spacing)
}

/// Position and momentum entropies of one state, in nats with `h = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyReport {
    pub h_x: f64,
    pub h_p: f64,
    pub joint_l: f64,
    pub i_o: f64,
    pub bound: f64,
    pub margin: f64,
    pub bound_satisfied: bool,
}

impl EntropyReport {
    pub fn from_entropies(h_x: f64, h_p: f64) -> Self {
        let joint_l = h_x + h_p;
        // I_O = L - ln h, and ln h = 0 here
        let i_o = joint_l;
        let margin = i_o - JOINT_BOUND;
        Self { h_x, h_p, joint_l, i_o, bound: JOINT_BOUND, margin, bound_satisfied: margin >= -BOUND_TOLERANCE }
    }

    /// Whether the state saturates the bound to within [`EQUALITY_TOLERANCE`].
    pub fn is_minimal(&self) -> bool {
        self.margin.abs() < EQUALITY_TOLERANCE
    }
}

pub fn joint_information(state: &PositionState) -> Result<EntropyReport, EntropyError> {
    let h_x = differential_entropy(&state.density(), state.grid().dx())?;
    let momentum = to_momentum(state);
    let h_p = differential_entropy(&momentum.density(), momentum.grid().dx())?;
    Ok(EntropyReport::from_entropies(h_x, h_p))
}

/// `S = k·H_p`, Boltzmann's entropy from the momentum density.
pub fn thermodynamic_entropy(momentum: &MomentumState, boltzmann_k: f64) -> Result<f64, EntropyError> {
    let h_p = differential_entropy(&momentum.density(), momentum.grid().dx())?;
    Ok(boltzmann_k * h_p)
}
