use num_complex::Complex64;

use super::{PositionState, WavegridError};

/// Norm below which a measured state is considered annihilated.
const MIN_OVERLAP: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Amplitude filter applied by a position measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Window {
    /// `w(x) = exp(-(x-c)²/(4σ_w²))`, so `|w|²` is a Gaussian of standard deviation `sigma`.
    Gaussian { sigma: f64, center: f64 },
    /// Keeps `x < split` (left) or `x ≥ split` (right).
    HalfBox { side: Side, split: f64 },
    /// No filtering.
    Ones,
}

impl Window {
    fn weight(&self, x: f64) -> f64 {
        match *self {
            Window::Gaussian { sigma, center } => {
                let u = x - center;
                (-u * u / (4.0 * sigma * sigma)).exp()
            }
            Window::HalfBox { side: Side::Left, split } => f64::from(u8::from(x < split)),
            Window::HalfBox { side: Side::Right, split } => f64::from(u8::from(x >= split)),
            Window::Ones => 1.0,
        }
    }
}

/// Gaussian window width that takes a Gaussian of width `sigma_state` to `sigma_target`.
///
/// Widths combine as `1/σ'² = 1/σ² + 1/σ_w²`. Returns `None` unless
/// `0 < sigma_target < sigma_state`.
pub fn window_sigma_for_target(sigma_state: f64, sigma_target: f64) -> Option<f64> {
    if !(sigma_target > 0.0 && sigma_target < sigma_state && sigma_state.is_finite()) {
        return None;
    }
    Some((sigma_target.powi(-2) - sigma_state.powi(-2)).sqrt().recip())
}

/// Applies the window pointwise and renormalizes.
pub fn measure_position(state: &PositionState, window: &Window) -> Result<PositionState, WavegridError> {
    if let Window::Gaussian { sigma, center } = *window {
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(WavegridError::NonPositiveSigma(sigma));
        }
        if !center.is_finite() {
            return Err(WavegridError::VanishingOverlap(0.0));
        }
    }
    let grid = *state.grid();
    let amps: Vec<Complex64> = grid.coords().zip(state.amplitudes()).map(|(x, a)| a * window.weight(x)).collect();
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>() * grid.dx();
    let overlaps = norm > MIN_OVERLAP;
    if !overlaps {
        return Err(WavegridError::VanishingOverlap(norm));
    }
    PositionState::normalized(grid, amps)
}
