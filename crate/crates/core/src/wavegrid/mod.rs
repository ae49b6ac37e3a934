//! Single-particle pure states on a uniform one-dimensional grid.
//!
//! Natural units with `h = 1` are used throughout. The momentum
//! representation is defined by the continuous transform
//!
//! ```text
//! φ(p) = ∫ ψ(x) e^{-2πipx} dx,      ψ(x) = ∫ φ(p) e^{+2πipx} dp
//! ```
//!
//! sampled on the conjugate grid `dp = 1/(n·dx)`, `p_k = (k - n/2)·dp`.
//! With this convention Parseval holds exactly on the grid and a
//! minimum-uncertainty Gaussian has `σ_x·σ_p = 1/(4π)`.

mod construct;
mod grid;
mod measure;
mod state;
mod text;
mod transform;

pub use construct::{default_smoothness, make_gaussian, make_uniform, random_state, scale_state, RandomStateConfig};
pub use grid::Grid;
pub use measure::{measure_position, window_sigma_for_target, Side, Window};
pub use state::{MomentumState, PositionState, NORM_TOLERANCE, TAIL_FRACTION, TAIL_TOLERANCE};
pub use text::{parse_state, write_state, ParseStateError};
pub use transform::{to_momentum, to_position};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WavegridError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("state does not fit the grid: {0}")]
    GridTooSmall(String),
    #[error("sigma must be positive and finite, got {0}")]
    NonPositiveSigma(f64),
    #[error("invalid edge smoothing: {0}")]
    InvalidSmoothing(String),
    #[error("state is not normalized: norm = {0}")]
    NotNormalized(f64),
    #[error("amplitude array has length {got}, grid has {expected} samples")]
    LengthMismatch { expected: usize, got: usize },
    #[error("non-finite amplitude at sample {0}")]
    NonFinite(usize),
    #[error("measurement window has vanishing overlap with the state (norm {0:e})")]
    VanishingOverlap(f64),
    #[error("random state generation failed: {0}")]
    GenerationFailed(String),
    #[error("scale factor must be positive and finite, got {0}")]
    InvalidScale(f64),
}
