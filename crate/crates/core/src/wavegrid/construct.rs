use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::state::{TAIL_FRACTION, TAIL_TOLERANCE};
use super::transform::{evaluate_at, to_momentum};
use super::{Grid, PositionState, WavegridError};

fn gaussian_amplitude(x: f64, center: f64, sigma: f64, momentum: f64) -> Complex64 {
    let u = x - center;
    Complex64::from_polar((-u * u / (4.0 * sigma * sigma)).exp(), TAU * momentum * u)
}

/// Rejects states whose momentum density reaches the edge of the conjugate grid.
fn check_momentum_fit(state: &PositionState) -> Result<(), WavegridError> {
    let tail = to_momentum(state).tail_mass();
    if tail >= TAIL_TOLERANCE {
        return Err(WavegridError::GridTooSmall(format!(
            "momentum probability {tail:e} near the edge of the conjugate grid; refine dx"
        )));
    }
    Ok(())
}

/// Minimum-uncertainty Gaussian `ψ ∝ exp(-(x-c)²/(4σ²))·e^{2πi·k(x-c)}`.
///
/// `|ψ|²` has standard deviation `sigma_x`; the momentum density is centred on
/// `momentum_shift` with spread `1/(4π·sigma_x)`. The state must fit both the
/// position grid and its conjugate.
pub fn make_gaussian(
    grid: Grid,
    sigma_x: f64,
    center: f64,
    momentum_shift: f64,
) -> Result<PositionState, WavegridError> {
    if !(sigma_x.is_finite() && sigma_x > 0.0) {
        return Err(WavegridError::NonPositiveSigma(sigma_x));
    }
    if !(center.is_finite() && momentum_shift.is_finite()) {
        return Err(WavegridError::GridTooSmall("center and momentum shift must be finite".into()));
    }
    if center < grid.x0() || center > grid.last() {
        return Err(WavegridError::GridTooSmall(format!("center {center} lies outside the grid")));
    }
    let amps = grid.coords().map(|x| gaussian_amplitude(x, center, sigma_x, momentum_shift)).collect();
    let state = PositionState::normalized(grid, amps).map_err(|e| match e {
        WavegridError::NotNormalized(_) => {
            WavegridError::GridTooSmall(format!("sigma {sigma_x} is not resolved by the grid"))
        }
        other => other,
    })?;
    check_momentum_fit(&state)?;
    Ok(state)
}

/// Flat density of width `support_length` centred on `center`.
///
/// With `edge_smoothing = 0` the support is the block of `round(ℓ/dx)` samples
/// closest to `center`, so `H_x = ln(round(ℓ/dx)·dx)` exactly. A positive
/// smoothing replaces the outermost `edge_smoothing` of the support on each
/// side by a raised-cosine ramp; the ramps lie inside the support, so the flat
/// top shrinks and `H_x < ln ℓ`.
///
/// Sharp edges make the momentum density decay as `1/p²`, so entropies of the
/// unsmoothed state carry a grid-truncation error in `H_p`.
pub fn make_uniform(
    grid: Grid,
    support_length: f64,
    center: f64,
    edge_smoothing: f64,
) -> Result<PositionState, WavegridError> {
    if !(support_length.is_finite() && support_length > 0.0) || !center.is_finite() {
        return Err(WavegridError::GridTooSmall(format!(
            "support length {support_length} and center {center} must be finite, length positive"
        )));
    }
    if !(edge_smoothing.is_finite() && edge_smoothing >= 0.0 && edge_smoothing < support_length / 4.0) {
        return Err(WavegridError::InvalidSmoothing(format!(
            "edge smoothing {edge_smoothing} must lie in [0, {})",
            support_length / 4.0
        )));
    }
    let margin = TAIL_FRACTION * grid.extent();
    let (lo, hi) = (center - support_length / 2.0, center + support_length / 2.0);
    if lo < grid.x0() + margin || hi > grid.last() - margin {
        return Err(WavegridError::GridTooSmall(format!(
            "support [{lo}, {hi}] must stay {margin} away from the grid edges"
        )));
    }

    let amps: Vec<Complex64> = if edge_smoothing == 0.0 {
        let count = (support_length / grid.dx()).round() as usize;
        if count == 0 {
            return Err(WavegridError::GridTooSmall(format!(
                "support length {support_length} is below the grid spacing"
            )));
        }
        let first = ((center - grid.x0()) / grid.dx() - (count as f64 - 1.0) / 2.0).round() as usize;
        (0..grid.n())
            .map(|i| {
                let on = i >= first && i < first + count;
                Complex64::new(if on { 1.0 } else { 0.0 }, 0.0)
            })
            .collect()
    } else {
        let flat = support_length / 2.0 - edge_smoothing;
        grid.coords()
            .map(|x| {
                let s = (x - center).abs();
                let profile = if s <= flat {
                    1.0
                } else if s < support_length / 2.0 {
                    0.5 * (1.0 + (PI * (s - flat) / edge_smoothing).cos())
                } else {
                    0.0
                };
                Complex64::new(profile.sqrt(), 0.0)
            })
            .collect()
    };
    PositionState::normalized(grid, amps)
}

const MAX_ATTEMPTS: usize = 64;

/// Largest component width, in units of `smoothness`.
const WIDTH_SPAN: f64 = 3.0;

/// Deterministic pseudo-random superposition of two to four Gaussian packets.
///
/// Component widths are drawn from `[smoothness, 3·smoothness]`, centres from
/// `±2·smoothness` around the middle of the grid and momentum offsets from
/// `±0.25/smoothness`. Packets overlap, so interference fringes stay coarse
/// enough for the Riemann sums in both representations. Draws
/// that leave the grid (or interfere down to nothing) are rejected and
/// redrawn from the same stream.
pub fn random_state(seed: u64, grid: Grid, smoothness: f64) -> Result<PositionState, WavegridError> {
    if !(smoothness.is_finite() && smoothness > 0.0) {
        return Err(WavegridError::GenerationFailed(format!("smoothness {smoothness} must be positive")));
    }
    if smoothness < 4.0 * grid.dx() {
        return Err(WavegridError::GenerationFailed(format!(
            "smoothness {smoothness} is below four grid spacings ({})",
            4.0 * grid.dx()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let center_span = 2.0 * smoothness;
    let shift_span = 0.25 / smoothness;
    let mut last_err = None;
    for _ in 0..MAX_ATTEMPTS {
        let components = rng.random_range(2..=4usize);
        let mut amps = vec![Complex64::new(0.0, 0.0); grid.n()];
        for _ in 0..components {
            let sigma = smoothness * WIDTH_SPAN.powf(rng.random::<f64>());
            let center = grid.middle() + center_span * rng.random_range(-1.0..1.0);
            let shift = shift_span * rng.random_range(-1.0..1.0);
            let coeff = Complex64::from_polar(rng.random_range(0.5..1.0), TAU * rng.random::<f64>());
            for (a, x) in amps.iter_mut().zip(grid.coords()) {
                *a += coeff * gaussian_amplitude(x, center, sigma, shift);
            }
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>() * grid.dx();
        if norm < 1e-6 {
            continue;
        }
        match PositionState::normalized(grid, amps).and_then(|s| check_momentum_fit(&s).map(|_| s)) {
            Ok(state) => return Ok(state),
            Err(e) => last_err = Some(e),
        }
    }
    Err(WavegridError::GenerationFailed(match last_err {
        Some(e) => format!("no draw fit the grid after {MAX_ATTEMPTS} attempts ({e})"),
        None => format!("no draw fit the grid after {MAX_ATTEMPTS} attempts"),
    }))
}

/// Smoothness used when the caller has no preference: 25 grid spacings, shrunk
/// on short grids so the random packets still fit.
pub fn default_smoothness(grid: &Grid) -> f64 {
    (25.0 * grid.dx()).min(grid.extent() / 160.0).max(4.0 * grid.dx())
}

/// Dilation `√a·ψ(a·x)` about `x = 0`, resampled on the same grid.
///
/// Off-grid values come from band-limited interpolation through the momentum
/// representation; points mapped outside the grid are taken as zero.
pub fn scale_state(state: &PositionState, a: f64) -> Result<PositionState, WavegridError> {
    if !(a.is_finite() && a > 0.0) {
        return Err(WavegridError::InvalidScale(a));
    }
    if a == 1.0 {
        return Ok(state.clone());
    }
    let grid = *state.grid();
    let momentum = to_momentum(state);
    let root = a.sqrt();
    let amps = grid
        .coords()
        .map(|x| {
            let y = a * x;
            if y < grid.x0() || y > grid.last() {
                Complex64::new(0.0, 0.0)
            } else {
                evaluate_at(&momentum, y) * root
            }
        })
        .collect();
    let scaled = PositionState::normalized(grid, amps).map_err(|e| match e {
        WavegridError::NotNormalized(n) => WavegridError::GridTooSmall(format!("scaled state lost its norm ({n:e})")),
        other => other,
    })?;
    check_momentum_fit(&scaled)?;
    Ok(scaled)
}

/// Parameters for [`random_state`] batches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomStateConfig {
    pub grid: Grid,
    pub smoothness: f64,
}

impl RandomStateConfig {
    pub fn new(grid: Grid) -> Self {
        Self { grid, smoothness: default_smoothness(&grid) }
    }

    pub fn generate(&self, seed: u64) -> Result<PositionState, WavegridError> {
        random_state(seed, self.grid, self.smoothness)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Grid {
        Grid::centered(4096, 0.01).unwrap()
    }

    #[test]
    fn gaussian_has_requested_width() {
        for sigma in [0.3, 1.0, 3.0] {
            let s = make_gaussian(grid(), sigma, 0.0, 0.0).unwrap();
            assert!((s.std_dev() / sigma - 1.0).abs() < 1e-3, "sigma {sigma}: {}", s.std_dev());
            assert!(s.mean().abs() < 1e-9);
        }
    }

    #[test]
    fn gaussian_momentum_width() {
        let s = make_gaussian(grid(), 1.0, 0.0, 0.0).unwrap();
        let m = to_momentum(&s);
        let expected = 1.0 / (4.0 * PI);
        assert!((m.std_dev() / expected - 1.0).abs() < 1e-3);
    }

    #[test]
    fn gaussian_errors() {
        assert_eq!(make_gaussian(grid(), 0.0, 0.0, 0.0), Err(WavegridError::NonPositiveSigma(0.0)));
        assert!(matches!(make_gaussian(grid(), -1.0, 0.0, 0.0), Err(WavegridError::NonPositiveSigma(_))));
        assert!(matches!(make_gaussian(grid(), 5.0, 0.0, 0.0), Err(WavegridError::GridTooSmall(_))));
        assert!(matches!(make_gaussian(grid(), 1.0, 30.0, 0.0), Err(WavegridError::GridTooSmall(_))));
        // 1e-3 is a tenth of a grid spacing: the momentum density overflows the conjugate grid
        assert!(matches!(make_gaussian(grid(), 1e-3, 0.0, 0.0), Err(WavegridError::GridTooSmall(_))));
        assert!(matches!(make_gaussian(grid(), 1.0, 0.0, 49.0), Err(WavegridError::GridTooSmall(_))));
    }

    #[test]
    fn uniform_block_is_flat() {
        let s = make_uniform(grid(), 2.0, 0.0, 0.0).unwrap();
        let d = s.density();
        let on: Vec<_> = d.iter().filter(|&&v| v > 0.0).collect();
        assert_eq!(on.len(), 200);
        assert!(on.iter().all(|&&v| (v - 0.5).abs() < 1e-12));
    }

    #[test]
    fn uniform_errors() {
        assert!(matches!(make_uniform(grid(), 2.0, 0.0, 0.5), Err(WavegridError::InvalidSmoothing(_))));
        assert!(matches!(make_uniform(grid(), 2.0, 0.0, -0.1), Err(WavegridError::InvalidSmoothing(_))));
        assert!(matches!(make_uniform(grid(), 40.0, 0.0, 0.0), Err(WavegridError::GridTooSmall(_))));
        assert!(matches!(make_uniform(grid(), 2.0, 18.0, 0.0), Err(WavegridError::GridTooSmall(_))));
        assert!(matches!(make_uniform(grid(), 0.001, 0.0, 0.0), Err(WavegridError::GridTooSmall(_))));
    }

    #[test]
    fn random_state_is_deterministic() {
        let a = random_state(1, grid(), 0.25).unwrap();
        let b = random_state(1, grid(), 0.25).unwrap();
        assert_eq!(a, b);
        let c = random_state(2, grid(), 0.25).unwrap();
        let l1: f64 = a.density().iter().zip(c.density()).map(|(p, q)| (p - q).abs()).sum::<f64>() * grid().dx();
        assert!(l1 > 1e-3);
    }

    #[test]
    fn random_state_rejects_unresolved_smoothness() {
        assert!(matches!(random_state(1, grid(), 0.01), Err(WavegridError::GenerationFailed(_))));
        assert!(matches!(random_state(1, grid(), -1.0), Err(WavegridError::GenerationFailed(_))));
        assert!(matches!(random_state(1, grid(), 10.0), Err(WavegridError::GenerationFailed(_))));
    }

    #[test]
    fn default_smoothness_on_short_grid() {
        let g = Grid::centered(256, 0.01).unwrap();
        let s = default_smoothness(&g);
        for seed in 0..20 {
            random_state(seed, g, s).unwrap();
        }
        assert_eq!(default_smoothness(&grid()), 0.25);
    }

    #[test]
    fn scale_identity_and_gaussian() {
        let s = make_gaussian(grid(), 1.0, 0.0, 0.0).unwrap();
        assert_eq!(scale_state(&s, 1.0).unwrap(), s);
        let half = scale_state(&s, 2.0).unwrap();
        let direct = make_gaussian(grid(), 0.5, 0.0, 0.0).unwrap();
        let err = half.amplitudes().iter().zip(direct.amplitudes()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        assert!(err < 1e-10, "{err}");
        assert!(matches!(scale_state(&s, 0.1), Err(WavegridError::GridTooSmall(_))));
        assert!(matches!(scale_state(&s, 0.0), Err(WavegridError::InvalidScale(_))));
    }
}
