use num_complex::Complex64;

use super::{Grid, WavegridError};

/// Allowed deviation of `Σ|ψ|²·dx` from one.
pub const NORM_TOLERANCE: f64 = 1e-10;
/// Fraction of samples at each end of the grid that form the tail region.
pub const TAIL_FRACTION: f64 = 0.05;
/// Maximum probability allowed in the two tail regions combined.
pub const TAIL_TOLERANCE: f64 = 1e-9;

/// A normalized wavefunction `ψ(x)` sampled on a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct PositionState {
    grid: Grid,
    amplitudes: Vec<Complex64>,
}

/// The momentum representation `φ(p)` of a [`PositionState`].
///
/// `grid` is the conjugate grid. The origin of the position grid is kept so
/// the inverse transform lands back on the same coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumState {
    grid: Grid,
    position_origin: f64,
    amplitudes: Vec<Complex64>,
}

fn check_samples(grid: &Grid, amplitudes: &[Complex64]) -> Result<(), WavegridError> {
    if amplitudes.len() != grid.n() {
        return Err(WavegridError::LengthMismatch { expected: grid.n(), got: amplitudes.len() });
    }
    if let Some(i) = amplitudes.iter().position(|a| !(a.re.is_finite() && a.im.is_finite())) {
        return Err(WavegridError::NonFinite(i));
    }
    Ok(())
}

fn norm_of(amplitudes: &[Complex64], spacing: f64) -> f64 {
    amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>() * spacing
}

impl PositionState {
    /// Wraps already-normalized samples, checking both state invariants.
    pub fn new(grid: Grid, amplitudes: Vec<Complex64>) -> Result<Self, WavegridError> {
        check_samples(&grid, &amplitudes)?;
        let norm = norm_of(&amplitudes, grid.dx());
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(WavegridError::NotNormalized(norm));
        }
        let state = Self { grid, amplitudes };
        let tail = state.tail_mass();
        if tail >= TAIL_TOLERANCE {
            return Err(WavegridError::GridTooSmall(format!(
                "probability {tail:e} in the outer {}% of the grid",
                TAIL_FRACTION * 100.0
            )));
        }
        Ok(state)
    }

    /// Rescales arbitrary samples to unit norm, then validates.
    pub fn normalized(grid: Grid, mut amplitudes: Vec<Complex64>) -> Result<Self, WavegridError> {
        check_samples(&grid, &amplitudes)?;
        let norm = norm_of(&amplitudes, grid.dx());
        if !(norm.is_finite() && norm > 0.0) {
            return Err(WavegridError::NotNormalized(norm));
        }
        let scale = norm.sqrt().recip();
        amplitudes.iter_mut().for_each(|a| *a *= scale);
        Self::new(grid, amplitudes)
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    /// `|ψ_i|²`.
    pub fn density(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn norm(&self) -> f64 {
        norm_of(&self.amplitudes, self.grid.dx())
    }

    pub fn tail_mass(&self) -> f64 {
        tail_mass(&self.amplitudes, &self.grid)
    }

    pub fn mean(&self) -> f64 {
        moments(&self.amplitudes, &self.grid).0
    }

    /// Standard deviation of the position density.
    pub fn std_dev(&self) -> f64 {
        moments(&self.amplitudes, &self.grid).1
    }
}

impl MomentumState {
    pub(crate) fn from_parts(grid: Grid, position_origin: f64, amplitudes: Vec<Complex64>) -> Self {
        Self { grid, position_origin, amplitudes }
    }

    /// Wraps momentum samples, checking normalization.
    pub fn new(grid: Grid, position_origin: f64, amplitudes: Vec<Complex64>) -> Result<Self, WavegridError> {
        check_samples(&grid, &amplitudes)?;
        let norm = norm_of(&amplitudes, grid.dx());
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(WavegridError::NotNormalized(norm));
        }
        Ok(Self { grid, position_origin, amplitudes })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn position_origin(&self) -> f64 {
        self.position_origin
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// `|φ_k|²`.
    pub fn density(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn norm(&self) -> f64 {
        norm_of(&self.amplitudes, self.grid.dx())
    }

    pub fn tail_mass(&self) -> f64 {
        tail_mass(&self.amplitudes, &self.grid)
    }

    pub fn mean(&self) -> f64 {
        moments(&self.amplitudes, &self.grid).0
    }

    pub fn std_dev(&self) -> f64 {
        moments(&self.amplitudes, &self.grid).1
    }
}

fn tail_mass(amplitudes: &[Complex64], grid: &Grid) -> f64 {
    let m = grid.tail_samples(TAIL_FRACTION);
    let n = amplitudes.len();
    let head: f64 = amplitudes[..m].iter().map(|a| a.norm_sqr()).sum();
    let tail: f64 = amplitudes[n - m..].iter().map(|a| a.norm_sqr()).sum();
    (head + tail) * grid.dx()
}

fn moments(amplitudes: &[Complex64], grid: &Grid) -> (f64, f64) {
    let (mut m0, mut m1) = (0.0, 0.0);
    for (x, a) in grid.coords().zip(amplitudes) {
        let w = a.norm_sqr();
        m0 += w;
        m1 += w * x;
    }
    let mean = m1 / m0;
    let var = grid.coords().zip(amplitudes).map(|(x, a)| a.norm_sqr() * (x - mean).powi(2)).sum::<f64>() / m0;
    (mean, var.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Grid {
        Grid::centered(64, 0.1).unwrap()
    }

    #[test]
    fn rejects_wrong_length_and_nan() {
        let g = grid();
        assert_eq!(
            PositionState::new(g, vec![Complex64::new(0.0, 0.0); 10]),
            Err(WavegridError::LengthMismatch { expected: 64, got: 10 })
        );
        let mut amps = vec![Complex64::new(0.0, 0.0); 64];
        amps[3] = Complex64::new(f64::NAN, 0.0);
        assert_eq!(PositionState::normalized(g, amps), Err(WavegridError::NonFinite(3)));
    }

    #[test]
    fn rejects_unnormalized_and_zero() {
        let g = grid();
        let mut amps = vec![Complex64::new(0.0, 0.0); 64];
        assert!(matches!(PositionState::normalized(g, amps.clone()), Err(WavegridError::NotNormalized(_))));
        amps[32] = Complex64::new(1.0, 0.0);
        assert!(matches!(PositionState::new(g, amps.clone()), Err(WavegridError::NotNormalized(_))));
        let s = PositionState::normalized(g, amps).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_mass_in_tails() {
        let g = grid();
        let mut amps = vec![Complex64::new(0.0, 0.0); 64];
        amps[32] = Complex64::new(1.0, 0.0);
        amps[1] = Complex64::new(1e-3, 0.0);
        assert!(matches!(PositionState::normalized(g, amps), Err(WavegridError::GridTooSmall(_))));
    }
}
