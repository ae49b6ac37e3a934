use super::WavegridError;

/// Uniform sampling `x_i = x0 + i·dx`, `i = 0..n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    n: usize,
    dx: f64,
    x0: f64,
}

impl Grid {
    pub const MIN_SAMPLES: usize = 16;

    pub fn new(n: usize, dx: f64, x0: f64) -> Result<Self, WavegridError> {
        if n < Self::MIN_SAMPLES || !n.is_power_of_two() {
            return Err(WavegridError::InvalidGrid(format!(
                "n = {n} must be a power of two and at least {}",
                Self::MIN_SAMPLES
            )));
        }
        if !(dx.is_finite() && dx > 0.0) {
            return Err(WavegridError::InvalidGrid(format!("dx = {dx} must be positive")));
        }
        if !x0.is_finite() || !(n as f64 * dx).is_finite() || !(x0 + n as f64 * dx).is_finite() {
            return Err(WavegridError::InvalidGrid("grid extent is not finite".into()));
        }
        Ok(Self { n, dx, x0 })
    }

    /// Grid of `n` samples spaced `dx`, with `x = 0` at index `n/2`.
    pub fn centered(n: usize, dx: f64) -> Result<Self, WavegridError> {
        Self::new(n, dx, -(n as f64 / 2.0) * dx)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn extent(&self) -> f64 {
        self.n as f64 * self.dx
    }

    pub fn coord(&self, i: usize) -> f64 {
        self.x0 + i as f64 * self.dx
    }

    pub fn coords(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.coord(i))
    }

    pub fn last(&self) -> f64 {
        self.coord(self.n - 1)
    }

    /// Midpoint between the first and last sample.
    pub fn middle(&self) -> f64 {
        0.5 * (self.x0 + self.last())
    }

    /// The conjugate grid: `dp = 1/(n·dx)`, centred so that `p = 0` sits at index `n/2`.
    pub fn conjugate(&self) -> Grid {
        let dp = 1.0 / (self.n as f64 * self.dx);
        Grid { n: self.n, dx: dp, x0: -(self.n as f64 / 2.0) * dp }
    }

    /// Number of samples at each end that make up the tail region.
    pub(crate) fn tail_samples(&self, fraction: f64) -> usize {
        ((self.n as f64 * fraction).ceil() as usize).max(1)
    }
}
