use std::f64::consts::TAU;

use num_complex::Complex64;
use rustfft::FftPlannerScalar;

use super::{Grid, MomentumState, PositionState, WavegridError};

/// `e^{sign·2πi·t}`, reducing `t` to `[-1/2, 1/2]` first so large arguments keep their precision.
fn unit_phase(t: f64, sign: f64) -> Complex64 {
    let r = t - t.round();
    Complex64::from_polar(1.0, sign * TAU * r)
}

fn alternate_sign(buffer: &mut [Complex64]) {
    buffer.iter_mut().skip(1).step_by(2).for_each(|a| *a = -*a);
}

/// Samples `φ(p_k) = ∫ψ(x)e^{-2πip_k x}dx` on the conjugate grid.
///
/// The scalar FFT planner is used so results do not depend on which SIMD
/// extensions the host CPU has.
///
/// With `x_j = x0 + j·dx` and `p_k = (k - n/2)·dp` the integral collapses to
/// `dx·e^{-2πi p_k x0}·DFT[(-1)^j ψ_j]_k`, which one forward FFT evaluates.
pub fn to_momentum(state: &PositionState) -> MomentumState {
    let grid = *state.grid();
    let n = grid.n();
    let pgrid = grid.conjugate();
    let mut buffer = state.amplitudes().to_vec();
    alternate_sign(&mut buffer);
    FftPlannerScalar::new().plan_fft_forward(n).process(&mut buffer);
    // p_k·x0 = (k - n/2)·x0/(n·dx)
    let step = grid.x0() / grid.extent();
    for (k, a) in buffer.iter_mut().enumerate() {
        let t = (k as f64 - (n / 2) as f64) * step;
        *a *= unit_phase(t, -1.0) * grid.dx();
    }
    MomentumState::from_parts(pgrid, grid.x0(), buffer)
}

/// Inverse of [`to_momentum`]: `ψ(x_j) = ∫φ(p)e^{+2πipx_j}dp` on the original position grid.
pub fn to_position(state: &MomentumState) -> Result<PositionState, WavegridError> {
    let pgrid = *state.grid();
    let n = pgrid.n();
    let dx = 1.0 / (n as f64 * pgrid.dx());
    let grid = Grid::new(n, dx, state.position_origin())?;
    let step = grid.x0() / grid.extent();
    let mut buffer: Vec<Complex64> = state
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(k, a)| a * unit_phase((k as f64 - (n / 2) as f64) * step, 1.0))
        .collect();
    FftPlannerScalar::new().plan_fft_inverse(n).process(&mut buffer);
    alternate_sign(&mut buffer);
    let dp = pgrid.dx();
    buffer.iter_mut().for_each(|a| *a *= dp);
    PositionState::new(grid, buffer)
}

/// Band-limited evaluation of `ψ(y)` from its momentum samples, for arbitrary `y`.
pub(crate) fn evaluate_at(momentum: &MomentumState, y: f64) -> Complex64 {
    const RESEED: usize = 256;
    let pgrid = momentum.grid();
    let dp = pgrid.dx();
    let step = unit_phase(dp * y, 1.0);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut phase = Complex64::new(1.0, 0.0);
    for (k, a) in momentum.amplitudes().iter().enumerate() {
        if k % RESEED == 0 {
            // p_k·y, reduced before it grows
            phase = unit_phase(pgrid.coord(k) * y, 1.0);
        }
        acc += a * phase;
        phase *= step;
    }
    acc * dp
}
