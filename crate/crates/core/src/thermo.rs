//! Work, heat and entropy bookkeeping for isothermal single-molecule processes.
//!
//! All quantities are SI. Processes are evaluated in the reversible limit, so
//! compression ledgers report `delta_s_total = 0`; a physical process only
//! satisfies `delta_s_total ≥ 0`.

use serde::Serialize;
use thiserror::Error;

use crate::entropy::{joint_information, EntropyError};
use crate::wavegrid::{make_gaussian, measure_position, window_sigma_for_target, Grid, WavegridError, Window};

/// Relative tolerance for the grid cross-check in [`verify_measurement_numerically`].
pub const MEASUREMENT_TOLERANCE: f64 = 1e-2;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ThermoError {
    #[error("volumes must satisfy 0 < v_final <= v_initial, got {v_initial} -> {v_final}")]
    InvalidVolumes { v_initial: f64, v_final: f64 },
    #[error("temperature must be positive, got {0} K")]
    NonPositiveTemperature(f64),
    #[error("Boltzmann constant must be positive, got {0}")]
    NonPositiveConstant(f64),
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
    #[error("measurement must strictly reduce the spread: {sigma_before} -> {sigma_after}")]
    InvalidSigmas { sigma_before: f64, sigma_after: f64 },
    #[error("ledgers at different temperatures cannot be composed ({0} K vs {1} K)")]
    TemperatureMismatch(f64, f64),
    #[error(transparent)]
    Wavegrid(#[from] WavegridError),
    #[error(transparent)]
    Entropy(#[from] EntropyError),
    #[error(
        "grid entropies disagree with the closed form: dH_x off by {:.3e}, dH_p off by {:.3e} (relative)",
        .0.rel_error_h_x, .0.rel_error_h_p
    )]
    MismatchBeyondTolerance(Box<MeasurementCheck>),
}

fn check_temperature(t: f64) -> Result<(), ThermoError> {
    if t.is_finite() && t > 0.0 {
        Ok(())
    } else {
        Err(ThermoError::NonPositiveTemperature(t))
    }
}

fn check_constant(k: f64) -> Result<(), ThermoError> {
    if k.is_finite() && k > 0.0 {
        Ok(())
    } else {
        Err(ThermoError::NonPositiveConstant(k))
    }
}

/// Energy and entropy changes of one isothermal process.
///
/// `heat_to_bath` is positive when energy leaves the system. For measurement
/// ledgers it carries the minimum detection energy delivered by the probe.
/// `translation_energy` is the `F·Δx` spent moving the molecule without
/// changing its accessible volume; it is reported separately and never
/// enters `delta_f`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThermoLedger {
    pub work_on_system: f64,
    pub heat_to_bath: f64,
    pub delta_f: f64,
    pub delta_s_system: f64,
    pub delta_s_bath: f64,
    pub delta_s_total: f64,
    pub translation_energy: f64,
    pub temperature: f64,
}

impl ThermoLedger {
    pub fn zero(temperature: f64) -> Self {
        Self {
            work_on_system: 0.0,
            heat_to_bath: 0.0,
            delta_f: 0.0,
            delta_s_system: 0.0,
            delta_s_bath: 0.0,
            delta_s_total: 0.0,
            translation_energy: 0.0,
            temperature,
        }
    }

    /// Ledger of `self` followed by `next` at the same temperature.
    pub fn then(&self, next: &ThermoLedger) -> Result<ThermoLedger, ThermoError> {
        if self.temperature != next.temperature {
            return Err(ThermoError::TemperatureMismatch(self.temperature, next.temperature));
        }
        let delta_s_system = self.delta_s_system + next.delta_s_system;
        let delta_s_bath = self.delta_s_bath + next.delta_s_bath;
        Ok(Self {
            work_on_system: self.work_on_system + next.work_on_system,
            heat_to_bath: self.heat_to_bath + next.heat_to_bath,
            delta_f: self.delta_f + next.delta_f,
            delta_s_system,
            delta_s_bath,
            delta_s_total: delta_s_system + delta_s_bath,
            translation_energy: self.translation_energy + next.translation_energy,
            temperature: self.temperature,
        })
    }
}

/// Reversible isothermal compression of a one-molecule ideal gas, `p = kT/V`.
///
/// `W = ∫p dV = kT·ln(V_i/V_f)` is done on the gas and leaves as heat since
/// `dE = 0`. Halving the volume costs `kT·ln 2`.
pub fn isothermal_compression_ledger(
    v_initial: f64,
    v_final: f64,
    temperature: f64,
    boltzmann_k: f64,
) -> Result<ThermoLedger, ThermoError> {
    let valid = v_initial.is_finite() && v_final.is_finite() && v_final > 0.0 && v_final <= v_initial;
    if !valid {
        return Err(ThermoError::InvalidVolumes { v_initial, v_final });
    }
    check_temperature(temperature)?;
    check_constant(boltzmann_k)?;
    let log_ratio = (v_initial / v_final).ln();
    let work = boltzmann_k * temperature * log_ratio;
    let delta_s_system = -(boltzmann_k * log_ratio);
    let delta_s_bath = boltzmann_k * log_ratio;
    Ok(ThermoLedger {
        work_on_system: work,
        heat_to_bath: work,
        delta_f: work,
        delta_s_system,
        delta_s_bath,
        delta_s_total: delta_s_system + delta_s_bath,
        translation_energy: 0.0,
        temperature,
    })
}

/// What the molecule in the memory box is taken to be doing before the reset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResetMode {
    /// No fact of the matter about L/R: the state spreads over the whole box.
    OnticSpread,
    /// The molecule is in the left half; the piston never touches it.
    EpistemicLeft,
    /// The molecule is in the right half and gets pushed into the left half.
    EpistemicRight,
}

/// A box-and-piston memory reset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MemoryScenario {
    pub mode: ResetMode,
    /// Box length (m); the one-dimensional volume.
    pub box_length: f64,
    /// Temperature (K).
    pub temperature: f64,
    /// `V_i/V_f` for the ontic compression.
    pub compression_ratio: f64,
    /// Force (N) the piston exerts while pushing an R molecule across half the box.
    pub piston_force: f64,
}

impl MemoryScenario {
    pub fn new(mode: ResetMode, box_length: f64, temperature: f64) -> Result<Self, ThermoError> {
        Self { mode, box_length, temperature, compression_ratio: 2.0, piston_force: 0.0 }.validated()
    }

    pub fn with_ratio(mut self, compression_ratio: f64) -> Result<Self, ThermoError> {
        self.compression_ratio = compression_ratio;
        self.validated()
    }

    pub fn with_piston_force(mut self, piston_force: f64) -> Result<Self, ThermoError> {
        self.piston_force = piston_force;
        self.validated()
    }

    pub fn validated(self) -> Result<Self, ThermoError> {
        if !(self.box_length.is_finite() && self.box_length > 0.0) {
            return Err(ThermoError::InvalidScenario(format!("box length must be positive, got {}", self.box_length)));
        }
        check_temperature(self.temperature)?;
        if !(self.compression_ratio.is_finite() && self.compression_ratio > 1.0) {
            return Err(ThermoError::InvalidScenario(format!(
                "compression ratio must exceed 1, got {}",
                self.compression_ratio
            )));
        }
        if !(self.piston_force.is_finite() && self.piston_force >= 0.0) {
            return Err(ThermoError::InvalidScenario(format!(
                "piston force must be non-negative, got {}",
                self.piston_force
            )));
        }
        Ok(self)
    }

    /// Length of the region the molecule actually occupies before the reset.
    pub fn occupied_length(&self) -> f64 {
        match self.mode {
            ResetMode::OnticSpread => self.box_length,
            ResetMode::EpistemicLeft | ResetMode::EpistemicRight => self.box_length / 2.0,
        }
    }
}

/// Thermodynamic cost of resetting the memory to L.
///
/// Only the ontic case compresses anything. In the epistemic cases the
/// molecule already occupies half the box and still does afterwards, so
/// `pΔV = 0`: for L the piston never touches it, for R it is translated by
/// half a box length at a cost of `piston_force·box_length/2`.
pub fn evaluate_reset(scenario: &MemoryScenario, boltzmann_k: f64) -> Result<ThermoLedger, ThermoError> {
    let scenario = scenario.validated()?;
    check_constant(boltzmann_k)?;
    match scenario.mode {
        ResetMode::OnticSpread => isothermal_compression_ledger(
            scenario.box_length,
            scenario.box_length / scenario.compression_ratio,
            scenario.temperature,
            boltzmann_k,
        ),
        ResetMode::EpistemicLeft => Ok(ThermoLedger::zero(scenario.temperature)),
        ResetMode::EpistemicRight => Ok(ThermoLedger {
            translation_energy: scenario.piston_force * scenario.box_length / 2.0,
            ..ThermoLedger::zero(scenario.temperature)
        }),
    }
}

/// Ledger of a position measurement that narrows a Gaussian from `sigma_before` to `sigma_after`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasurementLedger {
    #[serde(flatten)]
    pub ledger: ThermoLedger,
    /// Change in position information, `ln(σ_after/σ_before) < 0`.
    pub delta_i_ox: f64,
    /// Compensating change in momentum information, `-delta_i_ox`.
    pub delta_i_op: f64,
}

/// Closed-form cost of a position measurement on a minimum-uncertainty state.
///
/// The momentum information rises by exactly what the position information
/// loses, and `S = k·I_p` turns that into `ΔS = k·ln(σ_before/σ_after)`. The
/// probe has to supply at least `ΔQ = T·ΔS`. No `pΔV` work is done, so
/// `delta_f = 0`, and the bath entropy is left unchanged.
pub fn measurement_ledger(
    sigma_before: f64,
    sigma_after: f64,
    temperature: f64,
    boltzmann_k: f64,
) -> Result<MeasurementLedger, ThermoError> {
    let valid = sigma_before.is_finite() && sigma_after > 0.0 && sigma_after < sigma_before;
    if !valid {
        return Err(ThermoError::InvalidSigmas { sigma_before, sigma_after });
    }
    check_temperature(temperature)?;
    check_constant(boltzmann_k)?;
    let delta_i_ox = (sigma_after / sigma_before).ln();
    let delta_i_op = -delta_i_ox;
    let delta_s_system = boltzmann_k * delta_i_op;
    Ok(MeasurementLedger {
        ledger: ThermoLedger {
            work_on_system: 0.0,
            heat_to_bath: -temperature * boltzmann_k * delta_i_ox,
            delta_f: 0.0,
            delta_s_system,
            delta_s_bath: 0.0,
            delta_s_total: delta_s_system,
            translation_energy: 0.0,
            temperature,
        },
        delta_i_ox,
        delta_i_op,
    })
}

/// Grid entropies of a halved Gaussian compared with the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasurementCheck {
    pub sigma_before: f64,
    pub sigma_after: f64,
    pub sigma_p_before: f64,
    pub sigma_p_after: f64,
    pub delta_h_x: f64,
    pub delta_h_p: f64,
    pub expected_delta_h_x: f64,
    pub expected_delta_h_p: f64,
    pub rel_error_h_x: f64,
    pub rel_error_h_p: f64,
    pub within_tolerance: bool,
}

/// Halves a grid Gaussian with a Gaussian window and checks the entropy
/// changes against [`measurement_ledger`] to within [`MEASUREMENT_TOLERANCE`].
pub fn verify_measurement_numerically(sigma_before: f64, grid: Grid) -> Result<MeasurementCheck, ThermoError> {
    verify_measurement_to(sigma_before, sigma_before / 2.0, grid)
}

/// [`verify_measurement_numerically`] for an arbitrary target width.
pub fn verify_measurement_to(sigma_before: f64, sigma_after: f64, grid: Grid) -> Result<MeasurementCheck, ThermoError> {
    let center = grid.middle();
    let before = make_gaussian(grid, sigma_before, center, 0.0)?;
    let window_sigma = window_sigma_for_target(sigma_before, sigma_after)
        .ok_or(ThermoError::InvalidSigmas { sigma_before, sigma_after })?;
    let after = measure_position(&before, &Window::Gaussian { sigma: window_sigma, center })?;

    let r0 = joint_information(&before)?;
    let r1 = joint_information(&after)?;
    let closed = measurement_ledger(sigma_before, sigma_after, 1.0, 1.0)?;

    let delta_h_x = r1.h_x - r0.h_x;
    let delta_h_p = r1.h_p - r0.h_p;
    let rel_error_h_x = ((delta_h_x - closed.delta_i_ox) / closed.delta_i_ox).abs();
    let rel_error_h_p = ((delta_h_p - closed.delta_i_op) / closed.delta_i_op).abs();
    let check = MeasurementCheck {
        sigma_before,
        sigma_after,
        sigma_p_before: crate::wavegrid::to_momentum(&before).std_dev(),
        sigma_p_after: crate::wavegrid::to_momentum(&after).std_dev(),
        delta_h_x,
        delta_h_p,
        expected_delta_h_x: closed.delta_i_ox,
        expected_delta_h_p: closed.delta_i_op,
        rel_error_h_x,
        rel_error_h_p,
        within_tolerance: rel_error_h_x <= MEASUREMENT_TOLERANCE && rel_error_h_p <= MEASUREMENT_TOLERANCE,
    };
    if check.within_tolerance {
        Ok(check)
    } else {
        Err(ThermoError::MismatchBeyondTolerance(Box::new(check)))
    }
}
