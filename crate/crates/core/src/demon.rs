//! Can a demon sort molecules by momentum?
//!
//! The trap door must be about as narrow as the thermal position spread,
//! `d = h/(4π·p_rms)` with `p_rms = √(3mkT)`. Measuring the momentum with a
//! photon of energy `hν` leaves the molecule spread over
//! `σ_x = h/(4π·√(m·hν))`. Sorting needs `σ_x ≤ d`, i.e.
//! `√(3kT/hν) ≤ 1`, which fails for every photon soft enough to measure
//! momentum accurately.
//!
//! The `~` relations behind these estimates are order-of-magnitude; they are
//! evaluated here as equalities with the `4π` factors as written.

use std::f64::consts::PI;

use serde::Serialize;
use thiserror::Error;

use crate::constants::{BOLTZMANN, PLANCK};

/// `hν` below this fraction of `kT` counts as a low-energy photon.
pub const LOW_ENERGY_FRACTION: f64 = 0.1;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DemonError {
    #[error("{name} must be positive and finite, got {value}")]
    NonPositiveInput { name: &'static str, value: f64 },
    #[error("photon-energy sweep needs at least one fraction")]
    EmptySweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constants {
    /// Planck constant (J·s).
    pub h: f64,
    /// Boltzmann constant (J/K).
    pub k_b: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Self { h: PLANCK, k_b: BOLTZMANN }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DemonParams {
    /// Molecule mass (kg).
    pub mass: f64,
    /// Gas temperature (K).
    pub temperature: f64,
    /// Energy of the probing photon (J).
    pub photon_energy: f64,
    pub constants: Constants,
}

impl DemonParams {
    pub fn new(mass: f64, temperature: f64, photon_energy: f64) -> Self {
        Self { mass, temperature, photon_energy, constants: Constants::default() }
    }

    /// Parameters with `hν = fraction·k_B·T`.
    pub fn with_photon_fraction(mass: f64, temperature: f64, fraction: f64) -> Self {
        let constants = Constants::default();
        Self { mass, temperature, photon_energy: fraction * constants.k_b * temperature, constants }
    }

    /// `k_B·T`, computed the same way for every caller so `hν = 3kT` lands exactly on the boundary.
    fn thermal_energy(&self, factor: f64) -> f64 {
        factor * self.constants.k_b * self.temperature
    }

    fn validate(&self) -> Result<(), DemonError> {
        let fields = [
            ("mass", self.mass),
            ("temperature", self.temperature),
            ("photon_energy", self.photon_energy),
            ("h", self.constants.h),
            ("k_b", self.constants.k_b),
        ];
        for (name, value) in fields {
            if !(value.is_finite() && value > 0.0) {
                return Err(DemonError::NonPositiveInput { name, value });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DemonReport {
    /// `√(3mkT)` (kg·m/s).
    pub p_rms: f64,
    /// Thermal momentum spread, taken equal to `p_rms`.
    pub sigma_p: f64,
    /// Door width `h/(4π·σ_p)` (m).
    pub door_width: f64,
    /// Position spread after the momentum measurement (m).
    pub sigma_x_after: f64,
    /// `sigma_x_after / door_width`.
    pub ratio: f64,
    pub sorting_feasible: bool,
    /// `hν < kT/10`: the regime where the momentum measurement is accurate.
    pub low_energy_photon: bool,
}

impl DemonReport {
    /// Closed form of the ratio, `√(3kT/hν)`.
    pub fn closed_form_ratio(params: &DemonParams) -> f64 {
        (params.thermal_energy(3.0) / params.photon_energy).sqrt()
    }
}

pub fn demon_feasibility(params: &DemonParams) -> Result<DemonReport, DemonError> {
    params.validate()?;
    let h = params.constants.h;
    let p_rms = (params.mass * params.thermal_energy(3.0)).sqrt();
    let sigma_p = p_rms;
    let door_width = h / (4.0 * PI * sigma_p);
    let sigma_x_after = h / (4.0 * PI * (params.mass * params.photon_energy).sqrt());
    let ratio = sigma_x_after / door_width;
    Ok(DemonReport {
        p_rms,
        sigma_p,
        door_width,
        sigma_x_after,
        ratio,
        sorting_feasible: ratio <= 1.0,
        low_energy_photon: params.photon_energy < params.thermal_energy(LOW_ENERGY_FRACTION),
    })
}

/// One report per photon energy `f·k_B·T`, in the order given.
pub fn sweep_photon_energy(base: &DemonParams, fractions: &[f64]) -> Result<Vec<DemonReport>, DemonError> {
    if fractions.is_empty() {
        return Err(DemonError::EmptySweep);
    }
    fractions
        .iter()
        .map(|&f| {
            if !(f.is_finite() && f > 0.0) {
                return Err(DemonError::NonPositiveInput { name: "photon fraction", value: f });
            }
            let params = DemonParams { photon_energy: base.thermal_energy(f), ..*base };
            demon_feasibility(&params)
        })
        .collect()
}
