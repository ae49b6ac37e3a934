// SI constants, exact values of the 2019 SI redefinition (CODATA 2018).

/// Planck constant (J·s).
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Boltzmann constant (J/K).
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Mass of an argon-40 atom (kg), used as the reference molecule in examples.
pub const ARGON_MASS: f64 = 6.6335e-26;
