//! Joint position/momentum information of single-particle wavefunctions and
//! the thermodynamic bookkeeping that goes with reducing it.
//!
//! The crate is split along the same lines as the physics:
//!
//! * [`wavegrid`] holds pure states sampled on a uniform grid together with
//!   the unitary transform to momentum space (kernel `e^{-2πipx}`, `h = 1`).
//! * [`entropy`] computes differential entropies and the joint information
//!   `L = H_x + H_p`, checked against the lower bound `ln(e/2)`.
//! * [`analytic`] provides closed forms used as independent oracles.
//! * [`thermo`] produces work/heat/entropy ledgers for compression, memory
//!   resets and position measurements.
//! * [`demon`] evaluates whether a momentum-sorting demon can fit a measured
//!   molecule through its door.
//! * [`cli`] is the command-line front end.

pub mod analytic;
pub mod cli;
pub mod constants;
pub mod demon;
pub mod entropy;
pub mod format;
pub mod thermo;
pub mod wavegrid;

pub use entropy::{joint_information, EntropyReport};
pub use thermo::ThermoLedger;
pub use wavegrid::{Grid, MomentumState, PositionState};
