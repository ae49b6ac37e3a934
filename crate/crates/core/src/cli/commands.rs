use serde::Serialize;
use serde_json::json;

use super::{
    parse_fraction_list, render, CliError, DemonArgs, EntropyArgs, EraseArgs, EraseMode, GridArgs, MeasureArgs,
    Outcome, OutputEnvelope, OutputFormat, StateKind, UncertaintyArgs, Units, EXIT_BOUND_VIOLATED, EXIT_OK,
};
use crate::constants::BOLTZMANN;
use crate::demon::{demon_feasibility, sweep_photon_energy, DemonError, DemonParams, DemonReport};
use crate::entropy::{joint_information, thermodynamic_entropy, EntropyReport, JOINT_BOUND};
use crate::format;
use crate::thermo::{
    evaluate_reset, measurement_ledger, verify_measurement_to, MeasurementCheck, MeasurementLedger, MemoryScenario,
    ResetMode, ThermoError,
};
use crate::wavegrid::{default_smoothness, make_gaussian, make_uniform, random_state, to_momentum, Grid};

fn grid(args: &GridArgs) -> Result<Grid, CliError> {
    Grid::centered(args.n, args.dx).map_err(|e| CliError::usage(e.to_string()))
}

fn check_tolerance(tol: f64) -> Result<(), CliError> {
    if tol.is_finite() && tol >= 0.0 {
        Ok(())
    } else {
        Err(CliError::usage(format!("--bound-tolerance must be non-negative, got {tol}")))
    }
}

fn positive(name: &str, v: Option<f64>) -> Result<f64, CliError> {
    match v {
        None => Err(CliError::usage(format!("--{name} is required for this state"))),
        Some(x) if x.is_finite() && x > 0.0 => Ok(x),
        Some(x) => Err(CliError::usage(format!("--{name} must be positive, got {x}"))),
    }
}

fn finished<R: Serialize>(
    envelope: OutputEnvelope<R>,
    format: OutputFormat,
    digits: usize,
) -> Result<Outcome, CliError> {
    Ok(Outcome { stdout: render(&envelope, format, digits)?, code: EXIT_OK, diagnostic: None })
}

#[derive(Debug, Serialize)]
struct EntropyResults {
    #[serde(flatten)]
    report: EntropyReport,
    /// `k·H_p` with `k = 1`.
    thermodynamic_entropy: f64,
    sigma_x: f64,
    sigma_p: f64,
}

pub(super) fn entropy(a: &EntropyArgs, digits: usize) -> Result<Outcome, CliError> {
    let grid = grid(&a.grid)?;
    check_tolerance(a.bound_tolerance)?;
    let mut inputs = json!({ "state": a.state });
    let state = match a.state {
        StateKind::Gaussian => {
            let sigma = a.sigma.ok_or_else(|| CliError::usage("--sigma is required for --state gaussian"))?;
            inputs["sigma"] = json!(sigma);
            inputs["center"] = json!(a.center);
            inputs["momentum_shift"] = json!(a.momentum_shift);
            make_gaussian(grid, sigma, a.center, a.momentum_shift)?
        }
        StateKind::Uniform => {
            let length = positive("length", a.length)?;
            inputs["length"] = json!(length);
            inputs["center"] = json!(a.center);
            inputs["smoothing"] = json!(a.smoothing);
            make_uniform(grid, length, a.center, a.smoothing)?
        }
        StateKind::Random => {
            let smoothness = match a.smoothness {
                Some(s) => s,
                None => default_smoothness(&grid),
            };
            inputs["seed"] = json!(a.seed);
            inputs["smoothness"] = json!(smoothness);
            random_state(a.seed, grid, smoothness)?
        }
    };
    inputs["n"] = json!(grid.n());
    inputs["dx"] = json!(grid.dx());
    inputs["x0"] = json!(grid.x0());
    inputs["bound_tolerance"] = json!(a.bound_tolerance);

    let mut report = joint_information(&state).map_err(|e| CliError::precondition(e.to_string()))?;
    report.bound_satisfied = report.margin >= -a.bound_tolerance;
    let momentum = to_momentum(&state);
    let s = thermodynamic_entropy(&momentum, 1.0).map_err(|e| CliError::precondition(e.to_string()))?;
    let results =
        EntropyResults { report, thermodynamic_entropy: s, sigma_x: state.std_dev(), sigma_p: momentum.std_dev() };
    let envelope = OutputEnvelope { command: "entropy", inputs, results, units: Units::NaturalH1 };
    let mut outcome = finished(envelope, a.format, digits)?;
    if !report.bound_satisfied {
        outcome.code = EXIT_BOUND_VIOLATED;
        outcome.diagnostic = Some(format!(
            "joint information {} is below the bound {} by more than {}",
            report.i_o, report.bound, a.bound_tolerance
        ));
    }
    Ok(outcome)
}

pub(super) fn erase(a: &EraseArgs, digits: usize) -> Result<Outcome, CliError> {
    let mode = match a.mode {
        EraseMode::Ontic => ResetMode::OnticSpread,
        EraseMode::EpistemicLeft => ResetMode::EpistemicLeft,
        EraseMode::EpistemicRight => ResetMode::EpistemicRight,
    };
    let scenario = MemoryScenario::new(mode, a.box_length, a.temperature)
        .and_then(|s| s.with_ratio(a.ratio))
        .and_then(|s| s.with_piston_force(a.piston_force))?;
    let ledger = evaluate_reset(&scenario, BOLTZMANN)?;
    let inputs = json!({
        "mode": mode,
        "temperature": a.temperature,
        "box_length": a.box_length,
        "ratio": a.ratio,
        "piston_force": a.piston_force,
        "boltzmann_k": BOLTZMANN,
    });
    finished(OutputEnvelope { command: "erase", inputs, results: ledger, units: Units::Si }, a.format, digits)
}

#[derive(Debug, Serialize)]
struct MeasureResults {
    #[serde(flatten)]
    ledger: MeasurementLedger,
    #[serde(skip_serializing_if = "Option::is_none")]
    cross_check: Option<MeasurementCheck>,
}

pub(super) fn measure(a: &MeasureArgs, digits: usize) -> Result<Outcome, CliError> {
    let ledger = measurement_ledger(a.sigma_before, a.sigma_after, a.temperature, BOLTZMANN)?;
    let mut inputs = json!({
        "sigma_before": a.sigma_before,
        "sigma_after": a.sigma_after,
        "temperature": a.temperature,
        "boltzmann_k": BOLTZMANN,
        "verify_numerically": a.verify_numerically,
    });
    let mut diagnostic = None;
    let mut code = EXIT_OK;
    let cross_check = if a.verify_numerically {
        let grid = grid(&a.grid)?;
        inputs["n"] = json!(grid.n());
        inputs["dx"] = json!(grid.dx());
        match verify_measurement_to(a.sigma_before, a.sigma_after, grid) {
            Ok(check) => Some(check),
            Err(ThermoError::MismatchBeyondTolerance(check)) => {
                let err = CliError::from(ThermoError::MismatchBeyondTolerance(check.clone()));
                code = err.code;
                diagnostic = Some(err.message);
                Some(*check)
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    let results = MeasureResults { ledger, cross_check };
    let stdout = render(&OutputEnvelope { command: "measure", inputs, results, units: Units::Si }, a.format, digits)?;
    Ok(Outcome { stdout, code, diagnostic })
}

/// Row layout of the sweep CSV.
#[derive(Debug, Serialize)]
struct DemonRow {
    p_rms: f64,
    sigma_p: f64,
    door_width: f64,
    sigma_x_after: f64,
    ratio: f64,
    feasible: bool,
}

impl From<&DemonReport> for DemonRow {
    fn from(r: &DemonReport) -> Self {
        Self {
            p_rms: r.p_rms,
            sigma_p: r.sigma_p,
            door_width: r.door_width,
            sigma_x_after: r.sigma_x_after,
            ratio: r.ratio,
            feasible: r.sorting_feasible,
        }
    }
}

fn demon_error(e: DemonError) -> CliError {
    CliError::usage(e.to_string())
}

pub(super) fn demon(a: &DemonArgs, digits: usize) -> Result<Outcome, CliError> {
    let mut inputs = json!({ "mass": a.mass, "temperature": a.temperature });
    let reports: Vec<DemonReport> = match (&a.sweep, a.photon_energy, a.photon_fraction) {
        (Some(list), None, None) => {
            let fractions = parse_fraction_list(list).map_err(|e| CliError::usage(format!("--sweep: {e}")))?;
            inputs["sweep"] = json!(fractions);
            let base = DemonParams::with_photon_fraction(a.mass, a.temperature, 1.0);
            sweep_photon_energy(&base, &fractions).map_err(demon_error)?
        }
        (None, Some(energy), None) => {
            inputs["photon_energy"] = json!(energy);
            vec![demon_feasibility(&DemonParams::new(a.mass, a.temperature, energy)).map_err(demon_error)?]
        }
        (None, None, Some(fraction)) => {
            inputs["photon_fraction"] = json!(fraction);
            let params = DemonParams::with_photon_fraction(a.mass, a.temperature, fraction);
            if !(fraction.is_finite() && fraction > 0.0) {
                return Err(CliError::usage(format!("--photon-fraction must be positive, got {fraction}")));
            }
            vec![demon_feasibility(&params).map_err(demon_error)?]
        }
        _ => return Err(CliError::usage("exactly one of --photon-energy, --photon-fraction or --sweep is required")),
    };
    let sweep = a.sweep.is_some();
    let format = a.format.unwrap_or(if sweep { OutputFormat::Csv } else { OutputFormat::Json });
    if format == OutputFormat::Csv {
        let rows: Vec<DemonRow> = reports.iter().map(DemonRow::from).collect();
        let stdout = format::to_csv(&rows, digits)
            .map_err(|e| CliError { code: EXIT_BOUND_VIOLATED, message: e.to_string() })?;
        return Ok(Outcome { stdout, code: EXIT_OK, diagnostic: None });
    }
    if sweep {
        finished(OutputEnvelope { command: "demon", inputs, results: reports, units: Units::Si }, format, digits)
    } else {
        finished(OutputEnvelope { command: "demon", inputs, results: reports[0], units: Units::Si }, format, digits)
    }
}

#[derive(Debug, Serialize)]
struct UncertaintySummary {
    trials: u64,
    bound: f64,
    min_margin: f64,
    median_margin: f64,
    max_margin: f64,
    min_margin_seed: u64,
    violations: u64,
}

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    }
}

pub(super) fn uncertainty_check(a: &UncertaintyArgs, digits: usize) -> Result<Outcome, CliError> {
    if a.trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    check_tolerance(a.bound_tolerance)?;
    let grid = grid(&a.grid)?;
    let smoothness = a.smoothness.unwrap_or_else(|| default_smoothness(&grid));
    let mut margins = Vec::with_capacity(a.trials.min(1 << 20) as usize);
    let mut worst = (f64::INFINITY, a.seed);
    for i in 0..a.trials {
        let seed = a.seed.wrapping_add(i);
        let state = random_state(seed, grid, smoothness)?;
        let report = joint_information(&state).map_err(|e| CliError::precondition(e.to_string()))?;
        if report.margin < worst.0 {
            worst = (report.margin, seed);
        }
        margins.push(report.margin);
    }
    let violations = margins.iter().filter(|&&m| m < -a.bound_tolerance).count() as u64;
    margins.sort_by(f64::total_cmp);
    let summary = UncertaintySummary {
        trials: a.trials,
        bound: JOINT_BOUND,
        min_margin: margins[0],
        median_margin: median(&margins),
        max_margin: margins[margins.len() - 1],
        min_margin_seed: worst.1,
        violations,
    };
    let inputs = json!({
        "trials": a.trials,
        "seed": a.seed,
        "n": grid.n(),
        "dx": grid.dx(),
        "smoothness": smoothness,
        "bound_tolerance": a.bound_tolerance,
    });
    let envelope = OutputEnvelope { command: "uncertainty-check", inputs, results: summary, units: Units::NaturalH1 };
    let mut outcome = finished(envelope, a.format, digits)?;
    if violations > 0 {
        outcome.code = EXIT_BOUND_VIOLATED;
        outcome.diagnostic = Some(format!("{violations} of {} states fall below the bound", a.trials));
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_even_and_odd() {
        assert_eq!(median(&[1.0, 2.0, 3.0]), 2.0);
        assert_eq!(median(&[1.0, 2.0, 3.0, 5.0]), 2.5);
    }
}
