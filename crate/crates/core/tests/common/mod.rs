#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

/// Documented invocations, keyed by golden-file name.
pub const INVOCATIONS: &[(&str, &[&str])] = &[
    ("entropy_gaussian", &["entropy", "--state", "gaussian", "--sigma", "1", "--n", "4096", "--dx", "0.01"]),
    ("entropy_uniform", &["entropy", "--state", "uniform", "--length", "2", "--n", "4096", "--dx", "0.01"]),
    ("entropy_negative_sigma", &["entropy", "--state", "gaussian", "--sigma", "-1"]),
    ("entropy_random_csv", &["entropy", "--state", "random", "--seed", "7", "--format", "csv"]),
    (
        "entropy_smoothed_table",
        &["entropy", "--state", "uniform", "--length", "2", "--smoothing", "0.1", "--format", "table"],
    ),
    ("erase_ontic", &["erase", "--mode", "ontic", "--temperature", "300", "--ratio", "2"]),
    ("erase_epistemic_left", &["erase", "--mode", "epistemic-left", "--temperature", "300"]),
    ("erase_epistemic_right", &["erase", "--mode", "epistemic-right", "--temperature", "300"]),
    ("measure_halving", &["measure", "--sigma-before", "1", "--sigma-after", "0.5", "--temperature", "300"]),
    ("measure_no_reduction", &["measure", "--sigma-before", "1", "--sigma-after", "1"]),
    (
        "measure_verify",
        &[
            "measure",
            "--sigma-before",
            "1",
            "--sigma-after",
            "0.5",
            "--temperature",
            "300",
            "--verify-numerically",
            "--n",
            "4096",
            "--dx",
            "0.01",
        ],
    ),
    ("demon_soft_photon", &["demon", "--mass", "6.6335e-26", "--temperature", "300", "--photon-fraction", "0.01"]),
    ("demon_boundary", &["demon", "--mass", "6.6335e-26", "--temperature", "300", "--photon-fraction", "3"]),
    ("demon_sweep", &["demon", "--mass", "6.6335e-26", "--temperature", "300", "--sweep", "0.01,0.25,1"]),
    ("uncertainty_check", &["uncertainty-check", "--trials", "100", "--seed", "42"]),
    ("uncertainty_check_no_trials", &["uncertainty-check", "--trials", "0"]),
];

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn landauer(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_landauer"))
        .args(args)
        .env_remove("LANDAUER_DIGITS")
        .output()
        .expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exit code"),
    }
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"))
}

/// Transcript stored in a golden file.
pub fn transcript(args: &[&str], run: &Run) -> String {
    format!("$ landauer {}\nexit: {}\n--- stdout\n{}--- stderr\n{}", args.join(" "), run.code, run.stdout, run.stderr)
}

/// Compares every invocation with its golden file; `LANDAUER_BLESS=1` rewrites them.
pub fn check_goldens() -> Vec<String> {
    let bless = std::env::var_os("LANDAUER_BLESS").is_some();
    let mut mismatches = Vec::new();
    for (name, args) in INVOCATIONS {
        let got = transcript(args, &landauer(args));
        let path = golden_path(name);
        if bless {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(want) if want == got => {}
            Ok(_) => mismatches.push(format!("{name}: output differs from {}", path.display())),
            Err(e) => mismatches.push(format!("{name}: {e}")),
        }
    }
    mismatches
}
