//! Plain-text serialization of position states.
//!
//! ```text
//! # optional comment lines
//! n 4096
//! dx 1e-2
//! x0 -2.048e1
//! <re> <im>        (exactly n sample lines)
//! ```
//!
//! The three header keys may come in any order but must all precede the
//! samples. Numbers are written in shortest round-trip form, so
//! `parse_state(&write_state(s))` reproduces `s` bit for bit.

use std::fmt::Write as _;

use num_complex::Complex64;
use thiserror::Error;

use super::{Grid, PositionState, WavegridError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseStateError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header field `{0}`")]
    MissingHeader(&'static str),
    #[error("expected {expected} samples, found {found}")]
    SampleCount { expected: usize, found: usize },
    #[error(transparent)]
    Invalid(#[from] WavegridError),
}

pub fn write_state(state: &PositionState) -> String {
    let g = state.grid();
    let mut out = String::with_capacity(48 * g.n() + 64);
    let _ = writeln!(out, "n {}", g.n());
    let _ = writeln!(out, "dx {:e}", g.dx());
    let _ = writeln!(out, "x0 {:e}", g.x0());
    for a in state.amplitudes() {
        let _ = writeln!(out, "{:e} {:e}", a.re, a.im);
    }
    out
}

fn syntax(line: usize, message: impl Into<String>) -> ParseStateError {
    ParseStateError::Syntax { line, message: message.into() }
}

fn parse_real(token: &str, line: usize) -> Result<f64, ParseStateError> {
    let v: f64 = token.parse().map_err(|_| syntax(line, format!("`{token}` is not a number")))?;
    if !v.is_finite() {
        return Err(syntax(line, format!("`{token}` is not finite")));
    }
    Ok(v)
}

/// Parses and validates a state written by [`write_state`].
pub fn parse_state(text: &str) -> Result<PositionState, ParseStateError> {
    let mut n = None;
    let mut dx = None;
    let mut x0 = None;
    let mut samples: Vec<Complex64> = Vec::new();
    let mut grid: Option<Grid> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut tokens = body.split_whitespace();
        let (first, second) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(syntax(line, "expected exactly two fields")),
        };
        if let Some(g) = grid {
            if samples.len() == g.n() {
                return Err(ParseStateError::SampleCount { expected: g.n(), found: g.n() + 1 });
            }
            samples.push(Complex64::new(parse_real(first, line)?, parse_real(second, line)?));
            continue;
        }
        match first {
            "n" => {
                if n.is_some() {
                    return Err(syntax(line, "duplicate `n`"));
                }
                n = Some(second.parse::<usize>().map_err(|_| syntax(line, "`n` must be an integer"))?);
            }
            "dx" => {
                if dx.is_some() {
                    return Err(syntax(line, "duplicate `dx`"));
                }
                dx = Some(parse_real(second, line)?);
            }
            "x0" => {
                if x0.is_some() {
                    return Err(syntax(line, "duplicate `x0`"));
                }
                x0 = Some(parse_real(second, line)?);
            }
            _ => return Err(syntax(line, format!("sample before header is complete (`{first}`)"))),
        }
        if let (Some(n), Some(dx), Some(x0)) = (n, dx, x0) {
            grid = Some(Grid::new(n, dx, x0)?);
        }
    }

    let grid = match grid {
        Some(g) => g,
        None if n.is_none() => return Err(ParseStateError::MissingHeader("n")),
        None if dx.is_none() => return Err(ParseStateError::MissingHeader("dx")),
        None => return Err(ParseStateError::MissingHeader("x0")),
    };
    if samples.len() != grid.n() {
        return Err(ParseStateError::SampleCount { expected: grid.n(), found: samples.len() });
    }
    Ok(PositionState::new(grid, samples)?)
}
