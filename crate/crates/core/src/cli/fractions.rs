use thiserror::Error;

/// Upper limit on sweep length, so a hostile argument cannot allocate without bound.
pub const MAX_FRACTIONS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FractionListError {
    #[error("fraction list is empty")]
    Empty,
    #[error("item {index} is empty")]
    EmptyItem { index: usize },
    #[error("item {index} (`{text}`) is not a number")]
    NotANumber { index: usize, text: String },
    #[error("item {index} ({value}) must be positive and finite")]
    NonPositive { index: usize, value: f64 },
    #[error("more than {MAX_FRACTIONS} fractions")]
    TooMany,
}

/// Parses `0.01,0.25,1` into photon-energy fractions of `kT`.
pub fn parse_fraction_list(text: &str) -> Result<Vec<f64>, FractionListError> {
    if text.trim().is_empty() {
        return Err(FractionListError::Empty);
    }
    let mut out = Vec::new();
    for (index, item) in text.split(',').enumerate() {
        if index >= MAX_FRACTIONS {
            return Err(FractionListError::TooMany);
        }
        let item = item.trim();
        if item.is_empty() {
            return Err(FractionListError::EmptyItem { index });
        }
        let value: f64 = item.parse().map_err(|_| FractionListError::NotANumber { index, text: item.to_string() })?;
        if !(value.is_finite() && value > 0.0) {
            return Err(FractionListError::NonPositive { index, value });
        }
        out.push(value);
    }
    Ok(out)
}
