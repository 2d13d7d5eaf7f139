//! Flat `key = value` configuration files and command-line overrides.

use bowley_core::dynamics::EconomyParams;

use crate::CliError;

/// One `key = value` line with its 1-based line number.
#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub line: usize,
    pub key: String,
    pub value: String,
}

/// A non-entry line that the caller handles itself, such as `[sector]`.
#[derive(Debug, Clone, PartialEq)]
pub enum Line {
    Entry(Entry),
    Section { line: usize, name: String },
}

/// Splits a config file into entries and section headers. Blank lines and
/// lines starting with `#` are skipped.
pub fn parse_lines(text: &str) -> Result<Vec<Line>, CliError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(name) = trimmed.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            out.push(Line::Section {
                line,
                name: name.trim().to_string(),
            });
            continue;
        }
        out.push(Line::Entry(parse_entry(trimmed, line)?));
    }
    Ok(out)
}

pub fn parse_entry(text: &str, line: usize) -> Result<Entry, CliError> {
    let (key, value) = text.split_once('=').ok_or_else(|| {
        CliError::Input(format!("line {line}: expected key = value, got {text:?}"))
    })?;
    let key = key.trim();
    if key.is_empty() {
        return Err(CliError::Input(format!("line {line}: empty key")));
    }
    Ok(Entry {
        line,
        key: key.to_string(),
        value: value.trim().to_string(),
    })
}

pub fn parse_f64(entry: &Entry) -> Result<f64, CliError> {
    entry
        .value
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| {
            CliError::Input(format!(
                "line {}: {} = {:?} is not a finite number",
                entry.line, entry.key, entry.value
            ))
        })
}

/// Parameter names accepted by `simulate` and `sweep`.
pub const ECONOMY_KEYS: [&str; 7] = ["e", "r", "omega", "w0", "dt", "max_steps", "tol"];

/// Applies one override to the simulation parameters. Unknown keys are errors.
pub fn apply_economy(params: &mut EconomyParams, entry: &Entry) -> Result<(), CliError> {
    match entry.key.as_str() {
        "e" => params.wage_bill = parse_f64(entry)?,
        "r" => params.profit_rate = parse_f64(entry)?,
        "omega" => params.consumption_rate = parse_f64(entry)?,
        "w0" => params.initial_wealth = parse_f64(entry)?,
        "dt" => params.step = parse_f64(entry)?,
        "tol" => params.convergence_tol = parse_f64(entry)?,
        "max_steps" => {
            params.max_steps = entry.value.parse().map_err(|_| {
                CliError::Input(format!(
                    "line {}: max_steps = {:?} is not a non-negative integer",
                    entry.line, entry.value
                ))
            })?
        }
        other => {
            return Err(CliError::Input(format!(
                "line {}: unknown parameter {other:?} (known: {})",
                entry.line,
                ECONOMY_KEYS.join(", ")
            )))
        }
    }
    Ok(())
}
