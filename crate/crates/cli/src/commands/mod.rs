pub mod empirical;
pub mod identities;
pub mod sectors;
pub mod simulate;
pub mod sweep;

use std::path::PathBuf;

use bowley_core::dynamics::EconomyParams;

use crate::config::{apply_economy, parse_entry, parse_lines, Line};
use crate::render::read_file;
use crate::CliError;

/// Builds simulation parameters from defaults, then an optional config file,
/// then `key=value` overrides, in that order. `extra` receives config keys
/// that are not simulation parameters and returns whether it consumed them.
pub(crate) fn economy_params(
    config: Option<&PathBuf>,
    overrides: &[String],
    mut extra: impl FnMut(&crate::config::Entry) -> Result<bool, CliError>,
) -> Result<EconomyParams, CliError> {
    let mut params = EconomyParams::default();
    if let Some(path) = config {
        let text = read_file(path)?;
        for line in parse_lines(&text)? {
            match line {
                Line::Entry(entry) => {
                    if !extra(&entry)? {
                        apply_economy(&mut params, &entry)?;
                    }
                }
                Line::Section { line, name } => {
                    return Err(CliError::Input(format!(
                        "{}: line {line}: unexpected section [{name}]",
                        path.display()
                    )))
                }
            }
        }
    }
    for text in overrides {
        let entry = parse_entry(text, 0)
            .map_err(|_| CliError::Input(format!("override {text:?}: expected key=value")))?;
        if !extra(&entry)? {
            apply_economy(&mut params, &entry)
                .map_err(|_| CliError::Input(format!("override {text:?}: unknown key or bad value")))?;
        }
    }
    Ok(params)
}
