use std::fs;
use std::io::Write;
use std::path::Path;

use crate::{CliError, FormatArg};

pub type Format = FormatArg;

/// Re-lays a comma-separated table as space-aligned columns.
///
/// Every table emitted here is unquoted, so splitting on commas is exact.
pub fn render_pretty(csv: &str) -> String {
    let rows: Vec<Vec<&str>> = csv.lines().map(|l| l.split(',').collect()).collect();
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0; cols];
    for row in &rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, cell)| format!("{cell:>w$}", w = widths[i]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Writes a table to `path` as CSV, or to `stdout` in the requested format.
pub fn emit_table(
    csv: &str,
    path: Option<&Path>,
    format: Format,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, csv).map_err(|source| CliError::File {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            match format {
                Format::Csv => stdout.write_all(csv.as_bytes())?,
                Format::Table => stdout.write_all(render_pretty(csv).as_bytes())?,
            }
            Ok(())
        }
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::File {
        path: path.to_path_buf(),
        source,
    })
}

/// `fmt6` for optional values; `None` becomes an empty cell.
pub fn cell(value: Option<f64>) -> String {
    value.map(bowley_core::fmt6).unwrap_or_default()
}
