use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use bowley_core::dynamics::{sweep, SweepRow, TerminalStatus};
use bowley_core::fmt6;

use crate::grid::parse_grid;
use crate::render::{cell, emit_table};
use crate::{CliError, FormatArg, EXIT_OK};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Grid spec, e.g. `r=0.02:0.08:0.01,omega=0.20:0.25:0.05` (lo:hi:step, inclusive).
    #[arg(long)]
    pub grid: Option<String>,
    /// Flat key=value file: simulation parameters plus an optional `grid` key.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Base parameter overrides as key=value.
    #[arg(value_name = "KEY=VALUE")]
    pub overrides: Vec<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

fn status_name(row: &SweepRow) -> &'static str {
    match row.status {
        Ok(TerminalStatus::Converged { .. }) => "converged",
        Ok(TerminalStatus::MaxStepsReached) => "max_steps",
        Ok(TerminalStatus::Diverged(_)) => "diverged",
        Err(_) => "invalid",
    }
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("e,r,omega,status,steps,beta,predicted,residual,W,W_star\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            fmt6(row.point.wage_bill),
            fmt6(row.point.profit_rate),
            fmt6(row.point.consumption_rate),
            status_name(row),
            row.steps,
            cell(row.emergent_beta),
            cell(row.predicted_beta),
            cell(row.residual),
            cell(row.final_wealth),
            cell(row.steady_wealth),
        );
    }
    out
}

pub fn summary(rows: &[SweepRow]) -> String {
    let converged = rows.iter().filter(|r| r.is_converged()).count();
    let betas = rows.iter().filter_map(|r| r.emergent_beta);
    let lo = betas.clone().fold(f64::INFINITY, f64::min);
    let hi = betas.fold(f64::NEG_INFINITY, f64::max);
    let max_residual = rows.iter().filter_map(|r| r.residual).fold(0.0, f64::max);
    let mut line = format!("rows={} converged={converged}", rows.len());
    if converged > 0 {
        let _ = write!(
            line,
            " beta_min={} beta_max={} max_residual={}",
            fmt6(lo),
            fmt6(hi),
            fmt6(max_residual)
        );
    }
    line
}

pub fn run(args: &Args, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let mut config_grid = None;
    let base = super::economy_params(args.config.as_ref(), &args.overrides, |entry| {
        if entry.key == "grid" {
            config_grid = Some(entry.value.clone());
            return Ok(true);
        }
        Ok(false)
    })?;
    let spec = args
        .grid
        .clone()
        .or(config_grid)
        .ok_or_else(|| CliError::Input("sweep needs --grid or a config with grid = ...".into()))?;
    let grid = parse_grid(&spec, &base)?;
    let rows = sweep(&grid, &base).map_err(|e| CliError::Input(e.to_string()))?;
    emit_table(&sweep_csv(&rows), args.out.as_deref(), args.format, stdout)?;
    writeln!(stdout, "{}", summary(&rows))?;
    Ok(EXIT_OK)
}
