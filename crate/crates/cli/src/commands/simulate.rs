use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use bowley_core::dynamics::{simulate_single, TerminalStatus, Trajectory};
use bowley_core::fmt6;

use crate::render::emit_table;
use crate::{CliError, FormatArg, EXIT_DIVERGED, EXIT_OK};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Flat key=value file with any of: e, r, omega, w0, dt, max_steps, tol.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Parameter overrides as key=value, applied after the config file.
    #[arg(value_name = "KEY=VALUE")]
    pub overrides: Vec<String>,
    /// Write the trajectory CSV here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

pub fn trajectory_csv(t: &Trajectory) -> String {
    let mut out = String::from("step,time,W,C,pi,e,Y,gamma,beta\n");
    for (k, r) in t.records.iter().enumerate() {
        let _ = writeln!(
            out,
            "{k},{},{},{},{},{},{},{},{}",
            fmt6(r.time),
            fmt6(r.wealth),
            fmt6(r.consumption),
            fmt6(r.profit),
            fmt6(r.earnings),
            fmt6(r.income),
            fmt6(r.gamma),
            fmt6(r.beta),
        );
    }
    out
}

/// One-line outcome. Every number in it can be read back from the CSV.
pub fn summary(t: &Trajectory) -> String {
    let steps = t.records.len().saturating_sub(1);
    let beta = t.final_beta().map(fmt6).unwrap_or_default();
    let predicted = t.params.predicted_beta().map(fmt6).unwrap_or_default();
    match t.status {
        TerminalStatus::Converged { .. } => {
            let residual = match (t.final_beta(), t.params.predicted_beta()) {
                (Some(b), Some(p)) => {
                    // Recomputed from the printed values so the line matches the CSV.
                    let b: f64 = fmt6(b).parse().unwrap_or(b);
                    let p: f64 = fmt6(p).parse().unwrap_or(p);
                    fmt6((b - p).abs())
                }
                _ => String::new(),
            };
            format!("converged β={beta} predicted={predicted} residual={residual} steps={steps}")
        }
        TerminalStatus::MaxStepsReached => format!(
            "not converged: max steps reached β={beta} predicted={predicted} steps={steps}"
        ),
        TerminalStatus::Diverged(reason) => format!("diverged: {reason}"),
    }
}

pub fn run(args: &Args, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let params = super::economy_params(args.config.as_ref(), &args.overrides, |_| Ok(false))?;
    let trajectory = simulate_single(&params).map_err(|e| CliError::Input(e.to_string()))?;
    emit_table(&trajectory_csv(&trajectory), args.out.as_deref(), args.format, stdout)?;
    writeln!(stdout, "{}", summary(&trajectory))?;
    Ok(if trajectory.is_converged() { EXIT_OK } else { EXIT_DIVERGED })
}
