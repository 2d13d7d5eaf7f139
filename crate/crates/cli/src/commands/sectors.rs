use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use bowley_core::dynamics::{simulate_sectors, DynamicsError, SectoralTrajectory};
use bowley_core::fmt6;

use crate::render::{emit_table, read_file};
use crate::scenario::{parse_scenario, Scenario, AGGREGATE_NAME};
use crate::{CliError, FormatArg, EXIT_DIVERGED, EXIT_INFEASIBLE, EXIT_OK};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Scenario file (key=value globals plus repeated [sector] blocks).
    pub scenario: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

/// Long-format table: one row per sector per step, then an aggregate row.
pub fn sectors_csv(t: &SectoralTrajectory) -> String {
    let mut out = String::from("step,time,sector,e,pi,Y,beta,C,W\n");
    for s in &t.steps {
        let time = fmt6(s.time);
        for (name, rec) in t.names.iter().zip(&s.sectors) {
            let _ = writeln!(
                out,
                "{},{time},{name},{},{},{},{},,",
                s.step,
                fmt6(rec.earnings),
                fmt6(rec.profit),
                fmt6(rec.income),
                fmt6(rec.beta),
            );
        }
        let a = &s.aggregate;
        let _ = writeln!(
            out,
            "{},{time},{AGGREGATE_NAME},{},{},{},{},{},{}",
            s.step,
            fmt6(a.earnings),
            fmt6(a.profit),
            fmt6(a.income),
            fmt6(a.beta),
            fmt6(s.consumption),
            fmt6(s.wealth),
        );
    }
    out
}

pub fn summary(scenario: &Scenario, t: &SectoralTrajectory) -> String {
    let mut out = String::new();
    if let Some((lo, hi)) = t.aggregate_beta_range(scenario.burn_in) {
        let _ = writeln!(
            out,
            "aggregate β after burn-in t>={}: min={} max={} drift={}",
            fmt6(scenario.burn_in),
            fmt6(lo),
            fmt6(hi),
            fmt6(hi - lo)
        );
    }
    for (i, spec) in scenario.sectors.iter().enumerate() {
        if let Some((first, last)) = t.sector_beta_endpoints(i) {
            let _ = write!(out, "sector {}: β {} -> {}", spec.name, fmt6(first), fmt6(last));
            if let Some(target) = spec.target_beta {
                let _ = write!(out, " (target {})", fmt6(target));
            }
            if spec.absorber {
                out.push_str(" [absorber]");
            }
            out.push('\n');
        }
    }
    out
}

pub fn run(args: &Args, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let text = read_file(&args.scenario)?;
    let scenario = parse_scenario(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.scenario.display())))?;
    match simulate_sectors(&scenario.sectors, &scenario.config) {
        Ok(t) => {
            emit_table(&sectors_csv(&t), args.out.as_deref(), args.format, stdout)?;
            write!(stdout, "{}", summary(&scenario, &t))?;
            Ok(EXIT_OK)
        }
        Err(DynamicsError::AbsorberNegative { sector, quantity, step, time, value }) => {
            writeln!(
                stdout,
                "infeasible: absorber {sector} {quantity} went negative ({}) at step {step} (t={})",
                fmt6(value),
                fmt6(time)
            )?;
            Ok(EXIT_INFEASIBLE)
        }
        Err(e @ (DynamicsError::NoSteadyState { .. } | DynamicsError::NonPositiveWealth { .. })) => {
            writeln!(stdout, "diverged: {e}")?;
            Ok(EXIT_DIVERGED)
        }
        Err(e) => Err(CliError::Input(format!("{}: {e}", args.scenario.display()))),
    }
}
