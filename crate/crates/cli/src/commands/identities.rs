use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use bowley_core::empirical::{read_accounts_csv, PeriodLabel};
use bowley_core::{check_identities, fmt6, IdentityReport, NationalAccounts};

use crate::render::{emit_table, read_file};
use crate::{CliError, FormatArg, EXIT_IDENTITY_FAILURE, EXIT_OK};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Consumption C.
    #[arg(long = "C", required_unless_present = "csv", allow_negative_numbers = true)]
    pub c: Option<f64>,
    /// Income Y.
    #[arg(long = "Y", required_unless_present = "csv", allow_negative_numbers = true)]
    pub y: Option<f64>,
    /// Earnings paid to labour e.
    #[arg(long = "e", required_unless_present = "csv", allow_negative_numbers = true)]
    pub e: Option<f64>,
    /// Profit pi.
    #[arg(long = "pi", required_unless_present = "csv", allow_negative_numbers = true)]
    pub pi: Option<f64>,
    /// Wealth W.
    #[arg(long = "W", required_unless_present = "csv", allow_negative_numbers = true)]
    pub w: Option<f64>,
    /// Take the snapshot from an accounts CSV instead of flags.
    #[arg(long, conflicts_with_all = ["c", "y", "e", "pi", "w"])]
    pub csv: Option<PathBuf>,
    /// Period to check in the CSV; defaults to the first row.
    #[arg(long, requires = "csv")]
    pub period: Option<String>,
    /// Absolute residual tolerance.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    pub format: FormatArg,
}

fn snapshot(args: &Args) -> Result<NationalAccounts, CliError> {
    if let Some(path) = &args.csv {
        let series = read_accounts_csv(read_file(path)?.as_bytes())
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let wanted: Option<PeriodLabel> = match &args.period {
            Some(p) => Some(p.parse().map_err(CliError::Input)?),
            None => None,
        };
        return series
            .records()
            .iter()
            .find(|(p, _)| wanted.is_none_or(|w| w == *p))
            .map(|(_, acc)| *acc)
            .ok_or_else(|| CliError::Input(format!("{}: no matching period", path.display())));
    }
    let field = |v: Option<f64>, name: &str| {
        v.ok_or_else(|| CliError::Input(format!("missing --{name}")))
    };
    NationalAccounts::new(
        field(args.c, "C")?,
        field(args.y, "Y")?,
        field(args.e, "e")?,
        field(args.pi, "pi")?,
        field(args.w, "W")?,
    )
    .map_err(|e| CliError::Input(e.to_string()))
}

pub fn report_csv(report: &IdentityReport) -> String {
    let mut out = String::from("eq,identity,left,right,residual,status\n");
    for c in &report.checks {
        let _ = writeln!(
            out,
            "{},{},{},{},{:.3e},{}",
            c.identity.equation_number(),
            c.identity.formula(),
            fmt6(c.left),
            fmt6(c.right),
            c.residual,
            if c.pass { "pass" } else { "FAIL" }
        );
    }
    out
}

pub fn run(args: &Args, stdout: &mut dyn Write) -> Result<i32, CliError> {
    if !(args.tol >= 0.0) {
        return Err(CliError::Input(format!("--tol must be >= 0, got {}", args.tol)));
    }
    let acc = snapshot(args)?;
    let report = check_identities(&acc, args.tol);
    emit_table(&report_csv(&report), None, args.format, stdout)?;

    let opt = |v: Option<f64>| v.map(fmt6).unwrap_or_else(|| "undefined".into());
    writeln!(
        stdout,
        "profit ratio r/gamma={} r/omega={}",
        opt(report.profit_ratio_via_income_rate),
        opt(report.profit_ratio_via_consumption_rate)
    )?;
    if report.all_pass() {
        writeln!(stdout, "all {} identities pass at tol {:e}", report.checks.len(), args.tol)?;
        Ok(EXIT_OK)
    } else {
        let failed: Vec<String> = report
            .failures()
            .iter()
            .map(|i| format!("eq{}", i.equation_number()))
            .collect();
        writeln!(stdout, "FAIL: {} at tol {:e}", failed.join(", "), args.tol)?;
        Ok(EXIT_IDENTITY_FAILURE)
    }
}
