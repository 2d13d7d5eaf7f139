use std::io::Write;
use std::path::PathBuf;

use bowley_core::empirical::{
    bowley_range, omega_from_macro, ratio_series, read_accounts_csv, write_ratio_csv,
    ParameterBox, OBSERVED_BETA_RANGE,
};

use crate::render::{emit_table, read_file};
use crate::{CliError, FormatArg, EXIT_OK};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Profit-rate range `lo:hi` (or a single value).
    #[arg(long)]
    pub r: Option<String>,
    /// Consumption-rate range `lo:hi` (or a single value).
    #[arg(long)]
    pub omega: Option<String>,
    /// Consumption as a share of output, `x` or `lo:hi`.
    #[arg(long = "c-share")]
    pub c_share: Option<String>,
    /// Capital stock as a multiple of output, `x` or `lo:hi`.
    #[arg(long = "k-gdp")]
    pub k_gdp: Option<String>,
    /// Accounts CSV (`period,C,Y,e,pi,W`) to turn into a ratio table.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Where to write the ratio table; stdout otherwise.
    #[arg(long, requires = "csv")]
    pub out: Option<PathBuf>,
    /// Periods with |C - Y| above this are counted as off equilibrium.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

fn parse_range(flag: &str, text: &str) -> Result<(f64, f64), CliError> {
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| CliError::Input(format!("--{flag} {text:?}: expected x or lo:hi")))
    };
    match text.split_once(':') {
        None => {
            let v = num(text)?;
            Ok((v, v))
        }
        Some((lo, hi)) => Ok((num(lo)?, num(hi)?)),
    }
}

fn fmt2(v: f64) -> String {
    format!("{v:.2}")
}

pub fn run(args: &Args, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let macro_omega = match (&args.c_share, &args.k_gdp) {
        (Some(c), Some(k)) => {
            let (c_lo, c_hi) = parse_range("c-share", c)?;
            let (k_lo, k_hi) = parse_range("k-gdp", k)?;
            if c_lo > c_hi || k_lo > k_hi {
                return Err(CliError::Input("ranges must be lo:hi with lo <= hi".into()));
            }
            let invalid = |e: bowley_core::empirical::EmpiricalError| CliError::Input(e.to_string());
            let lo = omega_from_macro(c_lo, k_hi).map_err(invalid)?;
            let hi = omega_from_macro(c_hi, k_lo).map_err(invalid)?;
            if lo == hi {
                writeln!(stdout, "omega={}", fmt2(lo))?;
            } else {
                writeln!(stdout, "omega in [{}, {}]", fmt2(lo), fmt2(hi))?;
            }
            Some((lo, hi))
        }
        (None, None) => None,
        _ => return Err(CliError::Input("--c-share and --k-gdp go together".into())),
    };

    let omega = match &args.omega {
        Some(text) => Some(parse_range("omega", text)?),
        None => macro_omega,
    };
    let mut did_something = macro_omega.is_some();

    match (&args.r, omega) {
        (Some(r), Some((omega_lo, omega_hi))) => {
            let (r_lo, r_hi) = parse_range("r", r)?;
            let b = ParameterBox::new(r_lo, r_hi, omega_lo, omega_hi)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let (lo, hi) = bowley_range(&b);
            writeln!(stdout, "beta in [{}, {}]", fmt2(lo), fmt2(hi))?;
            let (obs_lo, obs_hi) = OBSERVED_BETA_RANGE;
            writeln!(
                stdout,
                "observed stylised range [{}, {}]; overlap: {}",
                fmt2(obs_lo),
                fmt2(obs_hi),
                if lo <= obs_hi && obs_lo <= hi { "yes" } else { "no" }
            )?;
            did_something = true;
        }
        (Some(_), None) => {
            return Err(CliError::Input(
                "--r needs --omega or --c-share with --k-gdp".into(),
            ))
        }
        (None, Some(_)) if args.omega.is_some() => {
            return Err(CliError::Input("--omega needs --r".into()))
        }
        _ => {}
    }

    if let Some(path) = &args.csv {
        let series = read_accounts_csv(read_file(path)?.as_bytes())
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let rows = ratio_series(&series);
        let mut table = Vec::new();
        write_ratio_csv(&rows, &mut table)?;
        let table = String::from_utf8(table).expect("ratio table is ASCII");
        emit_table(&table, args.out.as_deref(), args.format, stdout)?;
        let zero_income = rows.iter().filter(|r| r.shares.is_err()).count();
        let off = rows.iter().filter(|r| r.off_equilibrium(args.tol)).count();
        writeln!(
            stdout,
            "periods={} zero_income={zero_income} off_equilibrium={off}",
            rows.len()
        )?;
        did_something = true;
    }

    if !did_something {
        return Err(CliError::Input(
            "nothing to do: give --r with --omega, --c-share with --k-gdp, or --csv".into(),
        ));
    }
    Ok(EXIT_OK)
}
