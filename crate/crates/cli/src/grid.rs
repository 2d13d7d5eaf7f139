//! Sweep grid specs such as `r=0.02:0.08:0.01,omega=0.20:0.25:0.05`.
//!
//! Each axis is `key=value` or `key=lo:hi:step` with both ends inclusive.
//! Axes not named keep the base value. Points are ordered e, then r, then
//! omega, the last varying fastest.

use bowley_core::dynamics::{EconomyParams, GridPoint};

use crate::CliError;

const MAX_AXIS_POINTS: usize = 1_000_000;

fn axis_values(key: &str, spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = |why: &str| CliError::Input(format!("grid axis {key}={spec}: {why}"));
    let num = |s: &str| -> Result<f64, CliError> {
        s.trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| bad("not a finite number"))
    };
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [v] => Ok(vec![num(v)?]),
        [lo, hi, step] => {
            let (lo, hi, step) = (num(lo)?, num(hi)?, num(step)?);
            if step <= 0.0 {
                return Err(bad("step must be > 0"));
            }
            if hi < lo {
                return Err(bad("hi must be >= lo"));
            }
            let span = (hi - lo) / step;
            if span >= MAX_AXIS_POINTS as f64 {
                return Err(bad("too many points"));
            }
            let n = (span + 1e-9).floor() as usize;
            Ok((0..=n)
                .map(|i| {
                    let v = lo + i as f64 * step;
                    if (v - hi).abs() <= 1e-9 * step {
                        hi
                    } else {
                        v
                    }
                })
                .collect())
        }
        _ => Err(bad("expected value or lo:hi:step")),
    }
}

pub fn parse_grid(spec: &str, base: &EconomyParams) -> Result<Vec<GridPoint>, CliError> {
    let mut e = vec![base.wage_bill];
    let mut r = vec![base.profit_rate];
    let mut omega = vec![base.consumption_rate];
    let mut seen = Vec::new();
    for axis in spec.split(',').map(str::trim).filter(|a| !a.is_empty()) {
        let (key, values) = axis
            .split_once('=')
            .ok_or_else(|| CliError::Input(format!("grid axis {axis:?}: expected key=values")))?;
        let key = key.trim();
        if seen.contains(&key) {
            return Err(CliError::Input(format!("grid axis {key} given twice")));
        }
        seen.push(key);
        let target = match key {
            "e" => &mut e,
            "r" => &mut r,
            "omega" => &mut omega,
            other => {
                return Err(CliError::Input(format!(
                    "unknown grid axis {other:?} (known: e, r, omega)"
                )))
            }
        };
        *target = axis_values(key, values)?;
    }
    if seen.is_empty() {
        return Err(CliError::Input(format!("empty grid spec {spec:?}")));
    }
    let mut points = Vec::with_capacity(e.len() * r.len() * omega.len());
    for &e in &e {
        for &r in &r {
            for &o in &omega {
                points.push(GridPoint::new(e, r, o));
            }
        }
    }
    Ok(points)
}
