use crate::accounts::bowley_from_rates;

use super::EmpiricalError;

/// Labour shares commonly reported for mature economies, as (low, high).
pub const OBSERVED_BETA_RANGE: (f64, f64) = (0.5, 0.75);

/// Plausible ranges for the profit rate and the consumption rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterBox {
    r_lo: f64,
    r_hi: f64,
    omega_lo: f64,
    omega_hi: f64,
}

impl ParameterBox {
    pub fn new(r_lo: f64, r_hi: f64, omega_lo: f64, omega_hi: f64) -> Result<Self, EmpiricalError> {
        let all_finite = [r_lo, r_hi, omega_lo, omega_hi].iter().all(|v| v.is_finite());
        if !all_finite || !(0.0 <= r_lo && r_lo <= r_hi) {
            return Err(EmpiricalError::InvalidInput(format!(
                "profit-rate range must satisfy 0 <= lo <= hi, got {r_lo}..{r_hi}"
            )));
        }
        if !(0.0 < omega_lo && omega_lo <= omega_hi) {
            return Err(EmpiricalError::InvalidInput(format!(
                "consumption-rate range must satisfy 0 < lo <= hi, got {omega_lo}..{omega_hi}"
            )));
        }
        Ok(Self {
            r_lo,
            r_hi,
            omega_lo,
            omega_hi,
        })
    }

    pub fn r_range(&self) -> (f64, f64) {
        (self.r_lo, self.r_hi)
    }

    pub fn omega_range(&self) -> (f64, f64) {
        (self.omega_lo, self.omega_hi)
    }
}

/// Extremes of `1 - r / omega` over the box.
///
/// The ratio falls in `r` and rises in `omega`, so the minimum sits at
/// `(r_hi, omega_lo)` and the maximum at `(r_lo, omega_hi)`.
pub fn bowley_range(b: &ParameterBox) -> (f64, f64) {
    let lo = bowley_from_rates(b.r_hi, b.omega_lo).expect("omega_lo > 0");
    let hi = bowley_from_rates(b.r_lo, b.omega_hi).expect("omega_hi > 0");
    (lo, hi)
}

/// Consumption per unit of capital from two macro ratios:
/// `C/W = (C/Y) / (W/Y)`.
pub fn omega_from_macro(consumption_share: f64, capital_to_output: f64) -> Result<f64, EmpiricalError> {
    if !(consumption_share.is_finite() && consumption_share > 0.0) {
        return Err(EmpiricalError::InvalidInput(format!(
            "consumption share of output must be > 0, got {consumption_share}"
        )));
    }
    if !(capital_to_output.is_finite() && capital_to_output > 0.0) {
        return Err(EmpiricalError::InvalidInput(format!(
            "capital to output ratio must be > 0, got {capital_to_output}"
        )));
    }
    Ok(consumption_share / capital_to_output)
}
