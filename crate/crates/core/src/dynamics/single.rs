//! One aggregate economy with exogenous wage bill, profit rate and
//! consumption rate. Wealth moves by the flow residual
//! `dW/dt = e + r W - omega W`, integrated with explicit fixed steps.

use std::fmt;

use crate::accounts::{AccountsError, NationalAccounts};

use super::DynamicsError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EconomyParams {
    /// Wage bill paid per year, exogenous.
    pub wage_bill: f64,
    pub profit_rate: f64,
    pub consumption_rate: f64,
    pub initial_wealth: f64,
    /// Step size in years.
    pub step: f64,
    pub max_steps: usize,
    /// Convergence threshold on `|gamma - omega|`.
    pub convergence_tol: f64,
}

impl Default for EconomyParams {
    fn default() -> Self {
        Self {
            wage_bill: 1.0,
            profit_rate: 0.05,
            consumption_rate: 0.25,
            initial_wealth: 1.0,
            step: 1.0,
            max_steps: 100_000,
            convergence_tol: 1e-9,
        }
    }
}

impl EconomyParams {
    pub fn validate(&self) -> Result<(), DynamicsError> {
        let finite = [
            ("wage_bill", self.wage_bill),
            ("profit_rate", self.profit_rate),
            ("consumption_rate", self.consumption_rate),
            ("initial_wealth", self.initial_wealth),
            ("step", self.step),
            ("convergence_tol", self.convergence_tol),
        ];
        for (name, value) in finite {
            if !value.is_finite() {
                return Err(DynamicsError::invalid(name, format!("must be finite, got {value}")));
            }
        }
        for (name, value) in [
            ("wage_bill", self.wage_bill),
            ("profit_rate", self.profit_rate),
            ("consumption_rate", self.consumption_rate),
        ] {
            if value < 0.0 {
                return Err(DynamicsError::invalid(name, format!("must be >= 0, got {value}")));
            }
        }
        for (name, value) in [
            ("initial_wealth", self.initial_wealth),
            ("step", self.step),
            ("convergence_tol", self.convergence_tol),
        ] {
            if value <= 0.0 {
                return Err(DynamicsError::invalid(name, format!("must be > 0, got {value}")));
            }
        }
        if self.max_steps == 0 {
            return Err(DynamicsError::invalid("max_steps", "must be >= 1"));
        }
        Ok(())
    }

    /// Net contraction rate of the wealth flow, `omega - r`.
    pub fn net_drain(&self) -> f64 {
        self.consumption_rate - self.profit_rate
    }

    /// Bowley ratio the economy should settle on, `1 - r / omega`.
    pub fn predicted_beta(&self) -> Option<f64> {
        crate::bowley_from_rates(self.profit_rate, self.consumption_rate).ok()
    }
}

/// Stocks, flows and emergent ratios at one point in time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlowRecord {
    pub time: f64,
    pub wealth: f64,
    pub consumption: f64,
    pub profit: f64,
    pub earnings: f64,
    pub income: f64,
    /// Income rate `Y / W`.
    pub gamma: f64,
    /// Labour share `e / Y`; NaN when income is zero.
    pub beta: f64,
}

impl FlowRecord {
    fn at(time: f64, wealth: f64, p: &EconomyParams) -> Self {
        let consumption = p.consumption_rate * wealth;
        let profit = p.profit_rate * wealth;
        let earnings = p.wage_bill;
        let income = earnings + profit;
        Self {
            time,
            wealth,
            consumption,
            profit,
            earnings,
            income,
            gamma: income / wealth,
            beta: if income == 0.0 { f64::NAN } else { earnings / income },
        }
    }

    pub fn accounts(&self) -> Result<NationalAccounts, AccountsError> {
        NationalAccounts::new(
            self.consumption,
            self.income,
            self.earnings,
            self.profit,
            self.wealth,
        )
    }
}

/// One explicit step from `wealth` at `time`.
///
/// Returns the wealth at the next step and the record of flows at `time`.
pub fn step_single(
    time: f64,
    wealth: f64,
    p: &EconomyParams,
) -> Result<(f64, FlowRecord), DynamicsError> {
    if !(wealth > 0.0) {
        return Err(DynamicsError::NonPositiveWealth { time, wealth });
    }
    let record = FlowRecord::at(time, wealth, p);
    let next = wealth + p.step * (record.income - record.consumption);
    if !(next > 0.0) {
        return Err(DynamicsError::NonPositiveWealth {
            time: time + p.step,
            wealth: next,
        });
    }
    Ok((next, record))
}

/// Closed-form fixed point `W* = e / (omega - r)` as an accounting snapshot.
pub fn steady_state(p: &EconomyParams) -> Result<NationalAccounts, DynamicsError> {
    let drain = p.net_drain();
    if !(drain > 0.0) {
        return Err(DynamicsError::NoSteadyState {
            profit_rate: p.profit_rate,
            consumption_rate: p.consumption_rate,
        });
    }
    let wealth = p.wage_bill / drain;
    let profit = p.profit_rate * wealth;
    NationalAccounts::new(
        p.consumption_rate * wealth,
        p.wage_bill + profit,
        p.wage_bill,
        profit,
        wealth,
    )
    .map_err(DynamicsError::from)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stability {
    Stable,
    /// `omega <= r`: no finite fixed point, wealth grows without bound.
    UnstableEconomic,
    /// A fixed point exists but `step >= 2 / (omega - r)`, so explicit steps
    /// oscillate instead of contracting.
    UnstableNumerical,
}

/// The step map `W -> W (1 - step (omega - r)) + step e` contracts iff
/// `|1 - step (omega - r)| < 1`.
pub fn stability_classify(p: &EconomyParams) -> Stability {
    let drain = p.net_drain();
    if !(drain > 0.0) {
        Stability::UnstableEconomic
    } else if p.step * drain < 2.0 {
        Stability::Stable
    } else {
        Stability::UnstableNumerical
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DivergenceReason {
    NoSteadyState,
    NumericalInstability { step_bound: f64 },
    NonPositiveWealth { time: f64, wealth: f64 },
}

impl fmt::Display for DivergenceReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivergenceReason::NoSteadyState => write!(f, "omega <= r"),
            DivergenceReason::NumericalInstability { step_bound } => write!(
                f,
                "numerical instability, dt must be below 2/(omega - r) = {}",
                crate::fmt6(*step_bound)
            ),
            DivergenceReason::NonPositiveWealth { time, wealth } => write!(
                f,
                "wealth {} <= 0 at t={}",
                crate::fmt6(*wealth),
                crate::fmt6(*time)
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TerminalStatus {
    /// `|gamma - omega|` fell under the threshold at this step index.
    Converged { step: usize },
    MaxStepsReached,
    Diverged(DivergenceReason),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub params: EconomyParams,
    pub records: Vec<FlowRecord>,
    pub status: TerminalStatus,
}

impl Trajectory {
    pub fn is_converged(&self) -> bool {
        matches!(self.status, TerminalStatus::Converged { .. })
    }

    pub fn last(&self) -> Option<&FlowRecord> {
        self.records.last()
    }

    pub fn final_beta(&self) -> Option<f64> {
        self.last().map(|r| r.beta)
    }

    /// `|final beta - (1 - r/omega)|` for converged runs.
    pub fn beta_residual(&self) -> Option<f64> {
        if !self.is_converged() {
            return None;
        }
        Some((self.final_beta()? - self.params.predicted_beta()?).abs())
    }
}

/// Threshold on `|gamma - omega|` that guarantees the converged wealth lies
/// within `convergence_tol` of the closed-form fixed point, relative.
///
/// `gamma - omega = (omega - r)(W* - W) / W`, so a raw threshold of `tol`
/// would only bound the wealth error by `tol / (omega - r)`.
fn gamma_threshold(p: &EconomyParams) -> f64 {
    let tol = p.convergence_tol;
    tol * p.net_drain().min(1.0) / (1.0 + tol)
}

pub fn simulate_single(p: &EconomyParams) -> Result<Trajectory, DynamicsError> {
    p.validate()?;
    let mut records = Vec::new();
    let diverged = |records, reason| Trajectory {
        params: *p,
        records,
        status: TerminalStatus::Diverged(reason),
    };

    match stability_classify(p) {
        Stability::Stable => {}
        unstable => {
            records.push(FlowRecord::at(0.0, p.initial_wealth, p));
            let reason = match unstable {
                Stability::UnstableEconomic => DivergenceReason::NoSteadyState,
                _ => DivergenceReason::NumericalInstability {
                    step_bound: 2.0 / p.net_drain(),
                },
            };
            return Ok(diverged(records, reason));
        }
    }

    let threshold = gamma_threshold(p);
    let mut wealth = p.initial_wealth;
    for k in 0..=p.max_steps {
        let time = k as f64 * p.step;
        let record = FlowRecord::at(time, wealth, p);
        records.push(record);
        if (record.gamma - p.consumption_rate).abs() <= threshold {
            return Ok(Trajectory {
                params: *p,
                records,
                status: TerminalStatus::Converged { step: k },
            });
        }
        if k == p.max_steps {
            break;
        }
        match step_single(time, wealth, p) {
            Ok((next, _)) => wealth = next,
            Err(DynamicsError::NonPositiveWealth { time, wealth }) => {
                return Ok(diverged(
                    records,
                    DivergenceReason::NonPositiveWealth { time, wealth },
                ))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Trajectory {
        params: *p,
        records,
        status: TerminalStatus::MaxStepsReached,
    })
}
