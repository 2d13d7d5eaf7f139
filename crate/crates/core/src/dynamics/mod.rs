//! Time evolution of the toy economy: the single aggregate model, the
//! multi-sector scenario engine, and parameter sweeps over both.

mod sectors;
mod single;
mod sweep;

pub use sectors::{
    simulate_sectors, AbsorbedQuantity, DriftSchedule, SectorRecord, SectorSpec,
    SectoralStep, SectoralTrajectory, SectorsConfig,
};
pub use single::{
    simulate_single, stability_classify, step_single, steady_state, DivergenceReason,
    EconomyParams, FlowRecord, Stability, TerminalStatus, Trajectory,
};
pub use sweep::{sweep, GridPoint, SweepRow};

use thiserror::Error;

use crate::accounts::AccountsError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DynamicsError {
    #[error("invalid parameter {name}: {reason}")]
    InvalidParams { name: String, reason: String },
    #[error("wealth fell to {wealth} at t={time}")]
    NonPositiveWealth { time: f64, wealth: f64 },
    #[error("no steady state: omega ({consumption_rate}) <= r ({profit_rate})")]
    NoSteadyState {
        profit_rate: f64,
        consumption_rate: f64,
    },
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
    #[error(
        "absorber sector {sector} {quantity} went negative ({value}) at step {step} (t={time})"
    )]
    AbsorberNegative {
        sector: String,
        quantity: AbsorbedQuantity,
        step: usize,
        time: f64,
        value: f64,
    },
    #[error(transparent)]
    Accounts(#[from] AccountsError),
}

impl DynamicsError {
    pub(crate) fn invalid(name: &str, reason: impl Into<String>) -> Self {
        DynamicsError::InvalidParams {
            name: name.to_string(),
            reason: reason.into(),
        }
    }
}
