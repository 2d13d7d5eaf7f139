//! National-accounts ratios and a stock-flow consistent toy economy.
//!
//! The crate is split in three layers:
//!
//! - [`accounts`] and [`identities`]: one-period snapshots (consumption `C`,
//!   income `Y`, earnings `e`, profit `pi`, wealth `W`), the rates and shares
//!   derived from them, and the equilibrium identity checks.
//! - [`dynamics`]: an economy with exogenous profit rate `r` and consumption
//!   rate `omega` whose income rate floats, plus a multi-sector scenario
//!   engine and parameter sweeps.
//! - [`empirical`]: range checks over plausible parameter boxes and
//!   ingestion of national-accounts time series from CSV.

pub mod accounts;
pub mod dynamics;
pub mod empirical;
pub mod identities;

pub use accounts::{
    bowley_from_rates, profit_ratio_from_rates, AccountsError, NationalAccounts, RateSet,
    ShareSet,
};
pub use identities::{check_identities, Identity, IdentityCheck, IdentityReport};

/// Formats a value with the fixed six decimals used by every emitted table.
///
/// Negative zero is printed without its sign so that golden outputs stay stable.
pub fn fmt6(value: f64) -> String {
    let s = format!("{value:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}
