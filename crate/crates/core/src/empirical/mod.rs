//! Back-of-envelope range checks and observed national-accounts series.

mod csv_io;
mod range;
mod series;

pub use csv_io::{
    read_accounts_csv, write_accounts_csv, write_ratio_csv, ACCOUNTS_HEADER, RATIO_HEADER,
};
pub use range::{bowley_range, omega_from_macro, ParameterBox, OBSERVED_BETA_RANGE};
pub use series::{ratio_series, AccountsSeries, PeriodLabel, RatioRow};

use thiserror::Error;

use crate::accounts::AccountsError;

#[derive(Debug, Error)]
pub enum EmpiricalError {
    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },
    #[error("line {line}: {source}")]
    Validation {
        line: u64,
        #[source]
        source: AccountsError,
    },
    #[error("line {line}: {message}")]
    Order { line: u64, message: String },
    #[error("{0}")]
    InvalidInput(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
