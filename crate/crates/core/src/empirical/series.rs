use std::fmt;
use std::str::FromStr;

use crate::accounts::{AccountsError, NationalAccounts, RateSet, ShareSet};

use super::EmpiricalError;

/// An annual (`1996`) or quarterly (`1996Q3`) period label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PeriodLabel {
    Year(i32),
    Quarter { year: i32, quarter: u8 },
}

impl PeriodLabel {
    fn sort_key(&self) -> (i32, u8) {
        match *self {
            PeriodLabel::Year(y) => (y, 0),
            PeriodLabel::Quarter { year, quarter } => (year, quarter),
        }
    }

    fn is_quarterly(&self) -> bool {
        matches!(self, PeriodLabel::Quarter { .. })
    }
}

impl FromStr for PeriodLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("invalid period label {s:?}, expected YYYY or YYYYQn");
        match s.split_once('Q') {
            None => s.parse().map(PeriodLabel::Year).map_err(|_| bad()),
            Some((year, quarter)) => {
                if year.len() != 4 || !year.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let quarter: u8 = quarter.parse().map_err(|_| bad())?;
                if !(1..=4).contains(&quarter) {
                    return Err(bad());
                }
                Ok(PeriodLabel::Quarter {
                    year: year.parse().map_err(|_| bad())?,
                    quarter,
                })
            }
        }
    }
}

impl fmt::Display for PeriodLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PeriodLabel::Year(y) => write!(f, "{y}"),
            PeriodLabel::Quarter { year, quarter } => write!(f, "{year:04}Q{quarter}"),
        }
    }
}

/// Accounting snapshots keyed by strictly increasing periods.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AccountsSeries {
    records: Vec<(PeriodLabel, NationalAccounts)>,
}

impl AccountsSeries {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a record. `line` is only used in the error message.
    pub fn push(
        &mut self,
        period: PeriodLabel,
        accounts: NationalAccounts,
        line: u64,
    ) -> Result<(), EmpiricalError> {
        if let Some((prev, _)) = self.records.last() {
            if prev.is_quarterly() != period.is_quarterly() {
                return Err(EmpiricalError::Order {
                    line,
                    message: format!("period {period} mixes annual and quarterly labels"),
                });
            }
            if period.sort_key() <= prev.sort_key() {
                return Err(EmpiricalError::Order {
                    line,
                    message: format!("period {period} does not follow {prev}"),
                });
            }
        }
        self.records.push((period, accounts));
        Ok(())
    }

    pub fn from_records(
        records: impl IntoIterator<Item = (PeriodLabel, NationalAccounts)>,
    ) -> Result<Self, EmpiricalError> {
        let mut series = Self::new();
        for (i, (period, acc)) in records.into_iter().enumerate() {
            series.push(period, acc, i as u64 + 1)?;
        }
        Ok(series)
    }

    pub fn records(&self) -> &[(PeriodLabel, NationalAccounts)] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// The same series in a different currency unit.
    pub fn scaled(&self, k: f64) -> Result<Self, AccountsError> {
        let records = self
            .records
            .iter()
            .map(|(p, acc)| Ok((*p, acc.scaled(k)?)))
            .collect::<Result<_, AccountsError>>()?;
        Ok(Self { records })
    }
}

/// Ratios observed in one period.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioRow {
    pub period: PeriodLabel,
    pub rates: RateSet,
    /// `Err(ZeroIncome)` flags a period with no income.
    pub shares: Result<ShareSet, AccountsError>,
    /// Signed `C - Y`; non-zero marks an off-equilibrium period.
    pub c_minus_y: f64,
}

impl RatioRow {
    pub fn of(period: PeriodLabel, acc: &NationalAccounts) -> Self {
        Self {
            period,
            rates: acc.rates(),
            shares: acc.shares(),
            c_minus_y: acc.consumption() - acc.income(),
        }
    }

    pub fn off_equilibrium(&self, tol: f64) -> bool {
        self.c_minus_y.abs() > tol
    }
}

pub fn ratio_series(s: &AccountsSeries) -> Vec<RatioRow> {
    s.records()
        .iter()
        .map(|(period, acc)| RatioRow::of(*period, acc))
        .collect()
}
