//! One-period accounting snapshots and the ratios derived from them.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AccountsError {
    #[error("{field} must be a finite number, got {value}")]
    NonFinite { field: &'static str, value: f64 },
    #[error("{field} must be non-negative, got {value}")]
    NegativeFlow { field: &'static str, value: f64 },
    #[error("wealth W must be positive, got {0}")]
    NonPositiveWealth(f64),
    #[error("income Y is zero, income shares are undefined")]
    ZeroIncome,
    #[error("consumption rate omega is zero, the Bowley ratio is undefined")]
    ZeroConsumptionRate,
}

/// Flows over one period plus the wealth stock they are measured against.
///
/// `Y = e + pi` is deliberately not enforced here; snapshots that violate it
/// are legal and show up as failures in [`crate::check_identities`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NationalAccounts {
    consumption: f64,
    income: f64,
    earnings: f64,
    profit: f64,
    wealth: f64,
}

impl NationalAccounts {
    pub fn new(
        consumption: f64,
        income: f64,
        earnings: f64,
        profit: f64,
        wealth: f64,
    ) -> Result<Self, AccountsError> {
        for (field, value) in [
            ("C", consumption),
            ("Y", income),
            ("e", earnings),
            ("pi", profit),
            ("W", wealth),
        ] {
            if !value.is_finite() {
                return Err(AccountsError::NonFinite { field, value });
            }
        }
        for (field, value) in [
            ("C", consumption),
            ("Y", income),
            ("e", earnings),
            ("pi", profit),
        ] {
            if value < 0.0 {
                return Err(AccountsError::NegativeFlow { field, value });
            }
        }
        if wealth <= 0.0 {
            return Err(AccountsError::NonPositiveWealth(wealth));
        }
        Ok(Self {
            consumption,
            income,
            earnings,
            profit,
            wealth,
        })
    }

    pub fn consumption(&self) -> f64 {
        self.consumption
    }

    pub fn income(&self) -> f64 {
        self.income
    }

    pub fn earnings(&self) -> f64 {
        self.earnings
    }

    pub fn profit(&self) -> f64 {
        self.profit
    }

    pub fn wealth(&self) -> f64 {
        self.wealth
    }

    /// Multiplies every stock and flow by `k` (a change of currency unit).
    pub fn scaled(&self, k: f64) -> Result<Self, AccountsError> {
        Self::new(
            self.consumption * k,
            self.income * k,
            self.earnings * k,
            self.profit * k,
            self.wealth * k,
        )
    }

    /// Consumption, income and profit per unit of wealth.
    pub fn rates(&self) -> RateSet {
        RateSet {
            omega: self.consumption / self.wealth,
            gamma: self.income / self.wealth,
            r: self.profit / self.wealth,
        }
    }

    /// Labour and capital shares of income.
    pub fn shares(&self) -> Result<ShareSet, AccountsError> {
        if self.income == 0.0 {
            return Err(AccountsError::ZeroIncome);
        }
        Ok(ShareSet {
            beta: self.earnings / self.income,
            rho: self.profit / self.income,
        })
    }
}

/// Flow rates per unit of wealth, all per period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateSet {
    /// Consumption rate `C / W`.
    pub omega: f64,
    /// Income rate `Y / W`.
    pub gamma: f64,
    /// Profit rate `pi / W`.
    pub r: f64,
}

/// Income shares: `beta` to labour (the Bowley ratio), `rho` to capital.
///
/// The two sum to one whenever the snapshot satisfies `Y = e + pi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShareSet {
    pub beta: f64,
    pub rho: f64,
}

impl ShareSet {
    /// Shares implied by the rates alone, `rho = r / omega` and `beta = 1 - rho`.
    pub fn from_rates(r: f64, omega: f64) -> Result<Self, AccountsError> {
        let rho = profit_ratio_from_rates(r, omega)?;
        Ok(Self {
            beta: 1.0 - rho,
            rho,
        })
    }
}

pub fn rates_from_accounts(acc: &NationalAccounts) -> RateSet {
    acc.rates()
}

pub fn shares_from_accounts(acc: &NationalAccounts) -> Result<ShareSet, AccountsError> {
    acc.shares()
}

/// Labour share at equilibrium: `1 - r / omega`.
///
/// Not clamped: `r > omega` gives a negative value.
pub fn bowley_from_rates(r: f64, omega: f64) -> Result<f64, AccountsError> {
    Ok(1.0 - profit_ratio_from_rates(r, omega)?)
}

/// Capital share at equilibrium: `r / omega`.
pub fn profit_ratio_from_rates(r: f64, omega: f64) -> Result<f64, AccountsError> {
    if omega == 0.0 {
        return Err(AccountsError::ZeroConsumptionRate);
    }
    Ok(r / omega)
}
