//! Equilibrium identity checks over a single snapshot.
//!
//! Residuals are absolute. An identity whose sides cannot be evaluated (zero
//! income or zero consumption rate) gets an infinite residual, so it fails at
//! any finite tolerance and passes only when the tolerance is infinite.

use std::fmt;

use crate::accounts::NationalAccounts;

/// The identities checked, tagged with their conventional equation number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `C = Y`.
    ConsumptionEqualsIncome,
    /// `Y = e + pi`.
    IncomeDecomposition,
    /// `beta + rho = 1`.
    SharesSumToOne,
    /// `pi / Y = r / omega`.
    ProfitRatio,
    /// `e / Y = 1 - r / omega`.
    BowleyRatio,
    /// `omega = gamma`.
    RateEquality,
    /// `omega * W = gamma * W`, closing the chain back on `C = Y`.
    FlowBalance,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::ConsumptionEqualsIncome,
        Identity::IncomeDecomposition,
        Identity::SharesSumToOne,
        Identity::ProfitRatio,
        Identity::BowleyRatio,
        Identity::RateEquality,
        Identity::FlowBalance,
    ];

    pub fn equation_number(self) -> u8 {
        match self {
            Identity::ConsumptionEqualsIncome => 1,
            Identity::IncomeDecomposition => 2,
            Identity::SharesSumToOne => 8,
            Identity::ProfitRatio => 13,
            Identity::BowleyRatio => 15,
            Identity::RateEquality => 17,
            Identity::FlowBalance => 19,
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            Identity::ConsumptionEqualsIncome => "C = Y",
            Identity::IncomeDecomposition => "Y = e + pi",
            Identity::SharesSumToOne => "beta + rho = 1",
            Identity::ProfitRatio => "pi/Y = r/omega",
            Identity::BowleyRatio => "e/Y = 1 - r/omega",
            Identity::RateEquality => "omega = gamma",
            Identity::FlowBalance => "omega*W = gamma*W",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eq{:<2} {}", self.equation_number(), self.formula())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub left: f64,
    pub right: f64,
    pub residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub tolerance: f64,
    pub checks: Vec<IdentityCheck>,
    /// `r / gamma`, the capital share as usually defined from the income rate.
    pub profit_ratio_via_income_rate: Option<f64>,
    /// `r / omega`, the capital share implied by the consumption rate.
    pub profit_ratio_via_consumption_rate: Option<f64>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<Identity> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.identity)
            .collect()
    }

    pub fn get(&self, identity: Identity) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.identity == identity)
    }
}

fn ratio(num: f64, den: f64) -> Option<f64> {
    (den != 0.0).then(|| num / den)
}

pub fn check_identities(acc: &NationalAccounts, tol: f64) -> IdentityReport {
    let rates = acc.rates();
    let income = acc.income();
    let beta = ratio(acc.earnings(), income);
    let rho = ratio(acc.profit(), income);
    let r_over_omega = ratio(rates.r, rates.omega);

    let sides = |identity: Identity| -> Option<(f64, f64)> {
        match identity {
            Identity::ConsumptionEqualsIncome => Some((acc.consumption(), income)),
            Identity::IncomeDecomposition => Some((income, acc.earnings() + acc.profit())),
            Identity::SharesSumToOne => Some((beta? + rho?, 1.0)),
            Identity::ProfitRatio => Some((rho?, r_over_omega?)),
            Identity::BowleyRatio => Some((beta?, 1.0 - r_over_omega?)),
            Identity::RateEquality => Some((rates.omega, rates.gamma)),
            Identity::FlowBalance => Some((rates.omega * acc.wealth(), rates.gamma * acc.wealth())),
        }
    };

    let checks = Identity::ALL
        .iter()
        .map(|&identity| {
            let (left, right, residual) = match sides(identity) {
                Some((l, r)) => (l, r, (l - r).abs()),
                None => (f64::NAN, f64::NAN, f64::INFINITY),
            };
            IdentityCheck {
                identity,
                left,
                right,
                residual,
                pass: residual <= tol,
            }
        })
        .collect();

    IdentityReport {
        tolerance: tol,
        checks,
        profit_ratio_via_income_rate: ratio(rates.r, rates.gamma),
        profit_ratio_via_consumption_rate: r_over_omega,
    }
}
