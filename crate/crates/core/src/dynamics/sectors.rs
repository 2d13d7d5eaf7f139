//! Multi-sector scenarios: sectors whose wage bills and profits drift on
//! exogenous schedules, plus one absorber sector that takes up whatever is
//! needed to keep the aggregate economy in flow balance.
//!
//! Aggregate wealth obeys the single-economy law with the summed wage bill,
//! so aggregate profit is `r W`. The absorber holds the residual profit
//! `r W - sum(other profits)` and its wage bill relaxes at rate `lambda`
//! toward `omega W - r W - sum(other wage bills)`.

use std::collections::HashSet;
use std::fmt;

use super::DynamicsError;

/// Piecewise-linear multiplier over model years, held flat outside its points.
/// An empty schedule is the constant 1.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DriftSchedule {
    points: Vec<(f64, f64)>,
}

impl DriftSchedule {
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self, DynamicsError> {
        for &(year, mult) in &points {
            if !year.is_finite() || !mult.is_finite() {
                return Err(DynamicsError::InvalidScenario(format!(
                    "drift point {year}:{mult} is not finite"
                )));
            }
            if mult < 0.0 {
                return Err(DynamicsError::InvalidScenario(format!(
                    "drift multiplier {mult} at year {year} is negative"
                )));
            }
        }
        if points.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(DynamicsError::InvalidScenario(
                "drift years must be strictly increasing".into(),
            ));
        }
        Ok(Self { points })
    }

    pub fn constant() -> Self {
        Self::default()
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn multiplier_at(&self, year: f64) -> f64 {
        let (first, last) = match (self.points.first(), self.points.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return 1.0,
        };
        if year <= first.0 {
            return first.1;
        }
        if year >= last.0 {
            return last.1;
        }
        let i = self.points.partition_point(|p| p.0 <= year);
        let (y0, m0) = self.points[i - 1];
        let (y1, m1) = self.points[i];
        m0 + (m1 - m0) * (year - y0) / (y1 - y0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SectorSpec {
    pub name: String,
    /// Wage bill at year 0, per year.
    pub wage_bill: f64,
    /// Profit at year 0, per year. Ignored for the absorber, whose profit is
    /// always the residual.
    pub profit: f64,
    pub wage_drift: DriftSchedule,
    pub profit_drift: DriftSchedule,
    pub absorber: bool,
    /// Labour share the drift schedules are calibrated to reach at the end
    /// of the run. Informational only.
    pub target_beta: Option<f64>,
}

impl SectorSpec {
    pub fn new(name: impl Into<String>, wage_bill: f64, profit: f64) -> Self {
        Self {
            name: name.into(),
            wage_bill,
            profit,
            wage_drift: DriftSchedule::constant(),
            profit_drift: DriftSchedule::constant(),
            absorber: false,
            target_beta: None,
        }
    }

    pub fn absorber(mut self) -> Self {
        self.absorber = true;
        self
    }

    pub fn with_drift(mut self, wage: DriftSchedule, profit: DriftSchedule) -> Self {
        self.wage_drift = wage;
        self.profit_drift = profit;
        self
    }

    fn flows_at(&self, year: f64) -> (f64, f64) {
        (
            self.wage_bill * self.wage_drift.multiplier_at(year),
            self.profit * self.profit_drift.multiplier_at(year),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorsConfig {
    pub profit_rate: f64,
    pub consumption_rate: f64,
    /// Length of the run in years.
    pub horizon: f64,
    pub step: f64,
    /// Relaxation rate of the absorber wage bill, per year.
    pub relaxation: f64,
    /// Starting aggregate wealth. Defaults to the balance point of the
    /// initial wage bills, `sum(e) / (omega - r)`.
    pub initial_wealth: Option<f64>,
}

impl Default for SectorsConfig {
    fn default() -> Self {
        Self {
            profit_rate: 0.05,
            consumption_rate: 0.25,
            horizon: 38.0,
            step: 1.0,
            relaxation: 0.5,
            initial_wealth: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbsorbedQuantity {
    WageBill,
    Profit,
}

impl fmt::Display for AbsorbedQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AbsorbedQuantity::WageBill => "wage bill",
            AbsorbedQuantity::Profit => "profit",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorRecord {
    pub earnings: f64,
    pub profit: f64,
    pub income: f64,
    /// NaN when the sector has no income.
    pub beta: f64,
}

impl SectorRecord {
    fn new(earnings: f64, profit: f64) -> Self {
        let income = earnings + profit;
        Self {
            earnings,
            profit,
            income,
            beta: if income == 0.0 { f64::NAN } else { earnings / income },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SectoralStep {
    pub step: usize,
    pub time: f64,
    /// In the same order as the scenario's sectors.
    pub sectors: Vec<SectorRecord>,
    /// Sums over `sectors`.
    pub aggregate: SectorRecord,
    pub consumption: f64,
    pub wealth: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SectoralTrajectory {
    pub names: Vec<String>,
    pub steps: Vec<SectoralStep>,
}

impl SectoralTrajectory {
    /// Min and max aggregate labour share over records with `time >= after`.
    pub fn aggregate_beta_range(&self, after: f64) -> Option<(f64, f64)> {
        self.steps
            .iter()
            .filter(|s| s.time >= after)
            .map(|s| s.aggregate.beta)
            .fold(None, |acc, b| match acc {
                None => Some((b, b)),
                Some((lo, hi)) => Some((lo.min(b), hi.max(b))),
            })
    }

    /// First and last labour share of sector `index`.
    pub fn sector_beta_endpoints(&self, index: usize) -> Option<(f64, f64)> {
        let first = self.steps.first()?.sectors.get(index)?.beta;
        let last = self.steps.last()?.sectors.get(index)?.beta;
        Some((first, last))
    }
}

fn validate(sectors: &[SectorSpec], cfg: &SectorsConfig) -> Result<(usize, usize), DynamicsError> {
    let invalid = |msg: String| Err(DynamicsError::InvalidScenario(msg));
    if sectors.is_empty() {
        return invalid("scenario has no sectors".into());
    }
    let absorbers: Vec<usize> = sectors
        .iter()
        .enumerate()
        .filter(|(_, s)| s.absorber)
        .map(|(i, _)| i)
        .collect();
    if absorbers.len() != 1 {
        return invalid(format!(
            "exactly one absorber sector required, found {}",
            absorbers.len()
        ));
    }
    let mut seen = HashSet::new();
    for s in sectors {
        if s.name.trim().is_empty() {
            return invalid("sector name is empty".into());
        }
        if !seen.insert(s.name.as_str()) {
            return invalid(format!("duplicate sector name {}", s.name));
        }
        if !(s.wage_bill.is_finite() && s.wage_bill >= 0.0) {
            return invalid(format!("sector {}: e0 must be >= 0", s.name));
        }
        if !(s.profit.is_finite() && s.profit >= 0.0) {
            return invalid(format!("sector {}: pi0 must be >= 0", s.name));
        }
    }
    let r = cfg.profit_rate;
    let omega = cfg.consumption_rate;
    if !(r.is_finite() && r >= 0.0 && omega.is_finite()) {
        return invalid("r must be >= 0 and omega finite".into());
    }
    if !(omega > r) {
        return Err(DynamicsError::NoSteadyState {
            profit_rate: r,
            consumption_rate: omega,
        });
    }
    if !(cfg.relaxation.is_finite() && cfg.relaxation > 0.0) {
        return invalid(format!("lambda must be > 0, got {}", cfg.relaxation));
    }
    if !(cfg.step.is_finite() && cfg.step > 0.0) {
        return invalid(format!("dt must be > 0, got {}", cfg.step));
    }
    if !(cfg.horizon.is_finite() && cfg.horizon >= 0.0) {
        return invalid(format!("horizon must be >= 0, got {}", cfg.horizon));
    }
    let n = (cfg.horizon / cfg.step).round();
    if (n * cfg.step - cfg.horizon).abs() > 1e-9 * cfg.horizon.max(1.0) {
        return invalid(format!(
            "horizon {} is not a whole number of steps of {}",
            cfg.horizon, cfg.step
        ));
    }
    // Per-step factor of the flow gap E - (omega - r) W.
    let factor = (1.0 - cfg.step * cfg.relaxation) * (1.0 - cfg.step * (omega - r));
    if factor.abs() >= 1.0 {
        return invalid(format!(
            "dt={} with lambda={} does not contract the flow gap (factor {factor})",
            cfg.step, cfg.relaxation
        ));
    }
    Ok((absorbers[0], n as usize))
}

pub fn simulate_sectors(
    sectors: &[SectorSpec],
    cfg: &SectorsConfig,
) -> Result<SectoralTrajectory, DynamicsError> {
    let (abs, n) = validate(sectors, cfg)?;
    let r = cfg.profit_rate;
    let omega = cfg.consumption_rate;
    let dt = cfg.step;

    let initial_wages: f64 = sectors.iter().map(|s| s.wage_bill).sum();
    let mut wealth = cfg
        .initial_wealth
        .unwrap_or(initial_wages / (omega - r));
    if !(wealth.is_finite() && wealth > 0.0) {
        return Err(DynamicsError::InvalidScenario(format!(
            "initial wealth must be > 0, got {wealth}"
        )));
    }
    let mut absorber_wages = sectors[abs].wage_bill;
    let absorber_name = &sectors[abs].name;

    let mut steps = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let time = k as f64 * dt;
        let mut records: Vec<SectorRecord> = Vec::with_capacity(sectors.len());
        let (mut other_wages, mut other_profit) = (0.0, 0.0);
        for (i, s) in sectors.iter().enumerate() {
            if i == abs {
                records.push(SectorRecord::new(0.0, 0.0));
                continue;
            }
            let (e, pi) = s.flows_at(time);
            other_wages += e;
            other_profit += pi;
            records.push(SectorRecord::new(e, pi));
        }

        let absorber_profit = r * wealth - other_profit;
        if absorber_profit < 0.0 {
            return Err(DynamicsError::AbsorberNegative {
                sector: absorber_name.clone(),
                quantity: AbsorbedQuantity::Profit,
                step: k,
                time,
                value: absorber_profit,
            });
        }
        if k > 0 {
            let target = omega * wealth - r * wealth - other_wages;
            absorber_wages += dt * cfg.relaxation * (target - absorber_wages);
        }
        if absorber_wages < 0.0 {
            return Err(DynamicsError::AbsorberNegative {
                sector: absorber_name.clone(),
                quantity: AbsorbedQuantity::WageBill,
                step: k,
                time,
                value: absorber_wages,
            });
        }
        records[abs] = SectorRecord::new(absorber_wages, absorber_profit);

        let aggregate = SectorRecord::new(
            records.iter().map(|s| s.earnings).sum(),
            records.iter().map(|s| s.profit).sum(),
        );
        let consumption = omega * wealth;
        steps.push(SectoralStep {
            step: k,
            time,
            sectors: records,
            aggregate,
            consumption,
            wealth,
        });

        if k < n {
            let next = wealth + dt * (aggregate.income - consumption);
            if !(next > 0.0) {
                return Err(DynamicsError::NonPositiveWealth {
                    time: time + dt,
                    wealth: next,
                });
            }
            wealth = next;
        }
    }

    Ok(SectoralTrajectory {
        names: sectors.iter().map(|s| s.name.clone()).collect(),
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn schedule(points: &[(f64, f64)]) -> DriftSchedule {
        DriftSchedule::new(points.to_vec()).unwrap()
    }

    #[test]
    fn schedule_interpolates_and_holds() {
        let s = schedule(&[(0.0, 1.0), (10.0, 2.0), (20.0, 0.0)]);
        assert_eq!(s.multiplier_at(-5.0), 1.0);
        assert_eq!(s.multiplier_at(0.0), 1.0);
        assert!((s.multiplier_at(5.0) - 1.5).abs() < 1e-15);
        assert_eq!(s.multiplier_at(10.0), 2.0);
        assert!((s.multiplier_at(15.0) - 1.0).abs() < 1e-15);
        assert_eq!(s.multiplier_at(25.0), 0.0);
        assert_eq!(DriftSchedule::constant().multiplier_at(3.0), 1.0);
    }

    #[test]
    fn schedule_rejects_bad_points() {
        assert!(DriftSchedule::new(vec![(0.0, -1.0)]).is_err());
        assert!(DriftSchedule::new(vec![(1.0, 1.0), (1.0, 2.0)]).is_err());
        assert!(DriftSchedule::new(vec![(f64::NAN, 1.0)]).is_err());
    }

    #[test]
    fn single_absorber_without_drift_sits_at_steady_state() {
        let sectors = [SectorSpec::new("all", 1.0, 0.0).absorber()];
        let t = simulate_sectors(&sectors, &SectorsConfig::default()).unwrap();
        for s in &t.steps {
            assert!((s.aggregate.beta - 0.8).abs() < 1e-12);
            assert!((s.wealth - 5.0).abs() < 1e-12);
        }
    }

    #[test]
    fn single_absorber_relaxes_from_off_balance_start() {
        let sectors = [SectorSpec::new("all", 1.0, 0.0).absorber()];
        let cfg = SectorsConfig {
            horizon: 200.0,
            initial_wealth: Some(3.0),
            ..SectorsConfig::default()
        };
        let t = simulate_sectors(&sectors, &cfg).unwrap();
        let last = t.steps.last().unwrap();
        assert!((last.aggregate.beta - 0.8).abs() < 1e-9);
        assert!((last.aggregate.income - last.consumption).abs() < 1e-9);
    }

    #[test]
    fn instantaneous_relaxation_balances_every_step() {
        let sectors = [
            SectorSpec::new("industry", 1.0, 0.3),
            SectorSpec::new("services", 2.0, 0.0).absorber(),
        ];
        let cfg = SectorsConfig {
            relaxation: 1.0,
            initial_wealth: Some(18.0),
            ..SectorsConfig::default()
        };
        let t = simulate_sectors(&sectors, &cfg).unwrap();
        for s in t.steps.iter().skip(1) {
            let other = s.sectors[0].earnings;
            let expected = cfg.consumption_rate * s.wealth - s.aggregate.profit - other;
            assert!((s.sectors[1].earnings - expected).abs() < 1e-12);
            assert!((s.consumption - s.aggregate.income).abs() < 1e-12);
        }
    }

    #[test]
    fn aggregate_equals_sum_of_sectors() {
        let sectors = [
            SectorSpec::new("a", 0.8, 0.2).with_drift(
                schedule(&[(0.0, 1.0), (38.0, 0.75)]),
                schedule(&[(0.0, 1.0), (38.0, 2.0)]),
            ),
            SectorSpec::new("b", 5.0, 0.0).absorber(),
        ];
        let t = simulate_sectors(&sectors, &SectorsConfig::default()).unwrap();
        for s in &t.steps {
            let e: f64 = s.sectors.iter().map(|x| x.earnings).sum();
            let pi: f64 = s.sectors.iter().map(|x| x.profit).sum();
            assert_eq!(s.aggregate.beta, e / (e + pi));
            assert!((pi - 0.05 * s.wealth).abs() < 1e-12);
        }
    }

    #[test]
    fn validation_errors() {
        let cfg = SectorsConfig::default();
        let no_absorber = [SectorSpec::new("a", 1.0, 0.1)];
        assert!(matches!(
            simulate_sectors(&no_absorber, &cfg),
            Err(DynamicsError::InvalidScenario(_))
        ));
        let two = [
            SectorSpec::new("a", 1.0, 0.1).absorber(),
            SectorSpec::new("b", 1.0, 0.1).absorber(),
        ];
        assert!(simulate_sectors(&two, &cfg).is_err());
        let dup = [
            SectorSpec::new("a", 1.0, 0.1),
            SectorSpec::new("a", 1.0, 0.1).absorber(),
        ];
        assert!(simulate_sectors(&dup, &cfg).is_err());
        let one = [SectorSpec::new("a", 1.0, 0.0).absorber()];
        let bad_rates = SectorsConfig { profit_rate: 0.3, ..cfg };
        assert!(matches!(
            simulate_sectors(&one, &bad_rates),
            Err(DynamicsError::NoSteadyState { .. })
        ));
        let bad_lambda = SectorsConfig { relaxation: 0.0, ..cfg };
        assert!(simulate_sectors(&one, &bad_lambda).is_err());
        let overshoot = SectorsConfig { relaxation: 3.0, ..cfg };
        assert!(simulate_sectors(&one, &overshoot).is_err());
        let ragged = SectorsConfig { horizon: 10.5, ..cfg };
        assert!(simulate_sectors(&one, &ragged).is_err());
    }

    #[test]
    fn absorber_wages_cannot_go_negative() {
        let sectors = [
            SectorSpec::new("boom", 1.0, 0.0)
                .with_drift(schedule(&[(0.0, 1.0), (10.0, 5.0)]), DriftSchedule::constant()),
            SectorSpec::new("services", 1.0, 0.0).absorber(),
        ];
        let err = simulate_sectors(&sectors, &SectorsConfig::default()).unwrap_err();
        match err {
            DynamicsError::AbsorberNegative { sector, quantity, step, .. } => {
                assert_eq!(sector, "services");
                assert_eq!(quantity, AbsorbedQuantity::WageBill);
                assert!(step > 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn absorber_profit_cannot_go_negative() {
        let sectors = [
            SectorSpec::new("rentier", 0.0, 2.0),
            SectorSpec::new("services", 1.0, 0.0).absorber(),
        ];
        let err = simulate_sectors(&sectors, &SectorsConfig::default()).unwrap_err();
        assert!(matches!(
            err,
            DynamicsError::AbsorberNegative { quantity: AbsorbedQuantity::Profit, step: 0, .. }
        ));
    }
}
