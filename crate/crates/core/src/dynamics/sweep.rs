use rayon::prelude::*;

use super::single::{simulate_single, steady_state, EconomyParams, TerminalStatus};
use super::DynamicsError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub wage_bill: f64,
    pub profit_rate: f64,
    pub consumption_rate: f64,
}

impl GridPoint {
    pub fn new(wage_bill: f64, profit_rate: f64, consumption_rate: f64) -> Self {
        Self {
            wage_bill,
            profit_rate,
            consumption_rate,
        }
    }

    fn apply(&self, base: &EconomyParams) -> EconomyParams {
        EconomyParams {
            wage_bill: self.wage_bill,
            profit_rate: self.profit_rate,
            consumption_rate: self.consumption_rate,
            ..*base
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub point: GridPoint,
    /// Terminal status of the run, or the reason it could not start.
    pub status: Result<TerminalStatus, DynamicsError>,
    pub steps: usize,
    pub emergent_beta: Option<f64>,
    /// `1 - r / omega`, whenever omega is non-zero.
    pub predicted_beta: Option<f64>,
    /// `|emergent - predicted|` for converged rows.
    pub residual: Option<f64>,
    pub final_wealth: Option<f64>,
    /// Closed-form `e / (omega - r)` when it exists.
    pub steady_wealth: Option<f64>,
}

impl SweepRow {
    pub fn is_converged(&self) -> bool {
        matches!(self.status, Ok(TerminalStatus::Converged { .. }))
    }

    fn evaluate(point: GridPoint, base: &EconomyParams) -> Self {
        let params = point.apply(base);
        let predicted_beta = params.predicted_beta();
        let steady_wealth = steady_state(&params).ok().map(|s| s.wealth());
        match simulate_single(&params) {
            Ok(t) => SweepRow {
                point,
                status: Ok(t.status),
                steps: t.records.len().saturating_sub(1),
                emergent_beta: t.is_converged().then(|| t.final_beta()).flatten(),
                predicted_beta,
                residual: t.beta_residual(),
                final_wealth: t.last().map(|r| r.wealth),
                steady_wealth,
            },
            Err(e) => SweepRow {
                point,
                status: Err(e),
                steps: 0,
                emergent_beta: None,
                predicted_beta,
                residual: None,
                final_wealth: None,
                steady_wealth,
            },
        }
    }
}

/// Runs one simulation per grid point, in parallel.
///
/// Rows come back in grid order. Failing points are reported in their row;
/// only an empty grid is an error.
pub fn sweep(grid: &[GridPoint], base: &EconomyParams) -> Result<Vec<SweepRow>, DynamicsError> {
    if grid.is_empty() {
        return Err(DynamicsError::invalid("grid", "sweep grid is empty"));
    }
    Ok(grid
        .par_iter()
        .map(|&point| SweepRow::evaluate(point, base))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::DivergenceReason;

    #[test]
    fn reference_box_grid_spans_expected_range() {
        let mut grid = Vec::new();
        for r in [0.02, 0.05, 0.08] {
            for omega in [0.20, 0.25] {
                grid.push(GridPoint::new(1.0, r, omega));
            }
        }
        let rows = sweep(&grid, &EconomyParams::default()).unwrap();
        assert!(rows.iter().all(SweepRow::is_converged));
        let max_residual = rows.iter().filter_map(|r| r.residual).fold(0.0, f64::max);
        assert!(max_residual <= 1e-8);
        let betas: Vec<f64> = rows.iter().filter_map(|r| r.emergent_beta).collect();
        let lo = betas.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = betas.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        assert!((lo - 0.60).abs() < 1e-6 && (hi - 0.92).abs() < 1e-6);
        for (row, point) in rows.iter().zip(&grid) {
            assert_eq!(&row.point, point);
        }
    }

    #[test]
    fn zero_profit_point_is_all_wages() {
        let rows = sweep(&[GridPoint::new(1.0, 0.0, 0.2)], &EconomyParams::default()).unwrap();
        assert!((rows[0].emergent_beta.unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn failing_points_stay_in_their_rows() {
        let grid = [
            GridPoint::new(1.0, 0.3, 0.25),
            GridPoint::new(-1.0, 0.05, 0.25),
            GridPoint::new(1.0, 0.05, 0.25),
        ];
        let rows = sweep(&grid, &EconomyParams::default()).unwrap();
        assert_eq!(
            rows[0].status,
            Ok(TerminalStatus::Diverged(DivergenceReason::NoSteadyState))
        );
        assert!(rows[1].status.is_err());
        assert!(rows[2].is_converged());
    }

    #[test]
    fn empty_grid_is_rejected() {
        assert!(sweep(&[], &EconomyParams::default()).is_err());
    }
}
