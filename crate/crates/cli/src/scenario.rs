//! Sector scenario files.
//!
//! ```text
//! r = 0.05
//! omega = 0.25
//! horizon = 38
//! dt = 0.25
//! lambda = 0.5
//! burn_in = 5
//!
//! [sector]
//! name = agriculture
//! e0 = 0.8
//! pi0 = 0.2
//! wage_drift = 0:1, 38:0.75
//! profit_drift = 0:1, 38:2
//! target_beta = 0.6
//!
//! [sector]
//! name = services
//! e0 = 5.7
//! absorber = true
//! ```

use bowley_core::dynamics::{DriftSchedule, SectorSpec, SectorsConfig};

use crate::config::{parse_f64, parse_lines, Entry, Line};
use crate::CliError;

/// Sector name reserved for aggregate rows in the output table.
pub const AGGREGATE_NAME: &str = "aggregate";

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub config: SectorsConfig,
    /// Aggregate constancy is summarised over `time >= burn_in`.
    pub burn_in: f64,
    pub sectors: Vec<SectorSpec>,
}

fn parse_drift(entry: &Entry) -> Result<DriftSchedule, CliError> {
    let bad = |why: String| CliError::Input(format!("line {}: {}: {why}", entry.line, entry.key));
    let mut points = Vec::new();
    for item in entry
        .value
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
    {
        let (year, mult) = item
            .split_once(':')
            .ok_or_else(|| bad(format!("expected year:multiplier, got {item:?}")))?;
        let parse = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| bad(format!("{s:?} is not a number")))
        };
        points.push((parse(year)?, parse(mult)?));
    }
    DriftSchedule::new(points).map_err(|e| bad(e.to_string()))
}

fn parse_bool(entry: &Entry) -> Result<bool, CliError> {
    match entry.value.as_str() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        other => Err(CliError::Input(format!(
            "line {}: {} = {other:?} is not a boolean",
            entry.line, entry.key
        ))),
    }
}

#[derive(Default)]
struct SectorDraft {
    line: usize,
    name: Option<String>,
    e0: Option<f64>,
    pi0: Option<f64>,
    wage_drift: DriftSchedule,
    profit_drift: DriftSchedule,
    absorber: bool,
    target_beta: Option<f64>,
}

impl SectorDraft {
    fn set(&mut self, entry: &Entry) -> Result<(), CliError> {
        match entry.key.as_str() {
            "name" => self.name = Some(entry.value.clone()),
            "e0" => self.e0 = Some(parse_f64(entry)?),
            "pi0" => self.pi0 = Some(parse_f64(entry)?),
            "wage_drift" => self.wage_drift = parse_drift(entry)?,
            "profit_drift" => self.profit_drift = parse_drift(entry)?,
            "absorber" => self.absorber = parse_bool(entry)?,
            "target_beta" => self.target_beta = Some(parse_f64(entry)?),
            other => {
                return Err(CliError::Input(format!(
                    "line {}: unknown sector key {other:?}",
                    entry.line
                )))
            }
        }
        Ok(())
    }

    fn finish(self) -> Result<SectorSpec, CliError> {
        let missing =
            |key: &str| CliError::Input(format!("sector at line {}: missing {key}", self.line));
        let name = self.name.clone().ok_or_else(|| missing("name"))?;
        if name == AGGREGATE_NAME {
            return Err(CliError::Input(format!(
                "sector at line {}: name {AGGREGATE_NAME:?} is reserved",
                self.line
            )));
        }
        let e0 = self.e0.ok_or_else(|| missing("e0"))?;
        let pi0 = match (self.pi0, self.absorber) {
            (Some(p), _) => p,
            (None, true) => 0.0,
            (None, false) => return Err(missing("pi0")),
        };
        Ok(SectorSpec {
            name,
            wage_bill: e0,
            profit: pi0,
            wage_drift: self.wage_drift,
            profit_drift: self.profit_drift,
            absorber: self.absorber,
            target_beta: self.target_beta,
        })
    }
}

pub fn parse_scenario(text: &str) -> Result<Scenario, CliError> {
    let mut config = SectorsConfig::default();
    let mut burn_in = 5.0;
    let mut sectors = Vec::new();
    let mut current: Option<SectorDraft> = None;

    for line in parse_lines(text)? {
        match line {
            Line::Section { line, name } => {
                if name != "sector" {
                    return Err(CliError::Input(format!(
                        "line {line}: unknown section [{name}]"
                    )));
                }
                if let Some(draft) = current.take() {
                    sectors.push(draft.finish()?);
                }
                current = Some(SectorDraft {
                    line,
                    ..SectorDraft::default()
                });
            }
            Line::Entry(entry) => match current.as_mut() {
                Some(draft) => draft.set(&entry)?,
                None => match entry.key.as_str() {
                    "r" => config.profit_rate = parse_f64(&entry)?,
                    "omega" => config.consumption_rate = parse_f64(&entry)?,
                    "horizon" => config.horizon = parse_f64(&entry)?,
                    "dt" => config.step = parse_f64(&entry)?,
                    "lambda" => config.relaxation = parse_f64(&entry)?,
                    "initial_wealth" => config.initial_wealth = Some(parse_f64(&entry)?),
                    "burn_in" => burn_in = parse_f64(&entry)?,
                    other => {
                        return Err(CliError::Input(format!(
                            "line {}: unknown scenario key {other:?}",
                            entry.line
                        )))
                    }
                },
            },
        }
    }
    if let Some(draft) = current.take() {
        sectors.push(draft.finish()?);
    }
    Ok(Scenario {
        config,
        burn_in,
        sectors,
    })
}
