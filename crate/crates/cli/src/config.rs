//! TOML scenario configuration.
//!
//! Every field is optional; the defaults are the reference parameters
//! (`r_in = 2 m`, `r_out = 4 m`, `α = 0.33 m/s`, `v_x = 3 m/s`, `V = 10 m/s`,
//! `A_cr = 20 m²`) with `λ = 0.1 /m²` and `τ = 0.9`. Units are fixed:
//! metres, seconds, sensors per square metre.
//!
//! ```toml
//! models = ["circular", "elliptical"]
//! output = "coverage.csv"
//!
//! [scenario]
//! density = 0.05
//! wind_x = 3.0
//!
//! [time_grid]
//! start = 0.0
//! stop = 8.0      # omit to stop at each model's critical time
//! steps = 20
//!
//! [simulation]
//! realizations = 10000
//! seed = 1
//!
//! [sweep]
//! axis = "wind"   # density | wind | tau
//! start = 0.0
//! stop = 10.0
//! steps = 11
//! # values = [0.5, 0.9, 0.99]   # overrides start/stop/steps
//! ```

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use firewsn_core::{FireGrowthParams, FireModelKind, FireScenario, HybridRadiusModel};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScenarioConfig {
    /// Fire models to evaluate, by name.
    pub models: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    pub scenario: ScenarioSection,
    pub time_grid: TimeGridSpec,
    pub simulation: SimulationSection,
    pub sweep: SweepSpec,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            models: FireModelKind::ALL.iter().map(|k| k.name().to_owned()).collect(),
            output: None,
            scenario: ScenarioSection::default(),
            time_grid: TimeGridSpec::default(),
            simulation: SimulationSection::default(),
            sweep: SweepSpec::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScenarioSection {
    /// Sensors per m².
    pub density: f64,
    pub r_in: f64,
    pub r_out: f64,
    /// Front speed without wind, m/s.
    pub alpha: f64,
    pub wind_x: f64,
    pub scale_speed: f64,
    pub critical_area: f64,
    pub tau: f64,
}

impl Default for ScenarioSection {
    fn default() -> Self {
        Self {
            density: 0.1,
            r_in: 2.0,
            r_out: 4.0,
            alpha: 0.33,
            wind_x: 3.0,
            scale_speed: 10.0,
            critical_area: 20.0,
            tau: 0.9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TimeGridSpec {
    pub start: f64,
    /// Last grid time; defaults to the model's critical time.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stop: Option<f64>,
    /// Number of grid points.
    pub steps: usize,
}

impl Default for TimeGridSpec {
    fn default() -> Self {
        Self {
            start: 0.0,
            stop: None,
            steps: 20,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimulationSection {
    pub realizations: usize,
    pub seed: u64,
}

impl Default for SimulationSection {
    fn default() -> Self {
        Self {
            realizations: 10_000,
            seed: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepAxis {
    Density,
    Wind,
    Tau,
}

impl SweepAxis {
    /// CSV header for the axis column.
    pub fn header(self) -> &'static str {
        match self {
            Self::Density => "lambda[1/m^2]",
            Self::Wind => "v_x[m/s]",
            Self::Tau => "tau[1]",
        }
    }
}

impl fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Density => "density",
            Self::Wind => "wind",
            Self::Tau => "tau",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepSpec {
    pub axis: SweepAxis,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<f64>>,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            axis: SweepAxis::Wind,
            start: 0.0,
            stop: 10.0,
            steps: 11,
            values: None,
        }
    }
}

impl SweepSpec {
    pub fn values(&self) -> Result<Vec<f64>, CliError> {
        if let Some(v) = &self.values {
            if v.is_empty() {
                return Err(CliError::InvalidConfig("sweep.values is empty".into()));
            }
            return Ok(v.clone());
        }
        linspace(self.start, self.stop, self.steps, "sweep")
    }
}

fn linspace(start: f64, stop: f64, steps: usize, what: &str) -> Result<Vec<f64>, CliError> {
    if steps == 0 {
        return Err(CliError::InvalidConfig(format!("{what}.steps must be >= 1")));
    }
    if !(start.is_finite() && stop.is_finite() && stop >= start) {
        return Err(CliError::InvalidConfig(format!(
            "{what} range [{start}, {stop}] must be finite with stop >= start"
        )));
    }
    if steps == 1 {
        return Ok(vec![start]);
    }
    let last = steps - 1;
    Ok((0..steps)
        .map(|i| {
            if i == last {
                stop
            } else {
                start + (stop - start) * i as f64 / last as f64
            }
        })
        .collect())
}

impl ScenarioConfig {
    pub fn parse(text: &str, origin: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::ParseConfig {
            path: origin.to_owned(),
            message: e.to_string(),
        })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::ReadConfig {
            path: path.to_owned(),
            source,
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Serializes back to TOML. Fails for seeds above `i64::MAX`, which
    /// TOML integers cannot hold.
    pub fn to_toml(&self) -> Result<String, CliError> {
        toml::to_string(self).map_err(|e| CliError::InvalidConfig(e.to_string()))
    }

    pub fn model_kinds(&self) -> Result<Vec<FireModelKind>, CliError> {
        if self.models.is_empty() {
            return Err(CliError::InvalidConfig("models list is empty".into()));
        }
        self.models
            .iter()
            .map(|m| FireModelKind::from_str(m).map_err(|e| CliError::InvalidConfig(e.to_string())))
            .collect()
    }

    /// The validated scenario for one fire model.
    pub fn scenario(&self, kind: FireModelKind) -> Result<FireScenario, CliError> {
        let s = &self.scenario;
        Ok(FireScenario::new(
            s.density,
            HybridRadiusModel::new(s.r_in, s.r_out)?,
            FireGrowthParams::new(kind, s.alpha, s.wind_x, s.scale_speed)?,
            s.critical_area,
            s.tau,
        )?)
    }

    /// Time grid for one model; `stop` defaults to its critical time.
    pub fn time_grid(&self, scenario: &FireScenario) -> Result<Vec<f64>, CliError> {
        let g = &self.time_grid;
        if g.start < 0.0 {
            return Err(CliError::InvalidConfig("time_grid.start must be >= 0".into()));
        }
        let stop = g.stop.unwrap_or_else(|| scenario.critical_time());
        linspace(g.start, stop, g.steps, "time_grid")
    }

    /// Validates everything a command could touch.
    pub fn validate(&self) -> Result<(), CliError> {
        for kind in self.model_kinds()? {
            let s = self.scenario(kind)?;
            self.time_grid(&s)?;
        }
        if self.simulation.realizations == 0 {
            return Err(CliError::InvalidConfig("simulation.realizations must be >= 1".into()));
        }
        self.sweep.values()?;
        Ok(())
    }
}
