use std::fmt::Write as _;

use firewsn_core::montecarlo::{binomial_std_error, estimate_sensing_probability};
use firewsn_core::FireModelKind;

use crate::config::{ScenarioConfig, SweepAxis};
use crate::csvout::{fmt_num, Table};
use crate::error::CliError;

/// Half-width of the agreement band, in binomial standard errors.
pub const BAND_SIGMAS: f64 = 3.0;

/// Output of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub csv: String,
    pub summary: String,
    /// Grid points of convex models whose empirical estimate left the band.
    pub band_violations: usize,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.band_violations > 0 {
            1
        } else {
            0
        }
    }
}

/// Analytic `p(t)` and mean detector counts on the time grid, plus the
/// critical time, detection probability and critical density per model.
///
/// The critical time is added to each model's grid when missing and its row
/// is flagged, so every summary value can be read back from the table:
/// `p_f` is `p_analytic` on that row and
/// `λ_cr = λ ln(1/(1−τ)) / n_mean_detectors` there.
pub fn analyze(config: &ScenarioConfig, models: &[FireModelKind]) -> Result<Report, CliError> {
    let mut table = Table::new(&[
        "model[-]",
        "t[s]",
        "p_analytic[1]",
        "n_mean_detectors[1]",
        "critical[1]",
    ])?;
    let mut summary = String::new();
    for &kind in models {
        let scenario = config.scenario(kind)?;
        let t_cr = scenario.critical_time();
        let mut grid = config.time_grid(&scenario)?;
        if !grid.contains(&t_cr) {
            let at = grid.partition_point(|&t| t < t_cr);
            grid.insert(at, t_cr);
        }
        for t in grid {
            table.row([
                kind.name().to_owned(),
                fmt_num(t),
                fmt_num(scenario.sensing_probability(t)?),
                fmt_num(scenario.mean_detectors(t)?),
                if t == t_cr { "1" } else { "0" }.to_owned(),
            ])?;
        }
        writeln!(
            summary,
            "{kind:<10}  t_cr = {} s  p_f = {}  lambda_cr(tau={}) = {} /m^2",
            fmt_num(t_cr),
            fmt_num(scenario.detection_probability()),
            fmt_num(scenario.tau),
            fmt_num(scenario.critical_density()),
        )
        .unwrap();
    }
    Ok(Report {
        csv: table.finish(),
        summary,
        band_violations: 0,
    })
}

/// Monte Carlo `p̂(t)` against the analytic curve.
///
/// A grid point is in band when `|p̂ − p| ≤ 3 σ` with
/// `σ = max(√(p(1−p)/n), 1/n)`. Piriform points are reported but never
/// counted as violations: the analytic curve uses the Steiner formula, which
/// only holds for convex fronts.
pub fn simulate(config: &ScenarioConfig, models: &[FireModelKind]) -> Result<Report, CliError> {
    let n = config.simulation.realizations;
    if n == 0 {
        return Err(CliError::InvalidConfig("simulation.realizations must be >= 1".into()));
    }
    let mut table = Table::new(&[
        "model[-]",
        "t[s]",
        "p_analytic[1]",
        "p_empirical[1]",
        "stderr[1]",
        "n[1]",
        "in_band[1]",
    ])?;
    let mut summary = String::new();
    let mut violations = 0;
    for &kind in models {
        let scenario = config.scenario(kind)?;
        let grid = config.time_grid(&scenario)?;
        let curve = estimate_sensing_probability(&scenario, &grid, n, config.simulation.seed)?;
        let std_errors = curve.std_errors.as_deref().unwrap_or_default();
        let mut outside = 0;
        let mut worst: f64 = 0.0;
        for (i, (t, p_hat)) in curve.points().enumerate() {
            let p = scenario.sensing_probability(t)?;
            let z = (p_hat - p).abs() / binomial_std_error(p, n);
            let in_band = z <= BAND_SIGMAS;
            worst = worst.max(z);
            outside += usize::from(!in_band);
            table.row([
                kind.name().to_owned(),
                fmt_num(t),
                fmt_num(p),
                fmt_num(p_hat),
                fmt_num(std_errors[i]),
                n.to_string(),
                u8::from(in_band).to_string(),
            ])?;
        }
        let note = if kind.is_convex() {
            violations += outside;
            ""
        } else {
            " (informational: Steiner formula on a non-convex front)"
        };
        writeln!(
            summary,
            "{kind:<10}  {outside}/{} points outside the {BAND_SIGMAS}-sigma band, max z = {}{note}",
            grid.len(),
            fmt_num(worst),
        )
        .unwrap();
    }
    Ok(Report {
        csv: table.finish(),
        summary,
        band_violations: violations,
    })
}

/// Critical time, critical density and detection probability along one axis.
pub fn sweep(config: &ScenarioConfig, models: &[FireModelKind]) -> Result<Report, CliError> {
    let axis = config.sweep.axis;
    let values = config.sweep.values()?;
    let mut table = Table::new(&["model[-]", axis.header(), "t_cr[s]", "lambda_cr[1/m^2]", "p_f[1]"])?;
    let mut summary = String::new();
    for &kind in models {
        let mut densities = Vec::with_capacity(values.len());
        for &v in &values {
            let mut cfg = config.clone();
            match axis {
                SweepAxis::Density => cfg.scenario.density = v,
                SweepAxis::Wind => cfg.scenario.wind_x = v,
                SweepAxis::Tau => cfg.scenario.tau = v,
            }
            let scenario = cfg.scenario(kind)?;
            let lambda_cr = scenario.critical_density();
            densities.push(lambda_cr);
            table.row([
                kind.name().to_owned(),
                fmt_num(v),
                fmt_num(scenario.critical_time()),
                fmt_num(lambda_cr),
                fmt_num(scenario.detection_probability()),
            ])?;
        }
        writeln!(
            summary,
            "{kind:<10}  lambda_cr over {axis}: {}",
            describe_trend(&densities)
        )
        .unwrap();
    }
    Ok(Report {
        csv: table.finish(),
        summary,
        band_violations: 0,
    })
}

fn describe_trend(v: &[f64]) -> &'static str {
    let up = v.windows(2).any(|w| w[1] > w[0]);
    let down = v.windows(2).any(|w| w[1] < w[0]);
    match (up, down) {
        (true, true) => "non-monotone",
        (true, false) => "increasing",
        (false, true) => "decreasing",
        (false, false) => "constant",
    }
}
