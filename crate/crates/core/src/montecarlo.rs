//! Boolean–Poisson simulator used as an independent check on the analytics.
//!
//! Each realization drops `Poisson(λ |W|)` sensors uniformly into a window
//! `W` that contains every point able to reach the fire by the horizon, and
//! gives each an iid radius from the hybrid law. Detection is decided from
//! exact point-to-set distances, never from the Steiner expansion.
//!
//! Realization `i` under master seed `s` draws from ChaCha8 stream `i` keyed
//! by `s`, so estimates do not depend on how rayon schedules the work.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;

use crate::analytics::{check_time_grid, CoverageCurve, CurveKind, FireScenario};
use crate::error::{check, Result};
use crate::geometry::{golden_section_min, FireFront, FireGrowthParams, Point};
use crate::radius::HybridRadiusModel;

/// Fractional growth of the window beyond the reachable region.
pub const DEFAULT_WINDOW_MARGIN: f64 = 0.1;

/// Detection times are resolved to this many seconds.
pub const DETECTION_TIME_TOL: f64 = 1e-6;

const MAX_BISECTIONS: usize = 60;
// Boundary parameters scanned for the first contact of a non-nested front.
const CONTACT_SCAN: usize = 512;
const HIT_OR_MISS_BATCH: usize = 4096;

/// RNG for stream `stream` under master seed `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationWindow {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl SimulationWindow {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Result<Self> {
        for (name, v) in [("x_min", x_min), ("x_max", x_max), ("y_min", y_min), ("y_max", y_max)] {
            check(v.is_finite(), name, v, "window bounds must be finite")?;
        }
        check(x_max > x_min, "x_max", x_max, "must exceed x_min")?;
        check(y_max > y_min, "y_max", y_max, "must exceed y_min")?;
        Ok(Self {
            x_min,
            x_max,
            y_min,
            y_max,
        })
    }

    /// Bounding box of `front` grown by `reach` on every side, then scaled
    /// about its centre by `1 + margin` in each direction.
    pub fn covering(front: &FireFront, reach: f64, margin: f64) -> Result<Self> {
        check(margin >= 0.0, "margin", margin, "must be >= 0")?;
        check(reach >= 0.0, "reach", reach, "must be >= 0")?;
        let (lo, hi) = front.bounding_box();
        let half_w = 0.5 * (hi.x - lo.x) + reach;
        let half_h = 0.5 * (hi.y - lo.y) + reach;
        let (cx, cy) = (0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y));
        let (sw, sh) = (half_w * (1.0 + margin), half_h * (1.0 + margin));
        Self::new(cx - sw, cx + sw, cy - sh, cy + sh)
    }

    /// Window for a scenario simulated up to `t_max`. Only sensors within
    /// `r_out` of `K(t_max)` can ever detect the fire.
    pub fn for_scenario(scenario: &FireScenario, t_max: f64, margin: f64) -> Result<Self> {
        let front = scenario.front_at(t_max)?;
        let reach = scenario.radius.r_out().max(f64::MIN_POSITIVE);
        Self::covering(&front, reach, margin)
    }

    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.x_min && p.x <= self.x_max && p.y >= self.y_min && p.y <= self.y_max
    }

    fn sample_point<R: Rng + ?Sized>(&self, rng: &mut R) -> Point {
        Point::new(
            self.x_min + self.width() * rng.random::<f64>(),
            self.y_min + self.height() * rng.random::<f64>(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sensor {
    pub position: Point,
    pub radius: f64,
}

/// One draw of the sensor field restricted to a window.
#[derive(Debug, Clone, PartialEq)]
pub struct BooleanRealization {
    pub sensors: Vec<Sensor>,
    pub window: SimulationWindow,
    pub seed: u64,
    pub stream: u64,
}

/// Samples a realization from stream 0 of `seed`.
pub fn sample_realization(
    scenario: &FireScenario,
    window: SimulationWindow,
    seed: u64,
) -> Result<BooleanRealization> {
    sample_realization_stream(scenario, window, seed, 0)
}

pub fn sample_realization_stream(
    scenario: &FireScenario,
    window: SimulationWindow,
    seed: u64,
    stream: u64,
) -> Result<BooleanRealization> {
    scenario.validate()?;
    let mut rng = stream_rng(seed, stream);
    let sensors = sample_sensors(scenario.density, &scenario.radius, &window, &mut rng);
    Ok(BooleanRealization {
        sensors,
        window,
        seed,
        stream,
    })
}

fn sample_sensors<R: Rng + ?Sized>(
    density: f64,
    radius: &HybridRadiusModel,
    window: &SimulationWindow,
    rng: &mut R,
) -> Vec<Sensor> {
    let mean = density * window.area();
    if mean <= 0.0 {
        return Vec::new();
    }
    let count = Poisson::new(mean)
        .expect("mean count is finite and positive")
        .sample(rng) as usize;
    (0..count)
        .map(|_| {
            let position = window.sample_point(rng);
            let radius = radius.sample(rng);
            Sensor { position, radius }
        })
        .collect()
}

/// Whether some sensing disk meets the front; tangency counts.
pub fn detected_at(realization: &BooleanRealization, front: &FireFront) -> bool {
    realization
        .sensors
        .iter()
        .any(|s| front.distance_to(s.position) <= s.radius)
}

/// Number of sensing disks meeting the front.
pub fn detector_count(realization: &BooleanRealization, front: &FireFront) -> usize {
    realization
        .sensors
        .iter()
        .filter(|s| front.distance_to(s.position) <= s.radius)
        .count()
}

/// First time in `[0, t_max]` at which some sensing disk meets `K(t)`.
///
/// For nested fronts (circular, elliptical) each sensor's gap
/// `dist(x_i, K(t)) − r_i` is non-increasing in `t` and is bisected on
/// `[0, t]`, `t` being the best time found so far, to [`DETECTION_TIME_TOL`].
/// The reported time is the detected end of the final bracket.
///
/// The piriform is not nested near its cusp, so the gap can dip and recover.
/// Since every front is `K(t) = t K(1)`, the first contact with the disk
/// `B(x_i, r_i)` is the earliest time a scaled boundary point `t q(φ)`
/// enters it; that time is minimised over `φ` instead.
pub fn detection_time(
    realization: &BooleanRealization,
    growth: &FireGrowthParams,
    t_max: f64,
) -> Result<Option<f64>> {
    check(t_max.is_finite() && t_max > 0.0, "t_max", t_max, "must be > 0")?;
    growth.validate()?;
    let nested = growth.kind.is_convex();
    let unit = growth.front_at(1.0)?;
    let mut best: Option<f64> = None;
    for sensor in &realization.sensors {
        let gap = |t: f64| {
            growth
                .front_at(t)
                .expect("validated growth and t >= 0")
                .distance_to(sensor.position)
                - sensor.radius
        };
        if gap(0.0) <= 0.0 {
            return Ok(Some(0.0));
        }
        let horizon = best.unwrap_or(t_max);
        if nested {
            if gap(horizon) <= 0.0 {
                best = Some(bisect_contact(&gap, 0.0, horizon));
            }
        } else if let Some(t) = first_contact(&unit, sensor) {
            if t > horizon {
                continue;
            }
            // Step past rounding so the reported time is a detected one.
            let mut hit = t;
            let mut step = 1e-12 * t.max(1.0);
            while gap(hit) > 0.0 {
                hit = t + step;
                step *= 2.0;
            }
            if hit <= horizon {
                best = Some(hit);
            }
        }
    }
    Ok(best)
}

/// Earliest `t` with `t q(φ) ∈ B(p, r)` over boundary points `q(φ)` of `unit`,
/// for a sensor not covering the origin.
fn first_contact(unit: &FireFront, sensor: &Sensor) -> Option<f64> {
    let p = sensor.position;
    let c = p.x * p.x + p.y * p.y - sensor.radius * sensor.radius;
    // Smaller root of |q|² t² − 2 (p·q) t + c = 0, written to avoid cancellation.
    let entry = |phi: f64| {
        let q = unit.boundary_point(phi);
        let pq = p.x * q.x + p.y * q.y;
        let disc = pq * pq - (q.x * q.x + q.y * q.y) * c;
        if pq <= 0.0 || disc < 0.0 {
            f64::INFINITY
        } else {
            c / (pq + disc.sqrt())
        }
    };
    let step = 2.0 * std::f64::consts::PI / CONTACT_SCAN as f64;
    let (best_i, best_t) = (0..CONTACT_SCAN)
        .map(|i| (i, entry(i as f64 * step)))
        .fold((0, f64::INFINITY), |acc, x| if x.1 < acc.1 { x } else { acc });
    if !best_t.is_finite() {
        return None;
    }
    let centre = best_i as f64 * step;
    let refined = golden_section_min(entry, centre - step, centre + step, 1e-13);
    Some(refined.min(best_t))
}

// gap(lo) > 0 and gap(hi) <= 0 on entry.
fn bisect_contact<F: Fn(f64) -> f64>(gap: &F, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= 0.1 * DETECTION_TIME_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if gap(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Binomial estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmpiricalEstimate {
    pub value: f64,
    pub std_error: f64,
    pub n: usize,
}

impl EmpiricalEstimate {
    fn bernoulli(hits: usize, n: usize, scale: f64) -> Self {
        let p = hits as f64 / n as f64;
        Self {
            value: scale * p,
            std_error: scale * (p * (1.0 - p) / n as f64).sqrt(),
            n,
        }
    }

    /// `|value − expected| / std_error`; infinite when a zero-error estimate misses.
    pub fn z_score(&self, expected: f64) -> f64 {
        let dev = (self.value - expected).abs();
        if dev == 0.0 {
            0.0
        } else {
            dev / self.std_error
        }
    }
}

/// Standard error of a binomial proportion under the hypothesis `p`,
/// floored at the resolution `1/n` of an `n`-trial estimate.
pub fn binomial_std_error(p: f64, n: usize) -> f64 {
    let n = n as f64;
    (p * (1.0 - p) / n).sqrt().max(1.0 / n)
}

/// Detection times of `n` independent realizations, in realization order.
pub fn detection_times(
    scenario: &FireScenario,
    window: SimulationWindow,
    t_max: f64,
    n_realizations: usize,
    seed: u64,
) -> Result<Vec<Option<f64>>> {
    scenario.validate()?;
    (0..n_realizations as u64)
        .into_par_iter()
        .map(|i| {
            let realization = sample_realization_stream(scenario, window, seed, i)?;
            detection_time(&realization, &scenario.growth, t_max)
        })
        .collect()
}

/// Empirical `p̂(t)`: the share of realizations detected by each grid time.
pub fn estimate_sensing_probability(
    scenario: &FireScenario,
    t_grid: &[f64],
    n_realizations: usize,
    seed: u64,
) -> Result<CoverageCurve> {
    estimate_sensing_probability_with_margin(
        scenario,
        t_grid,
        n_realizations,
        seed,
        DEFAULT_WINDOW_MARGIN,
    )
}

pub fn estimate_sensing_probability_with_margin(
    scenario: &FireScenario,
    t_grid: &[f64],
    n_realizations: usize,
    seed: u64,
    margin: f64,
) -> Result<CoverageCurve> {
    check_time_grid(t_grid)?;
    check(
        n_realizations >= 1,
        "n_realizations",
        n_realizations as f64,
        "must be >= 1",
    )?;
    let Some(&t_max) = t_grid.last() else {
        return Ok(CoverageCurve {
            times: Vec::new(),
            probabilities: Vec::new(),
            kind: CurveKind::Empirical,
            std_errors: Some(Vec::new()),
        });
    };
    let window = SimulationWindow::for_scenario(scenario, t_max, margin)?;
    // detection_time needs a positive horizon; a grid of zeros only asks about ignition.
    let horizon = t_max.max(f64::MIN_POSITIVE);
    let mut times: Vec<f64> = detection_times(scenario, window, horizon, n_realizations, seed)?
        .into_iter()
        .flatten()
        .collect();
    times.sort_by(f64::total_cmp);
    let (probabilities, std_errors) = t_grid
        .iter()
        .map(|&t| {
            let hits = times.partition_point(|&d| d <= t);
            let e = EmpiricalEstimate::bernoulli(hits, n_realizations, 1.0);
            (e.value, e.std_error)
        })
        .unzip();
    Ok(CoverageCurve {
        times: t_grid.to_vec(),
        probabilities,
        kind: CurveKind::Empirical,
        std_errors: Some(std_errors),
    })
}

/// Mean number of sensing disks meeting `K(t)`, with the standard error of
/// the sample mean.
pub fn estimate_mean_detectors(
    scenario: &FireScenario,
    t: f64,
    n_realizations: usize,
    seed: u64,
) -> Result<EmpiricalEstimate> {
    check(
        n_realizations >= 1,
        "n_realizations",
        n_realizations as f64,
        "must be >= 1",
    )?;
    let front = scenario.front_at(t)?;
    let window = SimulationWindow::for_scenario(scenario, t, DEFAULT_WINDOW_MARGIN)?;
    let counts = (0..n_realizations as u64)
        .into_par_iter()
        .map(|i| {
            let realization = sample_realization_stream(scenario, window, seed, i)?;
            Ok(detector_count(&realization, &front) as f64)
        })
        .collect::<Result<Vec<_>>>()?;
    let n = counts.len() as f64;
    let mean = counts.iter().sum::<f64>() / n;
    let var = if counts.len() > 1 {
        counts.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / (n - 1.0)
    } else {
        0.0
    };
    Ok(EmpiricalEstimate {
        value: mean,
        std_error: (var / n).sqrt(),
        n: n_realizations,
    })
}

/// Hit-or-miss estimate of `E_r[A({x : dist(x, K) ≤ r})]`.
///
/// Points are uniform on the bounding box of `K` grown by `r_out`, and each
/// point draws its own radius.
pub fn estimate_dilated_area(
    front: &FireFront,
    radius: &HybridRadiusModel,
    n_samples: usize,
    seed: u64,
) -> Result<EmpiricalEstimate> {
    check(n_samples >= 1, "n_samples", n_samples as f64, "must be >= 1")?;
    let reach = radius.r_out().max(f64::MIN_POSITIVE);
    let bbox = SimulationWindow::covering(front, reach, 0.0)?;
    let batches = n_samples.div_ceil(HIT_OR_MISS_BATCH);
    let hits: usize = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = stream_rng(seed, b as u64);
            let len = HIT_OR_MISS_BATCH.min(n_samples - b * HIT_OR_MISS_BATCH);
            (0..len)
                .filter(|_| {
                    let p = bbox.sample_point(&mut rng);
                    let r = radius.sample(&mut rng);
                    front.distance_to(p) <= r
                })
                .count()
        })
        .sum();
    Ok(EmpiricalEstimate::bernoulli(hits, n_samples, bbox.area()))
}
