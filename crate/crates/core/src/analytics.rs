//! Closed-form coverage of a growing fire by a Boolean–Poisson sensor field.
//!
//! With sensors at density `λ` and iid sensing disks `S`, the fire set
//! `K(t)` escapes detection with the void probability
//! `exp(-λ E[A(K(t) ⊕ S)])`. The expectation is expanded with the Steiner
//! formula as `A(K) + ℓ(K) E[r] + π E[r²]`.

use std::f64::consts::PI;

use crate::error::{check, Error, Result};
use crate::geometry::{FireFront, FireGrowthParams, FireModelKind};
use crate::radius::HybridRadiusModel;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FireScenario {
    /// Sensor density λ, 1/m².
    pub density: f64,
    pub radius: HybridRadiusModel,
    pub growth: FireGrowthParams,
    /// Burned area at which the fire becomes critical, m².
    pub critical_area: f64,
    /// Target detection probability for the critical density.
    pub tau: f64,
}

impl FireScenario {
    pub fn new(
        density: f64,
        radius: HybridRadiusModel,
        growth: FireGrowthParams,
        critical_area: f64,
        tau: f64,
    ) -> Result<Self> {
        let s = Self {
            density,
            radius,
            growth,
            critical_area,
            tau,
        };
        s.validate()?;
        Ok(s)
    }

    /// Reference parameters: `r_in = 2 m`, `r_out = 4 m`, `α = 0.33 m/s`,
    /// `v_x = 3 m/s`, `V = 10 m/s`, `A_cr = 20 m²`, with `τ = 0.9`.
    pub fn reference(kind: FireModelKind, density: f64) -> Result<Self> {
        Self::new(
            density,
            HybridRadiusModel::new(2.0, 4.0)?,
            FireGrowthParams::new(kind, 0.33, 3.0, 10.0)?,
            20.0,
            0.9,
        )
    }

    pub fn validate(&self) -> Result<()> {
        check(
            self.density.is_finite() && self.density >= 0.0,
            "density",
            self.density,
            "must be finite and >= 0",
        )?;
        check(
            self.critical_area.is_finite() && self.critical_area > 0.0,
            "critical_area",
            self.critical_area,
            "must be > 0",
        )?;
        check(self.tau > 0.0 && self.tau < 1.0, "tau", self.tau, "must lie in (0, 1)")?;
        // Re-run the radius constructor checks; fields may have been edited.
        HybridRadiusModel::new(self.radius.r_in(), self.radius.r_out())?;
        self.growth.validate()
    }

    pub fn kind(&self) -> FireModelKind {
        self.growth.kind
    }

    pub fn with_kind(self, kind: FireModelKind) -> Self {
        Self {
            growth: self.growth.with_kind(kind),
            ..self
        }
    }

    pub fn with_density(self, density: f64) -> Self {
        Self { density, ..self }
    }

    pub fn front_at(&self, t: f64) -> Result<FireFront> {
        self.growth.front_at(t)
    }

    /// `E[A(K(t) ⊕ S)]`, the mean area of the dilated fire set.
    pub fn mean_dilated_area(&self, t: f64) -> Result<f64> {
        Ok(self.front_at(t)?.expected_dilated_area(&self.radius))
    }

    /// Mean number of sensors whose disk meets `K(t)`, `λ E[A(K(t) ⊕ S)]`.
    pub fn mean_detectors(&self, t: f64) -> Result<f64> {
        Ok(self.density * self.mean_dilated_area(t)?)
    }

    /// `p(t) = 1 − exp(−λ E[A(K(t) ⊕ S)])`.
    pub fn sensing_probability(&self, t: f64) -> Result<f64> {
        Ok(-(-self.mean_detectors(t)?).exp_m1())
    }

    /// Time at which the burned area reaches the critical area.
    ///
    /// Solves `π a(t) b(t) = A_cr`; the piriform shares the elliptical axes
    /// and therefore its critical time.
    pub fn critical_time(&self) -> f64 {
        (self.critical_area / (PI * self.growth.elongation())).sqrt() / self.growth.alpha
    }

    /// Probability that the fire is sensed no later than the critical time.
    pub fn detection_probability(&self) -> f64 {
        self.sensing_probability(self.critical_time())
            .expect("critical time is finite and positive for a valid scenario")
    }

    /// `E[A(K(t_cr) ⊕ S)]` from the per-model closed forms.
    ///
    /// circular: `A_cr + 2√(π A_cr) E[r] + π E[r²]`;
    /// elliptical: `A_cr + √(π A_cr / (1 + w)) [3(2 + w) − √((4 + 3w)(4 + w))] E[r] + π E[r²]`
    /// with `w = v_x/V`; piriform: `A_cr + ℓ(K(t_cr)) E[r] + π E[r²]` with the
    /// arc length from quadrature.
    pub fn critical_dilated_area(&self) -> f64 {
        let acr = self.critical_area;
        let er = self.radius.mean_radius();
        let disk = PI * self.radius.mean_radius_squared();
        let perimeter = match self.kind() {
            FireModelKind::Circular => 2.0 * (PI * acr).sqrt(),
            FireModelKind::Elliptical => {
                let w = self.growth.wind_x / self.growth.scale_speed;
                (PI * acr / (1.0 + w)).sqrt()
                    * (3.0 * (2.0 + w) - ((4.0 + 3.0 * w) * (4.0 + w)).sqrt())
            }
            FireModelKind::Piriform => self
                .front_at(self.critical_time())
                .expect("critical time is finite and positive for a valid scenario")
                .perimeter(),
        };
        acr + perimeter * er + disk
    }

    /// Density at which the detection probability equals `τ`:
    /// `λ_cr = ln(1/(1 − τ)) / E[A(K(t_cr) ⊕ S)]`.
    pub fn critical_density(&self) -> f64 {
        -(-self.tau).ln_1p() / self.critical_dilated_area()
    }

    /// Analytic `p(t)` on a sorted, non-negative time grid.
    pub fn coverage_curve(&self, times: &[f64]) -> Result<CoverageCurve> {
        check_time_grid(times)?;
        let probabilities = times
            .iter()
            .map(|&t| self.sensing_probability(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(CoverageCurve {
            times: times.to_vec(),
            probabilities,
            kind: CurveKind::Analytic,
            std_errors: None,
        })
    }
}

pub(crate) fn check_time_grid(times: &[f64]) -> Result<()> {
    let mut prev = 0.0;
    for &t in times {
        if !(t.is_finite() && t >= prev) {
            return Err(Error::InvalidTimeGrid(t));
        }
        prev = t;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    Analytic,
    Empirical,
}

/// Sensing probability sampled on a time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageCurve {
    pub times: Vec<f64>,
    pub probabilities: Vec<f64>,
    pub kind: CurveKind,
    /// Binomial standard error per point, for empirical curves.
    pub std_errors: Option<Vec<f64>>,
}

impl CoverageCurve {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn is_monotone(&self) -> bool {
        self.probabilities.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.times.iter().copied().zip(self.probabilities.iter().copied())
    }
}
