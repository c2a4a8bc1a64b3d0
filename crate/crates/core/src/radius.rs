//! Hybrid sensing-radius law.
//!
//! A sensor's range is `r = r_in + y`, where `y` follows an exponential
//! distribution truncated to `(0, r_out - r_in]`. The published table for
//! `r_in = 2`, `r_out = 4` lists `E[r] = 2.68` (reproduced here as 2.68696)
//! and `E[r²] = 5.49`; the latter does not follow from the density, which
//! gives 7.49572. This module implements the density.

use rand::Rng;

use crate::error::{check, Error, Result};

/// Rate of the exponential tail, in 1/m.
pub const TAIL_RATE: f64 = 1.0;

// Below this tail width the closed-form moments lose digits to cancellation
// and the series expansion takes over.
const SERIES_CUTOFF: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HybridRadiusModel {
    r_in: f64,
    r_out: f64,
}

impl HybridRadiusModel {
    pub fn new(r_in: f64, r_out: f64) -> Result<Self> {
        check(r_in.is_finite() && r_in >= 0.0, "r_in", r_in, "must be finite and >= 0")?;
        check(
            r_out.is_finite() && r_out >= r_in,
            "r_out",
            r_out,
            "must be finite and >= r_in",
        )?;
        Ok(Self { r_in, r_out })
    }

    /// A fixed-disk model with radius `r`.
    pub fn deterministic(r: f64) -> Result<Self> {
        Self::new(r, r)
    }

    pub fn r_in(&self) -> f64 {
        self.r_in
    }

    pub fn r_out(&self) -> f64 {
        self.r_out
    }

    /// Width `R' = r_out - r_in` of the random tail.
    pub fn tail_width(&self) -> f64 {
        self.r_out - self.r_in
    }

    pub fn is_deterministic(&self) -> bool {
        self.tail_width() == 0.0
    }

    /// `1 - exp(-k R')`, the mass the untruncated exponential puts on the support.
    fn tail_mass(&self) -> f64 {
        -(-TAIL_RATE * self.tail_width()).exp_m1()
    }

    /// Density of the tail `y` at `y`; zero outside `(0, R']`.
    pub fn tail_pdf(&self, y: f64) -> Result<f64> {
        if self.is_deterministic() {
            return Err(Error::DegenerateRadius(self.r_in));
        }
        if y <= 0.0 || y > self.tail_width() {
            return Ok(0.0);
        }
        Ok(TAIL_RATE * (-TAIL_RATE * y).exp() / self.tail_mass())
    }

    /// Distribution function of the tail `y`.
    pub fn tail_cdf(&self, y: f64) -> f64 {
        if y <= 0.0 {
            return 0.0;
        }
        if y >= self.tail_width() {
            return 1.0;
        }
        -(-TAIL_RATE * y).exp_m1() / self.tail_mass()
    }

    /// Inverse of [`tail_cdf`](Self::tail_cdf) on `[0, 1]`.
    pub fn tail_quantile(&self, u: f64) -> f64 {
        if self.is_deterministic() {
            return 0.0;
        }
        let y = -(-u * self.tail_mass()).ln_1p() / TAIL_RATE;
        y.clamp(0.0, self.tail_width())
    }

    /// `E[y]`.
    pub fn mean_tail(&self) -> f64 {
        let w = TAIL_RATE * self.tail_width();
        if w < SERIES_CUTOFF {
            // w/2 - w²/12 + w⁴/720
            return (w / 2.0 - w * w / 12.0 + w.powi(4) / 720.0) / TAIL_RATE;
        }
        1.0 / TAIL_RATE - self.tail_width() * self.truncation_ratio()
    }

    /// `E[y²]`.
    pub fn mean_tail_squared(&self) -> f64 {
        let w = TAIL_RATE * self.tail_width();
        if w < SERIES_CUTOFF {
            return (w * w / 3.0 - w.powi(3) / 12.0 + w.powi(4) / 360.0) / (TAIL_RATE * TAIL_RATE);
        }
        let rw = self.tail_width();
        2.0 / (TAIL_RATE * TAIL_RATE) - (rw * rw + 2.0 * rw / TAIL_RATE) * self.truncation_ratio()
    }

    // exp(-k R') / (1 - exp(-k R'))
    fn truncation_ratio(&self) -> f64 {
        1.0 / (TAIL_RATE * self.tail_width()).exp_m1()
    }

    /// `E[r] = r_in + E[y]`.
    pub fn mean_radius(&self) -> f64 {
        self.r_in + self.mean_tail()
    }

    /// `E[r²] = r_in² + 2E[y](1/k + r_in) − R'² e^{−kR'}/(1 − e^{−kR'})`.
    pub fn mean_radius_squared(&self) -> f64 {
        let w = self.tail_width();
        if TAIL_RATE * w < SERIES_CUTOFF {
            return self.r_in * self.r_in
                + 2.0 * self.r_in * self.mean_tail()
                + self.mean_tail_squared();
        }
        self.r_in * self.r_in + 2.0 * self.mean_tail() * (1.0 / TAIL_RATE + self.r_in)
            - w * w * self.truncation_ratio()
    }

    /// Draws one radius by inverting the tail distribution function.
    ///
    /// The uniform variate lies in `(0, 1]`, so samples fall in
    /// `(r_in, r_out]`; a degenerate model returns `r_in` without consuming
    /// randomness.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        if self.is_deterministic() {
            return self.r_in;
        }
        let u = 1.0 - rng.random::<f64>();
        let r = self.r_in + self.tail_quantile(u);
        if r > self.r_in {
            r
        } else {
            // u below ~1e-16 rounds the tail to zero.
            self.r_in + f64::EPSILON * self.r_in.max(1.0)
        }
    }
}
