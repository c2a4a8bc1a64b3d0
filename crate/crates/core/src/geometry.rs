//! Fire-front sets `K(t)` and the geometric queries the coverage model needs.
//!
//! All three fronts grow linearly in time from an ignition point at the
//! origin, with wind blowing toward `+x`:
//!
//! * circular: disk of radius `αt` centred on the ignition point;
//! * elliptical: semi-axes `a = αt(1 + v_x/V)`, `b = αt`, with the upwind
//!   vertex on the ignition point, i.e. centre `(a, 0)`;
//! * piriform: the curve `x = a(1 + sin φ)`, `y = b cos φ (1 + sin φ)`, whose
//!   cusp sits on the ignition point and which spans `x ∈ [0, 2a]`.
//!
//! Area is `πab` for every kind. Circular and elliptical fronts are convex
//! and nested in time. The piriform is neither: near the cusp its boundary
//! behaves like `|y| ∝ x^{3/2} t^{-1/2}`, so that thin sliver narrows as the
//! fire grows.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{check, Result};
use crate::quadrature;
use crate::radius::HybridRadiusModel;

/// Absolute tolerance for the piriform arc-length quadrature.
pub const PIRIFORM_PERIMETER_TOL: f64 = 1e-8;

/// Default vertex count for [`FireFront::boundary_polygon`].
pub const DEFAULT_POLYGON_VERTICES: usize = 4096;

const ELLIPSE_ANGLE_TOL: f64 = 1e-10;
const PIRIFORM_SCAN: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FireModelKind {
    Circular,
    Elliptical,
    Piriform,
}

impl FireModelKind {
    pub const ALL: [FireModelKind; 3] = [Self::Circular, Self::Elliptical, Self::Piriform];

    pub fn name(self) -> &'static str {
        match self {
            Self::Circular => "circular",
            Self::Elliptical => "elliptical",
            Self::Piriform => "piriform",
        }
    }

    /// Whether the front is convex, so that the Steiner formula is exact.
    pub fn is_convex(self) -> bool {
        !matches!(self, Self::Piriform)
    }
}

impl fmt::Display for FireModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownModel(pub String);

impl fmt::Display for UnknownModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown fire model `{}` (expected circular, elliptical or piriform)",
            self.0
        )
    }
}

impl std::error::Error for UnknownModel {}

impl FromStr for FireModelKind {
    type Err = UnknownModel;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "circular" => Ok(Self::Circular),
            "elliptical" => Ok(Self::Elliptical),
            "piriform" => Ok(Self::Piriform),
            _ => Err(UnknownModel(s.to_owned())),
        }
    }
}

/// Growth law of the fire front.
///
/// The circular model ignores the wind fields.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FireGrowthParams {
    pub kind: FireModelKind,
    /// Front speed without wind, m/s.
    pub alpha: f64,
    /// Wind speed along `+x`, m/s.
    pub wind_x: f64,
    /// Cross-wind speed, m/s. Only zero is supported.
    pub wind_y: f64,
    /// Wind scaling speed `V`, m/s.
    pub scale_speed: f64,
}

impl FireGrowthParams {
    pub fn new(kind: FireModelKind, alpha: f64, wind_x: f64, scale_speed: f64) -> Result<Self> {
        let params = Self {
            kind,
            alpha,
            wind_x,
            wind_y: 0.0,
            scale_speed,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        check(self.alpha.is_finite() && self.alpha > 0.0, "alpha", self.alpha, "must be > 0")?;
        check(
            self.scale_speed.is_finite() && self.scale_speed > 0.0,
            "scale_speed",
            self.scale_speed,
            "must be > 0",
        )?;
        check(
            self.wind_x.is_finite() && self.wind_x >= 0.0,
            "wind_x",
            self.wind_x,
            "must be >= 0",
        )?;
        check(self.wind_y == 0.0, "wind_y", self.wind_y, "only zero cross-wind is modelled")
    }

    pub fn with_kind(self, kind: FireModelKind) -> Self {
        Self { kind, ..self }
    }

    /// Ratio `a / b` of the axes, `1 + v_x/V` (1 for circular).
    pub fn elongation(&self) -> f64 {
        match self.kind {
            FireModelKind::Circular => 1.0,
            _ => 1.0 + self.wind_x / self.scale_speed,
        }
    }

    /// Snapshot of the front at time `t`.
    pub fn front_at(&self, t: f64) -> Result<FireFront> {
        self.validate()?;
        check(t.is_finite() && t >= 0.0, "t", t, "time must be finite and >= 0")?;
        let b = self.alpha * t * (1.0 + self.wind_y / self.scale_speed);
        let a = self.alpha * t * self.elongation();
        Ok(FireFront {
            kind: self.kind,
            a,
            b,
            time: Some(t),
        })
    }
}

/// The fire set `K(t)` at one instant.
///
/// For circular fronts `a == b` is the radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FireFront {
    kind: FireModelKind,
    a: f64,
    b: f64,
    time: Option<f64>,
}

impl FireFront {
    pub fn new(kind: FireModelKind, a: f64, b: f64) -> Result<Self> {
        check(b.is_finite() && b >= 0.0, "b", b, "axis must be finite and >= 0")?;
        check(a.is_finite() && a >= b, "a", a, "major axis must be finite and >= b")?;
        if kind == FireModelKind::Circular {
            check(a == b, "a", a, "circular fronts need a == b")?;
        }
        Ok(Self {
            kind,
            a,
            b,
            time: None,
        })
    }

    pub fn circular(radius: f64) -> Result<Self> {
        Self::new(FireModelKind::Circular, radius, radius)
    }

    pub fn elliptical(a: f64, b: f64) -> Result<Self> {
        Self::new(FireModelKind::Elliptical, a, b)
    }

    pub fn piriform(a: f64, b: f64) -> Result<Self> {
        Self::new(FireModelKind::Piriform, a, b)
    }

    pub fn kind(&self) -> FireModelKind {
        self.kind
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Time of the snapshot, when built by [`FireGrowthParams::front_at`].
    pub fn time(&self) -> Option<f64> {
        self.time
    }

    fn is_point(&self) -> bool {
        self.a == 0.0
    }

    pub fn area(&self) -> f64 {
        PI * self.a * self.b
    }

    /// Boundary length.
    ///
    /// Exact for circles, Ramanujan's first approximation for ellipses and
    /// adaptive quadrature of the arc length for the piriform.
    pub fn perimeter(&self) -> f64 {
        let (a, b) = (self.a, self.b);
        match self.kind {
            FireModelKind::Circular => 2.0 * PI * a,
            FireModelKind::Elliptical => {
                PI * (3.0 * (a + b) - ((3.0 * a + b) * (a + 3.0 * b)).sqrt())
            }
            FireModelKind::Piriform => {
                if self.is_point() {
                    return 0.0;
                }
                // Symmetric about the x axis; integrate the upper half, cusp to tip.
                let speed = |phi: f64| {
                    let dx = a * phi.cos();
                    let dy = b * ((2.0 * phi).cos() - phi.sin());
                    dx.hypot(dy)
                };
                2.0 * quadrature::integrate(speed, -FRAC_PI_2, FRAC_PI_2, 0.5 * PIRIFORM_PERIMETER_TOL)
            }
        }
    }

    /// Area of `K ⊕ B(0, r)` by the Steiner formula `A + ℓr + πr²`.
    ///
    /// Exact for circular and elliptical fronts up to the perimeter
    /// approximation. For the piriform it overestimates, since the dilation
    /// of the concave region near the cusp overlaps itself.
    pub fn dilated_area(&self, r: f64) -> Result<f64> {
        check(r.is_finite() && r >= 0.0, "r", r, "dilation radius must be >= 0")?;
        Ok(self.area() + self.perimeter() * r + PI * r * r)
    }

    /// `E[A(K ⊕ B(0, r))]` over the radius law, `A + ℓE[r] + πE[r²]`.
    pub fn expected_dilated_area(&self, radius: &HybridRadiusModel) -> f64 {
        self.area() + self.perimeter() * radius.mean_radius() + PI * radius.mean_radius_squared()
    }

    /// Point on the boundary at parameter `phi`.
    pub fn boundary_point(&self, phi: f64) -> Point {
        let (s, c) = phi.sin_cos();
        match self.kind {
            FireModelKind::Circular => Point::new(self.a * c, self.a * s),
            FireModelKind::Elliptical => Point::new(self.a * (1.0 + c), self.b * s),
            FireModelKind::Piriform => Point::new(self.a * (1.0 + s), self.b * c * (1.0 + s)),
        }
    }

    /// Boundary sampled at `n` parameters uniform in `[0, 2π)`, counter-clockwise.
    pub fn boundary_polygon(&self, n: usize) -> Vec<Point> {
        (0..n)
            .map(|i| {
                let phi = 2.0 * PI * i as f64 / n as f64;
                match self.kind {
                    // φ ↦ -φ keeps the piriform counter-clockwise.
                    FireModelKind::Piriform => self.boundary_point(-phi),
                    _ => self.boundary_point(phi),
                }
            })
            .collect()
    }

    /// Axis-aligned bounding box as `(min, max)` corners.
    pub fn bounding_box(&self) -> (Point, Point) {
        let (a, b) = (self.a, self.b);
        match self.kind {
            FireModelKind::Circular => (Point::new(-a, -a), Point::new(a, a)),
            FireModelKind::Elliptical => (Point::new(0.0, -b), Point::new(2.0 * a, b)),
            FireModelKind::Piriform => {
                // max of cos φ (1 + sin φ) is 3√3/4, at φ = π/6
                let h = b * 0.75 * 3f64.sqrt();
                (Point::new(0.0, -h), Point::new(2.0 * a, h))
            }
        }
    }

    /// Whether `p` lies in the closed set `K`.
    pub fn contains(&self, p: Point) -> bool {
        let (a, b) = (self.a, self.b);
        if self.is_point() {
            return p == Point::ORIGIN;
        }
        match self.kind {
            FireModelKind::Circular => p.x * p.x + p.y * p.y <= a * a,
            FireModelKind::Elliptical => {
                if b == 0.0 {
                    return p.y == 0.0 && p.x >= 0.0 && p.x <= 2.0 * a;
                }
                let u = (p.x - a) / a;
                let v = p.y / b;
                u * u + v * v <= 1.0
            }
            FireModelKind::Piriform => {
                // |y| ≤ b √(u³(2 − u)) with u = x/a.
                if p.x < 0.0 || p.x > 2.0 * a {
                    return false;
                }
                let u = p.x / a;
                p.y * p.y <= b * b * u * u * u * (2.0 - u)
            }
        }
    }

    /// Euclidean distance from `p` to the set (zero inside).
    pub fn distance_to(&self, p: Point) -> f64 {
        if self.is_point() {
            return p.norm();
        }
        if self.contains(p) {
            return 0.0;
        }
        match self.kind {
            FireModelKind::Circular => p.norm() - self.a,
            FireModelKind::Elliptical => {
                ellipse_distance_outside(self.a, self.b, (p.x - self.a).abs(), p.y.abs())
            }
            FireModelKind::Piriform => self.piriform_distance_outside(p),
        }
    }

    fn piriform_distance_outside(&self, p: Point) -> f64 {
        let (a, b) = (self.a, self.b);
        let (px, py) = (p.x, p.y.abs());
        let dist2 = |s: f64, c: f64| {
            let dx = a * (1.0 + s) - px;
            let dy = b * c * (1.0 + s) - py;
            dx * dx + dy * dy
        };
        let table = piriform_scan_table();
        let mut best = 0;
        let mut best_d2 = f64::INFINITY;
        for (i, &(s, c)) in table.iter().enumerate() {
            let d2 = dist2(s, c);
            if d2 < best_d2 {
                best_d2 = d2;
                best = i;
            }
        }
        let step = 2.0 * PI / PIRIFORM_SCAN as f64;
        let centre = -FRAC_PI_2 + best as f64 * step;
        let refined = golden_section_min(
            |phi| {
                let (s, c) = phi.sin_cos();
                dist2(s, c)
            },
            centre - step,
            centre + step,
            1e-12,
        );
        refined.min(best_d2).sqrt()
    }
}

/// (sin φ, cos φ) on a uniform grid of `[-π/2, 3π/2)`, starting at the cusp.
fn piriform_scan_table() -> &'static [(f64, f64)] {
    static TABLE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..PIRIFORM_SCAN)
            .map(|i| (-FRAC_PI_2 + 2.0 * PI * i as f64 / PIRIFORM_SCAN as f64).sin_cos())
            .collect()
    })
}

/// Minimum value of a unimodal `f` on `[lo, hi]`.
pub(crate) fn golden_section_min<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    f1.min(f2)
}

/// Distance from `(u, v)`, with `u, v ≥ 0` and outside the ellipse
/// `x²/a² + y²/b² = 1`, to that ellipse.
///
/// The nearest boundary point `(a cos φ, b sin φ)` lies in the same quadrant
/// and solves `(a² − b²) sin φ cos φ − ua sin φ + vb cos φ = 0`, which has a
/// single root on `[0, π/2]` for exterior points. Newton steps that leave the
/// current bracket fall back to bisection.
fn ellipse_distance_outside(a: f64, b: f64, u: f64, v: f64) -> f64 {
    if b == 0.0 {
        return (u - a).max(0.0).hypot(v);
    }
    if v == 0.0 {
        return u - a;
    }
    if u == 0.0 {
        return v - b;
    }
    let c2 = a * a - b * b;
    let f = |phi: f64| {
        let (s, c) = phi.sin_cos();
        c2 * s * c - u * a * s + v * b * c
    };
    let df = |phi: f64| {
        let (s, c) = phi.sin_cos();
        c2 * (c * c - s * s) - u * a * c - v * b * s
    };
    let (mut lo, mut hi) = (0.0, FRAC_PI_2);
    let mut phi = (a * v).atan2(b * u);
    for _ in 0..100 {
        let fv = f(phi);
        if fv > 0.0 {
            lo = phi;
        } else {
            hi = phi;
        }
        let d = df(phi);
        let mut next = phi - fv / d;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let moved = (next - phi).abs();
        phi = next;
        if moved < ELLIPSE_ANGLE_TOL || hi - lo < ELLIPSE_ANGLE_TOL {
            break;
        }
    }
    let (s, c) = phi.sin_cos();
    (a * c - u).hypot(b * s - v)
}
