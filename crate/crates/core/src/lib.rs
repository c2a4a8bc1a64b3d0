//! Detection of a growing wildfire by a randomly deployed sensor network.
//!
//! Sensors sit on a homogeneous Poisson point process and each covers a disk
//! whose radius follows a hybrid law: a fixed inner range plus a truncated
//! exponential extension. The fire occupies a growing set `K(t)` (circular,
//! elliptical or piriform). The fire is sensed at time `t` when some sensing
//! disk meets `K(t)`, which for a Boolean model happens with probability
//! `1 - exp(-λ E[A(K(t) ⊕ S)])`.
//!
//! * [`radius`]: the sensing radius distribution and its moments.
//! * [`geometry`]: fire fronts, their area, perimeter, containment and
//!   point-to-set distance.
//! * [`analytics`]: closed-form sensing and detection probabilities,
//!   critical time and critical sensor density.
//! * [`montecarlo`]: an independent Boolean-model simulator used to check
//!   every closed form.
//! * [`quadrature`]: adaptive Gauss–Kronrod integration.

pub mod analytics;
pub mod error;
pub mod geometry;
pub mod montecarlo;
pub mod quadrature;
pub mod radius;

pub use analytics::{CoverageCurve, CurveKind, FireScenario};
pub use error::{Error, Result};
pub use geometry::{FireFront, FireGrowthParams, FireModelKind, Point};
pub use montecarlo::{BooleanRealization, EmpiricalEstimate, Sensor, SimulationWindow};
pub use radius::HybridRadiusModel;
