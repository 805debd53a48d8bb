//! Kinematic transformation groups on a projective space-time model.
//!
//! The crate implements three nested group layers — Galileo, Poincare, and
//! the ten-parameter final (Fantappie) group of projective motions
//! preserving the absolute quadric c^2 t^2 - x^2 - y^2 - z^2 = R^2 — together
//! with the Cayley-Klein cross-ratio metric on the two-dimensional model,
//! the electromagnetic/gravitational coordinate-scale maps, and the
//! cosmological kinematics they imply (age composition, Hubble flow, clock
//! drift).
//!
//! Every final-group motion exists in two independent realizations that are
//! cross-validated against each other: closed-form fractional-linear maps on
//! event coordinates and 5x5 matrices preserving the signature form
//! diag(1, 1, 1, -1, 1) on homogeneous coordinates.

pub mod cosmology;
pub mod error;
pub mod groups;
mod linalg;
pub mod metric;
pub mod model;
pub mod scales;

pub use error::{Error, Result};
pub use model::{
    lift, project, signature_form, Event, GaugeMode, GravCoordinate, HomogeneousPoint, MetricGauge,
    ModelParameters, NormalizedEvent, PROJECTIVE_EPS,
};
