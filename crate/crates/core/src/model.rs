//! Shared domain types: model parameters, events, and the homogeneous
//! projective chart they live in.
//!
//! Units are SI (meters, seconds) at every public boundary. Group and
//! metric computations run internally on dimensionless coordinates
//! xi = x/R, tau = ct/R so every formula is conditioned near unit scale.

use crate::error::{Error, Result};
use crate::linalg::G_DIAG;

/// Relative threshold below which the fifth homogeneous component is
/// treated as projective infinity.
pub const PROJECTIVE_EPS: f64 = 1e-12;

/// Universe radius R, light speed c, and the constants derived from them:
/// the electromagnetic age t_EU = R/c, the Hubble constant H0 = c/R, and
/// the curvature K = -1/R^2 of the underlying model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParameters {
    r: f64,
    c: f64,
    t_eu: f64,
    h0: f64,
    k: f64,
}

impl ModelParameters {
    pub fn new(r: f64, c: f64) -> Result<Self> {
        if !r.is_finite() || !c.is_finite() || r <= 0.0 || c <= 0.0 {
            return Err(Error::Domain(format!(
                "model parameters require finite R > 0 and c > 0, got R = {r}, c = {c}"
            )));
        }
        Ok(Self {
            r,
            c,
            t_eu: r / c,
            h0: c / r,
            k: -1.0 / (r * r),
        })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Electromagnetic age of the Universe, R/c.
    pub fn t_eu(&self) -> f64 {
        self.t_eu
    }

    /// Hubble constant at the current epoch, c/R.
    pub fn h0(&self) -> f64 {
        self.h0
    }

    /// Constant negative curvature -1/R^2.
    pub fn curvature(&self) -> f64 {
        self.k
    }
}

/// A space-time point in projected (electromagnetic) coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Event {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub t: f64,
}

impl Event {
    pub fn new(x: f64, y: f64, z: f64, t: f64) -> Self {
        Self { x, y, z, t }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite() && self.t.is_finite()
    }
}

/// Dimensionless event coordinates (x/R, y/R, z/R, ct/R).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedEvent {
    pub xi: f64,
    pub eta: f64,
    pub zeta: f64,
    pub tau: f64,
}

impl NormalizedEvent {
    pub fn new(xi: f64, eta: f64, zeta: f64, tau: f64) -> Self {
        Self { xi, eta, zeta, tau }
    }

    pub fn from_event(e: &Event, p: &ModelParameters) -> Self {
        Self {
            xi: e.x / p.r(),
            eta: e.y / p.r(),
            zeta: e.z / p.r(),
            tau: e.t * p.c() / p.r(),
        }
    }

    pub fn to_event(&self, p: &ModelParameters) -> Event {
        Event {
            x: self.xi * p.r(),
            y: self.eta * p.r(),
            z: self.zeta * p.r(),
            t: self.tau * p.r() / p.c(),
        }
    }

    pub(crate) fn spatial(&self) -> [f64; 3] {
        [self.xi, self.eta, self.zeta]
    }

    pub(crate) fn with_spatial(s: [f64; 3], tau: f64) -> Self {
        Self {
            xi: s[0],
            eta: s[1],
            zeta: s[2],
            tau,
        }
    }
}

/// Five-component projective representative of an event on the model.
/// (u) and (lambda * u) denote the same point for lambda != 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomogeneousPoint {
    u: [f64; 5],
}

impl HomogeneousPoint {
    pub fn new(u: [f64; 5]) -> Result<Self> {
        if u.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain(
                "homogeneous components must be finite".into(),
            ));
        }
        if u.iter().all(|&x| x == 0.0) {
            return Err(Error::Domain(
                "homogeneous point must have a nonzero component".into(),
            ));
        }
        Ok(Self { u })
    }

    pub fn components(&self) -> [f64; 5] {
        self.u
    }

    /// Canonical representative: u5 = 1 when u5 != 0, otherwise unit
    /// Euclidean norm with the first nonzero component positive.
    pub fn canonical(&self) -> HomogeneousPoint {
        let u = self.u;
        if u[4] != 0.0 {
            let s = 1.0 / u[4];
            return HomogeneousPoint {
                u: [u[0] * s, u[1] * s, u[2] * s, u[3] * s, 1.0],
            };
        }
        let norm = u.iter().map(|x| x * x).sum::<f64>().sqrt();
        let first = u.iter().copied().find(|&x| x != 0.0).unwrap_or(1.0);
        let s = first.signum() / norm;
        let mut out = [0.0; 5];
        for (o, x) in out.iter_mut().zip(u.iter()) {
            *o = x * s;
        }
        HomogeneousPoint { u: out }
    }
}

/// Value of the invariant quadratic form u1^2 + u2^2 + u3^2 - u4^2 + u5^2.
/// On lift(e) this equals (x^2 + y^2 + z^2 - c^2 t^2 + R^2) / R^2, so it
/// vanishes exactly on the absolute quadric.
pub fn signature_form(u: &HomogeneousPoint) -> f64 {
    u.u.iter().zip(G_DIAG.iter()).map(|(x, g)| g * x * x).sum()
}

/// Lift an event to its canonical homogeneous representative
/// (x/R, y/R, z/R, ct/R, 1).
pub fn lift(e: &Event, p: &ModelParameters) -> HomogeneousPoint {
    let ne = NormalizedEvent::from_event(e, p);
    HomogeneousPoint {
        u: [ne.xi, ne.eta, ne.zeta, ne.tau, 1.0],
    }
}

/// Project a homogeneous point back to event coordinates,
/// (R u1/u5, R u2/u5, R u3/u5, (R/c) u4/u5).
pub fn project(u: &HomogeneousPoint, p: &ModelParameters) -> Result<Event> {
    let v = u.u;
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if v[4].abs() < PROJECTIVE_EPS * norm {
        return Err(Error::ProjectiveInfinity(format!(
            "u5 = {} is below the chart threshold for |u| = {}",
            v[4], norm
        )));
    }
    Ok(Event {
        x: p.r() * v[0] / v[4],
        y: p.r() * v[1] / v[4],
        z: p.r() * v[2] / v[4],
        t: (p.r() / p.c()) * v[3] / v[4],
    })
}

/// Cayley-Klein coordinate on the gravitational (non-projected) scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GravCoordinate {
    /// Gravitational time t_G in seconds.
    Time(f64),
    /// Gravitational length x_G in meters; |x_G| < pi R / 2 for values
    /// produced by the origin-based map.
    Space(f64),
}

impl GravCoordinate {
    pub fn value(&self) -> f64 {
        match self {
            GravCoordinate::Time(v) | GravCoordinate::Space(v) => *v,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GravCoordinate::Time(_) => "time",
            GravCoordinate::Space(_) => "space",
        }
    }
}

/// Choice of logarithmic-distance prefactor for the Cayley-Klein maps.
///
/// `Consistent` fixes k_time = R/(2c) so the time map t_G = (R/c) artanh(ct_E/R)
/// and its inverse t_E = (R/c) tanh(ct_G/R) are exact inverses.
/// `PaperLiteral` fixes k_time = R/c, twice the consistent value.
/// Both fix the space-axis prefactor k_space = R/2, realized as
/// x_G = R arctan(x_E/R).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaugeMode {
    Consistent,
    PaperLiteral,
}

impl std::fmt::Display for GaugeMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GaugeMode::Consistent => write!(f, "consistent"),
            GaugeMode::PaperLiteral => write!(f, "paper-literal"),
        }
    }
}

impl std::str::FromStr for GaugeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "consistent" => Ok(GaugeMode::Consistent),
            "paper-literal" => Ok(GaugeMode::PaperLiteral),
            other => Err(Error::Domain(format!("unknown gauge mode `{other}`"))),
        }
    }
}

/// Metric gauge: the mode together with its realized prefactors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricGauge {
    mode: GaugeMode,
    k_time: f64,
    k_space: f64,
}

impl MetricGauge {
    pub fn new(mode: GaugeMode, p: &ModelParameters) -> Self {
        let k_time = match mode {
            GaugeMode::Consistent => p.r() / (2.0 * p.c()),
            GaugeMode::PaperLiteral => p.r() / p.c(),
        };
        Self {
            mode,
            k_time,
            k_space: p.r() / 2.0,
        }
    }

    pub fn consistent(p: &ModelParameters) -> Self {
        Self::new(GaugeMode::Consistent, p)
    }

    pub fn paper_literal(p: &ModelParameters) -> Self {
        Self::new(GaugeMode::PaperLiteral, p)
    }

    pub fn mode(&self) -> GaugeMode {
        self.mode
    }

    pub fn k_time(&self) -> f64 {
        self.k_time
    }

    pub fn k_space(&self) -> f64 {
        self.k_space
    }
}
