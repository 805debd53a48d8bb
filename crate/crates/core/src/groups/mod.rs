//! The three group layers of the kinematic hierarchy: Galileo, Poincare,
//! and the final (Fantappie) group of projective motions, the latter held
//! as 5x5 matrices preserving the signature form diag(1, 1, 1, -1, 1).

mod fantappie;
mod galileo;
mod poincare;

pub use fantappie::{
    closed_form_apply, fantappie_generator, limit_deviation, ConvergenceReport, Generator,
};
pub use galileo::{axis_rotation, galileo_apply, GalileoTransform};
pub use poincare::{calibration_intersection, poincare_apply, PoincareElement};

use crate::error::{Error, Result};
use crate::linalg::{
    det, identity, mat_mul, mat_vec, refine_signature, signature_defect, signature_inverse, Mat5,
};
use crate::model::{Event, ModelParameters, NormalizedEvent, PROJECTIVE_EPS};

/// A spatial coordinate axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub fn index(&self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }
}

impl std::str::FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(Axis::X),
            "y" | "Y" => Ok(Axis::Y),
            "z" | "Z" => Ok(Axis::Z),
            other => Err(Error::Domain(format!("unknown axis `{other}`"))),
        }
    }
}

/// Frobenius tolerance on M^T G M - G.
const SIGNATURE_TOL: f64 = 1e-10;
/// Tolerance on det(M) - 1 (proper motions only).
const DET_TOL: f64 = 1e-10;
/// Composition histories longer than this are dropped rather than grown.
const MAX_PROVENANCE: usize = 32;

/// One motion of the final group: a 5x5 matrix preserving the signature
/// form, with an optional bounded composition history.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement {
    m: Mat5,
    provenance: Option<Vec<Generator>>,
}

impl GroupElement {
    pub fn identity() -> Self {
        Self {
            m: identity(),
            provenance: Some(Vec::new()),
        }
    }

    /// Wrap a raw matrix, validating the group invariants.
    pub fn from_matrix(m: [[f64; 5]; 5]) -> Result<Self> {
        let defect = signature_defect(&m);
        if !defect.is_finite() || defect > SIGNATURE_TOL {
            return Err(Error::NonOrthogonal(format!(
                "signature defect {defect:e} exceeds {SIGNATURE_TOL:e}"
            )));
        }
        let d = det(&m);
        if (d - 1.0).abs() > DET_TOL {
            return Err(Error::NonOrthogonal(format!(
                "determinant {d} is not +1 within {DET_TOL:e}"
            )));
        }
        Ok(Self {
            m,
            provenance: None,
        })
    }

    pub(crate) fn from_parts(m: Mat5, provenance: Option<Vec<Generator>>) -> Self {
        Self { m, provenance }
    }

    pub fn matrix(&self) -> [[f64; 5]; 5] {
        self.m
    }

    pub(crate) fn matrix_ref(&self) -> &Mat5 {
        &self.m
    }

    /// Composition history, if it is still known and within bounds.
    pub fn provenance(&self) -> Option<&[Generator]> {
        self.provenance.as_deref()
    }

    /// Frobenius norm of M^T G M - G.
    pub fn signature_defect(&self) -> f64 {
        signature_defect(&self.m)
    }
}

/// Matrix product a * b (so b acts first), renormalized by one Newton step
/// toward the signature-orthogonal manifold.
pub fn compose(a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    let refined = refine_signature(&mat_mul(a.matrix_ref(), b.matrix_ref()));
    let defect = signature_defect(&refined);
    if !defect.is_finite() || defect > SIGNATURE_TOL {
        return Err(Error::NonOrthogonal(format!(
            "signature defect {defect:e} after renormalization"
        )));
    }
    let d = det(&refined);
    if (d - 1.0).abs() > DET_TOL {
        return Err(Error::NonOrthogonal(format!(
            "determinant {d} drifted from +1"
        )));
    }
    let provenance = match (&a.provenance, &b.provenance) {
        (Some(pa), Some(pb)) if pa.len() + pb.len() <= MAX_PROVENANCE => {
            let mut hist = pb.clone();
            hist.extend(pa.iter().cloned());
            Some(hist)
        }
        _ => None,
    };
    Ok(GroupElement {
        m: refined,
        provenance,
    })
}

/// The signature-orthogonal inverse G M^T G. Entrywise exact.
pub fn inverse(g: &GroupElement) -> GroupElement {
    GroupElement {
        m: signature_inverse(&g.m),
        provenance: g
            .provenance
            .as_ref()
            .map(|hist| hist.iter().rev().map(Generator::inverse).collect()),
    }
}

/// Act on an event through the homogeneous chart: project(M * lift(e)).
pub fn apply(g: &GroupElement, e: &Event, p: &ModelParameters) -> Result<Event> {
    let ne = NormalizedEvent::from_event(e, p);
    Ok(apply_normalized(g, &ne)?.to_event(p))
}

pub(crate) fn apply_normalized(g: &GroupElement, ne: &NormalizedEvent) -> Result<NormalizedEvent> {
    let u = [ne.xi, ne.eta, ne.zeta, ne.tau, 1.0];
    let v = mat_vec(&g.m, &u);
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if v[4].abs() < PROJECTIVE_EPS * norm {
        return Err(Error::ProjectiveInfinity(
            "image left the affine chart (u5 ~ 0)".into(),
        ));
    }
    Ok(NormalizedEvent::new(
        v[0] / v[4],
        v[1] / v[4],
        v[2] / v[4],
        v[3] / v[4],
    ))
}
