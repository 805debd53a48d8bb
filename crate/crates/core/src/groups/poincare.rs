//! The Poincare group: Lorentz matrices on (x, y, z, ct) plus translations.

use crate::error::{Error, Result};
use crate::model::Event;

use super::Axis;

const MINKOWSKI_TOL: f64 = 1e-12;

/// Diagonal of the Minkowski form on (x, y, z, ct).
const J_DIAG: [f64; 4] = [1.0, 1.0, 1.0, -1.0];

/// An element (A, a): x'_i = A_ik x_k + a_i on the 4-vector (x, y, z, ct),
/// with the translation split into spatial lengths and one time component.
#[derive(Debug, Clone, PartialEq)]
pub struct PoincareElement {
    a: [[f64; 4]; 4],
    shift_space: [f64; 3],
    shift_time: f64,
}

fn minkowski_defect(a: &[[f64; 4]; 4]) -> f64 {
    let mut acc = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            let mut gram = 0.0;
            for k in 0..4 {
                gram += a[k][i] * J_DIAG[k] * a[k][j];
            }
            let target = if i == j { J_DIAG[i] } else { 0.0 };
            let d = gram - target;
            acc += d * d;
        }
    }
    acc.sqrt()
}

impl PoincareElement {
    /// Validates that A preserves the Minkowski form within 1e-12.
    pub fn new(a: [[f64; 4]; 4], shift_space: [f64; 3], shift_time: f64) -> Result<Self> {
        let defect = minkowski_defect(&a);
        if !defect.is_finite() || defect > MINKOWSKI_TOL {
            return Err(Error::Domain(format!(
                "matrix violates the Minkowski form invariant (defect {defect:e})"
            )));
        }
        Ok(Self {
            a,
            shift_space,
            shift_time,
        })
    }

    pub fn identity() -> Self {
        let mut a = [[0.0; 4]; 4];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self {
            a,
            shift_space: [0.0; 3],
            shift_time: 0.0,
        }
    }

    /// Pure boost with velocity parameter beta = V/c along one axis:
    /// x' = (x - beta x4) / sqrt(1 - beta^2), x4' = (x4 - beta x) / sqrt(1 - beta^2).
    pub fn boost(beta: f64, axis: Axis) -> Result<Self> {
        if !beta.is_finite() || beta.abs() >= 1.0 {
            return Err(Error::Domain(format!(
                "boost requires |beta| < 1, got beta = {beta}"
            )));
        }
        let gamma = 1.0 / (1.0 - beta * beta).sqrt();
        let i = axis.index();
        let mut a = [[0.0; 4]; 4];
        for (k, row) in a.iter_mut().enumerate() {
            row[k] = 1.0;
        }
        a[i][i] = gamma;
        a[i][3] = -gamma * beta;
        a[3][i] = -gamma * beta;
        a[3][3] = gamma;
        Ok(Self {
            a,
            shift_space: [0.0; 3],
            shift_time: 0.0,
        })
    }

    /// Spatial rotation embedded in the Lorentz block.
    pub fn rotation(r: [[f64; 3]; 3]) -> Result<Self> {
        let mut a = [[0.0; 4]; 4];
        for (i, row) in r.iter().enumerate() {
            a[i][..3].copy_from_slice(row);
        }
        a[3][3] = 1.0;
        Self::new(a, [0.0; 3], 0.0)
    }

    /// Pure translation by spatial shift (meters) and time shift (seconds).
    pub fn translation(shift_space: [f64; 3], shift_time: f64) -> Self {
        let mut out = Self::identity();
        out.shift_space = shift_space;
        out.shift_time = shift_time;
        out
    }

    pub fn matrix(&self) -> &[[f64; 4]; 4] {
        &self.a
    }

    pub fn shift(&self) -> ([f64; 3], f64) {
        (self.shift_space, self.shift_time)
    }
}

/// Apply a Poincare element to an event; `c` converts between t and ct.
pub fn poincare_apply(g: &PoincareElement, e: &Event, c: f64) -> Result<Event> {
    if !c.is_finite() || c <= 0.0 {
        return Err(Error::Domain(format!(
            "light speed must be positive, got {c}"
        )));
    }
    let defect = minkowski_defect(&g.a);
    if !defect.is_finite() || defect > MINKOWSKI_TOL {
        return Err(Error::Domain(format!(
            "matrix violates the Minkowski form invariant (defect {defect:e})"
        )));
    }
    let v = [e.x, e.y, e.z, c * e.t];
    let mut out = [0.0; 4];
    for (o, row) in out.iter_mut().zip(g.a.iter()) {
        *o = row[0] * v[0] + row[1] * v[1] + row[2] * v[2] + row[3] * v[3];
    }
    Ok(Event::new(
        out[0] + g.shift_space[0],
        out[1] + g.shift_space[1],
        out[2] + g.shift_space[2],
        out[3] / c + g.shift_time,
    ))
}

/// Intersection of the time axis of a frame moving with velocity parameter
/// `beta` with the calibration hyperbola x4^2 - x1^2 = R^2:
/// (x1, x4) = (beta R, R) / sqrt(1 - beta^2).
pub fn calibration_intersection(beta: f64, r: f64) -> Result<(f64, f64)> {
    if !beta.is_finite() || beta.abs() >= 1.0 {
        return Err(Error::Domain(format!(
            "calibration requires |beta| < 1, got beta = {beta}"
        )));
    }
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::Domain(format!("radius must be positive, got {r}")));
    }
    let g = 1.0 / (1.0 - beta * beta).sqrt();
    Ok((beta * r * g, r * g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn x_boost_matches_closed_form() {
        let g = PoincareElement::boost(0.6, Axis::X).unwrap();
        let e = poincare_apply(&g, &Event::new(1.0, 0.0, 0.0, 1.0), 1.0).unwrap();
        assert!(close(e.x, 0.5, 1e-14));
        assert!(close(e.t, 0.5, 1e-14));
    }

    #[test]
    fn zero_boost_is_identity() {
        let g = PoincareElement::boost(0.0, Axis::X).unwrap();
        let e = Event::new(0.3, -0.4, 0.5, 0.9);
        assert_eq!(poincare_apply(&g, &e, 1.0).unwrap(), e);
    }

    #[test]
    fn boost_preserves_light_cone() {
        let g = PoincareElement::boost(0.6, Axis::X).unwrap();
        let e = poincare_apply(&g, &Event::new(1.0, 0.0, 0.0, 1.0), 1.0).unwrap();
        assert!(close(e.x, e.t, 1e-14));
    }

    #[test]
    fn translation_shifts() {
        let g = PoincareElement::translation([1.0, 2.0, 3.0], -0.5);
        let e = poincare_apply(&g, &Event::new(0.0, 0.0, 0.0, 0.0), 2.0).unwrap();
        assert_eq!(e, Event::new(1.0, 2.0, 3.0, -0.5));
    }

    #[test]
    fn rejects_non_lorentz_matrix() {
        let mut a = [[0.0; 4]; 4];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        a[0][3] = 0.2; // shear, not a Lorentz map
        assert!(PoincareElement::new(a, [0.0; 3], 0.0).is_err());
    }

    #[test]
    fn calibration_points() {
        let (x1, x4) = calibration_intersection(0.0, 1.0).unwrap();
        assert_eq!((x1, x4), (0.0, 1.0));

        let (x1, x4) = calibration_intersection(0.6, 1.0).unwrap();
        assert!(close(x1, 0.75, 1e-14));
        assert!(close(x4, 1.25, 1e-14));

        let (x1, x4) = calibration_intersection(0.8, 1.0).unwrap();
        assert!(close(x1, 4.0 / 3.0, 1e-14));
        assert!(close(x4, 5.0 / 3.0, 1e-14));
        // the returned point lies on the hyperbola
        assert!(close(x4 * x4 - x1 * x1, 1.0, 1e-12));
    }

    #[test]
    fn calibration_rejects_light_speed() {
        assert!(calibration_intersection(1.0, 1.0).is_err());
        assert!(calibration_intersection(-1.2, 1.0).is_err());
    }
}
