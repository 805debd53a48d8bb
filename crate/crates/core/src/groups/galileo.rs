//! The ten-parameter Galileo group of classical kinematics.

use crate::error::{Error, Result};
use crate::model::Event;

use super::Axis;

/// One elementary Galileo transformation.
#[derive(Debug, Clone, PartialEq)]
pub enum GalileoTransform {
    /// Proper spatial rotation x' = A x, t' = t.
    Rotation([[f64; 3]; 3]),
    /// Inertial movement x' = x + v t, t' = t.
    Inertial([f64; 3]),
    /// Spatial translation x' = x + a, t' = t.
    SpatialTranslation([f64; 3]),
    /// Time translation x' = x, t' = t + t0.
    TimeTranslation(f64),
}

const ROTATION_TOL: f64 = 1e-12;

/// Checks A^T A = I and det A = +1 within 1e-12.
fn check_rotation(a: &[[f64; 3]; 3]) -> Result<()> {
    for i in 0..3 {
        for j in 0..3 {
            let mut dot = 0.0;
            for (row_i, row_j) in a.iter().map(|r| (r[i], r[j])) {
                dot += row_i * row_j;
            }
            let target = if i == j { 1.0 } else { 0.0 };
            if (dot - target).abs() > ROTATION_TOL {
                return Err(Error::Domain(format!(
                    "rotation matrix is not orthogonal: column dot ({i},{j}) = {dot}"
                )));
            }
        }
    }
    let d = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    if (d - 1.0).abs() > ROTATION_TOL {
        return Err(Error::Domain(format!(
            "rotation matrix must be proper (det = +1), got det = {d}"
        )));
    }
    Ok(())
}

/// Rotation matrix by `angle` in the coordinate plane spanned by two axes.
pub fn axis_rotation(plane: (Axis, Axis), angle: f64) -> Result<[[f64; 3]; 3]> {
    if plane.0 == plane.1 {
        return Err(Error::Domain("rotation plane axes must be distinct".into()));
    }
    let (a, b) = (plane.0.index(), plane.1.index());
    let mut m = [[0.0; 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    m[a][a] = angle.cos();
    m[a][b] = -angle.sin();
    m[b][a] = angle.sin();
    m[b][b] = angle.cos();
    Ok(m)
}

/// Apply one Galileo transformation to an event.
pub fn galileo_apply(g: &GalileoTransform, e: &Event) -> Result<Event> {
    match g {
        GalileoTransform::Rotation(a) => {
            check_rotation(a)?;
            let v = [e.x, e.y, e.z];
            let mut out = [0.0; 3];
            for (o, row) in out.iter_mut().zip(a.iter()) {
                *o = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
            }
            Ok(Event::new(out[0], out[1], out[2], e.t))
        }
        GalileoTransform::Inertial(v) => Ok(Event::new(
            e.x + v[0] * e.t,
            e.y + v[1] * e.t,
            e.z + v[2] * e.t,
            e.t,
        )),
        GalileoTransform::SpatialTranslation(a) => {
            Ok(Event::new(e.x + a[0], e.y + a[1], e.z + a[2], e.t))
        }
        GalileoTransform::TimeTranslation(t0) => Ok(Event::new(e.x, e.y, e.z, e.t + t0)),
    }
}
