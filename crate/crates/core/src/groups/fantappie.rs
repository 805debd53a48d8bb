//! Generators of the final (Fantappie) group: the ten-parameter group of
//! projective motions preserving the absolute quadric
//! c^2 t^2 - x^2 - y^2 - z^2 = R^2.
//!
//! Every generator is realized twice: as a fractional-linear closed form on
//! event coordinates, and as a 5x5 signature-orthogonal matrix acting on
//! homogeneous coordinates. The two realizations must agree on every event
//! of their common domain; tests and the acceptance suite cross-validate
//! them against each other.

use crate::error::{Error, Result};
use crate::linalg::{identity, Mat5};
use crate::model::{Event, ModelParameters, NormalizedEvent, PROJECTIVE_EPS};

use super::{Axis, GroupElement};

/// One-parameter generator of the final group, with magnitudes in physical
/// units (seconds, meters, meters/second, radians).
///
/// Dimensionless forms: eta = cT/R for time translations, alpha = S/R for
/// spatial translations, beta = V/c for pullings. Time translations require
/// |eta| < 1 and pullings |beta| < 1; alpha and the rotation angle are
/// unrestricted.
#[derive(Debug, Clone, PartialEq)]
pub enum Generator {
    /// Observers at the same place separated by time T:
    /// x' = x sqrt(1 - eta^2) / (1 - eta t/(R/c)), t' = (t - T) / (1 - eta t/(R/c)).
    TimeTranslation { t: f64 },
    /// Observers at the same time separated by S along one axis:
    /// x' = (x - S) / (1 + alpha x/R), transverse and time coordinates
    /// scaled by sqrt(1 + alpha^2) / (1 + alpha x/R).
    SpatialTranslation { s: f64, axis: Axis },
    /// Boost with velocity V along one axis (the Lorentz form, R-free).
    Pulling { v: f64, axis: Axis },
    /// Ordinary spatial rotation; completes the ten-parameter group.
    Rotation { angle: f64, plane: (Axis, Axis) },
}

impl Generator {
    /// The generator undoing this one.
    pub fn inverse(&self) -> Generator {
        match *self {
            Generator::TimeTranslation { t } => Generator::TimeTranslation { t: -t },
            Generator::SpatialTranslation { s, axis } => {
                Generator::SpatialTranslation { s: -s, axis }
            }
            Generator::Pulling { v, axis } => Generator::Pulling { v: -v, axis },
            Generator::Rotation { angle, plane } => Generator::Rotation {
                angle: -angle,
                plane,
            },
        }
    }

    pub(crate) fn normalized(&self, p: &ModelParameters) -> Result<NormGen> {
        match *self {
            Generator::TimeTranslation { t } => {
                let eta = t / p.t_eu();
                if !eta.is_finite() || eta.abs() >= 1.0 {
                    return Err(Error::Domain(format!(
                        "time translation requires |T| < R/c (eta = {eta})"
                    )));
                }
                Ok(NormGen::Time { eta })
            }
            Generator::SpatialTranslation { s, axis } => {
                let alpha = s / p.r();
                if !alpha.is_finite() {
                    return Err(Error::Domain(format!(
                        "spatial translation parameter must be finite (alpha = {alpha})"
                    )));
                }
                Ok(NormGen::Space {
                    alpha,
                    axis: axis.index(),
                })
            }
            Generator::Pulling { v, axis } => {
                let beta = v / p.c();
                if !beta.is_finite() || beta.abs() >= 1.0 {
                    return Err(Error::Domain(format!(
                        "pulling requires |V| < c (beta = {beta})"
                    )));
                }
                Ok(NormGen::Pull {
                    beta,
                    axis: axis.index(),
                })
            }
            Generator::Rotation { angle, plane } => {
                if !angle.is_finite() {
                    return Err(Error::Domain("rotation angle must be finite".into()));
                }
                if plane.0 == plane.1 {
                    return Err(Error::Domain("rotation plane axes must be distinct".into()));
                }
                Ok(NormGen::Rot {
                    angle,
                    a: plane.0.index(),
                    b: plane.1.index(),
                })
            }
        }
    }
}

/// Dimensionless generator parameters.
#[derive(Debug, Clone, Copy)]
pub(crate) enum NormGen {
    Time { eta: f64 },
    Space { alpha: f64, axis: usize },
    Pull { beta: f64, axis: usize },
    Rot { angle: f64, a: usize, b: usize },
}

/// Closed-form action on dimensionless coordinates.
pub(crate) fn norm_apply(g: &NormGen, ne: &NormalizedEvent) -> Result<NormalizedEvent> {
    match *g {
        NormGen::Time { eta } => {
            let den = 1.0 - eta * ne.tau;
            if den.abs() < PROJECTIVE_EPS {
                return Err(Error::ProjectiveInfinity(format!(
                    "time-translation denominator 1 - eta*tau = {den} vanishes"
                )));
            }
            let s = (1.0 - eta * eta).sqrt();
            Ok(NormalizedEvent::new(
                ne.xi * s / den,
                ne.eta * s / den,
                ne.zeta * s / den,
                (ne.tau - eta) / den,
            ))
        }
        NormGen::Space { alpha, axis } => {
            let sp = ne.spatial();
            let den = 1.0 + alpha * sp[axis];
            if den.abs() < PROJECTIVE_EPS {
                return Err(Error::ProjectiveInfinity(format!(
                    "spatial-translation denominator 1 + alpha*xi = {den} vanishes"
                )));
            }
            let s = (1.0 + alpha * alpha).sqrt();
            let mut out = [0.0; 3];
            for (i, o) in out.iter_mut().enumerate() {
                *o = if i == axis {
                    (sp[i] - alpha) / den
                } else {
                    sp[i] * s / den
                };
            }
            Ok(NormalizedEvent::with_spatial(out, ne.tau * s / den))
        }
        NormGen::Pull { beta, axis } => {
            let gamma = 1.0 / (1.0 - beta * beta).sqrt();
            let mut sp = ne.spatial();
            let tau = gamma * (ne.tau - beta * sp[axis]);
            sp[axis] = gamma * (sp[axis] - beta * ne.tau);
            Ok(NormalizedEvent::with_spatial(sp, tau))
        }
        NormGen::Rot { angle, a, b } => {
            let mut sp = ne.spatial();
            let (sa, ca) = angle.sin_cos();
            let (pa, pb) = (sp[a], sp[b]);
            sp[a] = ca * pa - sa * pb;
            sp[b] = sa * pa + ca * pb;
            Ok(NormalizedEvent::with_spatial(sp, ne.tau))
        }
    }
}

fn generator_matrix(g: &NormGen) -> Mat5 {
    let mut m = identity();
    match *g {
        // hyperbolic rotation in the (u4, u5) plane, tanh(phi) = -eta
        NormGen::Time { eta } => {
            let cosh = 1.0 / (1.0 - eta * eta).sqrt();
            let sinh = -eta * cosh;
            m[3][3] = cosh;
            m[3][4] = sinh;
            m[4][3] = sinh;
            m[4][4] = cosh;
        }
        // circular rotation in the (u_axis, u5) plane, tan(theta) = alpha
        NormGen::Space { alpha, axis } => {
            let cos = 1.0 / (1.0 + alpha * alpha).sqrt();
            let sin = alpha * cos;
            m[axis][axis] = cos;
            m[axis][4] = -sin;
            m[4][axis] = sin;
            m[4][4] = cos;
        }
        // hyperbolic rotation in the (u_axis, u4) plane, tanh(psi) = beta
        NormGen::Pull { beta, axis } => {
            let cosh = 1.0 / (1.0 - beta * beta).sqrt();
            let sinh = beta * cosh;
            m[axis][axis] = cosh;
            m[axis][3] = -sinh;
            m[3][axis] = -sinh;
            m[3][3] = cosh;
        }
        NormGen::Rot { angle, a, b } => {
            let (sin, cos) = angle.sin_cos();
            m[a][a] = cos;
            m[a][b] = -sin;
            m[b][a] = sin;
            m[b][b] = cos;
        }
    }
    m
}

/// Build the 5x5 matrix realization of a generator. The matrix acts in
/// exactly one coordinate plane and its projective action equals the
/// generator's closed form on every event of the common domain.
pub fn fantappie_generator(g: &Generator, p: &ModelParameters) -> Result<GroupElement> {
    let ng = g.normalized(p)?;
    Ok(GroupElement::from_parts(
        generator_matrix(&ng),
        Some(vec![g.clone()]),
    ))
}

/// Evaluate the printed fractional-linear form of a generator on an event.
pub fn closed_form_apply(g: &Generator, e: &Event, p: &ModelParameters) -> Result<Event> {
    let ng = g.normalized(p)?;
    let ne = NormalizedEvent::from_event(e, p);
    Ok(norm_apply(&ng, &ne)?.to_event(p))
}

/// Deviation-vs-radius report for a contraction-limit experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub r_values: Vec<f64>,
    pub deviations: Vec<f64>,
    /// Least-squares slope of log(deviation) against log(R); `None` when
    /// every deviation sits at the floating-point noise floor (R-free
    /// generators such as pullings and rotations).
    pub fitted_slope: Option<f64>,
}

/// Deviations below this are indistinguishable from rounding noise and are
/// excluded from the slope fit.
const DEVIATION_FLOOR: f64 = 1e-14;

/// Non-monotone tolerance: a deviation may exceed its predecessor by at
/// most this factor before the experiment is declared inconsistent.
const MONOTONE_SLACK: f64 = 1.05;

fn poincare_limit(g: &NormGen, ne: &NormalizedEvent) -> Result<NormalizedEvent> {
    match *g {
        NormGen::Time { eta } => Ok(NormalizedEvent::new(ne.xi, ne.eta, ne.zeta, ne.tau - eta)),
        NormGen::Space { alpha, axis } => {
            let mut sp = ne.spatial();
            sp[axis] -= alpha;
            Ok(NormalizedEvent::with_spatial(sp, ne.tau))
        }
        // pullings and rotations contain no R: the limit map is the map itself
        NormGen::Pull { .. } | NormGen::Rot { .. } => norm_apply(g, ne),
    }
}

fn sup_diff(a: &NormalizedEvent, b: &NormalizedEvent) -> f64 {
    (a.xi - b.xi)
        .abs()
        .max((a.eta - b.eta).abs())
        .max((a.zeta - b.zeta).abs())
        .max((a.tau - b.tau).abs())
}

/// Measure how fast the final-group action contracts onto its Poincare
/// limit as R grows. The probe event is dimensionless and held fixed while
/// the generator magnitude stays in physical units, so the deviation of a
/// time or spatial translation shrinks along with eta = cT/R or alpha = S/R.
pub fn limit_deviation(
    g: &Generator,
    e: &NormalizedEvent,
    r_list: &[f64],
    c: f64,
) -> Result<ConvergenceReport> {
    if r_list.len() < 2 {
        return Err(Error::Domain(
            "limit experiment needs at least two radii".into(),
        ));
    }
    if r_list.iter().any(|r| !r.is_finite() || *r <= 0.0) {
        return Err(Error::Domain("radii must be finite and positive".into()));
    }
    if r_list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain("radii must be strictly increasing".into()));
    }
    let sup =
        e.xi.abs()
            .max(e.eta.abs())
            .max(e.zeta.abs())
            .max(e.tau.abs());
    if r_list[0] < 10.0 * sup.max(1.0) {
        return Err(Error::Domain(
            "every radius must dominate the probe event coordinates".into(),
        ));
    }

    let mut deviations = Vec::with_capacity(r_list.len());
    for &r in r_list {
        let p = ModelParameters::new(r, c)?;
        let ng = g.normalized(&p)?;
        let full = norm_apply(&ng, e)?;
        let limit = poincare_limit(&ng, e)?;
        deviations.push(sup_diff(&full, &limit));
    }

    for w in deviations.windows(2) {
        if w[0] > DEVIATION_FLOOR && w[1] > DEVIATION_FLOOR && w[1] > w[0] * MONOTONE_SLACK {
            return Err(Error::ConvergenceFailure(format!(
                "deviation grew from {:e} to {:e} while R increased",
                w[0], w[1]
            )));
        }
    }

    let pts: Vec<(f64, f64)> = r_list
        .iter()
        .zip(deviations.iter())
        .filter(|(_, d)| **d > DEVIATION_FLOOR)
        .map(|(r, d)| (r.ln(), d.ln()))
        .collect();
    let fitted_slope = if pts.len() >= 2 {
        let n = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let cov = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>();
        let var = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum::<f64>();
        Some(cov / var)
    } else {
        None
    };

    Ok(ConvergenceReport {
        r_values: r_list.to_vec(),
        deviations,
        fitted_slope,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{apply, compose, inverse};
    use crate::linalg::{max_abs_diff, signature_defect};

    fn unit_params() -> ModelParameters {
        ModelParameters::new(1.0, 1.0).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn zero_time_translation_is_identity_matrix() {
        let g =
            fantappie_generator(&Generator::TimeTranslation { t: 0.0 }, &unit_params()).unwrap();
        assert!(max_abs_diff(g.matrix_ref(), &identity()) == 0.0);
    }

    #[test]
    fn time_translation_matrix_action() {
        // frozen closed-form values: x' = 0.2 sqrt(0.75)/0.8, t' = -0.1/0.8
        let p = unit_params();
        let g = fantappie_generator(&Generator::TimeTranslation { t: 0.5 }, &p).unwrap();
        assert!(signature_defect(g.matrix_ref()) < 1e-14);
        let e = apply(&g, &Event::new(0.2, 0.0, 0.0, 0.4), &p).unwrap();
        assert!(close(e.x, 0.21650635094610966, 1e-13));
        assert!(close(e.t, -0.125, 1e-13));
    }

    #[test]
    fn spatial_translation_matrix_is_plane_rotation() {
        // tan(theta) = alpha, checked entrywise at three magnitudes
        let p = unit_params();
        for alpha in [0.3, 0.5, 2.0] {
            let g = fantappie_generator(
                &Generator::SpatialTranslation {
                    s: alpha,
                    axis: Axis::X,
                },
                &p,
            )
            .unwrap();
            let theta = alpha.atan();
            let m = g.matrix_ref();
            assert!(close(m[0][0], theta.cos(), 1e-15));
            assert!(close(m[4][0], theta.sin(), 1e-15));
            assert!(close(m[0][4], -theta.sin(), 1e-15));
            assert!(close(m[4][4], theta.cos(), 1e-15));
            assert!(close(m[4][0] / m[0][0], alpha, 1e-15));
        }
    }

    #[test]
    fn closed_form_time_translation() {
        let p = unit_params();
        let g = Generator::TimeTranslation { t: 0.5 };
        let e = closed_form_apply(&g, &Event::new(0.2, 0.0, 0.0, 0.4), &p).unwrap();
        assert!(close(e.x, 0.21650635094610966, 1e-15));
        assert!(close(e.t, -0.125, 1e-15));
    }

    #[test]
    fn closed_form_spatial_translation() {
        // frozen from a 40-digit evaluation of the printed fractions
        let p = unit_params();
        let g = Generator::SpatialTranslation {
            s: 0.5,
            axis: Axis::X,
        };
        let e = closed_form_apply(&g, &Event::new(0.2, 0.1, 0.0, 0.3), &p).unwrap();
        assert!(close(e.x, -0.2727272727272727, 1e-15));
        assert!(close(e.y, 0.10163945352271771, 1e-15));
        assert!(close(e.z, 0.0, 1e-15));
        assert!(close(e.t, 0.30491836056815314, 1e-15));
    }

    #[test]
    fn pulling_is_lorentz_boost() {
        let p = unit_params();
        let g = Generator::Pulling {
            v: 0.6,
            axis: Axis::X,
        };
        let e = closed_form_apply(&g, &Event::new(1.0, 0.0, 0.0, 1.0), &p).unwrap();
        assert!(close(e.x, 0.5, 1e-14));
        assert!(close(e.t, 0.5, 1e-14));
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        let p = unit_params();
        assert!(fantappie_generator(&Generator::TimeTranslation { t: 1.0 }, &p).is_err());
        assert!(fantappie_generator(
            &Generator::Pulling {
                v: 1.0,
                axis: Axis::X
            },
            &p
        )
        .is_err());
        assert!(fantappie_generator(
            &Generator::Rotation {
                angle: 0.1,
                plane: (Axis::Y, Axis::Y)
            },
            &p
        )
        .is_err());
    }

    #[test]
    fn closed_form_flags_projective_infinity() {
        // eta = 0.5 sends tau = 2 to the chart boundary
        let p = unit_params();
        let g = Generator::TimeTranslation { t: 0.5 };
        let res = closed_form_apply(&g, &Event::new(0.0, 0.0, 0.0, 2.0), &p);
        assert!(matches!(res, Err(Error::ProjectiveInfinity(_))));
    }

    #[test]
    fn matrix_path_flags_projective_infinity() {
        let p = unit_params();
        let g = fantappie_generator(&Generator::TimeTranslation { t: 0.5 }, &p).unwrap();
        let res = apply(&g, &Event::new(0.0, 0.0, 0.0, 2.0), &p);
        assert!(matches!(res, Err(Error::ProjectiveInfinity(_))));
    }

    #[test]
    fn vertex_events_are_fixed_by_time_translations() {
        let p = ModelParameters::new(2.0, 0.5).unwrap();
        let g = fantappie_generator(&Generator::TimeTranslation { t: 1.7 }, &p).unwrap();
        for sign in [1.0, -1.0] {
            let vertex = Event::new(0.0, 0.0, 0.0, sign * p.t_eu());
            let image = apply(&g, &vertex, &p).unwrap();
            assert!(close(image.x, 0.0, 1e-12));
            assert!(close(image.t, vertex.t, 1e-12));
        }
    }

    #[test]
    fn time_translations_compose_by_velocity_addition() {
        let p = unit_params();
        let g1 = fantappie_generator(&Generator::TimeTranslation { t: 0.5 }, &p).unwrap();
        let g2 = fantappie_generator(&Generator::TimeTranslation { t: 0.5 }, &p).unwrap();
        let g = compose(&g1, &g2).unwrap();
        let m = g.matrix_ref();
        // effective eta = -tanh(phi1 + phi2) = (0.5 + 0.5)/(1 + 0.25)
        let eta_eff = -m[3][4] / m[4][4];
        assert!(close(eta_eff, 0.8, 1e-12));
    }

    #[test]
    fn inverse_of_time_translation_negates_parameter() {
        let p = unit_params();
        let g = fantappie_generator(&Generator::TimeTranslation { t: 0.3 }, &p).unwrap();
        let ginv = inverse(&g);
        let direct = fantappie_generator(&Generator::TimeTranslation { t: -0.3 }, &p).unwrap();
        assert!(max_abs_diff(ginv.matrix_ref(), direct.matrix_ref()) < 1e-12);
    }

    #[test]
    fn inverse_of_pulling_reverses_velocity() {
        let p = unit_params();
        let g = fantappie_generator(
            &Generator::Pulling {
                v: 0.6,
                axis: Axis::X,
            },
            &p,
        )
        .unwrap();
        let ginv = inverse(&g);
        let direct = fantappie_generator(
            &Generator::Pulling {
                v: -0.6,
                axis: Axis::X,
            },
            &p,
        )
        .unwrap();
        assert!(max_abs_diff(ginv.matrix_ref(), direct.matrix_ref()) < 1e-12);
    }

    #[test]
    fn spatial_translation_limit_slope() {
        let g = Generator::SpatialTranslation {
            s: 1.0,
            axis: Axis::X,
        };
        let e = NormalizedEvent::new(0.2, 0.1, 0.0, 0.3);
        let report = limit_deviation(&g, &e, &[1e2, 1e3, 1e4], 1.0).unwrap();
        let slope = report.fitted_slope.unwrap();
        assert!(
            (slope + 1.0).abs() < 0.05,
            "slope {slope} outside -1 +/- 0.05"
        );
    }

    #[test]
    fn time_translation_limit_slope() {
        let g = Generator::TimeTranslation { t: 1.0 };
        let e = NormalizedEvent::new(0.2, 0.0, 0.0, 0.3);
        let report = limit_deviation(&g, &e, &[1e2, 1e3, 1e4], 1.0).unwrap();
        let slope = report.fitted_slope.unwrap();
        assert!((slope + 1.0).abs() < 0.05);
        // deviations shrink roughly tenfold per decade of R
        assert!(report.deviations[0] / report.deviations[1] > 5.0);
    }

    #[test]
    fn pulling_limit_is_exact() {
        let g = Generator::Pulling {
            v: 0.6,
            axis: Axis::X,
        };
        let e = NormalizedEvent::new(0.2, 0.1, 0.0, 0.3);
        let report = limit_deviation(&g, &e, &[1e2, 1e3, 1e4], 1.0).unwrap();
        assert!(report.deviations.iter().all(|d| *d < 1e-14));
        assert_eq!(report.fitted_slope, None);
    }

    #[test]
    fn limit_rejects_bad_radius_lists() {
        let g = Generator::TimeTranslation { t: 1.0 };
        let e = NormalizedEvent::new(0.2, 0.0, 0.0, 0.3);
        assert!(limit_deviation(&g, &e, &[1e3, 1e2], 1.0).is_err());
        assert!(limit_deviation(&g, &e, &[1e2], 1.0).is_err());
        assert!(limit_deviation(&g, &e, &[0.5, 1e2], 1.0).is_err());
    }
}
