//! Derived kinematic physics: composition of electromagnetic ages, the
//! differentiated velocity link between epochs, Hubble flow, and the
//! clock-drift calculator relating astronomic to atomic time.

use crate::error::{Error, Result};
use crate::model::{GaugeMode, MetricGauge, ModelParameters};
use crate::scales::em_time_to_grav;

/// Seconds in a Julian year.
pub const SECONDS_PER_YEAR: f64 = 31_557_600.0;

/// Hubble parameter and recession velocity at one event.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HubbleState {
    /// H(t_E) = 1 / (t_E + t_EU), in 1/s.
    pub h: f64,
    /// Recession velocity H(t_E) * x_E, in m/s.
    pub v_e: f64,
}

/// Gravitational-vs-electromagnetic clock comparison at one epoch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriftReport {
    pub t_e: f64,
    pub t_g: f64,
    /// t_G - t_E; has the sign of t_E in the consistent gauge.
    pub drift: f64,
    pub gauge: GaugeMode,
}

/// Compose two electromagnetic ages:
/// (t1 + t2) / (1 + t1 t2 / t_EU^2), the relativistic-velocity addition law
/// with t_EU playing the role of the light speed. The boundaries +-t_EU are
/// absorbing fixed points, which is exactly the invariance of the
/// electromagnetic age of the Universe.
pub fn compose_em_ages(t1: f64, t2: f64, p: &ModelParameters) -> Result<f64> {
    let t_eu = p.t_eu();
    if !t1.is_finite() || t1.abs() > t_eu || !t2.is_finite() || t2.abs() > t_eu {
        return Err(Error::Domain(format!(
            "ages must lie in [-t_EU, t_EU] = [{}, {}]",
            -t_eu, t_eu
        )));
    }
    if t1 * t2 == -t_eu * t_eu {
        return Err(Error::Domain(
            "opposite-boundary pair has no composition".into(),
        ));
    }
    // boundary fixed points, kept exact
    if t1.abs() == t_eu {
        return Ok(t1);
    }
    if t2.abs() == t_eu {
        return Ok(t2);
    }
    let out = (t1 + t2) / (1.0 + t1 * t2 / (t_eu * t_eu));
    Ok(out.clamp(-t_eu, t_eu))
}

/// Velocity of a point as seen across a time translation of parameter eta:
/// V' = [V (1 + eta t_E/t_EU) - x_E eta/t_EU] / sqrt(1 - eta^2),
/// obtained by differentiating the fractional-linear time translation.
///
/// Sign bridge: this form carries the denominator (1 + eta t_E/t_EU) while
/// the generator in [`crate::groups`] carries (1 - eta t/(R/c)); eta here
/// corresponds to a generator parameter T = -eta t_EU.
pub fn velocity_transform(
    v_e: f64,
    x_e: f64,
    t_e: f64,
    eta: f64,
    p: &ModelParameters,
) -> Result<f64> {
    if !eta.is_finite() || eta.abs() >= 1.0 {
        return Err(Error::Domain(format!(
            "velocity transform requires |eta| < 1, got {eta}"
        )));
    }
    let t_eu = p.t_eu();
    let den = 1.0 + eta * t_e / t_eu;
    if den.abs() < 1e-12 {
        return Err(Error::Domain(
            "translation is singular at this epoch (1 + eta t_E/t_EU = 0)".into(),
        ));
    }
    Ok((v_e * den - x_e * eta / t_eu) / (1.0 - eta * eta).sqrt())
}

/// Hubble flow at an epoch: H = 1/(t_E + t_EU) and V_E = H x_E. The eta -> 1
/// limit of the velocity transform is taken analytically, so the current
/// epoch gives H = c/R exactly.
pub fn hubble(x_e: f64, t_e: f64, p: &ModelParameters) -> Result<HubbleState> {
    if !t_e.is_finite() || !x_e.is_finite() {
        return Err(Error::Domain("hubble flow needs finite inputs".into()));
    }
    // 1/(t_E + R/c) computed as c/(c t_E + R); at t_E = 0 this is c/R exactly
    let den = p.c() * t_e + p.r();
    if den <= 0.0 {
        return Err(Error::Domain(format!(
            "epoch must satisfy t_E > -t_EU, got t_E = {t_e}"
        )));
    }
    let h = p.c() / den;
    Ok(HubbleState { h, v_e: h * x_e })
}

/// artanh(u) - u without cancellation: a direct subtraction would lose the
/// entire cubic-order drift whenever |u| is small (at SI scale a second of
/// drift sits sixteen orders below t_G itself).
fn atanh_minus_id(u: f64) -> f64 {
    if u.abs() >= 0.5 {
        return u.atanh() - u;
    }
    let u2 = u * u;
    let mut term = u * u2;
    let mut order = 3.0;
    let mut acc = 0.0;
    loop {
        let add = term / order;
        acc += add;
        if add == 0.0 || add.abs() <= acc.abs() * f64::EPSILON {
            return acc;
        }
        term *= u2;
        order += 2.0;
    }
}

/// Compare gravitational and electromagnetic clocks at one epoch. The
/// drift t_G - t_E is evaluated through a cancellation-free form so it
/// keeps full relative accuracy even when it is many orders of magnitude
/// below t_G.
pub fn clock_drift(t_e: f64, gauge: &MetricGauge, p: &ModelParameters) -> Result<DriftReport> {
    let t_g = em_time_to_grav(t_e, gauge, p)?;
    let u = t_e / p.t_eu();
    let drift = match gauge.mode() {
        GaugeMode::Consistent => p.t_eu() * atanh_minus_id(u),
        // t_G - t_E = t_EU (2 artanh(u) - u) = t_EU (2 (artanh(u) - u) + u)
        GaugeMode::PaperLiteral => p.t_eu() * (2.0 * atanh_minus_id(u) + u),
    };
    Ok(DriftReport {
        t_e,
        t_g,
        drift,
        gauge: gauge.mode(),
    })
}

const BISECTION_BUDGET: u32 = 300;
const BISECTION_REL_TOL: f64 = 1e-10;

/// The unique epoch t_E in (0, R/c) whose clock drift equals `target`,
/// found by bisection; the drift is strictly increasing with range (0, inf).
pub fn drift_horizon(target: f64, gauge: &MetricGauge, p: &ModelParameters) -> Result<f64> {
    if !target.is_finite() || target <= 0.0 {
        return Err(Error::Domain(format!(
            "drift target must be positive, got {target}"
        )));
    }
    let drift_at = |t_e: f64| -> Result<f64> { Ok(clock_drift(t_e, gauge, p)?.drift) };

    let mut lo = 0.0;
    let mut hi = p.t_eu() * (1.0 - 1e-15);
    if drift_at(hi)? < target {
        return Err(Error::ConvergenceFailure(format!(
            "target {target} exceeds the largest representable drift"
        )));
    }
    for _ in 0..BISECTION_BUDGET {
        let mid = 0.5 * (lo + hi);
        if drift_at(mid)? < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= BISECTION_REL_TOL * hi {
            return Ok(0.5 * (lo + hi));
        }
    }
    Err(Error::ConvergenceFailure(format!(
        "bisection did not reach relative {BISECTION_REL_TOL:e} within {BISECTION_BUDGET} steps"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_params() -> ModelParameters {
        ModelParameters::new(1.0, 1.0).unwrap()
    }

    fn si_params() -> ModelParameters {
        ModelParameters::new(1.3e26, 2.99792458e8).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn composition_identity_and_value() {
        let p = unit_params();
        assert_eq!(compose_em_ages(0.0, 0.37, &p).unwrap(), 0.37);
        assert!(close(compose_em_ages(0.5, 0.5, &p).unwrap(), 0.8, 1e-15));
    }

    #[test]
    fn composition_boundary_is_absorbing() {
        let p = ModelParameters::new(2.6e26, 2.99792458e8).unwrap();
        let t_eu = p.t_eu();
        assert_eq!(compose_em_ages(t_eu, 0.3 * t_eu, &p).unwrap(), t_eu);
        assert_eq!(compose_em_ages(-0.9 * t_eu, -t_eu, &p).unwrap(), -t_eu);
    }

    #[test]
    fn composition_rejects_singular_pair() {
        let p = unit_params();
        assert!(compose_em_ages(1.0, -1.0, &p).is_err());
        assert!(compose_em_ages(1.2, 0.0, &p).is_err());
    }

    #[test]
    fn composition_inverse_element() {
        let p = unit_params();
        assert_eq!(compose_em_ages(0.73, -0.73, &p).unwrap(), 0.0);
    }

    #[test]
    fn velocity_transform_examples() {
        let p = unit_params();
        // eta = 0 is the identity
        assert_eq!(velocity_transform(0.42, 0.2, 0.1, 0.0, &p).unwrap(), 0.42);
        // frozen: -0.1 / sqrt(0.75)
        assert!(close(
            velocity_transform(0.0, 0.2, 0.0, 0.5, &p).unwrap(),
            -0.11547005383792515,
            1e-15
        ));
        assert!(velocity_transform(0.0, 0.2, 0.0, 1.0, &p).is_err());
    }

    #[test]
    fn velocity_transform_is_differential_of_time_translation() {
        // central finite difference through the closed form with the
        // bridged parameter T = -eta t_EU
        use crate::groups::{closed_form_apply, Generator};
        use crate::model::Event;
        let p = unit_params();
        let (x0, t0, v, eta) = (0.2, 0.3, 0.25, 0.4);
        let gen = Generator::TimeTranslation { t: -eta * p.t_eu() };
        let dt = 1e-6;
        let minus =
            closed_form_apply(&gen, &Event::new(x0 - v * dt, 0.0, 0.0, t0 - dt), &p).unwrap();
        let plus =
            closed_form_apply(&gen, &Event::new(x0 + v * dt, 0.0, 0.0, t0 + dt), &p).unwrap();
        let fd = (plus.x - minus.x) / (plus.t - minus.t);
        let direct = velocity_transform(v, x0, t0, eta, &p).unwrap();
        assert!(close(direct, 0.21821789023599236, 1e-12));
        assert!(
            close(fd, direct, 1e-9),
            "finite difference {fd} vs {direct}"
        );
    }

    #[test]
    fn velocity_transform_hubble_limit() {
        // solving the link for V with V' held finite sends V to x/(t + t_EU)
        let p = unit_params();
        let (x_e, t_e) = (0.4, 0.2);
        let v_prime = 0.37;
        let eta: f64 = 1.0 - 1e-9;
        let v = (v_prime * (1.0 - eta * eta).sqrt() + x_e * eta / p.t_eu())
            / (1.0 + eta * t_e / p.t_eu());
        let h = hubble(x_e, t_e, &p).unwrap();
        assert!(close(v, h.v_e, 1e-4));
    }

    #[test]
    fn hubble_current_epoch() {
        let p = si_params();
        let state = hubble(0.3, 0.0, &p).unwrap();
        assert_eq!(state.h, p.c() / p.r());
        assert_eq!(state.v_e, state.h * 0.3);
        let origin = hubble(0.0, 123.0, &p).unwrap();
        assert_eq!(origin.v_e, 0.0);
    }

    #[test]
    fn hubble_rejects_pre_initial_epochs() {
        let p = unit_params();
        assert!(hubble(0.1, -1.0, &p).is_err());
        assert!(hubble(0.1, -2.0, &p).is_err());
        assert!(hubble(0.1, -0.999, &p).is_ok());
    }

    #[test]
    fn drift_examples() {
        let p = unit_params();
        let cons = MetricGauge::consistent(&p);
        assert_eq!(clock_drift(0.0, &cons, &p).unwrap().drift, 0.0);
        // frozen: artanh(0.1) - 0.1
        let r = clock_drift(0.1, &cons, &p).unwrap();
        assert!(close(r.drift, 3.3534773107558066e-4, 1e-12));
        // within a percent of the cubic leading term
        assert!((r.drift - 0.1f64.powi(3) / 3.0).abs() < 0.01 * r.drift);

        let lit = MetricGauge::paper_literal(&p);
        let r = clock_drift(0.5, &lit, &p).unwrap();
        assert!(close(r.drift, 0.5986122886681098, 1e-14));
        assert_eq!(r.gauge, GaugeMode::PaperLiteral);
    }

    #[test]
    fn drift_horizon_desk_scale() {
        // one second of drift accumulates over tens of thousands of years
        let p = si_params();
        let cons = MetricGauge::consistent(&p);
        let t_e = drift_horizon(1.0, &cons, &p).unwrap();
        let years = t_e / SECONDS_PER_YEAR;
        assert!((1e3..1e5).contains(&years), "horizon {years} years");
        let analytic = (3.0 * p.t_eu() * p.t_eu()).cbrt();
        assert!(close(t_e, analytic, 0.01));
    }

    #[test]
    fn drift_horizon_continuity_and_scaling() {
        let p = unit_params();
        let cons = MetricGauge::consistent(&p);
        let tiny = drift_horizon(1e-9, &cons, &p).unwrap();
        assert!(tiny > 0.0 && tiny < 2e-3);
        // cubic leading order: doubling the target scales the root by 2^(1/3)
        let t1 = drift_horizon(1e-6, &cons, &p).unwrap();
        let t2 = drift_horizon(2e-6, &cons, &p).unwrap();
        assert!(close(t2 / t1, 2f64.cbrt(), 1e-3));
    }

    #[test]
    fn drift_horizon_round_trip() {
        let p = unit_params();
        let cons = MetricGauge::consistent(&p);
        for t_e in [0.05, 0.3, 0.8, 0.99] {
            let drift = clock_drift(t_e, &cons, &p).unwrap().drift;
            let back = drift_horizon(drift, &cons, &p).unwrap();
            assert!(close(back, t_e, 1e-8));
        }
    }

    #[test]
    fn drift_horizon_unreachable_target() {
        let p = unit_params();
        let cons = MetricGauge::consistent(&p);
        assert!(matches!(
            drift_horizon(1e30, &cons, &p),
            Err(Error::ConvergenceFailure(_))
        ));
    }
}
