//! Coordinate conversions between the projected (electromagnetic) scale and
//! the non-projected (gravitational) scale.
//!
//! Time axis, consistent gauge: t_G = (R/c) artanh(c t_E / R) with exact
//! inverse t_E = (R/c) tanh(c t_G / R); the paper-literal gauge is exactly
//! twice the consistent value. Space axis: x_G = R arctan(x_E / R) with
//! inverse x_E = R tan(x_G / R).

use crate::error::{Error, Result};
use crate::model::{GaugeMode, MetricGauge, ModelParameters};

/// Gravitational time of an electromagnetic epoch; strictly increasing and
/// odd, diverging as |c t_E| -> R.
pub fn em_time_to_grav(t_e: f64, gauge: &MetricGauge, p: &ModelParameters) -> Result<f64> {
    let u = t_e / p.t_eu();
    if !u.is_finite() || u.abs() >= 1.0 {
        return Err(Error::Domain(format!(
            "electromagnetic time must satisfy |t_E| < R/c (got t_E/t_EU = {u})"
        )));
    }
    let consistent = p.t_eu() * u.atanh();
    Ok(match gauge.mode() {
        GaugeMode::Consistent => consistent,
        // exactly twice the consistent value, by construction
        GaugeMode::PaperLiteral => 2.0 * consistent,
    })
}

/// Exact functional inverse of [`em_time_to_grav`] in the same gauge.
/// The image stays in the open interval (-R/c, R/c): where tanh saturates
/// to 1 in double precision, the result is pulled one ulp inside.
pub fn grav_time_to_em(t_g: f64, gauge: &MetricGauge, p: &ModelParameters) -> Result<f64> {
    if !t_g.is_finite() {
        return Err(Error::Domain("gravitational time must be finite".into()));
    }
    let w = match gauge.mode() {
        GaugeMode::Consistent => t_g / p.t_eu(),
        GaugeMode::PaperLiteral => t_g / (2.0 * p.t_eu()),
    };
    let u = w.tanh();
    let u = if u.abs() >= 1.0 {
        u.signum() * (1.0 - f64::EPSILON)
    } else {
        u
    };
    Ok(p.t_eu() * u)
}

/// Diagnostic evaluation of the printed inverse t_E = (R/2c) tanh(c t_G/R).
/// Kept for comparison reports only: it is not the inverse of either gauge
/// beyond first order.
pub fn grav_time_to_em_printed(t_g: f64, p: &ModelParameters) -> f64 {
    0.5 * p.t_eu() * (t_g / p.t_eu()).tanh()
}

/// Gravitational length of a projected length: R arctan(x_E / R).
/// Total, odd, strictly increasing, bounded by pi R / 2.
pub fn em_space_to_grav(x_e: f64, p: &ModelParameters) -> f64 {
    p.r() * (x_e / p.r()).atan()
}

/// Inverse space map R tan(x_G / R) on |x_G| < pi R / 2.
pub fn grav_space_to_em(x_g: f64, p: &ModelParameters) -> Result<f64> {
    let half_circumference = std::f64::consts::FRAC_PI_2 * p.r();
    if !x_g.is_finite() || x_g.abs() >= half_circumference {
        return Err(Error::Domain(format!(
            "gravitational length must satisfy |x_G| < pi R/2 (got {x_g})"
        )));
    }
    Ok(p.r() * (x_g / p.r()).tan())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_params() -> ModelParameters {
        ModelParameters::new(1.0, 1.0).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn time_map_examples() {
        let p = unit_params();
        let cons = MetricGauge::consistent(&p);
        assert_eq!(em_time_to_grav(0.0, &cons, &p).unwrap(), 0.0);
        assert!(close(
            em_time_to_grav(0.5, &cons, &p).unwrap(),
            0.5493061443340549,
            1e-15
        ));
        // paper-literal reproduces the printed log form: ln 3 at t_E = 0.5
        let lit = MetricGauge::paper_literal(&p);
        assert!(close(
            em_time_to_grav(0.5, &lit, &p).unwrap(),
            1.0986122886681098,
            1e-15
        ));
    }

    #[test]
    fn time_map_diverges_toward_beginning_of_time() {
        let p = unit_params();
        let cons = MetricGauge::consistent(&p);
        let near = em_time_to_grav(-(1.0 - 1e-14), &cons, &p).unwrap();
        assert!(near < -15.0);
        assert!(em_time_to_grav(-1.0, &cons, &p).is_err());
        assert!(em_time_to_grav(1.0 + 1e-12, &cons, &p).is_err());
    }

    #[test]
    fn inverse_time_map() {
        let p = unit_params();
        let cons = MetricGauge::consistent(&p);
        assert_eq!(grav_time_to_em(0.0, &cons, &p).unwrap(), 0.0);
        assert!(close(
            grav_time_to_em(0.5493061443340549, &cons, &p).unwrap(),
            0.5,
            1e-13
        ));
        // the image stays strictly inside the domain even where tanh saturates
        let saturated = grav_time_to_em(1e6, &cons, &p).unwrap();
        assert!(saturated < 1.0 && saturated > 1.0 - 1e-15);
    }

    #[test]
    fn printed_inverse_disagrees() {
        let p = unit_params();
        let printed = grav_time_to_em_printed(0.5493061443340549, &p);
        assert!(close(printed, 0.25, 1e-6));
        assert!((printed - 0.5).abs() > 0.2);
    }

    #[test]
    fn space_map_examples() {
        let p = unit_params();
        assert_eq!(em_space_to_grav(0.0, &p), 0.0);
        assert!(close(
            em_space_to_grav(1.0, &p),
            std::f64::consts::FRAC_PI_4,
            1e-15
        ));
        assert!(close(em_space_to_grav(1e6, &p), 1.5707953267948966, 1e-15));
        assert!(em_space_to_grav(1e6, &p) < std::f64::consts::FRAC_PI_2);
    }

    #[test]
    fn inverse_space_map() {
        let p = unit_params();
        assert_eq!(grav_space_to_em(0.0, &p).unwrap(), 0.0);
        assert!(close(
            grav_space_to_em(std::f64::consts::FRAC_PI_4, &p).unwrap(),
            1.0,
            1e-13
        ));
        assert!(grav_space_to_em(std::f64::consts::FRAC_PI_2, &p).is_err());
    }

    #[test]
    fn round_trips_near_boundary() {
        let p = ModelParameters::new(2.7, 1.9).unwrap();
        let cons = MetricGauge::consistent(&p);
        for frac in [0.1, 0.5, 0.9, 0.99, 0.999] {
            let t_e = frac * p.t_eu();
            let back =
                grav_time_to_em(em_time_to_grav(t_e, &cons, &p).unwrap(), &cons, &p).unwrap();
            assert!(close(back, t_e, 1e-12), "time round trip at {frac}");

            let x_g = frac * std::f64::consts::FRAC_PI_2 * p.r();
            let fwd = em_space_to_grav(grav_space_to_em(x_g, &p).unwrap(), &p);
            assert!(close(fwd, x_g, 1e-12), "space round trip at {frac}");
        }
    }

    #[test]
    fn paper_literal_is_twice_consistent_exactly() {
        let p = ModelParameters::new(1.3e26, 2.99792458e8).unwrap();
        let cons = MetricGauge::consistent(&p);
        let lit = MetricGauge::paper_literal(&p);
        for frac in [1e-6, 0.3, 0.77, 0.999] {
            let t_e = frac * p.t_eu();
            let a = em_time_to_grav(t_e, &cons, &p).unwrap();
            let b = em_time_to_grav(t_e, &lit, &p).unwrap();
            assert_eq!(b, 2.0 * a);
        }
    }

    #[test]
    fn series_coefficient_of_drift() {
        // t_G - t_E = t_E^3/3 + t_E^5/5 + ... in dimensionless units;
        // the measured fifth-order coefficient at t_E = 0.1 is 0.2014...
        let p = unit_params();
        let cons = MetricGauge::consistent(&p);
        let t_e = 0.1;
        let drift = em_time_to_grav(t_e, &cons, &p).unwrap() - t_e;
        let ratio = (drift - t_e.powi(3) / 3.0) / t_e.powi(5);
        assert!(
            (0.19..=0.23).contains(&ratio),
            "fifth-order coefficient estimate {ratio}"
        );
    }

    #[test]
    fn order_relations() {
        let p = unit_params();
        let cons = MetricGauge::consistent(&p);
        for v in [0.1, 0.4, 0.8] {
            assert!(em_space_to_grav(v, &p) < v);
            assert!(em_time_to_grav(v, &cons, &p).unwrap() > v);
        }
    }
}
