//! Cayley-Klein machinery on the 2-dimensional (x, t) model: chords of the
//! absolute c^2 t^2 - x^2 = R^2, the cross-ratio of four collinear points,
//! and logarithmic distances along the time and space axes.

use crate::error::{Error, Result};
use crate::model::{GravCoordinate, MetricGauge, ModelParameters};

/// A point of the 2-dimensional model, x in meters and t in seconds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanePoint {
    pub x: f64,
    pub t: f64,
}

impl PlanePoint {
    pub fn new(x: f64, t: f64) -> Self {
        Self { x, t }
    }
}

/// The two intersections of a line with the absolute, ordered by the line
/// parameter of the A -> B direction (M first).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordPair {
    pub m: PlanePoint,
    pub n: PlanePoint,
}

/// Collinearity tolerance, relative to the span of the quadruple.
const COLLINEAR_TOL: f64 = 1e-10;
/// Relative tolerance for constant-coordinate chord checks.
const DEGENERATE_TOL: f64 = 1e-12;
/// Relative floor below which a cross-ratio denominator counts as a
/// coincident-point degeneracy. Kept near the rounding floor so that
/// queries close to the absolute still evaluate.
const RATIO_DENOM_TOL: f64 = 1e-14;

fn normalized_xy(p: &PlanePoint, params: &ModelParameters) -> (f64, f64) {
    (p.x / params.r(), p.t * params.c() / params.r())
}

/// Intersect the line through A and B with the absolute. The quadratic in
/// the line parameter lambda (P = A + lambda (B - A)) is solved in
/// dimensionless coordinates; both roots must be real and separated.
pub fn chord_endpoints(a: &PlanePoint, b: &PlanePoint, p: &ModelParameters) -> Result<ChordPair> {
    let (xa, ta) = normalized_xy(a, p);
    let (xb, tb) = normalized_xy(b, p);
    let dx = xb - xa;
    let dt = tb - ta;
    if dx == 0.0 && dt == 0.0 {
        return Err(Error::Domain(
            "chord endpoints need two distinct points".into(),
        ));
    }

    // (ta + l*dt)^2 - (xa + l*dx)^2 = 1
    let q2 = dt * dt - dx * dx;
    let q1 = 2.0 * (ta * dt - xa * dx);
    let q0 = ta * ta - xa * xa - 1.0;
    let scale = q2.abs().max(q1.abs()).max(q0.abs());

    // light-like direction: the second intersection escapes to infinity
    if q2.abs() <= 1e-14 * scale {
        return Err(Error::DegenerateChord);
    }
    let disc = q1 * q1 - 4.0 * q2 * q0;
    if disc < 0.0 {
        return Err(Error::NoRealIntersection);
    }
    if disc.sqrt() <= 1e-12 * scale {
        return Err(Error::DegenerateChord);
    }

    // stable quadratic roots
    let q = -0.5 * (q1 + q1.signum() * disc.sqrt());
    let (l1, l2) = if q == 0.0 {
        let r = (disc.sqrt()) / (2.0 * q2);
        (-r, r)
    } else {
        (q / q2, q0 / q)
    };
    let (lm, ln) = if l1 <= l2 { (l1, l2) } else { (l2, l1) };

    let point_at = |l: f64| PlanePoint {
        x: (xa + l * dx) * p.r(),
        t: (ta + l * dt) * p.r() / p.c(),
    };
    let pair = ChordPair {
        m: point_at(lm),
        n: point_at(ln),
    };
    debug_assert!(
        [lm, ln].iter().all(|l| {
            let (x, t) = (xa + l * dx, ta + l * dt);
            (t * t - x * x - 1.0).abs() < 1e-10
        }),
        "chord endpoints must satisfy the absolute equation"
    );
    Ok(pair)
}

/// Cross-ratio (AM/BM):(BN/AN) of four collinear points, computed through
/// signed line-parameter differences. Invariant under every projective map
/// of the plane, in particular under the final group.
pub fn cross_ratio(a: &PlanePoint, b: &PlanePoint, m: &PlanePoint, n: &PlanePoint) -> Result<f64> {
    let pts = [a, b, m, n];
    // Per-axis rescale: the cross-ratio is invariant under diagonal maps,
    // so each axis may be normalized independently of units.
    let sx = pts
        .iter()
        .map(|p| p.x.abs())
        .fold(0.0, f64::max)
        .max(1e-300);
    let st = pts
        .iter()
        .map(|p| p.t.abs())
        .fold(0.0, f64::max)
        .max(1e-300);
    let q: Vec<(f64, f64)> = pts.iter().map(|p| (p.x / sx, p.t / st)).collect();

    let span = {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in i + 1..4 {
                let d = (q[i].0 - q[j].0).hypot(q[i].1 - q[j].1);
                worst = worst.max(d);
            }
        }
        worst
    };
    if span == 0.0 {
        return Err(Error::Domain("all four points coincide".into()));
    }

    // direction from the better-separated defining pair
    let d_mn = (q[3].0 - q[2].0, q[3].1 - q[2].1);
    let d_ab = (q[1].0 - q[0].0, q[1].1 - q[0].1);
    let norm = |v: (f64, f64)| v.0.hypot(v.1);
    let dir = if norm(d_mn) >= norm(d_ab) { d_mn } else { d_ab };
    let len = norm(dir);
    let dir = (dir.0 / len, dir.1 / len);

    let base = q[2];
    let mut lambda = [0.0; 4];
    for (i, pt) in q.iter().enumerate() {
        let rel = (pt.0 - base.0, pt.1 - base.1);
        let perp = (rel.0 * dir.1 - rel.1 * dir.0).abs();
        if perp > COLLINEAR_TOL * span {
            return Err(Error::Domain(format!(
                "points are not collinear (offset {perp:e} on span {span:e})"
            )));
        }
        lambda[i] = rel.0 * dir.0 + rel.1 * dir.1;
    }

    let (la, lb, lm, ln) = (lambda[0], lambda[1], lambda[2], lambda[3]);
    let bm = lb - lm;
    let an = la - ln;
    if bm.abs() < RATIO_DENOM_TOL * span || an.abs() < RATIO_DENOM_TOL * span {
        return Err(Error::Domain(
            "cross-ratio denominator vanishes (B = M or A = N)".into(),
        ));
    }
    Ok(((la - lm) * (lb - ln)) / (bm * an))
}

/// Signed Cayley-Klein distance between two points of a constant-x chord,
/// k_time * log of the cross-ratio with the chord oriented toward
/// increasing t. For A = (0, 0), B = (0, t_E) this is
/// k_time * log((R + c t_E)/(R - c t_E)), positive for t_E > 0.
pub fn time_distance(
    a: &PlanePoint,
    b: &PlanePoint,
    gauge: &MetricGauge,
    p: &ModelParameters,
) -> Result<GravCoordinate> {
    if a == b {
        return Ok(GravCoordinate::Time(0.0));
    }
    let (xa, ta) = normalized_xy(a, p);
    let (xb, tb) = normalized_xy(b, p);
    if (xa - xb).abs() > DEGENERATE_TOL * xa.abs().max(xb.abs()).max(1.0) {
        return Err(Error::Domain(
            "time distance requires a constant-x chord".into(),
        ));
    }
    if (ta - tb).abs() <= f64::EPSILON * ta.abs().max(tb.abs()) {
        return Ok(GravCoordinate::Time(0.0));
    }
    let chord = chord_endpoints(a, b, p)?;
    // orient the chord by increasing t so the distance is odd in t
    let (c_pt, d_pt) = if chord.n.t >= chord.m.t {
        (chord.n, chord.m)
    } else {
        (chord.m, chord.n)
    };
    let cr = cross_ratio(a, b, &c_pt, &d_pt)?;
    if !cr.is_finite() || cr <= 0.0 {
        return Err(Error::Domain(format!(
            "point on or beyond the absolute (cross-ratio {cr})"
        )));
    }
    Ok(GravCoordinate::Time(gauge.k_time() * cr.ln()))
}

/// Cayley-Klein distance between two points of a constant-t line. The
/// complex chord endpoints produce a real arctangent:
/// for A = (0, 0), B = (x_E, 0) the value is R * arctan(x_E / R).
pub fn space_distance(
    a: &PlanePoint,
    b: &PlanePoint,
    p: &ModelParameters,
) -> Result<GravCoordinate> {
    if a == b {
        return Ok(GravCoordinate::Space(0.0));
    }
    let (xa, ta) = normalized_xy(a, p);
    let (xb, tb) = normalized_xy(b, p);
    if (ta - tb).abs() > DEGENERATE_TOL * ta.abs().max(tb.abs()).max(1.0) {
        return Err(Error::Domain(
            "space distance requires points on a common constant-t line".into(),
        ));
    }
    let s2 = 1.0 - ta * ta;
    if s2 <= 0.0 {
        return Err(Error::Domain(
            "constant-t line lies outside the spacelike family".into(),
        ));
    }
    let s = s2.sqrt();
    Ok(GravCoordinate::Space(
        p.r() * ((xb / s).atan() - (xa / s).atan()),
    ))
}

/// General-position chord distance (experimental): k_time * log of the
/// cross-ratio with the chord oriented by the A -> B parameter, so the
/// value is symmetric in A and B. No accuracy guarantee away from the
/// axis-aligned families.
pub fn chord_distance(
    a: &PlanePoint,
    b: &PlanePoint,
    gauge: &MetricGauge,
    p: &ModelParameters,
) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let chord = chord_endpoints(a, b, p)?;
    let cr = cross_ratio(a, b, &chord.n, &chord.m)?;
    if !cr.is_finite() || cr <= 0.0 {
        return Err(Error::Domain(format!(
            "query points do not separate the chord (cross-ratio {cr})"
        )));
    }
    Ok(gauge.k_time() * cr.ln())
}
