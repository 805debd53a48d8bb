//! Flag-string and file parsing for the CLI.

use std::path::Path;

use serde::Deserialize;

use projrel_core::groups::{Axis, Generator, GroupElement};
use projrel_core::metric::PlanePoint;
use projrel_core::{Error, Event, Result};

pub fn parse_axis(s: &str) -> Result<Axis> {
    s.parse()
}

pub fn parse_plane(s: &str) -> Result<(Axis, Axis)> {
    match s {
        "xy" => Ok((Axis::X, Axis::Y)),
        "yz" => Ok((Axis::Y, Axis::Z)),
        "zx" => Ok((Axis::Z, Axis::X)),
        other => Err(Error::Domain(format!(
            "rotation plane must be xy, yz, or zx, got `{other}`"
        ))),
    }
}

fn parse_number(s: &str) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| Error::Domain(format!("`{s}` is not a number")))?;
    if !v.is_finite() {
        return Err(Error::Domain(format!("`{s}` is not finite")));
    }
    Ok(v)
}

pub fn parse_f64_list(s: &str) -> Result<Vec<f64>> {
    s.split(',').map(parse_number).collect()
}

pub fn parse_vec3(s: &str) -> Result<[f64; 3]> {
    let v = parse_f64_list(s)?;
    if v.len() != 3 {
        return Err(Error::Domain(format!(
            "expected three comma-separated numbers, got `{s}`"
        )));
    }
    Ok([v[0], v[1], v[2]])
}

pub fn parse_event(s: &str) -> Result<Event> {
    let v = parse_f64_list(s)?;
    if v.len() != 4 {
        return Err(Error::Domain(format!(
            "an event needs four comma-separated numbers x,y,z,t, got `{s}`"
        )));
    }
    Ok(Event::new(v[0], v[1], v[2], v[3]))
}

pub fn parse_plane_point(s: &str) -> Result<PlanePoint> {
    let v = parse_f64_list(s)?;
    if v.len() != 2 {
        return Err(Error::Domain(format!(
            "a plane point needs two comma-separated numbers x,t, got `{s}`"
        )));
    }
    Ok(PlanePoint::new(v[0], v[1]))
}

/// Grid "start:stop:step" with an inclusive stop (within one part in 1e9 of
/// a step).
pub fn parse_range(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::Domain(format!(
            "a range is start:stop:step, got `{s}`"
        )));
    }
    let start = parse_number(parts[0])?;
    let stop = parse_number(parts[1])?;
    let step = parse_number(parts[2])?;
    if step <= 0.0 || stop < start {
        return Err(Error::Domain(format!(
            "range needs step > 0 and stop >= start, got `{s}`"
        )));
    }
    let mut grid = Vec::new();
    let mut k = 0u64;
    loop {
        let v = start + (k as f64) * step;
        if v > stop + step * 1e-9 {
            break;
        }
        grid.push(v);
        k += 1;
        if k > 10_000_000 {
            return Err(Error::Domain("range produces too many grid points".into()));
        }
    }
    Ok(grid)
}

/// A duration like "1", "2.5s", or "0.5 s", in seconds.
pub fn parse_seconds(s: &str) -> Result<f64> {
    let trimmed = s.trim();
    let stripped = trimmed
        .strip_suffix("sec")
        .or_else(|| trimmed.strip_suffix('s'))
        .unwrap_or(trimmed);
    parse_number(stripped)
}

/// Generator spec "kind:magnitude[:axis-or-plane]", e.g.
/// "time-translation:0.5", "pulling:0.6:y", "rotation:0.7:xy".
pub fn parse_generator_spec(s: &str) -> Result<Generator> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() < 2 || parts.len() > 3 {
        return Err(Error::Domain(format!(
            "generator spec is kind:magnitude[:axis], got `{s}`"
        )));
    }
    let magnitude = parse_number(parts[1])?;
    let axis = if parts.len() == 3 { parts[2] } else { "x" };
    match parts[0] {
        "time-translation" => Ok(Generator::TimeTranslation { t: magnitude }),
        "spatial-translation" => Ok(Generator::SpatialTranslation {
            s: magnitude,
            axis: parse_axis(axis)?,
        }),
        "pulling" => Ok(Generator::Pulling {
            v: magnitude,
            axis: parse_axis(axis)?,
        }),
        "rotation" => {
            let plane = if parts.len() == 3 {
                parse_plane(parts[2])?
            } else {
                (Axis::X, Axis::Y)
            };
            Ok(Generator::Rotation {
                angle: magnitude,
                plane,
            })
        }
        other => Err(Error::Domain(format!("unknown generator kind `{other}`"))),
    }
}

#[derive(Debug, Deserialize)]
struct EventRecord {
    x: f64,
    y: f64,
    z: f64,
    t: f64,
}

#[derive(Debug, Deserialize)]
struct ElementRecord {
    matrix: [[f64; 5]; 5],
}

/// Read a group element from its JSON wire form and validate the group
/// invariants on the way in.
pub fn read_group_element(path: &Path) -> std::result::Result<GroupElement, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let record: ElementRecord =
        serde_json::from_str(&text).map_err(|e| format!("cannot parse {}: {e}", path.display()))?;
    GroupElement::from_matrix(record.matrix).map_err(|e| e.to_string())
}

/// Read a JSON array of event records.
pub fn read_events(path: &Path) -> std::result::Result<Vec<Event>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let records: Vec<EventRecord> =
        serde_json::from_str(&text).map_err(|e| format!("cannot parse {}: {e}", path.display()))?;
    let events: Vec<Event> = records
        .iter()
        .map(|r| Event::new(r.x, r.y, r.z, r.t))
        .collect();
    if let Some(bad) = events.iter().position(|e| !e.is_finite()) {
        return Err(format!("event {bad} has non-finite coordinates"));
    }
    Ok(events)
}
