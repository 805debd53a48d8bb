//! projrel: transform events through the kinematic group hierarchy, tabulate
//! the electromagnetic/gravitational scale maps, and report the derived
//! cosmological quantities.
//!
//! Exit codes: 0 success, 2 domain or validation error, 3 projective
//! infinity, 4 convergence failure.

mod inputs;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use projrel_core::cosmology::{self, SECONDS_PER_YEAR};
use projrel_core::groups::{
    self, apply, compose, fantappie_generator, galileo_apply, limit_deviation, poincare_apply,
    GalileoTransform, Generator, GroupElement, PoincareElement,
};
use projrel_core::metric::{space_distance, time_distance};
use projrel_core::scales;
use projrel_core::{Error, Event, GaugeMode, MetricGauge, ModelParameters, NormalizedEvent};

use inputs::{parse_axis, parse_event, parse_f64_list, parse_plane, parse_range, parse_seconds};
use render::{fmt_num, json_num, Output, Table};

#[derive(Debug, Parser)]
#[command(
    name = "projrel",
    version,
    about = "Kinematic group transforms, Cayley-Klein scale maps, and cosmological tables"
)]
struct Cli {
    /// Universe radius R in meters.
    #[arg(long = "R", global = true, default_value_t = 1.3e26)]
    radius: f64,

    /// Light speed c in meters per second.
    #[arg(long = "c", global = true, default_value_t = 2.997_924_58e8)]
    light_speed: f64,

    /// Metric gauge for the time-axis maps.
    #[arg(long, global = true, value_enum, default_value_t = GaugeArg::Consistent)]
    gauge: GaugeArg,

    /// Output format for tabular commands.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    /// Significant digits in numeric output (6..=17).
    #[arg(long, global = true, default_value_t = 12)]
    precision: usize,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GaugeArg {
    Consistent,
    #[value(name = "paper-literal")]
    PaperLiteral,
}

impl From<GaugeArg> for GaugeMode {
    fn from(g: GaugeArg) -> Self {
        match g {
            GaugeArg::Consistent => GaugeMode::Consistent,
            GaugeArg::PaperLiteral => GaugeMode::PaperLiteral,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Transform events by one group element.
    Transform(TransformArgs),
    /// Compose final-group generators into one element and emit its matrix.
    Compose(ComposeArgs),
    /// Cayley-Klein distance between two points of the (x, t) model.
    Distance(DistanceArgs),
    /// Tabulate the electromagnetic -> gravitational scale map on a grid.
    Scales(ScalesArgs),
    /// Hubble parameter and recession velocities at an epoch.
    Hubble(HubbleArgs),
    /// Clock drift at given epochs, or the epoch reaching a target drift.
    Drift(DriftArgs),
    /// Contraction-limit deviations of a generator over a list of radii.
    Limits(LimitsArgs),
}

#[derive(Debug, Args)]
struct TransformArgs {
    /// Group layer: galileo, poincare, or fantappie.
    #[arg(long)]
    group: String,

    /// Transformation kind within the group (e.g. time-translation,
    /// spatial-translation, pulling, rotation, inertial, boost, translation).
    #[arg(long)]
    kind: String,

    /// Time-translation parameter T in seconds.
    #[arg(long = "T")]
    t_param: Option<f64>,

    /// Spatial-translation parameter S in meters.
    #[arg(long = "S")]
    s_param: Option<f64>,

    /// Pulling velocity V in meters per second.
    #[arg(long = "V")]
    v_param: Option<f64>,

    /// Rotation angle in radians.
    #[arg(long)]
    angle: Option<f64>,

    /// Galileo time-translation parameter t0 in seconds.
    #[arg(long)]
    t0: Option<f64>,

    /// Boost velocity parameter beta = V/c.
    #[arg(long)]
    beta: Option<f64>,

    /// Inertial velocity "vx,vy,vz" in meters per second.
    #[arg(long = "v")]
    velocity: Option<String>,

    /// Spatial shift "ax,ay,az" in meters.
    #[arg(long)]
    shift: Option<String>,

    /// Time shift in seconds (poincare translation).
    #[arg(long)]
    dt: Option<f64>,

    /// Axis for axis-bound transformations.
    #[arg(long, default_value = "x")]
    axis: String,

    /// Rotation plane: xy, yz, or zx.
    #[arg(long, default_value = "xy")]
    plane: String,

    /// Inline event "x,y,z,t" (repeatable).
    #[arg(long = "event")]
    events: Vec<String>,

    /// JSON file with an array of {"x":..,"y":..,"z":..,"t":..} records.
    #[arg(long = "events")]
    events_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ComposeArgs {
    /// Generator spec "kind:magnitude[:axis-or-plane]" (repeatable; the
    /// first listed acts first on events).
    #[arg(long = "gen")]
    gens: Vec<String>,

    /// JSON file with {"matrix": [[..5 numbers..] x5]} (repeatable; these
    /// compose before any --gen).
    #[arg(long = "element")]
    elements: Vec<PathBuf>,
}

#[derive(Debug, Args)]
struct DistanceArgs {
    /// Distance family: time (constant-x chord) or space (constant-t line).
    #[arg(long)]
    axis: String,

    /// First point "x,t".
    #[arg(long)]
    a: String,

    /// Second point "x,t".
    #[arg(long)]
    b: String,
}

#[derive(Debug, Args)]
struct ScalesArgs {
    /// Which map to tabulate: time or space.
    #[arg(long)]
    axis: String,

    /// Grid "start:stop:step" in seconds (time) or meters (space).
    #[arg(long)]
    range: String,
}

#[derive(Debug, Args)]
struct HubbleArgs {
    /// Epoch t_E in seconds.
    #[arg(long = "tE", default_value_t = 0.0)]
    t_e: f64,

    /// Distance x_E in meters (repeatable).
    #[arg(long = "x")]
    xs: Vec<f64>,
}

#[derive(Debug, Args)]
struct DriftArgs {
    /// Target drift, e.g. "1" or "1s" (seconds); solves for the epoch.
    #[arg(long, conflicts_with_all = ["t_e", "range"])]
    target: Option<String>,

    /// Epoch t_E in seconds (repeatable).
    #[arg(long = "tE")]
    t_e: Vec<f64>,

    /// Epoch grid "start:stop:step" in seconds.
    #[arg(long)]
    range: Option<String>,
}

#[derive(Debug, Args)]
struct LimitsArgs {
    /// Generator kind: time-translation, spatial-translation, pulling, rotation.
    #[arg(long)]
    kind: String,

    /// Time-translation parameter T in seconds.
    #[arg(long = "T")]
    t_param: Option<f64>,

    /// Spatial-translation parameter S in meters.
    #[arg(long = "S")]
    s_param: Option<f64>,

    /// Pulling velocity V in meters per second.
    #[arg(long = "V")]
    v_param: Option<f64>,

    /// Rotation angle in radians.
    #[arg(long)]
    angle: Option<f64>,

    /// Axis for axis-bound generators.
    #[arg(long, default_value = "x")]
    axis: String,

    /// Rotation plane: xy, yz, or zx.
    #[arg(long, default_value = "xy")]
    plane: String,

    /// Strictly increasing radii "r1,r2,..." in meters.
    #[arg(long = "R-list")]
    r_list: String,

    /// Probe event "xi,eta,zeta,tau" in dimensionless coordinates.
    #[arg(long)]
    event: String,
}

/// A failure carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn validation(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ProjectiveInfinity(_) => 3,
            Error::ConvergenceFailure(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<Output, Failure>;
type EventMap = Box<dyn Fn(&Event) -> projrel_core::Result<Event>>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            if let Err(e) = output.write(cli.out.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    if !(6..=17).contains(&cli.precision) {
        return Err(Failure::validation(format!(
            "precision must lie in 6..=17, got {}",
            cli.precision
        )));
    }
    let params = ModelParameters::new(cli.radius, cli.light_speed)?;
    let gauge = MetricGauge::new(cli.gauge.into(), &params);
    match &cli.cmd {
        Cmd::Transform(args) => cmd_transform(cli, args, &params),
        Cmd::Compose(args) => cmd_compose(cli, args, &params),
        Cmd::Distance(args) => cmd_distance(cli, args, &gauge, &params),
        Cmd::Scales(args) => cmd_scales(cli, args, &gauge, &params),
        Cmd::Hubble(args) => cmd_hubble(cli, args, &params),
        Cmd::Drift(args) => cmd_drift(cli, args, &gauge, &params),
        Cmd::Limits(args) => cmd_limits(cli, args),
    }
}

fn parse_generator_flags(
    kind: &str,
    t_param: Option<f64>,
    s_param: Option<f64>,
    v_param: Option<f64>,
    angle: Option<f64>,
    axis: &str,
    plane: &str,
) -> std::result::Result<Generator, Failure> {
    let axis = parse_axis(axis).map_err(Failure::from)?;
    match kind {
        "time-translation" => {
            let t = t_param.ok_or_else(|| Failure::validation("time-translation needs --T"))?;
            Ok(Generator::TimeTranslation { t })
        }
        "spatial-translation" => {
            let s = s_param.ok_or_else(|| Failure::validation("spatial-translation needs --S"))?;
            Ok(Generator::SpatialTranslation { s, axis })
        }
        "pulling" => {
            let v = v_param.ok_or_else(|| Failure::validation("pulling needs --V"))?;
            Ok(Generator::Pulling { v, axis })
        }
        "rotation" => {
            let angle = angle.ok_or_else(|| Failure::validation("rotation needs --angle"))?;
            let plane = parse_plane(plane).map_err(Failure::from)?;
            Ok(Generator::Rotation { angle, plane })
        }
        other => Err(Failure::validation(format!(
            "unknown fantappie kind `{other}`"
        ))),
    }
}

fn collect_events(args: &TransformArgs) -> std::result::Result<Vec<Event>, Failure> {
    let mut events = Vec::new();
    if let Some(path) = &args.events_file {
        events.extend(inputs::read_events(path).map_err(Failure::validation)?);
    }
    for spec in &args.events {
        events.push(parse_event(spec).map_err(Failure::from)?);
    }
    if events.is_empty() {
        return Err(Failure::validation(
            "no events given; use --event or --events",
        ));
    }
    Ok(events)
}

fn cmd_transform(cli: &Cli, args: &TransformArgs, params: &ModelParameters) -> CmdResult {
    let events = collect_events(args)?;
    let map: EventMap = match args.group.as_str() {
        "galileo" => {
            let g = match args.kind.as_str() {
                "rotation" => {
                    let angle = args
                        .angle
                        .ok_or_else(|| Failure::validation("rotation needs --angle"))?;
                    let plane = parse_plane(&args.plane).map_err(Failure::from)?;
                    GalileoTransform::Rotation(groups::axis_rotation(plane, angle)?)
                }
                "inertial" => {
                    let spec = args
                        .velocity
                        .as_deref()
                        .ok_or_else(|| Failure::validation("inertial needs --v vx,vy,vz"))?;
                    GalileoTransform::Inertial(inputs::parse_vec3(spec).map_err(Failure::from)?)
                }
                "spatial-translation" => {
                    let spec = args
                        .shift
                        .as_deref()
                        .ok_or_else(|| Failure::validation("spatial-translation needs --shift"))?;
                    GalileoTransform::SpatialTranslation(
                        inputs::parse_vec3(spec).map_err(Failure::from)?,
                    )
                }
                "time-translation" => {
                    let t0 = args
                        .t0
                        .ok_or_else(|| Failure::validation("time-translation needs --t0"))?;
                    GalileoTransform::TimeTranslation(t0)
                }
                other => {
                    return Err(Failure::validation(format!(
                        "unknown galileo kind `{other}`"
                    )))
                }
            };
            Box::new(move |e| galileo_apply(&g, e))
        }
        "poincare" => {
            let c = params.c();
            let g = match args.kind.as_str() {
                "boost" => {
                    let beta = args
                        .beta
                        .ok_or_else(|| Failure::validation("boost needs --beta"))?;
                    PoincareElement::boost(beta, parse_axis(&args.axis).map_err(Failure::from)?)?
                }
                "rotation" => {
                    let angle = args
                        .angle
                        .ok_or_else(|| Failure::validation("rotation needs --angle"))?;
                    let plane = parse_plane(&args.plane).map_err(Failure::from)?;
                    PoincareElement::rotation(groups::axis_rotation(plane, angle)?)?
                }
                "translation" => {
                    let shift = match args.shift.as_deref() {
                        Some(spec) => inputs::parse_vec3(spec).map_err(Failure::from)?,
                        None => [0.0; 3],
                    };
                    PoincareElement::translation(shift, args.dt.unwrap_or(0.0))
                }
                other => {
                    return Err(Failure::validation(format!(
                        "unknown poincare kind `{other}`"
                    )))
                }
            };
            Box::new(move |e| poincare_apply(&g, e, c))
        }
        "fantappie" => {
            let gen = parse_generator_flags(
                &args.kind,
                args.t_param,
                args.s_param,
                args.v_param,
                args.angle,
                &args.axis,
                &args.plane,
            )?;
            let element = fantappie_generator(&gen, params)?;
            let p = *params;
            Box::new(move |e| apply(&element, e, &p))
        }
        other => return Err(Failure::validation(format!("unknown group `{other}`"))),
    };

    let mut transformed = Vec::with_capacity(events.len());
    for (i, e) in events.iter().enumerate() {
        match map(e) {
            Ok(out) => transformed.push(out),
            Err(err @ Error::ProjectiveInfinity(_)) => {
                eprintln!("projective infinity at event {i}");
                return Err(Failure::from(err));
            }
            Err(err) => return Err(Failure::from(err)),
        }
    }

    Ok(match cli.format {
        FormatArg::Csv => {
            let mut table = Table::new(&["x", "y", "z", "t"]);
            for e in &transformed {
                table.push(vec![
                    fmt_num(e.x, cli.precision),
                    fmt_num(e.y, cli.precision),
                    fmt_num(e.z, cli.precision),
                    fmt_num(e.t, cli.precision),
                ]);
            }
            Output::Csv(table)
        }
        FormatArg::Json => Output::Json(serde_json::Value::Array(
            transformed
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "x": json_num(e.x, cli.precision),
                        "y": json_num(e.y, cli.precision),
                        "z": json_num(e.z, cli.precision),
                        "t": json_num(e.t, cli.precision),
                    })
                })
                .collect(),
        )),
    })
}

fn cmd_compose(cli: &Cli, args: &ComposeArgs, params: &ModelParameters) -> CmdResult {
    if args.gens.is_empty() && args.elements.is_empty() {
        return Err(Failure::validation(
            "compose needs at least one --gen or --element",
        ));
    }
    let mut element = GroupElement::identity();
    for path in &args.elements {
        let next = inputs::read_group_element(path).map_err(Failure::validation)?;
        element = compose(&next, &element)?;
    }
    for spec in &args.gens {
        let gen = inputs::parse_generator_spec(spec).map_err(Failure::from)?;
        let next = fantappie_generator(&gen, params)?;
        element = compose(&next, &element)?;
    }
    let matrix = element.matrix();
    let rows: Vec<serde_json::Value> = matrix
        .iter()
        .map(|row| {
            serde_json::Value::Array(row.iter().map(|v| json_num(*v, cli.precision)).collect())
        })
        .collect();
    Ok(Output::Json(serde_json::json!({ "matrix": rows })))
}

fn cmd_distance(
    cli: &Cli,
    args: &DistanceArgs,
    gauge: &MetricGauge,
    params: &ModelParameters,
) -> CmdResult {
    let a = inputs::parse_plane_point(&args.a).map_err(Failure::from)?;
    let b = inputs::parse_plane_point(&args.b).map_err(Failure::from)?;
    let coordinate = match args.axis.as_str() {
        "time" => time_distance(&a, &b, gauge, params)?,
        "space" => space_distance(&a, &b, params)?,
        other => {
            return Err(Failure::validation(format!(
                "distance axis must be time or space, got `{other}`"
            )))
        }
    };
    Ok(match cli.format {
        FormatArg::Csv => {
            let mut table = Table::new(&["kind", "value"]);
            table.push(vec![
                coordinate.kind().to_string(),
                fmt_num(coordinate.value(), cli.precision),
            ]);
            Output::Csv(table)
        }
        FormatArg::Json => Output::Json(serde_json::json!({
            "kind": coordinate.kind(),
            "value": json_num(coordinate.value(), cli.precision),
        })),
    })
}

fn cmd_scales(
    cli: &Cli,
    args: &ScalesArgs,
    gauge: &MetricGauge,
    params: &ModelParameters,
) -> CmdResult {
    let grid = parse_range(&args.range).map_err(Failure::from)?;
    let (header, rows) = match args.axis.as_str() {
        "time" => {
            let mut rows = Vec::new();
            for t_e in &grid {
                let t_g = scales::em_time_to_grav(*t_e, gauge, params)?;
                rows.push((*t_e, t_g));
            }
            (["t_E", "t_G"], rows)
        }
        "space" => {
            let mut rows = Vec::new();
            for x_e in &grid {
                rows.push((*x_e, scales::em_space_to_grav(*x_e, params)));
            }
            (["x_E", "x_G"], rows)
        }
        other => {
            return Err(Failure::validation(format!(
                "scales axis must be time or space, got `{other}`"
            )))
        }
    };
    Ok(match cli.format {
        FormatArg::Csv => {
            let mut table = Table::new(&header);
            for (a, b) in &rows {
                table.push(vec![fmt_num(*a, cli.precision), fmt_num(*b, cli.precision)]);
            }
            Output::Csv(table)
        }
        FormatArg::Json => Output::Json(serde_json::Value::Array(
            rows.iter()
                .map(|(a, b)| {
                    serde_json::json!({
                        header[0]: json_num(*a, cli.precision),
                        header[1]: json_num(*b, cli.precision),
                    })
                })
                .collect(),
        )),
    })
}

fn cmd_hubble(cli: &Cli, args: &HubbleArgs, params: &ModelParameters) -> CmdResult {
    let state = cosmology::hubble(0.0, args.t_e, params)?;
    let velocities: Vec<(f64, f64)> = args.xs.iter().map(|x| (*x, state.h * x)).collect();
    Ok(match cli.format {
        FormatArg::Csv => {
            if velocities.is_empty() {
                let mut table = Table::new(&["H"]);
                table.push(vec![fmt_num(state.h, cli.precision)]);
                Output::Csv(table)
            } else {
                let mut table = Table::new(&["H", "x_E", "V_E"]);
                for (x, v) in &velocities {
                    table.push(vec![
                        fmt_num(state.h, cli.precision),
                        fmt_num(*x, cli.precision),
                        fmt_num(*v, cli.precision),
                    ]);
                }
                Output::Csv(table)
            }
        }
        FormatArg::Json => Output::Json(serde_json::json!({
            "H": json_num(state.h, cli.precision),
            "rows": velocities
                .iter()
                .map(|(x, v)| {
                    serde_json::json!({
                        "x_E": json_num(*x, cli.precision),
                        "V_E": json_num(*v, cli.precision),
                    })
                })
                .collect::<Vec<_>>(),
        })),
    })
}

fn cmd_drift(
    cli: &Cli,
    args: &DriftArgs,
    gauge: &MetricGauge,
    params: &ModelParameters,
) -> CmdResult {
    if let Some(spec) = &args.target {
        let target = parse_seconds(spec).map_err(Failure::from)?;
        let t_e = cosmology::drift_horizon(target, gauge, params)?;
        let years = t_e / SECONDS_PER_YEAR;
        return Ok(match cli.format {
            FormatArg::Csv => {
                let mut table = Table::new(&["target", "t_E_seconds", "t_E_years"]);
                table.push(vec![
                    fmt_num(target, cli.precision),
                    fmt_num(t_e, cli.precision),
                    fmt_num(years, cli.precision),
                ]);
                Output::Csv(table)
            }
            FormatArg::Json => Output::Json(serde_json::json!({
                "target": json_num(target, cli.precision),
                "t_E_seconds": json_num(t_e, cli.precision),
                "t_E_years": json_num(years, cli.precision),
            })),
        });
    }

    let mut epochs = args.t_e.clone();
    if let Some(range) = &args.range {
        epochs.extend(parse_range(range).map_err(Failure::from)?);
    }
    if epochs.is_empty() {
        return Err(Failure::validation(
            "drift needs --target, --tE, or --range",
        ));
    }
    let mut reports = Vec::with_capacity(epochs.len());
    for t_e in &epochs {
        reports.push(cosmology::clock_drift(*t_e, gauge, params)?);
    }
    Ok(match cli.format {
        FormatArg::Csv => {
            let mut table = Table::new(&["t_E", "t_G", "drift", "gauge"]);
            for r in &reports {
                table.push(vec![
                    fmt_num(r.t_e, cli.precision),
                    fmt_num(r.t_g, cli.precision),
                    fmt_num(r.drift, cli.precision),
                    r.gauge.to_string(),
                ]);
            }
            Output::Csv(table)
        }
        FormatArg::Json => Output::Json(serde_json::Value::Array(
            reports
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "t_E": json_num(r.t_e, cli.precision),
                        "t_G": json_num(r.t_g, cli.precision),
                        "drift": json_num(r.drift, cli.precision),
                        "gauge": r.gauge.to_string(),
                    })
                })
                .collect(),
        )),
    })
}

fn cmd_limits(cli: &Cli, args: &LimitsArgs) -> CmdResult {
    let gen = parse_generator_flags(
        &args.kind,
        args.t_param,
        args.s_param,
        args.v_param,
        args.angle,
        &args.axis,
        &args.plane,
    )?;
    let radii = parse_f64_list(&args.r_list).map_err(Failure::from)?;
    let probe = parse_event(&args.event).map_err(Failure::from)?;
    let probe = NormalizedEvent::new(probe.x, probe.y, probe.z, probe.t);
    let report = limit_deviation(&gen, &probe, &radii, cli.light_speed)?;
    Ok(Output::Json(serde_json::json!({
        "r_values": report
            .r_values
            .iter()
            .map(|r| json_num(*r, cli.precision))
            .collect::<Vec<_>>(),
        "deviations": report
            .deviations
            .iter()
            .map(|d| json_num(*d, cli.precision))
            .collect::<Vec<_>>(),
        "fitted_slope": report
            .fitted_slope
            .map(|s| json_num(s, cli.precision))
            .unwrap_or(serde_json::Value::Null),
    })))
}
