//! Command-line front end.
//!
//! Exit codes: 0 ok, 1 usage, 2 invalid quad, 3 center off the locus or
//! chord, 4 parallelogram, 5 numerical failure, 6 I/O.

mod json;
mod svg;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::area_opt::max_area;
use crate::error::Error;
use crate::geometry::{classify_conic, validate_quad, ConicKind, ConvexQuad, Point, QuadKind};
use crate::inscribed::{
    chord_x, inscribe_at_center, locus, normalize, tangent_conic_at_center, InscribedResult,
};
use crate::pencil::{member_with_center, pencil_from_lines};
use crate::tolerance::Tolerances;

pub use json::{ellipse_output, round_number};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_QUAD: i32 = 2;
pub const EXIT_OFF_LOCUS: i32 = 3;
pub const EXIT_PARALLELOGRAM: i32 = 4;
pub const EXIT_NUMERICAL: i32 = 5;
pub const EXIT_IO: i32 = 6;

/// Pass thresholds for `verify`.
const VERIFY_RESIDUAL: f64 = 1e-8;
const VERIFY_CENTER: f64 = 1e-9;
const VERIFY_DISTANCE: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(
    name = "inconic",
    version,
    about = "Inscribed ellipses of convex quadrilaterals"
)]
struct Cli {
    /// Vertices as "x0,y0 x1,y1 x2,y2 x3,y3"
    #[arg(long, global = true, allow_hyphen_values = true)]
    vertices: Option<String>,
    /// JSON file of the form {"vertices": [[x, y], ...]}
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Tolerance overrides, e.g. "tan=1e-9,class=1e-11"
    #[arg(long, global = true)]
    tol: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Quad kind, locus segment, chord and normal form
    Inspect,
    /// The inscribed ellipse with a given center
    Inscribe(Selection),
    /// The inscribed ellipse of maximal area
    Maxarea,
    /// Residuals of the construction at a center
    Verify {
        #[command(flatten)]
        selection: Selection,
        /// Accept centers on the chord outside the locus (tangent hyperbolas)
        #[arg(long)]
        allow_hyperbola: bool,
    },
    /// N ellipses at u = i/(N+1)
    Sample {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Draw the quad and ellipses as SVG
    Render(RenderArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Selection {
    /// Center "h,k"
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    center: Option<Point>,
    /// Position on the locus segment, M1 at 0 and M2 at 1
    #[arg(long, allow_hyphen_values = true)]
    u: Option<f64>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("what").multiple(false)))]
struct RenderArgs {
    #[arg(long)]
    out: PathBuf,
    #[arg(long, group = "what", value_parser = parse_point, allow_hyphen_values = true)]
    center: Option<Point>,
    #[arg(long, group = "what", allow_hyphen_values = true)]
    u: Option<f64>,
    /// Default when nothing else is selected
    #[arg(long, group = "what")]
    maxarea: bool,
    #[arg(long, group = "what", value_parser = clap::value_parser!(u32).range(1..))]
    n: Option<u32>,
}

fn parse_point(s: &str) -> std::result::Result<Point, String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected x,y, got `{s}`"))?;
    let x: f64 = x
        .trim()
        .parse()
        .map_err(|e| format!("bad x in `{s}`: {e}"))?;
    let y: f64 = y
        .trim()
        .parse()
        .map_err(|e| format!("bad y in `{s}`: {e}"))?;
    if !(x.is_finite() && y.is_finite()) {
        return Err(format!("non-finite coordinate in `{s}`"));
    }
    Ok(Point::new(x, y))
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{0}")]
    Io(String),
    #[error("verification failed: {0}")]
    Verify(String),
    #[error(transparent)]
    Geometry(#[from] Error),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Input(_) => EXIT_INVALID_QUAD,
            Failure::Io(_) => EXIT_IO,
            Failure::Verify(_) => EXIT_NUMERICAL,
            Failure::Geometry(e) => error_code(e),
        }
    }
}

/// Exit code for a library error.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::NotConvex(_) | Error::DegenerateQuad(_) => EXIT_INVALID_QUAD,
        Error::CenterOffLocus(_) | Error::CenterOffChord(_) | Error::DegenerateAtMidpoint => {
            EXIT_OFF_LOCUS
        }
        Error::ParallelogramUnsupported => EXIT_PARALLELOGRAM,
        _ => EXIT_NUMERICAL,
    }
}

/// Runs the tool and returns the exit code. `env_tol` is the value of
/// `INCONIC_TOL`, if set.
pub fn run<I, T>(args: I, env_tol: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(&cli, env_tol, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "inconic: {f}");
            f.code()
        }
    }
}

fn tolerances(cli: &Cli, env_tol: Option<&str>) -> Result<Tolerances, Failure> {
    let mut tol = Tolerances::default();
    if let Some(overrides) = env_tol.filter(|s| !s.trim().is_empty()) {
        tol = tol
            .with_overrides(overrides)
            .map_err(|e| Failure::Usage(format!("{}: {e}", Tolerances::ENV_VAR)))?;
    }
    if let Some(overrides) = &cli.tol {
        tol = tol
            .with_overrides(overrides)
            .map_err(|e| Failure::Usage(format!("--tol: {e}")))?;
    }
    Ok(tol)
}

fn parse_vertex_list(s: &str) -> Result<[Point; 4], Failure> {
    let pts = s
        .split_whitespace()
        .map(parse_point)
        .collect::<Result<Vec<_>, _>>()
        .map_err(Failure::Input)?;
    pts.try_into()
        .map_err(|v: Vec<Point>| Failure::Input(format!("expected 4 vertices, got {}", v.len())))
}

fn parse_vertex_json(text: &str) -> Result<[Point; 4], Failure> {
    let value: Value = serde_json::from_str(text).map_err(|e| Failure::Input(e.to_string()))?;
    let list = value
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| Failure::Input("missing \"vertices\" array".into()))?;
    let pts = list
        .iter()
        .map(|v| {
            match v
                .as_array()
                .map(|a| a.iter().map(Value::as_f64).collect::<Vec<_>>())
            {
                Some(c) if c.len() == 2 && c.iter().all(Option::is_some) => {
                    Ok(Point::new(c[0].unwrap(), c[1].unwrap()))
                }
                _ => Err(Failure::Input(format!("bad vertex {v}"))),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    pts.try_into()
        .map_err(|v: Vec<Point>| Failure::Input(format!("expected 4 vertices, got {}", v.len())))
}

fn read_quad(cli: &Cli, tol: &Tolerances) -> Result<ConvexQuad, Failure> {
    let vertices = match (&cli.vertices, &cli.input) {
        (Some(v), None) => parse_vertex_list(v)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            parse_vertex_json(&text)?
        }
        _ => {
            return Err(Failure::Usage(
                "exactly one of --vertices or --input is required".into(),
            ))
        }
    };
    Ok(validate_quad(vertices, tol)?)
}

fn dispatch(cli: &Cli, env_tol: Option<&str>, out: &mut dyn Write) -> Result<(), Failure> {
    let tol = tolerances(cli, env_tol)?;
    let q = read_quad(cli, &tol)?;
    let value = match &cli.command {
        Command::Inspect => inspect(&q, &tol),
        Command::Inscribe(sel) => {
            let res = inscribe_selection(&q, sel, &tol)?;
            json::inscribed_output(&res)
        }
        Command::Maxarea => {
            let best = max_area(&q, &tol)?;
            json::max_area_output(&best, &inscribe_at_center(&q, best.center, &tol)?)
        }
        Command::Verify {
            selection,
            allow_hyperbola,
        } => verify(&q, selection, *allow_hyperbola, &tol)?,
        Command::Sample { n } => sample(&q, *n, &tol)?,
        Command::Render(args) => return render(&q, args, &tol, out),
    };
    write_json(out, &value)
}

fn write_json(out: &mut dyn Write, value: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Io(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| Failure::Io(e.to_string()))
}

fn selection_center(q: &ConvexQuad, sel: &Selection) -> Result<Point, Failure> {
    if q.kind() == QuadKind::Parallelogram {
        return Err(Error::ParallelogramUnsupported.into());
    }
    match (sel.center, sel.u) {
        (Some(c), _) => Ok(c),
        (None, Some(u)) => Ok(locus(q).point_at(u)),
        (None, None) => Err(Failure::Usage("one of --center or --u is required".into())),
    }
}

fn inscribe_selection(
    q: &ConvexQuad,
    sel: &Selection,
    tol: &Tolerances,
) -> Result<InscribedResult, Failure> {
    let center = selection_center(q, sel)?;
    Ok(inscribe_at_center(q, center, tol)?)
}

fn inspect(q: &ConvexQuad, tol: &Tolerances) -> Value {
    let seg = locus(q);
    let normal_form = normalize(q, tol)
        .ok()
        .map(|nf| json!({ "s": json::num(nf.s), "t": json::num(nf.t) }));
    let chord = chord_x(q).ok().map(|c| {
        json!({
            "start": json::point(c.p_start),
            "end": json::point(c.p_end),
            "u_range": [json::num(c.u_start), json::num(c.u_end)],
        })
    });
    json!({
        "kind": q.kind().as_str(),
        "vertices": q.vertices().iter().map(|p| json::point(*p)).collect::<Vec<_>>(),
        "M1": json::point(seg.m1),
        "M2": json::point(seg.m2),
        "locus_param_range": if seg.degenerate { Value::Null } else { json!([0.0, 1.0]) },
        "chord_x": chord,
        "normal_form": normal_form,
    })
}

fn verify(
    q: &ConvexQuad,
    sel: &Selection,
    allow_hyperbola: bool,
    tol: &Tolerances,
) -> Result<Value, Failure> {
    let center = selection_center(q, sel)?;
    let scale = q.diameter().max(1.0);
    let lines = q.side_lines();
    let inscribed = inscribe_at_center(q, center, tol);
    let (conic, kind, marden_vs_pencil) = match inscribed {
        Ok(res) => {
            let distance = if res.weights_t.is_some() {
                let pencil = pencil_from_lines(lines, tol)?;
                let oracle = member_with_center(&pencil, center, tol)?;
                Some(res.conic.distance(&oracle))
            } else {
                None
            };
            (res.conic, classify_conic(&res.conic, tol), distance)
        }
        Err(Error::CenterOffLocus(_)) if allow_hyperbola => {
            let tc = tangent_conic_at_center(q, center, tol)?;
            (tc.conic, tc.kind, None)
        }
        Err(e) => return Err(e.into()),
    };
    let residuals = lines.map(|l| crate::geometry::tangency_residual(&conic, &l));
    let center_error = conic
        .center()
        .map(|c| c.distance(center))
        .unwrap_or(f64::INFINITY);
    let value = json!({
        "classification": kind.as_str(),
        "tangency_residuals": residuals.iter().map(|r| json::num(*r)).collect::<Vec<_>>(),
        "center_error": json::num(center_error),
        "marden_vs_pencil_distance": marden_vs_pencil.map(json::num),
    });
    let mut failed = Vec::new();
    if let Some(r) = residuals.iter().copied().find(|r| !(*r < VERIFY_RESIDUAL)) {
        failed.push(format!("tangency_residual {r:e}"));
    }
    if !(center_error < VERIFY_CENTER * scale) {
        failed.push(format!("center_error {center_error:e}"));
    }
    if let Some(d) = marden_vs_pencil.filter(|d| !(*d < VERIFY_DISTANCE)) {
        failed.push(format!("marden_vs_pencil_distance {d:e}"));
    }
    if !matches!(kind, ConicKind::RealEllipse | ConicKind::Hyperbola) {
        failed.push(format!("classification {kind}"));
    }
    if failed.is_empty() {
        Ok(value)
    } else {
        Err(Failure::Verify(format!(
            "{}; report: {value}",
            failed.join(", ")
        )))
    }
}

fn sample_results(
    q: &ConvexQuad,
    n: u32,
    tol: &Tolerances,
) -> Result<Vec<InscribedResult>, Failure> {
    if q.kind() == QuadKind::Parallelogram {
        return Err(Error::ParallelogramUnsupported.into());
    }
    let seg = locus(q);
    (1..=n)
        .map(|i| {
            let u = f64::from(i) / f64::from(n + 1);
            inscribe_at_center(q, seg.point_at(u), tol).map_err(Failure::from)
        })
        .collect()
}

fn sample(q: &ConvexQuad, n: u32, tol: &Tolerances) -> Result<Value, Failure> {
    let results = sample_results(q, n, tol)?;
    Ok(Value::Array(
        results.iter().map(json::inscribed_output).collect(),
    ))
}

fn render(
    q: &ConvexQuad,
    args: &RenderArgs,
    tol: &Tolerances,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let results = if let Some(n) = args.n {
        sample_results(q, n, tol)?
    } else if args.center.is_some() || args.u.is_some() {
        let sel = Selection {
            center: args.center,
            u: args.u,
        };
        vec![inscribe_selection(q, &sel, tol)?]
    } else {
        let best = max_area(q, tol)?;
        vec![inscribe_at_center(q, best.center, tol)?]
    };
    let doc = svg::render(q, &results);
    std::fs::write(&args.out, doc)
        .map_err(|e| Failure::Io(format!("{}: {e}", args.out.display())))?;
    writeln!(out, "{}", args.out.display()).map_err(|e| Failure::Io(e.to_string()))
}
