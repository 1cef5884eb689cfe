use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use pcdual::dualize::tolerance::ORACLE_THRESHOLD;
use pcdual::dualize::{
    conic_dual_matrix, dual_curve, sample_curve, verify_duality, ConicMatrix, DualCurve, DualError,
    DualizerRegistry, ImplicitCurve, Window,
};
use pcdual::elimination::DeterminantRegistry;
use pcdual::plot::{
    curve_pair_scenes, envelope_scene, render_panels, render_svg, trace_dual, PairOptions,
    PlotError, Shapes, Style, Viewport,
};
use pcdual::{parse, print, Polynomial, Rational, VarId};

pub mod exit {
    pub const RESIDUAL: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const DEGENERATE: u8 = 3;
    pub const DEGREE: u8 = 4;
    pub const NO_SAMPLES: u8 = 5;
    pub const OUTPUT: u8 = 6;
}

const PANEL_PX: u32 = 400;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
    /// Report lines still printed on stdout.
    pub stdout: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
            stdout: String::new(),
        }
    }
}

impl From<DualError> for Failure {
    fn from(e: DualError) -> Self {
        let code = match e {
            DualError::Degenerate => exit::DEGENERATE,
            DualError::DegreeTooLow(_) | DualError::ZeroCurve | DualError::NotConic => exit::DEGREE,
            DualError::NoVerifiableSamples => exit::NO_SAMPLES,
            _ => exit::USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<PlotError> for Failure {
    fn from(e: PlotError) -> Self {
        match e {
            PlotError::Dual(d) => d.into(),
            other => Failure::new(exit::USAGE, other.to_string()),
        }
    }
}

pub fn read_input(arg: &str) -> Result<String, Failure> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| Failure::new(exit::USAGE, format!("reading stdin: {e}")))?;
    Ok(s)
}

fn parse_poly(text: &str) -> Result<Polynomial, Failure> {
    parse(text.trim()).map_err(|e| Failure::new(exit::USAGE, format!("parse error: {e}")))
}

fn parse_curve(text: &str) -> Result<ImplicitCurve, Failure> {
    Ok(ImplicitCurve::new(parse_poly(text)?)?)
}

fn compute_dual(c: &ImplicitCurve, det: &str, method: &str) -> Result<DualCurve, Failure> {
    let dets = DeterminantRegistry::builtin();
    let det = dets.get(det).ok_or_else(|| {
        Failure::new(
            exit::USAGE,
            format!(
                "unknown determinant {det:?}; known: {}",
                dets.names().join(", ")
            ),
        )
    })?;
    let duals = DualizerRegistry::builtin();
    let dualizer = duals.get(method).ok_or_else(|| {
        Failure::new(
            exit::USAGE,
            format!(
                "unknown method {method:?}; known: {}",
                duals.names().join(", ")
            ),
        )
    })?;
    Ok(dualizer.dualize(c, det)?)
}

pub fn dual(text: &str, det: &str, method: &str) -> Result<String, Failure> {
    let c = parse_curve(text)?;
    let d = compute_dual(&c, det, method)?;
    Ok(format!(
        "dual: {}\nsource_degree: {}\ndual_degree: {}\npsi_power: {}\n",
        print(&d.g),
        d.source_degree,
        d.degree(),
        d.psi_power
    ))
}

/// Integers, `p/q` fractions and plain decimals, all exact.
fn parse_rational(s: &str) -> Result<Rational, Failure> {
    let bad = || Failure::new(exit::USAGE, format!("malformed number {s:?}"));
    let t = s.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let digits = |x: &str| !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit());
    let fraction = if let Some((int, frac)) = body.split_once('.') {
        if !(digits(int) || int.is_empty()) || !digits(frac) {
            return Err(bad());
        }
        format!("{int}{frac}/1{}", "0".repeat(frac.len()))
    } else {
        match body.split_once('/') {
            Some((n, d)) if digits(n) && digits(d) => body.to_string(),
            None if digits(body) => body.to_string(),
            _ => return Err(bad()),
        }
    };
    let value = Rational::from_str(&fraction).map_err(|_| bad())?;
    Ok(if neg { -value } else { value })
}

pub fn conic_dual(coefficients: &[String]) -> Result<String, Failure> {
    let a: Vec<Rational> = coefficients
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<_, _>>()?;
    let a: [Rational; 6] = a
        .try_into()
        .map_err(|_| Failure::new(exit::USAGE, "expected six coefficients"))?;
    let m = ConicMatrix::new(a)
        .map_err(|_| Failure::new(exit::USAGE, "A1, A2 and A4 are all zero: not a conic"))?;
    let dual = conic_dual_matrix(&m);
    let mut out = String::new();
    for (i, v) in dual.coefficients().iter().enumerate() {
        let _ = writeln!(out, "a{}: {}", i + 1, v);
    }
    let _ = writeln!(
        out,
        "dual: {}",
        print(&dual.polynomial_in(VarId::X, VarId::Y))
    );
    Ok(out)
}

pub fn verify(
    text: &str,
    det: &str,
    method: &str,
    window: &Window,
    samples: usize,
) -> Result<String, Failure> {
    let c = parse_curve(text)?;
    let d = compute_dual(&c, det, method)?;
    let pts = sample_curve(&c, window, samples);
    let r = verify_duality(&c, &d, &pts)?;
    let report = format!(
        "max_residual: {:e}\ntested: {}\nskipped: {}\n",
        r.max_residual, r.tested, r.skipped
    );
    if r.passes(ORACLE_THRESHOLD) {
        Ok(report)
    } else {
        Err(Failure {
            code: exit::RESIDUAL,
            message: format!("max_residual is not below {ORACLE_THRESHOLD:e}"),
            stdout: report,
        })
    }
}

fn viewport(window: &Window) -> Result<Viewport, Failure> {
    Ok(Viewport::from_window(window, PANEL_PX, PANEL_PX)?)
}

pub fn plot(
    text: &str,
    det: &str,
    method: &str,
    window: &Window,
    grid: usize,
    samples: usize,
    spacing: f64,
) -> Result<String, Failure> {
    let c = parse_curve(text)?;
    let d = compute_dual(&c, det, method)?;
    let opts = PairOptions {
        grid,
        samples,
        spacing,
    };
    Ok(render_panels(&curve_pair_scenes(
        &c,
        &d,
        &viewport(window)?,
        opts,
    )?))
}

pub fn plot_envelope(
    text: &str,
    window: &Window,
    grid: usize,
    samples: usize,
    spacing: f64,
) -> Result<String, Failure> {
    let c = parse_curve(text)?;
    let vp = viewport(window)?;
    let mut scene = envelope_scene(&c, samples, window, &vp, spacing)?;
    // the dual, when there is one, drawn over the lines it envelopes
    if let Ok(d) = dual_curve(&c) {
        scene.push(
            Style::Dual,
            Shapes::Segments(trace_dual(&d, &vp, grid, spacing)?),
        );
    }
    Ok(render_svg(&scene))
}

pub fn emit(svg: String, out: Option<&Path>) -> Result<String, Failure> {
    match out {
        None => Ok(svg),
        Some(path) => {
            std::fs::write(path, svg).map_err(|e| {
                Failure::new(
                    exit::OUTPUT,
                    format!("cannot write {}: {e}", path.display()),
                )
            })?;
            Ok(String::new())
        }
    }
}

pub fn eval(text: &str, bindings: &[String]) -> Result<String, Failure> {
    let p = parse_poly(text)?;
    let mut point = Vec::new();
    for b in bindings {
        let (name, value) = b
            .split_once('=')
            .ok_or_else(|| Failure::new(exit::USAGE, format!("expected var=value, got {b:?}")))?;
        let var = VarId::from_name(name.trim())
            .ok_or_else(|| Failure::new(exit::USAGE, format!("unknown variable {name:?}")))?;
        point.push((var, parse_rational(value)?));
    }
    let v = p
        .evaluate_exact(&point)
        .map_err(|e| Failure::new(exit::USAGE, e.to_string()))?;
    Ok(format!("value: {v}\n"))
}
