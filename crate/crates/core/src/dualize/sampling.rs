use super::tolerance::{F_TOL_REL, SINGULAR_TOL};
use super::{DualError, ImplicitCurve};

/// Axis-aligned rectangle `[xmin, xmax] x [ymin, ymax]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl Window {
    pub fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Result<Self, DualError> {
        let finite = [xmin, xmax, ymin, ymax].iter().all(|v| v.is_finite());
        if !finite || xmin >= xmax || ymin >= ymax {
            return Err(DualError::InvalidWindow);
        }
        Ok(Window {
            xmin,
            xmax,
            ymin,
            ymax,
        })
    }

    /// `[-r, r]^2`.
    pub fn square(r: f64) -> Result<Self, DualError> {
        Window::new(-r, r, -r, r)
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        (self.xmin..=self.xmax).contains(&x) && (self.ymin..=self.ymax).contains(&y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveSample {
    pub point: [f64; 2],
    pub gradient: [f64; 2],
}

/// Points of a curve with their gradients. Every stored gradient has norm at
/// least [`SINGULAR_TOL`].
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CurveSamples {
    pub samples: Vec<CurveSample>,
}

impl CurveSamples {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &CurveSample> + '_ {
        self.samples.iter()
    }
}

const MIN_LINES: usize = 16;
const MAX_LINES: usize = 1024;
const BISECTION_LIMIT: usize = 200;
const NEWTON_STEPS: usize = 5;
const MAX_HALVINGS: usize = 30;

fn on_curve_tol(scale: f64) -> f64 {
    F_TOL_REL * (1.0 + scale)
}

/// Bisects `h` on `[lo, hi]` given `h(lo)` and `h(hi)` of opposite signs.
fn bisect(h: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, mut h_lo: f64) -> f64 {
    let mut best = (lo, h_lo.abs());
    for _ in 0..BISECTION_LIMIT {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let h_mid = h(mid);
        if h_mid.abs() < best.1 {
            best = (mid, h_mid.abs());
        }
        if h_mid == 0.0 {
            break;
        }
        if (h_mid < 0.0) == (h_lo < 0.0) {
            lo = mid;
            h_lo = h_mid;
        } else {
            hi = mid;
        }
    }
    best.0
}

/// Damped Newton steps along the gradient; accepts the point once it meets
/// the on-curve tolerance and is not singular.
fn refine(c: &ImplicitCurve, window: &Window, start: [f64; 2]) -> Option<CurveSample> {
    let mut p = start;
    let (mut v, mut scale) = c.value_and_scale(p[0], p[1]);
    for _ in 0..NEWTON_STEPS {
        if v.abs() <= on_curve_tol(scale) {
            break;
        }
        let g = c.gradient_at(p[0], p[1]);
        let n2 = g[0] * g[0] + g[1] * g[1];
        if n2 < SINGULAR_TOL * SINGULAR_TOL {
            break;
        }
        let mut step = 1.0;
        let mut improved = false;
        for _ in 0..MAX_HALVINGS {
            let q = [p[0] - step * v * g[0] / n2, p[1] - step * v * g[1] / n2];
            let (vq, sq) = c.value_and_scale(q[0], q[1]);
            if vq.abs() < v.abs() {
                p = q;
                v = vq;
                scale = sq;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if !improved {
            break;
        }
    }
    let gradient = c.gradient_at(p[0], p[1]);
    let norm = gradient[0].hypot(gradient[1]);
    (v.abs() <= on_curve_tol(scale) && norm >= SINGULAR_TOL && window.contains(p[0], p[1]))
        .then_some(CurveSample { point: p, gradient })
}

/// Roots of `h` on the grid `lo + (hi - lo) * j / n`, as parameters.
fn roots_on_line(h: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let at = |j: usize| lo + (hi - lo) * j as f64 / n as f64;
    let values: Vec<f64> = (0..=n).map(|j| h(at(j))).collect();
    let mut roots = Vec::new();
    for j in 0..=n {
        if values[j] == 0.0 {
            roots.push(at(j));
        } else if j < n && values[j + 1] != 0.0 && (values[j] < 0.0) != (values[j + 1] < 0.0) {
            roots.push(bisect(&h, at(j), at(j + 1), values[j]));
        }
    }
    roots
}

fn scan(c: &ImplicitCurve, w: &Window, lines: usize) -> Vec<CurveSample> {
    let mut out = Vec::new();
    for i in 0..=lines {
        let y = w.ymin + (w.ymax - w.ymin) * i as f64 / lines as f64;
        for x in roots_on_line(|t| c.value(t, y), w.xmin, w.xmax, lines) {
            out.extend(refine(c, w, [x, y]));
        }
    }
    for i in 0..=lines {
        let x = w.xmin + (w.xmax - w.xmin) * i as f64 / lines as f64;
        for y in roots_on_line(|t| c.value(x, t), w.ymin, w.ymax, lines) {
            out.extend(refine(c, w, [x, y]));
        }
    }
    out
}

/// Finds up to `target_count` nonsingular points of `c` inside `window`.
///
/// Horizontal and vertical grid lines are scanned for sign changes, refined
/// by bisection and a few Newton steps. The grid is doubled until there are
/// at least four candidates per requested sample (or the grid cap is hit);
/// the returned points are an even stride through the candidates. Output is
/// deterministic for a given curve, window and count.
pub fn sample_curve(c: &ImplicitCurve, window: &Window, target_count: usize) -> CurveSamples {
    if target_count == 0 {
        return CurveSamples::default();
    }
    let mut lines = MIN_LINES.max(target_count);
    let candidates = loop {
        let found = scan(c, window, lines);
        if found.len() >= 4 * target_count || lines >= MAX_LINES {
            break found;
        }
        lines *= 2;
    };
    let samples = if candidates.len() <= target_count {
        candidates
    } else {
        (0..target_count)
            .map(|i| candidates[i * candidates.len() / target_count])
            .collect()
    };
    CurveSamples { samples }
}
