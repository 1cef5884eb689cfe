use super::tolerance::DENOM_TOL;
use super::{DualError, ImplicitCurve};

/// A point of the parallel-coordinates plane (or of the source plane).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    pub fn new(x: f64, y: f64) -> Self {
        PlanePoint { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Image of the tangent line at `p` with unit axis spacing:
/// `x = f2 / (f1 + f2)`, `y = (x1 f1 + x2 f2) / (f1 + f2)`.
pub fn point_image_on_dual(c: &ImplicitCurve, p: (f64, f64)) -> Result<PlanePoint, DualError> {
    let (x1, x2) = p;
    if !c.contains(x1, x2) {
        return Err(DualError::NotOnCurve);
    }
    let [f1, f2] = c.gradient_at(x1, x2);
    let denom = f1 + f2;
    if denom.abs() < DENOM_TOL {
        return Err(DualError::IdealPoint);
    }
    Ok(PlanePoint::new(f2 / denom, (x1 * f1 + x2 * f2) / denom))
}

/// Point where the images of all points of `x2 = m x1 + b` meet, for axes
/// `d` apart.
pub fn line_dual_point(m: f64, b: f64, d: f64) -> Result<PlanePoint, DualError> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(DualError::InvalidSpacing);
    }
    let denom = 1.0 - m;
    if denom.abs() < DENOM_TOL {
        return Err(DualError::IdealPoint);
    }
    Ok(PlanePoint::new(d / denom, b / denom))
}

/// Polygonal line of a point `(c_1, ..., c_n)`: vertex `i` sits on axis `i`
/// at abscissa `(i - 1) d`.
pub fn point_to_polyline(coords: &[f64], d: f64) -> Result<Vec<PlanePoint>, DualError> {
    if coords.len() < 2 {
        return Err(DualError::TooFewCoordinates);
    }
    if !(d > 0.0 && d.is_finite()) {
        return Err(DualError::InvalidSpacing);
    }
    Ok(coords
        .iter()
        .enumerate()
        .map(|(i, &c)| PlanePoint::new(i as f64 * d, c))
        .collect())
}
