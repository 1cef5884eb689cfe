use crate::dualize::{
    point_image_on_dual, sample_curve, DualCurve, DualError, ImplicitCurve, PlanePoint, Window,
};
use crate::polyring::VarId;

use super::{trace_implicit, Axes, PlaneScene, PlotError, Segment, Shapes, Style, Viewport};

/// The line through `(0, x1)` and `(d, x2)` (the image of the point
/// `(x1, x2)`), clipped to the viewport.
pub fn dual_line_segment(x1: f64, x2: f64, d: f64, vp: &Viewport) -> Option<Segment> {
    let slope = (x2 - x1) / d;
    let at = |t: f64| x1 + slope * t;
    let (mut t0, mut t1) = (vp.xmin, vp.xmax);
    if slope != 0.0 {
        let (a, b) = ((vp.ymin - x1) / slope, (vp.ymax - x1) / slope);
        t0 = t0.max(a.min(b));
        t1 = t1.min(a.max(b));
    } else if !(vp.ymin..=vp.ymax).contains(&x1) {
        return None;
    }
    (t0 <= t1).then(|| Segment::new(PlanePoint::new(t0, at(t0)), PlanePoint::new(t1, at(t1))))
}

/// Over-plotting picture: the image line of each of `sample_count` points
/// sampled from `c` inside `window`, drawn in `vp` with axes `d` apart.
/// Lines that miss the viewport are left out.
pub fn envelope_scene(
    c: &ImplicitCurve,
    sample_count: usize,
    window: &Window,
    vp: &Viewport,
    d: f64,
) -> Result<PlaneScene, PlotError> {
    if sample_count < 2 {
        return Err(PlotError::TooFewSamples(sample_count));
    }
    if !(d > 0.0 && d.is_finite()) {
        return Err(DualError::InvalidSpacing.into());
    }
    let samples = sample_curve(c, window, sample_count);
    let lines = samples
        .iter()
        .filter_map(|s| dual_line_segment(s.point[0], s.point[1], d, vp))
        .collect();
    Ok(PlaneScene::new(*vp, Axes::Parallel { spacing: d })
        .with(Style::Envelope, Shapes::Segments(lines)))
}

/// Zero set of `g(x / d, y)`: the dual as drawn for axes `d` apart.
pub fn trace_dual(
    dual: &DualCurve,
    vp: &Viewport,
    grid: usize,
    d: f64,
) -> Result<Vec<Segment>, PlotError> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(DualError::InvalidSpacing.into());
    }
    let unit = Viewport {
        xmin: vp.xmin / d,
        xmax: vp.xmax / d,
        ..*vp
    };
    let scale = |p: PlanePoint| PlanePoint::new(p.x * d, p.y);
    Ok(trace_implicit(&dual.g, VarId::X, VarId::Y, &unit, grid)?
        .into_iter()
        .map(|s| Segment::new(scale(s.a), scale(s.b)))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairOptions {
    pub grid: usize,
    /// Sample points marked on both panels; zero for none.
    pub samples: usize,
    pub spacing: f64,
}

/// Source curve in `(x1, x2)` next to its dual in the parallel plane, both
/// traced over the same rectangle; see [`trace_dual`] for the spacing.
pub fn curve_pair_scenes(
    c: &ImplicitCurve,
    dual: &DualCurve,
    vp: &Viewport,
    opts: PairOptions,
) -> Result<[PlaneScene; 2], PlotError> {
    let d = opts.spacing;
    if !(d > 0.0 && d.is_finite()) {
        return Err(DualError::InvalidSpacing.into());
    }
    let mut source = PlaneScene::new(*vp, Axes::Cartesian);
    let traced = trace_implicit(c.polynomial(), VarId::X1, VarId::X2, vp, opts.grid)?;
    source.push(Style::Curve, Shapes::Segments(traced));

    let scale = |p: PlanePoint| PlanePoint::new(p.x * d, p.y);
    let mut image = PlaneScene::new(*vp, Axes::Parallel { spacing: d });
    image.push(
        Style::Dual,
        Shapes::Segments(trace_dual(dual, vp, opts.grid, d)?),
    );

    if opts.samples > 0 {
        let samples = sample_curve(c, &vp.window(), opts.samples);
        let points = samples
            .iter()
            .map(|s| PlanePoint::new(s.point[0], s.point[1]))
            .collect();
        source.push(Style::Marker, Shapes::Points(points));
        let images = samples
            .iter()
            .filter_map(|s| point_image_on_dual(c, (s.point[0], s.point[1])).ok())
            .map(scale)
            .filter(|&p| vp.contains(p))
            .collect();
        image.push(Style::Marker, Shapes::Points(images));
    }
    Ok([source, image])
}
