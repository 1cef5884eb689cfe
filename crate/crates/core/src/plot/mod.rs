//! Deterministic SVG rendering of curves, duals and tangent envelopes.

mod march;
mod scenes;
mod svg;

use thiserror::Error;

use crate::dualize::{DualError, PlanePoint, Window};
use crate::polyring::VarId;

pub use march::{trace_implicit, MIN_GRID};
pub use scenes::{curve_pair_scenes, dual_line_segment, envelope_scene, trace_dual, PairOptions};
pub use svg::{format_coord, render_panels, render_svg};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum PlotError {
    #[error("invalid viewport")]
    InvalidViewport,
    #[error("grid must be at least {MIN_GRID}, got {0}")]
    GridTooSmall(usize),
    #[error("polynomial depends on {0}, which is not a plotting axis")]
    StrayVariable(VarId),
    #[error("at least two samples are needed, got {0}")]
    TooFewSamples(usize),
    #[error(transparent)]
    Dual(#[from] DualError),
}

/// A plane rectangle together with its size in pixels.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
    pub width_px: u32,
    pub height_px: u32,
}

impl Viewport {
    pub fn new(
        xmin: f64,
        xmax: f64,
        ymin: f64,
        ymax: f64,
        width_px: u32,
        height_px: u32,
    ) -> Result<Self, PlotError> {
        let finite = [xmin, xmax, ymin, ymax].iter().all(|v| v.is_finite());
        if !finite || xmin >= xmax || ymin >= ymax || width_px == 0 || height_px == 0 {
            return Err(PlotError::InvalidViewport);
        }
        Ok(Viewport {
            xmin,
            xmax,
            ymin,
            ymax,
            width_px,
            height_px,
        })
    }

    pub fn from_window(w: &Window, width_px: u32, height_px: u32) -> Result<Self, PlotError> {
        Viewport::new(w.xmin, w.xmax, w.ymin, w.ymax, width_px, height_px)
    }

    pub fn window(&self) -> Window {
        Window {
            xmin: self.xmin,
            xmax: self.xmax,
            ymin: self.ymin,
            ymax: self.ymax,
        }
    }

    pub fn contains(&self, p: PlanePoint) -> bool {
        self.window().contains(p.x, p.y)
    }

    /// Pixel coordinates, y pointing down.
    pub(crate) fn pixel(&self, p: PlanePoint) -> (f64, f64) {
        let sx = self.width_px as f64 / (self.xmax - self.xmin);
        let sy = self.height_px as f64 / (self.ymax - self.ymin);
        ((p.x - self.xmin) * sx, (self.ymax - p.y) * sy)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    pub a: PlanePoint,
    pub b: PlanePoint,
}

impl Segment {
    pub fn new(a: PlanePoint, b: PlanePoint) -> Self {
        Segment { a, b }
    }

    pub fn distance_to(&self, p: PlanePoint) -> f64 {
        let (dx, dy) = (self.b.x - self.a.x, self.b.y - self.a.y);
        let len2 = dx * dx + dy * dy;
        let t = if len2 == 0.0 {
            0.0
        } else {
            (((p.x - self.a.x) * dx + (p.y - self.a.y) * dy) / len2).clamp(0.0, 1.0)
        };
        (p.x - self.a.x - t * dx).hypot(p.y - self.a.y - t * dy)
    }
}

/// Stroke style tokens; each maps to a class in the embedded stylesheet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Style {
    Curve,
    Dual,
    Envelope,
    Polyline,
    Marker,
}

impl Style {
    pub const ALL: [Style; 5] = [
        Style::Curve,
        Style::Dual,
        Style::Envelope,
        Style::Polyline,
        Style::Marker,
    ];

    pub fn class(self) -> &'static str {
        match self {
            Style::Curve => "curve",
            Style::Dual => "dual",
            Style::Envelope => "envelope",
            Style::Polyline => "polyline",
            Style::Marker => "marker",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Shapes {
    Segments(Vec<Segment>),
    Points(Vec<PlanePoint>),
    Polylines(Vec<Vec<PlanePoint>>),
}

impl Shapes {
    pub fn len(&self) -> usize {
        match self {
            Shapes::Segments(s) => s.len(),
            Shapes::Points(p) => p.len(),
            Shapes::Polylines(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn is_finite(&self) -> bool {
        match self {
            Shapes::Segments(s) => s.iter().all(|s| s.a.is_finite() && s.b.is_finite()),
            Shapes::Points(p) => p.iter().all(PlanePoint::is_finite),
            Shapes::Polylines(p) => p.iter().flatten().all(PlanePoint::is_finite),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Layer {
    pub style: Style,
    pub shapes: Shapes,
}

/// Reference lines drawn under the layers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Axes {
    None,
    /// The lines `x = 0` and `y = 0`.
    Cartesian,
    /// The two vertical axes `x = 0` and `x = spacing`.
    Parallel {
        spacing: f64,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlaneScene {
    pub viewport: Viewport,
    pub axes: Axes,
    layers: Vec<Layer>,
}

impl PlaneScene {
    pub fn new(viewport: Viewport, axes: Axes) -> Self {
        PlaneScene {
            viewport,
            axes,
            layers: Vec::new(),
        }
    }

    /// Appends a layer. Layers holding non-finite coordinates are dropped.
    pub fn push(&mut self, style: Style, shapes: Shapes) -> bool {
        if !shapes.is_finite() {
            return false;
        }
        self.layers.push(Layer { style, shapes });
        true
    }

    pub fn with(mut self, style: Style, shapes: Shapes) -> Self {
        self.push(style, shapes);
        self
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }
}
