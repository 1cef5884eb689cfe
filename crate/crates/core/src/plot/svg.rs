use std::fmt::Write;

use crate::dualize::PlanePoint;

use super::{Axes, PlaneScene, Shapes, Viewport};

const STYLESHEET: &str = "\
.background{fill:#ffffff}
.axis{stroke:#9a9a9a;stroke-width:1}
.curve{fill:none;stroke:#1b4f9c;stroke-width:1.5;stroke-linejoin:round}
.dual{fill:none;stroke:#b3261e;stroke-width:1.5;stroke-linejoin:round}
.envelope{fill:none;stroke:#1b4f9c;stroke-width:0.4;stroke-opacity:0.6}
.polyline{fill:none;stroke:#2e7d32;stroke-width:1}
.marker{fill:none;stroke:#000000;stroke-width:4;stroke-linecap:round}
";

/// Three decimals, with negative zero printed as `0.000`.
pub fn format_coord(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn push_point(d: &mut String, cmd: char, vp: &Viewport, p: PlanePoint) {
    let (x, y) = vp.pixel(p);
    if !d.is_empty() {
        d.push(' ');
    }
    let _ = write!(d, "{cmd}{} {}", format_coord(x), format_coord(y));
}

fn path_data(vp: &Viewport, shapes: &Shapes) -> String {
    let mut d = String::new();
    match shapes {
        Shapes::Segments(segments) => {
            for s in segments {
                push_point(&mut d, 'M', vp, s.a);
                push_point(&mut d, 'L', vp, s.b);
            }
        }
        Shapes::Points(points) => {
            // zero-length subpaths render as round dots
            for &p in points {
                push_point(&mut d, 'M', vp, p);
                d.push_str(" h0");
            }
        }
        Shapes::Polylines(lines) => {
            for line in lines {
                for (k, &p) in line.iter().enumerate() {
                    push_point(&mut d, if k == 0 { 'M' } else { 'L' }, vp, p);
                }
            }
        }
    }
    d
}

fn axis_line(out: &mut String, vp: &Viewport, a: PlanePoint, b: PlanePoint) {
    let (x1, y1) = vp.pixel(a);
    let (x2, y2) = vp.pixel(b);
    let _ = writeln!(
        out,
        "<line class=\"axis\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
        format_coord(x1),
        format_coord(y1),
        format_coord(x2),
        format_coord(y2)
    );
}

fn write_panel(out: &mut String, scene: &PlaneScene, offset_px: u32) {
    let vp = &scene.viewport;
    let _ = writeln!(
        out,
        "<svg x=\"{offset_px}\" y=\"0\" width=\"{w}\" height=\"{h}\">",
        w = vp.width_px,
        h = vp.height_px
    );
    let _ = writeln!(
        out,
        "<rect class=\"background\" x=\"0\" y=\"0\" width=\"{}\" height=\"{}\"/>",
        vp.width_px, vp.height_px
    );
    let vertical = |out: &mut String, x: f64| {
        if (vp.xmin..=vp.xmax).contains(&x) {
            axis_line(
                out,
                vp,
                PlanePoint::new(x, vp.ymin),
                PlanePoint::new(x, vp.ymax),
            );
        }
    };
    match scene.axes {
        Axes::None => {}
        Axes::Cartesian => {
            if (vp.ymin..=vp.ymax).contains(&0.0) {
                axis_line(
                    out,
                    vp,
                    PlanePoint::new(vp.xmin, 0.0),
                    PlanePoint::new(vp.xmax, 0.0),
                );
            }
            vertical(out, 0.0);
        }
        Axes::Parallel { spacing } => {
            vertical(out, 0.0);
            vertical(out, spacing);
        }
    }
    for layer in scene.layers() {
        let _ = writeln!(
            out,
            "<path class=\"{}\" d=\"{}\"/>",
            layer.style.class(),
            path_data(vp, &layer.shapes)
        );
    }
    out.push_str("</svg>\n");
}

/// Scenes placed left to right in one SVG 1.1 document. Each panel is a
/// nested viewport, so drawing outside it is clipped.
pub fn render_panels(scenes: &[PlaneScene]) -> String {
    let width: u32 = scenes.iter().map(|s| s.viewport.width_px).sum();
    let height = scenes
        .iter()
        .map(|s| s.viewport.height_px)
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    out.push_str("<style type=\"text/css\">\n");
    out.push_str(STYLESHEET);
    out.push_str("</style>\n");
    let mut offset = 0;
    for scene in scenes {
        write_panel(&mut out, scene, offset);
        offset += scene.viewport.width_px;
    }
    out.push_str("</svg>\n");
    out
}

pub fn render_svg(scene: &PlaneScene) -> String {
    render_panels(std::slice::from_ref(scene))
}

#[cfg(test)]
pub(super) fn stylesheet_classes() -> Vec<&'static str> {
    STYLESHEET
        .lines()
        .filter_map(|l| l.strip_prefix('.')?.split('{').next())
        .collect()
}
