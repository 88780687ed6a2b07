//! Standalone SVG scenes: a body boundary, optional isoptics, and optional
//! circumscribed polygon frames with tangency markers.

use crate::body::PlanePoint;
use crate::isoptic::PolygonFrame;

/// Everything one figure shows. Curves are closed polylines in math
/// coordinates (y up); the renderer flips to SVG's y-down convention.
#[derive(Clone, Debug, Default)]
pub struct Scene {
    pub body: Vec<PlanePoint>,
    pub isoptics: Vec<Vec<PlanePoint>>,
    pub frames: Vec<PolygonFrame>,
    pub markers: Vec<PlanePoint>,
}

impl Scene {
    pub fn is_empty(&self) -> bool {
        self.body.is_empty()
            && self.isoptics.is_empty()
            && self.frames.is_empty()
            && self.markers.is_empty()
    }
}

const ISOPTIC_COLORS: [&str; 4] = ["#1f77b4", "#2ca02c", "#9467bd", "#17becf"];

/// Render the scene to a standalone SVG document. The viewBox is fitted to
/// the content with a 5% margin; identical scenes produce identical bytes.
pub fn render_svg(scene: &Scene) -> String {
    let mut min_x = f64::INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    {
        let mut visit = |p: &PlanePoint| {
            min_x = min_x.min(p.x);
            max_x = max_x.max(p.x);
            min_y = min_y.min(-p.y);
            max_y = max_y.max(-p.y);
        };
        for p in &scene.body {
            visit(p);
        }
        for curve in &scene.isoptics {
            for p in curve {
                visit(p);
            }
        }
        for frame in &scene.frames {
            for p in &frame.vertices {
                visit(p);
            }
        }
        for p in &scene.markers {
            visit(p);
        }
    }
    if scene.is_empty() {
        min_x = -1.0;
        min_y = -1.0;
        max_x = 1.0;
        max_y = 1.0;
    }
    let width = (max_x - min_x).max(1e-9);
    let height = (max_y - min_y).max(1e-9);
    let margin = 0.05 * width.max(height);
    let vb = (
        min_x - margin,
        min_y - margin,
        width + 2.0 * margin,
        height + 2.0 * margin,
    );
    let stroke = 0.004 * width.max(height);
    let marker_r = 0.008 * width.max(height);

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
        fmt(vb.0),
        fmt(vb.1),
        fmt(vb.2),
        fmt(vb.3)
    ));
    for frame in &scene.frames {
        out.push_str(&format!(
            "  <polygon class=\"frame\" points=\"{}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"{}\"/>\n",
            points_attr(&frame.vertices),
            fmt(stroke)
        ));
    }
    for (i, curve) in scene.isoptics.iter().enumerate() {
        out.push_str(&format!(
            "  <path class=\"isoptic\" d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"/>\n",
            path_attr(curve),
            ISOPTIC_COLORS[i % ISOPTIC_COLORS.len()],
            fmt(stroke)
        ));
    }
    if !scene.body.is_empty() {
        out.push_str(&format!(
            "  <path class=\"body\" d=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"{}\"/>\n",
            path_attr(&scene.body),
            fmt(1.25 * stroke)
        ));
    }
    for p in &scene.markers {
        out.push_str(&format!(
            "  <circle class=\"marker\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#d62728\"/>\n",
            fmt(p.x),
            fmt(-p.y),
            fmt(marker_r)
        ));
    }
    out.push_str("</svg>\n");
    out
}

fn fmt(v: f64) -> String {
    format!("{v:.6}")
}

fn path_attr(points: &[PlanePoint]) -> String {
    let mut d = String::new();
    for (i, p) in points.iter().enumerate() {
        d.push_str(if i == 0 { "M" } else { " L" });
        d.push_str(&format!("{},{}", fmt(p.x), fmt(-p.y)));
    }
    d.push_str(" Z");
    d
}

fn points_attr(points: &[PlanePoint]) -> String {
    points
        .iter()
        .map(|p| format!("{},{}", fmt(p.x), fmt(-p.y)))
        .collect::<Vec<_>>()
        .join(" ")
}
