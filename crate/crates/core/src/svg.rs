//! SVG 1.1 rendering of lifted faces in the Poincaré disk.
//!
//! The disk is drawn in a `1000 × 1000` viewport with radius 480 about the
//! center, so a disk point `(x, y)` lands at `(500 + 480x, 500 − 480y)`.
//! Geodesic edges are arcs of circles orthogonal to the unit circle, or
//! straight segments when they pass (numerically) through the origin.

use std::fmt::Write;

use crate::hyperbolic::HPoint;
use crate::polygons::Polygon;
use crate::tilings::TilingGraph;

pub const VIEWPORT: f64 = 1000.0;
pub const DISK_RADIUS: f64 = 480.0;
const CENTER: f64 = VIEWPORT / 2.0;
/// Chords whose orthogonal circle would exceed this radius are drawn straight.
const MAX_ARC_RADIUS: f64 = 1e6;

/// The affine disk-to-viewport map.
pub fn to_viewport(p: HPoint) -> [f64; 2] {
    [CENTER + DISK_RADIUS * p.x(), CENTER - DISK_RADIUS * p.y()]
}

/// How one geodesic edge is drawn.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EdgeShape {
    Line,
    /// Arc of radius `radius` (viewport units) about `center` (viewport
    /// coordinates), traversed in the SVG positive-angle direction when
    /// `sweep` is set.
    Arc { center: [f64; 2], radius: f64, sweep: bool },
}

/// Center and radius (in disk units) of the circle orthogonal to the unit
/// circle through `p` and `q`, or `None` for a diameter.
pub fn orthogonal_circle(p: HPoint, q: HPoint) -> Option<([f64; 2], f64)> {
    // c·p = (|p|² + 1)/2 and c·q = (|q|² + 1)/2
    let det = p.x() * q.y() - p.y() * q.x();
    let (bp, bq) = ((p.norm_sq() + 1.0) / 2.0, (q.norm_sq() + 1.0) / 2.0);
    if det.abs() < 1e-12 {
        return None;
    }
    let c = [(bp * q.y() - bq * p.y()) / det, (p.x() * bq - q.x() * bp) / det];
    let r = (c[0] * c[0] + c[1] * c[1] - 1.0).sqrt();
    (r.is_finite() && r * DISK_RADIUS < MAX_ARC_RADIUS).then_some((c, r))
}

pub fn edge_shape(p: HPoint, q: HPoint) -> EdgeShape {
    match orthogonal_circle(p, q) {
        None => EdgeShape::Line,
        Some((c, r)) => {
            let center = [CENTER + DISK_RADIUS * c[0], CENTER - DISK_RADIUS * c[1]];
            let (a, b) = (to_viewport(p), to_viewport(q));
            let cross = (a[0] - center[0]) * (b[1] - center[1]) - (a[1] - center[1]) * (b[0] - center[0]);
            EdgeShape::Arc {
                center,
                radius: r * DISK_RADIUS,
                sweep: cross > 0.0,
            }
        }
    }
}

fn push_point(out: &mut String, p: [f64; 2]) {
    let _ = write!(out, "{:.7} {:.7}", p[0], p[1]);
}

/// Path data for a closed polygon with geodesic sides.
pub fn polygon_path(poly: &Polygon) -> String {
    let v = poly.vertices();
    let mut d = String::from("M ");
    push_point(&mut d, to_viewport(v[0]));
    for i in 0..v.len() {
        let (p, q) = (v[i], v[(i + 1) % v.len()]);
        match edge_shape(p, q) {
            EdgeShape::Line => d.push_str(" L "),
            EdgeShape::Arc { radius, sweep, .. } => {
                let _ = write!(d, " A {radius:.7} {radius:.7} 0 0 {} ", u8::from(sweep));
            }
        }
        push_point(&mut d, to_viewport(q));
    }
    d.push_str(" Z");
    d
}

/// One `<path class="face">` per lifted face, over the boundary circle.
/// Faces without a lift are skipped.
pub fn render_tiling(t: &TilingGraph) -> String {
    let polygons: Vec<(usize, Polygon)> = t
        .faces
        .iter()
        .filter_map(|f| t.face_polygon(f).ok().map(|p| (f.id, p)))
        .collect();
    render(&polygons)
}

pub fn render_polygons(polygons: &[Polygon]) -> String {
    let indexed: Vec<(usize, Polygon)> = polygons.iter().cloned().enumerate().collect();
    render(&indexed)
}

fn render(polygons: &[(usize, Polygon)]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{VIEWPORT}\" height=\"{VIEWPORT}\" viewBox=\"0 0 {VIEWPORT} {VIEWPORT}\">"
    );
    let _ = writeln!(
        out,
        "  <circle class=\"boundary\" cx=\"{CENTER}\" cy=\"{CENTER}\" r=\"{DISK_RADIUS}\" fill=\"none\" stroke=\"black\"/>"
    );
    for (id, poly) in polygons {
        let _ = writeln!(
            out,
            "  <path class=\"face\" data-face=\"{id}\" d=\"{}\" fill=\"#dde6f0\" stroke=\"#203040\" stroke-width=\"0.8\"/>",
            polygon_path(poly)
        );
    }
    out.push_str("</svg>\n");
    out
}
