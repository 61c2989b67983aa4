//! Hyperbolic convex hulls.
//!
//! Hyperbolic convexity is Euclidean convexity in the Klein model, so the
//! hull is a planar monotone-chain hull of the Klein images, mapped back to
//! the disk. Collinear boundary points are dropped, which yields the hull
//! with the minimal number of vertices.

use crate::error::{GeomError, GeomResult};
use crate::hyperbolic::{cross, HPoint};
use crate::polygons::polygon::Polygon;

const COLLINEAR_EPS: f64 = 1e-12;

/// Extreme points of the input in counterclockwise order. Returns zero, one
/// or two points for degenerate inputs (empty, a single point, points on one
/// geodesic).
pub fn hull_vertices(points: &[HPoint]) -> Vec<HPoint> {
    let mut pts: Vec<([f64; 2], HPoint)> = points
        .iter()
        .map(|&p| {
            let k = p.to_klein();
            ([k.x, k.y], p)
        })
        .collect();
    pts.sort_by(|a, b| a.0[0].total_cmp(&b.0[0]).then(a.0[1].total_cmp(&b.0[1])));
    pts.dedup_by(|a, b| (a.0[0] - b.0[0]).abs() <= 1e-15 && (a.0[1] - b.0[1]).abs() <= 1e-15);
    if pts.len() <= 2 {
        return pts.into_iter().map(|(_, p)| p).collect();
    }

    let mut hull: Vec<([f64; 2], HPoint)> = Vec::with_capacity(2 * pts.len());
    for &p in pts.iter() {
        while hull.len() >= 2
            && cross(hull[hull.len() - 2].0, hull[hull.len() - 1].0, p.0) <= COLLINEAR_EPS
        {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && cross(hull[hull.len() - 2].0, hull[hull.len() - 1].0, p.0) <= COLLINEAR_EPS
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull.into_iter().map(|(_, p)| p).collect()
}

/// Convex hull as a counterclockwise polygon with the minimal number of
/// vertices.
///
/// Points must come from a single lift in the disk; the caller is responsible
/// for choosing consistent lifts of a region on a surface.
pub fn convex_hull(points: &[HPoint]) -> GeomResult<Polygon> {
    let verts = hull_vertices(points);
    if verts.len() < 3 {
        return Err(GeomError::DegenerateHull { witness: verts });
    }
    Polygon::new(verts)
}

/// Whether every interior angle is at most `π` (within `tol`).
pub fn is_convex(p: &Polygon, tol: f64) -> GeomResult<bool> {
    Ok(p
        .interior_angles()?
        .iter()
        .all(|&a| a <= std::f64::consts::PI + tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygons::formulas::TILE_ANGLE;
    use crate::polygons::polygon::realize_regular;

    fn pt(x: f64, y: f64) -> HPoint {
        HPoint::new(x, y).unwrap()
    }

    #[test]
    fn hull_of_convex_polygon_is_itself() {
        let h = realize_regular(7, TILE_ANGLE).unwrap();
        let hull = convex_hull(h.vertices()).unwrap();
        assert_eq!(hull.len(), 7);
        for v in h.vertices() {
            assert!(hull.vertices().contains(v));
        }
        assert!((hull.area_gauss_bonnet().unwrap() - h.area_gauss_bonnet().unwrap()).abs() < 1e-12);
    }

    #[test]
    fn reflex_quadrilateral_hull_is_triangle() {
        let quad = Polygon::new(vec![pt(-0.5, -0.4), pt(0.5, -0.4), pt(0.0, 0.6), pt(0.0, -0.1)])
            .unwrap();
        let angles = quad.interior_angles().unwrap();
        assert!(angles[3] > std::f64::consts::PI);
        let hull = convex_hull(quad.vertices()).unwrap();
        assert_eq!(hull.len(), 3);
        assert!(!hull.vertices().contains(&pt(0.0, -0.1)));
        assert!(hull.area_gauss_bonnet().unwrap() >= quad.area_gauss_bonnet().unwrap());
        assert!(hull.perimeter() <= quad.perimeter());
    }

    #[test]
    fn degenerate_inputs_report_witness() {
        match convex_hull(&[pt(0.1, 0.1)]) {
            Err(GeomError::DegenerateHull { witness }) => assert_eq!(witness.len(), 1),
            other => panic!("{other:?}"),
        }
        // three points on one diameter
        match convex_hull(&[pt(-0.3, 0.0), pt(0.0, 0.0), pt(0.5, 0.0)]) {
            Err(GeomError::DegenerateHull { witness }) => assert_eq!(witness.len(), 2),
            other => panic!("{other:?}"),
        }
        assert!(hull_vertices(&[]).is_empty());
    }

    #[test]
    fn geodesic_midpoints_are_not_hull_vertices() {
        let h = realize_regular(5, 1.2).unwrap();
        let with_mid = h.with_midpoint(0).with_midpoint(3);
        assert_eq!(hull_vertices(with_mid.vertices()).len(), 5);
    }
}
