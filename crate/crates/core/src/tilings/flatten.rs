//! Flattening: replacing a two-edge chain `ABC` by the geodesic `AC`.

use std::f64::consts::PI;

use crate::error::{GeomError, GeomResult};
use crate::hyperbolic::{GeodesicSegment, HPoint};
use crate::polygons::Polygon;

#[derive(Clone, Debug)]
pub struct Flattening {
    pub segment: GeodesicSegment,
    /// Triangle bounded by `AB`, `BC` and `AC`; `None` for a collinear chain.
    pub region: Option<Polygon>,
}

impl Flattening {
    pub fn region_area(&self) -> f64 {
        self.region
            .as_ref()
            .map(|r| r.area_gauss_bonnet().unwrap_or(0.0))
            .unwrap_or(0.0)
    }
}

pub fn flatten_vertex(a: HPoint, b: HPoint, c: HPoint) -> GeomResult<Flattening> {
    if a.dist(b) < 1e-12 || b.dist(c) < 1e-12 || a.dist(c) < 1e-12 {
        return Err(GeomError::Coincident("flattening needs three distinct points"));
    }
    let segment = GeodesicSegment::new(a, c);
    let region = match Polygon::new(vec![a, b, c]) {
        Ok(p) if p.area_gauss_bonnet().map(|x| x > 1e-14).unwrap_or(false) => Some(p.to_positive()),
        _ => None,
    };
    Ok(Flattening { segment, region })
}

#[derive(Clone, Debug)]
pub struct PolygonFlattening {
    pub polygon: Polygon,
    /// `+area(R)` when the removed corner was reflex, `−area(R)` when convex.
    pub area_change: f64,
    pub perimeter_change: f64,
}

/// Removes corner `i` of the polygon, joining its neighbours by a geodesic.
/// The region `R` moves from the polygon to its neighbour across the corner
/// or back, depending on whether the corner is convex or reflex.
pub fn flatten_polygon_vertex(p: &Polygon, i: usize) -> GeomResult<PolygonFlattening> {
    let n = p.len();
    if n < 4 {
        return Err(GeomError::domain("flattening a triangle leaves a segment"));
    }
    let p = p.to_positive();
    let v = p.vertices();
    let (a, b, c) = (v[(i + n - 1) % n], v[i % n], v[(i + 1) % n]);
    let f = flatten_vertex(a, b, c)?;
    let angle = p.interior_angles()?[i % n];
    let sign = if angle > PI { 1.0 } else { -1.0 };
    let mut rest = v.to_vec();
    rest.remove(i % n);
    let polygon = Polygon::new(rest)?;
    Ok(PolygonFlattening {
        perimeter_change: polygon.perimeter() - p.perimeter(),
        area_change: sign * f.region_area(),
        polygon,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygons::{realize_regular, TILE_ANGLE};

    #[test]
    fn collinear_chain_has_empty_region() {
        let a = HPoint::new(-0.3, 0.0).unwrap();
        let b = HPoint::new(0.1, 0.0).unwrap();
        let c = HPoint::new(0.5, 0.0).unwrap();
        let f = flatten_vertex(a, b, c).unwrap();
        assert!(f.region.is_none());
        assert_eq!(f.region_area(), 0.0);
        // a point on a geodesic through two others is also straight
        let s = GeodesicSegment::new(a, HPoint::new(0.2, 0.4).unwrap());
        let f = flatten_vertex(s.a, s.point_at(0.4), s.b).unwrap();
        assert!(f.region_area() < 1e-12);
    }

    #[test]
    fn convex_corner_loses_region() {
        let h = realize_regular(7, TILE_ANGLE).unwrap();
        let r = flatten_polygon_vertex(&h, 2).unwrap();
        let measured = r.polygon.area_gauss_bonnet().unwrap() - h.area_gauss_bonnet().unwrap();
        assert!(r.area_change < 0.0);
        assert!((measured - r.area_change).abs() < 1e-12);
        assert!(r.perimeter_change < 0.0);
    }

    #[test]
    fn reflex_corner_gains_region() {
        // arrow-shaped quadrilateral with a reflex corner at the origin side
        let pts = [(0.5, 0.0), (0.0, 0.5), (0.1, 0.0), (0.0, -0.5)];
        let p = Polygon::new(pts.iter().map(|&(x, y)| HPoint::new(x, y).unwrap()).collect()).unwrap();
        let ang = p.interior_angles().unwrap();
        assert!(ang[2] > PI);
        let r = flatten_polygon_vertex(&p, 2).unwrap();
        let measured = r.polygon.area_gauss_bonnet().unwrap() - p.area_gauss_bonnet().unwrap();
        assert!(r.area_change > 0.0);
        assert!((measured - r.area_change).abs() < 1e-12);
        assert!(r.perimeter_change < 0.0);
    }

    #[test]
    fn flattening_all_straight_corners_gives_hull_input() {
        let h = realize_regular(7, TILE_ANGLE).unwrap();
        let mut p = h.with_midpoint(1).with_midpoint(4);
        while let Some(i) = p
            .interior_angles()
            .unwrap()
            .iter()
            .position(|a| (a - PI).abs() < 1e-9)
        {
            p = flatten_polygon_vertex(&p, i).unwrap().polygon;
        }
        assert_eq!(p.len(), 7);
        assert!((p.perimeter() - h.perimeter()).abs() < 1e-12);
    }
}
