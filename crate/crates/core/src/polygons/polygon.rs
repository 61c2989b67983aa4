use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, GeomResult};
use crate::hyperbolic::{angle_at, cross, dist, GeodesicSegment, HPoint, Isometry};
use crate::polygons::formulas::RegularSpec;

/// Tolerance for recognizing a straight (angle `π`) vertex.
pub const EPS_ANGLE: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Counterclockwise.
    Positive,
    Negative,
}

/// A closed chain of geodesic segments through at least three vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon {
    vertices: Vec<HPoint>,
    orientation: Orientation,
}

impl Polygon {
    /// Builds a polygon and infers its orientation from the signed area of
    /// the Klein-model image.
    pub fn new(vertices: Vec<HPoint>) -> GeomResult<Self> {
        if vertices.len() < 3 {
            return Err(GeomError::InvalidPolygon(format!(
                "{} vertices; at least 3 are required",
                vertices.len()
            )));
        }
        let n = vertices.len();
        for i in 0..n {
            if dist(vertices[i], vertices[(i + 1) % n]) <= 1e-12 {
                return Err(GeomError::InvalidPolygon(format!(
                    "vertices {i} and {} coincide",
                    (i + 1) % n
                )));
            }
        }
        let signed = klein_signed_area(&vertices);
        let orientation = if signed > 0.0 {
            Orientation::Positive
        } else if signed < 0.0 {
            Orientation::Negative
        } else {
            return Err(GeomError::InvalidPolygon("zero signed area".into()));
        };
        Ok(Polygon { vertices, orientation })
    }

    pub fn vertices(&self) -> &[HPoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn edges(&self) -> impl Iterator<Item = GeodesicSegment> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| GeodesicSegment::new(self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Same polygon traversed counterclockwise.
    pub fn to_positive(&self) -> Polygon {
        match self.orientation {
            Orientation::Positive => self.clone(),
            Orientation::Negative => self.reversed(),
        }
    }

    pub fn reversed(&self) -> Polygon {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Polygon {
            vertices,
            orientation: match self.orientation {
                Orientation::Positive => Orientation::Negative,
                Orientation::Negative => Orientation::Positive,
            },
        }
    }

    /// Interior angle at every vertex, in `(0, 2π)` for simple polygons.
    pub fn interior_angles(&self) -> GeomResult<Vec<f64>> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let v = self.vertices[i];
                let next = self.vertices[(i + 1) % n];
                let prev = self.vertices[(i + n - 1) % n];
                match self.orientation {
                    Orientation::Positive => angle_at(v, next, prev),
                    Orientation::Negative => angle_at(v, prev, next),
                }
            })
            .collect()
    }

    /// No two edges meet except consecutive edges at their shared vertex.
    pub fn is_simple(&self) -> bool {
        let edges: Vec<GeodesicSegment> = self.edges().collect();
        let n = edges.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    continue;
                }
                if edges[i].intersects(&edges[j]) {
                    return false;
                }
            }
        }
        // consecutive edges folding back onto each other
        match self.interior_angles() {
            Ok(angles) => angles.iter().all(|&a| a > 1e-12 && a < TAU - 1e-12),
            Err(_) => false,
        }
    }

    /// Area by Gauss-Bonnet: `(n−2)π − Σθᵢ` over the measured interior angles.
    pub fn area_gauss_bonnet(&self) -> GeomResult<f64> {
        if !self.is_simple() {
            return Err(GeomError::InvalidPolygon("boundary intersects itself".into()));
        }
        let angles = self.interior_angles()?;
        let n = angles.len() as f64;
        let area = (n - 2.0) * PI - angles.iter().sum::<f64>();
        if area <= 0.0 {
            return Err(GeomError::DegeneratePolygon { area });
        }
        Ok(area)
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|e| e.length()).sum()
    }

    pub fn side_lengths(&self) -> Vec<f64> {
        self.edges().map(|e| e.length()).collect()
    }

    /// Image under an isometry; reflections reverse the orientation flag.
    pub fn transformed(&self, g: &Isometry) -> Polygon {
        let vertices = self.vertices.iter().map(|&p| g.apply(p)).collect();
        let orientation = match (self.orientation, g.is_reflection()) {
            (o, false) => o,
            (Orientation::Positive, true) => Orientation::Negative,
            (Orientation::Negative, true) => Orientation::Positive,
        };
        Polygon { vertices, orientation }
    }

    /// Drops every vertex whose interior angle is `π` within [`EPS_ANGLE`].
    pub fn reduce_equivalent(&self) -> GeomResult<Polygon> {
        let angles = self.interior_angles()?;
        let keep: Vec<HPoint> = self
            .vertices
            .iter()
            .zip(&angles)
            .filter(|(_, &a)| (a - PI).abs() >= EPS_ANGLE)
            .map(|(&v, _)| v)
            .collect();
        if keep.len() < 3 {
            return Err(GeomError::InvalidPolygon(
                "fewer than three vertices remain after removing straight angles".into(),
            ));
        }
        Ok(Polygon {
            vertices: keep,
            orientation: self.orientation,
        })
    }

    /// Inserts the geodesic midpoint of edge `i` as a new straight vertex.
    pub fn with_midpoint(&self, i: usize) -> Polygon {
        let n = self.vertices.len();
        let seg = GeodesicSegment::new(self.vertices[i % n], self.vertices[(i + 1) % n]);
        let mut vertices = self.vertices.clone();
        vertices.insert(i % n + 1, seg.point_at(0.5));
        Polygon {
            vertices,
            orientation: self.orientation,
        }
    }

    /// Whether `p` lies inside or on the boundary (winding test in the Klein
    /// model, where edges are straight).
    pub fn contains(&self, p: HPoint) -> bool {
        let q = p.to_klein();
        let q = [q.x, q.y];
        let ks: Vec<[f64; 2]> = self
            .vertices
            .iter()
            .map(|v| {
                let k = v.to_klein();
                [k.x, k.y]
            })
            .collect();
        let n = ks.len();
        let mut winding = 0i32;
        for i in 0..n {
            let (a, b) = (ks[i], ks[(i + 1) % n]);
            let c = cross(a, b, q);
            let on_line = c.abs() <= 1e-12;
            let within = q[0] >= a[0].min(b[0]) - 1e-12
                && q[0] <= a[0].max(b[0]) + 1e-12
                && q[1] >= a[1].min(b[1]) - 1e-12
                && q[1] <= a[1].max(b[1]) + 1e-12;
            if on_line && within {
                return true;
            }
            if a[1] <= q[1] {
                if b[1] > q[1] && c > 0.0 {
                    winding += 1;
                }
            } else if b[1] <= q[1] && c < 0.0 {
                winding -= 1;
            }
        }
        winding != 0
    }
}

impl Serialize for Polygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolygonJson {
            vertices: self.vertices.clone(),
            model: PolygonModel::PoincareDisk,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polygon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolygonJson::deserialize(d)?;
        Polygon::new(raw.vertices).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct PolygonJson {
    vertices: Vec<HPoint>,
    model: PolygonModel,
}

#[derive(Serialize, Deserialize)]
enum PolygonModel {
    #[serde(rename = "poincare-disk")]
    PoincareDisk,
}

fn klein_signed_area(vertices: &[HPoint]) -> f64 {
    let n = vertices.len();
    let ks: Vec<_> = vertices.iter().map(|v| v.to_klein()).collect();
    (0..n)
        .map(|i| {
            let (a, b) = (ks[i], ks[(i + 1) % n]);
            a.x * b.y - a.y * b.x
        })
        .sum::<f64>()
        / 2.0
}

/// Realizes the regular `n`-gon with interior angle `theta`, centered at the
/// origin with vertex 0 on the positive x-axis, counterclockwise.
///
/// The circumradius `R` comes from the right triangle (center, edge midpoint,
/// vertex) with angles `π/2, π/n, θ/2`: `cosh R = cot(π/n)·cot(θ/2)`.
pub fn realize_regular(n: usize, theta: f64) -> GeomResult<Polygon> {
    if n < 3 {
        return Err(GeomError::domain(format!("cannot realize a polygon with {n} sides")));
    }
    RegularSpec::new(n as f64, theta)?;
    let alpha = PI / n as f64;
    let gap = PI / 2.0 - alpha - theta / 2.0;
    if gap <= 0.0 {
        return Err(GeomError::domain("Euclidean-limit polygon has zero size"));
    }
    // cosh R − 1 = cos(α + θ/2) / (sin α sin(θ/2)) = sin(gap) / (sin α sin(θ/2))
    let u = gap.sin() / (alpha.sin() * (theta / 2.0).sin());
    let r = (u / (2.0 + u)).sqrt();
    let vertices = (0..n)
        .map(|i| HPoint::from_disk_polar(r, 2.0 * alpha * i as f64))
        .collect::<GeomResult<Vec<_>>>()?;
    Polygon::new(vertices)
}

impl RegularSpec {
    /// Geometric realization; requires an integer side count.
    pub fn realize(&self) -> GeomResult<Polygon> {
        if self.n.fract() != 0.0 {
            return Err(GeomError::domain(format!(
                "cannot realize a polygon with noninteger side count {}",
                self.n
            )));
        }
        realize_regular(self.n as usize, self.theta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygons::formulas::{p_k, regular_perimeter, side_opposite, TILE_ANGLE};

    fn pt(x: f64, y: f64) -> HPoint {
        HPoint::new(x, y).unwrap()
    }

    /// The (π/2, π/3, π/7) triangle with the right angle at the origin.
    fn triangle_237() -> Polygon {
        let (ta, tb, tc) = (PI / 2.0, PI / 3.0, PI / 7.0);
        let ab = side_opposite(ta, tb, tc).unwrap();
        let ac = side_opposite(ta, tc, tb).unwrap();
        let b = HPoint::from_hyperbolic_polar(ab, 0.0).unwrap();
        let c = HPoint::from_hyperbolic_polar(ac, PI / 2.0).unwrap();
        Polygon::new(vec![HPoint::ORIGIN, b, c]).unwrap()
    }

    #[test]
    fn realized_237_triangle_angles_and_area() {
        let t = triangle_237();
        let angles = t.interior_angles().unwrap();
        assert!((angles[0] - PI / 2.0).abs() < 1e-12);
        assert!((angles[1] - PI / 3.0).abs() < 1e-12);
        assert!((angles[2] - PI / 7.0).abs() < 1e-12);
        let area = t.area_gauss_bonnet().unwrap();
        assert!((area - PI / 42.0).abs() < 1e-12);
    }

    #[test]
    fn regular_heptagon() {
        let h = realize_regular(7, TILE_ANGLE).unwrap();
        for a in h.interior_angles().unwrap() {
            assert!((a - TILE_ANGLE).abs() < 1e-9);
        }
        assert!((h.area_gauss_bonnet().unwrap() - PI / 3.0).abs() < 1e-9);
        assert!((h.perimeter() - p_k(7.0).unwrap()).abs() < 1e-9);
        assert_eq!(h.orientation(), Orientation::Positive);
    }

    #[test]
    fn apothem_triangle_angles() {
        let n = 9;
        let theta = 2.0;
        let poly = realize_regular(n, theta).unwrap();
        let v0 = poly.vertices()[0];
        let mid = GeodesicSegment::new(v0, poly.vertices()[1]).point_at(0.5);
        let at_center = angle_at(HPoint::ORIGIN, v0, mid).unwrap();
        let at_mid = angle_at(mid, HPoint::ORIGIN, v0).unwrap();
        let at_vertex = angle_at(v0, mid, HPoint::ORIGIN).unwrap();
        assert!((at_center - PI / n as f64).abs() < 1e-10);
        assert!((at_mid.min(TAU - at_mid) - PI / 2.0).abs() < 1e-10);
        assert!((at_vertex.min(TAU - at_vertex) - theta / 2.0).abs() < 1e-10);
    }

    #[test]
    fn realization_matches_formula() {
        for n in 3..=50 {
            let theta = 0.8 * (n as f64 - 2.0) * PI / n as f64;
            let poly = realize_regular(n, theta).unwrap();
            let spec = RegularSpec::new(n as f64, theta).unwrap();
            let p = regular_perimeter(spec).unwrap();
            assert!((poly.perimeter() - p).abs() < 1e-8 * p.max(1.0), "n = {n}");
        }
    }

    #[test]
    fn realize_rejects_noninteger() {
        let spec = RegularSpec::new(7.5, 1.0).unwrap();
        assert!(spec.realize().is_err());
        assert!(realize_regular(2, 0.1).is_err());
    }

    #[test]
    fn midpoint_vertex_is_straight_and_reducible() {
        let h = realize_regular(7, TILE_ANGLE).unwrap();
        let h8 = h.with_midpoint(2);
        let angles = h8.interior_angles().unwrap();
        assert!((angles[3] - PI).abs() < 1e-9);
        assert!((h8.area_gauss_bonnet().unwrap() - h.area_gauss_bonnet().unwrap()).abs() < 1e-9);
        assert!((h8.perimeter() - h.perimeter()).abs() < 1e-12);
        let reduced = h8.reduce_equivalent().unwrap();
        assert_eq!(reduced.len(), 7);
        assert_eq!(reduced, h);
        assert_eq!(reduced.reduce_equivalent().unwrap(), reduced);
    }

    #[test]
    fn triangle_unchanged_by_reduction() {
        let t = triangle_237();
        assert_eq!(t.reduce_equivalent().unwrap(), t);
    }

    #[test]
    fn self_intersecting_rejected() {
        let bowtie = Polygon::new(vec![pt(-0.3, -0.3), pt(0.3, 0.3), pt(0.3, -0.3), pt(-0.3, 0.3)]);
        // zero signed area in the Klein model or a crossing; either way no area
        match bowtie {
            Err(_) => {}
            Ok(p) => assert!(matches!(
                p.area_gauss_bonnet(),
                Err(GeomError::InvalidPolygon(_))
            )),
        }
        let skewed =
            Polygon::new(vec![pt(-0.3, -0.3), pt(0.4, 0.3), pt(0.3, -0.3), pt(-0.3, 0.3)]).unwrap();
        assert!(!skewed.is_simple());
        assert!(matches!(skewed.area_gauss_bonnet(), Err(GeomError::InvalidPolygon(_))));
    }

    #[test]
    fn clockwise_polygons_measure_the_same() {
        let h = realize_regular(8, 1.5).unwrap();
        let r = h.reversed();
        assert_eq!(r.orientation(), Orientation::Negative);
        assert!((r.area_gauss_bonnet().unwrap() - h.area_gauss_bonnet().unwrap()).abs() < 1e-12);
    }

    #[test]
    fn isometry_invariance() {
        let h = realize_regular(7, TILE_ANGLE).unwrap();
        let g = Isometry::from_origin(pt(0.4, -0.3))
            .compose(&Isometry::rotation(0.9))
            .compose(&Isometry::reflection_in_diameter(0.3));
        let moved = h.transformed(&g);
        assert_eq!(moved.orientation(), Orientation::Negative);
        assert!((moved.perimeter() - h.perimeter()).abs() < 1e-10);
        assert!((moved.area_gauss_bonnet().unwrap() - PI / 3.0).abs() < 1e-9);
    }

    #[test]
    fn contains_center_not_outside() {
        let h = realize_regular(7, TILE_ANGLE).unwrap();
        assert!(h.contains(HPoint::ORIGIN));
        assert!(h.contains(h.vertices()[3]));
        assert!(!h.contains(pt(0.9, 0.0)));
    }

    #[test]
    fn json_shape() {
        let t = triangle_237();
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["model"], "poincare-disk");
        assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
        let back: Polygon = serde_json::from_value(v).unwrap();
        assert_eq!(back, t);
        let bad = serde_json::json!({"vertices": [[0.0, 0.0], [1.5, 0.0], [0.0, 0.5]], "model": "poincare-disk"});
        assert!(serde_json::from_value::<Polygon>(bad).is_err());
    }
}
