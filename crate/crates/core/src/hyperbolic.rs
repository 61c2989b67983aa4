//! Points, geodesic segments and isometries of the hyperbolic plane.
//!
//! Points are stored in Poincaré-disk coordinates (curvature −1). The disk
//! model is conformal, so angles are read off Euclidean tangent directions
//! after moving the vertex to the origin. The Klein model is used only
//! transiently: geodesics there are straight chords, which turns convexity
//! and segment intersection into planar predicates.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{GeomError, GeomResult};

/// Tolerance for geometric predicates.
pub const EPS_GEOM: f64 = 1e-9;

/// A point of the hyperbolic plane in Poincaré-disk coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 2]", try_from = "[f64; 2]")]
pub struct HPoint {
    x: f64,
    y: f64,
}

/// A point of the Klein (projective) disk model.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KleinPoint {
    pub x: f64,
    pub y: f64,
}

impl HPoint {
    pub const ORIGIN: HPoint = HPoint { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> GeomResult<Self> {
        if !(x.is_finite() && y.is_finite()) || x * x + y * y >= 1.0 {
            return Err(GeomError::OutsideDisk { x, y });
        }
        Ok(HPoint { x, y })
    }

    /// Point at Euclidean radius `r` (in the disk) and polar angle `phi`.
    pub fn from_disk_polar(r: f64, phi: f64) -> GeomResult<Self> {
        Self::new(r * phi.cos(), r * phi.sin())
    }

    /// Point at hyperbolic distance `d` from the origin in direction `phi`.
    pub fn from_hyperbolic_polar(d: f64, phi: f64) -> GeomResult<Self> {
        if !(d >= 0.0) {
            return Err(GeomError::domain(format!("negative radial distance {d}")));
        }
        Self::from_disk_polar((d / 2.0).tanh(), phi)
    }

    pub(crate) fn from_complex(z: Complex64) -> Self {
        HPoint { x: z.re, y: z.im }
    }

    pub(crate) fn z(self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    pub fn x(self) -> f64 {
        self.x
    }

    pub fn y(self) -> f64 {
        self.y
    }

    pub fn coords(self) -> [f64; 2] {
        [self.x, self.y]
    }

    /// Squared Euclidean norm in the disk.
    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    /// Hyperbolic distance from the origin.
    pub fn radius(self) -> f64 {
        2.0 * self.norm_sq().sqrt().atanh()
    }

    pub fn dist(self, other: HPoint) -> f64 {
        dist(self, other)
    }

    pub fn to_klein(self) -> KleinPoint {
        to_klein(self)
    }

    /// Coordinates on the upper sheet of the hyperboloid `t² − u² − v² = 1`.
    pub fn to_hyperboloid(self) -> [f64; 3] {
        let s = self.norm_sq();
        let denom = 1.0 - s;
        [(1.0 + s) / denom, 2.0 * self.x / denom, 2.0 * self.y / denom]
    }

    /// Inverse of [`HPoint::to_hyperboloid`]; rescales onto the sheet first.
    pub fn from_hyperboloid(v: [f64; 3]) -> GeomResult<Self> {
        let q = v[0] * v[0] - v[1] * v[1] - v[2] * v[2];
        if !(q > 0.0) || v[0] <= 0.0 {
            return Err(GeomError::domain("vector is not timelike future-pointing"));
        }
        let s = q.sqrt();
        let (t, u, w) = (v[0] / s, v[1] / s, v[2] / s);
        Self::new(u / (1.0 + t), w / (1.0 + t))
    }
}

impl From<HPoint> for [f64; 2] {
    fn from(p: HPoint) -> Self {
        p.coords()
    }
}

impl TryFrom<[f64; 2]> for HPoint {
    type Error = GeomError;

    fn try_from(c: [f64; 2]) -> GeomResult<Self> {
        HPoint::new(c[0], c[1])
    }
}

impl KleinPoint {
    pub fn to_disk(self) -> GeomResult<HPoint> {
        from_klein(self)
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }
}

/// Hyperbolic distance between two disk points.
///
/// Uses `acosh(1 + δ)` with `δ = 2|p−q|² / ((1−|p|²)(1−|q|²))`, evaluated
/// through `log1p` so short distances keep full relative precision.
pub fn dist(p: HPoint, q: HPoint) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    let num = 2.0 * (dx * dx + dy * dy);
    let delta = num / ((1.0 - p.norm_sq()) * (1.0 - q.norm_sq()));
    acosh1p(delta)
}

/// `acosh(1 + u)` for `u ≥ 0`, accurate when `u` is tiny.
pub fn acosh1p(u: f64) -> f64 {
    if u <= 0.0 {
        return 0.0;
    }
    (u + (u * (2.0 + u)).sqrt()).ln_1p()
}

pub fn to_klein(p: HPoint) -> KleinPoint {
    let s = 1.0 + p.norm_sq();
    KleinPoint {
        x: 2.0 * p.x / s,
        y: 2.0 * p.y / s,
    }
}

pub fn from_klein(k: KleinPoint) -> GeomResult<HPoint> {
    let s = k.norm_sq();
    if !(s < 1.0) {
        return Err(GeomError::OutsideDisk { x: k.x, y: k.y });
    }
    let d = 1.0 + (1.0 - s).sqrt();
    HPoint::new(k.x / d, k.y / d)
}

/// Counterclockwise angle at `v` from the geodesic ray `v→a` to the ray `v→b`,
/// in `[0, 2π)`.
pub fn angle_at(v: HPoint, a: HPoint, b: HPoint) -> GeomResult<f64> {
    let t = Isometry::to_origin(v);
    let ta = t.apply_z(a.z());
    let tb = t.apply_z(b.z());
    if ta.norm() <= f64::EPSILON || tb.norm() <= f64::EPSILON {
        return Err(GeomError::Coincident("angle vertex coincides with a ray endpoint"));
    }
    let mut ang = tb.arg() - ta.arg();
    if ang < 0.0 {
        ang += TAU;
    }
    if ang >= TAU {
        ang -= TAU;
    }
    Ok(ang)
}

/// Geodesic segment between two points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeodesicSegment {
    pub a: HPoint,
    pub b: HPoint,
}

impl GeodesicSegment {
    pub fn new(a: HPoint, b: HPoint) -> Self {
        GeodesicSegment { a, b }
    }

    pub fn length(&self) -> f64 {
        dist(self.a, self.b)
    }

    pub fn reversed(&self) -> Self {
        GeodesicSegment { a: self.b, b: self.a }
    }

    /// Point at fraction `t ∈ [0, 1]` of the hyperbolic length from `a`.
    pub fn point_at(&self, t: f64) -> HPoint {
        let to = Isometry::to_origin(self.a);
        let bz = to.apply_z(self.b.z());
        let d = dist(self.a, self.b);
        let r = (t * d / 2.0).tanh();
        let dir = if bz.norm() > 0.0 { bz / bz.norm() } else { Complex64::new(1.0, 0.0) };
        to.inverse().apply(HPoint::from_complex(dir * r))
    }

    /// Whether the two closed segments meet, tested chord against chord in
    /// the Klein model.
    pub fn intersects(&self, other: &GeodesicSegment) -> bool {
        let (p1, p2) = (self.a.to_klein(), self.b.to_klein());
        let (q1, q2) = (other.a.to_klein(), other.b.to_klein());
        segments_intersect([p1.x, p1.y], [p2.x, p2.y], [q1.x, q1.y], [q2.x, q2.y])
    }
}

pub(crate) fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn on_segment(p: [f64; 2], q: [f64; 2], r: [f64; 2]) -> bool {
    r[0] <= p[0].max(q[0]) + EPS_GEOM
        && r[0] >= p[0].min(q[0]) - EPS_GEOM
        && r[1] <= p[1].max(q[1]) + EPS_GEOM
        && r[1] >= p[1].min(q[1]) - EPS_GEOM
}

fn segments_intersect(p1: [f64; 2], p2: [f64; 2], q1: [f64; 2], q2: [f64; 2]) -> bool {
    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);
    let eps = 1e-14;
    if ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps))
        && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps))
    {
        return true;
    }
    (d1.abs() <= eps && on_segment(q1, q2, p1))
        || (d2.abs() <= eps && on_segment(q1, q2, p2))
        || (d3.abs() <= eps && on_segment(p1, p2, q1))
        || (d4.abs() <= eps && on_segment(p1, p2, q2))
}

/// An isometry of the disk: `z ↦ (a w + b) / (c w + d)` where `w = z̄` when
/// `reflect` is set and `w = z` otherwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Isometry {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
    reflect: bool,
}

impl Default for Isometry {
    fn default() -> Self {
        Self::identity()
    }
}

impl Isometry {
    pub fn identity() -> Self {
        Isometry {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
            reflect: false,
        }
    }

    /// Rotation about the origin by `phi`.
    pub fn rotation(phi: f64) -> Self {
        Isometry {
            a: Complex64::from_polar(1.0, phi),
            ..Self::identity()
        }
    }

    /// The hyperbolic translation taking `p` to the origin along the geodesic
    /// through both.
    pub fn to_origin(p: HPoint) -> Self {
        let pz = p.z();
        Isometry {
            a: Complex64::new(1.0, 0.0),
            b: -pz,
            c: -pz.conj(),
            d: Complex64::new(1.0, 0.0),
            reflect: false,
        }
    }

    /// Translation taking the origin to `p`.
    pub fn from_origin(p: HPoint) -> Self {
        let pz = p.z();
        Isometry {
            a: Complex64::new(1.0, 0.0),
            b: pz,
            c: pz.conj(),
            d: Complex64::new(1.0, 0.0),
            reflect: false,
        }
    }

    /// Reflection in the diameter at polar angle `phi`.
    pub fn reflection_in_diameter(phi: f64) -> Self {
        Isometry {
            a: Complex64::from_polar(1.0, 2.0 * phi),
            reflect: true,
            ..Self::identity()
        }
    }

    /// Reflection in the full geodesic through `p` and `q`.
    pub fn reflection_in_geodesic(p: HPoint, q: HPoint) -> GeomResult<Self> {
        let t = Self::to_origin(p);
        let qz = t.apply_z(q.z());
        if qz.norm() <= f64::EPSILON {
            return Err(GeomError::Coincident("reflection axis needs two distinct points"));
        }
        let r = Self::reflection_in_diameter(qz.arg());
        Ok(t.inverse().compose(&r).compose(&t))
    }

    pub fn is_reflection(&self) -> bool {
        self.reflect
    }

    pub(crate) fn apply_z(&self, z: Complex64) -> Complex64 {
        let w = if self.reflect { z.conj() } else { z };
        (self.a * w + self.b) / (self.c * w + self.d)
    }

    pub fn apply(&self, p: HPoint) -> HPoint {
        HPoint::from_complex(self.apply_z(p.z()))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let (a2, b2, c2, d2) = if self.reflect {
            (other.a.conj(), other.b.conj(), other.c.conj(), other.d.conj())
        } else {
            (other.a, other.b, other.c, other.d)
        };
        Isometry {
            a: self.a * a2 + self.b * c2,
            b: self.a * b2 + self.b * d2,
            c: self.c * a2 + self.d * c2,
            d: self.c * b2 + self.d * d2,
            reflect: self.reflect ^ other.reflect,
        }
        .normalized()
    }

    pub fn inverse(&self) -> Isometry {
        let (a, b, c, d) = (self.d, -self.b, -self.c, self.a);
        if self.reflect {
            Isometry {
                a: a.conj(),
                b: b.conj(),
                c: c.conj(),
                d: d.conj(),
                reflect: true,
            }
        } else {
            Isometry { a, b, c, d, reflect: false }
        }
        .normalized()
    }

    fn normalized(self) -> Self {
        let det = self.a * self.d - self.b * self.c;
        let s = det.sqrt();
        if s.norm() == 0.0 || !s.norm().is_finite() {
            return self;
        }
        Isometry {
            a: self.a / s,
            b: self.b / s,
            c: self.c / s,
            d: self.d / s,
            reflect: self.reflect,
        }
    }

    /// Largest coefficient-wise deviation from `other`, up to the projective
    /// sign ambiguity of the matrix representation.
    pub fn distance_to(&self, other: &Isometry) -> f64 {
        if self.reflect != other.reflect {
            return f64::INFINITY;
        }
        let diff = |s: f64| {
            [
                (self.a - other.a * s).norm(),
                (self.b - other.b * s).norm(),
                (self.c - other.c * s).norm(),
                (self.d - other.d * s).norm(),
            ]
            .into_iter()
            .fold(0.0, f64::max)
        };
        diff(1.0).min(diff(-1.0))
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn pt(x: f64, y: f64) -> HPoint {
        HPoint::new(x, y).unwrap()
    }

    #[test]
    fn origin_distance_is_zero() {
        assert_eq!(dist(HPoint::ORIGIN, HPoint::ORIGIN), 0.0);
    }

    #[test]
    fn radial_distance_matches_atanh_and_hyperboloid() {
        let d = dist(HPoint::ORIGIN, pt(0.5, 0.0));
        assert!((d - 2.0 * 0.5f64.atanh()).abs() < 1e-15);
        assert!((d - 1.0986122886681098).abs() < 1e-15);
        let x = HPoint::ORIGIN.to_hyperboloid();
        let y = pt(0.5, 0.0).to_hyperboloid();
        let inner = x[0] * y[0] - x[1] * y[1] - x[2] * y[2];
        assert!((inner.acosh() - d).abs() < 1e-12);
    }

    #[test]
    fn rejects_points_off_the_disk() {
        assert!(matches!(HPoint::new(1.0, 0.0), Err(GeomError::OutsideDisk { .. })));
        assert!(HPoint::new(0.8, 0.7).is_err());
        assert!(HPoint::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn klein_map_of_half() {
        let k = pt(0.5, 0.0).to_klein();
        assert!((k.x - 0.8).abs() < 1e-15 && k.y == 0.0);
        let back = k.to_disk().unwrap();
        assert!((back.x() - 0.5).abs() < 1e-15);
        assert_eq!(HPoint::ORIGIN.to_klein(), KleinPoint { x: 0.0, y: 0.0 });
    }

    #[test]
    fn right_angle_at_origin() {
        let a = angle_at(HPoint::ORIGIN, pt(0.3, 0.0), pt(0.0, 0.3)).unwrap();
        assert!((a - PI / 2.0).abs() < 1e-15);
        let b = angle_at(HPoint::ORIGIN, pt(0.0, 0.3), pt(0.3, 0.0)).unwrap();
        assert!((a + b - TAU).abs() < 1e-12);
    }

    #[test]
    fn angle_rejects_coincident_points() {
        let v = pt(0.1, 0.2);
        assert!(angle_at(v, v, pt(0.0, 0.0)).is_err());
    }

    #[test]
    fn reflection_fixes_its_diameter_and_is_an_involution() {
        let r = Isometry::reflection_in_diameter(0.7);
        let p = HPoint::from_disk_polar(0.6, 0.7).unwrap();
        let q = r.apply(p);
        assert!((q.x() - p.x()).abs() < 1e-15 && (q.y() - p.y()).abs() < 1e-15);
        let rr = r.compose(&r);
        assert!(rr.distance_to(&Isometry::identity()) < EPS_GEOM);
    }

    #[test]
    fn geodesic_reflection_fixes_axis_points() {
        let (p, q) = (pt(0.2, 0.3), pt(-0.4, 0.1));
        let r = Isometry::reflection_in_geodesic(p, q).unwrap();
        for s in [p, q, GeodesicSegment::new(p, q).point_at(0.37)] {
            assert!(dist(r.apply(s), s) < 1e-12);
        }
        let off = pt(0.0, -0.5);
        assert!(dist(r.apply(off), off) > 0.1);
        assert!(r.compose(&r).distance_to(&Isometry::identity()) < EPS_GEOM);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let g = Isometry::rotation(1.1)
            .compose(&Isometry::from_origin(pt(0.3, -0.2)))
            .compose(&Isometry::reflection_in_diameter(0.4));
        assert!(g.compose(&g.inverse()).distance_to(&Isometry::identity()) < 1e-12);
        assert!(g.inverse().compose(&g).distance_to(&Isometry::identity()) < 1e-12);
    }

    #[test]
    fn point_at_splits_length() {
        let s = GeodesicSegment::new(pt(0.1, 0.4), pt(-0.5, -0.2));
        let m = s.point_at(0.25);
        assert!((dist(s.a, m) - 0.25 * s.length()).abs() < 1e-12);
        assert!((dist(m, s.b) - 0.75 * s.length()).abs() < 1e-12);
    }

    #[test]
    fn chords_cross() {
        let s = GeodesicSegment::new(pt(-0.5, 0.0), pt(0.5, 0.0));
        let t = GeodesicSegment::new(pt(0.0, -0.5), pt(0.0, 0.5));
        let u = GeodesicSegment::new(pt(0.6, 0.6), pt(0.1, 0.6));
        assert!(s.intersects(&t));
        assert!(!s.intersects(&u));
    }
}
