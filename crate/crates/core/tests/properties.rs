//! Property tests for geometric and numerical invariants.

use std::f64::consts::PI;

use hypertile::cli::Grid;
use hypertile::hyperbolic::from_klein;
use hypertile::isoperimetry::min_perimeter_polygon;
use hypertile::polygons::{
    a_k, angle_from_perimeter, convex_hull, heron_area, is_convex, p_k, regular_perimeter, KSpec, Polygon,
    RegularSpec,
};
use hypertile::tilings::{generate_patch, TilingGraph};
use hypertile::{HPoint, Isometry};
use proptest::prelude::*;

fn point(max_r: f64) -> impl Strategy<Value = HPoint> {
    (0.0..max_r, 0.0..2.0 * PI).prop_map(|(r, phi)| HPoint::from_disk_polar(r, phi).unwrap())
}

fn isometry() -> impl Strategy<Value = Isometry> {
    (point(0.9), 0.0..2.0 * PI, any::<bool>()).prop_map(|(p, phi, flip)| {
        let g = Isometry::from_origin(p).compose(&Isometry::rotation(phi));
        if flip {
            g.compose(&Isometry::reflection_in_diameter(phi / 2.0))
        } else {
            g
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distance_is_symmetric(p in point(0.95), q in point(0.95)) {
        let (a, b) = (p.dist(q), q.dist(p));
        prop_assert!((a - b).abs() <= 1e-12 * a.max(1.0));
    }

    #[test]
    fn triangle_inequality(p in point(0.95), q in point(0.95), r in point(0.95)) {
        prop_assert!(p.dist(r) <= p.dist(q) + q.dist(r) + 1e-9);
    }

    #[test]
    fn isometries_preserve_distance(g in isometry(), p in point(0.8), q in point(0.8)) {
        let (d, e) = (p.dist(q), g.apply(p).dist(g.apply(q)));
        prop_assert!((d - e).abs() < 1e-8 * d.max(1.0), "{} vs {}", d, e);
    }

    #[test]
    fn inverse_undoes(g in isometry(), p in point(0.8)) {
        let back = g.inverse().apply(g.apply(p));
        prop_assert!(back.dist(p) < 1e-8);
    }

    #[test]
    fn klein_round_trip(p in point(0.99)) {
        let back = from_klein(p.to_klein()).unwrap();
        prop_assert!((back.x() - p.x()).abs() < 1e-12 && (back.y() - p.y()).abs() < 1e-12);
    }

    #[test]
    fn reflection_is_involution(a in point(0.8), b in point(0.8), p in point(0.8)) {
        prop_assume!(a.dist(b) > 1e-3);
        let s = Isometry::reflection_in_geodesic(a, b).unwrap();
        prop_assert!(s.is_reflection());
        prop_assert!(s.apply(s.apply(p)).dist(p) < 1e-8);
        prop_assert!(s.apply(a).dist(a) < 1e-8);
    }

    #[test]
    fn tile_formulas_agree(k in 6.05f64..200.0) {
        let spec = KSpec::new(k).unwrap();
        prop_assert!((spec.area() - a_k(k).unwrap()).abs() < 1e-12);
        let back = KSpec::from_area(spec.area()).unwrap();
        prop_assert!((back.k() - k).abs() < 1e-8 * k);
        let p = p_k(k).unwrap();
        let theta = angle_from_perimeter(k, p).unwrap();
        prop_assert!((theta - 2.0 * PI / 3.0).abs() < 1e-9);
    }

    #[test]
    fn regular_perimeter_round_trip(n in 3usize..30, frac in 0.05f64..0.95) {
        let nf = n as f64;
        let max_area = (nf - 2.0) * PI;
        let spec = RegularSpec::with_area(nf, frac * max_area).unwrap();
        let per = regular_perimeter(spec).unwrap();
        let theta = angle_from_perimeter(nf, per).unwrap();
        prop_assert!((theta - spec.theta).abs() < 1e-8);
    }

    #[test]
    fn heron_matches_angle_defect(a in point(0.8), b in point(0.8), c in point(0.8)) {
        let tri = Polygon::new(vec![a, b, c]);
        prop_assume!(tri.is_ok());
        let tri = tri.unwrap();
        let defect = tri.area_gauss_bonnet().unwrap();
        prop_assume!(defect > 1e-6);
        let s = tri.side_lengths();
        let h = heron_area(s[0], s[1], s[2]).unwrap();
        prop_assert!((h - defect).abs() < 1e-7 * defect.max(1.0), "{} vs {}", h, defect);
    }

    #[test]
    fn hull_is_convex_and_contains_points(pts in prop::collection::vec(point(0.9), 3..20)) {
        let hull = convex_hull(&pts);
        prop_assume!(hull.is_ok());
        let hull = hull.unwrap();
        prop_assert!(is_convex(&hull, 1e-9).unwrap());
        for p in &pts {
            let on_hull = hull.vertices().iter().any(|v| v.dist(*p) < 1e-9);
            prop_assert!(on_hull || hull.contains(*p));
        }
    }

    #[test]
    fn grid_parses_ordered_triples(lo in -50.0f64..50.0, span in 0.01f64..50.0, step in 0.001f64..5.0) {
        let g: Grid = format!("{}:{}:{}", lo, lo + span, step).parse().unwrap();
        prop_assert_eq!(g.lo, lo);
        prop_assert_eq!(g.step, step);
        let reversed = format!("{}:{}:{}", lo + span, lo, step);
        let negative = format!("{}:{}:{}", lo, lo + span, -step);
        prop_assert!(reversed.parse::<Grid>().is_err());
        prop_assert!(negative.parse::<Grid>().is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn optimizer_never_beats_regular(n in 3usize..7, frac in 0.1f64..0.6, seed in 0u64..1000) {
        let area = frac * (n as f64 - 2.0) * PI;
        let r = min_perimeter_polygon(n, area, seed).unwrap();
        prop_assert!(r.perimeter_gap >= -1e-9, "gap {}", r.perimeter_gap);
        prop_assert!((r.area - area).abs() < 1e-9);
    }

    #[test]
    fn patch_json_round_trips(k in 7usize..12, g in isometry()) {
        let mut t = generate_patch(k, 1).unwrap();
        for f in &mut t.faces {
            if let Some(lift) = f.lift.as_mut() {
                for p in lift.iter_mut() {
                    *p = g.apply(*p);
                }
            }
        }
        let s = t.to_json();
        let back = TilingGraph::from_json(&s).unwrap();
        prop_assert_eq!(back.to_json(), s);
    }
}
