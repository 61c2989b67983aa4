//! Gauss-Bonnet, vertex-angle, vertex-degree, concave-angle and
//! total-perimeter audits over a tiling.

use std::f64::consts::{PI, TAU};

use serde_json::json;

use crate::audit::{AuditReport, SlackTracker};
use crate::error::{GeomError, GeomResult};
use crate::polygons::{a_k, p_k, Polygon, EPS_ANGLE, TILE_ANGLE};
use crate::tilings::graph::TilingGraph;

/// Vertex angle sums within this of `2π` count as flat.
pub const ANGLE_SUM_TOL: f64 = 1e-8;

/// `(k − 6)π/3`, defined for every real `k`.
fn a_k_ext(k: f64) -> f64 {
    (k - 6.0) * PI / 3.0
}

/// Total area against `−2πχ` (closed surfaces) and annotated areas against
/// lifts, face by face.
pub fn gauss_bonnet_audit(t: &TilingGraph) -> GeomResult<AuditReport> {
    let chi = t.euler_characteristic()?;
    let n = t.faces.len();
    let tol = (n.max(1) as f64) * crate::hyperbolic::EPS_GEOM;
    let mut report = AuditReport::new("gauss_bonnet").detail("chi", chi).detail("tol", tol);
    let mut tracker = SlackTracker::default();
    let mut total = 0.0;
    let mut max_face_residual: f64 = 0.0;
    for f in &t.faces {
        if f.area.is_none() && f.lift.is_none() {
            return Err(GeomError::domain(format!(
                "face {} has neither an area annotation nor a lift",
                f.id
            )));
        }
        let area = t.face_area(f)?;
        total += area;
        if let (Some(a), Some(_)) = (f.area, &f.lift) {
            let lifted = t.face_polygon(f)?.area_gauss_bonnet()?;
            let r = (a - lifted).abs();
            max_face_residual = max_face_residual.max(r);
            tracker.record(tol - r, || json!({ "kind": "face", "face": f.id, "residual": r }));
        }
    }
    report.set_detail("total_area", total);
    report.set_detail("max_face_residual", max_face_residual);
    if t.is_closed() {
        let expected = -2.0 * PI * chi as f64;
        let r = (total - expected).abs();
        report.set_detail("expected_area", expected);
        report.set_detail("residual", r);
        tracker.record(tol - r, || json!({ "kind": "total", "residual": r }));
        if let Some(g) = t.meta.genus {
            let ok = 2 - 2 * g as i64 == chi;
            report.set_detail("genus_matches_chi", ok);
            if !ok {
                tracker.record(-1.0, || json!({ "kind": "genus", "genus": g, "chi": chi }));
            }
        }
    }
    Ok(tracker.finish(report))
}

/// Sum of lifted corner angles at every vertex whose incident faces are all
/// lifted (interior vertices only for open patches), against `2π`.
pub fn angle_sum_audit(t: &TilingGraph) -> GeomResult<AuditReport> {
    t.check_incidence()?;
    let candidates: Vec<usize> = if t.is_closed() {
        t.vertices.iter().map(|v| v.id).collect()
    } else {
        t.interior_vertices()
    };
    let mut sums: std::collections::HashMap<usize, (f64, bool)> =
        candidates.iter().map(|&v| (v, (0.0, true))).collect();
    for f in &t.faces {
        let corners = t.corners(f);
        let angles = match &f.lift {
            Some(_) => Some(t.face_polygon(f)?.interior_angles()?),
            None => None,
        };
        for (i, v) in corners.into_iter().enumerate() {
            if let Some(entry) = sums.get_mut(&v) {
                match &angles {
                    Some(a) => entry.0 += a[i],
                    None => entry.1 = false,
                }
            }
        }
    }
    let mut ids: Vec<_> = sums.into_iter().filter(|(_, (_, full))| *full).collect();
    ids.sort_unstable_by_key(|(v, _)| *v);
    let mut tracker = SlackTracker::default();
    let mut max_residual: f64 = 0.0;
    for (v, (sum, _)) in &ids {
        let r = (sum - TAU).abs();
        max_residual = max_residual.max(r);
        tracker.record(ANGLE_SUM_TOL - r, || json!({ "vertex": v, "angle_sum": sum }));
    }
    let report = AuditReport::new("angle_sums")
        .detail("tol", ANGLE_SUM_TOL)
        .detail("vertices_checked", ids.len())
        .detail("max_residual", max_residual);
    Ok(tracker.finish(report))
}

/// Average number `v̄` of corners of degree at least 3 per face, against
/// `k`, with equality exactly when every vertex has degree 2 or 3.
///
/// The surface area must be `N·A_k`. On a closed surface each face with
/// `v` such corners contributes `1 − v/6` to `χ` when all degrees are at
/// most 3 and more otherwise, and Gauss-Bonnet turns `χ ≤ Σ(1 − v/6)` into
/// `v̄ ≤ k`.
///
/// On a closed surface the audit passes only in the equality case `v̄ = k`,
/// and fails if the bound, the equality condition or the Euler sum breaks.
pub fn degree_audit(t: &TilingGraph, k: f64) -> GeomResult<AuditReport> {
    t.validate()?;
    let n = t.faces.len() as f64;
    let area = if t.is_closed() { t.topological_area()? } else { t.surface_area()? };
    let ak = a_k_ext(k);
    if !(k >= 6.0) || (area / n - ak).abs() > 1e-8 * ak.abs().max(1.0) {
        return Err(GeomError::domain(format!(
            "average face area {} is inconsistent with k = {k} (A_k = {ak})",
            area / n
        )));
    }
    let deg = t.effective_degrees();
    let mut big_corners = 0usize;
    let mut euler_sum = 0.0;
    for f in &t.faces {
        let v = t.corners(f).iter().filter(|c| deg[*c] >= 3).count();
        big_corners += v;
        euler_sum += 1.0 - v as f64 / 6.0;
    }
    let vbar = big_corners as f64 / n;
    let max_degree = deg.values().copied().max().unwrap_or(0);
    let low_degrees = max_degree <= 3;
    let equality = (vbar - k).abs() <= 1e-9;
    let chi = t.euler_characteristic()?;

    let mut report = AuditReport::new("vertex_degree")
        .detail("k", k)
        .detail("vbar", vbar)
        .detail("corners_of_degree_3_or_more", big_corners)
        .detail("faces", t.faces.len())
        .detail("equality", equality)
        .detail("all_degrees_2_or_3", low_degrees)
        .detail("max_degree", max_degree)
        .detail("euler_contribution_sum", euler_sum)
        .detail("chi", chi);
    report.min_slack = k - vbar;
    if t.is_closed() {
        if vbar > k + 1e-9 {
            report.fail(json!({ "kind": "bound", "vbar": vbar, "k": k }));
        } else if !equality {
            report.fail(json!({ "kind": "strict", "vbar": vbar, "k": k, "all_degrees_2_or_3": low_degrees }));
        }
        if equality != low_degrees {
            report.fail(json!({ "kind": "equality_condition", "equality": equality, "all_degrees_2_or_3": low_degrees }));
        }
        if low_degrees && (euler_sum - chi as f64).abs() > 1e-9 {
            report.fail(json!({ "kind": "euler_contribution", "sum": euler_sum, "chi": chi }));
        }
    }
    Ok(report)
}

/// `ℓ₁ + 2ℓ₂ ≥ n − k` for a face, with `ℓ₁` angles equal to `π` and `ℓ₂`
/// angles above `π`. With corner degrees supplied, also checks the equality
/// condition: degrees 2 or 3 throughout and degree 2 at every concave angle.
pub fn concave_angle_audit(face: &Polygon, k: f64, degrees: Option<&[usize]>) -> GeomResult<AuditReport> {
    let poly = face.to_positive();
    let angles = poly.interior_angles()?;
    let n = angles.len();
    if let Some(d) = degrees {
        if d.len() != n {
            return Err(GeomError::domain(format!(
                "{} corner degrees supplied for a {n}-gon",
                d.len()
            )));
        }
    }
    let l1 = angles.iter().filter(|a| (*a - PI).abs() <= EPS_ANGLE).count();
    let l2 = angles.iter().filter(|&&a| a > PI + EPS_ANGLE).count();
    let lhs = (l1 + 2 * l2) as f64;
    let rhs = n as f64 - k;
    let slack = lhs - rhs;
    let equality = slack.abs() <= 1e-9;
    let mut report = AuditReport::new("concave_angles")
        .detail("n", n)
        .detail("k", k)
        .detail("l1", l1)
        .detail("l2", l2)
        .detail("equality", equality)
        .detail("area", poly.area_gauss_bonnet()?);
    report.min_slack = slack;
    if slack < -1e-9 {
        report.fail(json!({ "lhs": lhs, "rhs": rhs }));
    }
    if let Some(d) = degrees {
        let cert = d.iter().all(|&x| x == 2 || x == 3)
            && angles
                .iter()
                .zip(d)
                .all(|(&a, &x)| a <= PI + EPS_ANGLE || x == 2);
        report.set_detail("equality_certificate", cert);
    }
    Ok(report)
}

/// For a tiling by tiles of common perimeter `P` and total area `A`:
/// `P·A/A_m ≥ P_m·A/A_m ≥ P_k·A/A_k` for `6 < m ≤ k`.
pub fn total_perimeter_compare(t: &TilingGraph, k: f64, m: f64) -> GeomResult<AuditReport> {
    if !(m > 6.0) {
        return Err(GeomError::domain(format!("m = {m} must exceed 6")));
    }
    let (am, ak) = (a_k(m)?, a_k(k)?);
    if am > ak {
        return Err(GeomError::domain(format!("A_m = {am} exceeds A_k = {ak}")));
    }
    let perims: Vec<f64> = t.faces.iter().map(|f| t.face_perimeter(f)).collect::<GeomResult<_>>()?;
    let p = perims.iter().cloned().fold(f64::MIN, f64::max);
    let spread = p - perims.iter().cloned().fold(f64::MAX, f64::min);
    let area = if t.is_closed() { t.topological_area()? } else { t.surface_area()? };
    let (pm, pk) = (p_k(m)?, p_k(k)?);
    let lhs = p * area / am;
    let mid = pm * area / am;
    let rhs = pk * area / ak;
    let tol = 1e-9 * lhs.abs().max(1.0);

    let regular = (m - k).abs() < 1e-12
        && t.faces.iter().all(|f| {
            t.face_polygon(f)
                .and_then(|q| q.reduce_equivalent())
                .map(|q| {
                    q.len() as f64 == k
                        && q.interior_angles()
                            .map(|a| a.iter().all(|x| (x - TILE_ANGLE).abs() < 1e-8))
                            .unwrap_or(false)
                        && (q.perimeter() - pk).abs() < 1e-8
                })
                .unwrap_or(false)
        });

    let mut report = AuditReport::new("total_perimeter")
        .detail("k", k)
        .detail("m", m)
        .detail("tile_perimeter", p)
        .detail("tile_perimeter_spread", spread)
        .detail("total_area", area)
        .detail("average_area", area / t.faces.len() as f64)
        .detail("lhs", lhs)
        .detail("middle", mid)
        .detail("rhs", rhs)
        .detail("slack_tile_vs_regular", lhs - mid)
        .detail("slack_ratio", mid - rhs)
        .detail("all_tiles_regular_k", regular);
    report.min_slack = (lhs - mid).min(mid - rhs);
    if lhs - mid < -tol {
        report.fail(json!({ "link": "tile_vs_regular", "slack": lhs - mid }));
    }
    if mid - rhs < -tol {
        report.fail(json!({ "link": "ratio", "slack": mid - rhs }));
    }
    let tight = (lhs - rhs).abs() <= tol;
    report.set_detail("equality", tight);
    if tight != regular {
        report.fail(json!({ "link": "equality_condition", "equality": tight, "regular": regular }));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygons::realize_regular;

    #[test]
    fn concave_heptagon_equality() {
        let h = realize_regular(7, TILE_ANGLE).unwrap();
        let r = concave_angle_audit(&h, 7.0, Some(&[3; 7])).unwrap();
        assert!(r.passed);
        assert_eq!(r.details["l1"], 0);
        assert_eq!(r.details["equality"], true);
        assert_eq!(r.details["equality_certificate"], true);
    }

    #[test]
    fn convex_nine_gon_fails() {
        // a convex 9-gon with the area of the regular heptagon
        let theta = (7.0 * PI - PI / 3.0) / 9.0;
        let p = realize_regular(9, theta).unwrap();
        assert!((p.area_gauss_bonnet().unwrap() - PI / 3.0).abs() < 1e-12);
        let r = concave_angle_audit(&p, 7.0, None).unwrap();
        assert!(!r.passed);
        assert_eq!(r.min_slack, -2.0);
    }

    #[test]
    fn straight_angles_rescue_nine_gon() {
        // two straight angles inserted into a heptagon make a 9-gon
        let h = realize_regular(7, TILE_ANGLE).unwrap();
        let p = h.with_midpoint(0).with_midpoint(3);
        assert_eq!(p.len(), 9);
        let r = concave_angle_audit(&p, 7.0, None).unwrap();
        assert!(r.passed);
        assert_eq!(r.details["l1"], 2);
        assert_eq!(r.details["equality"], true);
    }

    #[test]
    fn klein_quartic_degree_equality() {
        let t = crate::tilings::klein_quartic_fixture().unwrap();
        let r = degree_audit(&t, 7.0).unwrap();
        assert!(r.passed, "{:?}", r.witness);
        assert_eq!(r.details["vbar"], 7.0);
        assert_eq!(r.details["equality"], true);
        assert!((r.details["euler_contribution_sum"].as_f64().unwrap() + 4.0).abs() < 1e-12);
    }

    #[test]
    fn degree4_variant_is_strict() {
        let t = crate::tilings::fixture("klein-quartic-degree4").unwrap();
        let r = degree_audit(&t, 7.0).unwrap();
        assert!(!r.passed);
        assert_eq!(r.witness.as_ref().unwrap()["kind"], "strict");
        assert_eq!(r.details["all_degrees_2_or_3"], false);
        // 166 corners of degree ≥ 3 over 24 faces
        assert!((r.details["vbar"].as_f64().unwrap() - 166.0 / 24.0).abs() < 1e-15);
    }

    #[test]
    fn gauss_bonnet_flags_area_annotation() {
        let good = crate::tilings::klein_quartic_fixture().unwrap();
        assert!(gauss_bonnet_audit(&good).unwrap().passed);
        let bad = crate::tilings::fixture("klein-quartic-area").unwrap();
        assert!(!gauss_bonnet_audit(&bad).unwrap().passed);
        assert!(angle_sum_audit(&bad).unwrap().passed);
    }
}
