//! Hull-cover audit: convex hulls of the degree-≥3 corners of each tile and
//! the chain of area inequalities bounding the average tile area.
//!
//! With `A(n)` the area of the regular `n`-gon of perimeter `P_k` (zero for
//! `n ≤ 2`), the links are
//!
//! ```text
//! area(M) ≤ Σ area(Qᵢ*)           cover
//!         ≤ Σ A(nᵢ)               regular polygons are best
//!         ≤ Σ A(nᵢ′)              doubling substitution for nᵢ ∈ {0, 1}
//!         ≤ N·A(mean nᵢ′)         Jensen (A concave on [2, ∞))
//!         ≤ N·A(k)                monotonicity, mean nᵢ′ ≤ k
//!         = N·A_k
//! ```
//!
//! Each tile's hull has perimeter at most that of the tile, which is assumed
//! to be at most `P_k`.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{GeomError, GeomResult};
use crate::hyperbolic::HPoint;
use crate::isoperimetry::doubling_slack;
use crate::polygons::{a_k, area_fixed_perimeter, hull_vertices, p_k, Polygon};
use crate::tilings::graph::TilingGraph;

/// Chain links are tight below this slack.
pub const CHAIN_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Every link tight: the equality case.
    Extremal,
    /// Every link holds and at least one is strict.
    Strict,
    /// Some tile has perimeter above `P_k`; the chain is not evaluated.
    HypothesisViolated,
    /// A link fails, which means the input is inconsistent.
    ChainViolated,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceHull {
    pub face: usize,
    pub hull: Vec<HPoint>,
    /// Hull side count `nᵢ`.
    pub n: usize,
    pub degree3_corners: usize,
    pub hull_area: f64,
    pub hull_perimeter: f64,
    pub tile_perimeter: f64,
    pub tile_area: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainLink {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs − lhs` for a `≤` link.
    pub slack: f64,
    /// Independent check of the lemma behind the link.
    pub certificate: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Substitution {
    pub small_face: usize,
    pub small_n: usize,
    pub large_face: usize,
    pub large_n: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct HullCoverReport {
    pub check: &'static str,
    pub k: f64,
    pub perimeter_bound: f64,
    pub faces: Vec<FaceHull>,
    pub mean_n: f64,
    pub substitutions: Vec<Substitution>,
    pub links: Vec<ChainLink>,
    pub surface_area: f64,
    /// `N·A_k − area(M)`.
    pub conclusion_slack: f64,
    pub equality_certificate: bool,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub hypothesis_violations: Vec<Value>,
}

impl HullCoverReport {
    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Extremal | Verdict::Strict)
    }

    pub fn max_link_slack(&self) -> f64 {
        self.links.iter().map(|l| l.slack.abs()).fold(0.0, f64::max)
    }
}

/// Chain evaluation on the per-face data. `ns` are hull side counts,
/// `hull_areas` the hull areas, `surface_area` the area of the surface.
pub fn inequality_chain(
    surface_area: f64,
    hull_areas: &[f64],
    ns: &[usize],
    k: f64,
) -> GeomResult<(Vec<ChainLink>, Vec<Substitution>, f64)> {
    let big_p = p_k(k)?;
    let a = |n: f64| area_fixed_perimeter(n, big_p);
    let count = ns.len() as f64;

    let hull_total: f64 = hull_areas.iter().sum();
    let regular_total: f64 = ns.iter().map(|&n| a(n as f64)).sum::<GeomResult<f64>>()?;

    // replace 0 + A(n_j) by 2A(n_j/2), largest n_j > k first
    let mut values: Vec<f64> = ns.iter().map(|&n| n as f64).collect();
    let mut used = vec![false; ns.len()];
    let mut subs = Vec::new();
    let mut small: Vec<usize> = (0..ns.len()).filter(|&i| ns[i] <= 1).collect();
    small.sort_unstable();
    for i in small {
        let pick = (0..values.len())
            .filter(|&j| !used[j] && ns[j] > 1 && values[j] > k)
            .max_by(|&x, &y| values[x].total_cmp(&values[y]).then(y.cmp(&x)));
        let Some(j) = pick else { break };
        subs.push(Substitution {
            small_face: i,
            small_n: ns[i],
            large_face: j,
            large_n: values[j],
        });
        let half = values[j] / 2.0;
        values[i] = half;
        values[j] = half;
        used[i] = true;
        used[j] = true;
    }
    let substituted_total: f64 = values.iter().map(|&n| a(n)).sum::<GeomResult<f64>>()?;
    let mean = values.iter().sum::<f64>() / count;
    let jensen_total = count * a(mean)?;
    let monotone_total = count * a(k)?;
    let ak = a_k(k)?;

    let doubling_cert: Value = subs
        .iter()
        .map(|s| {
            let lemma = doubling_slack(k).map(|d| d.slack).unwrap_or(f64::NAN);
            let n = s.large_n;
            json!({ "n": n, "slack_2A(n/2)-A(n)": 2.0 * a(n / 2.0).unwrap_or(f64::NAN) - a(n).unwrap_or(f64::NAN), "lemma_slack": lemma })
        })
        .collect();
    let second_diff = {
        let h = 0.25;
        let m = mean.max(2.0 + h);
        a(m + h)? - 2.0 * a(m)? + a(m - h)?
    };

    let links = vec![
        ChainLink {
            name: "cover",
            lhs: surface_area,
            rhs: hull_total,
            slack: hull_total - surface_area,
            certificate: json!({ "hulls": hull_areas.len() }),
        },
        ChainLink {
            name: "regular_is_best",
            lhs: hull_total,
            rhs: regular_total,
            slack: regular_total - hull_total,
            certificate: json!({
                "per_face_min_slack": ns.iter().zip(hull_areas)
                    .map(|(&n, &h)| a(n as f64).map(|x| x - h).unwrap_or(f64::NAN))
                    .fold(f64::INFINITY, f64::min)
            }),
        },
        ChainLink {
            name: "doubling",
            lhs: regular_total,
            rhs: substituted_total,
            slack: substituted_total - regular_total,
            certificate: doubling_cert,
        },
        ChainLink {
            name: "jensen",
            lhs: substituted_total,
            rhs: jensen_total,
            slack: jensen_total - substituted_total,
            certificate: json!({ "second_difference_at_mean": second_diff }),
        },
        ChainLink {
            name: "monotone",
            lhs: jensen_total,
            rhs: monotone_total,
            slack: monotone_total - jensen_total,
            certificate: json!({ "mean_n": mean, "k": k, "first_difference": a(k)? - a(k - 0.25)? }),
        },
        ChainLink {
            name: "equality",
            lhs: monotone_total,
            rhs: count * ak,
            slack: count * ak - monotone_total,
            certificate: json!({ "A(k)": a(k)?, "A_k": ak }),
        },
    ];
    Ok((links, subs, mean))
}

/// Runs the audit on a tiling whose faces all carry lifts.
pub fn hull_cover_audit(t: &TilingGraph, k: f64) -> GeomResult<HullCoverReport> {
    t.validate()?;
    let big_p = p_k(k)?;
    let ak = a_k(k)?;
    let deg = t.effective_degrees();
    let chi = t.euler_characteristic()?;
    let hyperbolic_or_flat = chi <= 0;

    let mut faces = Vec::with_capacity(t.faces.len());
    let mut violations = Vec::new();
    for f in &t.faces {
        let poly = t.face_polygon(f)?;
        let pts: Vec<HPoint> = t
            .corners(f)
            .iter()
            .zip(poly.vertices())
            .filter(|(c, _)| deg[*c] >= 3)
            .map(|(_, &p)| p)
            .collect();
        if t.is_closed() && hyperbolic_or_flat && pts.len() < 2 {
            return Err(GeomError::Structural(format!(
                "face {} has {} vertices of degree at least 3; a tile of a surface with χ ≤ 0 needs two",
                f.id,
                pts.len()
            )));
        }
        let hull = hull_vertices(&pts);
        let (hull_area, hull_perimeter) = if hull.len() >= 3 {
            let h = Polygon::new(hull.clone())?;
            (h.area_gauss_bonnet()?, h.perimeter())
        } else if hull.len() == 2 {
            (0.0, 2.0 * hull[0].dist(hull[1]))
        } else {
            (0.0, 0.0)
        };
        let tile_perimeter = t.face_perimeter(f)?;
        if tile_perimeter > big_p + CHAIN_TOL {
            violations.push(json!({ "face": f.id, "perimeter": tile_perimeter, "P_k": big_p }));
        }
        faces.push(FaceHull {
            face: f.id,
            n: hull.len(),
            degree3_corners: pts.len(),
            hull,
            hull_area,
            hull_perimeter,
            tile_perimeter,
            tile_area: t.face_area(f)?,
        });
    }

    // Gauss-Bonnet fixes the area of a closed surface; annotations are
    // audited separately.
    let surface_area = if t.is_closed() { t.topological_area()? } else { t.surface_area()? };
    let count = faces.len() as f64;
    let conclusion_slack = count * ak - surface_area;
    let hull_areas: Vec<f64> = faces.iter().map(|f| f.hull_area).collect();
    let ns: Vec<usize> = faces.iter().map(|f| f.n).collect();
    let (links, substitutions, mean_n) = inequality_chain(surface_area, &hull_areas, &ns, k)?;

    let equality_certificate = faces
        .iter()
        .all(|f| (f.n as f64 - k).abs() < 1e-12 && (f.hull_area - ak).abs() < CHAIN_TOL);
    let verdict = if !violations.is_empty() {
        Verdict::HypothesisViolated
    } else if links.iter().any(|l| l.slack < -CHAIN_TOL) {
        Verdict::ChainViolated
    } else if links.iter().all(|l| l.slack.abs() < CHAIN_TOL) {
        Verdict::Extremal
    } else {
        Verdict::Strict
    };

    Ok(HullCoverReport {
        check: "hull_cover",
        k,
        perimeter_bound: big_p,
        faces,
        mean_n,
        substitutions,
        links,
        surface_area,
        conclusion_slack,
        equality_certificate,
        verdict,
        hypothesis_violations: violations,
    })
}

/// Smallest `k > 6` with `P_k ≥ perimeter`.
pub fn k_for_perimeter(perimeter: f64) -> GeomResult<f64> {
    if !(perimeter > 0.0) {
        return Err(GeomError::domain("perimeter must be positive"));
    }
    let (mut lo, mut hi) = (6.0, 7.0);
    while p_k(hi)? < perimeter {
        lo = hi;
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if p_k(mid)? < perimeter {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(hi)
}

/// `k` at which a tiling's largest tile perimeter equals `P_k`.
pub fn k_for_tiling(t: &TilingGraph) -> GeomResult<f64> {
    let p = t
        .faces
        .iter()
        .map(|f| t.face_perimeter(f))
        .collect::<GeomResult<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    k_for_perimeter(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jensen_strict_for_six_and_eight() {
        let big_p = p_k(7.0).unwrap();
        let a = |n: f64| area_fixed_perimeter(n, big_p).unwrap();
        let (links, subs, mean) = inequality_chain(a(6.0) + a(8.0), &[a(6.0), a(8.0)], &[6, 8], 7.0).unwrap();
        assert!(subs.is_empty());
        assert_eq!(mean, 7.0);
        let jensen = links.iter().find(|l| l.name == "jensen").unwrap();
        let oracle = 2.0 * a(7.0) - a(6.0) - a(8.0);
        assert!((jensen.slack - oracle).abs() < 1e-14);
        assert!(jensen.slack > 1e-3);
    }

    #[test]
    fn substitution_uses_largest_first() {
        let big_p = p_k(7.0).unwrap();
        let a = |n: f64| area_fixed_perimeter(n, big_p).unwrap();
        let ns = [0, 9, 12, 7];
        let hulls = [0.0, a(9.0), a(12.0), a(7.0)];
        let (links, subs, _) = inequality_chain(hulls.iter().sum(), &hulls, &ns, 7.0).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].large_face, 2);
        let d = links.iter().find(|l| l.name == "doubling").unwrap();
        assert!((d.slack - (2.0 * a(6.0) - a(12.0))).abs() < 1e-13);
        assert!(d.slack > 0.0);
    }

    #[test]
    fn substitution_runs_out() {
        let (_, subs, _) = inequality_chain(0.0, &[0.0, 0.0], &[1, 7], 7.0).unwrap();
        assert!(subs.is_empty());
    }

    #[test]
    fn k_inverse() {
        let k = k_for_perimeter(p_k(9.5).unwrap()).unwrap();
        assert!((k - 9.5).abs() < 1e-10);
    }

    #[test]
    fn klein_quartic_is_extremal() {
        let t = crate::tilings::klein_quartic_fixture().unwrap();
        let r = hull_cover_audit(&t, 7.0).unwrap();
        assert_eq!(r.verdict, Verdict::Extremal);
        assert!(r.equality_certificate);
        assert!(r.max_link_slack() < CHAIN_TOL);
        assert!(r.faces.iter().all(|f| f.n == 7));
    }

    #[test]
    fn area_annotations_do_not_enter_the_chain() {
        let t = crate::tilings::fixture("klein-quartic-area").unwrap();
        assert_eq!(hull_cover_audit(&t, 7.0).unwrap().verdict, Verdict::Extremal);
    }
}

