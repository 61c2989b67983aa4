//! Grid verifications of the one-parameter inequalities: isosceles
//! optimality, monotonicity of the regular perimeter in `n`, concavity and
//! doubling of `A(n)` at fixed perimeter, and the perimeter-to-area ratio.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_6, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::audit::{AuditReport, SlackTracker};
use crate::error::{GeomError, GeomResult};
use crate::isoperimetry::optimize::regular_perimeter_for_area;
use crate::polygons::{a_k, area_fixed_perimeter, heron_area, p_k};

/// Inclusive grid `lo, lo + step, …` up to `hi`.
pub fn grid(lo: f64, hi: f64, step: f64) -> GeomResult<Vec<f64>> {
    if !(step > 0.0) || !(hi >= lo) || !lo.is_finite() || !hi.is_finite() {
        return Err(GeomError::domain(format!(
            "invalid grid {lo}:{hi}:{step}"
        )));
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize;
    Ok((0..=count).map(|i| lo + i as f64 * step).collect())
}

/// Triangles with fixed base `z` and fixed `x + y = 2c`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TriangleFamily {
    pub z: f64,
    pub c: f64,
    /// `cosh z`
    pub m: f64,
}

impl TriangleFamily {
    pub fn new(z: f64, perimeter: f64) -> GeomResult<Self> {
        if !(z > 0.0) || !(perimeter > 2.0 * z) {
            return Err(GeomError::domain(format!(
                "infeasible base: need 0 < 2z < perimeter, got z = {z}, perimeter = {perimeter}"
            )));
        }
        Ok(TriangleFamily {
            z,
            c: (perimeter - z) / 2.0,
            m: z.cosh(),
        })
    }

    /// `F(x) = 2m cosh x cosh(2c−x) − cosh²x − cosh²(2c−x)`.
    pub fn f(&self, x: f64) -> f64 {
        let (a, b) = (x.cosh(), (2.0 * self.c - x).cosh());
        2.0 * self.m * a * b - a * a - b * b
    }

    /// `F′(x) = 4(cosh 2c − m) sinh(c−x) cosh(c−x)`.
    pub fn df(&self, x: f64) -> f64 {
        let d = self.c - x;
        4.0 * ((2.0 * self.c).cosh() - self.m) * d.sinh() * d.cosh()
    }

    /// Open interval of admissible `x` (triangle inequality `|x − y| < z`).
    pub fn range(&self) -> (f64, f64) {
        (self.c - self.z / 2.0, self.c + self.z / 2.0)
    }

    pub fn area(&self, x: f64) -> GeomResult<f64> {
        heron_area(x, 2.0 * self.c - x, self.z)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoscelesScan {
    pub family: TriangleFamily,
    pub x_star: f64,
    pub area_max: f64,
    pub spacing: f64,
    /// Area strictly increases on grid points below `c` and strictly
    /// decreases above it.
    pub unimodal: bool,
}

/// Grid maximizer of the area over the admissible side lengths `x`, using
/// `grid` cell midpoints.
pub fn isosceles_scan(z: f64, perimeter: f64, grid: usize) -> GeomResult<IsoscelesScan> {
    let family = TriangleFamily::new(z, perimeter)?;
    if grid < 2 {
        return Err(GeomError::domain("grid needs at least 2 points"));
    }
    let (lo, hi) = family.range();
    let h = (hi - lo) / grid as f64;
    let mut best = (f64::NEG_INFINITY, lo);
    let mut prev: Option<(f64, f64)> = None;
    let mut unimodal = true;
    for i in 0..grid {
        let x = lo + (i as f64 + 0.5) * h;
        let a = family.area(x)?;
        if a > best.0 {
            best = (a, x);
        }
        if let Some((px, pa)) = prev {
            if x < family.c && !(a > pa) || px > family.c && !(a < pa) {
                unimodal = false;
            }
        }
        prev = Some((x, a));
    }
    Ok(IsoscelesScan {
        family,
        x_star: best.1,
        area_max: best.0,
        spacing: h,
        unimodal,
    })
}

/// Isosceles scans over `pairs` seeded `(z, P)` pairs with `points` grid
/// cells each. The slack is `2h − |x* − c|` for cell width `h`.
pub fn verify_isosceles(pairs: usize, points: usize, seed: u64) -> GeomResult<AuditReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tracker = SlackTracker::default();
    let mut all_unimodal = true;
    for i in 0..pairs {
        let z = rng.gen_range(0.05..3.0);
        let perimeter = 2.0 * z + rng.gen_range(0.05..8.0);
        let scan = isosceles_scan(z, perimeter, points)?;
        all_unimodal &= scan.unimodal;
        let offset = (scan.x_star - scan.family.c).abs();
        tracker.record(2.0 * scan.spacing - offset, || {
            json!({ "pair": i, "z": z, "P": perimeter, "x_star": scan.x_star, "c": scan.family.c })
        });
    }
    let report = AuditReport::new("isosceles")
        .detail("pairs", pairs)
        .detail("points", points)
        .detail("seed", seed)
        .detail("unimodal", all_unimodal);
    Ok(tracker.finish(report))
}

/// `P(n) > P(n+1)` at fixed area for every `n` in `3..n_max` with
/// `(n−2)π > area`.
pub fn verify_regular_monotone(area: f64, n_max: usize) -> GeomResult<AuditReport> {
    if !(area > 0.0) {
        return Err(GeomError::domain(format!("area {area} must be positive")));
    }
    let mut tracker = SlackTracker::default();
    let first = (3..=n_max).find(|&n| (n as f64 - 2.0) * PI > area);
    if let Some(first) = first {
        let mut prev = regular_perimeter_for_area(first as f64, area)?;
        for n in first..n_max {
            let next = regular_perimeter_for_area((n + 1) as f64, area)?;
            tracker.record(prev - next, || json!({ "n": n, "P(n)": prev, "P(n+1)": next }));
            prev = next;
        }
    }
    let report = AuditReport::new("regular_monotone")
        .detail("area", area)
        .detail("n_max", n_max)
        .detail("n_min", first.unwrap_or(0));
    Ok(tracker.finish(report))
}

/// First differences of `A(n)` positive and second differences negative on
/// the grid at perimeter `P`, plus continuity at `n = 2`.
pub fn verify_concavity(perimeter: f64, lo: f64, hi: f64, step: f64) -> GeomResult<AuditReport> {
    if !(perimeter > 0.0) {
        return Err(GeomError::domain(format!("perimeter {perimeter} must be positive")));
    }
    if !(lo >= 2.0 && hi > lo) {
        return Err(GeomError::domain("need 2 ≤ n_lo < n_hi"));
    }
    let ns = grid(lo, hi, step)?;
    let a: Vec<f64> = ns
        .iter()
        .map(|&n| area_fixed_perimeter(n, perimeter))
        .collect::<GeomResult<_>>()?;

    let mut tracker = SlackTracker::default();
    let mut min_first = f64::INFINITY;
    let mut max_second = f64::NEG_INFINITY;
    for i in 0..a.len() - 1 {
        let d1 = a[i + 1] - a[i];
        min_first = min_first.min(d1);
        tracker.record(d1, || json!({ "kind": "first_difference", "n": ns[i], "value": d1 }));
        if i > 0 {
            let d2 = a[i + 1] - 2.0 * a[i] + a[i - 1];
            max_second = max_second.max(d2);
            tracker.record(-d2, || json!({ "kind": "second_difference", "n": ns[i], "value": d2 }));
        }
    }

    let eps = 1e-6;
    let jump = area_fixed_perimeter(2.0 + eps, perimeter)?
        .abs()
        .max(area_fixed_perimeter(2.0 - eps, perimeter)?.abs());
    let continuity_tol = 1e-5;
    let mut report = AuditReport::new("concavity")
        .with_grid(lo, hi, step)
        .detail("perimeter", perimeter)
        .detail("min_first_difference", min_first)
        .detail("max_second_difference", max_second)
        .detail("continuity_at_2", jump)
        .detail("continuity_tol", continuity_tol);
    if !(jump < continuity_tol) {
        report.fail(json!({ "kind": "continuity_at_2", "value": jump }));
    }
    let passed = report.passed;
    let mut report = tracker.finish(report);
    report.passed &= passed;
    Ok(report)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct DoublingSlack {
    pub k: f64,
    pub perimeter: f64,
    pub area_k: f64,
    pub area_half: f64,
    /// `2A(k/2) − A(k)`
    pub slack: f64,
}

/// Lemma slack `2A(k/2) − A(k)` at perimeter `P_k`.
pub fn doubling_slack(k: f64) -> GeomResult<DoublingSlack> {
    let perimeter = p_k(k)?;
    let area_k = area_fixed_perimeter(k, perimeter)?;
    let area_half = area_fixed_perimeter(k / 2.0, perimeter)?;
    Ok(DoublingSlack {
        k,
        perimeter,
        area_k,
        area_half,
        slack: 2.0 * area_half - area_k,
    })
}

/// At perimeter `P_k`: `A(k) < 2A(k/2)`, `A(n) < 2A(n/2)` on the grid
/// `[k, n_hi]`, and the chain step `A(n) − A(k) < 2(A(n/2) − A(k/2))` for
/// grid `n > k`.
pub fn verify_doubling(k: f64, n_hi: f64, step: f64) -> GeomResult<AuditReport> {
    if !(k > 6.0) {
        return Err(GeomError::domain(format!("k = {k} must exceed 6")));
    }
    let lemma = doubling_slack(k)?;
    let perimeter = lemma.perimeter;
    let a = |n: f64| area_fixed_perimeter(n, perimeter);

    let mut tracker = SlackTracker::default();
    tracker.record(lemma.slack, || json!({ "kind": "lemma", "k": k }));
    let mut min_grid = f64::INFINITY;
    let mut min_chain = f64::INFINITY;
    for n in grid(k, n_hi.max(k), step)? {
        let (an, ah) = (a(n)?, a(n / 2.0)?);
        let s = 2.0 * ah - an;
        min_grid = min_grid.min(s);
        tracker.record(s, || json!({ "kind": "doubling", "n": n }));
        if n > k {
            let chain = 2.0 * (ah - lemma.area_half) - (an - lemma.area_k);
            min_chain = min_chain.min(chain);
            tracker.record(chain, || json!({ "kind": "chain_step", "n": n }));
        }
    }
    let report = AuditReport::new("doubling")
        .with_grid(k, n_hi, step)
        .detail("k", k)
        .detail("perimeter", perimeter)
        .detail("lemma_slack", lemma.slack)
        .detail("min_doubling_slack", min_grid)
        .detail("min_chain_slack", if min_chain.is_finite() { min_chain } else { 0.0 });
    Ok(tracker.finish(report))
}

/// `x / acosh(cos(π/6 − x) / sin(π/3))`, which equals `A_k / P_k` at
/// `x = π/6 − π/k`.
pub fn ratio_substitute(x: f64) -> f64 {
    x / ((FRAC_PI_6 - x).cos() / FRAC_PI_3.sin()).acosh()
}

/// Strict decrease of `P_k / A_k` on the grid, strict increase of the
/// substitute form, and their agreement.
pub fn perimeter_ratio_scan(lo: f64, hi: f64, step: f64) -> GeomResult<AuditReport> {
    if !(lo > 6.0 && hi > lo) {
        return Err(GeomError::domain("need 6 < k_lo < k_hi"));
    }
    let ks = grid(lo, hi, step)?;
    let mut tracker = SlackTracker::default();
    let mut identity_err: f64 = 0.0;
    let mut prev: Option<(f64, f64)> = None;
    for &k in &ks {
        let ratio = p_k(k)? / a_k(k)?;
        let x = FRAC_PI_6 - PI / k;
        let g = ratio_substitute(x);
        identity_err = identity_err.max((g * ratio - 1.0).abs());
        if let Some((pr, pg)) = prev {
            tracker.record(pr - ratio, || json!({ "kind": "ratio_decrease", "k": k }));
            tracker.record(g - pg, || json!({ "kind": "substitute_increase", "k": k }));
        }
        prev = Some((ratio, g));
    }
    let tol = 1e-12;
    let mut report = AuditReport::new("perimeter_ratio")
        .with_grid(lo, hi, step)
        .detail("identity_max_rel_error", identity_err)
        .detail("identity_tol", tol);
    if !(identity_err < tol) {
        report.fail(json!({ "kind": "identity", "max_rel_error": identity_err }));
    }
    let passed = report.passed;
    let mut report = tracker.finish(report);
    report.passed &= passed;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isosceles_example() {
        let s = isosceles_scan(1.0, 4.0, 100_000).unwrap();
        assert!((s.family.c - 1.5).abs() < 1e-15);
        assert!((s.x_star - 1.5).abs() <= s.spacing);
        assert!(s.unimodal);
        let a = |x| s.family.area(x).unwrap();
        assert!(a(1.5) > a(1.5 * 1.1) && a(1.5) > a(1.5 * 0.9));
    }

    #[test]
    fn isosceles_infeasible() {
        assert!(isosceles_scan(1.0, 2.0, 100).is_err());
        assert!(isosceles_scan(0.0, 2.0, 100).is_err());
    }

    #[test]
    fn family_derivative() {
        let f = TriangleFamily::new(0.8, 3.0).unwrap();
        assert_eq!(f.df(f.c), 0.0);
        for x in [0.5, 0.9, 1.2, 1.5, 1.8] {
            let h = 1e-6;
            let fd = (f.f(x + h) - f.f(x - h)) / (2.0 * h);
            assert!((fd - f.df(x)).abs() < 1e-6 * (1.0 + fd.abs()), "{x}");
            assert_eq!(f.df(x) > 0.0, x < f.c);
        }
        assert!(f.m < (2.0 * f.c).cosh());
    }

    #[test]
    fn regular_monotone_counts() {
        let r = verify_regular_monotone(PI / 3.0, 50).unwrap();
        assert!(r.passed);
        assert_eq!(r.details["comparisons"], 47);
        let r = verify_regular_monotone(2.0 * PI, 50).unwrap();
        assert!(r.passed);
        assert_eq!(r.details["comparisons"], 45);
        assert_eq!(r.details["n_min"], 5);
    }

    #[test]
    fn concavity_p7() {
        let r = verify_concavity(p_k(7.0).unwrap(), 2.0, 200.0, 0.25).unwrap();
        assert!(r.passed, "{:?}", r.witness);
        assert_eq!(r.details["comparisons"], 792 + 791);
    }

    #[test]
    fn concavity_detects_convex_region() {
        // extending below 2 is rejected rather than scanned
        assert!(verify_concavity(1.0, 1.0, 3.0, 0.25).is_err());
    }

    /// Closed form of `2A(k/2)` at perimeter `P_k` in terms of `γ = cos(π/k)`.
    #[test]
    fn half_area_closed_form() {
        for k in [6.5, 7.0, 9.0, 20.0, 66.0] {
            let g: f64 = (PI / k).cos();
            let oracle =
                (k - 4.0) * PI - 2.0 * k * ((2.0 * g * g - 1.0) / (8.0 * g * g / 3.0 - 1.0)).asin();
            let d = doubling_slack(k).unwrap();
            assert!((2.0 * d.area_half - oracle).abs() < 1e-11, "{k}");
            assert!((d.area_k - a_k(k).unwrap()).abs() < 1e-11);
        }
    }

    #[test]
    fn doubling_slack_vanishes_at_six() {
        let mut prev = f64::INFINITY;
        for k in [7.0, 6.1, 6.01, 6.001, 6.0001] {
            let s = doubling_slack(k).unwrap().slack;
            assert!(s > 0.0 && s < prev, "{k}: {s}");
            prev = s;
        }
        assert!(doubling_slack(6.01).unwrap().slack < 1e-2);
    }

    #[test]
    fn doubling_scans() {
        for k in [7.0, 66.0] {
            let r = verify_doubling(k, 100.0, 0.5).unwrap();
            assert!(r.passed, "{k}: {:?}", r.witness);
        }
    }

    #[test]
    fn ratio_scan() {
        let r = perimeter_ratio_scan(6.01, 100.0, 0.1).unwrap();
        assert!(r.passed, "{:?}", r.witness);
        let ratio = |k| p_k(k).unwrap() / a_k(k).unwrap();
        assert!(ratio(7.0) > ratio(12.0));
    }

    /// Near `k = 6` the regular polygon is almost Euclidean:
    /// `P_k² / A_k → 8√3`, the equilateral-hexagon constant, so the ratio
    /// `P_k / A_k` blows up like `A_k^{-1/2}`.
    #[test]
    fn ratio_small_k() {
        let k = 6.0 + 1e-8;
        let (p, a) = (p_k(k).unwrap(), a_k(k).unwrap());
        assert!((p * p / a - 8.0 * 3f64.sqrt()).abs() < 1e-6);
        assert!(p / a > 1e4);
    }

    #[test]
    fn grid_is_inclusive() {
        let g = grid(2.0, 3.0, 0.25).unwrap();
        assert_eq!(g, vec![2.0, 2.25, 2.5, 2.75, 3.0]);
        assert_eq!(grid(6.01, 100.0, 0.05).unwrap().len(), 1880);
    }
}
