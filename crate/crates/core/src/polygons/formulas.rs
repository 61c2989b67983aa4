//! Closed-form area and perimeter of regular hyperbolic polygons, the
//! hyperbolic law of cosines and Heron's formula.
//!
//! Every formula accepts a real side count `n`. The evaluation paths avoid
//! the cancellations of the textbook expressions near the Euclidean limit:
//! differences like `cos(π/n) − sin(θ/2)` are rewritten as products of sines
//! and `acosh(1 + u)` goes through [`acosh1p`].

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, GeomResult};
use crate::hyperbolic::acosh1p;

/// Interior angle of the tiles `R_k`.
pub const TILE_ANGLE: f64 = 2.0 * FRAC_PI_3;

/// Relative slack allowed when an argument sits on the boundary of a domain
/// (e.g. `θ = (n−2)π/n`, the Euclidean limit).
const BOUNDARY_SLACK: f64 = 1e-12;

/// A regular polygon with a real side count `n` and interior angle `theta`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegularSpec {
    pub n: f64,
    pub theta: f64,
}

impl RegularSpec {
    /// Validates `n ≥ 2` and `0 < θ ≤ (n−2)π/n`. The closed upper end is the
    /// degenerate Euclidean limit with zero area and perimeter.
    pub fn new(n: f64, theta: f64) -> GeomResult<Self> {
        if !(n >= 2.0) || !n.is_finite() {
            return Err(GeomError::domain(format!("side count n = {n} must be at least 2")));
        }
        if !(theta > 0.0) {
            return Err(GeomError::domain(format!("interior angle θ = {theta} must be positive")));
        }
        if angle_gap(n, theta) < -BOUNDARY_SLACK {
            return Err(GeomError::domain(format!(
                "interior angle θ = {theta} exceeds the Euclidean angle (n−2)π/n = {}",
                (n - 2.0) * PI / n
            )));
        }
        Ok(RegularSpec { n, theta })
    }

    /// Regular polygon with a given area: `θ = ((n−2)π − A)/n`.
    pub fn with_area(n: f64, area: f64) -> GeomResult<Self> {
        if !(n > 2.0) {
            return Err(GeomError::domain(format!("side count n = {n} must exceed 2")));
        }
        let max = (n - 2.0) * PI;
        if !(area > 0.0 && area < max) {
            return Err(GeomError::domain(format!(
                "area {area} is outside (0, (n−2)π) = (0, {max})"
            )));
        }
        Self::new(n, (max - area) / n)
    }

    pub fn area(&self) -> f64 {
        regular_area_unchecked(self.n, self.theta)
    }

    pub fn perimeter(&self) -> GeomResult<f64> {
        regular_perimeter(*self)
    }
}

/// `π/2 − θ/2 − π/n`, half the distance of θ below the Euclidean angle.
fn angle_gap(n: f64, theta: f64) -> f64 {
    FRAC_PI_2 * (n - 2.0) / n - theta / 2.0
}

fn regular_area_unchecked(n: f64, theta: f64) -> f64 {
    (n - 2.0) * PI - n * theta
}

/// Area `(n−2)π − nθ` of the regular polygon.
pub fn regular_area(spec: RegularSpec) -> f64 {
    regular_area_unchecked(spec.n, spec.theta).max(0.0)
}

/// `cos(α)/sin(θ/2) − 1` where `gap = π/2 − θ/2 − α`, as a product of sines.
fn ratio_minus_one(alpha: f64, gap: f64) -> f64 {
    // sin(θ/2) = cos(α + gap), and cos α − cos(α + gap) = 2 sin(α + gap/2) sin(gap/2)
    let half_theta_sin = (alpha + gap).cos();
    2.0 * (alpha + gap / 2.0).sin() * (gap / 2.0).sin() / half_theta_sin
}

/// Perimeter `2n·acosh(cos(π/n)/sin(θ/2))` of the regular polygon.
pub fn regular_perimeter(spec: RegularSpec) -> GeomResult<f64> {
    let RegularSpec { n, theta } = spec;
    let gap = angle_gap(n, theta);
    if gap < -BOUNDARY_SLACK {
        return Err(GeomError::domain(format!(
            "cos(π/n) < sin(θ/2) for n = {n}, θ = {theta}: not a hyperbolic polygon"
        )));
    }
    let gap = gap.max(0.0);
    Ok(2.0 * n * acosh1p(ratio_minus_one(PI / n, gap)))
}

/// Area `A_k = (k−6)π/3` of the regular `k`-gon with angles `2π/3`.
pub fn a_k(k: f64) -> GeomResult<f64> {
    check_k(k)?;
    Ok((k - 6.0) * PI / 3.0)
}

/// Perimeter `P_k` of the regular `k`-gon with angles `2π/3`.
pub fn p_k(k: f64) -> GeomResult<f64> {
    check_k(k)?;
    // gap = π/6 − π/k, formed without cancellation
    let gap = PI * (k - 6.0) / (6.0 * k);
    Ok(2.0 * k * acosh1p(ratio_minus_one(PI / k, gap)))
}

fn check_k(k: f64) -> GeomResult<()> {
    if k > 6.0 && k.is_finite() {
        Ok(())
    } else {
        Err(GeomError::domain(format!("k = {k} must exceed 6")))
    }
}

/// The regular `k`-gon `R_k` with `120°` angles, for real `k > 6`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct KSpec(f64);

impl KSpec {
    pub fn new(k: f64) -> GeomResult<Self> {
        check_k(k)?;
        Ok(KSpec(k))
    }

    /// The `k` whose tile area `A_k` equals `area`.
    pub fn from_area(area: f64) -> GeomResult<Self> {
        Self::new(6.0 + 3.0 * area / PI)
    }

    pub fn k(self) -> f64 {
        self.0
    }

    pub fn area(self) -> f64 {
        (self.0 - 6.0) * PI / 3.0
    }

    pub fn perimeter(self) -> f64 {
        p_k(self.0).expect("validated k")
    }
}

/// Interior angle of the regular `n`-gon with perimeter `P`:
/// `θ = 2·asin(cos(π/n)·sech(P/2n))`.
pub fn angle_from_perimeter(n: f64, perimeter: f64) -> GeomResult<f64> {
    if !(n > 2.0) {
        return Err(GeomError::domain(format!("side count n = {n} must exceed 2")));
    }
    if !(perimeter >= 0.0) {
        return Err(GeomError::domain(format!("perimeter {perimeter} must be nonnegative")));
    }
    let beta = perimeter / (2.0 * n);
    Ok(2.0 * ((PI / n).cos() / beta.cosh()).asin())
}

/// Area `A(n)` of the regular `n`-gon with perimeter `P`, extended by `0`
/// on `[0, 2]`.
///
/// Evaluated as `2n·(φ − α)` with `α = π/n`, `cos φ = cos α·sech β`,
/// `β = P/2n`, and `φ − α` recovered through
/// `sin((φ−α)/2) = cos α·(1 − sech β) / (2 sin((φ+α)/2))`. This equals
/// `π(n−2) − 2n·asin(cos α sech β)` but keeps relative accuracy when the
/// polygon is nearly Euclidean and when `n` is large.
pub fn area_fixed_perimeter(n: f64, perimeter: f64) -> GeomResult<f64> {
    if !(n >= 0.0) || !n.is_finite() {
        return Err(GeomError::domain(format!("side count n = {n} must be nonnegative")));
    }
    if !(perimeter >= 0.0) {
        return Err(GeomError::domain(format!("perimeter {perimeter} must be nonnegative")));
    }
    if n <= 2.0 {
        return Ok(0.0);
    }
    let alpha = PI / n;
    let beta = perimeter / (2.0 * n);
    let cosh_b = beta.cosh();
    let one_minus_sech = 2.0 * (beta / 2.0).sinh().powi(2) / cosh_b;
    let phi = (alpha.cos() / cosh_b).acos();
    let s = alpha.cos() * one_minus_sech / (2.0 * ((phi + alpha) / 2.0).sin());
    Ok(2.0 * n * 2.0 * s.asin())
}

/// Area of the hyperbolic disk whose boundary circle has length `P`.
pub fn circle_area_bound(perimeter: f64) -> f64 {
    let r = perimeter / (2.0 * PI);
    2.0 * PI * ((1.0 + r * r).sqrt() - 1.0)
}

/// Length of the side opposite `t3` in the triangle with interior angles
/// `t1, t2, t3`, from `cos t3 = sin t1 sin t2 cosh ℓ − cos t1 cos t2`.
pub fn side_opposite(t1: f64, t2: f64, t3: f64) -> GeomResult<f64> {
    if !(t1 > 0.0 && t2 > 0.0 && t3 > 0.0) {
        return Err(GeomError::domain("triangle angles must be positive"));
    }
    let defect = PI - (t1 + t2 + t3);
    if !(defect > 0.0) {
        return Err(GeomError::domain(format!(
            "angle sum {} is not below π",
            t1 + t2 + t3
        )));
    }
    // cosh ℓ − 1 = (cos t3 + cos(t1 + t2)) / (sin t1 sin t2)
    let u = 2.0 * (defect / 2.0).sin() * ((t1 + t2 - t3) / 2.0).cos() / (t1.sin() * t2.sin());
    Ok(acosh1p(u))
}

/// Heron numerator `1 − cosh²x − cosh²y − cosh²z + 2 cosh x cosh y cosh z`
/// in the textbook form.
pub fn heron_numerator_raw(x: f64, y: f64, z: f64) -> f64 {
    let (a, b, c) = (x.cosh(), y.cosh(), z.cosh());
    1.0 - a * a - b * b - c * c + 2.0 * a * b * c
}

/// The same numerator as `4 sinh s sinh(s−x) sinh(s−y) sinh(s−z)` with
/// `s = (x+y+z)/2`, which stays accurate near degenerate triangles.
pub fn heron_numerator(x: f64, y: f64, z: f64) -> f64 {
    let s = (x + y + z) / 2.0;
    4.0 * s.sinh() * (s - x).sinh() * (s - y).sinh() * (s - z).sinh()
}

/// Area of the triangle with side lengths `x, y, z`:
/// `tan²(A/2) = N / (1 + cosh x + cosh y + cosh z)²`.
pub fn heron_area(x: f64, y: f64, z: f64) -> GeomResult<f64> {
    if !(x > 0.0 && y > 0.0 && z > 0.0) {
        return Err(GeomError::domain("side lengths must be positive"));
    }
    if !(x + y > z && y + z > x && z + x > y) {
        return Err(GeomError::domain(format!(
            "sides ({x}, {y}, {z}) violate the strict triangle inequality"
        )));
    }
    let num = heron_numerator(x, y, z);
    let den = 1.0 + x.cosh() + y.cosh() + z.cosh();
    Ok(2.0 * (num.max(0.0).sqrt() / den).atan())
}

#[cfg(test)]
mod tests {
    use super::*;

    // 40-digit evaluations of 2k·acosh(cos(π/k)/sin(π/3)) (mpmath, dps = 40).
    pub(crate) const P_K_REFERENCE: [(f64, f64); 6] = [
        (7.0, 3.96379414714720326633229085136),
        (8.0, 5.81631871480411767420722224658),
        (10.0, 8.79179280867955561060140761581),
        (12.0, 11.4197167708502637405753219269),
        (20.0, 20.9618990906501321946644361718),
        (66.0, 72.2087083862818635611359920037),
    ];

    #[test]
    fn a_k_values() {
        assert_eq!(a_k(7.0).unwrap(), PI / 3.0);
        assert!((a_k(12.0).unwrap() - 2.0 * PI).abs() < 1e-15);
        assert!(a_k(6.0).is_err());
        assert!((a_k(6.0 + 1e-9).unwrap() - 1e-9 * PI / 3.0).abs() < 1e-15);
    }

    #[test]
    fn p_k_against_reference() {
        for (k, p) in P_K_REFERENCE {
            let got = p_k(k).unwrap();
            assert!(((got - p) / p).abs() < 1e-13, "k = {k}: {got} vs {p}");
        }
    }

    #[test]
    fn regular_area_examples() {
        let spec = RegularSpec::new(7.0, TILE_ANGLE).unwrap();
        assert!((regular_area(spec) - PI / 3.0).abs() < 1e-14);
        let spec = RegularSpec::new(12.0, TILE_ANGLE).unwrap();
        assert!((regular_area(spec) - 2.0 * PI).abs() < 1e-14);
        let euclid = RegularSpec::new(5.0, 3.0 * PI / 5.0).unwrap();
        assert!(regular_area(euclid).abs() < 1e-14);
        assert_eq!(regular_perimeter(euclid).unwrap(), 0.0);
        assert!(RegularSpec::new(5.0, 3.0 * PI / 5.0 + 1e-6).is_err());
        assert!(RegularSpec::new(5.0, 0.0).is_err());
    }

    #[test]
    fn perimeter_decreases_in_theta() {
        let mut prev = f64::INFINITY;
        for i in 1..100 {
            let theta = i as f64 * 0.01 * (5.0 * PI / 7.0);
            let p = regular_perimeter(RegularSpec::new(7.0, theta).unwrap()).unwrap();
            assert!(p < prev);
            prev = p;
        }
    }

    #[test]
    fn perimeter_increases_with_area() {
        let mut prev = 0.0;
        for i in 1..60 {
            let area = i as f64 * 0.25;
            let p = RegularSpec::with_area(7.0, area).unwrap().perimeter().unwrap();
            assert!(p > prev);
            prev = p;
        }
    }

    #[test]
    fn angle_perimeter_round_trip() {
        let p7 = p_k(7.0).unwrap();
        let theta = angle_from_perimeter(7.0, p7).unwrap();
        assert!((theta - TILE_ANGLE).abs() < 1e-12);
        let a = area_fixed_perimeter(7.0, p7).unwrap();
        assert!((a - PI / 3.0).abs() < 1e-12);
        assert!((angle_from_perimeter(9.0, 1e-12).unwrap() - 7.0 * PI / 9.0).abs() < 1e-9);
        assert!(angle_from_perimeter(9.0, 1e4).unwrap() < 1e-100);
    }

    #[test]
    fn stable_area_matches_textbook_form() {
        for &(n, p) in &[(3.0, 0.5), (7.0, 3.9), (12.5, 20.0), (200.0, 4.0), (2.5, 1.0)] {
            let alpha = PI / n;
            let beta = p / (2.0 * n);
            let naive = PI * (n - 2.0) - 2.0 * n * (alpha.cos() / beta.cosh()).asin();
            let got = area_fixed_perimeter(n, p).unwrap();
            assert!((got - naive).abs() < 1e-11 * n, "n = {n}: {got} vs {naive}");
        }
    }

    #[test]
    fn area_vanishes_up_to_two() {
        for p in [0.1, 1.0, 50.0] {
            assert_eq!(area_fixed_perimeter(2.0, p).unwrap(), 0.0);
            assert_eq!(area_fixed_perimeter(0.5, p).unwrap(), 0.0);
            assert!(area_fixed_perimeter(2.0 + 1e-6, p).unwrap() < 1e-5);
        }
        assert!(area_fixed_perimeter(-1.0, 1.0).is_err());
    }

    #[test]
    fn area_below_circle_bound() {
        for p in [0.5, 3.96, 20.0] {
            let bound = circle_area_bound(p);
            for i in 0..400 {
                let n = 2.0 + i as f64 * 0.5;
                assert!(area_fixed_perimeter(n, p).unwrap() < bound);
            }
        }
    }

    #[test]
    fn right_triangle_law_of_cosines() {
        // cosh(a) = cos(∠A)/sin(∠B) with the right angle opposite the hypotenuse
        let (ang_a, ang_b) = (0.5, 0.7);
        let a = side_opposite(PI / 2.0, ang_b, ang_a).unwrap();
        assert!((a.cosh() - ang_a.cos() / ang_b.sin()).abs() < 1e-13);
    }

    #[test]
    fn law_of_cosines_limits() {
        assert!(side_opposite(1.0, 1.0, 1.2).is_err());
        let tiny = side_opposite(1.0, 1.0, PI - 2.0 - 1e-12).unwrap();
        assert!(tiny < 1e-5);
        assert!(side_opposite(0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn heron_forms_agree() {
        for &(x, y, z) in &[(0.7, 1.3, 1.1), (2.0, 2.5, 3.0), (0.1, 0.1, 0.15)] {
            let raw = heron_numerator_raw(x, y, z);
            let prod = heron_numerator(x, y, z);
            assert!((raw - prod).abs() < 1e-12 * raw.abs().max(1.0));
        }
    }

    #[test]
    fn heron_limits() {
        let deg = heron_area(1.0, 1.5, 2.5 - 1e-12).unwrap();
        assert!(deg < 1e-5);
        assert!(heron_area(1.0, 1.0, 2.0).is_err());
        let s = 1e-3;
        let small = heron_area(s, s, s).unwrap();
        let euclid = 3f64.sqrt() / 4.0 * s * s;
        assert!(((small - euclid) / euclid).abs() < 0.01);
    }

    #[test]
    fn heron_on_237_triangle() {
        let (t1, t2, t3) = (PI / 2.0, PI / 3.0, PI / 7.0);
        let x = side_opposite(t2, t3, t1).unwrap();
        let y = side_opposite(t1, t3, t2).unwrap();
        let z = side_opposite(t1, t2, t3).unwrap();
        let area = heron_area(x, y, z).unwrap();
        assert!((area - PI / 42.0).abs() < 1e-12);
    }

    #[test]
    fn kspec_round_trip() {
        let k = KSpec::from_area(PI / 3.0).unwrap();
        assert!((k.k() - 7.0).abs() < 1e-14);
        assert!((k.perimeter() - p_k(7.0).unwrap()).abs() < 1e-15);
        assert!(KSpec::from_area(-1.0).is_err());
    }
}
