//! Perimeter minimization over `n`-gons of prescribed area.
//!
//! Each candidate polygon is given by `n` tangent vectors at the origin; the
//! vertices are their exponential images after a common radial rescaling
//! chosen so the area equals the target exactly. The area of a polygon that
//! is star-shaped about the origin is a sum of fan triangles, each with the
//! closed form `tan(A/2) = t₁t₂ sin φ / (1 − t₁t₂ cos φ)`, `tᵢ = tanh(rᵢ/2)`,
//! and it increases strictly with the rescaling, so the constraint is solved
//! by a bracketed one-dimensional root search. The simplex method then works
//! on the unconstrained perimeter of the rescaled polygon.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{GeomError, GeomResult};
use crate::hyperbolic::{dist, HPoint};
use crate::isoperimetry::nelder_mead::NelderMead;
use crate::polygons::{regular_perimeter, Polygon, RegularSpec};

/// Perimeter tolerance of the optimizer.
pub const TOL_OPT: f64 = 1e-5;
/// Area-constraint tolerance.
pub const TOL_AREA: f64 = 1e-8;
pub const DEFAULT_RESTARTS: usize = 8;

#[derive(Clone, Debug, Serialize)]
pub struct OptimizerOptions {
    pub restarts: usize,
    /// Evaluation budget of a single simplex run.
    pub max_evals: usize,
    /// Simplex restarts from the incumbent within one random start.
    pub polish_rounds: usize,
}

impl Default for OptimizerOptions {
    fn default() -> Self {
        OptimizerOptions {
            restarts: DEFAULT_RESTARTS,
            max_evals: 60_000,
            polish_rounds: 12,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OptimizationResult {
    pub polygon: Polygon,
    pub perimeter: f64,
    pub area: f64,
    pub target_area: f64,
    pub iterations: usize,
    pub converged: bool,
    pub restarts_used: usize,
    /// Perimeter of the regular `n`-gon with the target area.
    pub benchmark_perimeter: f64,
    pub perimeter_gap: f64,
    /// Spread of hyperbolic distances from the vertex barycenter to the
    /// vertices.
    pub radius_spread: f64,
    pub seed: u64,
}

/// Perimeter of the regular `n`-gon of area `area`.
pub fn regular_perimeter_for_area(n: f64, area: f64) -> GeomResult<f64> {
    regular_perimeter(RegularSpec::with_area(n, area)?)
}

/// Fan decomposition of a star-shaped polygon around the origin.
struct Fan {
    radii: Vec<f64>,
    dirs: Vec<f64>,
    gaps: Vec<f64>,
}

impl Fan {
    /// `None` unless the tangent vectors wind exactly once around the origin
    /// with every angular gap in `(0, π)`.
    fn from_tangents(u: &[f64]) -> Option<Fan> {
        let n = u.len() / 2;
        let mut radii = Vec::with_capacity(n);
        let mut dirs = Vec::with_capacity(n);
        for i in 0..n {
            let (x, y) = (u[2 * i], u[2 * i + 1]);
            let r = x.hypot(y);
            if !(r > 1e-9) || !r.is_finite() {
                return None;
            }
            radii.push(r);
            dirs.push(y.atan2(x));
        }
        let mut gaps = Vec::with_capacity(n);
        let mut total = 0.0;
        for i in 0..n {
            let g = (dirs[(i + 1) % n] - dirs[i]).rem_euclid(TAU);
            if !(g > 1e-9 && g < PI - 1e-9) {
                return None;
            }
            total += g;
            gaps.push(g);
        }
        if (total - TAU).abs() > 1e-6 {
            return None;
        }
        Some(Fan { radii, dirs, gaps })
    }

    fn area(&self, scale: f64) -> f64 {
        let n = self.radii.len();
        let t: Vec<f64> = self.radii.iter().map(|r| (scale * r / 2.0).tanh()).collect();
        (0..n)
            .map(|i| {
                let tt = t[i] * t[(i + 1) % n];
                let g = self.gaps[i];
                2.0 * (tt * g.sin()).atan2(1.0 - tt * g.cos())
            })
            .sum()
    }

    /// Scale with `area(scale) = target`; requires `0 < target < (n−2)π`.
    fn solve_scale(&self, target: f64) -> Option<f64> {
        let mut hi = 1.0;
        let mut a_hi = self.area(hi);
        let mut doublings = 0;
        while a_hi < target {
            hi *= 2.0;
            a_hi = self.area(hi);
            doublings += 1;
            if doublings > 60 {
                return None;
            }
        }
        let mut lo = 0.0;
        let mut a_lo = 0.0;
        // Illinois false position
        let mut side = 0i8;
        for _ in 0..200 {
            let s = (lo * (a_hi - target) - hi * (a_lo - target)) / (a_hi - a_lo);
            let s = if s.is_finite() && s > lo && s < hi { s } else { 0.5 * (lo + hi) };
            let a = self.area(s);
            let r = a - target;
            if r.abs() <= 1e-14 * target.max(1.0) || (hi - lo) <= 1e-16 * hi {
                return Some(s);
            }
            if r > 0.0 {
                hi = s;
                a_hi = a;
                if side == 1 {
                    a_lo = target + (a_lo - target) / 2.0;
                }
                side = 1;
            } else {
                lo = s;
                a_lo = a;
                if side == -1 {
                    a_hi = target + (a_hi - target) / 2.0;
                }
                side = -1;
            }
        }
        Some(0.5 * (lo + hi))
    }

    fn vertices(&self, scale: f64) -> Vec<HPoint> {
        self.radii
            .iter()
            .zip(&self.dirs)
            .map(|(&r, &phi)| {
                let t = (scale * r / 2.0).tanh();
                HPoint::from_disk_polar(t.min(1.0 - 1e-16), phi).expect("inside the disk")
            })
            .collect()
    }
}

fn perimeter_of(points: &[HPoint]) -> f64 {
    let n = points.len();
    (0..n).map(|i| dist(points[i], points[(i + 1) % n])).sum()
}

/// Polygon with area `target` obtained by rescaling the tangent vectors.
fn project(u: &[f64], target: f64) -> Option<Vec<HPoint>> {
    let fan = Fan::from_tangents(u)?;
    let s = fan.solve_scale(target)?;
    Some(fan.vertices(s))
}

/// Perimeter plus a penalty that vanishes on one representative of every
/// congruence class: unit projection scale, vertex barycenter at the origin
/// and vertex 0 on the real axis. Without it the simplex never contracts
/// along the four directions that leave the perimeter unchanged.
fn objective(u: &[f64], target: f64) -> f64 {
    let Some(fan) = Fan::from_tangents(u) else {
        return f64::INFINITY;
    };
    let Some(s) = fan.solve_scale(target) else {
        return f64::INFINITY;
    };
    let pts = fan.vertices(s);
    let mean_r = fan.radii.iter().sum::<f64>() / fan.radii.len() as f64;
    let gauge = ((s - 1.0) * mean_r).powi(2) + barycenter(&pts).norm_sq() + fan.dirs[0].sin().powi(2);
    perimeter_of(&pts) + gauge
}

/// Hyperbolic distance from the origin to a vertex of the regular `n`-gon
/// of the given area.
fn regular_circumradius(n: usize, area: f64) -> f64 {
    let spec = RegularSpec::with_area(n as f64, area).expect("validated area");
    let alpha = PI / n as f64;
    // cosh R = cot(π/n) cot(θ/2)
    (1.0 / (alpha.tan() * (spec.theta / 2.0).tan())).acosh()
}

fn initial_tangents(n: usize, area: f64, restart: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let r0 = regular_circumradius(n, area);
    loop {
        let mut angles: Vec<f64> = if restart % 2 == 0 {
            // jittered regular configuration
            let step = TAU / n as f64;
            (0..n)
                .map(|i| step * i as f64 + rng.gen_range(-0.3..0.3) * step)
                .collect()
        } else {
            // random points in convex position on a circle
            (0..n).map(|_| rng.gen_range(0.0..TAU)).collect()
        };
        angles.sort_by(f64::total_cmp);
        let radius_scale = if restart % 2 == 0 { 1.0 } else { rng.gen_range(0.5..1.5) };
        let u: Vec<f64> = angles
            .iter()
            .flat_map(|&phi| {
                let r = r0 * radius_scale * (1.0 + rng.gen_range(-0.3..0.3));
                [r * phi.cos(), r * phi.sin()]
            })
            .collect();
        if Fan::from_tangents(&u).is_some() {
            return u;
        }
    }
}

fn tangents_of(polygon: &Polygon) -> Vec<f64> {
    polygon
        .to_positive()
        .vertices()
        .iter()
        .flat_map(|p| {
            let r = p.radius();
            let phi = p.y().atan2(p.x());
            [r * phi.cos(), r * phi.sin()]
        })
        .collect()
}

struct RunOutcome {
    u: Vec<f64>,
    value: f64,
    iterations: usize,
    converged: bool,
}

fn run_from(u0: Vec<f64>, area: f64, opts: &OptimizerOptions) -> RunOutcome {
    let scale = {
        let n = u0.len() / 2;
        (0..n).map(|i| u0[2 * i].hypot(u0[2 * i + 1])).sum::<f64>() / n as f64
    };
    let mut u = u0;
    let mut value = objective(&u, area);
    let mut iterations = 0;
    let mut converged = false;
    for round in 0..opts.polish_rounds {
        let nm = NelderMead {
            initial_step: scale * if round == 0 { 0.2 } else { 0.02 },
            xtol: 1e-9 * scale,
            ftol: 1e-14 * value.min(1e6),
            max_evals: opts.max_evals,
        };
        let m = nm.minimize(|x| objective(x, area), &u);
        iterations += m.iterations;
        let improvement = value - m.value;
        if m.value <= value {
            u = m.x;
            value = m.value;
        }
        if round > 0 && m.converged && improvement <= 1e-13 * value.max(1.0) {
            converged = true;
            break;
        }
    }
    RunOutcome {
        u,
        value,
        iterations,
        converged,
    }
}

/// Hyperboloid barycenter of the vertices.
fn barycenter(points: &[HPoint]) -> HPoint {
    let mut acc = [0.0; 3];
    for p in points {
        let h = p.to_hyperboloid();
        for j in 0..3 {
            acc[j] += h[j];
        }
    }
    HPoint::from_hyperboloid(acc).unwrap_or(HPoint::ORIGIN)
}

/// Spread of the center-to-vertex distances about the vertex barycenter.
pub fn radius_spread(polygon: &Polygon) -> f64 {
    let c = barycenter(polygon.vertices());
    let d: Vec<f64> = polygon.vertices().iter().map(|&v| dist(c, v)).collect();
    let max = d.iter().cloned().fold(f64::MIN, f64::max);
    let min = d.iter().cloned().fold(f64::MAX, f64::min);
    max - min
}

fn check_area(n: usize, area: f64) -> GeomResult<()> {
    if n < 3 {
        return Err(GeomError::domain(format!("n = {n}: polygons need at least 3 sides")));
    }
    let max = (n as f64 - 2.0) * PI;
    if !(area > 0.0 && area < max) {
        return Err(GeomError::domain(format!(
            "area {area} is infeasible for n = {n}: it must lie in (0, (n−2)π) = (0, {max})"
        )));
    }
    Ok(())
}

fn finish(
    best: RunOutcome,
    n: usize,
    area: f64,
    restarts_used: usize,
    seed: u64,
) -> GeomResult<OptimizationResult> {
    let pts = project(&best.u, area)
        .ok_or_else(|| GeomError::domain("optimizer lost the feasible region"))?;
    let polygon = Polygon::new(pts)?;
    let measured = polygon.area_gauss_bonnet()?;
    let perimeter = polygon.perimeter();
    let benchmark = regular_perimeter_for_area(n as f64, area)?;
    let spread = radius_spread(&polygon);
    Ok(OptimizationResult {
        perimeter,
        area: measured,
        target_area: area,
        iterations: best.iterations,
        converged: best.converged && (measured - area).abs() < TOL_AREA,
        restarts_used,
        benchmark_perimeter: benchmark,
        perimeter_gap: perimeter - benchmark,
        radius_spread: spread,
        seed,
        polygon,
    })
}

/// Minimizes perimeter among `n`-gons of the given area from `restarts`
/// seeded random starts. Runs are independent and merged by restart index,
/// so the result depends only on the arguments.
pub fn min_perimeter_polygon_with(
    n: usize,
    area: f64,
    seed: u64,
    opts: &OptimizerOptions,
) -> GeomResult<OptimizationResult> {
    check_area(n, area)?;
    let restarts = opts.restarts.max(1);
    let outcomes: Vec<RunOutcome> = (0..restarts)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let u0 = initial_tangents(n, area, i, &mut rng);
            run_from(u0, area, opts)
        })
        .collect();
    let best = outcomes
        .into_iter()
        .reduce(|a, b| if b.value < a.value { b } else { a })
        .expect("at least one restart");
    finish(best, n, area, restarts, seed)
}

pub fn min_perimeter_polygon(n: usize, area: f64, seed: u64) -> GeomResult<OptimizationResult> {
    min_perimeter_polygon_with(n, area, seed, &OptimizerOptions::default())
}

/// Re-optimizes from a given polygon, which must be star-shaped about the
/// origin.
pub fn min_perimeter_from(
    start: &Polygon,
    area: f64,
    opts: &OptimizerOptions,
) -> GeomResult<OptimizationResult> {
    let n = start.len();
    check_area(n, area)?;
    let u0 = tangents_of(start);
    if Fan::from_tangents(&u0).is_none() {
        return Err(GeomError::InvalidPolygon(
            "start polygon is not star-shaped about the origin".into(),
        ));
    }
    let best = run_from(u0, area, opts);
    finish(best, n, area, 1, 0)
}
