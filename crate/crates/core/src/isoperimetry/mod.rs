//! Numerical checks of the isoperimetric inequalities for hyperbolic
//! polygons and an optimizer for minimum-perimeter polygons.

pub mod nelder_mead;
pub mod optimize;
pub mod scans;
pub mod sextic;

pub use nelder_mead::{Minimum, NelderMead};
pub use optimize::{
    min_perimeter_from, min_perimeter_polygon, min_perimeter_polygon_with, radius_spread,
    regular_perimeter_for_area, OptimizationResult, OptimizerOptions, DEFAULT_RESTARTS, TOL_AREA,
    TOL_OPT,
};
pub use scans::{
    doubling_slack, grid, isosceles_scan, perimeter_ratio_scan, ratio_substitute,
    verify_concavity, verify_doubling, verify_isosceles, verify_regular_monotone, DoublingSlack, IsoscelesScan,
    TriangleFamily,
};
pub use sextic::{sextic_check, QSqrt3, SexticCheck};
