//! Hyperbolic-geometry toolkit for least-perimeter tiles of closed
//! hyperbolic surfaces.
//!
//! The crate is layered bottom-up:
//!
//! - [`hyperbolic`]: Poincaré-disk points, distances, angles, isometries.
//! - [`polygons`]: regular-polygon formulas, measured polygons, convex hulls.
//! - [`isoperimetry`]: numerical certificates for the isoperimetric
//!   inequalities (isosceles and regular optimality, concavity and doubling
//!   of the fixed-perimeter area function, the sextic root certificate, the
//!   perimeter ratio) and a perimeter minimizer.
//! - [`tilings`]: combinatorial tilings with per-face lifts, Euler and
//!   Gauss-Bonnet audits, the vertex-degree and hull-cover audits, `{k,3}`
//!   disk patches and the Klein-quartic fixture.
//! - [`svg`] and [`cli`]: rendering and the `hypertile` command line.

pub mod audit;
pub mod cli;
pub mod error;
pub mod hyperbolic;
pub mod isoperimetry;
pub mod json;
pub mod polygons;
pub mod svg;
pub mod tilings;

pub use audit::AuditReport;
pub use error::{GeomError, GeomResult};
pub use hyperbolic::{angle_at, dist, GeodesicSegment, HPoint, Isometry, KleinPoint, EPS_GEOM};
