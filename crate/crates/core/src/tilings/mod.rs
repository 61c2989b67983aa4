//! Tilings of closed hyperbolic surfaces and of the disk, stored as
//! multigraphs with per-face lifts, together with the audits that connect
//! them to the isoperimetric inequalities.

pub mod audits;
pub mod fixtures;
pub mod flatten;
pub mod graph;
pub mod hull_cover;
pub mod patch;

pub use audits::{
    angle_sum_audit, concave_angle_audit, degree_audit, gauss_bonnet_audit, ANGLE_SUM_TOL,
    total_perimeter_compare,
};
pub use fixtures::{by_name as fixture, klein_quartic_fixture, FIXTURE_NAMES};
pub use flatten::{flatten_polygon_vertex, flatten_vertex, Flattening, PolygonFlattening};
pub use graph::{Edge, Face, InvariantCheck, Meta, TilingGraph, Vertex, INVARIANTS};
pub use hull_cover::{
    hull_cover_audit, inequality_chain, k_for_perimeter, k_for_tiling, ChainLink, FaceHull,
    HullCoverReport, Substitution, Verdict, CHAIN_TOL,
};
pub use patch::generate_patch;
