//! Hyperbolic polygons: closed-form regular-polygon formulas, measured area
//! and perimeter, regular realization, convex hulls and reduction modulo
//! straight vertices.

pub mod formulas;
pub mod hull;
pub mod polygon;

pub use formulas::{
    a_k, angle_from_perimeter, area_fixed_perimeter, circle_area_bound, heron_area, p_k,
    regular_area, regular_perimeter, side_opposite, KSpec, RegularSpec, TILE_ANGLE,
};
pub use hull::{convex_hull, hull_vertices, is_convex};
pub use polygon::{realize_regular, Orientation, Polygon, EPS_ANGLE};
