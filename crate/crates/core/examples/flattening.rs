//! Removing a corner of a polygon and tracking the area and perimeter change.

use hypertile::polygons::{realize_regular, TILE_ANGLE};
use hypertile::tilings::flatten_polygon_vertex;

fn main() -> hypertile::GeomResult<()> {
    let h = realize_regular(7, TILE_ANGLE)?;
    let f = flatten_polygon_vertex(&h, 0)?;
    println!(
        "heptagon → hexagon: area change {:.12}, perimeter change {:.12}",
        f.area_change, f.perimeter_change
    );
    Ok(())
}
