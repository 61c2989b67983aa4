//! Minimum-perimeter polygons of fixed area against the regular benchmark.

use std::f64::consts::FRAC_PI_3;

use hypertile::isoperimetry::min_perimeter_polygon;

fn main() -> hypertile::GeomResult<()> {
    for (n, area) in [(3, 0.3), (5, 1.0), (7, FRAC_PI_3), (9, 1.0)] {
        let r = min_perimeter_polygon(n, area, 1)?;
        println!(
            "n = {n}, area = {area:.6}: perimeter {:.12} benchmark {:.12} gap {:+.1e} spread {:.1e}",
            r.perimeter, r.benchmark_perimeter, r.perimeter_gap, r.radius_spread
        );
    }
    Ok(())
}
