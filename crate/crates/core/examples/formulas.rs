//! Closed-form quantities for regular polygons and triangles.

use std::f64::consts::PI;

use hypertile::polygons::{a_k, angle_from_perimeter, area_fixed_perimeter, heron_area, p_k, side_opposite};

fn main() -> hypertile::GeomResult<()> {
    println!("{:>5} {:>20} {:>20}", "k", "A_k", "P_k");
    for k in [7.0, 8.0, 10.0, 12.0, 20.0, 66.0] {
        println!("{k:>5} {:>20.15} {:>20.15}", a_k(k)?, p_k(k)?);
    }

    let p7 = p_k(7.0)?;
    println!("\nregular n-gons of perimeter P_7 = {p7:.15}");
    for n in [3.0, 5.0, 7.0, 9.0, 14.0] {
        let theta = angle_from_perimeter(n, p7)?;
        println!(
            "n = {n:>4}: angle {:>9.6}°  area {:.12}",
            theta.to_degrees(),
            area_fixed_perimeter(n, p7)?
        );
    }

    // angles of the (2,3,7) triangle, sides from the law of cosines
    let angles = [PI / 2.0, PI / 3.0, PI / 7.0];
    let a = side_opposite(angles[1], angles[2], angles[0])?;
    let b = side_opposite(angles[2], angles[0], angles[1])?;
    let c = side_opposite(angles[0], angles[1], angles[2])?;
    println!("\n(2,3,7) triangle sides {a:.12} {b:.12} {c:.12}");
    println!("Heron area {:.15}, angle defect {:.15}", heron_area(a, b, c)?, PI - angles.iter().sum::<f64>());
    Ok(())
}
