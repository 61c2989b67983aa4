//! The inequality chain on the shipped fixtures.

use hypertile::tilings::{fixture, hull_cover_audit, k_for_tiling};

fn main() -> hypertile::GeomResult<()> {
    for name in ["klein-quartic", "klein-quartic-perturbed", "octagon", "two-face-patch"] {
        let t = fixture(name)?;
        let k = if name == "two-face-patch" { 7.0 } else { k_for_tiling(&t)? };
        let r = hull_cover_audit(&t, k)?;
        println!("{name} at k = {k:.9}: {:?}", r.verdict);
        for link in &r.links {
            println!("  {:<16} {:>14.9} ≤ {:<14.9} slack {:.3e}", link.name, link.lhs, link.rhs, link.slack);
        }
    }
    Ok(())
}
