//! The Klein quartic as 24 regular heptagons, with its audits.

use hypertile::tilings::{angle_sum_audit, degree_audit, gauss_bonnet_audit, hull_cover_audit, klein_quartic_fixture};

fn main() -> hypertile::GeomResult<()> {
    let t = klein_quartic_fixture()?;
    t.validate()?;
    println!(
        "V = {}, E = {}, F = {}, χ = {}",
        t.vertices.len(),
        t.edges.len(),
        t.faces.len(),
        t.euler_characteristic()?
    );
    for r in [gauss_bonnet_audit(&t)?, angle_sum_audit(&t)?, degree_audit(&t, 7.0)?] {
        println!("{:<14} passed = {}", r.check, r.passed);
    }
    let h = hull_cover_audit(&t, 7.0)?;
    println!("hull cover: {:?}, max link slack {:.1e}", h.verdict, h.max_link_slack());
    Ok(())
}
