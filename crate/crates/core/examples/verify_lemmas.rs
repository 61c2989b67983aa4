//! Runs every grid verification with its default parameters.

use std::f64::consts::FRAC_PI_3;

use hypertile::isoperimetry::{
    perimeter_ratio_scan, sextic_check, verify_concavity, verify_doubling, verify_isosceles,
    verify_regular_monotone,
};
use hypertile::polygons::p_k;

fn main() -> hypertile::GeomResult<()> {
    let mut reports = vec![
        verify_isosceles(20, 100_000, 1)?,
        verify_regular_monotone(FRAC_PI_3, 50)?,
        perimeter_ratio_scan(6.01, 100.0, 0.05)?,
        sextic_check(),
    ];
    for k in [7.0, 20.0, 66.0] {
        reports.push(verify_concavity(p_k(k)?, 2.0, 200.0, 0.25)?);
    }
    for k in [6.01, 7.0, 12.0, 66.0, 200.0] {
        reports.push(verify_doubling(k, 400.0, 0.25)?);
    }
    for r in &reports {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        println!("{verdict} {:<18} min slack {:.3e}", r.check, r.min_slack);
    }
    Ok(())
}
