//! Renders a `{k,3}` patch of the disk to SVG.
//!
//! `cargo run --example disk_patch_svg -- 7 3 patch.svg`

use hypertile::svg::render_tiling;
use hypertile::tilings::{angle_sum_audit, generate_patch};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let k = args.first().map_or(Ok(7), |s| s.parse())?;
    let depth = args.get(1).map_or(Ok(3), |s| s.parse())?;
    let t = generate_patch(k, depth)?;
    let audit = angle_sum_audit(&t)?;
    eprintln!(
        "{{{k},3}} depth {depth}: {} faces, {} interior vertices, angle sums pass = {}",
        t.faces.len(),
        audit.details["vertices_checked"],
        audit.passed
    );
    let svg = render_tiling(&t);
    match args.get(2) {
        Some(path) => std::fs::write(path, svg)?,
        None => print!("{svg}"),
    }
    Ok(())
}
