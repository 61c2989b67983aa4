//! Writes every shipped fixture as JSON into a directory.
//!
//! `cargo run --example write_fixtures -- crates/core/fixtures`

use hypertile::tilings::{fixture, FIXTURE_NAMES};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "fixtures".into());
    std::fs::create_dir_all(&dir)?;
    for name in FIXTURE_NAMES {
        let path = format!("{dir}/{name}.json");
        std::fs::write(&path, fixture(name)?.to_json() + "\n")?;
        println!("wrote {path}");
    }
    Ok(())
}
