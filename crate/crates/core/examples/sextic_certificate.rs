//! Exact derivatives of the doubling sextic at `√3/2`.

use hypertile::isoperimetry::SexticCheck;

fn main() {
    let s = SexticCheck::compute();
    println!("p(γ) at γ = {}: {}", s.gamma, s.value_at_gamma);
    for (j, d) in s.derivatives.iter().enumerate() {
        println!("p^({}) = {}", j + 1, d);
    }
    println!("p(1) = {}", s.value_at_one);
    println!("no root in (√3/2, 1): {}", s.no_root_certified());
    println!("orders differing from the reference list: {:?}", s.mismatches());
}
