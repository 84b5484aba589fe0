//! Building blocks: projective spaces, Jacobians, symmetric products.

use hodge_triples::blocks::{jacobian, proj_space, sym_generating_series, sym_power};
use hodge_triples::Genus;

fn main() {
    let g = Genus::new(2).unwrap();
    println!("P^3          = {}", proj_space(4));
    println!("Jac (g=2)    = {}", jacobian(g));
    for k in 0..=4 {
        let s = sym_power(g, k);
        println!("Sym^{k} X      = {s}");
        println!("   Poincaré  = {}", s.diagonal());
    }
    let series = sym_generating_series(g, 3);
    println!(
        "generating series to x^3 has {} coefficients",
        series.order() + 1
    );
}
