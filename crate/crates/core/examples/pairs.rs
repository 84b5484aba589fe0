//! τ-stable pairs, with and without fixed determinant, and the univariate
//! Poincaré route for the fixed-determinant case.

use hodge_triples::laurent::rational_string;
use hodge_triples::triples::{
    hodge_pairs, pair_chamber_representatives, poincare_pairs_fixed_det_thaddeus,
};
use hodge_triples::{Genus, StabilityValue};

fn main() {
    let g = Genus::new(2).unwrap();
    for d in 1..=4 {
        for tau in pair_chamber_representatives(d) {
            let t = StabilityValue::exact(tau.clone());
            let fixed = hodge_pairs(g, d, &t, true).unwrap();
            let free = hodge_pairs(g, d, &t, false).unwrap();
            let univariate = poincare_pairs_fixed_det_thaddeus(g, d, &t).unwrap();
            assert_eq!(fixed.poly.diagonal(), univariate);
            println!(
                "d={d} tau={}: fixed {} (dim {:?}); unfixed dim {:?}",
                rational_string(&tau),
                fixed.poly,
                fixed.dim,
                free.dim
            );
        }
    }
    let wall: StabilityValue = "1".parse().unwrap();
    println!(
        "tau=1, d=1: {}",
        hodge_pairs(g, 1, &wall, true).unwrap_err()
    );
}
