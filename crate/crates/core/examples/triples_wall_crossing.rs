//! Hodge polynomials of triples two ways: the closed formula and the sum
//! of flip contributions over the walls above σ.

use hodge_triples::laurent::rational_string;
use hodge_triples::triples::{
    chamber_representatives, flip_difference, flip_difference_series, hodge_triples_closed,
    hodge_triples_sum,
};
use hodge_triples::{RankPair, StabilityValue, TripleSpec};

fn main() {
    let spec = TripleSpec::new(2, RankPair::TwoOne, 5, 0).unwrap();
    for sigma in chamber_representatives(&spec).unwrap() {
        let s = StabilityValue::exact(sigma.clone());
        let closed = hodge_triples_closed(&spec, &s).unwrap();
        let summed = hodge_triples_sum(&spec, &s).unwrap();
        assert_eq!(closed, summed);
        println!("sigma={} dim={:?}", rational_string(&sigma), closed.dim);
        println!("  e = {}", closed.poly);
        println!("  Poincaré = {}", closed.poly.diagonal());
    }
    for d_m in 3..=5 {
        let blocks = flip_difference(&spec, d_m).unwrap();
        assert_eq!(blocks, flip_difference_series(&spec, d_m).unwrap());
        println!("flip at d_M={d_m}: {} terms", blocks.len());
    }
    let dual = TripleSpec::new(2, RankPair::OneTwo, 0, -5).unwrap();
    let s = StabilityValue::exact(chamber_representatives(&dual).unwrap()[0].clone());
    println!(
        "rank (1,2) d1=0 d2=-5 first chamber dim {:?}",
        hodge_triples_closed(&dual, &s).unwrap().dim
    );
}
