//! The σ-interval of a triple family, its walls, and one σ per chamber.

use hodge_triples::laurent::rational_string;
use hodge_triples::triples::{
    chamber_d0, chamber_representatives, critical_values, sigma_interval,
};
use hodge_triples::{RankPair, StabilityValue, TripleSpec};

fn main() {
    for (rank, d1, d2) in [(RankPair::TwoOne, 5, 0), (RankPair::OneTwo, 2, 1)] {
        let spec = TripleSpec::new(2, rank, d1, d2).unwrap();
        let (lo, hi) = sigma_interval(&spec).unwrap();
        println!(
            "rank {rank}, d1={d1}, d2={d2}: sigma in ({}, {})",
            rational_string(&lo),
            rational_string(&hi)
        );
        for w in critical_values(&spec).unwrap() {
            println!("  wall sigma_c={} d_M={}", rational_string(&w.sigma), w.d_m);
        }
        for sigma in chamber_representatives(&spec).unwrap() {
            let d0 = chamber_d0(&spec, &StabilityValue::exact(sigma.clone()))
                .unwrap()
                .d0;
            println!("  chamber at sigma={} has d0={d0}", rational_string(&sigma));
        }
        let on_wall: StabilityValue = "4".parse().unwrap();
        if let Err(e) = chamber_d0(&spec, &on_wall) {
            println!("  sigma=4: {e}");
        }
    }
}
