//! Rank-2 bundles of odd degree, from their own closed form and by
//! dividing the small-σ triple moduli by its projective-bundle fibre.

use hodge_triples::triples::{hodge_bundles_odd, hodge_bundles_via_triples};
use hodge_triples::Genus;

fn main() {
    for g in 2..=4 {
        let genus = Genus::new(g).unwrap();
        let fixed = hodge_bundles_odd(genus, 1, true).unwrap();
        let free = hodge_bundles_odd(genus, 1, false).unwrap();
        assert_eq!(free.poly, hodge_bundles_via_triples(genus, 1).unwrap());
        println!(
            "g={g}: M(2,L) dim {:?}, Poincaré {}",
            fixed.dim,
            fixed.poly.diagonal()
        );
        println!(
            "      M(2,1) dim {:?}, {} Hodge terms",
            free.dim,
            free.poly.len()
        );
    }
    println!(
        "even degree: {}",
        hodge_bundles_odd(Genus::new(2).unwrap(), 2, true).unwrap_err()
    );
}
