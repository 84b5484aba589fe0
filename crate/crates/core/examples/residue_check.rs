//! A coefficient extracted from a rational series, compared with the sum
//! of residues at its three poles.

use hodge_triples::laurent::{frac, int};
use hodge_triples::triples::residue_extract_check;
use hodge_triples::Genus;

fn main() {
    let g = Genus::new(2).unwrap();
    let (series, residues) =
        residue_extract_check(g, &int(1), &int(2), &int(3), &int(0), &int(0)).unwrap();
    println!("poles 1,2,3 at u=v=0: series {series}, residues {residues}");
    let (series, residues) = residue_extract_check(
        Genus::new(3).unwrap(),
        &frac(1, 2),
        &int(-3),
        &frac(5, 7),
        &frac(2, 3),
        &int(-1),
    )
    .unwrap();
    println!("g=3 mixed poles: series {series}, residues {residues}");
    println!(
        "repeated pole: {}",
        residue_extract_check(g, &int(1), &int(1), &int(2), &int(0), &int(0)).unwrap_err()
    );
}
