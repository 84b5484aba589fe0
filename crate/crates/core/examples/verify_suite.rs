//! Runs the invariant suite over a small grid and prints the failures.

use hodge_triples::verify::{run_suite, D1Range, Grid};

fn main() {
    let grid = Grid {
        genera: vec![2],
        d1: D1Range::Offset((1..=5).collect()),
        random_cases: 25,
        ..Grid::default()
    };
    let report = run_suite(&grid);
    for r in report.failures() {
        println!("{r}");
    }
    let s = report.summary;
    println!(
        "{} checks: {} passed, {} failed",
        s.total, s.passed, s.failed
    );
}
