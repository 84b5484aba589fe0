//! Output records as the command-line tool prints them, and the same
//! request issued through the CLI entry point.

use hodge_triples::cli::{run_from, OutputRecord, Request};
use hodge_triples::triples::hodge_bundles_odd;
use hodge_triples::Genus;

fn main() {
    let result = hodge_bundles_odd(Genus::new(2).unwrap(), 1, true).unwrap();
    let request = Request {
        target: "bundle-fixed".into(),
        g: 2,
        rank: None,
        d1: None,
        d2: None,
        degree: Some(1),
        sigma: None,
        tau: None,
        d0: None,
    };
    let record = OutputRecord::new(request, &result, true);
    println!("text:  {}", record.to_text());
    println!("latex: {}", record.to_latex());
    println!("json:  {}", record.to_json());
    println!("csv:   {}", record.to_csv());

    let args = [
        "hodge", "compute", "triple", "--genus", "2", "--d1", "5", "--d2", "0", "--sigma", "7+",
    ];
    let code = run_from(args, &mut std::io::stdout(), &mut std::io::stderr());
    println!("exit code {code}");
}
