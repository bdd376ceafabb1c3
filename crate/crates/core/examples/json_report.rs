//! Structured report for a polynomial given on the command line.
//!
//! `cargo run --example json_report -- "x0*x1*x2"`

use tjurina::parse::parse_poly;
use tjurina::report::{full_report, ReportOptions};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "x0^5 + x1^4*x2".to_string());
    let report = parse_poly(&text, None).and_then(|f| {
        full_report(&f, &ReportOptions { reduced_claim: true, ..Default::default() })
    });
    match report {
        Ok(r) => println!("{}", serde_json::to_string_pretty(&r).expect("serializes")),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(tjurina::cli::exit_code(&e));
        }
    }
}
