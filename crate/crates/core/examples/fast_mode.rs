//! Exact and modular elimination side by side. The fast path only reports a result
//! it has confirmed over Q, so both columns agree.

use std::time::Instant;

use tjurina::algebra::FieldMode;
use tjurina::parse::parse_poly;
use tjurina::report::{full_report, ReportOptions};

fn main() -> tjurina::error::Result<()> {
    let inputs = [
        "x0^7 + x1^6*x2",
        "x0^8 + x1^8 + x2^8 + x0^3*x1^3*x2^2",
        "x0^6 + x1^5*x2 + x3^6",
    ];
    for text in inputs {
        let f = parse_poly(text, None)?;
        let mut reports = Vec::new();
        for mode in [FieldMode::Exact, FieldMode::Fast] {
            let start = Instant::now();
            let opts = ReportOptions { mode, reduced_claim: true, ..Default::default() };
            let mut r = full_report(&f, &opts)?;
            println!("{text:<40} {mode:<5} tau = {:<4} {:.3}s", r.invariants.tau, start.elapsed().as_secs_f64());
            r.input.field = FieldMode::Exact;
            reports.push(serde_json::to_string(&r).expect("serializes"));
        }
        assert_eq!(reports[0], reports[1]);
    }
    Ok(())
}
