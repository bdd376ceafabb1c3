use tjurina::algebra::FieldMode;
use tjurina::invariants::{stability_split, Analysis};
use tjurina::parse::parse_poly;
use tjurina::syzygy::JacobianSystem;

fn main() -> tjurina::error::Result<()> {
    for d in 2..=9 {
        let (d_prime, eps) = stability_split(d);
        let threshold = (d - d_prime - 1) * (d - 1).pow(2);
        println!("d = {d}: d' = {d_prime}, eps = {eps}, tau < {threshold}, c1 = {}", 1 - eps as i32);
    }
    println!();

    let surfaces = [
        "x0*x1*x2 + x3^3",
        "x0^4 + x1^4 + x2^4 + x0^2*x3^2 + x1^2*x3^2 + x2^2*x3^2",
        "x0^5 + x1^4*x2 + x3^5",
    ];
    for text in surfaces {
        let a = Analysis::new(JacobianSystem::new(parse_poly(text, None)?, FieldMode::Exact)?, None)?;
        let s = a.stability()?;
        println!(
            "{text}\n  tau = {}, threshold {}, holds {}, dim AR_{} = {}",
            a.tau(),
            s.details.threshold,
            s.holds,
            s.details.d_prime,
            s.details.ar_dim_at_d_prime
        );
        if let Some(c) = s.details.conclusion {
            println!("  {c}");
        }
        if let Ok(t) = a.torelli() {
            println!("  torelli: tau = {} < {} is {}, mdr = {}", t.details.tau, t.details.threshold, t.holds, t.details.mdr);
        }
    }

    let sextic = parse_poly("x0^6 + x1^6 + x0*x1*x2^4", None)?;
    let a = Analysis::new(JacobianSystem::new(sextic.clone(), FieldMode::Exact)?, None)?;
    let t = a.torelli()?;
    println!("\n{sextic}: tau = {}, threshold {}, mdr = {}", a.tau(), t.details.threshold, a.mdr());
    if let Some(c) = t.details.conclusion {
        println!("  {c}");
    }
    Ok(())
}
