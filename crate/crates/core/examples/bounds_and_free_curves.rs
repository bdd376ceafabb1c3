//! Lower and upper Tjurina bounds in terms of r = mdr(f), and the freeness test for
//! plane curves, which is attainment of the upper bound.

use tjurina::algebra::FieldMode;
use tjurina::invariants::Analysis;
use tjurina::parse::parse_poly;
use tjurina::syzygy::JacobianSystem;

fn main() -> tjurina::error::Result<()> {
    let curves = [
        ("x0*x1*x2", "triangle"),
        ("x0^2*x1*x2 + x0*x1^2*x2 + x0*x1*x2^2", "four general lines"),
        ("x0^2*x1*x2 - x0*x1^2*x2", "three concurrent lines and one more"),
        ("x0^5 + x1^4*x2", "x^5 + y^4 point"),
        ("x0^3 + x1^3 + x0*x1*x2", "nodal cubic"),
    ];
    for (text, label) in curves {
        let f = parse_poly(text, None)?;
        let a = Analysis::new(JacobianSystem::new(f.clone(), FieldMode::Exact)?, None)?;
        let b = a.dpw_bounds()?;
        let free = a.free_curve(true)?;
        println!(
            "{label:<36} d={} r={} {:>3} <= tau={:<3} <= {:<3} free: {}",
            f.degree(),
            b.r,
            b.lower,
            b.tau,
            b.upper,
            free.holds
        );
    }
    Ok(())
}
