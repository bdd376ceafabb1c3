//! f'(x0, x1, x2) + x3^d + ... + xn^d keeps mdr and multiplies local Milnor numbers
//! by (d-1) for each new variable.

use tjurina::algebra::FieldMode;
use tjurina::invariants::global_tjurina;
use tjurina::oracle::suspend;
use tjurina::parse::parse_poly;
use tjurina::syzygy::JacobianSystem;

fn main() -> tjurina::error::Result<()> {
    for text in ["x0*x1*x2", "x0^5 + x1^4*x2", "x0^3 + x1^3 + x0*x1*x2"] {
        let base = parse_poly(text, None)?;
        let sys = JacobianSystem::new(base.clone(), FieldMode::Exact)?;
        println!("{base}: mdr = {}, tau = {}", sys.mdr()?, global_tjurina(&sys)?);
        for n in 3..=4 {
            let f = suspend(&base, n)?;
            let s = JacobianSystem::new(f.clone(), FieldMode::Exact)?;
            println!("  n = {n}: {f}: mdr = {}, tau = {}", s.mdr()?, global_tjurina(&s)?);
        }
    }
    Ok(())
}
