//! τ(V) three ways on the built-in instances: the ER dimension in degrees n(d-2) and
//! n(d-2)+1, the stable Hilbert function of S/J_f, and local Brieskorn numbers.

use std::time::Instant;

use tjurina::algebra::FieldMode;
use tjurina::corpus::corpus;
use tjurina::oracle::hilbert_tau;
use tjurina::syzygy::JacobianSystem;

fn main() -> tjurina::error::Result<()> {
    println!("{:<24} {:>6} {:>6} {:>8} {:>10} {:>9}", "instance", "er(T)", "er(T+1)", "hilbert", "brieskorn", "seconds");
    for inst in corpus() {
        let start = Instant::now();
        let f = inst.poly();
        let sys = JacobianSystem::new(f.clone(), FieldMode::Exact)?;
        let t = sys.stable_degree();
        let (a, b) = (sys.er_dim(t)?, sys.er_dim(t + 1)?);
        let h = hilbert_tau(&f, FieldMode::Exact)?;
        let local = inst.brieskorn_tau()?.map_or("-".to_string(), |x| x.to_string());
        println!(
            "{:<24} {:>6} {:>6} {:>8} {:>10} {:>9.3}",
            inst.name,
            a,
            b,
            h,
            local,
            start.elapsed().as_secs_f64()
        );
    }
    Ok(())
}
