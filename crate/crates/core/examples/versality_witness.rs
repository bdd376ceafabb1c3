//! The degree-one essential relation of x0^5 + x1^4*x2 and its value at the singular
//! point (0:0:1).

use tjurina::algebra::{rat, FieldMode};
use tjurina::invariants::{Analysis, SingularPoint};
use tjurina::parse::parse_poly;
use tjurina::syzygy::JacobianSystem;

fn main() -> tjurina::error::Result<()> {
    let f = parse_poly("x0^5 + x1^4*x2", None)?;
    let analysis = Analysis::new(JacobianSystem::new(f.clone(), FieldMode::Exact)?, None)?;
    println!("f    = {f}");
    println!("mdr  = {}", analysis.mdr());
    println!("mder = {:?}", analysis.mder());

    let p = SingularPoint::certify(&f, vec![rat(0), rat(0), rat(1)])?;
    // x^5 + y^4 is not a simple singularity
    let w = analysis.topological_witness(1, &p, true)?;
    println!("rho    = {}", w.details.representative);
    println!("rho(p) = ({})", w.details.evaluation.join(", "));
    println!("topologically 1-versal: {}", w.holds);

    for a in 0..analysis.system().stable_degree() {
        let v = analysis.versality(a)?;
        println!(
            "a = {a}: {} (defect_{} = {})",
            if v.holds { "versal" } else { "not versal" },
            v.details.defect_degree,
            v.details.defect
        );
    }
    Ok(())
}
