//! dim ER(f)_k against the failure of the nodes to impose independent conditions on
//! forms of degree n(d-2)-1-k, computed by evaluating monomials at the nodes.

use tjurina::algebra::{rat, FieldMode};
use tjurina::invariants::{Analysis, SingularPoint};
use tjurina::oracle::{nodal_defect, NodalConfiguration};
use tjurina::parse::parse_poly;
use tjurina::syzygy::JacobianSystem;

fn main() -> tjurina::error::Result<()> {
    // a smooth cubic and a line through three of its points
    let f = parse_poly("x0^3*x2 - x0*x1^2*x2 + x2^4", None)?;
    let nodes = [[0, 1, 0], [1, 1, 0], [1, -1, 0]]
        .iter()
        .map(|p| SingularPoint::certify(&f, p.iter().map(|&c| rat(c)).collect()))
        .collect::<Result<Vec<_>, _>>()?;
    let config = NodalConfiguration::new(nodes)?;
    let a = Analysis::new(JacobianSystem::new(f.clone(), FieldMode::Exact)?, None)?;
    let t = a.system().stable_degree();
    println!("f = {f}, tau = {}, n(d-2) = {t}", a.tau());
    println!("{:>3} {:>6} {:>14}", "k", "ER_k", "defect_{T-1-k}");
    for k in 0..t {
        println!("{k:>3} {:>6} {:>14}", a.dims().er(k), nodal_defect(&config, t - 1 - k));
    }

    // three points on a line fail to impose independent conditions on linear forms
    let collinear = NodalConfiguration::from_coordinates(vec![
        vec![rat(1), rat(0), rat(0)],
        vec![rat(0), rat(1), rat(0)],
        vec![rat(1), rat(1), rat(0)],
    ])?;
    println!("collinear triple, k = 1: defect {}", nodal_defect(&collinear, 1));
    Ok(())
}
