//! Bases of AR(f)_k, the Koszul generators spanning KR(f)_k, and representatives of
//! ER(f)_k, for a small nodal cubic.

use tjurina::algebra::FieldMode;
use tjurina::parse::parse_poly;
use tjurina::syzygy::JacobianSystem;

fn main() -> tjurina::error::Result<()> {
    let f = parse_poly("x0^3 + x1^3 + x0*x1*x2", None)?;
    let sys = JacobianSystem::new(f.clone(), FieldMode::Exact)?;
    println!("f = {f}");
    for (j, fj) in sys.partials().iter().enumerate() {
        println!("  f{j} = {fj}");
    }
    for k in 0..=3 {
        let ar = sys.ar_basis(k);
        let kr = sys.koszul_generators(k);
        let er = sys.er_representatives(k);
        println!("k = {k}: dim AR = {}, Koszul generators {}, dim ER = {}", ar.len(), kr.len(), er.len());
        for rho in &er {
            assert!(rho.is_relation_of(sys.partials()));
            println!("  essential: {rho}");
        }
    }
    Ok(())
}
