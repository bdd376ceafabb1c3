//! End-to-end acceptance run: one line per criterion, nonzero exit if any fails.

use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tjurina::algebra::{rat, FieldMode, HomogeneousPoly, Monomial, Rational};
use tjurina::corpus::{corpus, instance, Instance};
use tjurina::invariants::{Analysis, SingularPoint};
use tjurina::oracle::{hilbert_tau, nodal_defect, suspend};
use tjurina::parse::parse_poly;
use tjurina::report::{full_report, ReportOptions};
use tjurina::syzygy::{JacobianSystem, SyzygyVector};

type Outcome = Result<String, String>;

macro_rules! check {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn analysis(f: &HomogeneousPoly) -> Result<Analysis, String> {
    Analysis::new(JacobianSystem::new(f.clone(), FieldMode::Exact).map_err(err)?, None).map_err(err)
}

fn singular_instances() -> impl Iterator<Item = &'static Instance> {
    corpus().iter().filter(|i| !i.singular_points.is_empty())
}

/// Degree-one essential relation of x0^5 + x1^4*x2 and its value at (0:0:1).
fn criterion_1() -> Outcome {
    let start = Instant::now();
    let f = parse_poly("x0^5 + x1^4*x2", None).map_err(err)?;
    let a = analysis(&f)?;
    check!(a.mdr() == 1, "mdr = {}", a.mdr());
    check!(a.mder() == Some(1), "mder = {:?}", a.mder());
    let reps = a.system().er_representatives(1);
    check!(reps.len() == 1, "{} representatives in degree 1", reps.len());
    let expected = SyzygyVector::new(
        1,
        vec![
            HomogeneousPoly::zero(3, 1),
            parse_poly("x1", Some(3)).map_err(err)?,
            parse_poly("-4*x2", Some(3)).map_err(err)?,
        ],
    );
    let rho = &reps[0];
    let scale = rho.components()[1].coefficient(&Monomial::new(vec![0, 1, 0]));
    check!(!scale.is_zero(), "rho has no x1 term in the second slot: {rho}");
    check!(expected.scale(&scale) == *rho, "rho = {rho} is not a multiple of {expected}");
    let p = SingularPoint::certify(&f, vec![rat(0), rat(0), rat(1)]).map_err(err)?;
    let w = a.topological_witness(1, &p, true).map_err(err)?;
    check!(w.details.evaluation == ["0", "0", "-4"], "rho(p) = {:?}", w.details.evaluation);
    check!(w.holds, "no versality verdict");
    let elapsed = start.elapsed();
    check!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("rho = {}, rho(0:0:1) = (0, 0, -4), {:.3}s", w.details.representative, elapsed.as_secs_f64()))
}

/// τ from ER in two degrees, from the Hilbert function, and from local Brieskorn data.
fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut brieskorn = 0;
    for inst in corpus() {
        let f = inst.poly();
        let sys = JacobianSystem::new(f.clone(), FieldMode::Exact).map_err(err)?;
        let t = sys.stable_degree();
        let e0 = sys.er_dim(t).map_err(err)?;
        let e1 = sys.er_dim(t + 1).map_err(err)?;
        let h = hilbert_tau(&f, FieldMode::Exact).map_err(err)?;
        check!(e0 == e1 && e1 == h, "{}: er(T) = {e0}, er(T+1) = {e1}, hilbert = {h}", inst.name);
        if let Some(b) = inst.brieskorn_tau().map_err(err)? {
            check!(b == h as u64, "{}: brieskorn {b} vs {h}", inst.name);
            brieskorn += 1;
        }
    }
    let elapsed = start.elapsed();
    check!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!(
        "{} instances, {brieskorn} with Brieskorn data, {:.2}s",
        corpus().len(),
        elapsed.as_secs_f64()
    ))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for inst in singular_instances() {
        let a = analysis(&inst.poly())?;
        let (n, d, r, tau) = (a.system().n() as u32, i64::from(a.system().d()), a.mdr() as i64, a.tau() as i64);
        let lower = (d - r - 1) * (d - 1).pow(n - 1);
        let upper = (d - 1).pow(n) - r * (d - r - 1) * (d - 1).pow(n - 2);
        check!(lower <= tau && tau <= upper, "{}: {lower} <= {tau} <= {upper} fails", inst.name);
        let b = a.dpw_bounds().map_err(err)?;
        check!((b.lower, b.upper) == (lower, upper), "{}: reported bounds differ", inst.name);
        checked += 1;
    }
    let b5 = analysis(&instance("exB-d5").map_err(err)?.poly())?.dpw_bounds().map_err(err)?;
    check!(b5.lower == 12 && b5.attain_lower, "exB-d5 bounds {:?}", b5);
    let tri = analysis(&instance("triangle").map_err(err)?.poly())?;
    let bt = tri.dpw_bounds().map_err(err)?;
    check!(bt.upper == 3 && bt.attain_upper, "triangle bounds {:?}", bt);
    check!(tri.free_curve(true).map_err(err)?.holds, "triangle not free");
    Ok(format!("{checked} singular instances; exB-d5 lower 12 attained; triangle upper 3 attained and free"))
}

fn criterion_4() -> Outcome {
    let mut compared = 0;
    for inst in corpus().iter().filter(|i| i.all_nodes && !i.singular_points.is_empty()) {
        let nodes = inst.nodes().map_err(err)?.expect("node instance");
        let a = analysis(&inst.poly())?;
        check!(nodes.len() == a.tau(), "{}: {} nodes, tau {}", inst.name, nodes.len(), a.tau());
        let t = a.system().stable_degree();
        for k in 0..t {
            let er = a.system().er_dim(k).map_err(err)?;
            let defect = nodal_defect(&nodes, t - 1 - k);
            check!(er == defect, "{}: er({k}) = {er}, defect_{} = {defect}", inst.name, t - 1 - k);
            compared += 1;
        }
    }
    Ok(format!("{compared} degree comparisons against point evaluation"))
}

fn criterion_5() -> Outcome {
    let mut n = 0;
    for inst in singular_instances() {
        let a = analysis(&inst.poly())?;
        let rhs = a.system().stable_degree() as i64 - a.tau() as i64;
        let mder = a.mder().ok_or_else(|| format!("{}: singular but mder is none", inst.name))?;
        check!(mder as i64 > rhs, "{}: mder {mder} <= {rhs}", inst.name);
        n += 1;
    }
    Ok(format!("{n} singular instances"))
}

fn criterion_6() -> Outcome {
    let mut n = 0;
    for inst in singular_instances() {
        let a = analysis(&inst.poly())?;
        let t = a.system().stable_degree();
        let mder = a.mder().expect("singular");
        for alpha in 0..t {
            let by_mder = alpha < mder;
            let by_defect = a.defect(t - 1 - alpha).map_err(err)? == 0;
            check!(by_mder == by_defect, "{}: a = {alpha} disagrees", inst.name);
            check!(a.versality(alpha).map_err(err)?.holds == by_mder, "{}: verdict at a = {alpha}", inst.name);
            n += 1;
        }
    }
    Ok(format!("{n} (instance, a) pairs"))
}

fn criterion_7() -> Outcome {
    let mut pairs = Vec::new();
    for inst in corpus() {
        if let Some(base) = inst.suspension_of {
            let base = instance(base).map_err(err)?;
            let s = suspend(&base.poly(), inst.poly().n_vars() - 1).map_err(err)?;
            check!(s == inst.poly(), "{} is not the suspension of {}", inst.name, base.name);
            pairs.push((base.poly(), s));
        }
        if inst.poly().n_vars() == 3 {
            pairs.push((inst.poly(), suspend(&inst.poly(), 3).map_err(err)?));
        }
    }
    for (g, f) in &pairs {
        let r0 = JacobianSystem::new(g.clone(), FieldMode::Exact).map_err(err)?.mdr().map_err(err)?;
        let r1 = JacobianSystem::new(f.clone(), FieldMode::Exact).map_err(err)?.mdr().map_err(err)?;
        check!(r0 == r1, "mdr({g}) = {r0}, mdr({f}) = {r1}");
    }
    Ok(format!("{} pairs", pairs.len()))
}

fn criterion_8() -> Outcome {
    let (mut stab, mut tor) = ([0, 0], [0, 0]);
    for inst in corpus() {
        let a = analysis(&inst.poly())?;
        if a.system().n() == 3 {
            let v = a.stability().map_err(err)?;
            if v.holds {
                let d_prime = v.details.d_prime as usize;
                check!(a.system().ar_dim(d_prime) == 0, "{}: AR_{d_prime} != 0", inst.name);
            }
            stab[usize::from(v.holds)] += 1;
        }
        if a.system().d() >= 4 {
            let v = a.torelli().map_err(err)?;
            if v.holds {
                check!(a.mdr() + 2 > a.system().d() as usize, "{}: mdr {} <= d-2", inst.name, a.mdr());
            }
            tor[usize::from(v.holds)] += 1;
        }
    }
    check!(stab[0] > 0 && stab[1] > 0, "stability branches exercised: {stab:?}");
    check!(tor[0] > 0 && tor[1] > 0, "torelli branches exercised: {tor:?}");
    Ok(format!(
        "stability holds/fails on {}/{} instances, torelli on {}/{}",
        stab[1], stab[0], tor[1], tor[0]
    ))
}

const CURVE_D10: &str = "x0^10 + x1^10 + x2^10 + 3*x0^4*x1^3*x2^3 - 2*x0^2*x1^7*x2 + x0*x1*x2^8";
const SINGULAR_CURVE_D10: &str = "x0^10 + x1^10 - x0^2*x1^2*x2^6 + 2*x0^3*x2^7 + x1^5*x2^5";
const SURFACE_D6: &str = "x0^6 + x1^6 + x2^6 + x3^6 + x0^2*x1^2*x2*x3 - 2*x0*x1^3*x3^2 + x1*x2^2*x3^3";

fn criterion_9() -> Outcome {
    let mut notes = Vec::new();
    for text in [SINGULAR_CURVE_D10, CURVE_D10] {
        let start = Instant::now();
        let f = parse_poly(text, None).map_err(err)?;
        let r = full_report(&f, &ReportOptions { reduced_claim: true, ..Default::default() }).map_err(err)?;
        let elapsed = start.elapsed();
        check!(elapsed < Duration::from_secs(120), "d = 10 report took {elapsed:?}");
        notes.push(format!("d=10 tau={} {:.1}s", r.invariants.tau, elapsed.as_secs_f64()));
    }

    let start = Instant::now();
    let sys = JacobianSystem::new(parse_poly(SURFACE_D6, None).map_err(err)?, FieldMode::Exact).map_err(err)?;
    let dims = sys.graded_dims(12).map_err(err)?;
    let elapsed = start.elapsed();
    check!(elapsed < Duration::from_secs(600), "surface took {elapsed:?}");
    let cols = 4 * tjurina::algebra::count_monomials(4, 12);
    notes.push(format!("n=3 d=6 up to k=12 ({cols} columns) {:.1}s", elapsed.as_secs_f64()));
    check!(dims.cap() == 12, "table stops at {}", dims.cap());

    let start = Instant::now();
    for inst in corpus() {
        let f = inst.poly();
        let exact = full_report(&f, &inst.report_options(FieldMode::Exact)).map_err(err)?;
        let mut fast = full_report(&f, &inst.report_options(FieldMode::Fast)).map_err(err)?;
        fast.input.field = FieldMode::Exact;
        let (a, b) = (serde_json::to_string(&exact).map_err(err)?, serde_json::to_string(&fast).map_err(err)?);
        check!(a == b, "{}: fast report differs from exact", inst.name);
    }
    notes.push(format!("fast = exact on {} reports {:.1}s", corpus().len(), start.elapsed().as_secs_f64()));
    Ok(notes.join("; "))
}

fn random_sparse(rng: &mut ChaCha8Rng, d: u32) -> HomogeneousPoly {
    let count = rng.gen_range(2..=6);
    let terms = (0..count).map(|_| {
        let a = rng.gen_range(0..=d);
        let b = rng.gen_range(0..=d - a);
        let c = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
        (Monomial::new(vec![a, b, d - a - b]), rat(c))
    });
    HomogeneousPoly::from_terms(3, terms).expect("single degree")
}

/// Partials independent, shown by a nonsingular 3x3 evaluation matrix at integer points.
fn partials_visibly_independent(f: &HomogeneousPoly, rng: &mut ChaCha8Rng) -> bool {
    let partials: Vec<_> = (0..3).map(|j| f.partial_derivative(j)).collect();
    let pts: Vec<Vec<Rational>> = (0..3).map(|_| (0..3).map(|_| rat(rng.gen_range(-7..=7))).collect()).collect();
    let m: Vec<Vec<Rational>> = pts.iter().map(|p| partials.iter().map(|g| g.evaluate(p)).collect()).collect();
    let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
    !det.is_zero()
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20_261_019);
    let (mut cones, mut non_cones, mut singular) = (0, 0, 0);
    for _ in 0..100 {
        let d = rng.gen_range(2..=6);
        let f = random_sparse(&mut rng, d);
        if f.is_zero() {
            continue;
        }
        // Euler
        let euler = (0..3).fold(HomogeneousPoly::zero(3, d), |acc, j| {
            acc.add(&HomogeneousPoly::var(3, j).mul(&f.partial_derivative(j)))
        });
        check!(euler == f.scale(&rat(i64::from(d))), "Euler identity fails for {f}");

        // a cone by construction: f(l1, l2) for two linear forms in three variables
        let g = HomogeneousPoly::from_terms(
            2,
            f.terms().map(|(m, c)| (Monomial::new(vec![m.exponents()[0], m.exponents()[1] + m.exponents()[2]]), c.clone())),
        )
        .expect("same degree");
        if !g.is_zero() {
            let l1 = parse_poly("x0 + 2*x1 - x2", None).map_err(err)?;
            let l2 = parse_poly("x1 + 3*x2", None).map_err(err)?;
            let cone = g.substitute_linear(&[l1, l2]);
            if !cone.is_zero() {
                let sys = JacobianSystem::new(cone.clone(), FieldMode::Exact).map_err(err)?;
                check!(sys.ar_dim(0) > 0, "constructed cone {cone} not detected");
                cones += 1;
            }
        }
        if partials_visibly_independent(&f, &mut rng) {
            let sys = JacobianSystem::new(f.clone(), FieldMode::Exact).map_err(err)?;
            check!(sys.ar_dim(0) == 0, "{f} flagged as a cone");
            non_cones += 1;
        }

        // force a singular point at (1:0:0) by dropping x0^d, x0^{d-1}x1, x0^{d-1}x2
        let h = HomogeneousPoly::from_terms(
            3,
            f.terms()
                .filter(|(m, _)| m.exponents()[0] + 1 < d)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
        .expect("same degree")
        .with_degree(d);
        if !h.is_zero() {
            let p = vec![rat(1), rat(0), rat(0)];
            let p = SingularPoint::certify(&h, p).map_err(|e| format!("{h}: {e}"))?;
            let sys = JacobianSystem::new(h.clone(), FieldMode::Exact).map_err(err)?;
            for k in 0..=(2 * d as usize) {
                for kappa in sys.koszul_generators(k) {
                    check!(kappa.is_relation_of(sys.partials()), "{h}: Koszul element not a relation");
                    check!(kappa.evaluate(p.coords()).iter().all(Zero::is_zero), "{h}: Koszul element nonzero at p");
                }
                check!(sys.kr_dim(k) <= sys.ar_dim(k), "{h}: KR_{k} exceeds AR_{k}");
            }
            singular += 1;
        }
    }
    check!(cones >= 50 && non_cones >= 50 && singular >= 50, "too few usable instances: {cones}/{non_cones}/{singular}");
    Ok(format!("100 random curves: {cones} cones, {non_cones} non-cones, {singular} singular at (1:0:0)"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("essential syzygy witness of x0^5 + x1^4*x2", criterion_1),
        ("three routes to tau agree on the corpus", criterion_2),
        ("Tjurina bounds in terms of mdr", criterion_3),
        ("ER dimensions equal nodal defects", criterion_4),
        ("mder > n(d-2) - tau", criterion_5),
        ("versality by mder equals versality by defect", criterion_6),
        ("suspension preserves mdr", criterion_7),
        ("stability and Torelli side conditions", criterion_8),
        ("scale, timing, fast mode equals exact", criterion_9),
        ("randomized structural properties", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} [{detail}] ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
