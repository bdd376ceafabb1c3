//! Aggregates every applicable check into one serializable report.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::{FieldMode, HomogeneousPoly, Rational};
use crate::error::{ensure, Result};
use crate::invariants::{
    Analysis, DefectEntry, DpwBounds, DualityDetails, FreeCurveDetails, InequalityDetails,
    SingularPoint, StabilityDetails, TSmoothnessDetails, TorelliDetails, Verdict,
    VersalityDetails, WitnessDetails,
};
use crate::oracle::NodalConfiguration;
use crate::syzygy::{GradedPiece, JacobianSystem};

#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    pub mode: FieldMode,
    /// Highest degree of the graded table; defaults to n(d-2)+1.
    pub cap: Option<usize>,
    /// Singular point for the witness check.
    pub witness_point: Option<Vec<Rational>>,
    /// Degree of the witness; defaults to mder(f).
    pub witness_a: Option<usize>,
    pub non_simple_claim: bool,
    /// All singular points, claimed to be nodes, for the duality check.
    pub nodes: Vec<Vec<Rational>>,
    pub reduced_claim: bool,
    /// Record wall-clock timings; off by default so that reports are reproducible.
    pub timings: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantsReport {
    pub input: InputSection,
    pub invariants: InvariantsSection,
    pub tables: Tables,
    pub bounds: DpwBounds,
    pub verdicts: Verdicts,
    pub timings: Option<BTreeMap<String, f64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputSection {
    pub polynomial: String,
    pub n_vars: usize,
    pub n: usize,
    pub d: u32,
    pub field: FieldMode,
    pub cap: usize,
    pub claims: Claims,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claims {
    pub reduced: bool,
    pub non_simple: bool,
    pub witness_point: Option<String>,
    pub nodes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantsSection {
    pub cone: bool,
    pub mdr: usize,
    pub mder: Option<usize>,
    pub tau: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tables {
    pub graded_dims: Vec<GradedPiece>,
    pub defects: Vec<DefectEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub versality: Vec<Verdict<VersalityDetails>>,
    pub defect_duality: Option<Verdict<DualityDetails>>,
    pub t_smoothness: Option<Verdict<TSmoothnessDetails>>,
    pub mder_tau_inequality: Option<Verdict<InequalityDetails>>,
    pub topological_witness: Option<Verdict<WitnessDetails>>,
    pub free_curve: Option<Verdict<FreeCurveDetails>>,
    pub stability: Option<Verdict<StabilityDetails>>,
    pub torelli: Option<Verdict<TorelliDetails>>,
}

fn render_point(p: &[Rational]) -> String {
    p.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn timed<T>(timings: &mut BTreeMap<String, f64>, key: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timings.insert(key.to_string(), start.elapsed().as_secs_f64());
    out
}

/// Runs every check that applies to the dimension and degree of `f`.
pub fn full_report(f: &HomogeneousPoly, opts: &ReportOptions) -> Result<InvariantsReport> {
    let mut timings = BTreeMap::new();
    let sys = JacobianSystem::new(f.clone(), opts.mode)?;
    let analysis = timed(&mut timings, "analysis", || Analysis::new(sys, opts.cap))?;
    let (n, d, tau) = (analysis.system().n(), analysis.system().d(), analysis.tau());

    let witness_point = opts
        .witness_point
        .clone()
        .map(|c| SingularPoint::certify(f, c))
        .transpose()?;
    let nodes = if opts.nodes.is_empty() {
        None
    } else {
        Some(NodalConfiguration::new(
            opts.nodes
                .iter()
                .map(|c| SingularPoint::certify(f, c.clone()))
                .collect::<Result<_>>()?,
        )?)
    };

    let start = Instant::now();
    let ((versality, defects), ((t_smoothness, inequality), (witness, duality))) = rayon::join(
        || (analysis.versality_all(), analysis.defect_table()),
        || {
            rayon::join(
                || {
                    if tau > 0 {
                        (
                            analysis.t_smoothness().map(Some),
                            analysis.mder_tau_inequality().map(Some),
                        )
                    } else {
                        (Ok(None), Ok(None))
                    }
                },
                || {
                    let witness = witness_point
                        .as_ref()
                        .map(|p| {
                            let a = opts.witness_a.or(analysis.mder()).unwrap_or(0);
                            analysis.topological_witness(a, p, opts.non_simple_claim)
                        })
                        .transpose();
                    let duality = nodes.as_ref().map(|c| analysis.defect_duality(c)).transpose();
                    (witness, duality)
                },
            )
        },
    );
    timings.insert("checks".into(), start.elapsed().as_secs_f64());
    let bounds = analysis.dpw_bounds()?;
    let defects = defects?;
    for e in &defects {
        ensure!(e.defect <= tau, "defect_{} = {} exceeds tau = {tau}", e.k, e.defect);
    }

    let verdicts = Verdicts {
        versality: versality?,
        defect_duality: duality?,
        t_smoothness: t_smoothness?,
        mder_tau_inequality: inequality?,
        topological_witness: witness?,
        free_curve: if n == 2 {
            Some(analysis.free_curve(opts.reduced_claim)?)
        } else {
            None
        },
        stability: if n == 3 { Some(analysis.stability()?) } else { None },
        torelli: if d >= 4 { Some(analysis.torelli()?) } else { None },
    };

    Ok(InvariantsReport {
        input: InputSection {
            polynomial: f.to_string(),
            n_vars: f.n_vars(),
            n,
            d,
            field: opts.mode,
            cap: analysis.dims().cap(),
            claims: Claims {
                reduced: opts.reduced_claim,
                non_simple: opts.non_simple_claim,
                witness_point: opts.witness_point.as_deref().map(render_point),
                nodes: opts.nodes.iter().map(|p| render_point(p)).collect(),
            },
        },
        invariants: InvariantsSection {
            cone: false,
            mdr: analysis.mdr(),
            mder: analysis.mder(),
            tau,
        },
        tables: Tables {
            graded_dims: analysis.dims().pieces.clone(),
            defects,
        },
        bounds,
        verdicts,
        timings: opts.timings.then_some(timings),
    })
}
