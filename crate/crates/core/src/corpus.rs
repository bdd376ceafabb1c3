//! Built-in test instances and the suite of checks run over them.

use serde::Serialize;

use crate::algebra::{rat, FieldMode, HomogeneousPoly, Rational};
use crate::error::{Error, Result};
use crate::invariants::SingularPoint;
use crate::oracle::{self, NodalConfiguration};
use crate::parse::parse_poly;
use crate::report::{full_report, InvariantsReport, ReportOptions};
use crate::syzygy::JacobianSystem;

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: &'static str,
    pub polynomial: &'static str,
    pub description: &'static str,
    /// Every singular point of V, when known.
    pub singular_points: &'static [&'static [i64]],
    /// All of `singular_points` are ordinary nodes.
    pub all_nodes: bool,
    /// Local Brieskorn exponents, one list per singular point, when every point has
    /// a Brieskorn normal form.
    pub brieskorn: &'static [&'static [u32]],
    /// Degree a with dim ER(f)_a = 1 whose generator is evaluated at the first
    /// singular point, claimed non-simple.
    pub witness: Option<usize>,
    /// (base instance, n): this polynomial is `suspend(base, n)`.
    pub suspension_of: Option<&'static str>,
    pub reduced: bool,
}

const NO_POINTS: &[&[i64]] = &[];
const NO_EXPONENTS: &[&[u32]] = &[];

const fn smooth(name: &'static str, polynomial: &'static str, description: &'static str) -> Instance {
    Instance {
        name,
        polynomial,
        description,
        singular_points: NO_POINTS,
        all_nodes: true,
        brieskorn: NO_EXPONENTS,
        witness: None,
        suspension_of: None,
        reduced: true,
    }
}

pub const CORPUS: &[Instance] = &[
    Instance {
        name: "exB-d5",
        polynomial: "x0^5 + x1^4*x2",
        description: "one E-type point x^5 + y^4 at (0:0:1)",
        singular_points: &[&[0, 0, 1]],
        all_nodes: false,
        brieskorn: &[&[5, 4]],
        witness: Some(1),
        suspension_of: None,
        reduced: true,
    },
    Instance {
        name: "exB-d6",
        polynomial: "x0^6 + x1^5*x2",
        description: "one point x^6 + y^5 at (0:0:1)",
        singular_points: &[&[0, 0, 1]],
        all_nodes: false,
        brieskorn: &[&[6, 5]],
        witness: Some(1),
        suspension_of: None,
        reduced: true,
    },
    Instance {
        name: "exB-d7",
        polynomial: "x0^7 + x1^6*x2",
        description: "one point x^7 + y^6 at (0:0:1)",
        singular_points: &[&[0, 0, 1]],
        all_nodes: false,
        brieskorn: &[&[7, 6]],
        witness: Some(1),
        suspension_of: None,
        reduced: true,
    },
    smooth("fermat-n2-d3", "x0^3 + x1^3 + x2^3", "smooth cubic curve"),
    smooth("fermat-n2-d4", "x0^4 + x1^4 + x2^4", "smooth quartic curve"),
    smooth("fermat-n2-d5", "x0^5 + x1^5 + x2^5", "smooth quintic curve"),
    smooth("fermat-n3-d3", "x0^3 + x1^3 + x2^3 + x3^3", "smooth cubic surface"),
    smooth("fermat-n3-d4", "x0^4 + x1^4 + x2^4 + x3^4", "smooth quartic surface"),
    smooth("fermat-n3-d5", "x0^5 + x1^5 + x2^5 + x3^5", "smooth quintic surface"),
    Instance {
        suspension_of: Some("fermat-n2-d3"),
        ..smooth("fermat-n4-d3", "x0^3 + x1^3 + x2^3 + x3^3 + x4^3", "smooth cubic threefold")
    },
    Instance {
        name: "triangle",
        polynomial: "x0*x1*x2",
        description: "three lines, nodes at the coordinate points",
        singular_points: &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        all_nodes: true,
        brieskorn: &[&[2, 2], &[2, 2], &[2, 2]],
        witness: None,
        suspension_of: None,
        reduced: true,
    },
    Instance {
        name: "triangle-susp3",
        polynomial: "x0*x1*x2 + x3^3",
        description: "cubic surface with three A2 points",
        singular_points: &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]],
        all_nodes: false,
        brieskorn: &[&[2, 2, 3], &[2, 2, 3], &[2, 2, 3]],
        witness: None,
        suspension_of: Some("triangle"),
        reduced: true,
    },
    Instance {
        name: "exB-d5-susp3",
        polynomial: "x0^5 + x1^4*x2 + x3^5",
        description: "quintic surface with one point x^5 + y^4 + z^5",
        singular_points: &[&[0, 0, 1, 0]],
        all_nodes: false,
        brieskorn: &[&[5, 4, 5]],
        witness: None,
        suspension_of: Some("exB-d5"),
        reduced: true,
    },
    Instance {
        name: "nodal-cubic",
        polynomial: "x0^3 + x1^3 + x0*x1*x2",
        description: "irreducible cubic with one node at (0:0:1)",
        singular_points: &[&[0, 0, 1]],
        all_nodes: true,
        brieskorn: &[&[2, 2]],
        witness: None,
        suspension_of: None,
        reduced: true,
    },
    Instance {
        name: "nodal-sextic",
        polynomial: "x0^6 + x1^6 + x0*x1*x2^4",
        description: "sextic with one node at (0:0:1)",
        singular_points: &[&[0, 0, 1]],
        all_nodes: true,
        brieskorn: &[&[2, 2]],
        witness: None,
        suspension_of: None,
        reduced: true,
    },
    Instance {
        name: "collinear-nodes-quartic",
        polynomial: "x0^3*x2 - x0*x1^2*x2 + x2^4",
        description: "smooth cubic plus a line, three collinear nodes on x2 = 0",
        singular_points: &[&[0, 1, 0], &[1, 1, 0], &[1, -1, 0]],
        all_nodes: true,
        brieskorn: &[&[2, 2], &[2, 2], &[2, 2]],
        witness: None,
        suspension_of: None,
        reduced: true,
    },
    Instance {
        name: "four-lines",
        polynomial: "x0^2*x1*x2 + x0*x1^2*x2 + x0*x1*x2^2",
        description: "four general lines, six nodes",
        singular_points: &[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[0, 1, -1],
            &[1, 0, -1],
            &[1, -1, 0],
        ],
        all_nodes: true,
        brieskorn: &[&[2, 2], &[2, 2], &[2, 2], &[2, 2], &[2, 2], &[2, 2]],
        witness: None,
        suspension_of: None,
        reduced: true,
    },
    Instance {
        name: "nodal-quartic-surface",
        polynomial: "x0^4 + x1^4 + x2^4 + x0^2*x3^2 + x1^2*x3^2 + x2^2*x3^2",
        description: "quartic surface with one node at (0:0:0:1)",
        singular_points: &[&[0, 0, 0, 1]],
        all_nodes: true,
        brieskorn: &[&[2, 2, 2]],
        witness: None,
        suspension_of: None,
        reduced: true,
    },
    Instance {
        name: "exB-d6-susp3",
        polynomial: "x0^6 + x1^5*x2 + x3^6",
        description: "sextic surface with one point x^6 + y^5 + z^6",
        singular_points: &[&[0, 0, 1, 0]],
        all_nodes: false,
        brieskorn: &[&[6, 5, 6]],
        witness: None,
        suspension_of: Some("exB-d6"),
        reduced: true,
    },
];

pub fn corpus() -> &'static [Instance] {
    CORPUS
}

pub fn instance(name: &str) -> Result<&'static Instance> {
    CORPUS
        .iter()
        .find(|i| i.name == name)
        .ok_or_else(|| Error::UnknownInstance(name.to_string()))
}

impl Instance {
    pub fn poly(&self) -> HomogeneousPoly {
        parse_poly(self.polynomial, None).expect("corpus polynomials parse")
    }

    pub fn point_coords(&self) -> Vec<Vec<Rational>> {
        self.singular_points
            .iter()
            .map(|p| p.iter().map(|&c| rat(c)).collect())
            .collect()
    }

    /// The node set, when every singular point is a node.
    pub fn nodes(&self) -> Result<Option<NodalConfiguration>> {
        if !self.all_nodes || self.singular_points.is_empty() {
            return Ok(None);
        }
        let f = self.poly();
        let points = self
            .point_coords()
            .into_iter()
            .map(|c| SingularPoint::certify(&f, c))
            .collect::<Result<Vec<_>>>()?;
        NodalConfiguration::new(points).map(Some)
    }

    /// Sum of the local Brieskorn Tjurina numbers.
    pub fn brieskorn_tau(&self) -> Result<Option<u64>> {
        if self.brieskorn.is_empty() {
            return Ok(None);
        }
        self.brieskorn
            .iter()
            .map(|e| oracle::brieskorn_tau(e))
            .sum::<Result<u64>>()
            .map(Some)
    }

    pub fn report_options(&self, mode: FieldMode) -> ReportOptions {
        let coords = self.point_coords();
        ReportOptions {
            mode,
            cap: None,
            witness_point: self.witness.and(coords.first().cloned()),
            witness_a: self.witness,
            non_simple_claim: self.witness.is_some(),
            nodes: if self.all_nodes { coords } else { Vec::new() },
            reduced_claim: self.reduced,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceOutcome {
    pub name: String,
    pub report: Option<InvariantsReport>,
    pub checks: Vec<Check>,
    pub error: Option<String>,
}

impl InstanceOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.passed)
    }
}

/// Full report plus the cross-checks against the oracles.
pub fn run_instance(inst: &Instance, mode: FieldMode) -> InstanceOutcome {
    let mut outcome = InstanceOutcome {
        name: inst.name.to_string(),
        report: None,
        checks: Vec::new(),
        error: None,
    };
    if let Err(e) = run_checks(inst, mode, &mut outcome) {
        outcome.error = Some(e.to_string());
    }
    outcome
}

fn run_checks(inst: &Instance, mode: FieldMode, out: &mut InstanceOutcome) -> Result<()> {
    let f = inst.poly();
    let report = full_report(&f, &inst.report_options(mode))?;
    let tau = report.invariants.tau;
    let stable = report.input.n * (report.input.d as usize - 2);

    let er = |k: usize| report.tables.graded_dims[k].er;
    out.checks.push(Check::new(
        "tjurina-triple",
        er(stable) == tau && er(stable + 1) == tau,
        format!("er(n(d-2)) = {}, er(n(d-2)+1) = {}, hilbert = {tau}", er(stable), er(stable + 1)),
    ));
    if let Some(b) = inst.brieskorn_tau()? {
        out.checks.push(Check::new(
            "brieskorn",
            b == tau as u64,
            format!("local sum {b}, tau {tau}"),
        ));
    }
    if !inst.singular_points.is_empty() {
        let all_singular = inst
            .point_coords()
            .into_iter()
            .all(|c| SingularPoint::certify(&f, c).is_ok());
        out.checks.push(Check::new(
            "singular-points",
            all_singular && tau > 0,
            format!("{} points certified", inst.singular_points.len()),
        ));
    } else {
        out.checks.push(Check::new("smooth", tau == 0, format!("tau {tau}")));
    }
    if let Some(v) = &report.verdicts.defect_duality {
        out.checks.push(Check::new(
            "defect-duality",
            v.holds,
            format!("{} degrees compared", v.details.rows.len()),
        ));
    }
    if let Some(v) = &report.verdicts.topological_witness {
        out.checks.push(Check::new(
            "witness",
            v.holds,
            format!("rho = {}, rho(p) = ({})", v.details.representative, v.details.evaluation.join(", ")),
        ));
    }
    if tau > 0 {
        let b = &report.bounds;
        out.checks.push(Check::new(
            "bounds",
            b.lower <= tau as i64 && tau as i64 <= b.upper,
            format!("{} <= {tau} <= {}", b.lower, b.upper),
        ));
        out.checks.push(Check::new(
            "mder-tau-inequality",
            report.verdicts.mder_tau_inequality.as_ref().is_some_and(|v| v.holds),
            format!("mder = {}, n(d-2) - tau = {}", report.invariants.mder.map_or("none".into(), |e| e.to_string()), stable as i64 - tau as i64),
        ));
    }
    let agree = report
        .verdicts
        .versality
        .iter()
        .all(|v| v.details.versal_by_mder == v.details.versal_by_defect);
    out.checks.push(Check::new(
        "versality-criteria",
        agree,
        format!("{} values of a", report.verdicts.versality.len()),
    ));
    if let Some(v) = &report.verdicts.stability {
        let implied = !v.holds || v.details.ar_dim_at_d_prime == 0;
        out.checks.push(Check::new(
            "stability-implication",
            implied,
            format!("hypothesis {}, dim AR(f)_{} = {}", v.holds, v.details.d_prime, v.details.ar_dim_at_d_prime),
        ));
    }
    if let Some(v) = &report.verdicts.torelli {
        let implied = !v.holds || v.details.mdr + 2 > report.input.d as usize;
        out.checks.push(Check::new(
            "torelli-implication",
            implied,
            format!("hypothesis {}, mdr = {}", v.holds, v.details.mdr),
        ));
    }
    if let Some(base) = inst.suspension_of {
        let base = instance(base)?;
        let g = base.poly();
        let suspended = oracle::suspend(&g, f.n_vars() - 1)?;
        let mdr_base = JacobianSystem::new(g, mode)?.mdr()?;
        out.checks.push(Check::new(
            "suspension",
            suspended == f && mdr_base == report.invariants.mdr,
            format!("mdr {} -> {}", mdr_base, report.invariants.mdr),
        ));
    }
    out.report = Some(report);
    Ok(())
}
