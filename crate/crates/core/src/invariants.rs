//! τ(V), the defect table, and the theorem checks built on top of the graded
//! dimensions of AR(f), KR(f) and ER(f).
//!
//! Every check returns a [`Verdict`]. Identities that are theorems for hypersurfaces
//! with isolated singularities (bounds, the mder/τ inequality, agreement of the two
//! versality criteria, proof-implied vanishings) are asserted: a failure is reported as
//! an error, never as a `false` verdict.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{binomial, HomogeneousPoly, Rational};
use crate::error::{ensure, Error, Result};
use crate::oracle::{self, NodalConfiguration};
use crate::syzygy::{GradedDims, JacobianSystem};

/// Projective point at which f and all of its partials vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    coords: Vec<Rational>,
}

impl SingularPoint {
    pub fn certify(f: &HomogeneousPoly, coords: Vec<Rational>) -> Result<Self> {
        let p = SingularPoint::unchecked(coords)?;
        if p.coords.len() != f.n_vars() {
            return Err(Error::OutOfRange(format!(
                "point has {} coordinates, polynomial has {} variables",
                p.coords.len(),
                f.n_vars()
            )));
        }
        if !p.is_singular_on(f) {
            return Err(Error::NotSingular(p.to_string()));
        }
        Ok(p)
    }

    /// Only checks that the coordinates are not all zero.
    pub(crate) fn unchecked(coords: Vec<Rational>) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::OutOfRange("the zero vector is not a projective point".into()));
        }
        Ok(SingularPoint { coords })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_singular_on(&self, f: &HomogeneousPoly) -> bool {
        self.coords.len() == f.n_vars()
            && f.evaluate(&self.coords).is_zero()
            && (0..f.n_vars()).all(|j| f.partial_derivative(j).evaluate(&self.coords).is_zero())
    }

    pub fn same_projective_point(&self, other: &SingularPoint) -> bool {
        let (a, b) = (&self.coords, &other.coords);
        a.len() == b.len()
            && (0..a.len()).all(|i| (i + 1..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
    }
}

impl fmt::Display for SingularPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Result of one theorem check: whether its conclusion (or hypothesis, for the
/// hypothesis-only checks) holds, with the computed quantities behind it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict<D> {
    pub holds: bool,
    pub details: D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DefectEntry {
    pub k: usize,
    pub defect: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VersalityDetails {
    pub a: usize,
    /// a < mder(f) (mder = none counts as versal).
    pub versal_by_mder: bool,
    /// n(d-2)-1-a
    pub defect_degree: usize,
    pub defect: usize,
    pub versal_by_defect: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TSmoothnessDetails {
    pub lhs: i64,
    pub mder: Option<usize>,
    pub condition: String,
    pub plane_curve_form: Option<String>,
    /// τ ≤ d − 1, which forces T-smoothness through the mder/τ inequality.
    pub small_tau: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityDetails {
    pub mder: usize,
    pub rhs: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessDetails {
    pub a: usize,
    pub point: String,
    pub representative: String,
    pub evaluation: Vec<String>,
    pub nonzero: bool,
    /// The point is non-simple; supplied by the caller, not verified.
    pub non_simple_claim: bool,
    pub checked_second_representative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DpwBounds {
    pub r: usize,
    pub lower: i64,
    pub upper: i64,
    pub tau: usize,
    pub attain_lower: bool,
    pub attain_upper: bool,
    /// false when τ = 0: the bounds concern singular hypersurfaces.
    pub asserted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeCurveDetails {
    pub tau: usize,
    pub upper_bound: i64,
    pub reduced_claim: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityDetails {
    pub d_prime: u32,
    pub epsilon: u32,
    pub threshold: i64,
    pub tau: usize,
    /// dim AR(f)_{d'}; checked to vanish when the hypothesis holds.
    pub ar_dim_at_d_prime: usize,
    pub c1: i32,
    pub conclusion: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorelliDetails {
    pub m: u32,
    pub threshold: u64,
    pub tau: usize,
    pub mdr: usize,
    pub conclusion: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityDetails {
    pub rows: Vec<DualityRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityRow {
    pub k: usize,
    pub er: usize,
    pub nodal_defect: usize,
}

/// Graded dimensions, τ, mdr and mder of one non-cone hypersurface, computed once
/// and shared by every check.
#[derive(Clone, Debug)]
pub struct Analysis {
    sys: JacobianSystem,
    dims: GradedDims,
    tau: usize,
    mdr: usize,
    mder: Option<usize>,
}

impl Analysis {
    /// Computes the table up to `cap` (default and minimum n(d-2)+1) and τ.
    ///
    /// τ is accepted only when dim ER(f)_{n(d-2)}, dim ER(f)_{n(d-2)+1} and the stable
    /// Hilbert function of S/J_f coincide.
    pub fn new(sys: JacobianSystem, cap: Option<usize>) -> Result<Self> {
        if sys.is_cone() {
            return Err(Error::ConeInput);
        }
        let stable = sys.stable_degree();
        let cap = cap.unwrap_or(stable + 1);
        if cap < stable + 1 {
            return Err(Error::OutOfRange(format!(
                "cap {cap} is below n(d-2)+1 = {}",
                stable + 1
            )));
        }
        let (dims, hilbert) = rayon::join(
            || sys.graded_dims(cap),
            || oracle::hilbert_tau(sys.poly(), sys.mode()),
        );
        let dims = dims?;
        let (er_stable, er_next) = (dims.er(stable), dims.er(stable + 1));
        let hilbert = match hilbert {
            Ok(h) => h,
            Err(Error::NoStabilization { .. }) => {
                return Err(Error::NonIsolatedOrBug {
                    er_stable,
                    er_next,
                    hilbert: None,
                })
            }
            Err(e) => return Err(e),
        };
        if er_stable != er_next || er_stable != hilbert {
            return Err(Error::NonIsolatedOrBug {
                er_stable,
                er_next,
                hilbert: Some(hilbert),
            });
        }
        let mdr = dims.mdr().ok_or_else(|| {
            Error::Assertion(format!("no Jacobian relation up to degree {cap}"))
        })?;
        ensure!(mdr < sys.d() as usize, "mdr(f) = {mdr} exceeds d-1");
        let mder = dims.mder();
        ensure!(
            mder.is_some() == (hilbert > 0),
            "mder(f) = {mder:?} inconsistent with tau = {hilbert}"
        );
        if let Some(e) = mder {
            ensure!(mdr <= e, "mdr(f) = {mdr} > mder(f) = {e}");
            if mdr + 1 < sys.d() as usize {
                ensure!(mdr == e, "mdr(f) = {mdr} < d-1 but mder(f) = {e}");
            }
        }
        Ok(Analysis {
            sys,
            dims,
            tau: hilbert,
            mdr,
            mder,
        })
    }

    pub fn system(&self) -> &JacobianSystem {
        &self.sys
    }

    pub fn dims(&self) -> &GradedDims {
        &self.dims
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn mdr(&self) -> usize {
        self.mdr
    }

    pub fn mder(&self) -> Option<usize> {
        self.mder
    }

    fn n(&self) -> usize {
        self.sys.n()
    }

    fn d(&self) -> u32 {
        self.sys.d()
    }

    fn stable(&self) -> usize {
        self.sys.stable_degree()
    }

    /// defect_m(Σ) = dim ER(f)_{n(d-2)-1-m} for 0 <= m <= n(d-2)-1.
    pub fn defect(&self, m: usize) -> Result<usize> {
        let stable = self.stable();
        if m >= stable {
            return Err(Error::OutOfRange(format!(
                "defect degree {m} outside 0..={}",
                stable as i64 - 1
            )));
        }
        let value = self.dims.er(stable - 1 - m);
        ensure!(value <= self.tau, "defect_{m} = {value} exceeds tau = {}", self.tau);
        Ok(value)
    }

    pub fn defect_table(&self) -> Result<Vec<DefectEntry>> {
        (0..self.stable())
            .map(|k| Ok(DefectEntry { k, defect: self.defect(k)? }))
            .collect()
    }

    /// a-versality: a < mder(f), cross-checked against defect_{n(d-2)-1-a}(Σ) = 0.
    pub fn versality(&self, a: usize) -> Result<Verdict<VersalityDetails>> {
        let stable = self.stable();
        if a >= stable {
            return Err(Error::OutOfRange(format!(
                "a = {a} outside 0..={}",
                stable as i64 - 1
            )));
        }
        let versal_by_mder = self.mder.map_or(true, |e| a < e);
        let defect_degree = stable - 1 - a;
        let defect = self.defect(defect_degree)?;
        let versal_by_defect = defect == 0;
        ensure!(
            versal_by_mder == versal_by_defect,
            "versality criteria disagree at a = {a}: mder says {versal_by_mder}, defect_{defect_degree} = {defect}"
        );
        Ok(Verdict {
            holds: versal_by_mder,
            details: VersalityDetails {
                a,
                versal_by_mder,
                defect_degree,
                defect,
                versal_by_defect,
            },
        })
    }

    pub fn versality_all(&self) -> Result<Vec<Verdict<VersalityDetails>>> {
        (0..self.stable()).map(|a| self.versality(a)).collect()
    }

    /// n(d-2) - d - 1 < mder(f). Requires τ > 0.
    pub fn t_smoothness(&self) -> Result<Verdict<TSmoothnessDetails>> {
        if self.tau == 0 {
            return Err(Error::OutOfRange("T-smoothness needs a singular hypersurface".into()));
        }
        let (n, d) = (self.n() as i64, i64::from(self.d()));
        let lhs = n * (d - 2) - d - 1;
        let mder = self.mder.expect("tau > 0 implies a finite mder");
        let holds = lhs < mder as i64;
        let small_tau = self.tau as i64 <= d - 1;
        ensure!(!small_tau || holds, "tau <= d-1 but the T-condition fails");
        Ok(Verdict {
            holds,
            details: TSmoothnessDetails {
                lhs,
                mder: Some(mder),
                condition: format!("{lhs} < mder(f) = {mder}"),
                plane_curve_form: (self.n() == 2).then(|| format!("d-5 = {} < mder(f) = {mder}", d - 5)),
                small_tau,
            },
        })
    }

    /// mder(f) > n(d-2) - τ(V) for singular V.
    pub fn mder_tau_inequality(&self) -> Result<Verdict<InequalityDetails>> {
        let mder = match (self.tau, self.mder) {
            (0, _) | (_, None) => {
                return Err(Error::OutOfRange("inequality needs a singular hypersurface".into()))
            }
            (_, Some(e)) => e,
        };
        let rhs = self.stable() as i64 - self.tau as i64;
        ensure!(mder as i64 > rhs, "mder(f) = {mder} <= n(d-2) - tau = {rhs}");
        Ok(Verdict {
            holds: true,
            details: InequalityDetails { mder, rhs },
        })
    }

    /// Evaluates a representative ρ of the generator of ER(f)_a at a singular point.
    ///
    /// Koszul relations vanish at singular points, so ρ(p) does not depend on the
    /// representative; this is re-checked on ρ plus all Koszul generators of degree a.
    pub fn topological_witness(
        &self,
        a: usize,
        point: &SingularPoint,
        non_simple_claim: bool,
    ) -> Result<Verdict<WitnessDetails>> {
        let f = self.sys.poly();
        if !point.is_singular_on(f) {
            return Err(Error::NotSingular(point.to_string()));
        }
        let dim = if a <= self.dims.cap() {
            self.dims.er(a)
        } else {
            self.sys.er_dim(a)?
        };
        if dim != 1 {
            return Err(Error::DimensionNotOne { degree: a, dim });
        }
        let reps = self.sys.er_representatives(a);
        ensure!(reps.len() == 1, "found {} ER representatives in degree {a}", reps.len());
        let rho = &reps[0];
        ensure!(rho.is_relation_of(self.sys.partials()), "representative is not a syzygy");
        let value = rho.evaluate(point.coords());
        let kos = self.sys.koszul_generators(a);
        let checked_second_representative = !kos.is_empty();
        if checked_second_representative {
            let shifted = kos.iter().fold(rho.clone(), |acc, g| acc.add(g));
            ensure!(
                shifted.evaluate(point.coords()) == value,
                "evaluation at {point} depends on the ER representative"
            );
        }
        let nonzero = value.iter().any(|v| !v.is_zero());
        Ok(Verdict {
            holds: nonzero && non_simple_claim,
            details: WitnessDetails {
                a,
                point: point.to_string(),
                representative: rho.to_string(),
                evaluation: value.iter().map(ToString::to_string).collect(),
                nonzero,
                non_simple_claim,
                checked_second_representative,
            },
        })
    }

    /// (d-r-1)(d-1)^{n-1} <= τ <= (d-1)^n - r(d-r-1)(d-1)^{n-2} with r = mdr(f).
    pub fn dpw_bounds(&self) -> Result<DpwBounds> {
        let (n, d, r) = (self.n() as u32, i64::from(self.d()), self.mdr as i64);
        if n < 2 {
            return Err(Error::OutOfRange("Tjurina bounds need n >= 2".into()));
        }
        let lower = (d - r - 1) * (d - 1).pow(n - 1);
        let upper = (d - 1).pow(n) - r * (d - r - 1) * (d - 1).pow(n - 2);
        let tau = self.tau as i64;
        let asserted = self.tau > 0;
        if asserted && !(lower <= tau && tau <= upper) {
            return Err(Error::BoundViolation {
                lower,
                upper,
                tau: self.tau,
            });
        }
        Ok(DpwBounds {
            r: self.mdr,
            lower,
            upper,
            tau: self.tau,
            attain_lower: tau == lower,
            attain_upper: tau == upper,
            asserted,
        })
    }

    /// Plane curves: free exactly when τ = (d-1)^2 - r(d-r-1).
    pub fn free_curve(&self, reduced_claim: bool) -> Result<Verdict<FreeCurveDetails>> {
        if self.n() != 2 {
            return Err(Error::WrongDimension {
                expected: 2,
                found: self.n(),
            });
        }
        let (d, r) = (i64::from(self.d()), self.mdr as i64);
        let upper_bound = (d - 1).pow(2) - r * (d - r - 1);
        Ok(Verdict {
            holds: self.tau as i64 == upper_bound,
            details: FreeCurveDetails {
                tau: self.tau,
                upper_bound,
                reduced_claim,
            },
        })
    }

    /// Surfaces in P^3 with d = 3d' + ε: hypothesis τ < (d-d'-1)(d-1)^2, under which
    /// AR(f)_{d'} = 0.
    pub fn stability(&self) -> Result<Verdict<StabilityDetails>> {
        if self.n() != 3 {
            return Err(Error::WrongDimension {
                expected: 3,
                found: self.n(),
            });
        }
        let d = self.d();
        let (d_prime, epsilon) = stability_split(d);
        let threshold = i64::from(d - d_prime - 1) * i64::from(d - 1).pow(2);
        let holds = (self.tau as i64) < threshold;
        let ar_dim_at_d_prime = self.dims.ar(d_prime as usize);
        let c1 = 1 - epsilon as i32;
        if holds {
            ensure!(
                ar_dim_at_d_prime == 0,
                "stability hypothesis holds but dim AR(f)_{d_prime} = {ar_dim_at_d_prime}"
            );
        }
        Ok(Verdict {
            holds,
            details: StabilityDetails {
                d_prime,
                epsilon,
                threshold,
                tau: self.tau,
                ar_dim_at_d_prime,
                c1,
                conclusion: holds.then(|| {
                    format!(
                        "T<V>({}) is a normalized stable rank 3 reflexive sheaf with c1 = {c1}",
                        d_prime as i64 - 1
                    )
                }),
            },
        })
    }

    /// d >= 4, m = floor((d-2)/2): hypothesis τ < C(m+n-1, n-1), under which mdr(f) > d-2.
    pub fn torelli(&self) -> Result<Verdict<TorelliDetails>> {
        let d = self.d();
        if d < 4 {
            return Err(Error::DegreeTooSmall { min: 4, found: d });
        }
        let n = self.n();
        let m = (d - 2) / 2;
        let threshold = binomial(m as usize + n - 1, n - 1) as u64;
        let holds = (self.tau as u64) < threshold;
        if holds {
            ensure!(
                self.mdr > d as usize - 2,
                "Torelli hypothesis holds but mdr(f) = {} <= d-2",
                self.mdr
            );
            ensure!(
                threshold < u64::from(d - 1).pow(n as u32 - 1),
                "C(m+n-1, n-1) = {threshold} is not below (d-1)^(n-1)"
            );
        }
        Ok(Verdict {
            holds,
            details: TorelliDetails {
                m,
                threshold,
                tau: self.tau,
                mdr: self.mdr,
                conclusion: holds
                    .then(|| "V is DK-Torelli or of Sebastiani-Thom type".to_string()),
            },
        })
    }

    /// dim ER(f)_k against the point-evaluation defect of a node configuration.
    pub fn defect_duality(&self, nodes: &NodalConfiguration) -> Result<Verdict<DualityDetails>> {
        let f = self.sys.poly();
        for p in nodes.points() {
            if !p.is_singular_on(f) {
                return Err(Error::NotSingular(p.to_string()));
            }
        }
        ensure!(
            nodes.len() == self.tau,
            "{} nodes supplied but tau = {}",
            nodes.len(),
            self.tau
        );
        let stable = self.stable();
        let rows: Vec<DualityRow> = (0..stable)
            .map(|k| DualityRow {
                k,
                er: self.dims.er(k),
                nodal_defect: oracle::nodal_defect(nodes, stable - 1 - k),
            })
            .collect();
        Ok(Verdict {
            holds: rows.iter().all(|r| r.er == r.nodal_defect),
            details: DualityDetails { rows },
        })
    }
}

/// d = 3d' + ε with ε ∈ {1, 2, 3}.
pub fn stability_split(d: u32) -> (u32, u32) {
    let d_prime = (d - 1) / 3;
    (d_prime, d - 3 * d_prime)
}

/// τ(V) via the stabilized ER dimension, cross-checked as in [`Analysis::new`].
pub fn global_tjurina(sys: &JacobianSystem) -> Result<usize> {
    Ok(Analysis::new(sys.clone(), None)?.tau())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, FieldMode, Monomial};

    fn poly(n: usize, terms: &[(i64, &[u32])]) -> HomogeneousPoly {
        HomogeneousPoly::from_terms(
            n,
            terms.iter().map(|(c, e)| (Monomial::new(e.to_vec()), rat(*c))),
        )
        .unwrap()
    }

    fn analyze(f: HomogeneousPoly) -> Analysis {
        Analysis::new(JacobianSystem::new(f, FieldMode::Exact).unwrap(), None).unwrap()
    }

    fn ex_b5() -> HomogeneousPoly {
        poly(3, &[(1, &[5, 0, 0]), (1, &[0, 4, 1])])
    }

    fn triangle() -> HomogeneousPoly {
        poly(3, &[(1, &[1, 1, 1])])
    }

    fn fermat3() -> HomogeneousPoly {
        poly(3, &[(1, &[3, 0, 0]), (1, &[0, 3, 0]), (1, &[0, 0, 3])])
    }

    fn point(c: &[i64]) -> Vec<Rational> {
        c.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn tjurina_numbers() {
        assert_eq!(analyze(triangle()).tau(), 3);
        assert_eq!(analyze(ex_b5()).tau(), 12);
        assert_eq!(analyze(fermat3()).tau(), 0);
    }

    #[test]
    fn example_curve_versality() {
        let a = analyze(ex_b5());
        assert!(!a.versality(1).unwrap().holds);
        assert!(a.versality(0).unwrap().holds);
        let t = a.t_smoothness().unwrap();
        assert!(t.holds);
        assert_eq!(t.details.lhs, 0);
    }

    #[test]
    fn smooth_is_versal_everywhere() {
        let a = analyze(fermat3());
        assert!(a.versality_all().unwrap().iter().all(|v| v.holds));
        assert!(a.defect_table().unwrap().iter().all(|e| e.defect == 0));
        assert!(a.t_smoothness().is_err());
    }

    #[test]
    fn triangle_t_smooth_with_negative_side() {
        let t = analyze(triangle()).t_smoothness().unwrap();
        assert!(t.holds);
        assert_eq!(t.details.lhs, -2);
    }

    #[test]
    fn witness_on_example_curve() {
        let a = analyze(ex_b5());
        let p = SingularPoint::certify(a.system().poly(), point(&[0, 0, 1])).unwrap();
        let w = a.topological_witness(1, &p, true).unwrap();
        assert!(w.holds);
        // ρ is normalized with last coordinate free; ρ(p) is proportional to (0, 0, -4)
        let ev = &w.details.evaluation;
        assert_eq!(ev[0], "0");
        assert_eq!(ev[1], "0");
        assert_ne!(ev[2], "0");
    }

    #[test]
    fn witness_rejects_smooth_points() {
        let f = ex_b5();
        // (1 : 1 : -1) lies on V but is smooth there
        assert!(f.evaluate(&point(&[1, 1, -1])).is_zero());
        assert!(matches!(
            SingularPoint::certify(&f, point(&[1, 1, -1])),
            Err(Error::NotSingular(_))
        ));
    }

    #[test]
    fn witness_needs_one_dimensional_piece() {
        let a = analyze(ex_b5());
        let p = SingularPoint::certify(a.system().poly(), point(&[0, 0, 1])).unwrap();
        assert!(matches!(
            a.topological_witness(3, &p, true),
            Err(Error::DimensionNotOne { .. })
        ));
    }

    #[test]
    fn koszul_relations_vanish_at_singular_points() {
        let a = analyze(ex_b5());
        for k in 4..7 {
            for g in a.system().koszul_generators(k) {
                assert!(g.evaluate(&point(&[0, 0, 1])).iter().all(Zero::is_zero));
            }
        }
    }

    #[test]
    fn bounds() {
        let b = analyze(ex_b5()).dpw_bounds().unwrap();
        assert_eq!((b.lower, b.upper, b.tau), (12, 13, 12));
        assert!(b.attain_lower && !b.attain_upper);
        let t = analyze(triangle()).dpw_bounds().unwrap();
        assert_eq!((t.lower, t.upper, t.tau), (2, 3, 3));
        assert!(t.attain_upper);
        let s = analyze(fermat3()).dpw_bounds().unwrap();
        assert!(!s.asserted);
        assert_eq!(s.lower, 0);
    }

    #[test]
    fn freeness() {
        assert!(analyze(triangle()).free_curve(true).unwrap().holds);
        assert!(!analyze(ex_b5()).free_curve(true).unwrap().holds);
        assert!(!analyze(fermat3()).free_curve(true).unwrap().holds);
    }

    #[test]
    fn stability_split_arithmetic() {
        assert_eq!(stability_split(3), (0, 3));
        assert_eq!(stability_split(4), (1, 1));
        assert_eq!(stability_split(5), (1, 2));
        assert_eq!(stability_split(2), (0, 2));
    }

    #[test]
    fn stability_on_suspended_triangle() {
        let f = poly(4, &[(1, &[1, 1, 1, 0]), (1, &[0, 0, 0, 3])]);
        let v = analyze(f).stability().unwrap();
        assert_eq!(v.details.threshold, 8);
        assert_eq!(v.details.c1, -2);
        assert_eq!(v.details.tau, 6);
        assert!(v.holds);
        assert_eq!(v.details.ar_dim_at_d_prime, 0);
    }

    #[test]
    fn dimension_checks() {
        assert!(matches!(
            analyze(triangle()).stability(),
            Err(Error::WrongDimension { expected: 3, found: 2 })
        ));
        assert!(matches!(
            analyze(triangle()).torelli(),
            Err(Error::DegreeTooSmall { min: 4, found: 3 })
        ));
    }

    #[test]
    fn torelli_fails_on_example_curve() {
        let v = analyze(ex_b5()).torelli().unwrap();
        assert_eq!(v.details.threshold, 2);
        assert!(!v.holds);
        assert!(v.details.conclusion.is_none());
    }

    #[test]
    fn triangle_duality_against_coordinate_points() {
        let a = analyze(triangle());
        let nodes = NodalConfiguration::new(
            [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
                .iter()
                .map(|c| SingularPoint::certify(a.system().poly(), point(c)).unwrap())
                .collect(),
        )
        .unwrap();
        let v = a.defect_duality(&nodes).unwrap();
        assert!(v.holds);
        assert_eq!(a.defect(1).unwrap(), 0);
        assert_eq!(a.defect(0).unwrap(), a.dims().er(1));
    }

    #[test]
    fn cones_are_refused() {
        let cone = poly(3, &[(1, &[3, 0, 0]), (1, &[0, 3, 0])]);
        let sys = JacobianSystem::new(cone, FieldMode::Exact).unwrap();
        assert_eq!(Analysis::new(sys, None).unwrap_err(), Error::ConeInput);
    }

    #[test]
    fn non_isolated_input_is_flagged() {
        // x0^2 * (x1^2 + x0 x2) is singular along the line x0 = 0
        let f = poly(3, &[(1, &[2, 2, 0]), (1, &[3, 0, 1])]);
        let sys = JacobianSystem::new(f, FieldMode::Exact).unwrap();
        assert!(matches!(
            Analysis::new(sys, None),
            Err(Error::NonIsolatedOrBug { .. } | Error::ErNotStable { .. })
        ));
    }
}
