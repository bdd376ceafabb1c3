//! Graded pieces of the Jacobian syzygy module AR(f), its Koszul submodule KR(f) and
//! the quotient ER(f) = AR(f)/KR(f), together with mdr(f) and mder(f).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    nullspace, rank, BasisLabel, Echelon, FieldMode, GradedMatrix, HomogeneousPoly, IntVec,
    MonomialBasis, Rational,
};
use crate::error::{ensure, Error, Result};

/// Partial derivatives of f, plus a flag raised when one of them vanishes identically.
///
/// A zero partial means f misses a variable, so V is a cone. The converse fails: a cone
/// only shows up after a linear change of coordinates, which `ar_dim(f, 0)` detects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jacobian {
    pub partials: Vec<HomogeneousPoly>,
    pub zero_partial: bool,
}

pub fn jacobian(f: &HomogeneousPoly) -> Jacobian {
    let partials: Vec<HomogeneousPoly> = (0..f.n_vars()).map(|j| f.partial_derivative(j)).collect();
    let zero_partial = partials.iter().any(HomogeneousPoly::is_zero);
    Jacobian {
        partials,
        zero_partial,
    }
}

/// A tuple (a_0, ..., a_n) of degree-k forms with Σ a_j f_j = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyVector {
    degree: usize,
    components: Vec<HomogeneousPoly>,
}

impl SyzygyVector {
    pub fn new(degree: usize, components: Vec<HomogeneousPoly>) -> Self {
        assert!(components
            .iter()
            .all(|a| a.is_zero() || a.degree() as usize == degree));
        SyzygyVector { degree, components }
    }

    fn from_coordinates(basis: &MonomialBasis, n_vars: usize, coords: &[Rational]) -> Self {
        let dim = basis.len();
        let components = (0..n_vars)
            .map(|j| {
                let terms = (0..dim)
                    .filter(|&i| !coords[j * dim + i].is_zero())
                    .map(|i| (basis.get(i).clone(), coords[j * dim + i].clone()));
                HomogeneousPoly::from_terms(n_vars, terms)
                    .expect("monomial basis is homogeneous")
                    .with_degree(basis.degree() as u32)
            })
            .collect();
        SyzygyVector {
            degree: basis.degree(),
            components,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &[HomogeneousPoly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(HomogeneousPoly::is_zero)
    }

    /// Σ a_j f_j.
    pub fn contract(&self, partials: &[HomogeneousPoly]) -> HomogeneousPoly {
        assert_eq!(partials.len(), self.components.len());
        self.components
            .iter()
            .zip(partials)
            .fold(HomogeneousPoly::zero(partials[0].n_vars(), 0), |acc, (a, fj)| {
                acc.add(&a.mul(fj))
            })
    }

    pub fn is_relation_of(&self, partials: &[HomogeneousPoly]) -> bool {
        self.contract(partials).is_zero()
    }

    pub fn evaluate(&self, point: &[Rational]) -> Vec<Rational> {
        self.components.iter().map(|a| a.evaluate(point)).collect()
    }

    pub fn add(&self, other: &SyzygyVector) -> SyzygyVector {
        assert_eq!(self.degree, other.degree);
        SyzygyVector {
            degree: self.degree,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b).with_degree(self.degree as u32))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SyzygyVector {
        SyzygyVector {
            degree: self.degree,
            components: self.components.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Positive multiple with coprime integer coefficients whose first nonzero
    /// coefficient (components in order, terms in descending order) is positive.
    pub fn primitive(&self) -> SyzygyVector {
        let coeffs: Vec<&Rational> = self.components.iter().flat_map(|a| a.terms().map(|t| t.1)).collect();
        let Some(first) = coeffs.first() else {
            return self.clone();
        };
        let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let gcd = coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&lcm / c.denom()))));
        let mut factor = Rational::new(lcm, gcd);
        if first.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    fn coordinates(&self, basis: &MonomialBasis) -> Vec<Rational> {
        let dim = basis.len();
        let mut out = vec![Rational::zero(); dim * self.components.len()];
        for (j, a) in self.components.iter().enumerate() {
            for (m, c) in a.terms() {
                let i = basis.index_of(m).expect("component has the basis degree");
                out[j * dim + i] = c.clone();
            }
        }
        out
    }
}

impl std::fmt::Display for SyzygyVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Dimensions of AR(f)_k, KR(f)_k and ER(f)_k for one degree k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GradedPiece {
    pub k: usize,
    pub ar: usize,
    pub kr: usize,
    pub er: usize,
}

/// Per-degree table for 0 <= k <= cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub n: usize,
    pub d: u32,
    pub pieces: Vec<GradedPiece>,
}

impl GradedDims {
    pub fn cap(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn piece(&self, k: usize) -> &GradedPiece {
        &self.pieces[k]
    }

    pub fn er(&self, k: usize) -> usize {
        self.pieces[k].er
    }

    pub fn ar(&self, k: usize) -> usize {
        self.pieces[k].ar
    }

    /// n(d-2), the degree from which dim ER(f)_k is constant.
    pub fn stable_degree(&self) -> usize {
        self.n * (self.d as usize - 2)
    }

    /// First k with AR(f)_k != 0 (0 for cones).
    pub fn mdr(&self) -> Option<usize> {
        self.pieces.iter().find(|p| p.ar > 0).map(|p| p.k)
    }

    /// First k <= n(d-2) with ER(f)_k != 0; `None` certifies a smooth V.
    pub fn mder(&self) -> Option<usize> {
        self.pieces
            .iter()
            .take(self.stable_degree() + 1)
            .find(|p| p.er > 0)
            .map(|p| p.k)
    }
}

/// f together with its Jacobian and the linear-algebra mode used for every rank.
#[derive(Clone, Debug)]
pub struct JacobianSystem {
    f: HomogeneousPoly,
    partials: Vec<HomogeneousPoly>,
    mode: FieldMode,
}

impl JacobianSystem {
    pub fn new(f: HomogeneousPoly, mode: FieldMode) -> Result<Self> {
        if f.n_vars() < 2 {
            return Err(Error::TooFewVariables(f.n_vars()));
        }
        if f.n_vars() > 10 {
            return Err(Error::TooManyVariables(f.n_vars()));
        }
        if f.is_zero() || f.degree() < 2 {
            return Err(Error::DegreeTooLow(f.degree()));
        }
        let partials = jacobian(&f).partials;
        Ok(JacobianSystem { f, partials, mode })
    }

    pub fn poly(&self) -> &HomogeneousPoly {
        &self.f
    }

    pub fn partials(&self) -> &[HomogeneousPoly] {
        &self.partials
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn n_vars(&self) -> usize {
        self.f.n_vars()
    }

    /// Dimension of the ambient projective space.
    pub fn n(&self) -> usize {
        self.f.n_vars() - 1
    }

    pub fn d(&self) -> u32 {
        self.f.degree()
    }

    /// n(d-2).
    pub fn stable_degree(&self) -> usize {
        self.n() * (self.d() as usize - 2)
    }

    /// Matrix of (S_k)^{n+1} → S_{k+d-1}, (a_j) ↦ Σ a_j f_j; columns ordered by (j, monomial).
    pub fn ar_matrix(&self, k: usize) -> GradedMatrix {
        let nv = self.n_vars();
        let source = MonomialBasis::new(nv, k);
        let target = MonomialBasis::new(nv, k + self.d() as usize - 1);
        let mut col_basis = Vec::with_capacity(nv * source.len());
        let mut columns = Vec::with_capacity(nv * source.len());
        for (j, fj) in self.partials.iter().enumerate() {
            for m in source.monomials() {
                col_basis.push(BasisLabel::Monomial {
                    component: j,
                    mono: m.clone(),
                });
                columns.push(
                    fj.terms()
                        .map(|(t, c)| {
                            let row = target.index_of(&m.mul(t)).expect("product has target degree");
                            (row as u32, c.clone())
                        })
                        .collect(),
                );
            }
        }
        let row_basis = target
            .monomials()
            .iter()
            .map(|m| BasisLabel::Monomial {
                component: 0,
                mono: m.clone(),
            })
            .collect();
        GradedMatrix::from_columns(row_basis, col_basis, columns)
    }

    /// Matrix of the Koszul map (S_{k-d+1})^{C(n+1,2)} → (S_k)^{n+1},
    /// g·e_{ij} ↦ g·(f_j e_i − f_i e_j). Has no columns when k < d − 1.
    pub fn kr_matrix(&self, k: usize) -> GradedMatrix {
        let nv = self.n_vars();
        let target = MonomialBasis::new(nv, k);
        let dim = target.len();
        let mut row_basis = Vec::with_capacity(nv * dim);
        for j in 0..nv {
            for m in target.monomials() {
                row_basis.push(BasisLabel::Monomial {
                    component: j,
                    mono: m.clone(),
                });
            }
        }
        let mut col_basis = Vec::new();
        let mut columns = Vec::new();
        let dm1 = self.d() as usize - 1;
        if k >= dm1 {
            let source = MonomialBasis::new(nv, k - dm1);
            for i in 0..nv {
                for j in i + 1..nv {
                    for g in source.monomials() {
                        col_basis.push(BasisLabel::Pair {
                            i,
                            j,
                            mono: g.clone(),
                        });
                        let mut col = Vec::new();
                        for (t, c) in self.partials[j].terms() {
                            let r = target.index_of(&g.mul(t)).expect("degree k");
                            col.push(((i * dim + r) as u32, c.clone()));
                        }
                        for (t, c) in self.partials[i].terms() {
                            let r = target.index_of(&g.mul(t)).expect("degree k");
                            col.push(((j * dim + r) as u32, -c.clone()));
                        }
                        columns.push(col);
                    }
                }
            }
        }
        GradedMatrix::from_columns(row_basis, col_basis, columns)
    }

    pub fn ar_basis(&self, k: usize) -> Vec<SyzygyVector> {
        let basis = MonomialBasis::new(self.n_vars(), k);
        nullspace(&self.ar_matrix(k), self.mode)
            .iter()
            .map(|v| SyzygyVector::from_coordinates(&basis, self.n_vars(), v))
            .collect()
    }

    /// Images of the Koszul generators in degree k (a spanning set of KR(f)_k).
    pub fn koszul_generators(&self, k: usize) -> Vec<SyzygyVector> {
        let m = self.kr_matrix(k);
        let basis = MonomialBasis::new(self.n_vars(), k);
        let len = m.rows();
        m.columns()
            .iter()
            .map(|col| {
                let mut dense = vec![Rational::zero(); len];
                for (r, v) in col {
                    dense[*r as usize] = v.clone();
                }
                SyzygyVector::from_coordinates(&basis, self.n_vars(), &dense)
            })
            .collect()
    }

    pub fn ar_dim(&self, k: usize) -> usize {
        let m = self.ar_matrix(k);
        m.cols() - rank(&m, self.mode)
    }

    pub fn kr_dim(&self, k: usize) -> usize {
        let m = self.kr_matrix(k);
        if m.cols() == 0 {
            return 0;
        }
        rank(&m, self.mode)
    }

    pub fn graded_piece(&self, k: usize) -> Result<GradedPiece> {
        let (ar, kr) = rayon::join(|| self.ar_dim(k), || self.kr_dim(k));
        ensure!(kr <= ar, "dim KR(f)_{k} = {kr} exceeds dim AR(f)_{k} = {ar}");
        Ok(GradedPiece {
            k,
            ar,
            kr,
            er: ar - kr,
        })
    }

    pub fn er_dim(&self, k: usize) -> Result<usize> {
        Ok(self.graded_piece(k)?.er)
    }

    /// ar_dim(f, 0) > 0, i.e. the partials are linearly dependent.
    pub fn is_cone(&self) -> bool {
        self.ar_dim(0) > 0
    }

    /// Minimal degree of a Jacobian relation; 0 exactly for cones.
    pub fn mdr(&self) -> Result<usize> {
        let top = self.d() as usize - 1;
        (0..=top)
            .find(|&k| self.ar_dim(k) > 0)
            .ok_or_else(|| Error::Assertion(format!("no Jacobian relation up to degree d-1 = {top}")))
    }

    /// Minimal degree of an essential relation, searched up to n(d-2).
    pub fn mder(&self) -> Result<Option<usize>> {
        for k in 0..=self.stable_degree() {
            if self.er_dim(k)? > 0 {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    /// Table of dimensions for 0 <= k <= cap, with ER stabilization from n(d-2) enforced.
    pub fn graded_dims(&self, cap: usize) -> Result<GradedDims> {
        let stable = self.stable_degree();
        if cap < stable {
            return Err(Error::OutOfRange(format!("cap {cap} is below n(d-2) = {stable}")));
        }
        let pieces = (0..=cap)
            .into_par_iter()
            .map(|k| self.graded_piece(k))
            .collect::<Result<Vec<_>>>()?;
        let expected = pieces[stable].er;
        if let Some(p) = pieces[stable..].iter().find(|p| p.er != expected) {
            return Err(Error::ErNotStable {
                degree: p.k,
                expected,
                found: p.er,
            });
        }
        Ok(GradedDims {
            n: self.n(),
            d: self.d(),
            pieces,
        })
    }

    /// AR(f)_k basis vectors that are independent modulo KR(f)_k, chosen greedily in
    /// basis order; they represent a basis of ER(f)_k.
    pub fn er_representatives(&self, k: usize) -> Vec<SyzygyVector> {
        let basis = MonomialBasis::new(self.n_vars(), k);
        let kr = self.kr_matrix(k);
        let mut ech = Echelon::new(kr.rows());
        for c in 0..kr.cols() {
            let dense = self.dense_column(&kr, c);
            ech.insert(IntVec::from_rationals(&dense));
        }
        self.ar_basis(k)
            .into_iter()
            .filter(|rho| ech.insert(IntVec::from_rationals(&rho.coordinates(&basis))))
            .map(|rho| rho.primitive())
            .collect()
    }

    fn dense_column(&self, m: &GradedMatrix, c: usize) -> Vec<Rational> {
        let mut dense = vec![Rational::zero(); m.rows()];
        for (r, v) in m.column(c) {
            dense[*r as usize] = v.clone();
        }
        dense
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Monomial};

    fn poly(n: usize, terms: &[(i64, &[u32])]) -> HomogeneousPoly {
        HomogeneousPoly::from_terms(
            n,
            terms.iter().map(|(c, e)| (Monomial::new(e.to_vec()), rat(*c))),
        )
        .unwrap()
    }

    fn ex_b(d: u32) -> HomogeneousPoly {
        poly(3, &[(1, &[d, 0, 0]), (1, &[0, d - 1, 1])])
    }

    fn triangle() -> HomogeneousPoly {
        poly(3, &[(1, &[1, 1, 1])])
    }

    fn fermat(n_vars: usize, d: u32) -> HomogeneousPoly {
        let terms: Vec<(Monomial, Rational)> = (0..n_vars)
            .map(|j| {
                let mut e = vec![0; n_vars];
                e[j] = d;
                (Monomial::new(e), rat(1))
            })
            .collect();
        HomogeneousPoly::from_terms(n_vars, terms).unwrap()
    }

    fn sys(f: HomogeneousPoly) -> JacobianSystem {
        JacobianSystem::new(f, FieldMode::Exact).unwrap()
    }

    #[test]
    fn jacobian_of_example_curve() {
        let j = jacobian(&ex_b(5));
        assert_eq!(
            j.partials,
            vec![
                poly(3, &[(5, &[4, 0, 0])]),
                poly(3, &[(4, &[0, 3, 1])]),
                poly(3, &[(1, &[0, 4, 0])]),
            ]
        );
        assert!(!j.zero_partial);
    }

    #[test]
    fn jacobian_flags_missing_variable() {
        let j = jacobian(&poly(3, &[(1, &[0, 3, 0])]));
        assert_eq!(j.partials[1], poly(3, &[(3, &[0, 2, 0])]));
        assert!(j.partials[0].is_zero() && j.partials[2].is_zero());
        assert!(j.zero_partial);
        let t = jacobian(&triangle());
        assert_eq!(t.partials[0], poly(3, &[(1, &[0, 1, 1])]));
    }

    #[test]
    fn degree_one_syzygy_of_example_curve() {
        let s = sys(ex_b(5));
        let basis = s.ar_basis(1);
        assert_eq!(basis.len(), 1);
        let rho = &basis[0];
        assert!(rho.is_relation_of(s.partials()));
        let expected = SyzygyVector::new(
            1,
            vec![
                HomogeneousPoly::zero(3, 1),
                poly(3, &[(1, &[0, 1, 0])]),
                poly(3, &[(-4, &[0, 0, 1])]),
            ],
        );
        // normalized so the last free coordinate is 1; compare up to scale
        let scale = expected.components()[1].coefficient(&Monomial::new(vec![0, 1, 0]))
            / rho.components()[1].coefficient(&Monomial::new(vec![0, 1, 0]));
        assert_eq!(rho.scale(&scale), expected);
        assert_eq!(s.kr_dim(1), 0);
        assert_eq!(s.er_dim(1).unwrap(), 1);
    }

    #[test]
    fn triangle_relation_in_degree_one() {
        let s = sys(triangle());
        let basis = s.ar_basis(1);
        assert!(basis.iter().all(|v| v.is_relation_of(s.partials())));
        let target = SyzygyVector::new(
            1,
            vec![
                poly(3, &[(1, &[1, 0, 0])]),
                poly(3, &[(-1, &[0, 1, 0])]),
                HomogeneousPoly::zero(3, 1),
            ],
        );
        assert!(target.is_relation_of(s.partials()));
        // target lies in the span: adding it does not raise the rank
        let m = s.ar_matrix(1);
        assert_eq!(m.cols() - basis.len(), rank(&m, FieldMode::Exact));
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn no_constant_relations_for_non_cones() {
        for f in [ex_b(5), triangle(), fermat(3, 3)] {
            assert!(sys(f).ar_basis(0).is_empty());
        }
        assert!(sys(poly(3, &[(1, &[2, 1, 0]), (1, &[0, 3, 0])])).is_cone());
    }

    #[test]
    fn smooth_cubic_degree_two() {
        let s = sys(fermat(3, 3));
        assert_eq!(s.ar_dim(2), 3);
        assert_eq!(s.kr_dim(2), 3);
        assert_eq!(s.er_dim(2).unwrap(), 0);
        assert_eq!(s.mdr().unwrap(), 2);
        assert_eq!(s.mder().unwrap(), None);
    }

    #[test]
    fn koszul_generators_live_in_degree_d_minus_one() {
        let s = sys(ex_b(5));
        assert_eq!(s.kr_dim(3), 0);
        assert!(s.kr_dim(4) >= 1);
        for g in s.koszul_generators(4) {
            assert!(g.is_relation_of(s.partials()));
        }
    }

    #[test]
    fn invariants_of_small_curves() {
        let s = sys(ex_b(5));
        assert_eq!(s.mdr().unwrap(), 1);
        assert_eq!(s.mder().unwrap(), Some(1));
        let t = sys(triangle());
        assert_eq!(t.mdr().unwrap(), 1);
        assert_eq!(t.mder().unwrap(), Some(1));
    }

    #[test]
    fn triangle_table_stabilizes_at_three() {
        let dims = sys(triangle()).graded_dims(3).unwrap();
        assert_eq!(dims.er(2), 3);
        assert_eq!(dims.er(3), 3);
    }

    #[test]
    fn smooth_fermat_has_no_essential_relations() {
        let dims = sys(fermat(3, 4)).graded_dims(5).unwrap();
        assert!(dims.pieces.iter().all(|p| p.er == 0));
    }

    #[test]
    fn example_curve_table_reaches_twelve() {
        let dims = sys(ex_b(5)).graded_dims(7).unwrap();
        assert_eq!(dims.er(6), 12);
        assert_eq!(dims.er(7), 12);
    }

    #[test]
    fn degree_one_rejected() {
        let line = poly(3, &[(1, &[1, 0, 0]), (1, &[0, 1, 0])]);
        assert_eq!(
            JacobianSystem::new(line, FieldMode::Exact).unwrap_err(),
            Error::DegreeTooLow(1)
        );
    }

    #[test]
    fn cap_below_stable_degree_is_rejected() {
        assert!(matches!(sys(ex_b(5)).graded_dims(5), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn er_representatives_complete_koszul_span() {
        let s = sys(triangle());
        let reps = s.er_representatives(2);
        assert_eq!(reps.len(), s.er_dim(2).unwrap());
    }
}
