//! Brute-force validators and instance builders that do not go through the syzygy
//! module: the Hilbert function of S/J_f, point-evaluation defects of node sets,
//! Milnor numbers of Brieskorn germs, and the suspension construction.

use num_traits::Zero;

use crate::algebra::{
    rank, BasisLabel, FieldMode, GradedMatrix, HomogeneousPoly, Monomial, MonomialBasis, Rational,
};
use crate::error::{Error, Result};
use crate::invariants::SingularPoint;

/// Three consecutive equal Hilbert values certify stabilization.
pub const STABLE_WINDOW: usize = 3;

fn partials(f: &HomogeneousPoly) -> Vec<HomogeneousPoly> {
    (0..f.n_vars()).map(|j| f.partial_derivative(j)).collect()
}

/// dim (S/J_f)_m, with J_f generated by the partials of f.
///
/// The multiplication map (S_{m-d+1})^{n+1} → S_m is assembled row by row: the row of a
/// target monomial μ collects every (j, μ/t) with t a term of f_j dividing μ.
pub fn hilbert_function(f: &HomogeneousPoly, m: usize, mode: FieldMode) -> usize {
    let nv = f.n_vars();
    let target = MonomialBasis::new(nv, m);
    let d = f.degree() as usize;
    if m + 1 < d {
        return target.len();
    }
    let source = MonomialBasis::new(nv, m + 1 - d);
    let fs = partials(f);
    let rows: Vec<Vec<(u32, Rational)>> = target
        .monomials()
        .iter()
        .map(|mu| {
            let mut row = Vec::new();
            for (j, fj) in fs.iter().enumerate() {
                for (t, c) in fj.terms() {
                    if let Some(q) = mu.div(t) {
                        let col = j * source.len() + source.index_of(&q).expect("quotient has source degree");
                        row.push((col as u32, c.clone()));
                    }
                }
            }
            row.sort_by_key(|e| e.0);
            row
        })
        .collect();
    let col_basis = (0..nv)
        .flat_map(|j| {
            source.monomials().iter().map(move |q| BasisLabel::Monomial {
                component: j,
                mono: q.clone(),
            })
        })
        .collect();
    let row_basis = target
        .monomials()
        .iter()
        .map(|mu| BasisLabel::Monomial {
            component: 0,
            mono: mu.clone(),
        })
        .collect();
    let mat = GradedMatrix::from_rows(row_basis, col_basis, rows);
    target.len() - rank(&mat, mode)
}

/// Partials linearly dependent over Q, i.e. V is a cone.
fn partials_dependent(f: &HomogeneousPoly) -> bool {
    let fs = partials(f);
    let basis = MonomialBasis::new(f.n_vars(), f.degree().saturating_sub(1) as usize);
    let columns = fs
        .iter()
        .map(|fj| {
            fj.terms()
                .map(|(m, c)| (basis.index_of(m).unwrap() as u32, c.clone()))
                .collect()
        })
        .collect();
    let m = GradedMatrix::from_columns(
        basis.monomials().iter().map(|_| BasisLabel::Point(0)).collect(),
        (0..fs.len()).map(BasisLabel::Point).collect(),
        columns,
    );
    rank(&m, FieldMode::Exact) < fs.len()
}

/// Degree of the singular subscheme, read off as the stable value of dim (S/J_f)_m.
///
/// Scanning starts at m = (n+1)(d-2)+1, where the Jacobian quotient of a smooth
/// hypersurface of the same degree has vanished, and stops at the first window of
/// [`STABLE_WINDOW`] equal values. The cap is (n+1)(d-1), widened if the window would
/// not fit below it.
pub fn hilbert_tau(f: &HomogeneousPoly, mode: FieldMode) -> Result<usize> {
    if partials_dependent(f) {
        return Err(Error::ConeInput);
    }
    let n = f.n_vars() - 1;
    let d = f.degree() as usize;
    if d < 2 {
        return Err(Error::DegreeTooLow(f.degree()));
    }
    let start = (n + 1) * (d - 2) + 1;
    let cap = ((n + 1) * (d - 1)).max(start + STABLE_WINDOW - 1);
    let mut window: Vec<usize> = Vec::with_capacity(STABLE_WINDOW);
    for m in start..=cap {
        let h = hilbert_function(f, m, mode);
        if window.last().is_some_and(|&prev| prev != h) {
            window.clear();
        }
        window.push(h);
        if window.len() == STABLE_WINDOW {
            return Ok(h);
        }
    }
    Err(Error::NoStabilization { cap })
}

/// A set of singular points, each claimed (not checked) to be an ordinary node, so
/// that its local Tjurina algebra is one-dimensional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodalConfiguration {
    points: Vec<SingularPoint>,
}

impl NodalConfiguration {
    /// Rejects repeated projective points.
    pub fn new(points: Vec<SingularPoint>) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            for q in &points[..i] {
                if p.same_projective_point(q) {
                    return Err(Error::OutOfRange(format!("repeated node {p}")));
                }
            }
        }
        Ok(NodalConfiguration { points })
    }

    /// Points without a hypersurface, for evaluating configurations on their own.
    pub fn from_coordinates(points: Vec<Vec<Rational>>) -> Result<Self> {
        NodalConfiguration::new(
            points
                .into_iter()
                .map(SingularPoint::unchecked)
                .collect::<Result<_>>()?,
        )
    }

    pub fn points(&self) -> &[SingularPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// dim coker(S_k → ⊕_p C), h ↦ (h(p))_p: the number of points minus the rank of the
/// monomial evaluation matrix.
pub fn nodal_defect(config: &NodalConfiguration, k: usize) -> usize {
    let Some(first) = config.points.first() else {
        return 0;
    };
    let nv = first.coords().len();
    let basis = MonomialBasis::new(nv, k);
    let rows: Vec<Vec<(u32, Rational)>> = config
        .points
        .iter()
        .map(|p| {
            basis
                .monomials()
                .iter()
                .enumerate()
                .map(|(i, m)| (i as u32, eval_monomial(m, p.coords())))
                .filter(|(_, v)| !v.is_zero())
                .collect()
        })
        .collect();
    let mat = GradedMatrix::from_rows(
        (0..config.len()).map(BasisLabel::Point).collect(),
        basis
            .monomials()
            .iter()
            .map(|m| BasisLabel::Monomial {
                component: 0,
                mono: m.clone(),
            })
            .collect(),
        rows,
    );
    config.len() - rank(&mat, FieldMode::Exact)
}

fn eval_monomial(m: &Monomial, point: &[Rational]) -> Rational {
    m.exponents()
        .iter()
        .zip(point)
        .fold(Rational::from_integer(1.into()), |acc, (&e, x)| {
            acc * num_traits::pow(x.clone(), e as usize)
        })
}

/// Milnor number Π(a_i − 1) of the germ Σ y_i^{a_i}; equals its Tjurina number since the
/// germ is quasi-homogeneous.
pub fn brieskorn_tau(exponents: &[u32]) -> Result<u64> {
    if let Some(a) = exponents.iter().find(|&&a| a < 2) {
        return Err(Error::OutOfRange(format!("Brieskorn exponent {a} < 2")));
    }
    Ok(exponents.iter().map(|&a| u64::from(a - 1)).product())
}

/// f' + x_{n'+1}^d + ... + x_n^d as a polynomial in n + 1 variables.
pub fn suspend(f_prime: &HomogeneousPoly, n: usize) -> Result<HomogeneousPoly> {
    let n_prime = f_prime.n_vars() - 1;
    if n <= n_prime {
        return Err(Error::OutOfRange(format!(
            "suspension target n = {n} must exceed n' = {n_prime}"
        )));
    }
    let d = f_prime.degree();
    if d < 2 {
        return Err(Error::DegreeTooLow(d));
    }
    let nv = n + 1;
    let mut f = f_prime.extend_vars(nv);
    for j in n_prime + 1..nv {
        let mut e = vec![0; nv];
        e[j] = d;
        f = f.add(&HomogeneousPoly::monomial(Rational::from_integer(1.into()), Monomial::new(e)));
    }
    Ok(f)
}
