use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::scalar::{rat, Rational};
use crate::error::{Error, Result};

/// Sparse homogeneous polynomial with exact rational coefficients.
///
/// Every stored monomial has the declared degree and no stored coefficient is zero,
/// so the zero polynomial of any degree is the empty term map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousPoly {
    n_vars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl HomogeneousPoly {
    pub fn zero(n_vars: usize, degree: u32) -> Self {
        HomogeneousPoly {
            n_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(coefficient: Rational, monomial: Monomial) -> Self {
        let mut p = HomogeneousPoly::zero(monomial.n_vars(), monomial.degree());
        p.add_term(monomial, coefficient);
        p
    }

    /// The linear form `x_j`.
    pub fn var(n_vars: usize, j: usize) -> Self {
        HomogeneousPoly::monomial(rat(1), Monomial::var(n_vars, j))
    }

    /// Collects terms, merging repeated monomials. Fails when degrees differ.
    pub fn from_terms(
        n_vars: usize,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<Self> {
        let mut merged: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.n_vars(), n_vars, "monomial arity mismatch");
            *merged.entry(m).or_insert_with(Rational::zero) += c;
        }
        merged.retain(|_, c| !c.is_zero());
        let mut degrees: Vec<u32> = merged.keys().map(Monomial::degree).collect();
        degrees.sort_unstable();
        degrees.dedup();
        if degrees.len() > 1 {
            return Err(Error::NotHomogeneous {
                terms: merged
                    .iter()
                    .rev()
                    .map(|(m, c)| (render_term(c, m, true), m.degree()))
                    .collect(),
            });
        }
        Ok(HomogeneousPoly {
            n_vars,
            degree: degrees.first().copied().unwrap_or(0),
            terms: merged,
        })
    }

    /// Declares the degree of a zero polynomial; a nonzero one must already have it.
    pub fn with_degree(mut self, degree: u32) -> Self {
        assert!(self.is_zero() || self.degree == degree, "degree mismatch");
        self.degree = degree;
        self
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Indices of the variables that occur in some term.
    pub fn support_variables(&self) -> Vec<usize> {
        (0..self.n_vars)
            .filter(|&j| self.terms.keys().any(|m| m.exponents()[j] > 0))
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &HomogeneousPoly) -> HomogeneousPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, other.degree, "adding forms of different degree");
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &HomogeneousPoly) -> HomogeneousPoly {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rational) -> HomogeneousPoly {
        if c.is_zero() {
            return HomogeneousPoly::zero(self.n_vars, self.degree);
        }
        HomogeneousPoly {
            n_vars: self.n_vars,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &HomogeneousPoly) -> HomogeneousPoly {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = HomogeneousPoly::zero(self.n_vars, self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> HomogeneousPoly {
        let mut acc = HomogeneousPoly::monomial(rat(1), Monomial::one(self.n_vars));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// ∂f/∂x_j, homogeneous of degree deg f − 1; a degree-0 input yields zero at degree 0.
    pub fn partial_derivative(&self, j: usize) -> HomogeneousPoly {
        assert!(j < self.n_vars, "variable index out of range");
        let degree = self.degree.saturating_sub(1);
        let mut out = HomogeneousPoly::zero(self.n_vars, degree);
        for (m, c) in &self.terms {
            let e = m.exponents()[j];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[j] -= 1;
            out.add_term(Monomial::new(exps), c * rat(i64::from(e)));
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.n_vars, "point has wrong arity");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    term *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitutes x_j ↦ images[j], each a linear form.
    pub fn substitute_linear(&self, images: &[HomogeneousPoly]) -> HomogeneousPoly {
        assert_eq!(images.len(), self.n_vars);
        let target_vars = images.first().map_or(self.n_vars, |l| l.n_vars);
        assert!(images.iter().all(|l| l.degree == 1 || l.is_zero()));
        let mut out = HomogeneousPoly::zero(target_vars, self.degree);
        let one = HomogeneousPoly::monomial(rat(1), Monomial::one(target_vars));
        for (m, c) in &self.terms {
            let mut term = one.scale(c);
            for (j, &e) in m.exponents().iter().enumerate() {
                term = term.mul(&images[j].pow(e));
            }
            out = out.add(&term);
        }
        out.degree = self.degree;
        out
    }

    /// Re-embeds in a ring with more variables.
    pub fn extend_vars(&self, n_vars: usize) -> HomogeneousPoly {
        assert!(n_vars >= self.n_vars);
        HomogeneousPoly {
            n_vars,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extend(n_vars), c.clone()))
                .collect(),
        }
    }
}

fn render_term(c: &Rational, m: &Monomial, leading: bool) -> String {
    let mono = m.to_string();
    let abs = c.abs();
    let sign = if c.is_negative() {
        if leading {
            "-"
        } else {
            "- "
        }
    } else if leading {
        ""
    } else {
        "+ "
    };
    if mono == "1" {
        format!("{sign}{abs}")
    } else if abs.is_one() {
        format!("{sign}{mono}")
    } else {
        format!("{sign}{abs}*{mono}")
    }
}

/// Renders in the same grammar the parser accepts, terms in descending order.
impl fmt::Display for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let rendered: Vec<String> = self
            .terms()
            .enumerate()
            .map(|(i, (m, c))| render_term(c, m, i == 0))
            .collect();
        f.write_str(&rendered.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn poly(n: usize, terms: &[(i64, &[u32])]) -> HomogeneousPoly {
        HomogeneousPoly::from_terms(n, terms.iter().map(|(c, e)| (mono(e), rat(*c)))).unwrap()
    }

    #[test]
    fn power_rule() {
        let f = poly(3, &[(1, &[5, 0, 0]), (1, &[0, 4, 1])]);
        assert_eq!(f.partial_derivative(1), poly(3, &[(4, &[0, 3, 1])]));
        let fermat = poly(3, &[(1, &[3, 0, 0]), (1, &[0, 3, 0]), (1, &[0, 0, 3])]);
        assert_eq!(fermat.partial_derivative(0), poly(3, &[(3, &[2, 0, 0])]));
    }

    #[test]
    fn derivative_in_absent_variable_is_zero() {
        let f = poly(3, &[(1, &[0, 2, 1])]);
        let d = f.partial_derivative(0);
        assert!(d.is_zero());
        assert_eq!(d.degree(), 2);
    }

    #[test]
    fn derivative_of_constant() {
        let c = poly(2, &[(7, &[0, 0])]);
        let d = c.partial_derivative(1);
        assert!(d.is_zero());
        assert_eq!(d.degree(), 0);
    }

    #[test]
    fn euler_identity() {
        let f = poly(3, &[(3, &[2, 1, 0]), (-5, &[0, 1, 2]), (1, &[1, 1, 1])]);
        let mut lhs = HomogeneousPoly::zero(3, 3);
        for j in 0..3 {
            lhs = lhs.add(&HomogeneousPoly::var(3, j).mul(&f.partial_derivative(j)));
        }
        assert_eq!(lhs, f.scale(&rat(3)));
    }

    #[test]
    fn inhomogeneous_input_is_rejected() {
        let err = HomogeneousPoly::from_terms(2, [(mono(&[2, 0]), rat(1)), (mono(&[0, 1]), rat(1))]);
        match err {
            Err(Error::NotHomogeneous { terms }) => {
                let degrees: Vec<u32> = terms.iter().map(|t| t.1).collect();
                assert_eq!(degrees, vec![2, 1]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cancellation_leaves_zero_at_declared_degree() {
        let f = poly(2, &[(1, &[1, 1])]);
        let z = f.sub(&f);
        assert!(z.is_zero());
        assert_eq!(z.degree(), 2);
    }

    #[test]
    fn rendering() {
        let f = poly(3, &[(1, &[5, 0, 0]), (1, &[0, 4, 1])]);
        assert_eq!(f.to_string(), "x0^5 + x1^4*x2");
        let g = poly(3, &[(-1, &[1, 0, 0]), (-4, &[0, 0, 1])]);
        assert_eq!(g.to_string(), "-x0 - 4*x2");
        assert_eq!(HomogeneousPoly::zero(3, 2).to_string(), "0");
    }

    #[test]
    fn linear_substitution() {
        // (x0 + x1)^2 = x0^2 + 2 x0 x1 + x1^2
        let sq = poly(2, &[(1, &[2, 0])]);
        let l = HomogeneousPoly::var(2, 0).add(&HomogeneousPoly::var(2, 1));
        let got = sq.substitute_linear(&[l, HomogeneousPoly::var(2, 1)]);
        assert_eq!(got, poly(2, &[(1, &[2, 0]), (2, &[1, 1]), (1, &[0, 2])]));
    }

    #[test]
    fn evaluation() {
        let f = poly(3, &[(1, &[5, 0, 0]), (1, &[0, 4, 1])]);
        assert_eq!(f.evaluate(&[rat(1), rat(1), rat(-1)]), rat(0));
    }
}
