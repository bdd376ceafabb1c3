//! Monomials in x0..xn and the ordered monomial bases of the graded pieces S_k.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// Exponent vector of a monomial.
///
/// Ordered by total degree first, then lexicographically with x0 > x1 > ... > xn.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars])
    }

    /// The variable `x_j` itself.
    pub fn var(n_vars: usize, j: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[j] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    /// Pads with zero exponents up to `n_vars` variables.
    pub fn extend(&self, n_vars: usize) -> Monomial {
        let mut e = self.0.clone();
        e.resize(n_vars, 0);
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{j}")?,
                _ => write!(f, "x{j}^{e}")?,
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// dim S_k for S = Q[x_0..x_{n_vars-1}]: C(k + n_vars - 1, n_vars - 1).
pub fn count_monomials(n_vars: usize, k: usize) -> usize {
    binomial(k + n_vars - 1, n_vars - 1)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All monomials of degree `k` in `n_vars` variables, largest first (x0^k leads).
pub fn monomials_of_degree(n_vars: usize, k: usize) -> Vec<Monomial> {
    assert!(n_vars >= 1, "need at least one variable");
    let mut out = Vec::with_capacity(count_monomials(n_vars, k));
    let mut current = vec![0u32; n_vars];
    fill(&mut out, &mut current, 0, k as u32);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Monomial(current.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

/// Ordered basis of S_k with a reverse index.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    degree: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(n_vars: usize, degree: usize) -> Self {
        let monomials = monomials_of_degree(n_vars, degree);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        MonomialBasis {
            degree,
            monomials,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn get(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}
