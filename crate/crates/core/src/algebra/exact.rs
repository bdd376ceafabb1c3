//! Fraction-free sparse elimination over the integers.
//!
//! Vectors are reduced against pivots keyed by their leading (first nonzero) index.
//! A reduction step replaces `v` by `a*v - b*p` with `a, b` the cofactors of the two
//! leading entries, then divides out the content of the result, so entries stay as
//! small as the primitive parts allow and no rational arithmetic is ever done.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer vector with strictly increasing indices and no zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct IntVec {
    pub idx: Vec<u32>,
    pub val: Vec<BigInt>,
}

impl IntVec {
    pub fn from_pairs(pairs: Vec<(u32, BigInt)>) -> Self {
        let (idx, val) = pairs.into_iter().filter(|(_, v)| !v.is_zero()).unzip();
        IntVec { idx, val }
    }

    /// Integer multiple of a rational vector (denominators cleared, content removed).
    pub fn from_rationals(values: &[super::scalar::Rational]) -> Self {
        let lcm = super::scalar::denominator_lcm(values);
        let mut v = IntVec::from_pairs(
            values
                .iter()
                .enumerate()
                .map(|(i, q)| (i as u32, q.numer() * (&lcm / q.denom())))
                .collect(),
        );
        let g = v.content();
        v.divide_exact(&g);
        v
    }

    pub fn unit(i: u32) -> Self {
        IntVec {
            idx: vec![i],
            val: vec![BigInt::one()],
        }
    }

    pub fn lead(&self) -> Option<u32> {
        self.idx.first().copied()
    }

    pub fn get(&self, i: u32) -> Option<&BigInt> {
        self.idx.binary_search(&i).ok().map(|k| &self.val[k])
    }

    /// a*x - b*y
    fn combine(a: &BigInt, x: &IntVec, b: &BigInt, y: &IntVec) -> IntVec {
        let mut out = IntVec {
            idx: Vec::with_capacity(x.idx.len() + y.idx.len()),
            val: Vec::with_capacity(x.idx.len() + y.idx.len()),
        };
        let (mut i, mut j) = (0, 0);
        while i < x.idx.len() || j < y.idx.len() {
            let xi = x.idx.get(i).copied().unwrap_or(u32::MAX);
            let yj = y.idx.get(j).copied().unwrap_or(u32::MAX);
            if xi < yj {
                out.idx.push(xi);
                out.val.push(a * &x.val[i]);
                i += 1;
            } else if yj < xi {
                out.idx.push(yj);
                out.val.push(-(b * &y.val[j]));
                j += 1;
            } else {
                let v = a * &x.val[i] - b * &y.val[j];
                if !v.is_zero() {
                    out.idx.push(xi);
                    out.val.push(v);
                }
                i += 1;
                j += 1;
            }
        }
        out
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for v in &self.val {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn divide_exact(&mut self, g: &BigInt) {
        if g.is_one() || g.is_zero() {
            return;
        }
        for v in &mut self.val {
            *v /= g;
        }
    }
}

/// Row echelon form built incrementally, one vector at a time.
#[derive(Debug)]
pub(crate) struct Echelon {
    pivots: Vec<Option<IntVec>>,
    rank: usize,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon {
            pivots: vec![None; dim],
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Reduces `v` to zero or to a new pivot. Returns whether `v` was independent.
    pub fn insert(&mut self, mut v: IntVec) -> bool {
        while let Some(lead) = v.lead() {
            match &self.pivots[lead as usize] {
                Some(p) => {
                    let (a, b) = cofactors(&p.val[0], &v.val[0]);
                    v = IntVec::combine(&a, &v, &b, p);
                    let g = v.content();
                    v.divide_exact(&g);
                }
                None => {
                    let g = v.content();
                    v.divide_exact(&g);
                    normalize_sign(&mut v, None);
                    self.pivots[lead as usize] = Some(v);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }
}

/// Echelon form that records, for every vector, its combination of the inputs.
///
/// Inputs are numbered in insertion order. A vector that reduces to zero yields the
/// unique kernel relation supported on itself and earlier pivot inputs.
#[derive(Debug)]
pub(crate) struct TrackedEchelon {
    pivots: Vec<Option<(IntVec, IntVec)>>,
    inserted: u32,
}

impl TrackedEchelon {
    pub fn new(dim: usize) -> Self {
        TrackedEchelon {
            pivots: vec![None; dim],
            inserted: 0,
        }
    }

    /// Returns the integer relation `w` (with `w[self] != 0`) when `v` is dependent.
    pub fn insert(&mut self, mut v: IntVec) -> Option<IntVec> {
        let mut combo = IntVec::unit(self.inserted);
        self.inserted += 1;
        while let Some(lead) = v.lead() {
            match &self.pivots[lead as usize] {
                Some((p, pc)) => {
                    let (a, b) = cofactors(&p.val[0], &v.val[0]);
                    v = IntVec::combine(&a, &v, &b, p);
                    combo = IntVec::combine(&a, &combo, &b, pc);
                    let g = v.content().gcd(&combo.content());
                    v.divide_exact(&g);
                    combo.divide_exact(&g);
                }
                None => {
                    normalize_sign(&mut v, Some(&mut combo));
                    self.pivots[lead as usize] = Some((v, combo));
                    return None;
                }
            }
        }
        let g = combo.content();
        combo.divide_exact(&g);
        Some(combo)
    }
}

fn cofactors(pivot_lead: &BigInt, v_lead: &BigInt) -> (BigInt, BigInt) {
    let g = pivot_lead.gcd(v_lead);
    (pivot_lead / &g, v_lead / &g)
}

fn normalize_sign(v: &mut IntVec, other: Option<&mut IntVec>) {
    if v.val[0].is_negative() {
        v.val.iter_mut().for_each(|x| *x = -&*x);
        if let Some(o) = other {
            o.val.iter_mut().for_each(|x| *x = -&*x);
        }
    }
}
