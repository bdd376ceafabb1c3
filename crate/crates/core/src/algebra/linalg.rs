//! Rank and kernel of [`GradedMatrix`], exactly or through the modular fast path.
//!
//! Exact mode runs fraction-free integer elimination on the columns. Fast mode
//! eliminates modulo three random 31-bit primes; when all three agree on the rank and
//! on the dependent columns, the kernel is lifted by CRT and rational reconstruction and
//! every lifted relation is checked exactly against the matrix. A verified kernel of
//! size `cols - r` together with the modular lower bound `rank >= r` pins the rank
//! exactly, so both modes report identical results. Anything that does not verify
//! falls back to exact elimination.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::exact::{Echelon, IntVec, TrackedEchelon};
use super::matrix::GradedMatrix;
use super::modular::{kernel_mod_p, random_primes, rank_mod_p, ModKernel, ModVec};
use super::scalar::{rational_reconstruction, reduce_bigint, Rational};

/// Seed for the fast-path prime choice; fixed so runs are reproducible.
pub const FAST_PATH_SEED: u64 = 0x7a6e_5eed;
pub const FAST_PATH_PRIMES: usize = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldMode {
    #[default]
    Exact,
    /// Multi-prime elimination confirmed exactly; falls back to `Exact` when unconfirmed.
    Fast,
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldMode::Exact => "exact",
            FieldMode::Fast => "fast",
        })
    }
}

impl FromStr for FieldMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(FieldMode::Exact),
            "fast" => Ok(FieldMode::Fast),
            other => Err(format!("unknown field mode `{other}` (expected exact|fast)")),
        }
    }
}

pub fn rank(m: &GradedMatrix, mode: FieldMode) -> usize {
    match mode {
        FieldMode::Exact => exact_rank(m),
        FieldMode::Fast => match fast_kernel(m) {
            Some(kernel) => m.cols() - kernel.len(),
            None => exact_rank(m),
        },
    }
}

/// Basis of ker(M), one vector per dependent column `c` with entry 1 at `c` and
/// support on `c` and the independent columns before it.
pub fn nullspace(m: &GradedMatrix, mode: FieldMode) -> Vec<Vec<Rational>> {
    let sparse = match mode {
        FieldMode::Exact => exact_kernel(m),
        FieldMode::Fast => fast_kernel(m).unwrap_or_else(|| exact_kernel(m)),
    };
    sparse
        .into_iter()
        .map(|rel| {
            let mut dense = vec![Rational::zero(); m.cols()];
            for (i, v) in rel {
                dense[i] = v;
            }
            dense
        })
        .collect()
}

/// Rank of M reduced modulo `p`; never exceeds the rational rank.
pub fn rank_mod_prime(m: &GradedMatrix, p: u64) -> usize {
    let (cols, _) = integer_columns(m);
    rank_mod_p(&reduce_columns(&cols, p), m.rows(), p)
}

fn integer_columns(m: &GradedMatrix) -> (Vec<IntVec>, Vec<BigInt>) {
    (0..m.cols())
        .map(|c| {
            let (pairs, scale) = m.integer_column(c);
            (IntVec::from_pairs(pairs), scale)
        })
        .unzip()
}

fn exact_rank(m: &GradedMatrix) -> usize {
    let (cols, _) = integer_columns(m);
    let mut ech = Echelon::new(m.rows());
    for col in cols {
        ech.insert(col);
    }
    ech.rank()
}

type SparseRelation = Vec<(usize, Rational)>;

fn exact_kernel(m: &GradedMatrix) -> Vec<SparseRelation> {
    let (cols, scales) = integer_columns(m);
    let mut ech = TrackedEchelon::new(m.rows());
    let mut out = Vec::new();
    for (c, col) in cols.into_iter().enumerate() {
        if let Some(w) = ech.insert(col) {
            let pivot = Rational::from_integer(w.get(c as u32).expect("relation involves its column") * &scales[c]);
            out.push(
                w.idx
                    .iter()
                    .zip(&w.val)
                    .map(|(&i, v)| {
                        let i = i as usize;
                        (i, Rational::from_integer(v * &scales[i]) / &pivot)
                    })
                    .collect(),
            );
        }
    }
    out
}

fn reduce_columns(cols: &[IntVec], p: u64) -> Vec<ModVec> {
    cols.iter()
        .map(|c| ModVec::from_pairs(c.idx.iter().zip(&c.val).map(|(&i, v)| (i, reduce_bigint(v, p)))))
        .collect()
}

fn fast_kernel(m: &GradedMatrix) -> Option<Vec<SparseRelation>> {
    let (cols, scales) = integer_columns(m);
    let primes = random_primes(FAST_PATH_SEED, FAST_PATH_PRIMES);
    let kernels: Vec<ModKernel> = primes
        .par_iter()
        .map(|&p| kernel_mod_p(&reduce_columns(&cols, p), m.rows(), p))
        .collect();

    let first = &kernels[0];
    let agree = kernels.iter().all(|k| {
        k.rank == first.rank
            && k.relations.len() == first.relations.len()
            && k.relations.iter().zip(&first.relations).all(|(a, b)| a.0 == b.0)
    });
    if !agree {
        return None;
    }

    let modulus: BigInt = primes.iter().map(|&p| BigInt::from(p)).product();
    let crt_basis: Vec<BigInt> = primes
        .iter()
        .map(|&p| {
            let p = BigInt::from(p);
            let cofactor = &modulus / &p;
            let inv = cofactor.mod_floor(&p).modinv(&p).expect("distinct primes");
            cofactor * inv
        })
        .collect();

    (0..first.relations.len())
        .into_par_iter()
        .map(|r| {
            let column = first.relations[r].0;
            let mut residues: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
            for (k, kernel) in kernels.iter().enumerate() {
                let rel = &kernel.relations[r].1;
                for (&i, &v) in rel.idx.iter().zip(&rel.val) {
                    residues.entry(i).or_insert_with(|| vec![0; primes.len()])[k] = v;
                }
            }
            let mut lifted = Vec::with_capacity(residues.len());
            for (i, res) in residues {
                let x = res
                    .iter()
                    .zip(&crt_basis)
                    .map(|(&r, e)| BigInt::from(r) * e)
                    .sum::<BigInt>()
                    .mod_floor(&modulus);
                let q = rational_reconstruction(&x, &modulus)?;
                if !q.is_zero() {
                    lifted.push((i as usize, q));
                }
            }
            if !annihilates(&cols, &lifted) {
                return None;
            }
            let pivot = Rational::from_integer(scales[column].clone());
            Some(
                lifted
                    .into_iter()
                    .map(|(i, q)| {
                        let v = q * Rational::from_integer(scales[i].clone()) / &pivot;
                        (i, v)
                    })
                    .collect(),
            )
        })
        .collect()
}

/// Checks Σ w_i · col_i = 0 exactly.
fn annihilates(cols: &[IntVec], relation: &[(usize, Rational)]) -> bool {
    let lcm = relation
        .iter()
        .fold(BigInt::one(), |acc, (_, q)| acc.lcm(q.denom()));
    let mut acc: BTreeMap<u32, BigInt> = BTreeMap::new();
    for (i, q) in relation {
        let w = q.numer() * (&lcm / q.denom());
        let col = &cols[*i];
        for (&r, v) in col.idx.iter().zip(&col.val) {
            *acc.entry(r).or_insert_with(BigInt::zero) += &w * v;
        }
    }
    acc.values().all(Zero::is_zero)
}
