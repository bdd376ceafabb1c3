//! Sparse elimination over F_p for the multi-prime fast path.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::scalar::{inv_mod, mul_mod, pow_mod};

const PRIME_LOW: u64 = 1 << 30;
const PRIME_HIGH: u64 = 1 << 31;

/// Deterministic Miller-Rabin for 64-bit inputs below 2^32.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `count` distinct random primes in [2^30, 2^31), reproducible from `seed`.
pub(crate) fn random_primes(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut primes: Vec<u64> = Vec::with_capacity(count);
    while primes.len() < count {
        let candidate = rng.gen_range(PRIME_LOW..PRIME_HIGH) | 1;
        if is_prime(candidate) && !primes.contains(&candidate) {
            primes.push(candidate);
        }
    }
    primes
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct ModVec {
    pub idx: Vec<u32>,
    pub val: Vec<u64>,
}

impl ModVec {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let (idx, val) = pairs.into_iter().filter(|(_, v)| *v != 0).unzip();
        ModVec { idx, val }
    }

    fn unit(i: u32) -> Self {
        ModVec {
            idx: vec![i],
            val: vec![1],
        }
    }

    /// x - c*y
    fn axpy(x: &ModVec, c: u64, y: &ModVec, p: u64) -> ModVec {
        let neg_c = (p - c) % p;
        let mut out = ModVec {
            idx: Vec::with_capacity(x.idx.len() + y.idx.len()),
            val: Vec::with_capacity(x.idx.len() + y.idx.len()),
        };
        let (mut i, mut j) = (0, 0);
        while i < x.idx.len() || j < y.idx.len() {
            let xi = x.idx.get(i).copied().unwrap_or(u32::MAX);
            let yj = y.idx.get(j).copied().unwrap_or(u32::MAX);
            if xi < yj {
                out.idx.push(xi);
                out.val.push(x.val[i]);
                i += 1;
            } else if yj < xi {
                out.idx.push(yj);
                out.val.push(mul_mod(neg_c, y.val[j], p));
                j += 1;
            } else {
                let v = (x.val[i] + mul_mod(neg_c, y.val[j], p)) % p;
                if v != 0 {
                    out.idx.push(xi);
                    out.val.push(v);
                }
                i += 1;
                j += 1;
            }
        }
        out
    }

    fn scale(&mut self, c: u64, p: u64) {
        for v in &mut self.val {
            *v = mul_mod(*v, c, p);
        }
    }
}

/// Kernel of a matrix over F_p given by its columns, in the same normal form as the
/// exact route: one relation per dependent column `c`, coefficient 1 at `c`, support
/// on `c` and earlier pivot columns.
pub(crate) struct ModKernel {
    pub rank: usize,
    /// (dependent column, relation)
    pub relations: Vec<(usize, ModVec)>,
}

pub(crate) fn kernel_mod_p(columns: &[ModVec], dim: usize, p: u64) -> ModKernel {
    let mut pivots: Vec<Option<(ModVec, ModVec)>> = vec![None; dim];
    let mut rank = 0;
    let mut relations = Vec::new();
    for (c, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        let mut combo = ModVec::unit(c as u32);
        loop {
            let Some(&lead) = v.idx.first() else {
                let inv = inv_mod(combo.val[combo.idx.binary_search(&(c as u32)).unwrap()], p);
                combo.scale(inv, p);
                relations.push((c, combo));
                break;
            };
            match &pivots[lead as usize] {
                Some((pv, pc)) => {
                    let factor = v.val[0];
                    v = ModVec::axpy(&v, factor, pv, p);
                    combo = ModVec::axpy(&combo, factor, pc, p);
                }
                None => {
                    let inv = inv_mod(v.val[0], p);
                    v.scale(inv, p);
                    combo.scale(inv, p);
                    pivots[lead as usize] = Some((v, combo));
                    rank += 1;
                    break;
                }
            }
        }
    }
    ModKernel { rank, relations }
}

pub(crate) fn rank_mod_p(columns: &[ModVec], dim: usize, p: u64) -> usize {
    let mut pivots: Vec<Option<ModVec>> = vec![None; dim];
    let mut rank = 0;
    for col in columns {
        let mut v = col.clone();
        while let Some(&lead) = v.idx.first() {
            match &pivots[lead as usize] {
                Some(pv) => {
                    let factor = v.val[0];
                    v = ModVec::axpy(&v, factor, pv, p);
                }
                None => {
                    let inv = inv_mod(v.val[0], p);
                    v.scale(inv, p);
                    pivots[lead as usize] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}
