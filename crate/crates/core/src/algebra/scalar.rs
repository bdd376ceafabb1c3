//! Coefficient fields: exact rationals, and prime fields for the modular fast path.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Element of the prime field F_p. The modulus travels with the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: u64, modulus: u64) -> Self {
        debug_assert!(modulus > 1 && modulus < (1 << 32));
        Fp {
            value: value % modulus,
            modulus,
        }
    }

    /// Reduces a rational into F_p; `None` when p divides the denominator.
    pub fn from_rational(q: &Rational, modulus: u64) -> Option<Self> {
        let num = reduce_bigint(q.numer(), modulus);
        let den = reduce_bigint(q.denom(), modulus);
        if den == 0 {
            return None;
        }
        Some(Fp::new(mul_mod(num, inv_mod(den, modulus), modulus), modulus))
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn check(self, other: Fp) -> Result<u64> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(self.modulus)
    }

    pub fn try_add(self, other: Fp) -> Result<Fp> {
        let p = self.check(other)?;
        Ok(Fp::new(self.value + other.value, p))
    }

    pub fn try_sub(self, other: Fp) -> Result<Fp> {
        let p = self.check(other)?;
        Ok(Fp::new(self.value + p - other.value, p))
    }

    pub fn try_mul(self, other: Fp) -> Result<Fp> {
        let p = self.check(other)?;
        Ok(Fp::new(mul_mod(self.value, other.value, p), p))
    }

    pub fn inverse(self) -> Option<Fp> {
        (self.value != 0).then(|| Fp::new(inv_mod(self.value, self.modulus), self.modulus))
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// A coefficient in either supported field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rational),
    Modular(Fp),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular(x) => x.value == 0,
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Modular(a), Scalar::Modular(b)) => a.try_add(*b).map(Scalar::Modular),
            (Scalar::Modular(a), Scalar::Rational(_)) | (Scalar::Rational(_), Scalar::Modular(a)) => {
                Err(Error::ModulusMismatch(a.modulus, 0))
            }
        }
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Modular(a), Scalar::Modular(b)) => a.try_mul(*b).map(Scalar::Modular),
            (Scalar::Modular(a), Scalar::Rational(_)) | (Scalar::Rational(_), Scalar::Modular(a)) => {
                Err(Error::ModulusMismatch(a.modulus, 0))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Modular(x) => write!(f, "{x}"),
        }
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn reduce_bigint(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.try_into().expect("residue fits in u64")
}

/// Least common multiple of the denominators.
pub(crate) fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Rational reconstruction of `u mod m` with numerator and denominator bounded by sqrt(m/2).
pub(crate) fn rational_reconstruction(u: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m >> 1usize).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}
