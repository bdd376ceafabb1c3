//! Exact-field scalars, monomials, homogeneous polynomials and exact linear algebra.

mod exact;
pub mod linalg;
pub mod matrix;
mod modular;
pub mod monomial;
pub mod poly;
pub mod scalar;

pub use linalg::{nullspace, rank, rank_mod_prime, FieldMode};
pub use matrix::{BasisLabel, GradedMatrix};
pub use monomial::{binomial, count_monomials, monomials_of_degree, Monomial, MonomialBasis};
pub use poly::HomogeneousPoly;
pub use scalar::{rat, rat_frac, Fp, Rational, Scalar};

pub(crate) use exact::{Echelon, IntVec};
