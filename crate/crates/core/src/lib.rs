//! Jacobian syzygies of homogeneous polynomials and the invariants read off from
//! them: global Tjurina numbers, minimal degrees of (essential) relations, defects
//! of the singular subscheme, and numerical versality and freeness checks.
//!
//! ```
//! use tjurina::{parse::parse_poly, report::{full_report, ReportOptions}};
//!
//! let f = parse_poly("x0*x1*x2", None).unwrap();
//! let r = full_report(&f, &ReportOptions::default()).unwrap();
//! assert_eq!((r.invariants.tau, r.invariants.mdr), (3, 1));
//! ```

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod invariants;
pub mod oracle;
pub mod parse;
pub mod report;
pub mod syzygy;
