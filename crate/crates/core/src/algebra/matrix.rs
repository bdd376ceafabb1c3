use num_bigint::BigInt;
use num_traits::Zero;

use super::monomial::Monomial;
use super::scalar::{denominator_lcm, Rational};

/// What a row or column coordinate refers to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    /// Monomial `mono` in summand `component` of a direct sum of copies of S_k.
    Monomial { component: usize, mono: Monomial },
    /// Generator (i, j) of the Koszul module tensored with a monomial multiplier.
    Pair { i: usize, j: usize, mono: Monomial },
    /// A point of a finite configuration.
    Point(usize),
}

/// Exact matrix of a graded linear map, stored column-sparse.
///
/// Column `c` lists its nonzero entries as `(row, value)` with strictly increasing rows.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMatrix {
    rows: usize,
    columns: Vec<Vec<(u32, Rational)>>,
    row_basis: Vec<BasisLabel>,
    col_basis: Vec<BasisLabel>,
}

impl GradedMatrix {
    pub fn from_columns(
        row_basis: Vec<BasisLabel>,
        col_basis: Vec<BasisLabel>,
        mut columns: Vec<Vec<(u32, Rational)>>,
    ) -> Self {
        assert_eq!(col_basis.len(), columns.len());
        let rows = row_basis.len();
        for col in &mut columns {
            col.retain(|(_, v)| !v.is_zero());
            col.sort_by_key(|(r, _)| *r);
            assert!(col.windows(2).all(|w| w[0].0 < w[1].0), "duplicate row entry");
            assert!(col.last().map_or(true, |(r, _)| (*r as usize) < rows));
        }
        GradedMatrix {
            rows,
            columns,
            row_basis,
            col_basis,
        }
    }

    /// Builds from row vectors; entries are transposed into column storage.
    pub fn from_rows(
        row_basis: Vec<BasisLabel>,
        col_basis: Vec<BasisLabel>,
        row_entries: Vec<Vec<(u32, Rational)>>,
    ) -> Self {
        assert_eq!(row_basis.len(), row_entries.len());
        let mut columns = vec![Vec::new(); col_basis.len()];
        for (r, row) in row_entries.into_iter().enumerate() {
            for (c, v) in row {
                columns[c as usize].push((r as u32, v));
            }
        }
        GradedMatrix::from_columns(row_basis, col_basis, columns)
    }

    /// Dense constructor with anonymous bases, mostly for tests.
    pub fn from_dense(rows: usize, cols: usize, entries: &[Rational]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let columns = (0..cols)
            .map(|c| {
                (0..rows)
                    .filter(|&r| !entries[r * cols + c].is_zero())
                    .map(|r| (r as u32, entries[r * cols + c].clone()))
                    .collect()
            })
            .collect();
        GradedMatrix::from_columns(
            (0..rows).map(BasisLabel::Point).collect(),
            (0..cols).map(BasisLabel::Point).collect(),
            columns,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> &[(u32, Rational)] {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[Vec<(u32, Rational)>] {
        &self.columns
    }

    pub fn row_basis(&self) -> &[BasisLabel] {
        &self.row_basis
    }

    pub fn col_basis(&self) -> &[BasisLabel] {
        &self.col_basis
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols());
        let mut out = vec![Rational::zero(); self.rows];
        for (col, x) in self.columns.iter().zip(v) {
            if x.is_zero() {
                continue;
            }
            for (r, a) in col {
                out[*r as usize] += a * x;
            }
        }
        out
    }

    /// Column `c` scaled to integers, with the scale factor used.
    pub(crate) fn integer_column(&self, c: usize) -> (Vec<(u32, BigInt)>, BigInt) {
        let col = &self.columns[c];
        let scale = denominator_lcm(col.iter().map(|(_, v)| v));
        let ints = col
            .iter()
            .map(|(r, v)| (*r, (v.numer() * &scale) / v.denom()))
            .collect();
        (ints, scale)
    }
}
