//! Exact dense linear algebra over the rationals.

use crate::rational::Rational;
use num_traits::Zero;

/// Outcome of an exact linear solve of `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinSolve {
    /// Exactly one solution.
    Unique(Vec<Rational>),
    /// No solution.
    Inconsistent,
    /// Solution affine space of positive dimension; `particular` has the
    /// free variables set to zero.
    Underdetermined {
        particular: Vec<Rational>,
        nullity: usize,
    },
}

/// Gaussian elimination on a general (possibly non-square) system.
#[allow(clippy::needless_range_loop)] // rows of `m` are mutated while indexed
pub fn solve_dense(a: &[Vec<Rational>], b: &[Rational]) -> LinSolve {
    let nrows = a.len();
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    assert_eq!(b.len(), nrows);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), ncols);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut row = 0usize;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in col..=ncols {
            let v = &m[row][c] * &inv;
            m[row][c] = v;
        }
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=ncols {
                    let t = &factor * &m[row][c];
                    m[r][c] -= t;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }

    for r in row..nrows {
        if !m[r][ncols].is_zero() {
            return LinSolve::Inconsistent;
        }
    }

    let rank = pivot_cols.len();
    let mut x = vec![Rational::zero(); ncols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[r][ncols].clone();
    }
    if rank == ncols {
        LinSolve::Unique(x)
    } else {
        LinSolve::Underdetermined {
            particular: x,
            nullity: ncols - rank,
        }
    }
}

/// Solve a square nonsingular system; `None` when singular.
pub fn solve_square(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    match solve_dense(a, b) {
        LinSolve::Unique(x) => Some(x),
        _ => None,
    }
}
