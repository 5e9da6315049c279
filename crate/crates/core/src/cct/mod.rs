//! Gram factorizations `G = C Cᵀ` over the integers.
//!
//! * [`icct_trace`] turns a factor of `I + C Cᵀ` into an explicit
//!   kink-equivalence with `-(I + Cᵀ C)`.
//! * [`cct_search`] decides whether an integer positive-semidefinite matrix
//!   has any integer Gram factor, by exhaustive canonical search.
//! * [`reduce_binary_form`] and [`cct_2x2`] handle the 2×2 case directly.

mod binary;
mod search;

pub use binary::{cct_2x2, is_reduced, reduce_binary_form};
pub use search::cct_search;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::linalg::{IntMatrix, SymMatrix};
use crate::moves::{Move, Sign, Trace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CctError {
    #[error("matrix has non-integer entries")]
    NotIntegral,
    #[error("matrix is not positive semidefinite")]
    NotPositiveSemidefinite,
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("expected a 2x2 matrix, found {0}x{0}")]
    Not2x2(usize),
    #[error("entries too large for exhaustive search")]
    TooLarge,
}

/// Integer `C` with `G = C Cᵀ`, in canonical column form: no zero columns,
/// the first nonzero entry of every column positive, columns sorted in
/// descending lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramFactor {
    c: IntMatrix,
}

impl GramFactor {
    /// Canonical form of an arbitrary factor; `C Cᵀ` is unchanged.
    pub fn canonical(c: &IntMatrix) -> Self {
        let n = c.rows();
        let mut cols: Vec<Vec<BigInt>> = c
            .columns()
            .into_iter()
            .filter(|col| col.iter().any(|x| !x.is_zero()))
            .map(|mut col| {
                let lead = col.iter().find(|x| !x.is_zero()).expect("nonzero column");
                if lead.is_negative() {
                    col.iter_mut().for_each(|x| *x = -&*x);
                }
                col
            })
            .collect();
        cols.sort_by(|a, b| descending(a, b));
        GramFactor {
            c: IntMatrix::from_columns(n, &cols),
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.c
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.c
    }

    /// `C Cᵀ`.
    pub fn gram(&self) -> SymMatrix {
        SymMatrix::gram(&self.c)
    }
}

fn descending(a: &[BigInt], b: &[BigInt]) -> Ordering {
    b.cmp(a)
}

/// Kink-equivalence from `I_n + C Cᵀ` to `-(I_m + Cᵀ C)` for an `n × m`
/// integer matrix `C`.
///
/// Moves: `m` negative kinks, the block congruences `[[I, C], [0, I]]` and
/// `[[I, 0], [Cᵀ, I]]`, a block swap bringing `I_n` to the end, and `n`
/// positive unkinks.
pub fn icct_trace(c: &IntMatrix) -> Trace {
    let n = c.rows();
    let m = c.cols();
    let start = &SymMatrix::identity(n) + &SymMatrix::gram(c);

    let mut moves = Vec::with_capacity(m + n + 3);
    moves.extend(std::iter::repeat(Move::Kink(Sign::Minus)).take(m));

    let mut upper = IntMatrix::identity(n + m);
    let mut lower = IntMatrix::identity(n + m);
    for i in 0..n {
        for j in 0..m {
            upper[(i, n + j)] = c[(i, j)].clone();
            lower[(n + j, i)] = c[(i, j)].clone();
        }
    }
    moves.push(Move::Congruence(upper));
    moves.push(Move::Congruence(lower));
    if n > 0 && m > 0 {
        let perm: Vec<usize> = (n..n + m).chain(0..n).collect();
        moves.push(Move::Congruence(IntMatrix::permutation(&perm)));
    }
    moves.extend(std::iter::repeat(Move::Unkink(Sign::Plus)).take(n));

    let ctc = SymMatrix::gram(&c.transpose());
    let end = (&SymMatrix::identity(m) + &ctc).neg();
    Trace::new(start, moves, end)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::inertia;
    use crate::moves::{trace_stats, verify_trace};

    #[test]
    fn canonical_form() {
        let c = IntMatrix::from_i64(&[&[0, -1, 0, 1], &[1, -1, 0, 0]]);
        let f = GramFactor::canonical(&c);
        assert_eq!(f.matrix(), &IntMatrix::from_i64(&[&[1, 1, 0], &[1, 0, 1]]));
        assert_eq!(f.gram(), SymMatrix::gram(&c));
    }

    #[test]
    fn icct_one_by_one() {
        let t = icct_trace(&IntMatrix::from_i64(&[&[1]]));
        assert_eq!(t.start, SymMatrix::from_i64(&[&[2]]).unwrap());
        assert_eq!(t.end, SymMatrix::from_i64(&[&[-2]]).unwrap());
        assert!(verify_trace(&t).is_valid());
    }

    #[test]
    fn icct_no_columns() {
        let t = icct_trace(&IntMatrix::zeros(2, 0));
        assert_eq!(t.start, SymMatrix::identity(2));
        assert_eq!(t.end, SymMatrix::empty());
        let s = trace_stats(&t).unwrap();
        assert_eq!((s.pos_unkinks, s.neg_kinks), (2, 0));
    }

    #[test]
    fn icct_column_of_ones() {
        let t = icct_trace(&IntMatrix::from_i64(&[&[1], &[1]]));
        assert_eq!(t.start, SymMatrix::from_i64(&[&[2, 1], &[1, 2]]).unwrap());
        assert_eq!(t.end, SymMatrix::from_i64(&[&[-3]]).unwrap());
        assert!(verify_trace(&t).is_valid());
        assert!(inertia(&t.end).is_negative_definite());
    }

    #[test]
    fn icct_no_rows() {
        let t = icct_trace(&IntMatrix::zeros(0, 2));
        assert_eq!(t.start, SymMatrix::empty());
        assert_eq!(t.end, SymMatrix::scalar(2, -num_rational::BigRational::from_integer(1.into())));
        assert!(verify_trace(&t).is_valid());
    }
}
