use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::SymMatrix;

/// Counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn new(n_plus: usize, n_minus: usize, n_zero: usize) -> Self {
        Inertia {
            n_plus,
            n_minus,
            n_zero,
        }
    }

    pub fn size(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }

    /// `n_plus - n_minus`.
    pub fn signature(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn is_positive_definite(&self) -> bool {
        self.n_minus == 0 && self.n_zero == 0
    }

    pub fn is_negative_definite(&self) -> bool {
        self.n_plus == 0 && self.n_zero == 0
    }

    pub fn is_positive_semidefinite(&self) -> bool {
        self.n_minus == 0
    }

    pub fn is_negative_semidefinite(&self) -> bool {
        self.n_plus == 0
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_minus, self.n_zero)
    }
}

/// Inertia by exact symmetric congruence diagonalization.
///
/// Each round picks a nonzero diagonal pivot and replaces the remaining block
/// by its Schur complement. If every remaining diagonal entry is zero but some
/// `g_ij` is not, adding row/column `j` to `i` produces the pivot `2 g_ij`.
///
/// The work is fraction-free: the block kept is `p·S` for the Schur
/// complement `S` and pivot `p`, divided by its content. A negative `p`
/// swaps the roles of positive and negative from then on.
pub fn inertia(g: &SymMatrix) -> Inertia {
    let n = g.size();
    let (flat, _) = g.integer_lift();
    let mut a: Vec<Vec<BigInt>> = flat.chunks(n.max(1)).take(n).map(|r| r.to_vec()).collect();
    let mut out = Inertia::new(0, 0, 0);
    let mut flipped = false;

    while !a.is_empty() {
        let m = a.len();
        let pivot = match (0..m)
            .filter(|&i| !a[i][i].is_zero())
            .min_by_key(|&i| a[i][i].bits())
        {
            Some(p) => p,
            None => match off_diagonal_nonzero(&a) {
                Some((i, j)) => {
                    for k in 0..m {
                        let v = a[j][k].clone();
                        a[i][k] += v;
                    }
                    for k in 0..m {
                        let v = a[k][j].clone();
                        a[k][i] += v;
                    }
                    i
                }
                None => {
                    out.n_zero += m;
                    break;
                }
            },
        };

        let p = a[pivot][pivot].clone();
        if p.is_positive() != flipped {
            out.n_plus += 1;
        } else {
            out.n_minus += 1;
        }

        let rest: Vec<usize> = (0..m).filter(|&i| i != pivot).collect();
        let mut next: Vec<Vec<BigInt>> = rest
            .iter()
            .map(|&i| {
                rest.iter()
                    .map(|&j| {
                        let t = &a[i][j] * &p;
                        if a[i][pivot].is_zero() || a[pivot][j].is_zero() {
                            t
                        } else {
                            t - &a[i][pivot] * &a[pivot][j]
                        }
                    })
                    .collect()
            })
            .collect();
        let content = next
            .iter()
            .flatten()
            .fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if !content.is_zero() && !content.is_one() {
            for x in next.iter_mut().flatten() {
                *x /= &content;
            }
        }
        if p.is_negative() {
            flipped = !flipped;
        }
        a = next;
    }
    out
}

fn off_diagonal_nonzero(a: &[Vec<BigInt>]) -> Option<(usize, usize)> {
    let m = a.len();
    (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .find(|&(i, j)| !a[i][j].is_zero())
}
