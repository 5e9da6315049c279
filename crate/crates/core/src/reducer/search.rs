use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ReduceError;
use crate::linalg::{inertia, primitive_scale, SymMatrix};

/// Finds a primitive integer vector `b` with `bᵀ G b > 0`.
///
/// Candidates are tried in a fixed order:
/// 1. `e_i` for the smallest `i` with `G_ii > 0`;
/// 2. `e_i + e_j`, then `e_i - e_j`, for `i < j` in index order;
/// 3. the basis vector `w` behind the first positive pivot of an exact
///    congruence diagonalization, replaced by the first of
///    `round(t·w / max|w_i|)` for `t = 1, 2, 4, ...` that is also positive.
///
/// Step 3 always succeeds. Power iteration would also work but its iterates
/// have entries with dozens of digits, and every digit of `b` feeds the
/// corner `bᵀGb` that the next steps have to absorb.
pub fn find_positive_vector(g: &SymMatrix) -> Result<Vec<BigInt>, ReduceError> {
    if inertia(g).n_plus == 0 {
        return Err(ReduceError::NoPositiveEigenvalue);
    }
    let n = g.size();

    if let Some(i) = (0..n).find(|&i| g.get(i, i).is_positive()) {
        return Ok(unit(n, i));
    }

    for i in 0..n {
        for j in i + 1..n {
            for sign in [1i64, -1] {
                let mut x = vec![BigInt::zero(); n];
                x[i] = BigInt::one();
                x[j] = BigInt::from(sign);
                if g.quad_form(&x).is_positive() {
                    return Ok(x);
                }
            }
        }
    }

    Ok(shorten(g, diagonal_witness(g)))
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    let mut x = vec![BigInt::zero(); n];
    x[i] = BigInt::one();
    x
}

/// Rounds scaled-down copies of `w` and keeps the first positive one.
fn shorten(g: &SymMatrix, w: Vec<BigInt>) -> Vec<BigInt> {
    let top = w.iter().map(|x| x.abs()).max().expect("nonempty witness");
    let mut t = BigInt::one();
    while t < top {
        let x: Vec<BigInt> = w
            .iter()
            .map(|v| BigRational::new(v * &t, top.clone()).round().to_integer())
            .collect();
        if g.quad_form(&x).is_positive() {
            let q: Vec<BigRational> = x.into_iter().map(BigRational::from_integer).collect();
            return primitive_scale(&q).expect("positive value implies nonzero");
        }
        t *= 2;
    }
    w
}

/// Runs the Schur-complement diagonalization while tracking each remaining
/// basis vector in original coordinates; the vector behind the first
/// positive pivot has a positive value.
fn diagonal_witness(g: &SymMatrix) -> Vec<BigInt> {
    let n = g.size();
    let mut a = g.to_rows();
    let mut basis: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut e = vec![BigRational::zero(); n];
            e[i] = BigRational::one();
            e
        })
        .collect();

    loop {
        let m = a.len();
        assert!(m > 0, "caller checked for a positive eigenvalue");
        let pivot = match (0..m).find(|&i| !a[i][i].is_zero()) {
            Some(p) => p,
            None => {
                let (i, j) = (0..m)
                    .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                    .expect("nonzero matrix");
                for k in 0..m {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for k in 0..m {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                let bj = basis[j].clone();
                for (x, y) in basis[i].iter_mut().zip(bj) {
                    *x += y;
                }
                i
            }
        };
        let p = a[pivot][pivot].clone();
        if p.is_positive() {
            return primitive_scale(&basis[pivot]).expect("pivot vector is nonzero");
        }

        let rest: Vec<usize> = (0..m).filter(|&i| i != pivot).collect();
        let factors: Vec<BigRational> = rest.iter().map(|&i| &a[i][pivot] / &p).collect();
        a = rest
            .iter()
            .zip(&factors)
            .map(|(&i, f)| {
                rest.iter()
                    .map(|&j| &a[i][j] - f * &a[pivot][j])
                    .collect()
            })
            .collect();
        basis = rest
            .iter()
            .zip(&factors)
            .map(|(&i, f)| {
                basis[i]
                    .iter()
                    .zip(&basis[pivot])
                    .map(|(x, y)| x - f * y)
                    .collect()
            })
            .collect();
    }
}
