use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{IntMatrix, SymMatrix};

/// Exact determinant. The empty matrix has determinant 1.
///
/// The matrix is scaled by the lcm `L` of its denominators and the integer
/// determinant is divided by `L^n` at the end.
pub fn determinant(g: &SymMatrix) -> BigRational {
    let n = g.size();
    let l = g.denominator_lcm();
    let lr = BigRational::from_integer(l.clone());
    let lifted = IntMatrix::from_vec(
        n,
        n,
        g.entries().map(|x| (x * &lr).to_integer()).collect(),
    );
    let d = int_determinant(&lifted);
    let scale = num_traits::pow(l, n);
    BigRational::new(d, scale)
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn int_determinant(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_rows();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Bareiss guarantees exact division.
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                a[i][j] = q;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}
