use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{int_determinant, IntMatrix, LinalgError};

/// Extends a primitive vector to a unimodular matrix whose first column is `b`.
///
/// `bᵀ` is reduced to `e₁ᵀ` by elementary integer column operations
/// `bᵀ V = e₁ᵀ`; the first row of `V⁻¹` is then `bᵀ`, so `(V⁻¹)ᵀ` is returned.
/// For `n ≥ 2` the result is normalized to determinant +1.
pub fn extend_primitive(b: &[BigInt]) -> Result<IntMatrix, LinalgError> {
    let n = b.len();
    if b.iter().all(Zero::is_zero) {
        return Err(LinalgError::ZeroVector);
    }
    let g = b.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_one() {
        return Err(LinalgError::NotPrimitive { gcd: g });
    }

    let mut row = IntMatrix::from_vec(1, n, b.to_vec());
    // Row operations on `inv` mirror the inverse of each column operation.
    let mut inv = IntMatrix::identity(n);

    loop {
        let nonzero: Vec<usize> = (0..n).filter(|&j| !row[(0, j)].is_zero()).collect();
        if nonzero.len() == 1 {
            break;
        }
        let p = *nonzero
            .iter()
            .min_by(|&&x, &&y| row[(0, x)].magnitude().cmp(row[(0, y)].magnitude()))
            .expect("nonempty");
        for &j in &nonzero {
            if j == p {
                continue;
            }
            let q = row[(0, j)].div_floor(&row[(0, p)]);
            // col_j -= q col_p; inverse is row_p += q row_j
            row.add_col_multiple(j, p, &-&q);
            inv.add_row_multiple(p, j, &q);
        }
    }

    let p = (0..n).find(|&j| !row[(0, j)].is_zero()).expect("nonzero entry");
    if row[(0, p)].is_negative() {
        row.negate_col(p);
        inv.negate_row(p);
    }
    if p != 0 {
        row.swap_cols(0, p);
        inv.swap_rows(0, p);
    }

    let mut out = inv.transpose();
    debug_assert_eq!(out.column(0), b);
    if n >= 2 && int_determinant(&out).is_negative() {
        out.negate_col(n - 1);
    }
    Ok(out)
}

/// Smallest positive integer multiple of a nonzero rational vector.
///
/// Multiplies by the lcm of the denominators, then divides by the gcd of the
/// resulting numerators, so the output is primitive and points the same way.
pub fn primitive_scale(u: &[BigRational]) -> Result<Vec<BigInt>, LinalgError> {
    if u.iter().all(Zero::is_zero) {
        return Err(LinalgError::ZeroVector);
    }
    let l = u.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let lr = BigRational::from_integer(l);
    let ints: Vec<BigInt> = u.iter().map(|x| (x * &lr).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Ok(ints.into_iter().map(|x| x / &g).collect())
}
