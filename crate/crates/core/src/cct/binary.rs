use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{CctError, GramFactor};
use crate::linalg::{IntMatrix, SymMatrix};

/// Reduced-form test for `[[a, b], [b, c]]`: `2|b| ≤ a ≤ c`, and `b ≥ 0`
/// whenever `2|b| = a` or `a = c`.
///
/// This is Gauss reduction of the form `a x² + 2b xy + c y²`. It implies the
/// weaker `|b| ≤ a ≤ c` with the same boundary condition.
pub fn is_reduced(a: &BigInt, b: &BigInt, c: &BigInt) -> bool {
    let two_b = BigInt::from(2) * b.abs();
    if two_b > *a || a > c {
        return false;
    }
    if (two_b == *a || a == c) && b.is_negative() {
        return false;
    }
    true
}

fn entries_2x2(g: &SymMatrix) -> Result<(BigInt, BigInt, BigInt), CctError> {
    if g.size() != 2 {
        return Err(CctError::Not2x2(g.size()));
    }
    if !g.is_integral() {
        return Err(CctError::NotIntegral);
    }
    let a = g.get(0, 0).to_integer();
    let b = g.get(0, 1).to_integer();
    let c = g.get(1, 1).to_integer();
    if !a.is_positive() || !(&a * &c - &b * &b).is_positive() {
        return Err(CctError::NotPositiveDefinite);
    }
    Ok((a, b, c))
}

/// Gauss reduction of a positive-definite 2×2 integer matrix.
///
/// Returns the reduced form `A'` and a unimodular `E` with `A = E A' Eᵀ`.
pub fn reduce_binary_form(g: &SymMatrix) -> Result<(SymMatrix, IntMatrix), CctError> {
    let (mut a, mut b, mut c) = entries_2x2(g)?;
    // A' = U A Uᵀ throughout.
    let mut u = IntMatrix::identity(2);

    loop {
        if BigInt::from(2) * b.abs() > a {
            // nearest integer to b/a, so that the new b lies in (-a/2, a/2]
            let q = (BigInt::from(2) * &b + &a).div_floor(&(BigInt::from(2) * &a));
            let t = IntMatrix::from_vec(
                2,
                2,
                vec![BigInt::one(), BigInt::zero(), -&q, BigInt::one()],
            );
            c = &c - BigInt::from(2) * &q * &b + &q * &q * &a;
            b = &b - &q * &a;
            u = &t * &u;
        }
        if a > c {
            std::mem::swap(&mut a, &mut c);
            u = &IntMatrix::permutation(&[1, 0]) * &u;
            continue;
        }
        break;
    }
    if b.is_negative() && (BigInt::from(2) * b.abs() == a || a == c) {
        b = -b;
        u = &IntMatrix::from_i64(&[&[1, 0], &[0, -1]]) * &u;
    }
    debug_assert!(is_reduced(&a, &b, &c));

    let e = u.unimodular_inverse().expect("product of unimodular steps");
    let reduced = SymMatrix::from_rows(vec![
        vec![BigRational::from_integer(a), BigRational::from_integer(b.clone())],
        vec![BigRational::from_integer(b), BigRational::from_integer(c)],
    ])
    .expect("symmetric by construction");
    Ok((reduced, e))
}

/// Integer Gram factor of a positive-definite 2×2 matrix.
///
/// On the reduced form `[[a, b], [b, c]]` take `a - |b|` copies of `e₁`,
/// `c - |b|` copies of `e₂` and `|b|` copies of `(1, sgn b)`; then map back
/// through `E`.
pub fn cct_2x2(g: &SymMatrix) -> Result<GramFactor, CctError> {
    let (reduced, e) = reduce_binary_form(g)?;
    let a = reduced.get(0, 0).to_integer();
    let b = reduced.get(0, 1).to_integer();
    let c = reduced.get(1, 1).to_integer();
    let abs_b = b.abs();
    let sgn = b.signum();

    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    let mut push = |col: [BigInt; 2], count: &BigInt| {
        let mut k = BigInt::zero();
        while &k < count {
            cols.push(col.to_vec());
            k += 1;
        }
    };
    push([BigInt::one(), BigInt::zero()], &(&a - &abs_b));
    push([BigInt::zero(), BigInt::one()], &(&c - &abs_b));
    push([BigInt::one(), sgn], &abs_b);

    let reduced_factor = IntMatrix::from_columns(2, &cols);
    Ok(GramFactor::canonical(&(&e * &reduced_factor)))
}
