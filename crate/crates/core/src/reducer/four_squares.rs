use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive, Zero};

/// Writes `k ≥ 0` as `a² + b² + c² + d²` with `a ≥ b ≥ c ≥ d ≥ 0`.
///
/// Returns the lexicographically greatest such tuple: each part is tried from
/// its largest admissible value downward, and a part `x` is only admissible if
/// the `j` parts still to come (each at most `x`) can cover the remainder,
/// i.e. `j·x² ≥ rem`.
pub fn four_squares(k: &BigInt) -> [BigInt; 4] {
    assert!(!k.is_negative(), "four_squares of a negative integer");
    let mut parts = Vec::with_capacity(4);
    let found = search(k.clone(), 4, None, &mut parts);
    assert!(found, "every nonnegative integer is a sum of four squares");
    let mut it = parts.into_iter();
    [
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
    ]
}

fn search(rem: BigInt, left: u32, cap: Option<&BigInt>, parts: &mut Vec<BigInt>) -> bool {
    if left == 0 {
        return rem.is_zero();
    }
    if left == 3 && !is_sum_of_three_squares(&rem) {
        return false;
    }
    if left == 2 {
        return match two_squares(&rem, cap) {
            Some((x, y)) => {
                parts.push(x);
                parts.push(y);
                true
            }
            None => false,
        };
    }
    let mut x = rem.sqrt();
    if let Some(c) = cap {
        if &x > c {
            x = c.clone();
        }
    }
    let slots = BigInt::from(left);
    loop {
        if &(&x * &x) * &slots < rem {
            return false;
        }
        let next = &rem - &x * &x;
        parts.push(x.clone());
        if search(next, left - 1, Some(&x), parts) {
            return true;
        }
        parts.pop();
        if x.is_zero() {
            return false;
        }
        x -= 1;
    }
}

/// Greatest `x` (then `y`) with `x² + y² = m`, `cap ≥ x ≥ y ≥ 0`.
fn two_squares(m: &BigInt, cap: Option<&BigInt>) -> Option<(BigInt, BigInt)> {
    if has_odd_bad_prime(m) {
        return None;
    }
    let mut x = m.sqrt();
    if let Some(c) = cap {
        if &x > c {
            x = c.clone();
        }
    }
    if let Some(small) = m.to_u128() {
        let mut x = x.to_u128().expect("x² ≤ m");
        while 2 * x * x >= small {
            let r = small - x * x;
            if maybe_square(r) {
                let y = r.sqrt();
                if y * y == r {
                    return Some((x.into(), y.into()));
                }
            }
            if x == 0 {
                break;
            }
            x -= 1;
        }
        return None;
    }
    while &(&x * &x) * 2u32 >= *m {
        let r = m - &x * &x;
        let y = r.sqrt();
        if &y * &y == r {
            return Some((x, y));
        }
        if x.is_zero() {
            break;
        }
        x -= 1;
    }
    None
}

/// Quick rejection of non-squares by residues mod 64, 63 and 65.
fn maybe_square(r: u128) -> bool {
    const fn table(m: u32) -> [bool; 65] {
        let mut t = [false; 65];
        let mut i = 0;
        while i < m {
            t[((i * i) % m) as usize] = true;
            i += 1;
        }
        t
    }
    const T64: [bool; 65] = table(64);
    const T63: [bool; 65] = table(63);
    const T65: [bool; 65] = table(65);
    T64[(r % 64) as usize] && T63[(r % 63) as usize] && T65[(r % 65) as usize]
}

/// True if some small prime `p ≡ 3 (mod 4)` divides `m` to an odd power, in
/// which case `m` is not a sum of two squares.
fn has_odd_bad_prime(m: &BigInt) -> bool {
    if m.is_zero() {
        return false;
    }
    let mut m = m.clone();
    for p in (3u32..2000).step_by(4) {
        if !is_prime(p) {
            continue;
        }
        let mut odd = false;
        while (&m % p).is_zero() {
            m /= p;
            odd = !odd;
        }
        if odd {
            return true;
        }
    }
    false
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Legendre: `m` is a sum of three squares unless `m = 4ᵃ(8b + 7)`.
fn is_sum_of_three_squares(m: &BigInt) -> bool {
    if m.is_zero() {
        return true;
    }
    let mut m = m.clone();
    while (&m % 4u32).is_zero() {
        m /= 4u32;
    }
    &m % 8u32 != BigInt::from(7)
}
