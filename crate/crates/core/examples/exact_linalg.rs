//! Exact inertia, determinants and unimodular changes of basis.
//!
//! cargo run --example exact_linalg

use kinkeq::linalg::extend_primitive;
use kinkeq::{congruence, determinant, inertia, BigInt, IntMatrix, SymMatrix};

fn main() {
    let g = SymMatrix::from_i64(&[&[0, 1, 2], &[1, 0, -1], &[2, -1, 3]]).unwrap();
    println!("G = {}", g);
    println!("inertia {}  det {}", inertia(&g), determinant(&g));

    // Any primitive vector is the first column of a unimodular matrix.
    let b: Vec<BigInt> = [3, -5, 7].iter().map(|&x| BigInt::from(x)).collect();
    let u = extend_primitive(&b).unwrap();
    println!("extend (3, -5, 7): {}", u);

    // Congruence by its transpose puts bᵀGb in the top-left corner.
    let h = congruence(&g, &u.transpose()).unwrap();
    println!("U^T G U = {}", h);
    println!("corner {} = b^T G b = {}", h.get(0, 0), g.quad_form(&b));
    assert_eq!(inertia(&g), inertia(&h));
    assert_eq!(determinant(&g), determinant(&h));

    let p = IntMatrix::from_i64(&[&[1, 2], &[0, 1]]);
    let five = SymMatrix::diag_i64(&[5, -1]);
    println!("[1 2; 0 1] diag(5, -1) [1 0; 2 1] = {}", congruence(&five, &p).unwrap());
}
