//! Positive-definite binary forms: Gauss reduction and a Gram factor.
//!
//! cargo run --example binary_forms

use kinkeq::cct::{cct_2x2, reduce_binary_form};
use kinkeq::SymMatrix;

fn main() {
    for (a, b, c) in [(5, 3, 6), (2, -1, 2), (31, 17, 10), (1, 0, 1), (101, 50, 25)] {
        let g = SymMatrix::from_i64(&[&[a, b], &[b, c]]).unwrap();
        let (r, e) = reduce_binary_form(&g).unwrap();
        let f = cct_2x2(&g).unwrap();
        println!("{} = E {} E^T with E = {}", g, r, e);
        println!("    C = {}", f.matrix());
    }
}
