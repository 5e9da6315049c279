//! Integer Gram factors G = C Cᵀ and the trace they induce.
//!
//! cargo run --example gram_factors

use kinkeq::cct::{cct_search, icct_trace};
use kinkeq::{verify_trace, IntMatrix, SymMatrix, TraceStats};

fn main() {
    for rows in [&[&[2i64][..]][..], &[&[2, 1], &[1, 2]], &[&[3, 1, 1], &[1, 3, 1], &[1, 1, 3]]] {
        let g = SymMatrix::from_i64(rows).unwrap();
        match cct_search(&g).unwrap() {
            Some(f) => println!("{} = C C^T with C = {}", g, f.matrix()),
            None => println!("{} has no integer Gram factor", g),
        }
    }

    let a = SymMatrix::from_i64(&[
        &[2, 1, 1, 1, 0, 0],
        &[1, 2, 1, 1, 1, 0],
        &[1, 1, 2, 1, 1, 1],
        &[1, 1, 1, 2, 1, 1],
        &[0, 1, 1, 1, 2, 1],
        &[0, 0, 1, 1, 1, 2],
    ])
    .unwrap();
    println!("A: {:?}", cct_search(&a).unwrap().map(|f| f.into_matrix()));

    // I + C Cᵀ ~ -(I + Cᵀ C).
    let c = IntMatrix::from_i64(&[&[1, 2], &[0, 1], &[1, -1]]);
    let t = icct_trace(&c);
    println!(
        "\n{} ~ {}  valid {}  {:?}",
        t.start,
        t.end,
        verify_trace(&t).is_valid(),
        TraceStats::count(&t.moves)
    );
    for n in 0..=5 {
        let t = icct_trace(&IntMatrix::from_i64(&[&[n]]));
        println!("{} ~ {}", t.start, t.end);
    }
}
