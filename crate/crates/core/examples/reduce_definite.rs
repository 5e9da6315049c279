//! Reduces a positive-definite matrix with no integer Gram factor to a
//! negative-definite one, and a mixed matrix in both directions.
//!
//! cargo run --example reduce_definite

use kinkeq::{determinant, inertia, reduce, SymMatrix, Target, TraceStats};

fn show(name: &str, g: &SymMatrix, target: Target) {
    let t = reduce(g, target).unwrap();
    let s = TraceStats::count(&t.moves);
    println!(
        "{} --{}--> size {} inertia {} det {} ({} moves, {} kinks, {} unkinks)",
        name,
        target,
        t.end.size(),
        inertia(&t.end),
        determinant(&t.end),
        t.moves.len(),
        s.neg_kinks + s.pos_kinks,
        s.pos_unkinks + s.neg_unkinks
    );
}

fn main() {
    let a = SymMatrix::from_i64(&[
        &[2, 1, 1, 1, 0, 0],
        &[1, 2, 1, 1, 1, 0],
        &[1, 1, 2, 1, 1, 1],
        &[1, 1, 1, 2, 1, 1],
        &[0, 1, 1, 1, 2, 1],
        &[0, 0, 1, 1, 1, 2],
    ])
    .unwrap();
    show("A", &a, Target::NegDefinite);

    let g = SymMatrix::from_i64(&[&[1, 3, 0], &[3, -2, 1], &[0, 1, 0]]).unwrap();
    println!("G inertia {}", inertia(&g));
    show("G", &g, Target::NegDefinite);
    show("G", &g, Target::PosDefinite);

    let singular = SymMatrix::from_i64(&[&[2, 2], &[2, 2]]).unwrap();
    show("S", &singular, Target::NegSemidefinite);
}
