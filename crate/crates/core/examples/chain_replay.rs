//! Builds the chain [5] ~ [-5] by hand, replays it, then breaks it.
//!
//! cargo run --example chain_replay

use kinkeq::cli::serialize_trace;
use kinkeq::{verify_trace, IntMatrix, Move, Sign, SymMatrix, Trace};

fn main() {
    let moves = vec![
        Move::Kink(Sign::Minus),
        Move::Congruence(IntMatrix::from_i64(&[&[1, 2], &[0, 1]])),
        Move::Congruence(IntMatrix::from_i64(&[&[-2, -1], &[-1, 0]])),
        Move::Unkink(Sign::Plus),
    ];
    let trace = Trace::from_moves(SymMatrix::diag_i64(&[5]), moves).unwrap();
    print!("{}", serialize_trace(&trace));
    print!("{}", verify_trace(&trace));

    let mut bad = trace.clone();
    bad.moves[1] = Move::Congruence(IntMatrix::from_i64(&[&[1, 2], &[1, 1]]));
    print!("\ntampered:\n{}", verify_trace(&bad));
}
