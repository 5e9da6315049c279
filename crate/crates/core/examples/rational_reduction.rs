//! Rational matrices: the integralization step, then a full reduction.
//!
//! cargo run --example rational_reduction

use kinkeq::cli::parse_quadratic_form;
use kinkeq::reducer::integralize_first_row;
use kinkeq::{determinant, inertia, reduce, verify_trace, Target, TraceStats};

fn main() {
    let half = parse_quadratic_form("1/2*x1^2").unwrap();
    let (g, moves) = integralize_first_row(&half).unwrap();
    println!("[1/2] -> {} via", g);
    for m in &moves {
        println!("  {}", m);
    }

    // x1² + x1 x2 + 1/3 x2² - x3²: half-integer and third entries.
    let q = parse_quadratic_form("x1^2 + x1*x2 + 1/3*x2^2 - x3^2").unwrap();
    println!("\nGram matrix {} inertia {}", q, inertia(&q));
    for target in [Target::NegDefinite, Target::PosDefinite] {
        let t = reduce(&q, target).unwrap();
        let s = TraceStats::count(&t.moves);
        println!(
            "{}: size {} inertia {} det {}  valid {}  {} kinks, {} unkinks",
            target,
            t.end.size(),
            inertia(&t.end),
            determinant(&t.end),
            verify_trace(&t).is_valid(),
            s.neg_kinks + s.pos_kinks,
            s.pos_unkinks + s.neg_unkinks
        );
    }
}
