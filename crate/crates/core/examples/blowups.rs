//! Blow-up counts for unimodular forms, with the traces that justify them.
//!
//! cargo run --example blowups

use kinkeq::cli::blowup_report;
use kinkeq::SymMatrix;

fn main() {
    let e8 = SymMatrix::from_i64(&[
        &[2, -1, 0, 0, 0, 0, 0, 0],
        &[-1, 2, -1, 0, 0, 0, 0, 0],
        &[0, -1, 2, -1, 0, 0, 0, -1],
        &[0, 0, -1, 2, -1, 0, 0, 0],
        &[0, 0, 0, -1, 2, -1, 0, 0],
        &[0, 0, 0, 0, -1, 2, -1, 0],
        &[0, 0, 0, 0, 0, -1, 2, 0],
        &[0, 0, -1, 0, 0, 0, 0, 2],
    ])
    .unwrap();
    let hyperbolic = SymMatrix::from_i64(&[&[0, 1], &[1, 0]]).unwrap();

    for (name, g) in [("E8", e8), ("H", hyperbolic)] {
        let r = blowup_report(&g).unwrap();
        println!(
            "{}: inertia {}, G + -I_{} ~ A_- + I_{} ({} kinks used), G + I_{} ~ A_+ + -I_{} ({} kinks used), traces verify: {}",
            name,
            r.inertia,
            r.negative.blowups,
            r.negative.unkinks,
            r.negative.kinks_used,
            r.positive.blowups,
            r.positive.unkinks,
            r.positive.kinks_used,
            r.traces_verify()
        );
    }
}
