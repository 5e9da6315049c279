//! Goeritz matrices of checkerboard colorings.
//!
//! cargo run --example goeritz

use kinkeq::goeritz::{goeritz_matrix, parse_diagram};
use kinkeq::{determinant, inertia, reduce, Target};

fn main() {
    let diagrams = [
        ("figure", "regions 4\n0 1 +\n1 2 +\n0 2 +\n0 2 +\n2 3 +\n0 3 +\n0 3 +\n"),
        ("trefoil, dark", "regions 2\n0 1 +\n0 1 +\n0 1 +\n"),
        ("trefoil, light", "regions 3\n0 1 -\n1 2 -\n0 2 -\n"),
    ];
    for (name, text) in diagrams {
        let g = goeritz_matrix(&parse_diagram(text).unwrap());
        println!("{}: {}  inertia {}  det {}", name, g, inertia(&g), determinant(&g));
    }

    // The two trefoil surfaces give [3] and a negative-definite 2x2 matrix;
    // the reducer connects them.
    let dark = goeritz_matrix(&parse_diagram(diagrams[1].1).unwrap());
    let t = reduce(&dark, Target::NegDefinite).unwrap();
    println!("[3] reduces to {}", t.end);
}
