//! Drives the command-line front end in-process.
//!
//! cargo run --example command_line

use kinkeq::cli::run_args;

fn main() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let runs: Vec<Vec<String>> = vec![
        vec!["inertia".into(), format!("{}/counterexample.sym", data)],
        vec!["stats".into(), format!("{}/a6_chain.trace", data)],
        vec!["foursquares".into(), "1000000007".into()],
        vec!["qform".into(), "x1^2 - 3*x1*x2 + x2^2".into()],
        vec!["cct".into(), "search".into(), format!("{}/counterexample.sym", data)],
    ];
    for args in runs {
        let out = run_args(std::iter::once("kinkeq".to_string()).chain(args.iter().cloned()));
        println!("$ kinkeq {}  (exit {})", args.join(" "), out.code);
        print!("{}{}", out.stdout, out.stderr);
    }
}
