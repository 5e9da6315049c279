use kinkeq::cli::{
    parse_int_matrix, parse_matrix, parse_trace, serialize_int_matrix, serialize_matrix,
    serialize_trace,
};
use kinkeq::moves::{MoveError, TraceFailure};
use kinkeq::{
    apply_move, determinant, inertia, trace_stats, verify_trace, BigInt, BigRational, IntMatrix,
    Move, Sign, SymMatrix, Trace,
};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn sym_strategy(max_n: usize) -> impl Strategy<Value = SymMatrix> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((-9i64..=9, 1i64..=5), n * (n + 1) / 2).prop_map(move |v| {
            let mut g = SymMatrix::zeros(n);
            let mut it = v.into_iter();
            for i in 0..n {
                for j in i..n {
                    let (p, q) = it.next().unwrap();
                    g.set(i, j, BigRational::new(p.into(), q.into()));
                }
            }
            g
        })
    })
}

fn sign_strategy() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

/// Builds a trace from a script of move choices, skipping choices that do not
/// apply to the current matrix.
fn scripted_trace(start: SymMatrix, script: &[(u8, Sign, i64, usize)]) -> Trace {
    let mut g = start.clone();
    let mut moves = Vec::new();
    for &(kind, sign, c, at) in script {
        let n = g.size();
        let mv = match kind {
            0 => Move::Kink(sign),
            1 if n > 0 => {
                let last = g.get(n - 1, n - 1);
                let isolated = (0..n - 1).all(|j| g.get(n - 1, j).is_zero());
                if !isolated || !(last.abs() == BigRational::from_integer(1.into())) {
                    continue;
                }
                Move::Unkink(if last.is_positive() { Sign::Plus } else { Sign::Minus })
            }
            2 if n > 1 => {
                let mut p = IntMatrix::identity(n);
                let i = at % n;
                let j = (i + 1 + (at / n) % (n - 1)) % n;
                p[(i, j)] = BigInt::from(c);
                Move::Congruence(p)
            }
            3 if n > 1 => {
                let perm: Vec<usize> = (0..n).map(|k| (k + at) % n).collect();
                Move::Congruence(IntMatrix::permutation(&perm))
            }
            _ => continue,
        };
        g = apply_move(&g, &mv).unwrap();
        moves.push(mv);
    }
    Trace::new(start, moves, g)
}

fn trace_strategy() -> impl Strategy<Value = Trace> {
    (
        sym_strategy(4),
        proptest::collection::vec((0u8..4, sign_strategy(), -3i64..=3, 0usize..40), 0..12),
    )
        .prop_map(|(g, script)| scripted_trace(g, &script))
}

proptest! {
    #[test]
    fn kink_then_unkink_is_identity(g in sym_strategy(5), s in sign_strategy()) {
        let k = apply_move(&g, &Move::Kink(s)).unwrap();
        prop_assert_eq!(k.size(), g.size() + 1);
        prop_assert_eq!(determinant(&k).abs(), determinant(&g).abs());
        prop_assert_eq!(apply_move(&k, &Move::Unkink(s)).unwrap(), g);
    }

    #[test]
    fn wrong_unkink_is_rejected(g in sym_strategy(4), s in sign_strategy()) {
        let k = apply_move(&g, &Move::Kink(s)).unwrap();
        let bad = apply_move(&k, &Move::Unkink(s.flip()));
        prop_assert!(
            matches!(bad, Err(MoveError::UnkinkShapeViolation { .. })),
            "expected UnkinkShapeViolation, got {:?}",
            bad
        );
    }

    #[test]
    fn scripted_traces_verify(t in trace_strategy()) {
        let report = verify_trace(&t);
        prop_assert!(report.is_valid(), "{}", report);
        prop_assert_eq!(report.steps.len(), t.moves.len() + 1);
        let stats = trace_stats(&t).unwrap();
        prop_assert_eq!(stats.congruences + stats.pos_kinks + stats.neg_kinks
            + stats.pos_unkinks + stats.neg_unkinks, t.moves.len());
        let net = stats.pos_kinks + stats.neg_kinks;
        prop_assert_eq!(t.end.size() + stats.pos_unkinks + stats.neg_unkinks, t.start.size() + net);
        let (a, b) = (inertia(&t.start), inertia(&t.end));
        prop_assert_eq!(a.n_zero, b.n_zero);
        prop_assert_eq!(
            b.signature() - a.signature(),
            stats.pos_kinks as i64 - stats.neg_kinks as i64
                - stats.pos_unkinks as i64 + stats.neg_unkinks as i64
        );
    }

    #[test]
    fn negated_traces_verify(t in trace_strategy()) {
        let n = t.negated();
        prop_assert_eq!(&n.start, &t.start.neg());
        prop_assert_eq!(&n.end, &t.end.neg());
        prop_assert!(verify_trace(&n).is_valid());
    }

    #[test]
    fn wrong_end_is_reported(t in trace_strategy()) {
        let mut bad = t.clone();
        bad.end = t.end.bordered(BigRational::from_integer(7.into()));
        let report = verify_trace(&bad);
        prop_assert!(
            matches!(report.failure, Some(TraceFailure::EndMismatch { .. })),
            "expected EndMismatch, got {:?}",
            report.failure
        );
    }

    #[test]
    fn trace_text_round_trip(t in trace_strategy()) {
        let text = serialize_trace(&t);
        prop_assert_eq!(parse_trace(&text).unwrap(), t);
    }

    #[test]
    fn matrix_text_round_trip(g in sym_strategy(5)) {
        prop_assert_eq!(parse_matrix(&serialize_matrix(&g)).unwrap(), g);
    }

    #[test]
    fn int_matrix_text_round_trip(rows in 0usize..4, cols in 0usize..4, seed in proptest::collection::vec(-50i64..50, 16)) {
        let m = IntMatrix::from_vec(rows, cols, seed[..rows * cols].iter().map(|&x| BigInt::from(x)).collect());
        prop_assert_eq!(parse_int_matrix(&serialize_int_matrix(&m)).unwrap(), m);
    }
}

#[test]
fn singular_congruence_is_reported_with_its_step() {
    let t = Trace::new(
        SymMatrix::diag_i64(&[1, 2]),
        vec![
            Move::Kink(Sign::Minus),
            Move::Congruence(IntMatrix::from_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]])),
        ],
        SymMatrix::diag_i64(&[1, 8, -1]),
    );
    let report = verify_trace(&t);
    assert!(matches!(report.failure, Some(TraceFailure::Move { step: 2, .. })));
    assert!(trace_stats(&t).is_err());
}

#[test]
fn trace_parse_errors_carry_line_numbers() {
    let text = "trace\nstart [1]\nkink -1\nfrobnicate\nend [1]\n";
    let err = parse_trace(text).unwrap_err();
    assert!(err.to_string().contains("line 4"), "{}", err);
    assert!(parse_matrix("sym 2\n1 2\n3 4\n").is_err());
    assert!(parse_matrix("sym 2\n1 2\n").is_err());
    assert!(parse_matrix("sym 1\n1/0\n").is_err());
}

#[test]
fn empty_trace_round_trip() {
    let t = Trace::new(SymMatrix::empty(), vec![Move::Kink(Sign::Plus)], SymMatrix::diag_i64(&[1]));
    let text = serialize_trace(&t);
    assert!(text.contains("start []"));
    assert_eq!(parse_trace(&text).unwrap(), t);
    assert!(verify_trace(&t).is_valid());
}
