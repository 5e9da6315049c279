//! Reduction to definite and semidefinite representatives.
//!
//! Each elimination round removes one positive eigenvalue:
//!
//! 1. a unimodular congruence puts a positive entry `k` in the top-left
//!    corner (its first row is a primitive `b` with `bᵀGb > 0`);
//! 2. for rational input, the first row is made integral at the cost of one
//!    negative kink;
//! 3. `k - 1 = a² + b² + c² + d²`, one negative kink per nonzero square, and a
//!    congruence turns the corner into 1;
//! 4. the 1 clears the rest of its row and column, a permutation moves it to
//!    the last coordinate, and a positive unkink removes it.
//!
//! Positive targets run the same algorithm on `-G` and negate the trace.

mod four_squares;
mod search;

pub use four_squares::four_squares;
pub use search::find_positive_vector;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{determinant, extend_primitive, inertia, IntMatrix, LinalgError, SymMatrix};
use crate::moves::{apply_move, verify_trace, Move, MoveError, Sign, Trace, TraceStats};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("matrix has no positive eigenvalue")]
    NoPositiveEigenvalue,
    #[error("top-left entry {0} is not positive")]
    NonpositiveCorner(BigRational),
    #[error("a definite target needs a nonsingular matrix")]
    SingularForDefiniteTarget,
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    /// The produced trace broke a move-count bound or failed verification.
    /// Indicates a bug rather than bad input.
    #[error("internal check failed: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    NegDefinite,
    PosDefinite,
    NegSemidefinite,
    PosSemidefinite,
}

impl Target {
    pub fn is_definite(self) -> bool {
        matches!(self, Target::NegDefinite | Target::PosDefinite)
    }

    pub fn is_positive(self) -> bool {
        matches!(self, Target::PosDefinite | Target::PosSemidefinite)
    }

    fn flipped(self) -> Target {
        match self {
            Target::NegDefinite => Target::PosDefinite,
            Target::PosDefinite => Target::NegDefinite,
            Target::NegSemidefinite => Target::PosSemidefinite,
            Target::PosSemidefinite => Target::NegSemidefinite,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::NegDefinite => "neg",
            Target::PosDefinite => "pos",
            Target::NegSemidefinite => "neg-semi",
            Target::PosSemidefinite => "pos-semi",
        })
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "neg" => Ok(Target::NegDefinite),
            "pos" => Ok(Target::PosDefinite),
            "neg-semi" => Ok(Target::NegSemidefinite),
            "pos-semi" => Ok(Target::PosSemidefinite),
            other => Err(format!(
                "unknown target '{}' (expected pos, neg, pos-semi or neg-semi)",
                other
            )),
        }
    }
}

/// Accumulates moves while tracking the current matrix.
struct Builder {
    current: SymMatrix,
    moves: Vec<Move>,
}

impl Builder {
    fn new(g: SymMatrix) -> Self {
        Builder {
            current: g,
            moves: Vec::new(),
        }
    }

    fn push(&mut self, m: Move) -> Result<(), MoveError> {
        self.current = apply_move(&self.current, &m)?;
        self.moves.push(m);
        Ok(())
    }

    /// Identity congruences are dropped.
    fn congruence(&mut self, p: IntMatrix) -> Result<(), MoveError> {
        if p.is_identity() {
            return Ok(());
        }
        self.push(Move::Congruence(p))
    }

    fn finish(self) -> (SymMatrix, Vec<Move>) {
        (self.current, self.moves)
    }
}

/// Makes the first row and column integral when the top-left entry is positive.
///
/// With `d` the lcm of the first-row denominators and `k = d·g₀₀`, a negative
/// kink followed by the congruence `[[d, 0ᵀ, 1], [0, I, 0], [d-1, 0ᵀ, 1]]`
/// gives top-left entry `dk - 1`. Already-integral rows produce no moves.
pub fn integralize_first_row(g: &SymMatrix) -> Result<(SymMatrix, Vec<Move>), ReduceError> {
    let n = g.size();
    if n == 0 {
        return Err(ReduceError::NonpositiveCorner(BigRational::zero()));
    }
    let corner = g.get(0, 0);
    if !corner.is_positive() {
        return Err(ReduceError::NonpositiveCorner(corner.clone()));
    }
    let d = g.row(0).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut b = Builder::new(g.clone());
    if d.is_one() {
        return Ok(b.finish());
    }
    b.push(Move::Kink(Sign::Minus))?;
    let mut p = IntMatrix::identity(n + 1);
    p[(0, 0)] = d.clone();
    p[(0, n)] = BigInt::one();
    p[(n, 0)] = &d - 1;
    b.push(Move::Congruence(p))?;
    Ok(b.finish())
}

/// One elimination round: removes exactly one positive eigenvalue.
///
/// For integer input the moves contain at most four `Kink(-1)`, one
/// `Unkink(+1)` and congruences; rational input may add one more `Kink(-1)`
/// from the integralization step.
pub fn eliminate_positive(g: &SymMatrix) -> Result<(SymMatrix, Vec<Move>), ReduceError> {
    let b = find_positive_vector(g)?;
    let mut st = Builder::new(g.clone());

    // Step 1: first row of P is b, so the new corner is bᵀGb.
    let p = extend_primitive(&b)?.transpose();
    st.congruence(p)?;

    let (after, moves) = integralize_first_row(&st.current)?;
    st.current = after;
    st.moves.extend(moves);

    // Step 2: corner k -> 1 using k - 1 = a² + b² + c² + d².
    let k = st.current.get(0, 0).to_integer();
    debug_assert!(st.current.get(0, 0).is_integer() && k.is_positive());
    let squares: Vec<BigInt> = four_squares(&(&k - 1))
        .into_iter()
        .filter(|x| !x.is_zero())
        .collect();
    let n = st.current.size();
    for _ in &squares {
        st.push(Move::Kink(Sign::Minus))?;
    }
    let mut p = IntMatrix::identity(n + squares.len());
    for (t, s) in squares.iter().enumerate() {
        p[(0, n + t)] = s.clone();
    }
    st.congruence(p)?;
    debug_assert!(st.current.get(0, 0).is_one());

    // Step 3: clear the first row and column, move the 1 last, unkink.
    let m = st.current.size();
    let mut clear = IntMatrix::identity(m);
    for i in 1..m {
        clear[(i, 0)] = -st.current.get(i, 0).to_integer();
    }
    st.congruence(clear)?;
    st.congruence(IntMatrix::rotate_to_end(m, 0))?;
    st.push(Move::Unkink(Sign::Plus))?;

    Ok(st.finish())
}

/// Reduces `g` to a representative of the requested definiteness and
/// returns the verified trace.
///
/// Negative targets use only negative kinks and positive unkinks: at most
/// `4·n₊` kinks for integer input (`5·n₊` for rational input) and exactly
/// `n₊` unkinks. Positive targets mirror this with `n₋`.
pub fn reduce(g: &SymMatrix, target: Target) -> Result<Trace, ReduceError> {
    if target.is_definite() && determinant(g).is_zero() {
        return Err(ReduceError::SingularForDefiniteTarget);
    }
    if target.is_positive() {
        return Ok(reduce(&g.neg(), target.flipped())?.negated());
    }

    let start = inertia(g);
    let rounds = start.n_plus;
    let mut st = Builder::new(g.clone());
    for _ in 0..rounds {
        let (next, moves) = eliminate_positive(&st.current)?;
        st.current = next;
        st.moves.extend(moves);
    }
    let (end, moves) = st.finish();
    let trace = Trace::new(g.clone(), moves, end);

    let report = verify_trace(&trace);
    if let Some(f) = report.failure {
        return Err(ReduceError::Internal(format!("trace does not verify: {}", f)));
    }
    let stats = TraceStats::count(&trace.moves);
    let per_round = if g.is_integral() { 4 } else { 5 };
    if stats.neg_kinks > per_round * rounds
        || stats.pos_unkinks != rounds
        || stats.pos_kinks != 0
        || stats.neg_unkinks != 0
    {
        return Err(ReduceError::Internal(format!(
            "move counts {:?} exceed the bounds for n_plus = {}",
            stats, rounds
        )));
    }
    let end_inertia = inertia(&trace.end);
    if end_inertia.n_plus != 0 || end_inertia.n_zero != start.n_zero {
        return Err(ReduceError::Internal(format!(
            "end inertia {} is not negative semidefinite with nullity {}",
            end_inertia, start.n_zero
        )));
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::trace_stats;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn sym(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::from_i64(rows).unwrap()
    }

    fn rat(rows: &[&[(i64, i64)]]) -> SymMatrix {
        SymMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(n, d)| q(n, d)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn eliminate_one() {
        let (g, moves) = eliminate_positive(&sym(&[&[1]])).unwrap();
        assert_eq!(g, SymMatrix::empty());
        assert_eq!(moves, vec![Move::Unkink(Sign::Plus)]);
    }

    #[test]
    fn eliminate_two() {
        let (g, moves) = eliminate_positive(&sym(&[&[2]])).unwrap();
        assert_eq!(g, sym(&[&[-2]]));
        let stats = TraceStats::count(&moves);
        assert_eq!(stats.neg_kinks, 1);
        assert_eq!(stats.pos_unkinks, 1);
        assert_eq!(stats.pos_kinks + stats.neg_unkinks, 0);
    }

    #[test]
    fn eliminate_counterexample_first_round() {
        let a = sym(&[
            &[2, 1, 1, 1, 0, 0],
            &[1, 2, 1, 1, 1, 0],
            &[1, 1, 2, 1, 1, 1],
            &[1, 1, 1, 2, 1, 1],
            &[0, 1, 1, 1, 2, 1],
            &[0, 0, 1, 1, 1, 2],
        ]);
        let (g, moves) = eliminate_positive(&a).unwrap();
        assert_eq!(g.size(), 6);
        assert_eq!(inertia(&g), crate::Inertia::new(5, 1, 0));
        assert_eq!(TraceStats::count(&moves).neg_kinks, 1);
        // This round is the A0 -> A4 stretch of the hand-worked chain.
        let a4 = sym(&[
            &[1, 0, 0, 1, 0, 1],
            &[0, 1, 0, 1, 1, 1],
            &[0, 0, 1, 1, 1, 1],
            &[1, 1, 1, 2, 1, 0],
            &[0, 1, 1, 1, 2, 0],
            &[1, 1, 1, 0, 0, -2],
        ]);
        assert_eq!(g, a4);
    }

    #[test]
    fn eliminate_requires_positive_eigenvalue() {
        assert_eq!(
            eliminate_positive(&SymMatrix::diag_i64(&[-3, 0])),
            Err(ReduceError::NoPositiveEigenvalue)
        );
    }

    #[test]
    fn integralize_half() {
        let (g, moves) = integralize_first_row(&rat(&[&[(1, 2)]])).unwrap();
        assert_eq!(g, rat(&[&[(1, 1), (0, 1)], &[(0, 1), (-1, 2)]]));
        assert_eq!(
            moves,
            vec![
                Move::Kink(Sign::Minus),
                Move::Congruence(IntMatrix::from_i64(&[&[2, 1], &[1, 1]]))
            ]
        );
    }

    #[test]
    fn integralize_with_block() {
        let g = rat(&[&[(3, 2), (1, 2)], &[(1, 2), (1, 1)]]);
        let (out, moves) = integralize_first_row(&g).unwrap();
        let expected = rat(&[
            &[(5, 1), (1, 1), (2, 1)],
            &[(1, 1), (1, 1), (1, 2)],
            &[(2, 1), (1, 2), (1, 2)],
        ]);
        assert_eq!(out, expected);
        assert_eq!(moves.len(), 2);
    }

    #[test]
    fn integralize_noop_and_errors() {
        let g = sym(&[&[7, 2], &[2, 0]]);
        let (out, moves) = integralize_first_row(&g).unwrap();
        assert_eq!(out, g);
        assert!(moves.is_empty());
        assert!(matches!(
            integralize_first_row(&sym(&[&[0, 1], &[1, 0]])),
            Err(ReduceError::NonpositiveCorner(_))
        ));
    }

    #[test]
    fn reduce_five() {
        let t = reduce(&sym(&[&[5]]), Target::NegDefinite).unwrap();
        assert_eq!(t.end, sym(&[&[-5]]));
        let s = trace_stats(&t).unwrap();
        assert_eq!((s.neg_kinks, s.pos_unkinks), (1, 1));
    }

    #[test]
    fn reduce_positive_target() {
        let t = reduce(&sym(&[&[-5]]), Target::PosDefinite).unwrap();
        assert_eq!(t.end, sym(&[&[5]]));
        let s = trace_stats(&t).unwrap();
        assert_eq!((s.pos_kinks, s.neg_unkinks), (1, 1));
    }

    #[test]
    fn reduce_semidefinite_keeps_nullity() {
        let t = reduce(&SymMatrix::diag_i64(&[0, -2]), Target::PosSemidefinite).unwrap();
        let i = inertia(&t.end);
        assert_eq!((i.n_minus, i.n_zero), (0, 1));
        assert!(verify_trace(&t).is_valid());
    }

    #[test]
    fn reduce_singular_definite_fails() {
        assert_eq!(
            reduce(&SymMatrix::diag_i64(&[0, -2]), Target::NegDefinite),
            Err(ReduceError::SingularForDefiniteTarget)
        );
    }

    #[test]
    fn reduce_rational() {
        let g = rat(&[&[(0, 1), (1, 2)], &[(1, 2), (0, 1)]]);
        let t = reduce(&g, Target::NegDefinite).unwrap();
        assert!(inertia(&t.end).is_negative_definite());
        assert!(TraceStats::count(&t.moves).neg_kinks <= 5);
    }

    #[test]
    fn reduce_empty() {
        let t = reduce(&SymMatrix::empty(), Target::NegDefinite).unwrap();
        assert!(t.moves.is_empty());
    }

    #[test]
    fn target_parse() {
        for t in [
            Target::NegDefinite,
            Target::PosDefinite,
            Target::NegSemidefinite,
            Target::PosSemidefinite,
        ] {
            assert_eq!(t.to_string().parse::<Target>().unwrap(), t);
        }
        assert!("up".parse::<Target>().is_err());
    }
}
