//! The move model: congruence, kinking and unkinking.
//!
//! A [`Trace`] is a certificate. It stores only its start and end matrices;
//! [`verify_trace`] recomputes every intermediate matrix and checks each
//! move's preconditions, so the verifier is the authority on validity.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{congruence, determinant, inertia, Inertia, IntMatrix, LinalgError, SymMatrix};

/// Sign of a kinking or unkinking move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn to_rational(self) -> BigRational {
        match self {
            Sign::Plus => BigRational::one(),
            Sign::Minus => -BigRational::one(),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Move {
    /// `G -> P G Pᵀ`.
    Congruence(IntMatrix),
    /// `G -> G ⊕ [ε]`.
    Kink(Sign),
    /// `G ⊕ [ε] -> G`; only the trailing coordinate can be removed.
    Unkink(Sign),
}

impl Move {
    /// Same move under `G -> -G`: congruences are unchanged, kink signs flip.
    pub fn negated(&self) -> Move {
        match self {
            Move::Congruence(p) => Move::Congruence(p.clone()),
            Move::Kink(s) => Move::Kink(s.flip()),
            Move::Unkink(s) => Move::Unkink(s.flip()),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Congruence(p) => write!(f, "congr {}", p),
            Move::Kink(s) => write!(f, "kink {}", s),
            Move::Unkink(s) => write!(f, "unkink {}", s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("cannot unkink {sign}: {reason}")]
    UnkinkShapeViolation { sign: Sign, reason: String },
}

/// Applies one move.
pub fn apply_move(g: &SymMatrix, m: &Move) -> Result<SymMatrix, MoveError> {
    match m {
        Move::Congruence(p) => Ok(congruence(g, p)?),
        Move::Kink(s) => Ok(g.bordered(s.to_rational())),
        Move::Unkink(s) => {
            let n = g.size();
            if n == 0 {
                return Err(MoveError::UnkinkShapeViolation {
                    sign: *s,
                    reason: "matrix is empty".into(),
                });
            }
            let last = n - 1;
            if *g.get(last, last) != s.to_rational() {
                return Err(MoveError::UnkinkShapeViolation {
                    sign: *s,
                    reason: format!("last diagonal entry is {}", g.get(last, last)),
                });
            }
            if let Some(j) = (0..last).find(|&j| !g.get(last, j).is_zero()) {
                return Err(MoveError::UnkinkShapeViolation {
                    sign: *s,
                    reason: format!("entry ({}, {}) is {}", last, j, g.get(last, j)),
                });
            }
            Ok(g.leading(last))
        }
    }
}

/// A replayable kink-equivalence from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub start: SymMatrix,
    pub moves: Vec<Move>,
    pub end: SymMatrix,
}

impl Trace {
    pub fn new(start: SymMatrix, moves: Vec<Move>, end: SymMatrix) -> Self {
        Trace { start, moves, end }
    }

    /// Replays `moves` from `start` to fill in `end`.
    pub fn from_moves(start: SymMatrix, moves: Vec<Move>) -> Result<Self, MoveError> {
        let end = moves.iter().try_fold(start.clone(), |g, m| apply_move(&g, m))?;
        Ok(Trace { start, moves, end })
    }

    /// The trace for `-start -> -end` with the same congruence matrices.
    pub fn negated(&self) -> Trace {
        Trace {
            start: self.start.neg(),
            moves: self.moves.iter().map(Move::negated).collect(),
            end: self.end.neg(),
        }
    }
}

/// Per-step audit data: the matrix reached after step `index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepAudit {
    pub index: usize,
    pub size: usize,
    pub inertia: Inertia,
    pub abs_det: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceFailure {
    #[error("step {step} ({mv}): {error}")]
    Move {
        step: usize,
        mv: String,
        error: MoveError,
    },
    #[error("replayed end matrix {found} differs from recorded end {expected}")]
    EndMismatch { expected: String, found: String },
    #[error("step {step}: |det| changed from {before} to {after}")]
    DeterminantDrift {
        step: usize,
        before: BigRational,
        after: BigRational,
    },
    #[error("step {step}: nullity changed from {before} to {after}")]
    NullityDrift { step: usize, before: usize, after: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// Audit of the start matrix (index 0) and of each successfully applied move.
    pub steps: Vec<StepAudit>,
    pub failure: Option<TraceFailure>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(
                f,
                "step {:>3}: size {:>3}  inertia {}  |det| {}",
                s.index, s.size, s.inertia, s.abs_det
            )?;
        }
        match &self.failure {
            None => writeln!(f, "VALID"),
            Some(e) => writeln!(f, "INVALID: {}", e),
        }
    }
}

fn audit(index: usize, g: &SymMatrix) -> StepAudit {
    StepAudit {
        index,
        size: g.size(),
        inertia: inertia(g),
        abs_det: determinant(g).abs(),
    }
}

/// Replays a trace, checking every move and the |det| and nullity invariants.
///
/// Never panics on well-formed input; the first failure is reported.
pub fn verify_trace(t: &Trace) -> VerificationReport {
    let mut g = t.start.clone();
    let first = audit(0, &g);
    let mut steps = vec![first];

    for (k, m) in t.moves.iter().enumerate() {
        let step = k + 1;
        g = match apply_move(&g, m) {
            Ok(next) => next,
            Err(error) => {
                return VerificationReport {
                    steps,
                    failure: Some(TraceFailure::Move {
                        step,
                        mv: describe(m),
                        error,
                    }),
                }
            }
        };
        let a = audit(step, &g);
        let prev = steps.last().expect("start audit");
        let failure = if a.abs_det != prev.abs_det {
            Some(TraceFailure::DeterminantDrift {
                step,
                before: prev.abs_det.clone(),
                after: a.abs_det.clone(),
            })
        } else if a.inertia.n_zero != prev.inertia.n_zero {
            Some(TraceFailure::NullityDrift {
                step,
                before: prev.inertia.n_zero,
                after: a.inertia.n_zero,
            })
        } else {
            None
        };
        steps.push(a);
        if failure.is_some() {
            return VerificationReport { steps, failure };
        }
    }

    let failure = (g != t.end).then(|| TraceFailure::EndMismatch {
        expected: t.end.to_string(),
        found: g.to_string(),
    });
    VerificationReport { steps, failure }
}

fn describe(m: &Move) -> String {
    match m {
        Move::Congruence(p) => format!("congr {}x{}", p.rows(), p.cols()),
        other => other.to_string(),
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TraceStats {
    pub pos_kinks: usize,
    pub neg_kinks: usize,
    pub pos_unkinks: usize,
    pub neg_unkinks: usize,
    pub congruences: usize,
}

impl TraceStats {
    /// Counts moves without replaying them.
    pub fn count(moves: &[Move]) -> Self {
        let mut s = TraceStats::default();
        for m in moves {
            match m {
                Move::Congruence(_) => s.congruences += 1,
                Move::Kink(Sign::Plus) => s.pos_kinks += 1,
                Move::Kink(Sign::Minus) => s.neg_kinks += 1,
                Move::Unkink(Sign::Plus) => s.pos_unkinks += 1,
                Move::Unkink(Sign::Minus) => s.neg_unkinks += 1,
            }
        }
        s
    }
}

impl fmt::Display for TraceStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pos_kinks {}", self.pos_kinks)?;
        writeln!(f, "neg_kinks {}", self.neg_kinks)?;
        writeln!(f, "pos_unkinks {}", self.pos_unkinks)?;
        writeln!(f, "neg_unkinks {}", self.neg_unkinks)?;
        writeln!(f, "congruences {}", self.congruences)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid trace: {0}")]
pub struct InvalidTrace(pub TraceFailure);

/// Move counts by kind for a trace that verifies.
pub fn trace_stats(t: &Trace) -> Result<TraceStats, InvalidTrace> {
    let report = verify_trace(t);
    match report.failure {
        Some(f) => Err(InvalidTrace(f)),
        None => Ok(TraceStats::count(&t.moves)),
    }
}
