//! Kink-equivalence of symmetric integer and rational matrices.
//!
//! Two symmetric matrices are kink-equivalent when one can be turned into
//! the other by unimodular congruences `G -> P G Pᵀ` together with adding or
//! removing a trailing `[±1]` diagonal block. This crate computes such
//! equivalences exactly, records them as [`moves::Trace`] certificates, and
//! verifies certificates by replaying them.
//!
//! * [`linalg`]: exact matrices, inertia, determinants, primitive vectors.
//! * [`moves`]: the move model, trace replay and move statistics.
//! * [`reducer`]: reduction to definite and semidefinite representatives.
//! * [`cct`]: Gram factorizations `G = C Cᵀ` and the `I + C Cᵀ` construction.
//! * [`goeritz`]: Goeritz matrices from checkerboard incidence data.
//! * [`cli`]: file formats, quadratic-form parsing and the command front end.

pub mod cct;
pub mod cli;
pub mod goeritz;
pub mod linalg;
pub mod moves;
pub mod reducer;

pub use linalg::{
    congruence, determinant, inertia, is_unimodular, BigInt, BigRational, Inertia, IntMatrix,
    LinalgError, Rational, SymMatrix,
};
pub use moves::{apply_move, trace_stats, verify_trace, Move, Sign, Trace, TraceStats};
pub use reducer::{reduce, Target};
