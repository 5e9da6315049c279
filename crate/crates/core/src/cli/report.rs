//! Blow-up arithmetic for unimodular forms.
//!
//! For a unimodular `G` with inertia `(n₊, n₋, 0)`:
//!
//! * `G ⊕ -I_{4n₊}` is congruent to `A₋ ⊕ I_{n₊}` with `A₋` negative definite;
//! * `G ⊕ I_{4n₋}` is congruent to `A₊ ⊕ -I_{n₋}` with `A₊` positive definite.
//!
//! Each side is backed by a verified reduction trace. When a reduction uses
//! fewer kinks than the bound, the unused ones are absorbed into the
//! definite part as extra `∓1` diagonal entries.

use std::fmt;

use num_traits::{One, Signed};
use thiserror::Error;

use super::format::serialize_trace;
use crate::linalg::{determinant, inertia, Inertia, SymMatrix};
use crate::moves::{verify_trace, Trace, TraceStats};
use crate::reducer::{reduce, ReduceError, Target};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("form is not unimodular (determinant {0})")]
    NotUnimodularForm(String),
    #[error("form has non-integer entries")]
    NotIntegral,
    #[error(transparent)]
    Reduce(#[from] ReduceError),
}

/// One direction of the report.
#[derive(Debug, Clone)]
pub struct BlowupSide {
    /// Number of stabilizing `[∓1]` summands on the `G` side (`4n₊` or `4n₋`).
    pub blowups: usize,
    /// Number of `[±1]` summands split off the definite side (`n₊` or `n₋`).
    pub unkinks: usize,
    /// Kinks the reduction actually used (never more than `blowups`).
    pub kinks_used: usize,
    pub trace: Trace,
}

#[derive(Debug, Clone)]
pub struct BlowupReport {
    pub inertia: Inertia,
    /// `G ⊕ -I_{4n₊} ≅ A₋ ⊕ I_{n₊}`.
    pub negative: BlowupSide,
    /// `G ⊕ I_{4n₋} ≅ A₊ ⊕ -I_{n₋}`.
    pub positive: BlowupSide,
}

impl BlowupReport {
    /// True iff both attached traces verify.
    pub fn traces_verify(&self) -> bool {
        verify_trace(&self.negative.trace).is_valid() && verify_trace(&self.positive.trace).is_valid()
    }
}

pub fn blowup_report(g: &SymMatrix) -> Result<BlowupReport, ReportError> {
    if !g.is_integral() {
        return Err(ReportError::NotIntegral);
    }
    let det = determinant(g);
    if !det.abs().is_one() {
        return Err(ReportError::NotUnimodularForm(det.to_string()));
    }
    let i = inertia(g);

    let neg = reduce(g, Target::NegDefinite)?;
    let pos = reduce(g, Target::PosDefinite)?;
    let neg_stats = TraceStats::count(&neg.moves);
    let pos_stats = TraceStats::count(&pos.moves);

    Ok(BlowupReport {
        inertia: i,
        negative: BlowupSide {
            blowups: 4 * i.n_plus,
            unkinks: i.n_plus,
            kinks_used: neg_stats.neg_kinks,
            trace: neg,
        },
        positive: BlowupSide {
            blowups: 4 * i.n_minus,
            unkinks: i.n_minus,
            kinks_used: pos_stats.pos_kinks,
            trace: pos,
        },
    })
}

impl fmt::Display for BlowupReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = &self.inertia;
        writeln!(f, "n_plus {}", i.n_plus)?;
        writeln!(f, "n_minus {}", i.n_minus)?;
        writeln!(f, "signature {}", i.signature())?;
        writeln!(f)?;
        writeln!(
            f,
            "negative side: G + -I_{} ~ A_- + I_{}  ({} negative blow-ups, {} positive split off; {} kinks used)",
            self.negative.blowups, self.negative.unkinks, self.negative.blowups, self.negative.unkinks,
            self.negative.kinks_used
        )?;
        writeln!(
            f,
            "A_- = {} + -I_{}",
            self.negative.trace.end,
            self.negative.blowups - self.negative.kinks_used
        )?;
        write!(f, "{}", serialize_trace(&self.negative.trace))?;
        writeln!(f)?;
        writeln!(
            f,
            "positive side: G + I_{} ~ A_+ + -I_{}  ({} positive blow-ups, {} negative split off; {} kinks used)",
            self.positive.blowups, self.positive.unkinks, self.positive.blowups, self.positive.unkinks,
            self.positive.kinks_used
        )?;
        writeln!(
            f,
            "A_+ = {} + I_{}",
            self.positive.trace.end,
            self.positive.blowups - self.positive.kinks_used
        )?;
        write!(f, "{}", serialize_trace(&self.positive.trace))
    }
}
