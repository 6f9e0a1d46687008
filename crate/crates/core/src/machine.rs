//! Stateful model of the two-body mind-switch machine.
//!
//! The machine swaps the minds currently in two bodies but refuses to
//! operate twice on the same unordered pair. States are persistent values:
//! [`MachineState::apply_swap`] returns a new state, so several candidate
//! plans can be validated against one history.
//!
//! A state's `displacement` tracks where each mind is: it equals the
//! product, in product notation, of the reversed chronological swap log
//! (the rightmost factor is the first swap made). Everyone is home exactly
//! when the displacement is the identity.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::{Label, OrderConvention, Permutation, SwapSequence, Transposition};
use crate::solver::min_undo_count;

/// Errors from machine transitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MachineError {
    EmptyRoster,
    /// The pair already used the machine; `index` is its position in the
    /// replayed log when the error came from [`replay`].
    PairReused {
        pair: Transposition,
        index: Option<usize>,
    },
    /// Strict mode only: a swap names a body outside the roster.
    NotEnrolled { label: Label },
}

impl fmt::Display for MachineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MachineError::EmptyRoster => write!(f, "roster must not be empty"),
            MachineError::PairReused { pair, index: Some(i) } => {
                write!(f, "pair {pair} already used the machine (swap #{})", i + 1)
            }
            MachineError::PairReused { pair, index: None } => {
                write!(f, "pair {pair} already used the machine")
            }
            MachineError::NotEnrolled { label } => {
                write!(f, "body {label} is not on the roster")
            }
        }
    }
}

impl core::error::Error for MachineError {}

/// An immutable snapshot of the machine: who is enrolled, which pairs have
/// burned their one trip, and where every mind currently sits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MachineState {
    roster: BTreeSet<Label>,
    used_pairs: BTreeSet<Transposition>,
    displacement: Permutation,
    strict: bool,
}

impl MachineState {
    /// A fresh machine over `roster`, everyone in their own body. Bodies
    /// named later in swaps are auto-enrolled (helpers walking in).
    pub fn new(roster: impl IntoIterator<Item = Label>) -> Result<Self, MachineError> {
        let roster: BTreeSet<Label> = roster.into_iter().collect();
        if roster.is_empty() {
            return Err(MachineError::EmptyRoster);
        }
        Ok(MachineState {
            roster,
            used_pairs: BTreeSet::new(),
            displacement: Permutation::identity(),
            strict: false,
        })
    }

    /// Like [`MachineState::new`], but swaps naming bodies outside the
    /// roster are rejected instead of enrolling them.
    pub fn new_strict(roster: impl IntoIterator<Item = Label>) -> Result<Self, MachineError> {
        let mut state = MachineState::new(roster)?;
        state.strict = true;
        Ok(state)
    }

    /// A fresh machine already holding a displacement, for validating plans
    /// against a scramble whose swap history is unknown: no pairs are
    /// marked used.
    pub fn displaced(
        roster: impl IntoIterator<Item = Label>,
        displacement: Permutation,
    ) -> Result<Self, MachineError> {
        let mut roster: BTreeSet<Label> = roster.into_iter().collect();
        roster.extend(displacement.support());
        if roster.is_empty() {
            return Err(MachineError::EmptyRoster);
        }
        Ok(MachineState {
            roster,
            used_pairs: BTreeSet::new(),
            displacement,
            strict: false,
        })
    }

    pub fn roster(&self) -> &BTreeSet<Label> {
        &self.roster
    }

    pub fn used_pairs(&self) -> &BTreeSet<Transposition> {
        &self.used_pairs
    }

    /// Where each mind sits, as a permutation of body labels.
    pub fn displacement(&self) -> &Permutation {
        &self.displacement
    }

    pub fn is_restored(&self) -> bool {
        self.displacement.is_identity()
    }

    /// Runs one pair through the machine: the minds in bodies `t.low()` and
    /// `t.high()` exchange. Fails if the pair has already used the machine.
    pub fn apply_swap(&self, t: Transposition) -> Result<Self, MachineError> {
        if self.strict {
            for l in [t.low(), t.high()] {
                if !self.roster.contains(&l) {
                    return Err(MachineError::NotEnrolled { label: l });
                }
            }
        }
        if self.used_pairs.contains(&t) {
            return Err(MachineError::PairReused {
                pair: t,
                index: None,
            });
        }
        let mut next = self.clone();
        next.roster.insert(t.low());
        next.roster.insert(t.high());
        next.used_pairs.insert(t);
        next.displacement = t.to_permutation().compose(&self.displacement);
        Ok(next)
    }
}

/// Folds a swap log over a fresh machine. The log is read chronologically
/// regardless of its stored convention; a reused pair fails with its
/// position in the log. An empty roster is allowed when the log itself
/// names at least one body.
pub fn replay(
    log: &SwapSequence,
    roster: impl IntoIterator<Item = Label>,
) -> Result<MachineState, MachineError> {
    let mut roster: BTreeSet<Label> = roster.into_iter().collect();
    roster.extend(
        log.swaps()
            .iter()
            .flat_map(|t| [t.low(), t.high()]),
    );
    let mut state = MachineState::new(roster)?;
    for (i, t) in log.iter_in(OrderConvention::Chronological).enumerate() {
        state = state.apply_swap(t).map_err(|e| match e {
            MachineError::PairReused { pair, .. } => MachineError::PairReused {
                pair,
                index: Some(i),
            },
            other => other,
        })?;
    }
    Ok(state)
}

/// Why a plan swap is not allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// The pair already used the machine before the plan started.
    UsedInHistory,
    /// The plan itself uses the pair twice.
    RepeatedInPlan,
}

/// One plan swap the machine would refuse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanViolation {
    pub pair: Transposition,
    /// Position of the offending swap in the plan, chronological, 0-based.
    pub index: usize,
    pub kind: ViolationKind,
}

/// Everything a caller needs to judge a restoration plan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanVerdict {
    pub violations: Vec<PlanViolation>,
    /// Whether the displacement after the whole plan is the identity.
    pub restored: bool,
    pub plan_len: usize,
    /// The theorem budget for the state's displacement, when defined.
    pub budget: Option<usize>,
    /// Whether `plan_len` equals that budget.
    pub matches_budget: Option<bool>,
}

impl PlanVerdict {
    /// Fresh everywhere and everyone home.
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty() && self.restored
    }
}

/// Checks a chronological plan against a machine state: every swap must be
/// fresh with respect to the state's used pairs and the earlier plan swaps,
/// and the final displacement must be the identity. The verdict carries all
/// failures rather than stopping at the first.
pub fn validate_plan(state: &MachineState, plan: &SwapSequence) -> PlanVerdict {
    let budget = min_undo_count(&state.displacement().decompose())
        .ok()
        .map(|b| b.min_swaps);
    let mut seen = state.used_pairs().clone();
    let mut violations = Vec::new();
    let mut displacement = state.displacement().clone();
    for (i, t) in plan.iter_in(OrderConvention::Chronological).enumerate() {
        if state.used_pairs().contains(&t) {
            violations.push(PlanViolation {
                pair: t,
                index: i,
                kind: ViolationKind::UsedInHistory,
            });
        } else if !seen.insert(t) {
            violations.push(PlanViolation {
                pair: t,
                index: i,
                kind: ViolationKind::RepeatedInPlan,
            });
        }
        displacement = t.to_permutation().compose(&displacement);
    }
    let plan_len = plan.len();
    PlanVerdict {
        violations,
        restored: displacement.is_identity(),
        plan_len,
        budget,
        matches_budget: budget.map(|b| b == plan_len),
    }
}
