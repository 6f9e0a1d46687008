//! The minimum number of machine trips that undo a displacement, and the
//! explicit swap words that attain it.
//!
//! For a displacement `P` with `n` entries in `m` nontrivial cycles, `r` of
//! them 2-cycles, the minimum number of distinct transpositions, none equal
//! to a 2-cycle factor of `P`, whose product is `P` is
//!
//! ```text
//! M = 5                      if n = 2   (two outside helpers required)
//! M = n - m + r + eps_r      if n > 2   (eps_r = r mod 2)
//! ```
//!
//! [`construct_factorization`] reaches that bound constructively by gluing
//! four kinds of blocks, dispatching on `r`:
//!
//! - a chain `(c1 c2)(c2 c3)...` for each long cycle,
//! - a merge block folding one 2-cycle into one long cycle,
//! - a four-swap block undoing a pair of 2-cycles,
//! - a seven-swap block undoing three 2-cycles (odd `r`),
//! - and, for `n = 2` only, a five-swap block over two helper bodies.
//!
//! Blocks touch disjoint label sets, so distinctness and avoidance are
//! local to each block.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::oracle::{self, InvalidProblem, SearchOutcome, SearchProblem};
use crate::perm::{
    CycleDecomposition, Label, OrderConvention, Permutation, SwapSequence, Transposition,
};

/// The parity correction `eps_r`: 0 for even `r`, 1 for odd `r`.
pub fn parity_correction(r: usize) -> usize {
    r % 2
}

/// Errors from budget computation and plan construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    /// The displacement is the identity; there is nothing to undo.
    NothingToUndo,
    /// The construction needs outside helper bodies that were not supplied.
    NeedHelpers { required: usize },
    /// The history-aware search exhausted its depth budget.
    SearchBudgetExceeded { max_depth: usize },
    /// The supplied history reuses a pair, which the machine forbids.
    RepeatedHistoryPair(Transposition),
    /// The history-aware search problem was malformed (e.g. too many bodies).
    InvalidSearch(InvalidProblem),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::NothingToUndo => write!(f, "everyone is already in their own body"),
            SolveError::NeedHelpers { required } => {
                write!(f, "need {required} helper bodies outside the support")
            }
            SolveError::SearchBudgetExceeded { max_depth } => {
                write!(f, "no plan found within {max_depth} swaps")
            }
            SolveError::RepeatedHistoryPair(t) => {
                write!(f, "history reuses the pair {t}")
            }
            SolveError::InvalidSearch(e) => write!(f, "search problem invalid: {e}"),
        }
    }
}

impl core::error::Error for SolveError {}

/// The exact budget for undoing a displacement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndoBudget {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    /// Minimum count of distinct transpositions avoiding the 2-cycle
    /// factors of the displacement.
    pub min_swaps: usize,
    /// `eps_r`, the parity correction in the formula.
    pub parity_correction: usize,
    /// Outside bodies required: 2 when `n = 2`, otherwise 0.
    pub helpers_required: usize,
}

/// Evaluates the closed form for the minimum swap count.
pub fn min_undo_count(d: &CycleDecomposition) -> Result<UndoBudget, SolveError> {
    if d.is_empty() {
        return Err(SolveError::NothingToUndo);
    }
    let (n, m, r) = (d.n(), d.m(), d.r());
    let eps = parity_correction(r);
    let (min_swaps, helpers_required) = if n == 2 { (5, 2) } else { (n - m + r + eps, 0) };
    Ok(UndoBudget {
        n,
        m,
        r,
        min_swaps,
        parity_correction: eps,
        helpers_required,
    })
}

/// The classical minimum `n - m` when repeats are allowed and no factor is
/// forbidden; exposed for comparison with [`min_undo_count`].
pub fn classic_min_count(d: &CycleDecomposition) -> Result<usize, SolveError> {
    if d.is_empty() {
        return Err(SolveError::NothingToUndo);
    }
    Ok(d.n() - d.m())
}

/// A factorization of `target` into distinct transpositions avoiding
/// `forbidden`, in product notation (rightmost factor acts first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationResult {
    pub factors: SwapSequence,
    pub target: Permutation,
    pub forbidden: BTreeSet<Transposition>,
    /// Labels used by the factors but outside the target's support.
    pub helpers_used: BTreeSet<Label>,
}

impl FactorizationResult {
    pub(crate) fn new(
        factors: Vec<Transposition>,
        target: Permutation,
        forbidden: BTreeSet<Transposition>,
    ) -> Self {
        let helpers_used = factors
            .iter()
            .flat_map(|t| [t.low(), t.high()])
            .filter(|&l| !target.moves(l))
            .collect();
        FactorizationResult {
            factors: SwapSequence::product_notation(factors),
            target,
            forbidden,
            helpers_used,
        }
    }
}

/// Chain factorization of one long cycle:
/// `(c1 c2 ... cl) = (c1 c2)(c2 c3)...(c_{l-1} cl)`.
fn chain_block(cycle: &[Label], out: &mut Vec<Transposition>) {
    for pair in cycle.windows(2) {
        out.push(Transposition::new(pair[0], pair[1]));
    }
}

/// Merge block folding the 2-cycle `(a b)` into one long cycle
/// `(c1 ... cl)`: the word `(b c1)(a cl)(a c_{l-1})...(a c1)(b cl)`,
/// `l + 2` distinct factors, none equal to `(a b)`.
fn merge_block(two: Transposition, cycle: &[Label], out: &mut Vec<Transposition>) {
    let (a, b) = (two.low(), two.high());
    let first = cycle[0];
    let last = *cycle.last().expect("long cycle is nonempty");
    out.push(Transposition::new(b, first));
    for &c in cycle.iter().rev() {
        out.push(Transposition::new(a, c));
    }
    out.push(Transposition::new(b, last));
}

/// Four-swap block undoing two 2-cycles:
/// `(a b)(c d) = (b d)(a c)(b c)(a d)`.
fn pair_block(s: Transposition, t: Transposition, out: &mut Vec<Transposition>) {
    let (a, b) = (s.low(), s.high());
    let (c, d) = (t.low(), t.high());
    out.push(Transposition::new(b, d));
    out.push(Transposition::new(a, c));
    out.push(Transposition::new(b, c));
    out.push(Transposition::new(a, d));
}

/// Seven-swap block undoing three 2-cycles:
/// `(a1 a2)(a3 a4)(a5 a6) = (a1 a5)(a2 a5)(a3 a5)(a4 a6)(a4 a5)(a1 a6)(a1 a3)`.
fn triple_block(
    s: Transposition,
    t: Transposition,
    u: Transposition,
    out: &mut Vec<Transposition>,
) {
    let (a1, a2) = (s.low(), s.high());
    let (a3, a4) = (t.low(), t.high());
    let (a5, a6) = (u.low(), u.high());
    out.push(Transposition::new(a1, a5));
    out.push(Transposition::new(a2, a5));
    out.push(Transposition::new(a3, a5));
    out.push(Transposition::new(a4, a6));
    out.push(Transposition::new(a4, a5));
    out.push(Transposition::new(a1, a6));
    out.push(Transposition::new(a1, a3));
}

/// Five-swap block for a bare 2-cycle `(a b)`, using two helper bodies
/// `c, d` outside it: `(a b) = (c d)(b c)(a d)(a c)(b d)`.
fn helper_block(two: Transposition, c: Label, d: Label, out: &mut Vec<Transposition>) {
    let (a, b) = (two.low(), two.high());
    out.push(Transposition::new(c, d));
    out.push(Transposition::new(b, c));
    out.push(Transposition::new(a, d));
    out.push(Transposition::new(a, c));
    out.push(Transposition::new(b, d));
}

/// Builds a minimum-length factorization of `p` into distinct
/// transpositions, none equal to a 2-cycle factor of `p`.
///
/// `helper_pool` supplies candidate outside bodies; the first two outside
/// the support are consumed, and only when the support has exactly two
/// labels. The output is deterministic: 2-cycles are consumed in ascending
/// order of smallest label, the merge block takes the long cycle with the
/// smallest minimum, and special blocks precede the plain chains.
pub fn construct_factorization(
    p: &Permutation,
    helper_pool: &[Label],
) -> Result<FactorizationResult, SolveError> {
    let d = p.decompose();
    if d.is_empty() {
        return Err(SolveError::NothingToUndo);
    }
    let two: Vec<Transposition> = d.two_cycles().collect();
    let long: Vec<&[Label]> = d.long_cycles().collect();
    let forbidden: BTreeSet<Transposition> = two.iter().copied().collect();

    let mut factors = Vec::new();
    if d.n() == 2 {
        let pair = two[0];
        let mut helpers = helper_pool
            .iter()
            .copied()
            .filter(|&l| l > 0 && !pair.contains(l));
        let c = helpers.next();
        let d2 = helpers.find(|&l| Some(l) != c);
        match (c, d2) {
            (Some(c), Some(d2)) => helper_block(pair, c, d2, &mut factors),
            _ => return Err(SolveError::NeedHelpers { required: 2 }),
        }
    } else if d.r() == 0 {
        for cycle in &long {
            chain_block(cycle, &mut factors);
        }
    } else if d.r() == 1 {
        // n > 2 and a single 2-cycle, so at least one long cycle exists.
        merge_block(two[0], long[0], &mut factors);
        for cycle in &long[1..] {
            chain_block(cycle, &mut factors);
        }
    } else {
        let mut rest = &two[..];
        if d.r() % 2 == 1 {
            triple_block(two[0], two[1], two[2], &mut factors);
            rest = &two[3..];
        }
        for pair in rest.chunks(2) {
            pair_block(pair[0], pair[1], &mut factors);
        }
        for cycle in &long {
            chain_block(cycle, &mut factors);
        }
    }

    debug_assert_eq!(
        SwapSequence::product_notation(factors.clone()).product(),
        *p,
        "template product must equal the target"
    );
    Ok(FactorizationResult::new(factors, p.clone(), forbidden))
}

/// Which constraint a restoration plan honors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlanMode {
    /// Avoid only the 2-cycle factors of the displacement. The closed-form
    /// minimum `M` is attained, via [`construct_factorization`].
    Theorem,
    /// Avoid every pair already used in the history (the machine's real
    /// constraint). Delegated to the brute-force search; the result is
    /// minimal for that constraint but need not equal `M`.
    History,
}

/// Extra search depth granted beyond the theorem budget in history mode.
const HISTORY_DEPTH_SLACK: usize = 4;

/// Turns a swap history into a chronological plan that returns every mind
/// to its own body.
///
/// The plan is read left to right in time. In [`PlanMode::Theorem`] it is
/// the constructed factorization's word in product-notation order, which
/// is exactly how the written undo word is applied swap by swap. In
/// [`PlanMode::History`] the search runs over the bodies seen in the
/// history plus `helper_pool`, with every history pair forbidden;
/// `max_depth` defaults to the theorem budget plus a small slack.
pub fn make_restoration_plan(
    history: &SwapSequence,
    helper_pool: &[Label],
    mode: PlanMode,
    max_depth: Option<usize>,
) -> Result<SwapSequence, SolveError> {
    let target = history.product();
    if target.is_identity() {
        return Err(SolveError::NothingToUndo);
    }
    match mode {
        PlanMode::Theorem => {
            let fact = construct_factorization(&target, helper_pool)?;
            Ok(SwapSequence::chronological(fact.factors.swaps().to_vec()))
        }
        PlanMode::History => {
            let mut forbidden = BTreeSet::new();
            for t in history.iter_in(OrderConvention::Chronological) {
                if !forbidden.insert(t) {
                    return Err(SolveError::RepeatedHistoryPair(t));
                }
            }
            let mut universe: BTreeSet<Label> = forbidden
                .iter()
                .flat_map(|t| [t.low(), t.high()])
                .collect();
            universe.extend(target.support());
            universe.extend(helper_pool.iter().copied().filter(|&l| l > 0));

            let budget = min_undo_count(&target.decompose())?;
            let depth = max_depth.unwrap_or(budget.min_swaps + HISTORY_DEPTH_SLACK);
            let mut problem = SearchProblem::new(target, universe, forbidden, depth);
            problem.universe_cap = problem.universe.len();
            match oracle::brute_force_min(&problem).map_err(SolveError::InvalidSearch)? {
                SearchOutcome::Found(fact) => Ok(SwapSequence::chronological(
                    fact.factors.swaps().to_vec(),
                )),
                SearchOutcome::NotFound { .. } => {
                    Err(SolveError::SearchBudgetExceeded { max_depth: depth })
                }
            }
        }
    }
}
