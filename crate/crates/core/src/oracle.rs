//! Brute-force minimality search, independent of the closed form.
//!
//! [`brute_force_min`] finds a shortest product of transpositions equal to
//! a target permutation under the machine's constraints (distinct factors
//! unless repeats are allowed, a forbidden-pair set, a bounded universe of
//! bodies). It certifies the solver's formula on every desk-scale instance
//! and powers history-aware planning.
//!
//! The search is iterative deepening over the word length `w`, restricted
//! to `w` congruent to the target's parity mod 2, with two prunes:
//!
//! - remaining-depth lower bound: the classical minimum `n - m` of the
//!   still-to-be-undone displacement never overestimates,
//! - canonical first-use ordering: labels that are outside both the target
//!   support and every forbidden pair are interchangeable, so they must be
//!   introduced in ascending order.
//!
//! Both are validated in tests against an unpruned exhaustive enumeration.
//! The returned word is the lexicographically least among minimum-length
//! solutions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::{Label, Permutation, SwapSequence, Transposition};
use crate::solver::{min_undo_count, FactorizationResult};

/// Default universe-size cap: instances a human could check at a desk.
pub const DESK_SCALE_CAP: usize = 8;

/// Absolute ceiling on universe size; the search state uses fixed-width
/// bitmasks (at most 120 candidate pairs).
const HARD_LABEL_CAP: usize = 16;

/// A minimality question for the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchProblem {
    pub target: Permutation,
    /// Bodies the factors may touch; must contain the target's support.
    pub universe: BTreeSet<Label>,
    /// Pairs the machine refuses (already used, or the target's own
    /// 2-cycle factors, depending on the caller).
    pub forbidden: BTreeSet<Transposition>,
    /// Allow a factor to occur more than once (never twice in a row; an
    /// adjacent repeat cancels and a shorter word would already have won).
    pub allow_repeats: bool,
    /// Deepest word length to try.
    pub max_depth: usize,
    /// Universe-size cap, [`DESK_SCALE_CAP`] by default; may be raised up
    /// to the hard ceiling of 16 labels.
    pub universe_cap: usize,
}

impl SearchProblem {
    pub fn new(
        target: Permutation,
        universe: BTreeSet<Label>,
        forbidden: BTreeSet<Transposition>,
        max_depth: usize,
    ) -> Self {
        SearchProblem {
            target,
            universe,
            forbidden,
            allow_repeats: false,
            max_depth,
            universe_cap: DESK_SCALE_CAP,
        }
    }
}

/// Why a [`SearchProblem`] is malformed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvalidProblem {
    TargetOutsideUniverse(Label),
    ForbiddenOutsideUniverse(Transposition),
    UniverseTooLarge { size: usize, cap: usize },
    ZeroLabel,
    ZeroDepth,
}

impl fmt::Display for InvalidProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidProblem::TargetOutsideUniverse(l) => {
                write!(f, "target moves label {l} outside the universe")
            }
            InvalidProblem::ForbiddenOutsideUniverse(t) => {
                write!(f, "forbidden pair {t} lies outside the universe")
            }
            InvalidProblem::UniverseTooLarge { size, cap } => {
                write!(f, "universe of {size} labels exceeds the cap of {cap}")
            }
            InvalidProblem::ZeroLabel => write!(f, "labels start at 1"),
            InvalidProblem::ZeroDepth => write!(f, "max_depth must be at least 1"),
        }
    }
}

impl core::error::Error for InvalidProblem {}

/// Result of a bounded minimality search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(FactorizationResult),
    /// No word of length `<= explored_depth` exists under the constraints.
    NotFound { explored_depth: usize },
}

impl SearchOutcome {
    pub fn found_len(&self) -> Option<usize> {
        match self {
            SearchOutcome::Found(fact) => Some(fact.factors.len()),
            SearchOutcome::NotFound { .. } => None,
        }
    }
}

/// Finds a shortest transposition word for `problem.target`, or proves none
/// exists within `max_depth`.
pub fn brute_force_min(problem: &SearchProblem) -> Result<SearchOutcome, InvalidProblem> {
    validate(problem)?;
    if problem.target.is_identity() {
        return Ok(SearchOutcome::Found(FactorizationResult::new(
            Vec::new(),
            problem.target.clone(),
            problem.forbidden.clone(),
        )));
    }

    let mut s = Searcher::new(problem);
    let start = s.root_classic;
    let mut depth = start;
    while depth <= problem.max_depth {
        if s.run(depth) {
            let factors: Vec<Transposition> = s
                .prefix
                .iter()
                .map(|&idx| {
                    let (i, j) = s.pairs[idx];
                    Transposition::new(s.labels[i as usize], s.labels[j as usize])
                })
                .collect();
            return Ok(SearchOutcome::Found(FactorizationResult::new(
                factors,
                problem.target.clone(),
                problem.forbidden.clone(),
            )));
        }
        depth += 2; // parity theorem: other lengths cannot multiply to target
    }
    Ok(SearchOutcome::NotFound {
        explored_depth: problem.max_depth,
    })
}

fn validate(problem: &SearchProblem) -> Result<(), InvalidProblem> {
    if problem.max_depth == 0 {
        return Err(InvalidProblem::ZeroDepth);
    }
    if problem.universe.contains(&0) {
        return Err(InvalidProblem::ZeroLabel);
    }
    let cap = problem.universe_cap.min(HARD_LABEL_CAP);
    if problem.universe.len() > cap {
        return Err(InvalidProblem::UniverseTooLarge {
            size: problem.universe.len(),
            cap,
        });
    }
    for l in problem.target.support() {
        if !problem.universe.contains(&l) {
            return Err(InvalidProblem::TargetOutsideUniverse(l));
        }
    }
    for t in &problem.forbidden {
        if !problem.universe.contains(&t.low()) || !problem.universe.contains(&t.high()) {
            return Err(InvalidProblem::ForbiddenOutsideUniverse(*t));
        }
    }
    Ok(())
}

/// Depth-first state over a dense relabeling of the universe to `0..u`.
struct Searcher {
    labels: Vec<Label>,
    /// Allowed candidate pairs as index pairs, in lexicographic label
    /// order; trying them in this order makes the first hit lex-least.
    pairs: Vec<(u8, u8)>,
    allow_repeats: bool,
    /// Rank among interchangeable outside labels, per label index.
    free_rank: Vec<Option<u8>>,
    root_classic: usize,
    target_table: Vec<u8>,

    rem: Vec<u8>,
    inv: Vec<u8>,
    used: u128,
    appeared: u32,
    introduced: usize,
    prefix: Vec<usize>,
}

impl Searcher {
    fn new(problem: &SearchProblem) -> Self {
        let labels: Vec<Label> = problem.universe.iter().copied().collect();
        let index: BTreeMap<Label, u8> = labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i as u8))
            .collect();
        let u = labels.len();

        let mut pairs = Vec::new();
        for i in 0..u {
            for j in (i + 1)..u {
                let t = Transposition::new(labels[i], labels[j]);
                if !problem.forbidden.contains(&t) {
                    pairs.push((i as u8, j as u8));
                }
            }
        }

        // Labels outside the target support and untouched by any forbidden
        // pair are fully interchangeable; rank them ascending.
        let mut pinned = vec![false; u];
        for l in problem.target.support() {
            pinned[index[&l] as usize] = true;
        }
        for t in &problem.forbidden {
            pinned[index[&t.low()] as usize] = true;
            pinned[index[&t.high()] as usize] = true;
        }
        let mut free_rank = vec![None; u];
        let mut rank = 0u8;
        for i in 0..u {
            if !pinned[i] {
                free_rank[i] = Some(rank);
                rank += 1;
            }
        }

        let target_table: Vec<u8> = (0..u)
            .map(|i| index[&problem.target.apply(labels[i])])
            .collect();
        let rem = target_table.clone();
        let mut inv = vec![0u8; u];
        for (x, &y) in rem.iter().enumerate() {
            inv[y as usize] = x as u8;
        }
        let root_classic = classic_of(&rem);

        Searcher {
            labels,
            pairs,
            allow_repeats: problem.allow_repeats,
            free_rank,
            root_classic,
            target_table,
            rem,
            inv,
            used: 0,
            appeared: 0,
            introduced: 0,
            prefix: Vec::new(),
        }
    }

    fn run(&mut self, depth: usize) -> bool {
        self.rem.copy_from_slice(&self.target_table);
        for x in 0..self.rem.len() {
            let y = self.rem[x] as usize;
            self.inv[y] = x as u8;
        }
        self.used = 0;
        self.appeared = 0;
        self.introduced = 0;
        self.prefix.clear();
        self.dfs(depth, self.root_classic)
    }

    /// Walks words in lexicographic order; `cls` is the classical minimum
    /// of the remaining displacement, maintained incrementally.
    fn dfs(&mut self, budget: usize, cls: usize) -> bool {
        if budget == 0 {
            return cls == 0;
        }
        if cls > budget {
            return false;
        }
        if cls == 0 {
            // A prefix multiplying to the target would be a shorter
            // solution, which earlier iterations already ruled out.
            return false;
        }
        let last = if self.allow_repeats {
            self.prefix.last().copied()
        } else {
            None
        };
        for idx in 0..self.pairs.len() {
            if !self.allow_repeats && self.used & (1u128 << idx) != 0 {
                continue;
            }
            if last == Some(idx) {
                continue;
            }
            let (i, j) = self.pairs[idx];
            if !self.fresh_ok(i, j) {
                continue;
            }
            // Left-multiplying by (i j) splits a cycle containing both
            // labels, otherwise joins two; the classical minimum moves by
            // exactly one.
            let cls_next = if self.same_cycle(i, j) { cls - 1 } else { cls + 1 };
            if cls_next + 1 > budget {
                continue;
            }

            let (pi, pj) = (self.inv[i as usize], self.inv[j as usize]);
            self.rem[pi as usize] = j;
            self.rem[pj as usize] = i;
            self.inv[i as usize] = pj;
            self.inv[j as usize] = pi;
            let saved_appeared = self.appeared;
            let saved_introduced = self.introduced;
            for e in [i, j] {
                if self.appeared & (1u32 << e) == 0 {
                    self.appeared |= 1u32 << e;
                    if self.free_rank[e as usize].is_some() {
                        self.introduced += 1;
                    }
                }
            }
            self.used |= 1u128 << idx;
            self.prefix.push(idx);

            if self.dfs(budget - 1, cls_next) {
                return true;
            }

            self.prefix.pop();
            self.used &= !(1u128 << idx);
            self.appeared = saved_appeared;
            self.introduced = saved_introduced;
            self.rem[pi as usize] = i;
            self.rem[pj as usize] = j;
            self.inv[i as usize] = pi;
            self.inv[j as usize] = pj;
        }
        false
    }

    /// Canonical introduction order: a factor may only bring in the
    /// lowest-ranked interchangeable labels not yet seen.
    fn fresh_ok(&self, i: u8, j: u8) -> bool {
        let fresh = |e: u8| -> Option<u8> {
            if self.appeared & (1u32 << e) == 0 {
                self.free_rank[e as usize]
            } else {
                None
            }
        };
        match (fresh(i), fresh(j)) {
            (None, None) => true,
            (Some(r), None) | (None, Some(r)) => r as usize == self.introduced,
            (Some(ri), Some(rj)) => {
                let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
                lo as usize == self.introduced && hi as usize == self.introduced + 1
            }
        }
    }

    fn same_cycle(&self, i: u8, j: u8) -> bool {
        let mut cur = self.rem[i as usize];
        while cur != i {
            if cur == j {
                return true;
            }
            cur = self.rem[cur as usize];
        }
        false
    }
}

/// Classical minimum `n - m` of a dense table: moved entries minus
/// nontrivial cycles.
fn classic_of(table: &[u8]) -> usize {
    let mut visited = 0u32;
    let mut moved = 0;
    let mut cycles = 0;
    for start in 0..table.len() {
        if visited & (1u32 << start) != 0 || table[start] as usize == start {
            continue;
        }
        cycles += 1;
        let mut cur = start;
        loop {
            visited |= 1u32 << cur;
            moved += 1;
            cur = table[cur] as usize;
            if cur == start {
                break;
            }
        }
    }
    moved - cycles
}

// ---------------------------------------------------------------------------
// Entry graph diagnostics
// ---------------------------------------------------------------------------

/// The graph whose vertices are the labels appearing in a swap word and
/// whose edges are its factors. A word with distinct factors yields a
/// simple graph; repeated factors stay as parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryGraph {
    vertices: Vec<Label>,
    edges: Vec<Transposition>,
    components: Vec<Vec<Label>>,
}

impl EntryGraph {
    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Transposition] {
        &self.edges
    }

    /// Connected components, each sorted, ordered by smallest label.
    pub fn components(&self) -> &[Vec<Label>] {
        &self.components
    }

    /// Edges whose endpoints lie inside `component`.
    pub fn edges_within(&self, component: &[Label]) -> usize {
        self.edges
            .iter()
            .filter(|t| component.contains(&t.low()))
            .count()
    }
}

/// Builds the entry graph of a swap word.
pub fn factorization_graph(seq: &SwapSequence) -> EntryGraph {
    let vertices: Vec<Label> = seq
        .swaps()
        .iter()
        .flat_map(|t| [t.low(), t.high()])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: BTreeMap<Label, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, i))
        .collect();

    let mut dsu = DisjointSets::new(vertices.len());
    for t in seq.swaps() {
        dsu.union(index[&t.low()], index[&t.high()]);
    }
    let mut grouped: BTreeMap<usize, Vec<Label>> = BTreeMap::new();
    for (i, &l) in vertices.iter().enumerate() {
        grouped.entry(dsu.find(i)).or_default().push(l);
    }
    let mut components: Vec<Vec<Label>> = grouped.into_values().collect();
    components.sort_by_key(|c| c[0]);

    EntryGraph {
        vertices,
        edges: seq.swaps().to_vec(),
        components,
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(len: usize) -> Self {
        DisjointSets {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut x = x;
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[ry] = rx;
        }
    }
}

// ---------------------------------------------------------------------------
// Formula certification
// ---------------------------------------------------------------------------

/// Outcome of checking one instance against the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaCheck {
    /// The closed-form minimum.
    pub expected: usize,
    /// The search's minimum, if one was found within `expected + 2`.
    pub found: Option<usize>,
    pub agrees: bool,
}

/// Minimum word length for `p` under the theorem constraints (forbidden =
/// its own 2-cycle factors), searched over its support plus two helpers
/// when the support has two labels, plus `extra_labels` more outsiders.
pub fn constrained_minimum(
    p: &Permutation,
    extra_labels: usize,
    allow_repeats: bool,
) -> Option<usize> {
    let d = p.decompose();
    let budget = min_undo_count(&d).expect("non-identity instance");
    let mut universe: BTreeSet<Label> = p.support().collect();
    let outsiders = budget.helpers_required + extra_labels;
    let mut candidate = 1;
    for _ in 0..outsiders {
        while universe.contains(&candidate) {
            candidate += 1;
        }
        universe.insert(candidate);
    }
    let mut problem = SearchProblem::new(
        p.clone(),
        universe,
        d.two_cycles().collect(),
        budget.min_swaps + 2,
    );
    problem.allow_repeats = allow_repeats;
    problem.universe_cap = problem.universe.len();
    brute_force_min(&problem)
        .expect("internally built problem is valid")
        .found_len()
}

/// Checks one instance of the closed form against the search.
pub fn formula_check(p: &Permutation, extra_labels: usize) -> FormulaCheck {
    let expected = min_undo_count(&p.decompose())
        .expect("non-identity instance")
        .min_swaps;
    let found = constrained_minimum(p, extra_labels, false);
    FormulaCheck {
        expected,
        found,
        agrees: found == Some(expected),
    }
}

/// One instance where search and formula disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyMismatch {
    pub target: Permutation,
    pub expected: usize,
    pub found: Option<usize>,
}

/// Report from exhaustively certifying the formula up to a support bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyReport {
    pub n_max: usize,
    /// Non-identity permutations checked.
    pub checked: usize,
    pub mismatches: Vec<CertifyMismatch>,
    /// Re-runs with one or two extra outside labels, confirming outsiders
    /// buy no improvement (sampled on the small end, not exhaustive).
    pub outsider_rechecks: usize,
    pub outsider_mismatches: Vec<CertifyMismatch>,
}

impl CertifyReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.outsider_mismatches.is_empty()
    }
}

/// Every non-identity permutation with support within `{1..n_max}`.
pub fn nonidentity_permutations(n_max: usize) -> Vec<Permutation> {
    let labels: Vec<Label> = (1..=n_max as Label).collect();
    let mut images = labels.clone();
    let mut out = Vec::new();
    permute_rec(&labels, &mut images, 0, &mut out);
    out
}

fn permute_rec(labels: &[Label], images: &mut Vec<Label>, k: usize, out: &mut Vec<Permutation>) {
    if k == images.len() {
        let p = Permutation::from_mapping(labels.iter().copied().zip(images.iter().copied()))
            .expect("permuted images form a bijection");
        if !p.is_identity() {
            out.push(p);
        }
        return;
    }
    for i in k..images.len() {
        images.swap(k, i);
        permute_rec(labels, images, k + 1, out);
        images.swap(k, i);
    }
}

/// Exhaustively checks the closed form for every non-identity permutation
/// with support within `{1..n_max}`. Desk-scale only (`2 <= n_max <= 6`).
///
/// Instances with small support are re-run with one extra outside label
/// (two extras when the support is at most 3) to confirm that admitting
/// outsiders does not improve the minimum.
pub fn certify_formula(n_max: usize) -> CertifyReport {
    assert!(
        (2..=6).contains(&n_max),
        "exhaustive certification is desk-scale only (2..=6)"
    );
    let mut report = CertifyReport {
        n_max,
        checked: 0,
        mismatches: Vec::new(),
        outsider_rechecks: 0,
        outsider_mismatches: Vec::new(),
    };
    for p in nonidentity_permutations(n_max) {
        let check = formula_check(&p, 0);
        report.checked += 1;
        if !check.agrees {
            report.mismatches.push(CertifyMismatch {
                target: p.clone(),
                expected: check.expected,
                found: check.found,
            });
        }
        let n = p.support_size();
        if n <= 4 {
            let extras = if n <= 3 { [1, 2].as_slice() } else { [1].as_slice() };
            for &extra in extras {
                let recheck = formula_check(&p, extra);
                report.outsider_rechecks += 1;
                if !recheck.agrees {
                    report.outsider_mismatches.push(CertifyMismatch {
                        target: p.clone(),
                        expected: recheck.expected,
                        found: recheck.found,
                    });
                }
            }
        }
    }
    report
}

/// One instance where allowing repeated factors changed the minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctnessFinding {
    pub target: Permutation,
    pub distinct_min: Option<usize>,
    pub repeats_min: Option<usize>,
}

/// Report on whether the distinctness requirement affects the minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctnessReport {
    pub n_max: usize,
    pub checked: usize,
    pub findings: Vec<DistinctnessFinding>,
}

/// Compares the distinct-factor minimum against the repeats-allowed
/// minimum for every permutation with `2 < n <= n_max` (both avoid the
/// target's own 2-cycle factors). Findings are reported, not asserted:
/// the claim that distinctness never matters for `n > 2` is empirical.
pub fn distinctness_study(n_max: usize) -> DistinctnessReport {
    assert!(
        (3..=6).contains(&n_max),
        "distinctness study is desk-scale only (3..=6)"
    );
    let mut report = DistinctnessReport {
        n_max,
        checked: 0,
        findings: Vec::new(),
    };
    for p in nonidentity_permutations(n_max) {
        if p.support_size() <= 2 {
            continue;
        }
        let distinct_min = constrained_minimum(&p, 0, false);
        let repeats_min = constrained_minimum(&p, 0, true);
        report.checked += 1;
        if distinct_min != repeats_min {
            report.findings.push(DistinctnessFinding {
                target: p,
                distinct_min,
                repeats_min,
            });
        }
    }
    report
}
