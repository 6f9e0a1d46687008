//! Differential check of the pruned search against a deliberately dumb
//! reference enumeration.
//!
//! The reference walks every word of every length (no parity restriction,
//! no lower-bound pruning, no canonical-label ordering) and multiplies
//! through the public sparse-permutation API, so the two routes share no
//! machinery. If they disagree, the reference is right.

use std::collections::BTreeSet;

use mindswap_core::oracle::{brute_force_min, SearchOutcome, SearchProblem};
use mindswap_core::solver::min_undo_count;
use mindswap_core::{Label, Permutation, SwapSequence, Transposition};

/// All words of exactly `len` factors over `pairs` whose product equals
/// `target`, in lexicographic order.
fn reference_solutions(
    target: &Permutation,
    pairs: &[Transposition],
    allow_repeats: bool,
    len: usize,
) -> Vec<Vec<Transposition>> {
    let mut out = Vec::new();
    let mut word = Vec::new();
    walk(target, pairs, allow_repeats, len, &mut word, &mut out);
    out
}

fn walk(
    target: &Permutation,
    pairs: &[Transposition],
    allow_repeats: bool,
    remaining: usize,
    word: &mut Vec<Transposition>,
    out: &mut Vec<Vec<Transposition>>,
) {
    if remaining == 0 {
        if SwapSequence::product_notation(word.clone()).product() == *target {
            out.push(word.clone());
        }
        return;
    }
    for &t in pairs {
        if !allow_repeats && word.contains(&t) {
            continue;
        }
        word.push(t);
        walk(target, pairs, allow_repeats, remaining - 1, word, out);
        word.pop();
    }
}

/// Smallest word length at or below `cap` with at least one solution, and
/// the full solution set at that length.
fn reference_min(
    target: &Permutation,
    universe: &BTreeSet<Label>,
    forbidden: &BTreeSet<Transposition>,
    allow_repeats: bool,
    cap: usize,
) -> Option<(usize, Vec<Vec<Transposition>>)> {
    let labels: Vec<Label> = universe.iter().copied().collect();
    let mut pairs = Vec::new();
    for (i, &a) in labels.iter().enumerate() {
        for &b in &labels[i + 1..] {
            let t = Transposition::new(a, b);
            if !forbidden.contains(&t) {
                pairs.push(t);
            }
        }
    }
    for len in 0..=cap {
        let sols = reference_solutions(target, &pairs, allow_repeats, len);
        if !sols.is_empty() {
            return Some((len, sols));
        }
    }
    None
}

fn cross_check(
    target: &Permutation,
    universe: BTreeSet<Label>,
    forbidden: BTreeSet<Transposition>,
    allow_repeats: bool,
    cap: usize,
) {
    let mut problem = SearchProblem::new(target.clone(), universe.clone(), forbidden.clone(), cap);
    problem.allow_repeats = allow_repeats;
    let fast = brute_force_min(&problem).unwrap();
    let slow = reference_min(target, &universe, &forbidden, allow_repeats, cap);

    match (fast, slow) {
        (SearchOutcome::Found(fact), Some((len, sols))) => {
            assert_eq!(fact.factors.len(), len, "minimum length for {target}");
            let lex_least = sols.iter().min().unwrap();
            assert_eq!(
                fact.factors.swaps(),
                lex_least.as_slice(),
                "lexicographically least solution for {target}"
            );
        }
        (SearchOutcome::NotFound { .. }, None) => {}
        (fast, slow) => panic!(
            "search and reference disagree for {target}: fast={fast:?} slow={}",
            if slow.is_some() { "found" } else { "none" }
        ),
    }
}

#[test]
fn unconstrained_minimums_match_on_four_labels() {
    let universe: BTreeSet<Label> = (1..=4).collect();
    for p in mindswap_core::oracle::nonidentity_permutations(4) {
        let cap = p.support_size(); // classic minimum is at most n - 1
        cross_check(&p, universe.clone(), BTreeSet::new(), false, cap);
    }
}

#[test]
fn factor_avoiding_minimums_match_on_four_labels() {
    let universe: BTreeSet<Label> = (1..=4).collect();
    for p in mindswap_core::oracle::nonidentity_permutations(4) {
        let budget = min_undo_count(&p.decompose()).unwrap();
        let forbidden: BTreeSet<Transposition> = p.decompose().two_cycles().collect();
        cross_check(&p, universe.clone(), forbidden, false, budget.min_swaps);
    }
}

#[test]
fn repeat_allowing_minimums_match_on_three_labels() {
    let universe: BTreeSet<Label> = (1..=3).collect();
    for p in mindswap_core::oracle::nonidentity_permutations(3) {
        let forbidden: BTreeSet<Transposition> = p.decompose().two_cycles().collect();
        cross_check(&p, universe.clone(), forbidden.clone(), true, 5);
        cross_check(&p, universe.clone(), BTreeSet::new(), true, 4);
    }
}

#[test]
fn helper_rich_bare_swap_matches() {
    // Five labels give the canonical-introduction pruning something to cut;
    // the reference has no such rule, so agreement here validates it.
    let target = Permutation::parse_cycles("(12)").unwrap();
    let universe: BTreeSet<Label> = (1..=5).collect();
    let forbidden = BTreeSet::from([Transposition::new(1, 2)]);
    cross_check(&target, universe, forbidden, false, 5);
}
