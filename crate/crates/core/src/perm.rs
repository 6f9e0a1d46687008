//! Sparse permutation algebra on positive integer labels.
//!
//! A [`Permutation`] stores only its support (labels it actually moves), so
//! a swap log mentioning bodies 1..9 needs no dense array and labels need
//! not be contiguous. Everything here is an immutable value; operations are
//! pure functions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Body/mind label. Always positive; 0 is never a valid label.
pub type Label = u32;

/// Errors from permutation construction and cycle-notation parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermError {
    /// A label appears in more than one cycle of a disjoint-cycle list.
    Overlap(Label),
    /// A single cycle is malformed: repeated label, fewer than two labels,
    /// or a non-positive label.
    MalformedCycle(&'static str),
    /// A raw mapping is not a bijection on its key set.
    NotBijective,
    /// Cycle-notation text could not be parsed.
    Parse(String),
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::Overlap(l) => write!(f, "label {l} appears in more than one cycle"),
            PermError::MalformedCycle(why) => write!(f, "malformed cycle: {why}"),
            PermError::NotBijective => write!(f, "mapping is not a bijection on its key set"),
            PermError::Parse(why) => write!(f, "cycle notation parse error: {why}"),
        }
    }
}

impl core::error::Error for PermError {}

/// Even/odd sign of a permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Parity of a count of transpositions.
    pub fn of_count(w: usize) -> Self {
        if w % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Parity of a product given the parities of its factors.
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// An unordered pair of distinct labels: one trip through the machine.
///
/// Stored with `low < high`, so equality and ordering ignore the order the
/// pair was written in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transposition {
    low: Label,
    high: Label,
}

impl Transposition {
    /// Builds the pair `{x, y}`.
    ///
    /// Panics if `x == y` or either label is zero; caller code that handles
    /// untrusted input must validate first.
    pub fn new(x: Label, y: Label) -> Self {
        assert!(x != y, "transposition needs two distinct labels, got ({x} {y})");
        assert!(x > 0 && y > 0, "labels are positive, got ({x} {y})");
        Transposition {
            low: x.min(y),
            high: x.max(y),
        }
    }

    pub fn low(&self) -> Label {
        self.low
    }

    pub fn high(&self) -> Label {
        self.high
    }

    pub fn contains(&self, l: Label) -> bool {
        self.low == l || self.high == l
    }

    /// Image of `x` under this transposition.
    pub fn apply(&self, x: Label) -> Label {
        if x == self.low {
            self.high
        } else if x == self.high {
            self.low
        } else {
            x
        }
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut map = BTreeMap::new();
        map.insert(self.low, self.high);
        map.insert(self.high, self.low);
        Permutation { map }
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.high < 10 {
            write!(f, "({}{})", self.low, self.high)
        } else {
            write!(f, "({},{})", self.low, self.high)
        }
    }
}

impl fmt::Debug for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A finite bijection on positive integer labels, identity off its support.
///
/// Fixed points are never stored: the key set of the internal map is
/// exactly the support.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: BTreeMap<Label, Label>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation {
            map: BTreeMap::new(),
        }
    }

    /// Normalizes a raw mapping: drops fixed points, checks bijectivity.
    fn from_map(mut map: BTreeMap<Label, Label>) -> Self {
        map.retain(|k, v| k != v);
        debug_assert!(
            {
                let values: BTreeSet<Label> = map.values().copied().collect();
                values.len() == map.len() && map.keys().all(|k| values.contains(k))
            },
            "mapping is not a bijection on its support"
        );
        Permutation { map }
    }

    /// Builds a permutation from pairwise disjoint cycles, each of length
    /// at least 2; `cycles` may be empty (identity).
    pub fn from_cycles(cycles: &[Vec<Label>]) -> Result<Self, PermError> {
        let mut map = BTreeMap::new();
        for cycle in cycles {
            if cycle.len() < 2 {
                return Err(PermError::MalformedCycle("cycle shorter than two labels"));
            }
            let mut seen = BTreeSet::new();
            for &l in cycle {
                if l == 0 {
                    return Err(PermError::MalformedCycle("label must be positive"));
                }
                if !seen.insert(l) {
                    return Err(PermError::MalformedCycle("label repeated within a cycle"));
                }
            }
            for (i, &l) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                if map.insert(l, next).is_some() {
                    return Err(PermError::Overlap(l));
                }
            }
        }
        Ok(Permutation::from_map(map))
    }

    /// Builds a permutation from explicit `label -> image` pairs. The pairs
    /// must form a bijection on their key set; fixed points are allowed and
    /// normalized away.
    pub fn from_mapping(pairs: impl IntoIterator<Item = (Label, Label)>) -> Result<Self, PermError> {
        let mut map = BTreeMap::new();
        for (k, v) in pairs {
            if k == 0 || v == 0 {
                return Err(PermError::MalformedCycle("label must be positive"));
            }
            if map.insert(k, v).is_some() {
                return Err(PermError::NotBijective);
            }
        }
        let values: BTreeSet<Label> = map.values().copied().collect();
        if values.len() != map.len() || !map.keys().all(|k| values.contains(k)) {
            return Err(PermError::NotBijective);
        }
        Ok(Permutation::from_map(map))
    }

    /// Image of `x`; labels outside the support map to themselves.
    pub fn apply(&self, x: Label) -> Label {
        self.map.get(&x).copied().unwrap_or(x)
    }

    /// Function composition: the result maps `x` to `self(other(x))`,
    /// so `other` acts first.
    pub fn compose(&self, other: &Self) -> Self {
        let domain: BTreeSet<Label> = self.map.keys().chain(other.map.keys()).copied().collect();
        let map = domain
            .into_iter()
            .map(|x| (x, self.apply(other.apply(x))))
            .collect();
        Permutation::from_map(map)
    }

    pub fn inverse(&self) -> Self {
        Permutation {
            map: self.map.iter().map(|(&k, &v)| (v, k)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    /// Labels moved by this permutation, ascending.
    pub fn support(&self) -> impl Iterator<Item = Label> + '_ {
        self.map.keys().copied()
    }

    pub fn support_size(&self) -> usize {
        self.map.len()
    }

    pub fn moves(&self, l: Label) -> bool {
        self.map.contains_key(&l)
    }

    /// Disjoint-cycle decomposition in canonical form: each cycle starts at
    /// its smallest label and cycles are sorted by smallest label. The
    /// identity decomposes to the empty list with `n = m = r = 0`.
    pub fn decompose(&self) -> CycleDecomposition {
        let mut visited = BTreeSet::new();
        let mut cycles = Vec::new();
        let mut r = 0;
        // Walking the support in ascending order means every cycle is first
        // entered at its minimum, so the canonical form falls out directly.
        for &start in self.map.keys() {
            if visited.contains(&start) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            loop {
                visited.insert(cur);
                cycle.push(cur);
                cur = self.apply(cur);
                if cur == start {
                    break;
                }
            }
            if cycle.len() == 2 {
                r += 1;
            }
            cycles.push(cycle);
        }
        let n = visited.len();
        let m = cycles.len();
        CycleDecomposition { cycles, n, m, r }
    }

    /// Sign of the permutation: odd iff `n - m` is odd.
    pub fn parity(&self) -> Parity {
        let d = self.decompose();
        Parity::of_count(d.n - d.m)
    }

    /// Parses cycle notation such as `(12)(3456789)` or `(2,13)(4 5)`.
    ///
    /// Groups are composed right-to-left (the rightmost group acts first),
    /// so non-disjoint input is legal and is multiplied out. Within a
    /// group, labels are separated by commas or whitespace; a group with no
    /// separators is read one digit per label, which is why multi-digit
    /// labels require commas or spaces. The empty group `()` is the
    /// identity.
    pub fn parse_cycles(text: &str) -> Result<Self, PermError> {
        let mut groups: Vec<Vec<Label>> = Vec::new();
        let mut chars = text.chars().peekable();
        loop {
            match chars.next() {
                None => break,
                Some(c) if c.is_whitespace() => continue,
                Some('(') => {
                    let mut body = String::new();
                    loop {
                        match chars.next() {
                            None => {
                                return Err(PermError::Parse(String::from(
                                    "unbalanced parentheses: missing ')'",
                                )))
                            }
                            Some(')') => break,
                            Some('(') => {
                                return Err(PermError::Parse(String::from(
                                    "unexpected '(' inside a cycle",
                                )))
                            }
                            Some(c) => body.push(c),
                        }
                    }
                    let labels = parse_group(&body)?;
                    match labels.len() {
                        0 => {} // "()" is the identity
                        1 => {
                            return Err(PermError::Parse(String::from(
                                "a cycle needs at least two labels",
                            )))
                        }
                        _ => groups.push(labels),
                    }
                }
                Some(')') => {
                    return Err(PermError::Parse(String::from(
                        "unbalanced parentheses: stray ')'",
                    )))
                }
                Some(c) => {
                    return Err(PermError::Parse(alloc::format!(
                        "unexpected character '{c}' outside a cycle"
                    )))
                }
            }
        }
        // Rightmost group acts first: fold the written word left to right.
        let mut product = Permutation::identity();
        for group in &groups {
            let cycle = Permutation::from_cycles(core::slice::from_ref(group))?;
            product = product.compose(&cycle);
        }
        Ok(product)
    }
}

fn parse_group(body: &str) -> Result<Vec<Label>, PermError> {
    let has_separator = body.chars().any(|c| c == ',' || c.is_whitespace());
    let mut labels = Vec::new();
    if has_separator {
        for token in body.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let l: Label = token
                .parse()
                .map_err(|_| PermError::Parse(alloc::format!("non-numeric token '{token}'")))?;
            if l == 0 {
                return Err(PermError::Parse(String::from("labels start at 1")));
            }
            labels.push(l);
        }
    } else {
        for c in body.chars() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| PermError::Parse(alloc::format!("non-numeric token '{c}'")))?;
            if d == 0 {
                return Err(PermError::Parse(String::from("labels start at 1")));
            }
            labels.push(d as Label);
        }
    }
    Ok(labels)
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Permutation::parse_cycles(s)
    }
}

impl fmt::Display for Permutation {
    /// Canonical cycle notation: smallest label first in each cycle, cycles
    /// sorted by smallest label, comma separators iff any label is >= 10.
    /// The identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.decompose();
        if d.cycles.is_empty() {
            return f.write_str("()");
        }
        let commas = d.cycles.iter().flatten().any(|&l| l >= 10);
        for cycle in &d.cycles {
            f.write_str("(")?;
            for (i, l) in cycle.iter().enumerate() {
                if commas && i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{l}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical disjoint-cycle form of a permutation, with the counts the
/// minimum-swap formula needs: `n` entries, `m` cycles, `r` 2-cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<Label>>,
    n: usize,
    m: usize,
    r: usize,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<Label>] {
        &self.cycles
    }

    /// Total number of entries moved.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of nontrivial cycles.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of 2-cycles among them.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// The 2-cycles, as transpositions, in canonical order.
    pub fn two_cycles(&self) -> impl Iterator<Item = Transposition> + '_ {
        self.cycles
            .iter()
            .filter(|c| c.len() == 2)
            .map(|c| Transposition::new(c[0], c[1]))
    }

    /// Cycles of length at least 3, in canonical order.
    pub fn long_cycles(&self) -> impl Iterator<Item = &[Label]> {
        self.cycles
            .iter()
            .filter(|c| c.len() > 2)
            .map(|c| c.as_slice())
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(&self.cycles).expect("stored cycles are disjoint and well formed")
    }
}

/// Which end of a written swap list acts first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderConvention {
    /// List order is time order: the first element is the first swap made.
    Chronological,
    /// Product notation: the rightmost factor acts first, as in a written
    /// product of permutations.
    ProductNotation,
}

/// An ordered list of transpositions together with the convention that
/// says how to read it. Reversing the list converts between conventions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SwapSequence {
    swaps: Vec<Transposition>,
    order: OrderConvention,
}

impl SwapSequence {
    pub fn new(swaps: Vec<Transposition>, order: OrderConvention) -> Self {
        SwapSequence { swaps, order }
    }

    pub fn chronological(swaps: Vec<Transposition>) -> Self {
        SwapSequence::new(swaps, OrderConvention::Chronological)
    }

    pub fn product_notation(swaps: Vec<Transposition>) -> Self {
        SwapSequence::new(swaps, OrderConvention::ProductNotation)
    }

    pub fn swaps(&self) -> &[Transposition] {
        &self.swaps
    }

    pub fn order(&self) -> OrderConvention {
        self.order
    }

    pub fn len(&self) -> usize {
        self.swaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.swaps.is_empty()
    }

    /// The same swaps read under `order`, reversing the list if needed.
    pub fn to_order(&self, order: OrderConvention) -> SwapSequence {
        if self.order == order {
            self.clone()
        } else {
            let mut swaps = self.swaps.clone();
            swaps.reverse();
            SwapSequence::new(swaps, order)
        }
    }

    /// Iterates the swaps as they would be listed under `order`.
    pub fn iter_in(&self, order: OrderConvention) -> impl DoubleEndedIterator<Item = Transposition> + '_ {
        let forward = self.order == order;
        let len = self.swaps.len();
        (0..len).map(move |i| self.swaps[if forward { i } else { len - 1 - i }])
    }

    /// The permutation this sequence multiplies out to.
    ///
    /// For a chronological log this is the net displacement left behind:
    /// the product, in product notation, of the reversed log.
    pub fn product(&self) -> Permutation {
        self.iter_in(OrderConvention::ProductNotation)
            .fold(Permutation::identity(), |acc, t| {
                acc.compose(&t.to_permutation())
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        Permutation::parse_cycles(s).unwrap()
    }

    fn t(a: Label, b: Label) -> Transposition {
        Transposition::new(a, b)
    }

    #[test]
    fn from_cycles_builds_the_cyclic_map() {
        let p = Permutation::from_cycles(&[vec![1, 2], vec![3, 4, 5, 6, 7, 8, 9]]).unwrap();
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(2), 1);
        assert_eq!(p.apply(3), 4);
        assert_eq!(p.apply(8), 9);
        assert_eq!(p.apply(9), 3);

        assert!(Permutation::from_cycles(&[]).unwrap().is_identity());

        let q = Permutation::from_cycles(&[vec![1, 2, 3]]).unwrap();
        assert_eq!(q.apply(1), 2);
        assert_eq!(q.apply(2), 3);
        assert_eq!(q.apply(3), 1);
    }

    #[test]
    fn from_cycles_rejects_bad_input() {
        assert_eq!(
            Permutation::from_cycles(&[vec![1, 2], vec![2, 3]]),
            Err(PermError::Overlap(2))
        );
        assert!(matches!(
            Permutation::from_cycles(&[vec![1, 2, 1]]),
            Err(PermError::MalformedCycle(_))
        ));
        assert!(matches!(
            Permutation::from_cycles(&[vec![1]]),
            Err(PermError::MalformedCycle(_))
        ));
        assert!(matches!(
            Permutation::from_cycles(&[vec![0, 1]]),
            Err(PermError::MalformedCycle(_))
        ));
    }

    #[test]
    fn from_mapping_normalizes_and_validates() {
        let p = Permutation::from_mapping([(1, 2), (2, 1), (5, 5)]).unwrap();
        assert_eq!(p, perm("(12)"));
        assert_eq!(p.support_size(), 2);
        assert_eq!(
            Permutation::from_mapping([(1, 2), (3, 2)]),
            Err(PermError::NotBijective)
        );
        assert_eq!(
            Permutation::from_mapping([(1, 2), (2, 3)]),
            Err(PermError::NotBijective)
        );
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let swap = perm("(12)");
        assert!(swap.compose(&swap).is_identity());

        // A long cycle from its chain of adjacent transpositions.
        let chain = SwapSequence::product_notation(vec![t(1, 2), t(2, 3), t(3, 4), t(4, 5), t(5, 6)]);
        assert_eq!(chain.product(), perm("(123456)"));

        let disjoint = perm("(12)").compose(&perm("(34)"));
        assert_eq!(disjoint, perm("(12)(34)"));
        assert_eq!(disjoint, perm("(34)").compose(&perm("(12)")));
    }

    #[test]
    fn inverse_undoes() {
        assert!(Permutation::identity().inverse().is_identity());
        assert_eq!(perm("(123)").inverse(), perm("(132)"));
        let inv = perm("(12)(34)").inverse();
        assert_eq!(inv, perm("(12)(34)"));
        let p = perm("(12)(3456789)");
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn apply_is_identity_off_support() {
        assert_eq!(perm("(12)").apply(1), 2);
        assert_eq!(perm("(12)").apply(7), 7);
        assert_eq!(perm("(3456789)").apply(9), 3);
    }

    #[test]
    fn decompose_is_canonical() {
        let d = perm("(12)(3456789)").decompose();
        assert_eq!(d.cycles(), &[vec![1, 2], vec![3, 4, 5, 6, 7, 8, 9]]);
        assert_eq!((d.n(), d.m(), d.r()), (9, 2, 1));

        let id = Permutation::identity().decompose();
        assert!(id.is_empty());
        assert_eq!((id.n(), id.m(), id.r()), (0, 0, 0));

        // The seven-switch spree multiplies out to the same decomposition.
        let spree = SwapSequence::product_notation(vec![
            t(4, 5),
            t(8, 9),
            t(1, 2),
            t(3, 9),
            t(5, 6),
            t(3, 7),
            t(3, 6),
        ]);
        assert_eq!(spree.product().decompose(), d);
    }

    #[test]
    fn decompose_round_trips() {
        let p = perm("(19)(2,11)(3 5 7)");
        assert_eq!(p.decompose().to_permutation(), p);
    }

    #[test]
    fn parity_is_entries_minus_cycles() {
        assert_eq!(perm("(12)").parity(), Parity::Odd);
        assert_eq!(perm("(12)(3456789)").parity(), Parity::Odd);
        assert_eq!(Permutation::identity().parity(), Parity::Even);
        assert_eq!(perm("(123)").parity(), Parity::Even);
    }

    #[test]
    fn parse_accepts_the_notation_variants() {
        let p = perm("(12)(34)");
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(3), 4);

        // Two different factorizations of the same permutation.
        assert_eq!(
            perm("(45)(89)(12)(39)(56)(37)(36)"),
            perm("(23)(19)(18)(17)(16)(15)(14)(13)(29)")
        );

        // Non-disjoint input is composed, not rejected.
        assert_eq!(perm("(23)(13)(23)"), perm("(12)"));

        assert_eq!(perm("(2,13)").apply(2), 13);
        assert_eq!(perm("(2 13)").apply(13), 2);
        assert_eq!(perm("(1, 2)"), perm("(12)"));
        assert!(perm("()").is_identity());
        assert!(perm("").is_identity());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(
            Permutation::parse_cycles("(12"),
            Err(PermError::Parse(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(12))"),
            Err(PermError::Parse(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1a)"),
            Err(PermError::Parse(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(0,2)"),
            Err(PermError::Parse(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(102)"), // compact digits: contains 0
            Err(PermError::Parse(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(5)"),
            Err(PermError::Parse(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("12"),
            Err(PermError::Parse(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1,1)"),
            Err(PermError::MalformedCycle(_))
        ));
    }

    #[test]
    fn display_is_canonical_and_round_trips() {
        use alloc::string::ToString;
        let p = perm("(21)(97,4,5)");
        // smallest label leads each cycle; cycles sorted by smallest label
        assert_eq!(p.to_string(), "(1,2)(4,5,97)");
        assert_eq!(perm("(3456789)(21)").to_string(), "(12)(3456789)");
        assert_eq!(Permutation::identity().to_string(), "()");
        for s in ["(12)(3456789)", "(1,10)", "(4,5,97)(1,2)"] {
            let p = perm(s);
            assert_eq!(Permutation::parse_cycles(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn transposition_is_unordered() {
        assert_eq!(t(3, 1), t(1, 3));
        assert_eq!(t(3, 1).low(), 1);
        assert_eq!(t(3, 1).apply(1), 3);
        assert_eq!(t(3, 1).apply(2), 2);
        use alloc::string::ToString;
        assert_eq!(t(9, 2).to_string(), "(29)");
        assert_eq!(t(10, 2).to_string(), "(2,10)");
    }

    #[test]
    #[should_panic]
    fn transposition_rejects_equal_labels() {
        let _ = t(4, 4);
    }

    #[test]
    fn swap_sequence_conventions_are_mirror_images() {
        let chrono = SwapSequence::chronological(vec![t(3, 6), t(3, 7), t(5, 6)]);
        let prod = chrono.to_order(OrderConvention::ProductNotation);
        assert_eq!(prod.swaps(), &[t(5, 6), t(3, 7), t(3, 6)]);
        assert_eq!(prod.to_order(OrderConvention::Chronological), chrono);
        assert_eq!(chrono.product(), prod.product());
    }

    #[test]
    fn chronological_product_is_the_displacement() {
        // The full seven-switch spree, in the order the switches happened.
        let log = SwapSequence::chronological(vec![
            t(3, 6),
            t(3, 7),
            t(5, 6),
            t(3, 9),
            t(1, 2),
            t(8, 9),
            t(4, 5),
        ]);
        assert_eq!(log.product(), perm("(12)(3456789)"));
    }
}
