//! Minimum-swap restoration planning for the pair-once mind-swap machine.
//!
//! The setting is the two-body mind-switching machine from *Futurama*'s
//! "The Prisoner of Benda" and *Stargate SG-1*'s "Holiday": any two bodies
//! can swap minds, but the machine refuses to operate twice on the same
//! pair of bodies. After a swap spree leaves minds scattered as some
//! permutation `P`, undoing the mess means writing `P` as a product of
//! *distinct* transpositions, none equal to a 2-cycle factor of `P`.
//!
//! With `n` entries in `m` nontrivial disjoint cycles, `r` of which are
//! 2-cycles, the exact minimum is `5` when `n = 2` (two fresh helpers are
//! required) and `n - m + r + eps_r` otherwise, where `eps_r` is `r mod 2`.
//!
//! The crate is split into four modules:
//!
//! - [`perm`]: sparse permutations on positive integer labels, cycle
//!   decomposition, parity, and cycle-notation parsing/printing.
//! - [`solver`]: the closed-form minimum and the explicit block templates
//!   that attain it, plus chronological restoration plans.
//! - [`oracle`]: an independent iterative-deepening search that certifies
//!   the formula on small instances and powers history-aware planning.
//! - [`machine`]: a persistent simulator of the machine itself, enforcing
//!   the pair-used-once constraint and validating plans end to end.
//!
//! The core is `no_std` (with `alloc`); IO, file formats, and the CLI live
//! in the companion `mindswap-cli` crate.
//!
//! ```
//! use mindswap_core::machine::{replay, validate_plan};
//! use mindswap_core::solver::{make_restoration_plan, PlanMode};
//! use mindswap_core::{SwapSequence, Transposition};
//!
//! let t = |a, b| Transposition::new(a, b);
//! let spree = SwapSequence::chronological(vec![
//!     t(3, 6), t(3, 7), t(5, 6), t(3, 9), t(1, 2), t(8, 9), t(4, 5),
//! ]);
//!
//! let plan = make_restoration_plan(&spree, &[], PlanMode::Theorem, None).unwrap();
//! assert_eq!(plan.len(), 9); // seven switches take nine to undo
//!
//! let state = replay(&spree, []).unwrap();
//! assert!(validate_plan(&state, &plan).is_valid());
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod machine;
pub mod oracle;
pub mod perm;
pub mod solver;

pub use perm::{
    CycleDecomposition, Label, OrderConvention, Parity, PermError, Permutation, SwapSequence,
    Transposition,
};
