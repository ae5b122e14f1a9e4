//! Overlap cycles for combinatorial families.
//!
//! An `s`-overlap cycle (ocycle) arranges a set of equal-length words in a
//! cyclic order so that each word's final `s` symbols equal the next word's
//! first `s` symbols. Such an ordering is exactly an Euler tour of the
//! transition digraph that has one edge per word, running from the word's
//! `s`-prefix to its `s`-suffix, so existence reduces to balance plus weak
//! connectivity.
//!
//! The crate builds and verifies ocycles for four families: permutations of
//! a multiset, k-permutations of a ground set, surjective strings, and
//! juggling sequences (siteswap patterns) bounded in ball count. For the
//! families governed by the arithmetic criterion `n - s > gcd(n, s)`, the
//! [`harness`] module sweeps exhaustive desk-scale parameter grids comparing
//! the criterion against the Euler oracle and producing explicit witnesses
//! on the infeasible side.
//!
//! The best starting points are the runnable programs under `examples/`:
//!
//! - `generate_ocycle`: build and verify an ocycle over permutations
//! - `siteswap_basics`: juggling sequence validity, ball counts, and
//!   permutation sequences
//! - `juggling_cycles`: ocycles over bounded-ball juggling sequences
//! - `function_families`: ocycles over k-permutations and surjective strings
//! - `theorem_sweeps`: predicate-versus-oracle sweeps with witnesses
//! - `weight_witness`: why cycles fail at the boundary `n - s = gcd(n, s)`
//! - `juggling_diagram`: ASCII and SVG throw diagrams
//!
//! Run one with `cargo run -p ocycle --example generate_ocycle`. The same
//! capabilities are scriptable through the thin `ocycle` binary (see
//! `README.md`).

pub mod cli;
pub mod cycle;
pub mod cycle_file;
pub mod diagram;
pub mod digraph;
pub mod enumerate;
pub mod error;
pub mod harness;
pub mod juggling;
pub mod word;

pub use cycle::{
    assemble_ocycle, existence_predicate, verify_ocycle, Finding, OverlapCycle,
    VerificationReport,
};
pub use digraph::{build_digraph, Edge, EulerTour, TransitionDigraph};

pub use enumerate::{
    enumerate_juggling_sequences, k_permutations, multiset_permutations, surjective_strings,
};
pub use cycle_file::{CycleFile, CycleHeader};
pub use diagram::{ascii_diagram, diagram_arcs, pattern_name, svg_diagram, Arc};
pub use error::{Infeasibility, ParameterError};
pub use harness::{
    check_juggling_theorem, check_k_perm_construction, check_perm_theorem, check_strings_theorem,
    lemma_property_suite, rotation_class_count, weight_class_witness, FamilyParams, SweepCaps,
    SweepResult, Witness,
};
pub use juggling::{
    permutation_sequence, raise_digit, reduce_digit, validate_juggling, JugglingSequence,
    PermutationSequence,
};
pub use word::{block_rotation_exponent, gcd, BlockDecomposition, MultisetSpec, Word};
