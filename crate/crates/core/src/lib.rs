//! Automata over the shuffling monoid.
//!
//! The shuffling monoid is the submonoid of `A* × A* × A*` generated by the
//! triples `(a, ε, a)` and `(ε, a, a)`: its elements are the triples
//! `(l, r, s)` where `s` interleaves `l` and `r`. A [`Spliffer`] is a finite
//! automaton whose transitions carry one of those generators. Read with the
//! first two tapes as input it shuffles two words into one; read with the
//! third tape as input it splits one word into two.
//!
//! The crate provides:
//!
//! * the monoid itself ([`monoid`]): words, generators, triples, interleaving
//!   membership and decomposition counting;
//! * the machine model ([`machine`]): validation, acceptance, splitting,
//!   bounded behavior enumeration, determinism and the input/output
//!   projections;
//! * rational constructions ([`rational`]): union, product, star and trim;
//! * the lead-or-delay action ([`lead_delay`]) used to compare two output
//!   streams letter by letter;
//! * decision procedures ([`decision`]): functionality through the valuation
//!   of the square automaton, and equivalence of functional splitters;
//! * a line-oriented text format ([`format`]).

pub mod decision;
pub mod dfa;
pub mod error;
pub mod format;
pub mod lead_delay;
pub mod machine;
pub mod monoid;
pub mod random;
pub mod rational;

pub use decision::{
    equivalent_deterministic, equivalent_functional, is_functional, is_functional_with_stats,
    square, valuation, EquivalenceVerdict, FunctionalityStats, FunctionalityVerdict, Machine,
    SquareAutomaton, ValuationResult,
};
pub use dfa::{dfa_equivalent, nfa_to_dfa, Dfa, Nfa};
pub use error::Error;
pub use lead_delay::{LeadOrDelay, PairValue};
pub use machine::{DeterminismViolation, OutputTransducer, Spliffer, StateId, Transition, Violation};
pub use monoid::{count_decompositions, is_interleaving, Generator, Letter, Tape, UTriple, Word};
