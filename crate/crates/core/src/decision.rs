//! Functionality and equivalence of splitters.
//!
//! A splitter is functional when any two successful runs reading the same
//! input write the same pair of outputs. The square automaton runs two copies
//! of the splitter in lockstep on the input tape; propagating the
//! bidimensional lead-or-delay action from its initial pairs either gives
//! every state a single value (a valuation) or exposes a state reached with
//! two different values. The splitter is functional exactly when the
//! propagation is a valuation and every final pair carries the balanced
//! value.
//!
//! Equivalence of two functional splitters reduces to comparing their input
//! languages and then checking that their union is still functional.

use std::collections::VecDeque;
use std::fmt;

use crate::dfa::{dfa_equivalent, nfa_to_dfa, Dfa};
use crate::error::Error;
use crate::lead_delay::PairValue;
use crate::machine::{Spliffer, StateId};
use crate::monoid::{Letter, Tape, Word};
use crate::rational::union;

/// Transition of the square automaton: both copies read `letter`, the first
/// writing to `first`, the second to `second`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareTransition {
    pub src: usize,
    pub letter: Letter,
    pub first: Tape,
    pub second: Tape,
    pub dst: usize,
}

impl SquareTransition {
    fn outputs(&self, tape: Tape) -> (Word, Word) {
        let one = Word::from(vec![self.letter.clone()]);
        match tape {
            Tape::Left => (one, Word::empty()),
            Tape::Right => (Word::empty(), one),
        }
    }

    pub fn first_output(&self) -> (Word, Word) {
        self.outputs(self.first)
    }

    pub fn second_output(&self) -> (Word, Word) {
        self.outputs(self.second)
    }
}

/// Trim part of the product of a splitter with itself, synchronised on the
/// input letter.
#[derive(Debug, Clone)]
pub struct SquareAutomaton {
    states: Vec<(StateId, StateId)>,
    transitions: Vec<SquareTransition>,
    outgoing: Vec<Vec<usize>>,
    initial: Vec<usize>,
    finals: Vec<bool>,
    explored: usize,
}

impl SquareAutomaton {
    /// State pairs, indexed by square state.
    pub fn states(&self) -> &[(StateId, StateId)] {
        &self.states
    }

    pub fn transitions(&self) -> &[SquareTransition] {
        &self.transitions
    }

    pub fn outgoing(&self, state: usize) -> impl Iterator<Item = &SquareTransition> + '_ {
        self.outgoing[state].iter().map(move |&i| &self.transitions[i])
    }

    pub fn initial(&self) -> &[usize] {
        &self.initial
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn index_of(&self, pair: (StateId, StateId)) -> Option<usize> {
        self.states.iter().position(|&p| p == pair)
    }

    /// Accessible pairs built before trimming.
    pub fn explored_pairs(&self) -> usize {
        self.explored
    }
}

/// Builds the square automaton of `m` and trims it.
pub fn square(m: &Spliffer) -> SquareAutomaton {
    let n = m.state_count();
    let mut index: Vec<Option<usize>> = vec![None; n * n];
    let mut states: Vec<(StateId, StateId)> = Vec::new();
    let mut queue = VecDeque::new();
    let mut initial = Vec::new();
    for &p in m.initial() {
        for &q in m.initial() {
            let id = states.len();
            index[p.0 * n + q.0] = Some(id);
            states.push((p, q));
            initial.push(id);
            queue.push_back(id);
        }
    }
    let mut transitions = Vec::new();
    while let Some(id) = queue.pop_front() {
        let (p, q) = states[id];
        for t1 in m.outgoing(p) {
            for t2 in m.outgoing(q).filter(|t2| t2.letter == t1.letter) {
                let slot = &mut index[t1.dst.0 * n + t2.dst.0];
                let dst = match *slot {
                    Some(dst) => dst,
                    None => {
                        let dst = states.len();
                        *slot = Some(dst);
                        states.push((t1.dst, t2.dst));
                        queue.push_back(dst);
                        dst
                    }
                };
                transitions.push(SquareTransition {
                    src: id,
                    letter: t1.letter.clone(),
                    first: t1.tape,
                    second: t2.tape,
                    dst,
                });
            }
        }
    }
    let explored = states.len();

    // every built pair is accessible; keep the co-accessible ones
    let is_final: Vec<bool> = states.iter().map(|&(p, q)| m.is_final(p) && m.is_final(q)).collect();
    let mut incoming = vec![Vec::new(); explored];
    for t in &transitions {
        incoming[t.dst].push(t.src);
    }
    let mut useful = is_final.clone();
    let mut stack: Vec<usize> = (0..explored).filter(|&s| useful[s]).collect();
    while let Some(s) = stack.pop() {
        for &prev in &incoming[s] {
            if !useful[prev] {
                useful[prev] = true;
                stack.push(prev);
            }
        }
    }
    let mut renumber = vec![None; explored];
    let mut kept = Vec::new();
    for s in 0..explored {
        if useful[s] {
            renumber[s] = Some(kept.len());
            kept.push(s);
        }
    }
    let transitions: Vec<SquareTransition> = transitions
        .into_iter()
        .filter_map(|t| {
            Some(SquareTransition { src: renumber[t.src]?, dst: renumber[t.dst]?, ..t })
        })
        .collect();
    let mut outgoing = vec![Vec::new(); kept.len()];
    for (i, t) in transitions.iter().enumerate() {
        outgoing[t.src].push(i);
    }
    SquareAutomaton {
        states: kept.iter().map(|&s| states[s]).collect(),
        transitions,
        outgoing,
        initial: initial.into_iter().filter_map(|s| renumber[s]).collect(),
        finals: kept.iter().map(|&s| is_final[s]).collect(),
        explored,
    }
}

/// Outcome of propagating the bidimensional lead-or-delay action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValuationResult {
    /// Every state received exactly one value. `paths[s]` is a shortest run
    /// (square transition indices) from an initial state to `s`.
    Valuation { values: Vec<PairValue>, paths: Vec<Vec<usize>>, explored: usize },
    /// `state` was reached with two different values along the two paths.
    /// `values` holds the assignment built up to that point.
    Conflict {
        state: usize,
        values: Vec<Option<PairValue>>,
        existing: PairValue,
        incoming: PairValue,
        existing_path: Vec<usize>,
        incoming_path: Vec<usize>,
        explored: usize,
    },
}

impl ValuationResult {
    /// Number of (state, value) configurations created before stopping.
    pub fn explored(&self) -> usize {
        match self {
            ValuationResult::Valuation { explored, .. } | ValuationResult::Conflict { explored, .. } => {
                *explored
            }
        }
    }
}

/// Breadth-first propagation of values from the initial pairs, which carry
/// the balanced value. Stops at the first state receiving a second, distinct
/// value.
pub fn valuation(sq: &SquareAutomaton) -> ValuationResult {
    let n = sq.states.len();
    let mut values: Vec<Option<PairValue>> = vec![None; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut queue = VecDeque::new();
    let mut explored = 0;
    for &s in &sq.initial {
        values[s] = Some(PairValue::balanced());
        explored += 1;
        queue.push_back(s);
    }
    let path_to = |parent: &[Option<usize>], mut s: usize| {
        let mut path = Vec::new();
        while let Some(t) = parent[s] {
            path.push(t);
            s = sq.transitions[t].src;
        }
        path.reverse();
        path
    };
    while let Some(s) = queue.pop_front() {
        let current = values[s].clone().expect("queued states carry a value");
        for &ti in &sq.outgoing[s] {
            let t = &sq.transitions[ti];
            let (f1, g1) = t.first_output();
            let (f2, g2) = t.second_output();
            let next = current.act((&f1, &g1), (&f2, &g2));
            match &values[t.dst] {
                None => {
                    values[t.dst] = Some(next);
                    parent[t.dst] = Some(ti);
                    explored += 1;
                    queue.push_back(t.dst);
                }
                Some(existing) if *existing != next => {
                    let mut incoming_path = path_to(&parent, s);
                    incoming_path.push(ti);
                    return ValuationResult::Conflict {
                        state: t.dst,
                        values: values.clone(),
                        existing: existing.clone(),
                        incoming: next,
                        existing_path: path_to(&parent, t.dst),
                        incoming_path,
                        explored: explored + 1,
                    };
                }
                Some(_) => {}
            }
        }
    }
    let paths = (0..n).map(|s| path_to(&parent, s)).collect();
    ValuationResult::Valuation {
        values: values.into_iter().map(|v| v.expect("trim square: every state is accessible")).collect(),
        paths,
        explored,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctionalityVerdict {
    Functional,
    /// Two successful runs read `input` and write different outputs.
    NotFunctional { input: Word, first: (Word, Word), second: (Word, Word) },
}

impl FunctionalityVerdict {
    pub fn is_functional(&self) -> bool {
        matches!(self, FunctionalityVerdict::Functional)
    }
}

impl fmt::Display for FunctionalityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionalityVerdict::Functional => writeln!(f, "FUNCTIONAL"),
            FunctionalityVerdict::NotFunctional { input, first, second } => {
                writeln!(f, "NOT FUNCTIONAL")?;
                writeln!(f, "input: {input}")?;
                writeln!(f, "output: {} | {}", first.0, first.1)?;
                writeln!(f, "output: {} | {}", second.0, second.1)
            }
        }
    }
}

/// Work counters of one functionality check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FunctionalityStats {
    pub base_states: usize,
    /// Accessible square pairs built before trimming.
    pub square_pairs_explored: usize,
    /// States of the trimmed square automaton.
    pub square_states: usize,
    /// (state, value) configurations created by the valuation.
    pub valuation_configurations: usize,
}

pub fn is_functional(m: &Spliffer) -> FunctionalityVerdict {
    is_functional_with_stats(m).0
}

pub fn is_functional_with_stats(m: &Spliffer) -> (FunctionalityVerdict, FunctionalityStats) {
    let sq = square(m);
    let result = valuation(&sq);
    let stats = FunctionalityStats {
        base_states: m.state_count(),
        square_pairs_explored: sq.explored,
        square_states: sq.states.len(),
        valuation_configurations: result.explored(),
    };
    let verdict = match result {
        ValuationResult::Conflict { state, existing_path, incoming_path, .. } => {
            let hops = hops_to_final(&sq);
            let a = complete(&sq, &hops, state, existing_path);
            let b = complete(&sq, &hops, state, incoming_path);
            // one of the two completed runs must have unbalanced outputs
            witness(&sq, &a)
                .or_else(|| witness(&sq, &b))
                .expect("a conflict in a trim square yields two distinct outputs")
        }
        ValuationResult::Valuation { values, paths, .. } => (0..sq.states.len())
            .find(|&s| sq.finals[s] && !values[s].is_balanced())
            .map(|s| witness(&sq, &paths[s]).expect("unbalanced final value means distinct outputs"))
            .unwrap_or(FunctionalityVerdict::Functional),
    };
    (verdict, stats)
}

/// For each square state, the first transition of a shortest run to a final
/// state (`None` on final states).
fn hops_to_final(sq: &SquareAutomaton) -> Vec<Option<usize>> {
    let n = sq.states.len();
    let mut next_hop: Vec<Option<usize>> = vec![None; n];
    let mut done: Vec<bool> = sq.finals.clone();
    let mut queue: VecDeque<usize> = (0..n).filter(|&s| done[s]).collect();
    let mut incoming = vec![Vec::new(); n];
    for (i, t) in sq.transitions.iter().enumerate() {
        incoming[t.dst].push(i);
    }
    while let Some(s) = queue.pop_front() {
        for &ti in &incoming[s] {
            let src = sq.transitions[ti].src;
            if !done[src] {
                done[src] = true;
                next_hop[src] = Some(ti);
                queue.push_back(src);
            }
        }
    }
    next_hop
}

/// Extends a run ending in `state` to a successful run.
fn complete(sq: &SquareAutomaton, hops: &[Option<usize>], mut state: usize, mut path: Vec<usize>) -> Vec<usize> {
    while !sq.finals[state] {
        let ti = hops[state].expect("trim square: every state is co-accessible");
        path.push(ti);
        state = sq.transitions[ti].dst;
    }
    path
}

/// Reads the input and both outputs off a successful square run; `None` when
/// the two outputs coincide.
fn witness(sq: &SquareAutomaton, path: &[usize]) -> Option<FunctionalityVerdict> {
    let mut input = Word::empty();
    let (mut f1, mut g1, mut f2, mut g2) = (Word::empty(), Word::empty(), Word::empty(), Word::empty());
    for &ti in path {
        let t = &sq.transitions[ti];
        input.push(t.letter.clone());
        match t.first {
            Tape::Left => f1.push(t.letter.clone()),
            Tape::Right => g1.push(t.letter.clone()),
        }
        match t.second {
            Tape::Left => f2.push(t.letter.clone()),
            Tape::Right => g2.push(t.letter.clone()),
        }
    }
    let (a, b) = ((f1, g1), (f2, g2));
    if a == b {
        return None;
    }
    let (first, second) = if a < b { (a, b) } else { (b, a) };
    Some(FunctionalityVerdict::NotFunctional { input, first, second })
}

/// Which operand of an equivalence query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Machine {
    First,
    Second,
}

impl fmt::Display for Machine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Machine::First => "first",
            Machine::Second => "second",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivalenceVerdict {
    Equivalent,
    /// `word` is in the domain of `accepted_by` only.
    DifferentDomain { word: Word, accepted_by: Machine },
    /// Both machines read `input`; the first writes `first`, the second `second`.
    DifferentOutputs { input: Word, first: (Word, Word), second: (Word, Word) },
    InputNotFunctional(Machine),
}

impl EquivalenceVerdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, EquivalenceVerdict::Equivalent)
    }
}

impl fmt::Display for EquivalenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivalenceVerdict::Equivalent => writeln!(f, "EQUIVALENT"),
            EquivalenceVerdict::DifferentDomain { word, accepted_by } => {
                writeln!(f, "DIFFERENT DOMAIN")?;
                writeln!(f, "witness: {word}")?;
                writeln!(f, "accepted by: {accepted_by}")
            }
            EquivalenceVerdict::DifferentOutputs { input, first, second } => {
                writeln!(f, "DIFFERENT OUTPUTS")?;
                writeln!(f, "input: {input}")?;
                writeln!(f, "first: {} | {}", first.0, first.1)?;
                writeln!(f, "second: {} | {}", second.0, second.1)
            }
            EquivalenceVerdict::InputNotFunctional(which) => {
                writeln!(f, "INPUT NOT FUNCTIONAL")?;
                writeln!(f, "machine: {which}")
            }
        }
    }
}

/// Equivalence of two functional splitters.
///
/// Checks functionality of both operands, then that their input languages
/// agree (by subset construction), then that their union is functional.
pub fn equivalent_functional(m1: &Spliffer, m2: &Spliffer) -> EquivalenceVerdict {
    if !is_functional(m1).is_functional() {
        return EquivalenceVerdict::InputNotFunctional(Machine::First);
    }
    if !is_functional(m2).is_functional() {
        return EquivalenceVerdict::InputNotFunctional(Machine::Second);
    }
    let d1 = nfa_to_dfa(&m1.input_projection());
    let d2 = nfa_to_dfa(&m2.input_projection());
    compare_with_domains(m1, m2, &d1, &d2)
}

/// Equivalence of two deterministic splitters.
///
/// Deterministic splitters are functional, and their input automata are
/// already deterministic, so no functionality pre-check or subset
/// construction is needed.
pub fn equivalent_deterministic(m1: &Spliffer, m2: &Spliffer) -> Result<EquivalenceVerdict, Error> {
    for (which, m) in [("first", m1), ("second", m2)] {
        m.is_deterministic()
            .map_err(|violation| Error::NotDeterministic { which, violation })?;
    }
    let d1 = Dfa::from_deterministic(&m1.input_projection()).expect("deterministic splitter");
    let d2 = Dfa::from_deterministic(&m2.input_projection()).expect("deterministic splitter");
    Ok(compare_with_domains(m1, m2, &d1, &d2))
}

fn compare_with_domains(m1: &Spliffer, m2: &Spliffer, d1: &Dfa, d2: &Dfa) -> EquivalenceVerdict {
    if let Err(word) = dfa_equivalent(d1, d2) {
        let accepted_by = if d1.accepts(&word) { Machine::First } else { Machine::Second };
        return EquivalenceVerdict::DifferentDomain { word, accepted_by };
    }
    match is_functional(&union(m1, m2)) {
        FunctionalityVerdict::Functional => EquivalenceVerdict::Equivalent,
        FunctionalityVerdict::NotFunctional { input, .. } => {
            // both operands are functional on a shared domain: one output each
            let first = m1.split(&input).into_iter().next().expect("input in the first domain");
            let second = m2.split(&input).into_iter().next().expect("input in the second domain");
            EquivalenceVerdict::DifferentOutputs { input, first, second }
        }
    }
}
