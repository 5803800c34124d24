//! The spliffer automaton and its bounded semantics.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::dfa::Nfa;
use crate::error::Error;
use crate::monoid::{Generator, Letter, Tape, UTriple, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub usize);

impl StateId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for StateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A transition `src --label--> dst`.
///
/// Field order fixes the canonical ordering: source, letter, tape, target.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub src: StateId,
    pub letter: Letter,
    pub tape: Tape,
    pub dst: StateId,
}

impl Transition {
    pub fn new(src: usize, label: Generator, dst: usize) -> Self {
        Transition { src: StateId(src), letter: label.letter, tape: label.tape, dst: StateId(dst) }
    }

    pub fn label(&self) -> Generator {
        Generator { tape: self.tape, letter: self.letter.clone() }
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.src, self.letter, self.tape.symbol(), self.dst)
    }
}

/// A broken machine invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoStates,
    NoInitialState,
    InitialOutOfRange(StateId),
    FinalOutOfRange(StateId),
    OutOfRange { transition: Transition },
    UnknownLetter { transition: Transition },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoStates => write!(f, "machine has no states"),
            Violation::NoInitialState => write!(f, "machine has no initial state"),
            Violation::InitialOutOfRange(q) => write!(f, "initial state {q} out of range"),
            Violation::FinalOutOfRange(q) => write!(f, "final state {q} out of range"),
            Violation::OutOfRange { transition } => {
                write!(f, "transition `{transition}` has an endpoint out of range")
            }
            Violation::UnknownLetter { transition } => write!(
                f,
                "transition `{transition}` uses letter {} outside the alphabet",
                transition.letter
            ),
        }
    }
}

/// The first reason a machine fails to be a deterministic splitter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeterminismViolation {
    /// Exactly one initial state is required.
    InitialStates(usize),
    /// The state writes to both output tapes.
    MixedTapes { state: StateId, left: Letter, right: Letter },
    /// The state has two transitions reading the same input letter.
    SharedLetter { state: StateId, letter: Letter },
}

impl fmt::Display for DeterminismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeterminismViolation::InitialStates(n) => {
                write!(f, "{n} initial states (exactly one required)")
            }
            DeterminismViolation::MixedTapes { state, left, right } => write!(
                f,
                "state {state} writes both tapes (L {left} and R {right})"
            ),
            DeterminismViolation::SharedLetter { state, letter } => {
                write!(f, "state {state} has several transitions reading {letter}")
            }
        }
    }
}

/// A finite automaton whose transitions are labelled by generators of the
/// shuffling monoid.
///
/// Transitions, initial and final states have set semantics and are kept in
/// canonical order. Only [`Spliffer::new`] checks the invariants; the other
/// operations assume a machine that passes [`Spliffer::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spliffer {
    alphabet: BTreeSet<Letter>,
    state_count: usize,
    transitions: Vec<Transition>,
    initial: BTreeSet<StateId>,
    finals: BTreeSet<StateId>,
    outgoing: Vec<Vec<usize>>,
}

impl Spliffer {
    pub fn new(
        alphabet: impl IntoIterator<Item = Letter>,
        state_count: usize,
        transitions: impl IntoIterator<Item = Transition>,
        initial: impl IntoIterator<Item = usize>,
        finals: impl IntoIterator<Item = usize>,
    ) -> Result<Self, Error> {
        let m = Self::from_parts_unchecked(alphabet, state_count, transitions, initial, finals);
        let violations = m.validate();
        if violations.is_empty() {
            Ok(m)
        } else {
            Err(Error::InvalidMachine(violations))
        }
    }

    /// Builds a machine without checking its invariants.
    pub fn from_parts_unchecked(
        alphabet: impl IntoIterator<Item = Letter>,
        state_count: usize,
        transitions: impl IntoIterator<Item = Transition>,
        initial: impl IntoIterator<Item = usize>,
        finals: impl IntoIterator<Item = usize>,
    ) -> Self {
        let transitions: Vec<Transition> =
            transitions.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let mut outgoing = vec![Vec::new(); state_count];
        for (i, t) in transitions.iter().enumerate() {
            if let Some(list) = outgoing.get_mut(t.src.0) {
                list.push(i);
            }
        }
        Spliffer {
            alphabet: alphabet.into_iter().collect(),
            state_count,
            transitions,
            initial: initial.into_iter().map(StateId).collect(),
            finals: finals.into_iter().map(StateId).collect(),
            outgoing,
        }
    }

    pub fn alphabet(&self) -> &BTreeSet<Letter> {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    /// All transitions in canonical order.
    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn initial(&self) -> &BTreeSet<StateId> {
        &self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn is_initial(&self, q: StateId) -> bool {
        self.initial.contains(&q)
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.contains(&q)
    }

    /// Transitions leaving `q`, in canonical order.
    pub fn outgoing(&self, q: StateId) -> impl Iterator<Item = &Transition> + '_ {
        self.outgoing
            .get(q.0)
            .into_iter()
            .flatten()
            .map(move |&i| &self.transitions[i])
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        if self.state_count == 0 {
            violations.push(Violation::NoStates);
        }
        if self.initial.is_empty() {
            violations.push(Violation::NoInitialState);
        }
        let in_range = |q: &StateId| q.0 < self.state_count;
        violations.extend(
            self.initial.iter().filter(|q| !in_range(q)).map(|&q| Violation::InitialOutOfRange(q)),
        );
        violations.extend(
            self.finals.iter().filter(|q| !in_range(q)).map(|&q| Violation::FinalOutOfRange(q)),
        );
        for t in &self.transitions {
            if !in_range(&t.src) || !in_range(&t.dst) {
                violations.push(Violation::OutOfRange { transition: t.clone() });
            }
            if !self.alphabet.contains(&t.letter) {
                violations.push(Violation::UnknownLetter { transition: t.clone() });
            }
        }
        violations
    }

    /// True iff some successful run has label `t`.
    pub fn accepts(&self, t: &UTriple) -> bool {
        let (l, r, s) = (t.left().letters(), t.right().letters(), t.shuffled().letters());
        // configuration: (state, consumed left, consumed right); the next
        // generator must emit s[i + j]
        let mut seen: HashSet<(StateId, usize, usize)> = HashSet::new();
        let mut stack: Vec<(StateId, usize, usize)> = self.initial.iter().map(|&q| (q, 0, 0)).collect();
        while let Some(config) = stack.pop() {
            if !seen.insert(config) {
                continue;
            }
            let (q, i, j) = config;
            let k = i + j;
            if k == s.len() {
                if self.is_final(q) {
                    return true;
                }
                continue;
            }
            for tr in self.outgoing(q) {
                if tr.letter != s[k] {
                    continue;
                }
                match tr.tape {
                    Tape::Left if i < l.len() && l[i] == tr.letter => stack.push((tr.dst, i + 1, j)),
                    Tape::Right if j < r.len() && r[j] == tr.letter => stack.push((tr.dst, i, j + 1)),
                    _ => {}
                }
            }
        }
        false
    }

    /// Number of successful runs labelled `t`.
    pub fn count_runs(&self, t: &UTriple) -> u128 {
        let (l, r, s) = (t.left().letters(), t.right().letters(), t.shuffled().letters());
        let mut layer: HashMap<(StateId, usize), u128> = HashMap::new();
        for &q in &self.initial {
            layer.insert((q, 0), 1);
        }
        for (k, letter) in s.iter().enumerate() {
            let mut next: HashMap<(StateId, usize), u128> = HashMap::new();
            for (&(q, i), &runs) in &layer {
                let j = k - i;
                for tr in self.outgoing(q).filter(|tr| &tr.letter == letter) {
                    let i2 = match tr.tape {
                        Tape::Left if i < l.len() && &l[i] == letter => i + 1,
                        Tape::Right if j < r.len() && &r[j] == letter => i,
                        _ => continue,
                    };
                    let slot = next.entry((tr.dst, i2)).or_default();
                    *slot = slot.saturating_add(runs);
                }
            }
            layer = next;
        }
        layer
            .into_iter()
            .filter(|&((q, i), _)| i == l.len() && self.is_final(q))
            .fold(0u128, |acc, (_, runs)| acc.saturating_add(runs))
    }

    /// All `(left, right)` with `(left, right, input)` in the behavior, sorted.
    pub fn split(&self, input: &Word) -> Vec<(Word, Word)> {
        let mut layer: HashSet<(StateId, Word, Word)> =
            self.initial.iter().map(|&q| (q, Word::empty(), Word::empty())).collect();
        for letter in input.letters() {
            let mut next = HashSet::new();
            for (q, l, r) in &layer {
                for tr in self.outgoing(*q).filter(|tr| &tr.letter == letter) {
                    let (mut l2, mut r2) = (l.clone(), r.clone());
                    match tr.tape {
                        Tape::Left => l2.push(letter.clone()),
                        Tape::Right => r2.push(letter.clone()),
                    }
                    next.insert((tr.dst, l2, r2));
                }
            }
            layer = next;
        }
        let outputs: BTreeSet<(Word, Word)> = layer
            .into_iter()
            .filter(|(q, _, _)| self.is_final(*q))
            .map(|(_, l, r)| (l, r))
            .collect();
        outputs.into_iter().collect()
    }

    /// Every element of the behavior whose shuffled word has length at most
    /// `max_len`, by breadth-first search over `(state, label so far)`.
    pub fn enumerate_behavior(&self, max_len: usize) -> BTreeSet<UTriple> {
        // labels are tracked as letter indices into the sorted alphabet
        let letters: Vec<&Letter> = self.alphabet.iter().collect();
        let code = |a: &Letter| letters.binary_search(&a).expect("letter in alphabet") as u16;
        let edges: Vec<Vec<(Tape, u16, StateId)>> = (0..self.state_count)
            .map(|q| self.outgoing(StateId(q)).map(|t| (t.tape, code(&t.letter), t.dst)).collect())
            .collect();
        type Coded = (Vec<u16>, Vec<u16>, Vec<u16>);
        let mut found: HashSet<Coded> = HashSet::new();
        let mut layer: HashSet<(StateId, Coded)> =
            self.initial.iter().map(|&q| (q, Default::default())).collect();
        for depth in 0..=max_len {
            found.extend(layer.iter().filter(|(q, _)| self.is_final(*q)).map(|(_, t)| t.clone()));
            if depth == max_len {
                break;
            }
            let mut next = HashSet::with_capacity(layer.len() * 2);
            for (q, (l, r, s)) in &layer {
                for &(tape, a, dst) in &edges[q.0] {
                    let (mut l, mut r, mut s) = (l.clone(), r.clone(), s.clone());
                    match tape {
                        Tape::Left => l.push(a),
                        Tape::Right => r.push(a),
                    }
                    s.push(a);
                    next.insert((dst, (l, r, s)));
                }
            }
            layer = next;
        }
        let decode = |w: Vec<u16>| w.into_iter().map(|i| letters[i as usize].clone()).collect::<Word>();
        found
            .into_iter()
            .map(|(l, r, s)| UTriple::new(decode(l), decode(r), decode(s)).expect("labels are interleavings"))
            .collect()
    }

    /// Bounded functionality oracle: no two enumerated triples share an
    /// input word.
    pub fn is_functional_bruteforce(&self, max_len: usize) -> bool {
        let mut by_input: BTreeMap<Word, (Word, Word)> = BTreeMap::new();
        for t in self.enumerate_behavior(max_len) {
            let (l, r, s) = t.into_parts();
            match by_input.get(&s) {
                Some(prev) if *prev != (l.clone(), r.clone()) => return false,
                Some(_) => {}
                None => {
                    by_input.insert(s, (l, r));
                }
            }
        }
        true
    }

    /// Bounded injectivity oracle: no two enumerated triples share an output
    /// pair.
    pub fn is_injective_bruteforce(&self, max_len: usize) -> bool {
        self.injectivity_counterexample(max_len).is_none()
    }

    /// Two distinct triples with the same output pair, if any exist within
    /// the bound.
    pub fn injectivity_counterexample(&self, max_len: usize) -> Option<(UTriple, UTriple)> {
        let mut by_output: HashMap<(Word, Word), UTriple> = HashMap::new();
        for t in self.enumerate_behavior(max_len) {
            let key = (t.left().clone(), t.right().clone());
            if let Some(prev) = by_output.get(&key) {
                return Some((prev.clone(), t));
            }
            by_output.insert(key, t);
        }
        None
    }

    /// Checks the three conditions of a deterministic splitter: a single
    /// initial state, at most one transition per state and input letter, and
    /// a single output tape per state. Reports the first violation, scanning
    /// states in index order.
    pub fn is_deterministic(&self) -> Result<(), DeterminismViolation> {
        if self.initial.len() != 1 {
            return Err(DeterminismViolation::InitialStates(self.initial.len()));
        }
        for q in (0..self.state_count).map(StateId) {
            let left = self.outgoing(q).find(|t| t.tape == Tape::Left);
            let right = self.outgoing(q).find(|t| t.tape == Tape::Right);
            if let (Some(l), Some(r)) = (left, right) {
                return Err(DeterminismViolation::MixedTapes {
                    state: q,
                    left: l.letter.clone(),
                    right: r.letter.clone(),
                });
            }
            let mut letters = HashSet::new();
            for t in self.outgoing(q) {
                if !letters.insert(&t.letter) {
                    return Err(DeterminismViolation::SharedLetter { state: q, letter: t.letter.clone() });
                }
            }
        }
        Ok(())
    }

    /// The underlying input automaton: every label replaced by its letter.
    pub fn input_projection(&self) -> Nfa {
        Nfa::new(
            self.alphabet.iter().cloned(),
            self.state_count,
            self.transitions.iter().map(|t| (t.src.0, t.letter.clone(), t.dst.0)),
            self.initial.iter().map(|q| q.0),
            self.finals.iter().map(|q| q.0),
        )
    }

    /// The underlying output transducer: every label reduced to its output pair.
    pub fn output_projection(&self) -> OutputTransducer {
        OutputTransducer {
            state_count: self.state_count,
            transitions: self
                .transitions
                .iter()
                .map(|t| (t.src, OutputLabel { tape: t.tape, letter: t.letter.clone() }, t.dst))
                .collect(),
            initial: self.initial.clone(),
            finals: self.finals.clone(),
        }
    }
}

/// Output pair `(a, ε)` or `(ε, a)` of a generator, with the input erased.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OutputLabel {
    pub tape: Tape,
    pub letter: Letter,
}

impl OutputLabel {
    pub fn pair(&self) -> (Word, Word) {
        let one = Word::from(vec![self.letter.clone()]);
        match self.tape {
            Tape::Left => (one, Word::empty()),
            Tape::Right => (Word::empty(), one),
        }
    }
}

/// Two-tape transducer obtained by forgetting the input tape of a splitter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputTransducer {
    pub state_count: usize,
    pub transitions: BTreeSet<(StateId, OutputLabel, StateId)>,
    pub initial: BTreeSet<StateId>,
    pub finals: BTreeSet<StateId>,
}

impl OutputTransducer {
    /// True iff no transition writes to the right tape.
    pub fn writes_only_left(&self) -> bool {
        self.transitions.iter().all(|(_, label, _)| label.tape == Tape::Left)
    }

    /// Output pairs of successful runs with at most `max_len` transitions.
    pub fn relation(&self, max_len: usize) -> BTreeSet<(Word, Word)> {
        let mut result = BTreeSet::new();
        let mut layer: HashSet<(StateId, Word, Word)> =
            self.initial.iter().map(|&q| (q, Word::empty(), Word::empty())).collect();
        for depth in 0..=max_len {
            for (q, l, r) in &layer {
                if self.finals.contains(q) {
                    result.insert((l.clone(), r.clone()));
                }
            }
            if depth == max_len {
                break;
            }
            let mut next = HashSet::new();
            for (q, l, r) in &layer {
                for (_, label, dst) in self.transitions.iter().filter(|(src, _, _)| src == q) {
                    let (dl, dr) = label.pair();
                    next.insert((*dst, l.concat(&dl), r.concat(&dr)));
                }
            }
            layer = next;
        }
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse;
    use crate::monoid::Word;

    const FIG1: &str = include_str!("../../../fixtures/fig1.spl");
    const FIG2A: &str = include_str!("../../../fixtures/fig2a.spl");
    const FIG4: &str = include_str!("../../../fixtures/fig4.spl");

    fn w(text: &str) -> Word {
        Word::parse(text).unwrap()
    }

    fn t(l: &str, r: &str, s: &str) -> UTriple {
        UTriple::new(w(l), w(r), w(s)).unwrap()
    }

    fn letters(ls: &str) -> Vec<Letter> {
        ls.chars().map(Letter::from).collect()
    }

    #[test]
    fn validate_reports_each_violation() {
        let fig1 = parse(FIG1).unwrap();
        assert!(fig1.validate().is_empty());

        let bad = Spliffer::from_parts_unchecked(
            letters("ab"),
            2,
            [Transition::new(0, Generator::left('a'), 2)],
            [0],
            [1],
        );
        assert!(matches!(bad.validate().as_slice(), [Violation::OutOfRange { .. }]));

        let bad = Spliffer::from_parts_unchecked(
            letters("ab"),
            2,
            [Transition::new(0, Generator::left('c'), 1)],
            [0],
            [1],
        );
        assert!(matches!(bad.validate().as_slice(), [Violation::UnknownLetter { .. }]));

        let bad = Spliffer::from_parts_unchecked(letters("a"), 1, [], [], [3]);
        assert_eq!(
            bad.validate(),
            vec![Violation::NoInitialState, Violation::FinalOutOfRange(StateId(3))]
        );
        assert!(Spliffer::new(letters("a"), 1, [], [], []).is_err());
    }

    #[test]
    fn duplicate_transitions_collapse() {
        let m = Spliffer::new(
            letters("a"),
            2,
            [Transition::new(0, Generator::left('a'), 1), Transition::new(0, Generator::left('a'), 1)],
            [0],
            [1],
        )
        .unwrap();
        assert_eq!(m.transitions().len(), 1);
    }

    #[test]
    fn accepts_examples() {
        let fig1 = parse(FIG1).unwrap();
        assert!(fig1.accepts(&t("aa", "b", "aba")));
        assert!(fig1.accepts(&t("a", "ab", "aba")));
        assert!(!fig1.accepts(&t("ab", "a", "aba")));
        assert!(!fig1.accepts(&UTriple::identity()));

        let loop_final = Spliffer::new(letters("a"), 1, [], [0], [0]).unwrap();
        assert!(loop_final.accepts(&UTriple::identity()));
    }

    #[test]
    fn split_examples() {
        let fig1 = parse(FIG1).unwrap();
        assert_eq!(fig1.split(&w("aba")), vec![(w("a"), w("ab")), (w("aa"), w("b"))]);
        assert!(fig1.split(&w("ab")).is_empty());
        let fig2a = parse(FIG2A).unwrap();
        assert_eq!(fig2a.split(&w("abab")), vec![(w("ab"), w("ab"))]);
    }

    #[test]
    fn enumerate_examples() {
        let fig1 = parse(FIG1).unwrap();
        let expected: BTreeSet<_> = [t("aa", "b", "aba"), t("a", "ab", "aba")].into_iter().collect();
        assert_eq!(fig1.enumerate_behavior(3), expected);
        assert!(fig1.enumerate_behavior(2).is_empty());
        let fig2a = parse(FIG2A).unwrap();
        let expected: BTreeSet<_> = [t("ab", "ab", "abab")].into_iter().collect();
        assert_eq!(fig2a.enumerate_behavior(4), expected);
    }

    #[test]
    fn run_counting() {
        let fig1 = parse(FIG1).unwrap();
        assert_eq!(fig1.count_runs(&t("aa", "b", "aba")), 1);
        assert_eq!(fig1.count_runs(&t("ab", "a", "aba")), 0);
        // two paths to the same final state with the same label
        let m = Spliffer::new(
            letters("a"),
            3,
            [Transition::new(0, Generator::left('a'), 1), Transition::new(0, Generator::left('a'), 2)],
            [0],
            [1, 2],
        )
        .unwrap();
        assert_eq!(m.count_runs(&t("a", "-", "a")), 2);
    }

    #[test]
    fn determinism_examples() {
        assert_eq!(parse(FIG2A).unwrap().is_deterministic(), Ok(()));
        let fig1 = parse(FIG1).unwrap();
        assert_eq!(
            fig1.is_deterministic(),
            Err(DeterminismViolation::MixedTapes {
                state: StateId(0),
                left: Letter::from('a'),
                right: Letter::from('a'),
            })
        );
        let trivial = Spliffer::new(letters("a"), 1, [], [0], [0]).unwrap();
        assert_eq!(trivial.is_deterministic(), Ok(()));

        let two_initials = Spliffer::new(letters("a"), 2, [], [0, 1], []).unwrap();
        assert_eq!(two_initials.is_deterministic(), Err(DeterminismViolation::InitialStates(2)));

        let shared = Spliffer::new(
            letters("a"),
            3,
            [Transition::new(0, Generator::left('a'), 1), Transition::new(0, Generator::left('a'), 2)],
            [0],
            [],
        )
        .unwrap();
        assert_eq!(
            shared.is_deterministic(),
            Err(DeterminismViolation::SharedLetter { state: StateId(0), letter: Letter::from('a') })
        );
    }

    #[test]
    fn projections() {
        let fig1 = parse(FIG1).unwrap();
        let nfa = fig1.input_projection();
        let lang: Vec<String> = nfa.language(6).into_iter().map(|w| w.to_string()).collect();
        assert_eq!(lang, vec!["aba"]);

        let fig2a = parse(FIG2A).unwrap();
        let nfa = fig2a.input_projection();
        assert!(nfa.is_deterministic());
        let lang: Vec<String> = nfa.language(8).into_iter().map(|w| w.to_string()).collect();
        assert_eq!(lang, vec!["abab", "abababab"]);

        let eps = Spliffer::new(letters("a"), 1, [], [0], [0]).unwrap();
        assert_eq!(eps.input_projection().language(4).into_iter().collect::<Vec<_>>(), vec![w("-")]);

        let out = fig1.output_projection();
        let rel: Vec<_> = out.relation(3).into_iter().collect();
        assert_eq!(rel, vec![(w("a"), w("ab")), (w("aa"), w("b"))]);
        assert!(!out.writes_only_left());

        let left_only = Spliffer::new(
            letters("a"),
            2,
            [Transition::new(0, Generator::left('a'), 1)],
            [0],
            [1],
        )
        .unwrap();
        assert!(left_only.output_projection().writes_only_left());

        let rel = fig2a.output_projection().relation(8);
        let expected: BTreeSet<_> = [(w("ab"), w("ab")), (w("abab"), w("abab"))].into_iter().collect();
        assert_eq!(rel, expected);
    }

    #[test]
    fn bruteforce_oracles() {
        let fig1 = parse(FIG1).unwrap();
        assert!(!fig1.is_functional_bruteforce(3));
        assert!(parse(FIG2A).unwrap().is_functional_bruteforce(8));
        let empty = Spliffer::new(letters("a"), 1, [], [0], []).unwrap();
        assert!(empty.is_functional_bruteforce(5));
        assert!(empty.is_injective_bruteforce(5));
        assert!(parse(FIG4).unwrap().is_injective_bruteforce(6));
    }
}
