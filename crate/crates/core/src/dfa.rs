//! Classical automata over `A*`: the input projection of a splitter, subset
//! construction, and language equivalence of complete DFAs.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use crate::monoid::{Letter, Word};

/// Nondeterministic automaton over letters, without ε-transitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: BTreeSet<Letter>,
    state_count: usize,
    transitions: BTreeSet<(usize, Letter, usize)>,
    initial: BTreeSet<usize>,
    finals: BTreeSet<usize>,
}

impl Nfa {
    pub fn new(
        alphabet: impl IntoIterator<Item = Letter>,
        state_count: usize,
        transitions: impl IntoIterator<Item = (usize, Letter, usize)>,
        initial: impl IntoIterator<Item = usize>,
        finals: impl IntoIterator<Item = usize>,
    ) -> Self {
        Nfa {
            alphabet: alphabet.into_iter().collect(),
            state_count,
            transitions: transitions.into_iter().collect(),
            initial: initial.into_iter().collect(),
            finals: finals.into_iter().collect(),
        }
    }

    pub fn alphabet(&self) -> &BTreeSet<Letter> {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn transitions(&self) -> &BTreeSet<(usize, Letter, usize)> {
        &self.transitions
    }

    pub fn initial(&self) -> &BTreeSet<usize> {
        &self.initial
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    /// At most one initial state and at most one transition per state and letter.
    pub fn is_deterministic(&self) -> bool {
        let mut seen = HashSet::new();
        self.initial.len() <= 1 && self.transitions.iter().all(|(src, a, _)| seen.insert((*src, a)))
    }

    fn successors(&self) -> Vec<BTreeMap<&Letter, Vec<usize>>> {
        let mut succ = vec![BTreeMap::new(); self.state_count];
        for (src, a, dst) in &self.transitions {
            succ[*src].entry(a).or_insert_with(Vec::new).push(*dst);
        }
        succ
    }

    pub fn accepts(&self, word: &Word) -> bool {
        let succ = self.successors();
        let mut current: BTreeSet<usize> = self.initial.clone();
        for a in word.letters() {
            current = current
                .iter()
                .filter_map(|q| succ[*q].get(a))
                .flatten()
                .copied()
                .collect();
        }
        current.iter().any(|q| self.finals.contains(q))
    }

    /// Accepted words of length at most `max_len`.
    pub fn language(&self, max_len: usize) -> BTreeSet<Word> {
        let succ = self.successors();
        let mut result = BTreeSet::new();
        let mut layer: HashSet<(usize, Word)> =
            self.initial.iter().map(|&q| (q, Word::empty())).collect();
        for depth in 0..=max_len {
            result.extend(layer.iter().filter(|(q, _)| self.finals.contains(q)).map(|(_, w)| w.clone()));
            if depth == max_len {
                break;
            }
            let mut next = HashSet::new();
            for (q, w) in &layer {
                for (a, dsts) in &succ[*q] {
                    for &d in dsts {
                        let mut w2 = w.clone();
                        w2.push((*a).clone());
                        next.insert((d, w2));
                    }
                }
            }
            layer = next;
        }
        result
    }
}

/// Complete deterministic automaton. Letters are indexed by their position in
/// the sorted alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<Letter>,
    table: Vec<Vec<usize>>,
    initial: usize,
    finals: Vec<bool>,
}

impl Dfa {
    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.table.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn next(&self, q: usize, letter: &Letter) -> Option<usize> {
        let idx = self.alphabet.binary_search(letter).ok()?;
        Some(self.table[q][idx])
    }

    pub fn accepts(&self, word: &Word) -> bool {
        let mut q = self.initial;
        for a in word.letters() {
            match self.next(q, a) {
                Some(next) => q = next,
                None => return false,
            }
        }
        self.finals[q]
    }

    /// Reads a deterministic automaton directly, adding a sink state if
    /// some transition is missing. `None` if `nfa` is not deterministic or
    /// has no initial state.
    pub fn from_deterministic(nfa: &Nfa) -> Option<Dfa> {
        if !nfa.is_deterministic() {
            return None;
        }
        let initial = *nfa.initial.iter().next()?;
        let alphabet: Vec<Letter> = nfa.alphabet.iter().cloned().collect();
        let sink = nfa.state_count;
        let mut table = vec![vec![sink; alphabet.len()]; nfa.state_count + 1];
        for (src, a, dst) in &nfa.transitions {
            let idx = alphabet.binary_search(a).ok()?;
            table[*src][idx] = *dst;
        }
        let mut finals = vec![false; nfa.state_count + 1];
        for &f in &nfa.finals {
            finals[f] = true;
        }
        Some(Dfa { alphabet, table, initial, finals })
    }

    /// Same language over a larger alphabet; new letters go to a fresh sink.
    pub fn extend_alphabet(&self, alphabet: &BTreeSet<Letter>) -> Dfa {
        let merged: Vec<Letter> =
            self.alphabet.iter().chain(alphabet.iter()).cloned().collect::<BTreeSet<_>>().into_iter().collect();
        if merged.len() == self.alphabet.len() {
            return self.clone();
        }
        let sink = self.table.len();
        let mut table = Vec::with_capacity(sink + 1);
        for row in &self.table {
            table.push(
                merged
                    .iter()
                    .map(|a| match self.alphabet.binary_search(a) {
                        Ok(idx) => row[idx],
                        Err(_) => sink,
                    })
                    .collect(),
            );
        }
        table.push(vec![sink; merged.len()]);
        let mut finals = self.finals.clone();
        finals.push(false);
        Dfa { alphabet: merged, table, initial: self.initial, finals }
    }

    pub fn to_nfa(&self) -> Nfa {
        let mut transitions = BTreeSet::new();
        for (q, row) in self.table.iter().enumerate() {
            for (idx, &dst) in row.iter().enumerate() {
                transitions.insert((q, self.alphabet[idx].clone(), dst));
            }
        }
        Nfa {
            alphabet: self.alphabet.iter().cloned().collect(),
            state_count: self.table.len(),
            transitions,
            initial: [self.initial].into_iter().collect(),
            finals: (0..self.finals.len()).filter(|&q| self.finals[q]).collect(),
        }
    }
}

/// Subset construction. The result is complete: the empty subset, when
/// reachable, is the sink.
pub fn nfa_to_dfa(nfa: &Nfa) -> Dfa {
    let alphabet: Vec<Letter> = nfa.alphabet.iter().cloned().collect();
    let succ = nfa.successors();
    let start: BTreeSet<usize> = nfa.initial.clone();
    let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
    let mut subsets = vec![start.clone()];
    index.insert(start, 0);
    let mut table: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < subsets.len() {
        let mut row = Vec::with_capacity(alphabet.len());
        for a in &alphabet {
            let target: BTreeSet<usize> =
                subsets[i].iter().filter_map(|q| succ[*q].get(a)).flatten().copied().collect();
            let id = match index.get(&target) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    index.insert(target.clone(), id);
                    subsets.push(target);
                    id
                }
            };
            row.push(id);
        }
        table.push(row);
        i += 1;
    }
    let finals = subsets.iter().map(|s| s.iter().any(|q| nfa.finals.contains(q))).collect();
    Dfa { alphabet, table, initial: 0, finals }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[rb] = ra;
        true
    }
}

/// Language equivalence of two complete DFAs.
///
/// Runs the union-find merging check over both automata (extended to a
/// common alphabet). On failure returns a shortest word accepted by exactly
/// one of them.
pub fn dfa_equivalent(d1: &Dfa, d2: &Dfa) -> Result<(), Word> {
    let alphabet: BTreeSet<Letter> = d1.alphabet.iter().chain(d2.alphabet.iter()).cloned().collect();
    let d1 = d1.extend_alphabet(&alphabet);
    let d2 = d2.extend_alphabet(&alphabet);
    let offset = d1.state_count();
    let mut classes = UnionFind::new(offset + d2.state_count());
    let mut queue = VecDeque::new();
    classes.union(d1.initial, offset + d2.initial);
    queue.push_back((d1.initial, d2.initial));
    let mut equivalent = true;
    while let Some((p, q)) = queue.pop_front() {
        if d1.finals[p] != d2.finals[q] {
            equivalent = false;
            break;
        }
        for idx in 0..alphabet.len() {
            let (p2, q2) = (d1.table[p][idx], d2.table[q][idx]);
            if classes.union(p2, offset + q2) {
                queue.push_back((p2, q2));
            }
        }
    }
    if equivalent {
        Ok(())
    } else {
        Err(shortest_difference(&d1, &d2))
    }
}

/// Breadth-first search of the product for the nearest pair that disagrees
/// on finality. Both automata share the alphabet.
fn shortest_difference(d1: &Dfa, d2: &Dfa) -> Word {
    let start = (d1.initial, d2.initial);
    type Pair = (usize, usize);
    let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
    parent.insert(start, None);
    let mut queue = VecDeque::from([start]);
    while let Some((p, q)) = queue.pop_front() {
        if d1.finals[p] != d2.finals[q] {
            let mut letters = Vec::new();
            let mut cur = (p, q);
            while let Some(Some((prev, idx))) = parent.get(&cur) {
                letters.push(d1.alphabet[*idx].clone());
                cur = *prev;
            }
            letters.reverse();
            return Word::from(letters);
        }
        for idx in 0..d1.alphabet.len() {
            let next = (d1.table[p][idx], d2.table[q][idx]);
            if let std::collections::hash_map::Entry::Vacant(slot) = parent.entry(next) {
                slot.insert(Some(((p, q), idx)));
                queue.push_back(next);
            }
        }
    }
    unreachable!("union-find check reported a difference the product search cannot reach")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        Word::parse(text).unwrap()
    }

    fn ab() -> Vec<Letter> {
        vec![Letter::from('a'), Letter::from('b')]
    }

    /// Linear automaton accepting exactly one word.
    fn single_word(word: &str) -> Nfa {
        let word = w(word);
        Nfa::new(
            ab(),
            word.len() + 1,
            word.letters().iter().enumerate().map(|(i, a)| (i, a.clone(), i + 1)),
            [0],
            [word.len()],
        )
    }

    /// 2-state automaton for (a|b)*a.
    fn ends_in_a() -> Nfa {
        let (a, b) = (Letter::from('a'), Letter::from('b'));
        Nfa::new(ab(), 2, [(0, a.clone(), 0), (0, b, 0), (0, a, 1)], [0], [1])
    }

    fn all_words(max_len: usize) -> Vec<Word> {
        let mut words = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for word in &frontier {
                for a in ab() {
                    let mut w2 = word.clone();
                    w2.push(a);
                    next.push(w2);
                }
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        words
    }

    #[test]
    fn determinized_single_word() {
        let dfa = nfa_to_dfa(&single_word("aba"));
        for word in all_words(6) {
            assert_eq!(dfa.accepts(&word), word == w("aba"), "{word}");
        }
    }

    #[test]
    fn determinizing_a_dfa_keeps_language() {
        let d = Dfa::from_deterministic(&single_word("ab")).unwrap();
        let again = nfa_to_dfa(&d.to_nfa());
        assert_eq!(dfa_equivalent(&d, &again), Ok(()));
    }

    #[test]
    fn subset_construction_of_ends_in_a() {
        let n = ends_in_a();
        let d = nfa_to_dfa(&n);
        assert!(d.state_count() <= 4);
        for word in all_words(8) {
            assert_eq!(d.accepts(&word), n.accepts(&word));
            assert_eq!(d.accepts(&word), word.letters().last() == Some(&Letter::from('a')));
        }
    }

    #[test]
    fn equivalence_examples() {
        let d = nfa_to_dfa(&ends_in_a());
        assert_eq!(dfa_equivalent(&d, &d), Ok(()));
        let aba = nfa_to_dfa(&single_word("aba"));
        let ab_ = nfa_to_dfa(&single_word("ab"));
        assert_eq!(dfa_equivalent(&aba, &ab_), Err(w("ab")));
    }

    #[test]
    fn alphabets_are_merged() {
        let only_a = Nfa::new([Letter::from('a')], 1, [(0, Letter::from('a'), 0)], [0], [0]);
        let all = Nfa::new(ab(), 1, [(0, Letter::from('a'), 0), (0, Letter::from('b'), 0)], [0], [0]);
        let res = dfa_equivalent(&nfa_to_dfa(&only_a), &nfa_to_dfa(&all));
        assert_eq!(res, Err(w("b")));
    }

    #[test]
    fn from_deterministic_rejects_nondeterminism() {
        assert!(Dfa::from_deterministic(&ends_in_a()).is_none());
        let d = Dfa::from_deterministic(&single_word("ab")).unwrap();
        assert_eq!(d.state_count(), 4);
        assert!(d.accepts(&w("ab")));
        assert!(!d.accepts(&w("abb")));
    }

    #[test]
    fn union_find_witness_is_shortest() {
        // languages a*b and (a|b)*b differ first on words containing b before the end
        let (a, b) = (Letter::from('a'), Letter::from('b'));
        let n1 = Nfa::new(ab(), 2, [(0, a.clone(), 0), (0, b.clone(), 1)], [0], [1]);
        let n2 = Nfa::new(ab(), 2, [(0, a, 0), (0, b.clone(), 0), (0, b, 1)], [0], [1]);
        assert_eq!(dfa_equivalent(&nfa_to_dfa(&n1), &nfa_to_dfa(&n2)), Err(w("bb")));
    }
}
