//! Rational constructions on spliffers: union, product, star and trim.
//!
//! Product and star are first built with ε-links between the operands, which
//! are then eliminated so that every label of the result is a generator.

use std::collections::{BTreeSet, VecDeque};

use crate::machine::{Spliffer, StateId, Transition};

/// Disjoint union; the states of `m2` follow those of `m1`.
pub fn union(m1: &Spliffer, m2: &Spliffer) -> Spliffer {
    let offset = m1.state_count();
    Spliffer::from_parts_unchecked(
        m1.alphabet().iter().chain(m2.alphabet()).cloned(),
        offset + m2.state_count(),
        m1.transitions().iter().cloned().chain(m2.transitions().iter().map(|t| shifted(t, offset))),
        m1.initial().iter().map(|q| q.0).chain(m2.initial().iter().map(|q| q.0 + offset)),
        m1.finals().iter().map(|q| q.0).chain(m2.finals().iter().map(|q| q.0 + offset)),
    )
}

/// Machine whose behavior is `{ t1 · t2 : t1 ∈ |m1|, t2 ∈ |m2| }`.
pub fn product(m1: &Spliffer, m2: &Spliffer) -> Spliffer {
    let offset = m1.state_count();
    let links = m1
        .finals()
        .iter()
        .flat_map(|f| m2.initial().iter().map(move |i| (f.0, i.0 + offset)))
        .collect();
    EpsilonMachine {
        state_count: offset + m2.state_count(),
        transitions: m1
            .transitions()
            .iter()
            .cloned()
            .chain(m2.transitions().iter().map(|t| shifted(t, offset)))
            .collect(),
        links,
        initial: m1.initial().iter().map(|q| q.0).collect(),
        finals: m2.finals().iter().map(|q| q.0 + offset).collect(),
    }
    .eliminate(m1.alphabet().iter().chain(m2.alphabet()).cloned().collect())
}

/// Kleene star. A fresh state, numbered after the states of `m`, is the only
/// initial state and is final.
pub fn star(m: &Spliffer) -> Spliffer {
    let hub = m.state_count();
    let links = m
        .initial()
        .iter()
        .map(|i| (hub, i.0))
        .chain(m.finals().iter().map(|f| (f.0, hub)))
        .collect();
    EpsilonMachine {
        state_count: hub + 1,
        transitions: m.transitions().to_vec(),
        links,
        initial: vec![hub],
        finals: vec![hub],
    }
    .eliminate(m.alphabet().clone())
}

/// Restriction to the states that are both accessible and co-accessible,
/// renumbered in their original order. A machine with empty behavior trims
/// to a single initial, non-final state.
pub fn trim(m: &Spliffer) -> Spliffer {
    let n = m.state_count();
    let mut forward = vec![Vec::new(); n];
    let mut backward = vec![Vec::new(); n];
    for t in m.transitions() {
        forward[t.src.0].push(t.dst.0);
        backward[t.dst.0].push(t.src.0);
    }
    let accessible = reach(&forward, m.initial().iter().map(|q| q.0));
    let coaccessible = reach(&backward, m.finals().iter().map(|q| q.0));
    let keep: Vec<usize> = (0..n).filter(|&q| accessible[q] && coaccessible[q]).collect();
    if keep.is_empty() {
        return Spliffer::from_parts_unchecked(m.alphabet().iter().cloned(), 1, [], [0], []);
    }
    let mut renumber = vec![None; n];
    for (new, &old) in keep.iter().enumerate() {
        renumber[old] = Some(new);
    }
    let map = |q: &StateId| renumber[q.0];
    Spliffer::from_parts_unchecked(
        m.alphabet().iter().cloned(),
        keep.len(),
        m.transitions().iter().filter_map(|t| {
            Some(Transition { src: StateId(map(&t.src)?), letter: t.letter.clone(), tape: t.tape, dst: StateId(map(&t.dst)?) })
        }),
        m.initial().iter().filter_map(map),
        m.finals().iter().filter_map(map),
    )
}

fn shifted(t: &Transition, offset: usize) -> Transition {
    Transition { src: StateId(t.src.0 + offset), letter: t.letter.clone(), tape: t.tape, dst: StateId(t.dst.0 + offset) }
}

fn reach(adjacency: &[Vec<usize>], start: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut seen = vec![false; adjacency.len()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for q in start {
        if !seen[q] {
            seen[q] = true;
            queue.push_back(q);
        }
    }
    while let Some(q) = queue.pop_front() {
        for &next in &adjacency[q] {
            if !seen[next] {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Spliffer extended with unlabelled links.
struct EpsilonMachine {
    state_count: usize,
    transitions: Vec<Transition>,
    links: Vec<(usize, usize)>,
    initial: Vec<usize>,
    finals: Vec<usize>,
}

impl EpsilonMachine {
    /// Every state takes over the labelled transitions and the finality of
    /// the states it reaches through links; the links are then dropped.
    fn eliminate(self, alphabet: BTreeSet<crate::monoid::Letter>) -> Spliffer {
        let n = self.state_count;
        let mut link_adj = vec![Vec::new(); n];
        for &(u, v) in &self.links {
            link_adj[u].push(v);
        }
        let mut out = vec![Vec::new(); n];
        for t in &self.transitions {
            out[t.src.0].push(t);
        }
        let is_final: Vec<bool> = {
            let mut f = vec![false; n];
            for &q in &self.finals {
                f[q] = true;
            }
            f
        };
        let mut transitions = Vec::new();
        let mut finals = Vec::new();
        for u in 0..n {
            let closure = reach(&link_adj, [u]);
            for v in (0..n).filter(|&v| closure[v]) {
                if is_final[v] {
                    finals.push(u);
                }
                for t in &out[v] {
                    transitions.push(Transition { src: StateId(u), letter: t.letter.clone(), tape: t.tape, dst: t.dst });
                }
            }
        }
        Spliffer::from_parts_unchecked(alphabet, n, transitions, self.initial, finals)
    }
}
