//! Random machines for differential testing.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::machine::{Spliffer, StateId, Transition};
use crate::monoid::{Letter, Tape};

/// The first `size` letters of `a, b, c, …`.
pub fn alphabet(size: usize) -> Vec<Letter> {
    (b'a'..=b'z').take(size).map(|c| Letter::from(c as char)).collect()
}

fn tape<R: Rng + ?Sized>(rng: &mut R) -> Tape {
    if rng.random_bool(0.5) {
        Tape::Left
    } else {
        Tape::Right
    }
}

/// Arbitrary spliffer with `1..=max_states` states: every possible transition
/// is present with probability `density`, each state is initial with
/// probability 0.3 (at least one is) and final with probability 0.4.
pub fn spliffer<R: Rng + ?Sized>(rng: &mut R, max_states: usize, letters: usize, density: f64) -> Spliffer {
    let n = rng.random_range(1..=max_states);
    let sigma = alphabet(letters);
    let mut transitions = Vec::new();
    for src in 0..n {
        for letter in &sigma {
            for tape in [Tape::Left, Tape::Right] {
                for dst in 0..n {
                    if rng.random_bool(density) {
                        transitions.push(Transition { src: StateId(src), letter: letter.clone(), tape, dst: StateId(dst) });
                    }
                }
            }
        }
    }
    let mut initial: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.3)).collect();
    if initial.is_empty() {
        initial.push(rng.random_range(0..n));
    }
    let finals: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.4)).collect();
    Spliffer::from_parts_unchecked(sigma, n, transitions, initial, finals)
}

/// Deterministic splitter with exactly `states` states and initial state 0.
/// Each state picks one output tape; each letter has a transition with
/// probability `density`.
pub fn deterministic<R: Rng + ?Sized>(rng: &mut R, states: usize, letters: usize, density: f64) -> Spliffer {
    let sigma = alphabet(letters);
    let mut transitions = Vec::new();
    for src in 0..states {
        let tape = tape(rng);
        for letter in &sigma {
            if rng.random_bool(density) {
                let dst = rng.random_range(0..states);
                transitions.push(Transition { src: StateId(src), letter: letter.clone(), tape, dst: StateId(dst) });
            }
        }
    }
    let finals: Vec<usize> = (0..states).filter(|_| rng.random_bool(0.4)).collect();
    Spliffer::from_parts_unchecked(sigma, states, transitions, [0], finals)
}

/// Same machine with its states renumbered at random. Determinism and
/// behavior are unchanged.
pub fn permute_states<R: Rng + ?Sized>(rng: &mut R, m: &Spliffer) -> Spliffer {
    let mut perm: Vec<usize> = (0..m.state_count()).collect();
    perm.shuffle(rng);
    Spliffer::from_parts_unchecked(
        m.alphabet().iter().cloned(),
        m.state_count(),
        m.transitions().iter().map(|t| Transition {
            src: StateId(perm[t.src.0]),
            letter: t.letter.clone(),
            tape: t.tape,
            dst: StateId(perm[t.dst.0]),
        }),
        m.initial().iter().map(|q| perm[q.0]),
        m.finals().iter().map(|q| perm[q.0]),
    )
}

/// Adds a copy of a random state, with the same outgoing transitions and
/// finality, and duplicates every transition entering the original so that it
/// also enters the copy. Behavior (and so functionality) is preserved;
/// determinism is not.
pub fn clone_state<R: Rng + ?Sized>(rng: &mut R, m: &Spliffer) -> Spliffer {
    let n = m.state_count();
    let q = StateId(rng.random_range(0..n));
    let copy = StateId(n);
    let mut transitions: Vec<Transition> = m.transitions().to_vec();
    for t in m.transitions() {
        let src = if t.src == q { copy } else { t.src };
        if t.src == q {
            transitions.push(Transition { src, letter: t.letter.clone(), tape: t.tape, dst: t.dst });
        }
        if t.dst == q {
            transitions.push(Transition { src: t.src, letter: t.letter.clone(), tape: t.tape, dst: copy });
            if t.src == q {
                transitions.push(Transition { src: copy, letter: t.letter.clone(), tape: t.tape, dst: copy });
            }
        }
    }
    let mut initial: Vec<usize> = m.initial().iter().map(|s| s.0).collect();
    if m.is_initial(q) {
        initial.push(copy.0);
    }
    let mut finals: Vec<usize> = m.finals().iter().map(|s| s.0).collect();
    if m.is_final(q) {
        finals.push(copy.0);
    }
    Spliffer::from_parts_unchecked(m.alphabet().iter().cloned(), n + 1, transitions, initial, finals)
}

/// Adds a copy of a random state, with the same outgoing transitions and
/// finality, and moves a random subset of the transitions entering the
/// original onto the copy. Behavior and determinism are preserved.
pub fn split_state<R: Rng + ?Sized>(rng: &mut R, m: &Spliffer) -> Spliffer {
    let n = m.state_count();
    let q = StateId(rng.random_range(0..n));
    let copy = StateId(n);
    let mut transitions: Vec<Transition> = m
        .transitions()
        .iter()
        .map(|t| {
            let mut t = t.clone();
            if t.dst == q && rng.random_bool(0.5) {
                t.dst = copy;
            }
            t
        })
        .collect();
    let outgoing: Vec<Transition> = transitions
        .iter()
        .filter(|t| t.src == q)
        .map(|t| Transition { src: copy, ..t.clone() })
        .collect();
    transitions.extend(outgoing);
    let mut finals: Vec<usize> = m.finals().iter().map(|s| s.0).collect();
    if m.is_final(q) {
        finals.push(copy.0);
    }
    Spliffer::from_parts_unchecked(
        m.alphabet().iter().cloned(),
        n + 1,
        transitions,
        m.initial().iter().map(|s| s.0),
        finals,
    )
}

/// One random local edit that keeps a deterministic machine deterministic:
/// toggle a final state, switch the output tape of a state, or redirect a
/// transition.
pub fn mutate_deterministic<R: Rng + ?Sized>(rng: &mut R, m: &Spliffer) -> Spliffer {
    let n = m.state_count();
    let mut transitions = m.transitions().to_vec();
    let mut finals: Vec<usize> = m.finals().iter().map(|q| q.0).collect();
    match rng.random_range(0..3) {
        0 => {
            let q = rng.random_range(0..n);
            if let Some(pos) = finals.iter().position(|&f| f == q) {
                finals.remove(pos);
            } else {
                finals.push(q);
            }
        }
        1 => {
            let q = StateId(rng.random_range(0..n));
            for t in transitions.iter_mut().filter(|t| t.src == q) {
                t.tape = match t.tape {
                    Tape::Left => Tape::Right,
                    Tape::Right => Tape::Left,
                };
            }
        }
        _ => {
            if !transitions.is_empty() {
                let i = rng.random_range(0..transitions.len());
                transitions[i].dst = StateId(rng.random_range(0..n));
            }
        }
    }
    Spliffer::from_parts_unchecked(
        m.alphabet().iter().cloned(),
        n,
        transitions,
        m.initial().iter().map(|q| q.0),
        finals,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn generated_machines_are_valid() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let m = spliffer(&mut rng, 4, 2, 0.2);
            assert!(m.validate().is_empty());
            let d = deterministic(&mut rng, 5, 2, 0.7);
            assert!(d.validate().is_empty());
            assert_eq!(d.is_deterministic(), Ok(()));
            assert_eq!(permute_states(&mut rng, &d).is_deterministic(), Ok(()));
            assert_eq!(mutate_deterministic(&mut rng, &d).is_deterministic(), Ok(()));
            assert_eq!(split_state(&mut rng, &d).is_deterministic(), Ok(()));
        }
    }

    #[test]
    fn perturbations_preserve_behavior() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..50 {
            let d = deterministic(&mut rng, 4, 2, 0.8);
            let expected = d.enumerate_behavior(6);
            assert_eq!(permute_states(&mut rng, &d).enumerate_behavior(6), expected);
            let c = clone_state(&mut rng, &d);
            assert!(c.validate().is_empty());
            assert_eq!(c.enumerate_behavior(6), expected);
            assert_eq!(split_state(&mut rng, &d).enumerate_behavior(6), expected);
        }
    }
}
