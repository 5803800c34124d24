//! Line-oriented text format for machines.
//!
//! ```text
//! # comment
//! alphabet: a b
//! states: 3
//! initial: 0
//! final: 2
//! trans: 0 a L 1
//! trans: 1 b R 2
//! ```
//!
//! `L` labels a transition with the generator `(a, ε, a)` and `R` with
//! `(ε, a, a)`. `initial:` and `final:` may repeat and accumulate. States are
//! numbered from 0.

use std::fmt::Write as _;

use crate::dfa::Nfa;
use crate::error::Error;
use crate::machine::{Spliffer, Transition};
use crate::monoid::{Generator, Letter, Tape};

/// Parses and validates a machine.
pub fn parse(text: &str) -> Result<Spliffer, Error> {
    let m = parse_unvalidated(text)?;
    let violations = m.validate();
    if violations.is_empty() {
        Ok(m)
    } else {
        Err(Error::InvalidMachine(violations))
    }
}

/// Parses a machine, checking syntax only.
pub fn parse_unvalidated(text: &str) -> Result<Spliffer, Error> {
    let mut alphabet: Option<Vec<Letter>> = None;
    let mut states: Option<usize> = None;
    let mut initial = Vec::new();
    let mut finals = Vec::new();
    let mut transitions = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let tokens = tokens(content);
        let (directive_col, directive) = tokens[0];
        let Some(name) = directive.strip_suffix(':') else {
            return Err(syntax(line, directive_col, format!("expected `directive:`, found `{directive}`")));
        };
        let args = &tokens[1..];
        match name {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(syntax(line, directive_col, "duplicate `alphabet:` directive"));
                }
                let letters = args
                    .iter()
                    .map(|&(col, tok)| Letter::new(tok).map_err(|e| syntax(line, col, e.to_string())))
                    .collect::<Result<Vec<_>, _>>()?;
                alphabet = Some(letters);
            }
            "states" => {
                if states.is_some() {
                    return Err(syntax(line, directive_col, "duplicate `states:` directive"));
                }
                let [(col, tok)] = args else {
                    return Err(syntax(line, directive_col, "`states:` takes exactly one count"));
                };
                states = Some(number(line, *col, tok)?);
            }
            "initial" => {
                for &(col, tok) in args {
                    initial.push(number(line, col, tok)?);
                }
            }
            "final" => {
                for &(col, tok) in args {
                    finals.push(number(line, col, tok)?);
                }
            }
            "trans" => {
                let [(src_col, src), (letter_col, letter), (tape_col, tape), (dst_col, dst)] = args else {
                    return Err(syntax(line, directive_col, "`trans:` takes SRC LETTER L|R DST"));
                };
                let tape = match *tape {
                    "L" => Tape::Left,
                    "R" => Tape::Right,
                    other => {
                        return Err(syntax(line, *tape_col, format!("tape must be L or R, found `{other}`")))
                    }
                };
                let letter = Letter::new(letter).map_err(|e| syntax(line, *letter_col, e.to_string()))?;
                transitions.push(Transition::new(
                    number(line, *src_col, src)?,
                    Generator { tape, letter },
                    number(line, *dst_col, dst)?,
                ));
            }
            other => {
                return Err(syntax(line, directive_col, format!("unknown directive `{other}`")));
            }
        }
    }

    let Some(states) = states else {
        return Err(syntax(last_line + 1, 1, "missing `states:` directive"));
    };
    Ok(Spliffer::from_parts_unchecked(alphabet.unwrap_or_default(), states, transitions, initial, finals))
}

/// Canonical rendering: headers, then transitions sorted by source, letter,
/// tape and target.
pub fn serialize(m: &Spliffer) -> String {
    let mut out = String::new();
    header(
        &mut out,
        m.alphabet().iter(),
        m.state_count(),
        m.initial().iter().map(|q| q.0),
        m.finals().iter().map(|q| q.0),
    );
    for t in m.transitions() {
        let _ = writeln!(out, "trans: {t}");
    }
    out
}

/// Same layout for a classical automaton; transitions read `trans: SRC LETTER DST`.
pub fn serialize_nfa(n: &Nfa) -> String {
    let mut out = String::new();
    header(&mut out, n.alphabet().iter(), n.state_count(), n.initial().iter().copied(), n.finals().iter().copied());
    for (src, letter, dst) in n.transitions() {
        let _ = writeln!(out, "trans: {src} {letter} {dst}");
    }
    out
}

fn header<'a>(
    out: &mut String,
    alphabet: impl Iterator<Item = &'a Letter>,
    states: usize,
    initial: impl Iterator<Item = usize>,
    finals: impl Iterator<Item = usize>,
) {
    let join = |items: Vec<String>| items.into_iter().map(|s| format!(" {s}")).collect::<String>();
    let _ = writeln!(out, "alphabet:{}", join(alphabet.map(|a| a.to_string()).collect()));
    let _ = writeln!(out, "states: {states}");
    let _ = writeln!(out, "initial:{}", join(initial.map(|q| q.to_string()).collect()));
    let _ = writeln!(out, "final:{}", join(finals.map(|q| q.to_string()).collect()));
}

/// Whitespace-separated tokens with 1-based columns. A directive glued to its
/// first argument (`states:3`) is split after the colon.
fn tokens(content: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &content[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(&(col, first)) = out.first() {
        if let Some(pos) = first.find(':') {
            if pos + 1 < first.len() {
                out[0] = (col, &first[..=pos]);
                out.insert(1, (col + pos + 1, &first[pos + 1..]));
            }
        }
    }
    out.into_iter()
        .map(|(byte, tok)| (content[..byte].chars().count() + 1, tok))
        .collect()
}

fn number(line: usize, column: usize, tok: &str) -> Result<usize, Error> {
    tok.parse().map_err(|_| syntax(line, column, format!("expected a state number, found `{tok}`")))
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::Violation;
    use crate::rational::union;

    const FIG1: &str = include_str!("../../../fixtures/fig1.spl");
    const FIG2A: &str = include_str!("../../../fixtures/fig2a.spl");
    const FIG4: &str = include_str!("../../../fixtures/fig4.spl");

    #[test]
    fn parses_fig1() {
        let m = parse(FIG1).unwrap();
        assert_eq!(m.state_count(), 6);
        assert_eq!(m.transitions().len(), 6);
        assert_eq!(m.alphabet().len(), 2);
    }

    #[test]
    fn bad_tape_is_a_syntax_error() {
        let text = "alphabet: a\nstates: 2\ninitial: 0\ntrans: 0 a X 1\n";
        assert_eq!(
            parse(text),
            Err(Error::Syntax { line: 4, column: 12, message: "tape must be L or R, found `X`".into() })
        );
    }

    #[test]
    fn duplicate_transitions_collapse() {
        let text = "alphabet: a\nstates: 2\ninitial: 0\nfinal: 1\ntrans: 0 a L 1\ntrans: 0 a L 1\n";
        assert_eq!(parse(text).unwrap().transitions().len(), 1);
    }

    #[test]
    fn semantic_errors_come_from_validation() {
        let text = "alphabet: a\nstates: 2\ninitial: 0\ntrans: 0 b L 1\n";
        assert!(parse_unvalidated(text).is_ok());
        assert!(matches!(
            parse(text),
            Err(Error::InvalidMachine(v)) if matches!(v.as_slice(), [Violation::UnknownLetter { .. }])
        ));
    }

    #[test]
    fn other_syntax_errors() {
        assert!(matches!(parse("alphabet: a\n"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(parse("states: x\n"), Err(Error::Syntax { line: 1, column: 9, .. })));
        assert!(matches!(parse("states 2\n"), Err(Error::Syntax { line: 1, column: 1, .. })));
        assert!(matches!(parse("states: 1\nfoo: 1\n"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(parse("states: 1\ntrans: 0 a L\n"), Err(Error::Syntax { line: 2, .. })));
        assert!(parse("states:1\ninitial:0\nalphabet: a\n").is_ok());
    }

    #[test]
    fn canonical_serialization() {
        let m = parse(FIG1).unwrap();
        let text = serialize(&m);
        assert_eq!(
            text,
            "alphabet: a b\nstates: 6\ninitial: 0\nfinal: 5\n\
             trans: 0 a L 1\ntrans: 0 a R 3\ntrans: 1 b R 2\ntrans: 2 a L 5\n\
             trans: 3 b R 4\ntrans: 4 a L 5\n"
        );
        assert_eq!(parse(&text).unwrap(), m);
    }

    #[test]
    fn empty_transition_machine() {
        let m = Spliffer::new([Letter::from('a')], 1, [], [0], [0]).unwrap();
        assert_eq!(serialize(&m), "alphabet: a\nstates: 1\ninitial: 0\nfinal: 0\n");
    }

    #[test]
    fn union_renumbers_contiguously() {
        let u = union(&parse(FIG2A).unwrap(), &parse(FIG4).unwrap());
        let text = serialize(&u);
        assert!(text.starts_with("alphabet: a b\nstates: 7\ninitial: 0 5\nfinal: 4 6\n"));
        assert!(text.contains("trans: 5 b L 6\n"));
        assert_eq!(parse(&text).unwrap(), u);
    }
}
