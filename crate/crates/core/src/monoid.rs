//! Words, generators and triples of the shuffling monoid.

use std::fmt;

use smol_str::SmolStr;

use crate::error::Error;

/// A single alphabet symbol.
///
/// Symbols are arbitrary non-whitespace tokens; fixtures use single
/// characters. Ordering is by the token text.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(SmolStr);

impl Letter {
    pub fn new(token: &str) -> Result<Self, Error> {
        if token.is_empty() || token.chars().any(char::is_whitespace) || token == "-" {
            return Err(Error::InvalidLetter(token.to_string()));
        }
        Ok(Letter(SmolStr::new(token)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<char> for Letter {
    fn from(c: char) -> Self {
        Letter(SmolStr::new(c.encode_utf8(&mut [0; 4])))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A finite word over the alphabet; the empty word is `Word::empty()`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses the textual rendering of a word.
    ///
    /// `-` and the empty string denote ε. Text containing whitespace is read
    /// as whitespace-separated tokens, anything else one character per letter.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let text = text.trim();
        if text.is_empty() || text == "-" {
            return Ok(Word::empty());
        }
        if text.contains(char::is_whitespace) {
            text.split_whitespace().map(Letter::new).collect()
        } else {
            Ok(text.chars().map(Letter::from).collect())
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// True when `self` is a prefix of `other`.
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    /// The residual `self⁻¹ other`, defined only when `self` is a prefix of `other`.
    pub fn left_quotient(&self, other: &Word) -> Option<Word> {
        other.0.strip_prefix(self.0.as_slice()).map(|rest| Word(rest.to_vec()))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let separator = if self.0.iter().all(|l| l.as_str().chars().count() == 1) {
            ""
        } else {
            " "
        };
        for (i, letter) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(separator)?;
            }
            f.write_str(letter.as_str())?;
        }
        Ok(())
    }
}

/// Output tape written by a generator, read from the splitter's point of view.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tape {
    Left,
    Right,
}

impl Tape {
    pub fn symbol(self) -> char {
        match self {
            Tape::Left => 'L',
            Tape::Right => 'R',
        }
    }
}

/// A generator of the monoid: `Left(a)` is `(a, ε, a)`, `Right(a)` is `(ε, a, a)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub tape: Tape,
    pub letter: Letter,
}

impl Generator {
    pub fn left(letter: impl Into<Letter>) -> Self {
        Generator { tape: Tape::Left, letter: letter.into() }
    }

    pub fn right(letter: impl Into<Letter>) -> Self {
        Generator { tape: Tape::Right, letter: letter.into() }
    }

    /// The `(left, right)` output written by this generator.
    pub fn outputs(&self) -> (Option<&Letter>, Option<&Letter>) {
        match self.tape {
            Tape::Left => (Some(&self.letter), None),
            Tape::Right => (None, Some(&self.letter)),
        }
    }

    pub fn triple(&self) -> UTriple {
        product(std::slice::from_ref(self))
    }
}

/// An element `(l, r, s)` of the shuffling monoid.
///
/// Construct through [`UTriple::new`], which checks that `s` interleaves `l`
/// and `r`, or through [`product`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UTriple {
    left: Word,
    right: Word,
    shuffled: Word,
}

impl UTriple {
    pub fn new(left: Word, right: Word, shuffled: Word) -> Result<Self, Error> {
        if !is_interleaving(&left, &right, &shuffled) {
            return Err(Error::InvalidTriple { left, right, shuffled });
        }
        Ok(UTriple { left, right, shuffled })
    }

    pub fn identity() -> Self {
        UTriple::default()
    }

    pub fn left(&self) -> &Word {
        &self.left
    }

    pub fn right(&self) -> &Word {
        &self.right
    }

    pub fn shuffled(&self) -> &Word {
        &self.shuffled
    }

    /// Grading of the monoid: the length of the shuffled word.
    pub fn degree(&self) -> usize {
        self.shuffled.len()
    }

    /// Pointwise concatenation.
    pub fn mul(&self, other: &UTriple) -> UTriple {
        UTriple {
            left: self.left.concat(&other.left),
            right: self.right.concat(&other.right),
            shuffled: self.shuffled.concat(&other.shuffled),
        }
    }

    pub fn into_parts(self) -> (Word, Word, Word) {
        (self.left, self.right, self.shuffled)
    }
}

impl Default for UTriple {
    fn default() -> Self {
        UTriple { left: Word::empty(), right: Word::empty(), shuffled: Word::empty() }
    }
}

impl fmt::Display for UTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {}", self.left, self.right, self.shuffled)
    }
}

/// Product of a sequence of generators; the empty sequence yields `(ε, ε, ε)`.
pub fn product(gens: &[Generator]) -> UTriple {
    let mut t = UTriple::identity();
    for g in gens {
        match g.tape {
            Tape::Left => t.left.push(g.letter.clone()),
            Tape::Right => t.right.push(g.letter.clone()),
        }
        t.shuffled.push(g.letter.clone());
    }
    t
}

/// True iff `s` is a merge of `l` and `r` preserving the order of both.
pub fn is_interleaving(l: &Word, r: &Word, s: &Word) -> bool {
    count_merges(l, r, s, |count| count.min(1)) > 0
}

/// Number of generator sequences whose product is `t`.
///
/// Every such sequence is a merge path through the `(i, j)` grid of consumed
/// prefixes of `t.left` and `t.right`. Saturates at `u128::MAX`.
pub fn count_decompositions(t: &UTriple) -> u128 {
    count_merges(&t.left, &t.right, &t.shuffled, |count| count)
}

fn count_merges(l: &Word, r: &Word, s: &Word, clamp: impl Fn(u128) -> u128) -> u128 {
    let (l, r, s) = (l.letters(), r.letters(), s.letters());
    if l.len() + r.len() != s.len() {
        return 0;
    }
    // table[i][j]: ways to produce s[..i+j] from l[..i] and r[..j]
    let width = r.len() + 1;
    let mut table = vec![0u128; (l.len() + 1) * width];
    table[0] = 1;
    for i in 0..=l.len() {
        for j in 0..=r.len() {
            if i == 0 && j == 0 {
                continue;
            }
            let k = i + j - 1;
            let mut ways = 0u128;
            if i > 0 && l[i - 1] == s[k] {
                ways = ways.saturating_add(table[(i - 1) * width + j]);
            }
            if j > 0 && r[j - 1] == s[k] {
                ways = ways.saturating_add(table[i * width + j - 1]);
            }
            table[i * width + j] = clamp(ways);
        }
    }
    table[l.len() * width + r.len()]
}
