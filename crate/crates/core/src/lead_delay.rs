//! The lead-or-delay action.
//!
//! A value records how far the first of two output streams runs ahead of the
//! second: `Lead(w)` stands for every pair `(u·w, u)`, `Delay(w)` for every
//! pair `(u, u·w)`, and `Zero` for pairs where neither word is a prefix of the
//! other. Appending `(f, g)` to both streams acts on the value; `Zero` is
//! absorbing.

use std::fmt;

use crate::monoid::Word;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LeadOrDelay {
    Lead(Word),
    /// Never empty; the balanced value is `Lead(ε)`.
    Delay(Word),
    Zero,
}

impl LeadOrDelay {
    /// The balanced value `(ε, ε)`.
    pub fn balanced() -> Self {
        LeadOrDelay::Lead(Word::empty())
    }

    pub fn lead(w: Word) -> Self {
        LeadOrDelay::Lead(w)
    }

    /// Canonical delay: `delay(ε)` is the balanced value.
    pub fn delay(w: Word) -> Self {
        if w.is_empty() {
            LeadOrDelay::balanced()
        } else {
            LeadOrDelay::Delay(w)
        }
    }

    pub fn is_balanced(&self) -> bool {
        matches!(self, LeadOrDelay::Lead(w) if w.is_empty())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, LeadOrDelay::Zero)
    }

    /// The representative pair `(h_l, h_r)`, or `None` for `Zero`.
    pub fn as_pair(&self) -> Option<(Word, Word)> {
        match self {
            LeadOrDelay::Lead(w) => Some((w.clone(), Word::empty())),
            LeadOrDelay::Delay(w) => Some((Word::empty(), w.clone())),
            LeadOrDelay::Zero => None,
        }
    }

    /// `self · (f, g)`: with `self = (h_l, h_r)`, compares `h_l·f` against
    /// `h_r·g` and keeps whichever residual is left over.
    pub fn act(&self, f: &Word, g: &Word) -> LeadOrDelay {
        let Some((hl, hr)) = self.as_pair() else {
            return LeadOrDelay::Zero;
        };
        let first = hl.concat(f);
        let second = hr.concat(g);
        if let Some(rest) = second.left_quotient(&first) {
            LeadOrDelay::lead(rest)
        } else if let Some(rest) = first.left_quotient(&second) {
            LeadOrDelay::delay(rest)
        } else {
            LeadOrDelay::Zero
        }
    }
}

impl fmt::Display for LeadOrDelay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeadOrDelay::Lead(w) => write!(f, "({w}, -)"),
            LeadOrDelay::Delay(w) => write!(f, "(-, {w})"),
            LeadOrDelay::Zero => f.write_str("0"),
        }
    }
}

/// Element of `H_A × H_A`: the lead-or-delay of the left outputs of two runs,
/// and of their right outputs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairValue {
    pub left: LeadOrDelay,
    pub right: LeadOrDelay,
}

impl PairValue {
    pub fn new(left: LeadOrDelay, right: LeadOrDelay) -> Self {
        PairValue { left, right }
    }

    pub fn balanced() -> Self {
        PairValue::new(LeadOrDelay::balanced(), LeadOrDelay::balanced())
    }

    pub fn is_balanced(&self) -> bool {
        self.left.is_balanced() && self.right.is_balanced()
    }

    pub fn has_zero(&self) -> bool {
        self.left.is_zero() || self.right.is_zero()
    }

    /// Bidimensional action. `first` is the `(left, right)` output of the
    /// first run and `second` that of the second run; the left outputs of the
    /// two runs are compared in `self.left`, the right outputs in
    /// `self.right`.
    pub fn act(&self, first: (&Word, &Word), second: (&Word, &Word)) -> PairValue {
        PairValue {
            left: self.left.act(first.0, second.0),
            right: self.right.act(first.1, second.1),
        }
    }
}

impl fmt::Display for PairValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.left, self.right)
    }
}
