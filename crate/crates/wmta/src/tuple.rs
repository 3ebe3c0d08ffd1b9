//! String tuples: the labels of multi-tape transitions and the elements of
//! multi-tape relations.
//!
//! A tuple of arity `n` holds `n` strings over the alphabet; the empty string
//! `ε` is an ordinary component. Symbols are single Unicode scalar values, so
//! all length accounting is in `char`s, not bytes.

use crate::{Error, Result};
use std::fmt;

/// An `n`-tuple of strings. Arity is always at least 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StringTuple(Vec<String>);

impl StringTuple {
    /// Builds a tuple from its components. Panics on an empty component list;
    /// arity zero is not a thing.
    pub fn new<I, S>(components: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let parts: Vec<String> = components.into_iter().map(Into::into).collect();
        assert!(!parts.is_empty(), "a string tuple needs at least one tape");
        StringTuple(parts)
    }

    /// The all-empty tuple `ε⁽ⁿ⁾`.
    pub fn epsilon(arity: usize) -> Self {
        assert!(arity >= 1, "a string tuple needs at least one tape");
        StringTuple(vec![String::new(); arity])
    }

    /// Number of tapes.
    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// The components in tape order.
    pub fn components(&self) -> &[String] {
        &self.0
    }

    /// The component of the given 1-based tape.
    pub fn tape(&self, tape: usize) -> &str {
        &self.0[tape - 1]
    }

    /// True iff every component is the empty string.
    pub fn is_epsilon(&self) -> bool {
        self.0.iter().all(|s| s.is_empty())
    }

    /// Pairing `s ⋈ v`: the components of `self` followed by those of
    /// `other`, arity `n + m`. Any weight bookkeeping (`w(s) ⊗ w(v)`) is the
    /// caller's duty.
    pub fn pair(&self, other: &StringTuple) -> StringTuple {
        let mut parts = self.0.clone();
        parts.extend(other.0.iter().cloned());
        StringTuple(parts)
    }

    /// Tape-wise concatenation of two tuples of equal arity.
    pub fn concat(&self, other: &StringTuple) -> Result<StringTuple> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        Ok(StringTuple(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| format!("{a}{b}"))
                .collect(),
        ))
    }

    /// Tape-wise concatenation in place; same contract as [`Self::concat`].
    pub fn concat_assign(&mut self, other: &StringTuple) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            a.push_str(b);
        }
        Ok(())
    }

    /// Length in symbols of the longest component among the given 1-based
    /// tapes.
    pub fn max_len_on(&self, tapes: &[usize]) -> usize {
        tapes
            .iter()
            .map(|&t| self.tape(t).chars().count())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for StringTuple {
    /// Angle-bracket rendering with `<eps>` for empty components, e.g.
    /// `⟨ab, <eps>, x⟩` prints as `(ab,<eps>,x)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if s.is_empty() {
                write!(f, "<eps>")?;
            } else {
                write!(f, "{s}")?;
            }
        }
        write!(f, ")")
    }
}

/// Longest common prefix of two strings, on symbol boundaries.
pub fn lcp<'a>(a: &'a str, b: &str) -> &'a str {
    let mut end = 0;
    for (ca, cb) in a.chars().zip(b.chars()) {
        if ca != cb {
            break;
        }
        end += ca.len_utf8();
    }
    &a[..end]
}

/// Delay between two strings: `|s| − |u|` in symbols.
pub fn delay(s: &str, u: &str) -> i64 {
    s.chars().count() as i64 - u.chars().count() as i64
}
