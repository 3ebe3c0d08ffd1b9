//! Finite weighted relations: the brute-force ground truth that every
//! construction in this crate is tested against.
//!
//! [`relation_upto`] enumerates all successful paths of bounded length and
//! collects path weights per label with `⊕`. For acyclic automata a large
//! enough bound yields the full relation; for cyclic ones the result is the
//! truncation to paths of at most `max_len` transitions.

use crate::automaton::Wmta;
use crate::paths::{enumerate_paths, path_label, path_weight};
use crate::semiring::{Semiring, Weight};
use crate::tuple::StringTuple;
use std::collections::BTreeMap;
use std::fmt;

/// A finite map from string tuples to non-`0̄` weights.
#[derive(Clone, Debug)]
pub struct WeightedRelation {
    arity: usize,
    entries: BTreeMap<StringTuple, Weight>,
}

impl WeightedRelation {
    /// The empty relation of the given arity.
    pub fn empty(arity: usize) -> Self {
        assert!(arity >= 1, "a relation needs at least one tape");
        WeightedRelation {
            arity,
            entries: BTreeMap::new(),
        }
    }

    /// Number of tapes of every member tuple.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of tuples.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// True iff no tuple is present.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The weight of `tuple`, if present.
    pub fn weight(&self, tuple: &StringTuple) -> Option<Weight> {
        self.entries.get(tuple).copied()
    }

    /// Entries in tuple order.
    pub fn iter(&self) -> impl Iterator<Item = (&StringTuple, Weight)> {
        self.entries.iter().map(|(t, &w)| (t, w))
    }

    /// `⊕`-merges `w` into the entry for `tuple`, dropping the entry if the
    /// collected weight is `0̄`.
    pub fn collect(&mut self, k: Semiring, tuple: StringTuple, w: Weight) {
        assert_eq!(tuple.arity(), self.arity, "tuple arity mismatch");
        let total = match self.entries.get(&tuple) {
            Some(&old) => k.plus(old, w),
            None => w,
        };
        if k.is_zero(total) {
            self.entries.remove(&tuple);
        } else {
            self.entries.insert(tuple, total);
        }
    }

    /// Equality as weighted relations, with weights compared within the
    /// semiring's tolerance.
    pub fn eq_in(&self, k: Semiring, other: &WeightedRelation) -> bool {
        if self.arity != other.arity || self.entries.len() != other.entries.len() {
            return false;
        }
        self.entries
            .iter()
            .all(|(t, &w)| other.entries.get(t).is_some_and(|&v| k.weight_eq(w, v)))
    }

    /// Weighted-subset test: every entry of `self` occurs in `other` with an
    /// equal weight.
    pub fn subset_of(&self, k: Semiring, other: &WeightedRelation) -> bool {
        self.entries
            .iter()
            .all(|(t, &w)| other.entries.get(t).is_some_and(|&v| k.weight_eq(w, v)))
    }

    /// Tuple-set subset test, ignoring weights.
    pub fn tuples_subset_of(&self, other: &WeightedRelation) -> bool {
        self.entries.keys().all(|t| other.entries.contains_key(t))
    }

    /// Keeps exactly the tuples whose 1-based tapes `j` and `k` carry equal
    /// strings; weights are not modified.
    pub fn filter_equal_tapes(&self, j: usize, k: usize) -> WeightedRelation {
        let mut out = WeightedRelation::empty(self.arity);
        for (t, &w) in &self.entries {
            if t.tape(j) == t.tape(k) {
                out.entries.insert(t.clone(), w);
            }
        }
        out
    }

    /// The pairing product: every tuple of `self` paired with every tuple of
    /// `other`, weights multiplied with `⊗`.
    pub fn product(&self, k: Semiring, other: &WeightedRelation) -> WeightedRelation {
        let mut out = WeightedRelation::empty(self.arity + other.arity);
        for (s, ws) in &self.entries {
            for (v, wv) in &other.entries {
                out.collect(k, s.pair(v), k.times(*ws, *wv));
            }
        }
        out
    }

    /// Projection of every tuple onto the 1-based `tapes` (repetition and
    /// reordering allowed), weights collected with `⊕` where tuples merge.
    pub fn project(&self, k: Semiring, tapes: &[usize]) -> WeightedRelation {
        let mut out = WeightedRelation::empty(tapes.len());
        for (t, &w) in &self.entries {
            let projected = StringTuple::new(tapes.iter().map(|&i| t.tape(i).to_string()));
            out.collect(k, projected, w);
        }
        out
    }

    /// Complementary projection: removes the listed 1-based tapes from every
    /// tuple, collecting weights where tuples merge.
    pub fn cproject(&self, k: Semiring, tapes: &[usize]) -> WeightedRelation {
        let keep: Vec<usize> = (1..=self.arity).filter(|t| !tapes.contains(t)).collect();
        assert!(!keep.is_empty(), "cannot remove every tape");
        self.project(k, &keep)
    }
}

impl fmt::Display for WeightedRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (t, w)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t} -> {w}")?;
        }
        write!(f, "}}")
    }
}

/// The weighted relation of `a`, truncated to paths of at most `max_len`
/// transitions: each label maps to the `⊕`-collection of its path weights.
pub fn relation_upto(a: &Wmta, max_len: usize) -> WeightedRelation {
    let k = a.semiring();
    let mut rel = WeightedRelation::empty(a.arity());
    for p in enumerate_paths(a, max_len) {
        let w = path_weight(a, &p).expect("enumerate_paths yields successful paths");
        rel.collect(k, path_label(a, &p), w);
    }
    rel
}
