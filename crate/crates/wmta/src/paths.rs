//! Path enumeration and path semantics.
//!
//! A path is a chain of transitions; a successful path starts at the initial
//! state and ends in a final state. The zero-length path counts as successful
//! when the initial state is itself final; its label is `ε⁽ⁿ⁾` and its weight
//! `λ(i) ⊗ ρ(i)`. That convention is what lets Kleene closures represent
//! their zero-repetition member.

use crate::automaton::{StateId, Wmta};
use crate::semiring::Weight;
use crate::tuple::StringTuple;
use crate::{Error, Result};

/// A successful path, stored as indices into the automaton's transition list.
/// An empty index list is the zero-length path at the initial state.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Path {
    /// Transition indices in traversal order.
    pub transitions: Vec<usize>,
}

impl Path {
    /// Number of transitions.
    pub fn len(&self) -> usize {
        self.transitions.len()
    }

    /// True for the zero-length path.
    pub fn is_empty(&self) -> bool {
        self.transitions.is_empty()
    }

    fn check_successful(&self, a: &Wmta) -> Result<()> {
        let mut at = a.initial();
        for &i in &self.transitions {
            let t = a
                .transitions()
                .get(i)
                .ok_or(Error::InvalidPath("transition index out of range"))?;
            if t.src != at {
                return Err(Error::InvalidPath("transitions do not chain"));
            }
            at = t.dst;
        }
        if !a.is_final(at) {
            return Err(Error::InvalidPath("path does not end in a final state"));
        }
        Ok(())
    }
}

/// The label of a path: the tape-wise concatenation of its transition labels,
/// `ε⁽ⁿ⁾` for the zero-length path.
pub fn path_label(a: &Wmta, path: &Path) -> StringTuple {
    let mut label = StringTuple::epsilon(a.arity());
    for &i in &path.transitions {
        label
            .concat_assign(&a.transitions()[i].label)
            .expect("transition labels share the automaton arity");
    }
    label
}

/// The weight of a successful path:
/// `λ(p(e₁)) ⊗ w(e₁) ⊗ … ⊗ w(e_r) ⊗ ρ(n(e_r))`.
///
/// Errors if the path is not a successful path of `a`.
pub fn path_weight(a: &Wmta, path: &Path) -> Result<Weight> {
    path.check_successful(a)?;
    let k = a.semiring();
    let mut w = a.initial_weight();
    let mut at = a.initial();
    for &i in &path.transitions {
        let t = &a.transitions()[i];
        w = k.times(w, t.weight);
        at = t.dst;
    }
    Ok(k.times(w, a.final_weight(at)))
}

/// Enumerates every successful path with at most `max_len` transitions, in
/// lexicographic order of transition index sequences.
pub fn enumerate_paths(a: &Wmta, max_len: usize) -> Vec<Path> {
    let adj = a.adjacency();
    let mut out = Vec::new();
    let mut prefix: Vec<usize> = Vec::new();
    // pre-order walk with an explicit stack; depth equals max_len, which is
    // caller-controlled and must not exhaust the call stack
    let mut frames: Vec<(StateId, usize)> = vec![(a.initial(), 0)];
    if a.is_final(a.initial()) {
        out.push(Path {
            transitions: vec![],
        });
    }
    while let Some(frame) = frames.last_mut() {
        let (at, pos) = *frame;
        if prefix.len() == max_len || pos == adj[at].len() {
            frames.pop();
            prefix.pop();
            continue;
        }
        frame.1 += 1;
        let i = adj[at][pos];
        let dst = a.transitions()[i].dst;
        prefix.push(i);
        if a.is_final(dst) {
            out.push(Path {
                transitions: prefix.clone(),
            });
        }
        frames.push((dst, 0));
    }
    out
}
