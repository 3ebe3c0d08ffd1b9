//! The weighted multi-tape automaton data model.
//!
//! A [`Wmta`] of arity `n` has a finite set of dense integer states, exactly
//! one initial state with a non-zero initial weight, a (possibly empty) map of
//! final weights, and transitions labeled with `n`-tuples of strings and
//! weighted in the automaton's semiring. A state is final iff its final
//! weight is not `0̄`, and a transition's weight is never `0̄`.
//!
//! Values are immutable once construction is done; all operations in this
//! crate take `&Wmta` and build fresh automata, so concurrent reads are safe.

use crate::semiring::{Semiring, Weight};
use crate::tuple::StringTuple;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::collections::BTreeSet;

/// Dense automaton-scoped state identifier.
pub type StateId = usize;

/// One `n`-tape transition.
#[derive(Clone, PartialEq, Debug)]
pub struct Transition {
    /// Source state.
    pub src: StateId,
    /// Target state.
    pub dst: StateId,
    /// The `n`-tuple of strings consumed/produced on the tapes.
    pub label: StringTuple,
    /// Transition weight, never `0̄`.
    pub weight: Weight,
}

/// A weighted multi-tape automaton.
#[derive(Clone, PartialEq, Debug)]
pub struct Wmta {
    arity: usize,
    semiring: Semiring,
    alphabet: BTreeSet<char>,
    num_states: usize,
    initial: StateId,
    initial_weight: Weight,
    finals: BTreeMap<StateId, Weight>,
    transitions: Vec<Transition>,
}

impl Wmta {
    /// Creates an automaton with a single state `0`, which is the initial
    /// state with weight `1̄`. Its relation is empty until states become
    /// final.
    pub fn new(arity: usize, semiring: Semiring) -> Self {
        assert!(arity >= 1, "an automaton needs at least one tape");
        Wmta {
            arity,
            semiring,
            alphabet: BTreeSet::new(),
            num_states: 1,
            initial: 0,
            initial_weight: semiring.one(),
            finals: BTreeMap::new(),
            transitions: Vec::new(),
        }
    }

    /// Number of tapes.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// The weight semiring.
    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    /// Symbols occurring in transition labels (plus any added explicitly).
    pub fn alphabet(&self) -> &BTreeSet<char> {
        &self.alphabet
    }

    /// Number of states; states are `0..num_states`.
    pub fn num_states(&self) -> usize {
        self.num_states
    }

    /// The single initial state.
    pub fn initial(&self) -> StateId {
        self.initial
    }

    /// Weight `λ(i)` of the initial state, never `0̄`.
    pub fn initial_weight(&self) -> Weight {
        self.initial_weight
    }

    /// Final weight `ρ(q)`; `0̄` for non-final states.
    pub fn final_weight(&self, q: StateId) -> Weight {
        self.finals
            .get(&q)
            .copied()
            .unwrap_or_else(|| self.semiring.zero())
    }

    /// True iff `ρ(q) ≠ 0̄`.
    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.contains_key(&q)
    }

    /// Final states with their weights, ascending by state id.
    pub fn finals(&self) -> impl Iterator<Item = (StateId, Weight)> + '_ {
        self.finals.iter().map(|(&q, &w)| (q, w))
    }

    /// All transitions in insertion order.
    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    /// Indices into [`Self::transitions`] of the transitions leaving `q`, in
    /// insertion order.
    pub fn transitions_from(&self, q: StateId) -> impl Iterator<Item = usize> + '_ {
        self.transitions
            .iter()
            .enumerate()
            .filter(move |(_, t)| t.src == q)
            .map(|(i, _)| i)
    }

    /// Adds a fresh state and returns its id.
    pub fn add_state(&mut self) -> StateId {
        let q = self.num_states;
        self.num_states += 1;
        q
    }

    /// Moves the initial marker to `q` with weight `w`.
    pub fn set_initial(&mut self, q: StateId, w: Weight) -> Result<()> {
        self.check_state(q)?;
        self.check_weight_nonzero(w)?;
        self.initial = q;
        self.initial_weight = w;
        Ok(())
    }

    /// Sets `ρ(q) = w`; passing `0̄` makes `q` non-final.
    pub fn set_final(&mut self, q: StateId, w: Weight) -> Result<()> {
        self.check_state(q)?;
        if !self.semiring.contains(w) {
            return Err(Error::BadWeight {
                semiring: self.semiring,
                token: format!("{w:?}"),
            });
        }
        if self.semiring.is_zero(w) {
            self.finals.remove(&q);
        } else {
            self.finals.insert(q, w);
        }
        Ok(())
    }

    /// Adds a transition. The label arity must match the automaton and the
    /// weight must not be `0̄`; label symbols extend the alphabet.
    pub fn add_transition(
        &mut self,
        src: StateId,
        dst: StateId,
        label: StringTuple,
        weight: Weight,
    ) -> Result<()> {
        self.check_state(src)?;
        self.check_state(dst)?;
        if label.arity() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: label.arity(),
            });
        }
        self.check_weight_nonzero(weight)?;
        for component in label.components() {
            self.alphabet.extend(component.chars());
        }
        self.transitions.push(Transition {
            src,
            dst,
            label,
            weight,
        });
        Ok(())
    }

    /// Merges `other`'s alphabet into this automaton's.
    pub fn absorb_alphabet(&mut self, other: &Wmta) {
        self.alphabet.extend(other.alphabet.iter().copied());
    }

    fn check_state(&self, q: StateId) -> Result<()> {
        if q >= self.num_states {
            return Err(Error::NoSuchState(q));
        }
        Ok(())
    }

    fn check_weight_nonzero(&self, w: Weight) -> Result<()> {
        if !self.semiring.contains(w) {
            return Err(Error::BadWeight {
                semiring: self.semiring,
                token: format!("{w:?}"),
            });
        }
        if self.semiring.is_zero(w) {
            return Err(Error::ZeroWeight);
        }
        Ok(())
    }

    /// Per-state lists of outgoing transition indices.
    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_states];
        for (i, t) in self.transitions.iter().enumerate() {
            adj[t.src].push(i);
        }
        adj
    }

    /// States reachable from the initial state.
    pub fn reachable_states(&self) -> BTreeSet<StateId> {
        let adj = self.adjacency();
        let mut seen = BTreeSet::new();
        let mut stack = vec![self.initial];
        seen.insert(self.initial);
        while let Some(q) = stack.pop() {
            for &i in &adj[q] {
                let d = self.transitions[i].dst;
                if seen.insert(d) {
                    stack.push(d);
                }
            }
        }
        seen
    }

    /// States from which some final state is reachable.
    pub fn coreachable_states(&self) -> BTreeSet<StateId> {
        let mut radj = vec![Vec::new(); self.num_states];
        for t in &self.transitions {
            radj[t.dst].push(t.src);
        }
        let mut seen: BTreeSet<StateId> = self.finals.keys().copied().collect();
        let mut stack: Vec<StateId> = seen.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &p in &radj[q] {
                if seen.insert(p) {
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// True iff the transition graph has no cycle reachable from the initial
    /// state.
    pub fn is_acyclic(&self) -> bool {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            White,
            Grey,
            Black,
        }
        let adj = self.adjacency();
        let mut mark = vec![Mark::White; self.num_states];
        // iterative DFS with an explicit enter/leave stack
        let mut stack = vec![(self.initial, false)];
        while let Some((q, leaving)) = stack.pop() {
            if leaving {
                mark[q] = Mark::Black;
                continue;
            }
            if mark[q] == Mark::Black {
                continue;
            }
            if mark[q] == Mark::Grey {
                continue;
            }
            mark[q] = Mark::Grey;
            stack.push((q, true));
            for &i in &adj[q] {
                let d = self.transitions[i].dst;
                match mark[d] {
                    Mark::Grey => return false,
                    Mark::White => stack.push((d, false)),
                    Mark::Black => {}
                }
            }
        }
        true
    }

    /// Removes states that are unreachable from the initial state or from
    /// which no final state can be reached, together with their transitions.
    /// Surviving states are renumbered densely, preserving relative order.
    /// The weighted relation is unchanged.
    ///
    /// If the initial state itself does not survive, the result is the
    /// canonical empty-relation automaton: one initial state, no finals.
    pub fn trim(&self) -> Wmta {
        let reach = self.reachable_states();
        let core = self.coreachable_states();
        let keep: Vec<StateId> = (0..self.num_states)
            .filter(|q| reach.contains(q) && core.contains(q))
            .collect();

        if !keep.contains(&self.initial) {
            let mut empty = Wmta::new(self.arity, self.semiring);
            empty.initial_weight = self.initial_weight;
            empty.alphabet = self.alphabet.clone();
            return empty;
        }

        let mut renum = vec![usize::MAX; self.num_states];
        for (new, &old) in keep.iter().enumerate() {
            renum[old] = new;
        }

        let mut out = Wmta::new(self.arity, self.semiring);
        out.alphabet = self.alphabet.clone();
        out.num_states = keep.len();
        out.initial = renum[self.initial];
        out.initial_weight = self.initial_weight;
        for (&q, &w) in &self.finals {
            if renum[q] != usize::MAX {
                out.finals.insert(renum[q], w);
            }
        }
        for t in &self.transitions {
            if renum[t.src] != usize::MAX && renum[t.dst] != usize::MAX {
                out.transitions.push(Transition {
                    src: renum[t.src],
                    dst: renum[t.dst],
                    label: t.label.clone(),
                    weight: t.weight,
                });
            }
        }
        out
    }

    /// Checks that `other` shares this automaton's semiring.
    pub(crate) fn check_same_semiring(&self, other: &Wmta) -> Result<()> {
        if self.semiring != other.semiring {
            return Err(Error::SemiringMismatch {
                left: self.semiring,
                right: other.semiring,
            });
        }
        Ok(())
    }

    /// Checks a 1-based tape index against this automaton's arity.
    pub(crate) fn check_tape(&self, tape: usize) -> Result<()> {
        if tape < 1 || tape > self.arity {
            return Err(Error::TapeOutOfRange {
                tape,
                arity: self.arity,
            });
        }
        Ok(())
    }

    /// Longest label component on the given 1-based tape, in symbols.
    pub fn max_label_len_on(&self, tape: usize) -> usize {
        self.transitions
            .iter()
            .map(|t| t.label.tape(tape).chars().count())
            .max()
            .unwrap_or(0)
    }

    /// Longest label component anywhere, in symbols.
    pub fn max_label_len(&self) -> usize {
        (1..=self.arity)
            .map(|t| self.max_label_len_on(t))
            .max()
            .unwrap_or(0)
    }
}
