//! Auto-intersection: restricting a relation to tuples whose tapes `j` and
//! `k` carry equal strings.
//!
//! The construction walks the automaton while tracking the pair of leftover
//! strings — the suffix of tape `j` not yet matched on tape `k` and vice
//! versa. At every constructed state at most one leftover is non-empty;
//! two non-empty leftovers mean the tapes have already diverged and the walk
//! stops. The delay (length difference) between the leftovers is hard-capped
//! by a precomputed limit `δ_max2`, which makes the construction finite even
//! when the intersected relation is not rational. A second, smaller limit
//! `δ_max` is used afterwards to decide whether the construction is exact:
//! if some coreachable state exceeds it, cycles would have to unroll forever
//! and the result is only an under-approximation.

use crate::automaton::{StateId, Wmta};
use crate::relation::WeightedRelation;
use crate::tuple::{delay, lcp};
use crate::{Error, Result};
use std::collections::HashMap;

/// Delay bounds compiled from one traversal of the input automaton.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DelayLimits {
    /// Maximal delay at any visited state (the initial state contributes 0).
    pub hat_max: i64,
    /// Minimal delay at any visited state.
    pub hat_min: i64,
    /// Maximal absolute cycle delay.
    pub hat_cyc: u64,
    /// Delay needed to match any two cycles:
    /// `hat_cyc · max(1, hat_cyc − 1)`.
    pub d_cyc: u64,
    /// Bound respected by every exact construction:
    /// `max(d_cyc, hat_max − hat_min)`.
    pub d_max: u64,
    /// Imposed construction bound: `d_max + d_cyc`.
    pub d_max2: u64,
}

/// Construction bookkeeping for one result state: the source state in the
/// input automaton and the leftover strings of tapes `j` and `k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeftoverKey {
    /// The input-automaton state this result state simulates.
    pub source: StateId,
    /// Leftover of tape `j` unmatched on tape `k`, and vice versa. At least
    /// one side is always empty.
    pub leftover: (String, String),
}

impl LeftoverKey {
    /// Delay of the leftover pair, `|s| − |u|`.
    pub fn delay(&self) -> i64 {
        delay(&self.leftover.0, &self.leftover.1)
    }
}

/// Outcome of [`auto_intersect`].
#[derive(Clone, Debug)]
pub struct AutoIntOutcome {
    /// The constructed automaton (untrimmed; all states are reachable).
    pub automaton: Wmta,
    /// The delay limits the construction ran under.
    pub limits: DelayLimits,
    /// True iff no coreachable state exceeds `d_max`, i.e. the result is
    /// exactly the auto-intersection of the input's relation.
    pub successful: bool,
    /// Per result-state bookkeeping, indexed by state id.
    pub state_info: Vec<LeftoverKey>,
}

fn check_tape_pair(a: &Wmta, j: usize, k: usize) -> Result<()> {
    a.check_tape(j)?;
    a.check_tape(k)?;
    if j == k {
        return Err(Error::EqualTapes(j));
    }
    Ok(())
}

/// Compiles the delay limits for intersecting tapes `j` and `k` (1-based) of
/// `a`.
///
/// One depth-first traversal visits every reachable state once and records
/// the per-state delay of the traversal path; edges closing a cycle on the
/// current path contribute cycle-delay samples, edges to finished states
/// contribute nothing.
pub fn compile_limits(a: &Wmta, j: usize, k: usize) -> Result<DelayLimits> {
    check_tape_pair(a, j, k)?;
    let adj = a.adjacency();
    let mut delta: Vec<Option<i64>> = vec![None; a.num_states()];
    let mut on_path = vec![false; a.num_states()];
    let mut hat_max: i64 = 0;
    let mut hat_min: i64 = 0;
    let mut hat_cyc: u64 = 0;

    delta[a.initial()] = Some(0);
    on_path[a.initial()] = true;
    let mut frames: Vec<(StateId, usize)> = vec![(a.initial(), 0)];
    while let Some(frame) = frames.last_mut() {
        let (q, pos) = *frame;
        if pos == adj[q].len() {
            on_path[q] = false;
            frames.pop();
            continue;
        }
        frame.1 += 1;
        let t = &a.transitions()[adj[q][pos]];
        let step = delay(t.label.tape(j), t.label.tape(k));
        let arriving = delta[q].expect("source visited") + step;
        match delta[t.dst] {
            None => {
                delta[t.dst] = Some(arriving);
                hat_max = hat_max.max(arriving);
                hat_min = hat_min.min(arriving);
                on_path[t.dst] = true;
                frames.push((t.dst, 0));
            }
            Some(first_visit) => {
                if on_path[t.dst] {
                    hat_cyc = hat_cyc.max((arriving - first_visit).unsigned_abs());
                }
            }
        }
    }

    let d_cyc = hat_cyc * hat_cyc.saturating_sub(1).max(1);
    let d_max = d_cyc.max((hat_max - hat_min) as u64);
    Ok(DelayLimits {
        hat_max,
        hat_min,
        hat_cyc,
        d_cyc,
        d_max,
        d_max2: d_max + d_cyc,
    })
}

/// Attempts to construct the auto-intersection of `a` on tapes `j` and `k`
/// (1-based).
///
/// Each result state is keyed by an input state plus the leftover pair; a
/// step extends the leftovers with the transition's tape-`j` and tape-`k`
/// components, strips their longest common prefix, and survives only if one
/// leftover is empty and the delay stays within `d_max2`. A state is final
/// iff its source state is final and both leftovers are empty.
///
/// Regardless of the success flag, the result's relation is a weighted
/// subset of the input's relation filtered to equal `j`/`k` tapes; when
/// `successful` it is exactly that filter.
pub fn auto_intersect(a: &Wmta, j: usize, k: usize) -> Result<AutoIntOutcome> {
    let limits = compile_limits(a, j, k)?;
    let sem = a.semiring();
    let adj = a.adjacency();

    let mut out = Wmta::new(a.arity(), sem);
    out.absorb_alphabet(a);
    out.set_initial(0, a.initial_weight())?;

    type Key = (StateId, String, String);

    fn intern(
        a: &Wmta,
        key: Key,
        ids: &mut HashMap<Key, StateId>,
        out: &mut Wmta,
        info: &mut Vec<LeftoverKey>,
        stack: &mut Vec<Key>,
    ) -> Result<StateId> {
        if let Some(&q) = ids.get(&key) {
            return Ok(q);
        }
        let q = if info.is_empty() { 0 } else { out.add_state() };
        if a.is_final(key.0) && key.1.is_empty() && key.2.is_empty() {
            out.set_final(q, a.final_weight(key.0))?;
        }
        info.push(LeftoverKey {
            source: key.0,
            leftover: (key.1.clone(), key.2.clone()),
        });
        stack.push(key.clone());
        ids.insert(key, q);
        Ok(q)
    }

    let mut ids: HashMap<Key, StateId> = HashMap::new();
    let mut info: Vec<LeftoverKey> = Vec::new();
    let mut stack: Vec<Key> = Vec::new();
    intern(
        a,
        (a.initial(), String::new(), String::new()),
        &mut ids,
        &mut out,
        &mut info,
        &mut stack,
    )?;

    while let Some(key) = stack.pop() {
        let q = ids[&key];
        let (q1, ref s, ref u) = key;
        for &ti in &adj[q1] {
            let t = &a.transitions()[ti];
            let grown_s = format!("{s}{}", t.label.tape(j));
            let grown_u = format!("{u}{}", t.label.tape(k));
            let common = lcp(&grown_s, &grown_u).len();
            let rest_s = grown_s[common..].to_string();
            let rest_u = grown_u[common..].to_string();
            if !rest_s.is_empty() && !rest_u.is_empty() {
                continue; // leftovers incompatible, the tapes diverged
            }
            if delay(&rest_s, &rest_u).unsigned_abs() > limits.d_max2 {
                continue;
            }
            let dst = intern(
                a,
                (t.dst, rest_s, rest_u),
                &mut ids,
                &mut out,
                &mut info,
                &mut stack,
            )?;
            out.add_transition(q, dst, t.label.clone(), t.weight)?;
        }
    }

    let coreachable = out.coreachable_states();
    let successful = !info
        .iter()
        .enumerate()
        .any(|(q, key)| key.delay().unsigned_abs() > limits.d_max && coreachable.contains(&q));

    Ok(AutoIntOutcome {
        automaton: out,
        limits,
        successful,
        state_info: info,
    })
}

/// Relation-level auto-intersection: keeps exactly the tuples with equal
/// strings on 1-based tapes `j` and `k`, weights unmodified. This is the
/// brute-force oracle the automaton construction is checked against.
pub fn filter_relation_equal_tapes(r: &WeightedRelation, j: usize, k: usize) -> WeightedRelation {
    r.filter_equal_tapes(j, k)
}
