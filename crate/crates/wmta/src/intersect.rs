//! Single- and multi-tape intersection, transducer composition, and
//! transduction.
//!
//! [`intersect_cross_eps`] builds only the useful part of a cross product:
//! it pairs transitions whose intersected tape components agree, walking
//! state triples `(q₁, q₂, filter)` where the third coordinate simulates the
//! three-state composition filter that arbitrates `ε`-moves. Without the
//! filter, a run of `ε`s on one side could interleave with a run on the
//! other side in many orders, and every order would contribute its weight
//! again; the filter admits exactly one canonical interleaving. The filter
//! states mean: 0 — last move was paired; 1 — moving through `ε`s of the
//! left operand only; 2 — through `ε`s of the right operand only.
//!
//! The multi-tape intersections reduce to cross product, auto-intersection
//! and complementary projection. `multi_intersect1` composes the elementary
//! steps literally; `multi_intersect2` fuses the cross product with the
//! first auto-intersection via the filter construction, which nails the
//! intersected tapes synchronously instead of first building the full
//! product.

use crate::autoint::auto_intersect;
use crate::automaton::{StateId, Wmta};
use crate::build::{atom, cproject, normalize_labels, project};
use crate::relation::{relation_upto, WeightedRelation};
use crate::semiring::Weight;
use crate::tuple::StringTuple;
use crate::{Error, Result};
use std::collections::HashMap;

/// A state of the filtered product construction.
type TripleKey = (StateId, StateId, u8);

fn check_length1(a: &Wmta, tape: usize, side: &str) -> Result<()> {
    let len = a.max_label_len_on(tape);
    if len > 1 {
        return Err(Error::LabelTooLong {
            side: side.to_string(),
            tape,
            len,
        });
    }
    Ok(())
}

/// The useful part of `a × b` restricted to equal strings on tape `j` of `a`
/// and tape `k` of `b` — as a weighted relation, exactly the auto-intersection
/// `AInt_{j,n+k}(a × b)`.
///
/// Requires equal commutative semirings and labels of length at most 1 on the
/// two intersected tapes ([`normalize_labels`] is the remedy).
pub fn intersect_cross_eps(a: &Wmta, b: &Wmta, j: usize, k: usize) -> Result<Wmta> {
    a.check_same_semiring(b)?;
    let sem = a.semiring();
    if !sem.is_commutative() {
        return Err(Error::NotCommutative(sem));
    }
    a.check_tape(j)?;
    b.check_tape(k)?;
    check_length1(a, j, "left")?;
    check_length1(b, k, "right")?;

    let (n, m) = (a.arity(), b.arity());
    let eps_n = StringTuple::epsilon(n);
    let eps_m = StringTuple::epsilon(m);
    let adj_a = a.adjacency();
    let adj_b = b.adjacency();

    let mut out = Wmta::new(n + m, sem);
    out.absorb_alphabet(a);
    out.absorb_alphabet(b);
    out.set_initial(0, sem.times(a.initial_weight(), b.initial_weight()))?;

    fn intern(
        key: TripleKey,
        a: &Wmta,
        b: &Wmta,
        ids: &mut HashMap<TripleKey, StateId>,
        out: &mut Wmta,
        stack: &mut Vec<TripleKey>,
    ) -> Result<StateId> {
        if let Some(&q) = ids.get(&key) {
            return Ok(q);
        }
        let q = if ids.is_empty() { 0 } else { out.add_state() };
        if a.is_final(key.0) && b.is_final(key.1) {
            let sem = a.semiring();
            out.set_final(q, sem.times(a.final_weight(key.0), b.final_weight(key.1)))?;
        }
        ids.insert(key, q);
        stack.push(key);
        Ok(q)
    }

    let mut ids: HashMap<TripleKey, StateId> = HashMap::new();
    let mut stack: Vec<TripleKey> = Vec::new();
    intern(
        (a.initial(), b.initial(), 0),
        a,
        b,
        &mut ids,
        &mut out,
        &mut stack,
    )?;

    while let Some(key) = stack.pop() {
        let q = ids[&key];
        let (q1, q2, filter) = key;

        // paired moves: equal symbols or a joint epsilon (the latter only
        // from filter state 0)
        for &i in &adj_a[q1] {
            let e1 = &a.transitions()[i];
            let shared = e1.label.tape(j);
            for &jj in &adj_b[q2] {
                let e2 = &b.transitions()[jj];
                if e2.label.tape(k) != shared {
                    continue;
                }
                if shared.is_empty() && filter != 0 {
                    continue;
                }
                let dst = intern((e1.dst, e2.dst, 0), a, b, &mut ids, &mut out, &mut stack)?;
                out.add_transition(
                    q,
                    dst,
                    e1.label.pair(&e2.label),
                    sem.times(e1.weight, e2.weight),
                )?;
            }
        }

        // left-only epsilon moves
        if filter == 0 || filter == 1 {
            for &i in &adj_a[q1] {
                let e1 = &a.transitions()[i];
                if !e1.label.tape(j).is_empty() {
                    continue;
                }
                let dst = intern((e1.dst, q2, 1), a, b, &mut ids, &mut out, &mut stack)?;
                out.add_transition(q, dst, e1.label.pair(&eps_m), e1.weight)?;
            }
        }

        // right-only epsilon moves
        if filter == 0 || filter == 2 {
            for &jj in &adj_b[q2] {
                let e2 = &b.transitions()[jj];
                if !e2.label.tape(k).is_empty() {
                    continue;
                }
                let dst = intern((q1, e2.dst, 2), a, b, &mut ids, &mut out, &mut stack)?;
                out.add_transition(q, dst, eps_n.pair(&e2.label), e2.weight)?;
            }
        }
    }
    Ok(out)
}

/// Single-tape intersection `a ∩_{j,k} b`: the filtered product with the
/// now-redundant tape `n+k` removed.
pub fn single_tape_intersect(a: &Wmta, b: &Wmta, j: usize, k: usize) -> Result<Wmta> {
    let crossed = intersect_cross_eps(a, b, j, k)?;
    cproject(&crossed, &[a.arity() + k])
}

/// Composition of two transducers: `R = { (s₁, v₂) | ∃ shared middle }`,
/// weights collected over all middles.
///
/// Both operands must already carry at most one symbol per transition on the
/// joined tapes (tape 2 of `t1`, tape 1 of `t2`).
pub fn compose(t1: &Wmta, t2: &Wmta) -> Result<Wmta> {
    if t1.arity() != 2 || t2.arity() != 2 {
        return Err(Error::ArityMismatch {
            left: t1.arity(),
            right: t2.arity(),
        });
    }
    // CProj_2(t1 ∩_{2,1} t2): drop the shared middle tape
    let joined = single_tape_intersect(t1, t2, 2, 1)?;
    cproject(&joined, &[2])
}

fn check_pairs(a: &Wmta, b: &Wmta, pairs: &[(usize, usize)]) -> Result<()> {
    if pairs.is_empty() {
        return Err(Error::EmptyTapeList);
    }
    for &(j, k) in pairs {
        a.check_tape(j)?;
        b.check_tape(k)?;
    }
    for (i, &(_, k)) in pairs.iter().enumerate() {
        if pairs[..i].iter().any(|&(_, k2)| k2 == k) {
            return Err(Error::DuplicateTape(k));
        }
    }
    Ok(())
}

/// Multi-tape intersection by the literal elementary-operation pipeline:
/// cross product, one auto-intersection per tape pair, then complementary
/// projection of the intersected right-hand tapes. The flag is the
/// conjunction of the auto-intersection success flags; on `false` the
/// relation is only an under-approximation.
pub fn multi_intersect1(a: &Wmta, b: &Wmta, pairs: &[(usize, usize)]) -> Result<(Wmta, bool)> {
    check_pairs(a, b, pairs)?;
    let n = a.arity();
    let mut cur = crate::crossprod::cross_pa(a, b)?.trim();
    let mut ok = true;
    for &(j, k) in pairs {
        let outcome = auto_intersect(&cur, j, n + k)?;
        ok &= outcome.successful;
        cur = outcome.automaton.trim();
    }
    let mut drop: Vec<usize> = pairs.iter().map(|&(_, k)| n + k).collect();
    drop.sort_unstable();
    Ok((cproject(&cur, &drop)?, ok))
}

/// Multi-tape intersection with the fused first step: one tape pair is
/// resolved by [`intersect_cross_eps`] while the cross product is built, the
/// remaining pairs by auto-intersection.
///
/// A pair whose tapes carry at most one symbol per transition on both sides
/// is moved to the front (first such pair wins); if there is none, both
/// operands are label-normalized on the first pair's tapes to create one.
pub fn multi_intersect2(a: &Wmta, b: &Wmta, pairs: &[(usize, usize)]) -> Result<(Wmta, bool)> {
    check_pairs(a, b, pairs)?;
    let n = a.arity();

    let qualifying = pairs
        .iter()
        .position(|&(j, k)| a.max_label_len_on(j) <= 1 && b.max_label_len_on(k) <= 1);

    let (a_norm, b_norm, lead);
    match qualifying {
        Some(i) => {
            a_norm = a.clone();
            b_norm = b.clone();
            lead = i;
        }
        None => {
            a_norm = normalize_labels(a, &[pairs[0].0])?;
            b_norm = normalize_labels(b, &[pairs[0].1])?;
            lead = 0;
        }
    }

    let (j0, k0) = pairs[lead];
    let mut cur = intersect_cross_eps(&a_norm, &b_norm, j0, k0)?.trim();
    let mut ok = true;
    for (i, &(j, k)) in pairs.iter().enumerate() {
        if i == lead {
            continue;
        }
        let outcome = auto_intersect(&cur, j, n + k)?;
        ok &= outcome.successful;
        cur = outcome.automaton.trim();
    }
    let mut drop: Vec<usize> = pairs.iter().map(|&(_, k)| n + k).collect();
    drop.sort_unstable();
    Ok((cproject(&cur, &drop)?, ok))
}

/// Result of applying an automaton to an input tuple: the bounded output
/// relation plus the success flag of the underlying intersections. A `false`
/// flag means the output may be missing tuples.
#[derive(Clone, Debug)]
pub struct ApplyOutcome {
    /// Output relation, enumerated up to the chosen path-length bound.
    pub relation: WeightedRelation,
    /// Conjunction of the auto-intersection success flags.
    pub successful: bool,
    /// The path-length bound actually used.
    pub max_len: usize,
}

/// Uses `a` as a transducer with input tapes `input_tapes` and output tapes
/// `output_tapes` (both 1-based, neither necessarily consecutive nor
/// disjoint). The input tuple becomes a single-path automaton with weight
/// `w_in`, the intersection is taken pair-wise against it, and the output
/// tapes are projected out of the result.
///
/// With `max_len = None` the enumeration bound is derived as
/// `states × (max label length + 1)` when the trimmed result is acyclic;
/// cyclic results need an explicit bound.
pub fn apply(
    a: &Wmta,
    input_tapes: &[usize],
    output_tapes: &[usize],
    input: &StringTuple,
    w_in: Weight,
    max_len: Option<usize>,
) -> Result<ApplyOutcome> {
    if input.arity() != input_tapes.len() {
        return Err(Error::ArityMismatch {
            left: input_tapes.len(),
            right: input.arity(),
        });
    }
    for &t in output_tapes {
        a.check_tape(t)?;
    }
    let input_fst = atom(input.clone(), w_in, a.semiring())?;
    let pairs: Vec<(usize, usize)> = input_tapes
        .iter()
        .enumerate()
        .map(|(i, &j)| (j, i + 1))
        .collect();
    let (intersected, successful) = multi_intersect2(a, &input_fst, &pairs)?;
    let out = project(&intersected, output_tapes)?.trim();

    let bound = match max_len {
        Some(l) => l,
        None if out.is_acyclic() => out.num_states() * (out.max_label_len() + 1),
        None => return Err(Error::BoundRequired),
    };
    Ok(ApplyOutcome {
        relation: relation_upto(&out, bound),
        successful,
        max_len: bound,
    })
}
