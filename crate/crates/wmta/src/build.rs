//! Rational constructors and tape surgery.
//!
//! [`atom`], [`union`], [`fn@concat`] and [`star`] are the usual rational
//! operations, built with fresh states and all-`ε` bridge transitions of
//! weight `1̄` where gluing is needed. [`project`] and [`cproject`] rewrite
//! labels tape-wise; [`normalize_labels`] splits long labels so that selected
//! tapes carry at most one symbol per transition, which the single-tape
//! intersection algorithm requires.

use crate::automaton::{StateId, Wmta};
use crate::semiring::{Semiring, Weight};
use crate::tuple::StringTuple;
use crate::{Error, Result};

/// Validates a 1-based projection index list: indices in range, repetition
/// and reordering allowed.
fn check_projection_tapes(arity: usize, tapes: &[usize]) -> Result<()> {
    if tapes.is_empty() {
        return Err(Error::EmptyTapeList);
    }
    for &t in tapes {
        if t < 1 || t > arity {
            return Err(Error::TapeOutOfRange { tape: t, arity });
        }
    }
    Ok(())
}

/// Validates a 1-based complementary-projection index list: in range, no
/// repetition, and at least one tape must survive.
fn check_cprojection_tapes(arity: usize, tapes: &[usize]) -> Result<()> {
    check_projection_tapes(arity, tapes)?;
    for (i, &t) in tapes.iter().enumerate() {
        if tapes[..i].contains(&t) {
            return Err(Error::DuplicateTape(t));
        }
    }
    if tapes.len() >= arity {
        return Err(Error::NoTapeLeft);
    }
    Ok(())
}

/// A two-state automaton accepting exactly `label` with weight `w`.
pub fn atom(label: StringTuple, w: Weight, k: Semiring) -> Result<Wmta> {
    if !k.contains(w) {
        return Err(Error::BadWeight {
            semiring: k,
            token: format!("{w:?}"),
        });
    }
    if k.is_zero(w) {
        return Err(Error::ZeroWeight);
    }
    let mut a = Wmta::new(label.arity(), k);
    let f = a.add_state();
    a.add_transition(0, f, label, w)?;
    a.set_final(f, k.one())?;
    Ok(a)
}

/// Copies `src`'s states and transitions into `dst` starting at `offset`,
/// growing `dst` as needed.
fn graft_at(dst: &mut Wmta, src: &Wmta, offset: StateId) -> StateId {
    while dst.num_states() < offset + src.num_states() {
        dst.add_state();
    }
    for t in src.transitions() {
        dst.add_transition(offset + t.src, offset + t.dst, t.label.clone(), t.weight)
            .expect("grafted transitions are valid");
    }
    dst.absorb_alphabet(src);
    offset
}

/// Appends `src`'s states and transitions to `dst`, returning the id offset.
fn splice(dst: &mut Wmta, src: &Wmta) -> StateId {
    graft_at(dst, src, dst.num_states())
}

/// Union: `R(a) ∪ R(b)` with `⊕`-collection of shared tuples.
pub fn union(a: &Wmta, b: &Wmta) -> Result<Wmta> {
    a.check_same_semiring(b)?;
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch {
            left: a.arity(),
            right: b.arity(),
        });
    }
    let k = a.semiring();
    let eps = StringTuple::epsilon(a.arity());
    // state 0 of the result is a fresh initial state
    let mut out = Wmta::new(a.arity(), k);
    let off_a = splice(&mut out, a);
    let off_b = splice(&mut out, b);
    out.add_transition(0, off_a + a.initial(), eps.clone(), a.initial_weight())?;
    out.add_transition(0, off_b + b.initial(), eps, b.initial_weight())?;
    for (q, w) in a.finals() {
        out.set_final(off_a + q, w)?;
    }
    for (q, w) in b.finals() {
        out.set_final(off_b + q, w)?;
    }
    Ok(out)
}

/// Concatenation: `R(concat(a,b)) = { st ↦ w(s) ⊗ w(t) }`.
pub fn concat(a: &Wmta, b: &Wmta) -> Result<Wmta> {
    a.check_same_semiring(b)?;
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch {
            left: a.arity(),
            right: b.arity(),
        });
    }
    let k = a.semiring();
    let eps = StringTuple::epsilon(a.arity());
    let mut out = Wmta::new(a.arity(), k);
    // a keeps its state ids, b is appended after it
    graft_at(&mut out, a, 0);
    let off_b = splice(&mut out, b);
    out.set_initial(a.initial(), a.initial_weight())?;
    // bridge weight ρ_a(f) ⊗ λ_b keeps the original left-to-right weight order
    for (f, rho) in a.finals() {
        out.add_transition(
            f,
            off_b + b.initial(),
            eps.clone(),
            k.times(rho, b.initial_weight()),
        )?;
    }
    for (q, w) in b.finals() {
        out.set_final(off_b + q, w)?;
    }
    Ok(out)
}

/// Kleene closure: concatenation closure of `R(a)` including `ε⁽ⁿ⁾ ↦ 1̄`.
pub fn star(a: &Wmta) -> Result<Wmta> {
    let k = a.semiring();
    let eps = StringTuple::epsilon(a.arity());
    // state 0 is the fresh hub: initial, final, and the cycle anchor
    let mut out = Wmta::new(a.arity(), k);
    let off = splice(&mut out, a);
    out.set_final(0, k.one())?;
    out.add_transition(0, off + a.initial(), eps.clone(), a.initial_weight())?;
    for (f, rho) in a.finals() {
        out.add_transition(off + f, 0, eps.clone(), rho)?;
    }
    Ok(out)
}

/// Splits transitions so that every listed 1-based tape carries at most one
/// symbol per transition. A transition whose longest listed component has
/// `L > 1` symbols becomes a chain of `L` transitions through fresh states:
/// the first carries the original weight and the full residue of every
/// unlisted tape, the rest carry `1̄`. The weighted relation is unchanged.
pub fn normalize_labels(a: &Wmta, tapes: &[usize]) -> Result<Wmta> {
    check_projection_tapes(a.arity(), tapes)?;
    let k = a.semiring();
    let mut out = Wmta::new(a.arity(), k);
    for _ in 1..a.num_states() {
        out.add_state();
    }
    out.set_initial(a.initial(), a.initial_weight())?;
    for (q, w) in a.finals() {
        out.set_final(q, w)?;
    }
    out.absorb_alphabet(a);

    for t in a.transitions() {
        let span = t.label.max_len_on(tapes);
        if span <= 1 {
            out.add_transition(t.src, t.dst, t.label.clone(), t.weight)?;
            continue;
        }
        let per_tape: Vec<Vec<char>> = t
            .label
            .components()
            .iter()
            .map(|s| s.chars().collect())
            .collect();
        let mut at = t.src;
        for step in 0..span {
            let parts: Vec<String> = (1..=a.arity())
                .map(|tape| {
                    if tapes.contains(&tape) {
                        per_tape[tape - 1]
                            .get(step)
                            .map(|c| c.to_string())
                            .unwrap_or_default()
                    } else if step == 0 {
                        t.label.tape(tape).to_string()
                    } else {
                        String::new()
                    }
                })
                .collect();
            let next = if step + 1 == span {
                t.dst
            } else {
                out.add_state()
            };
            let w = if step == 0 { t.weight } else { k.one() };
            out.add_transition(at, next, StringTuple::new(parts), w)?;
            at = next;
        }
    }
    Ok(out)
}

/// Projection onto the listed 1-based tapes, in the listed order; indices may
/// repeat. Transition weights are untouched; relation-level `⊕`-collection
/// emerges from paths whose projected labels coincide.
pub fn project(a: &Wmta, tapes: &[usize]) -> Result<Wmta> {
    check_projection_tapes(a.arity(), tapes)?;
    let k = a.semiring();
    let mut out = Wmta::new(tapes.len(), k);
    for _ in 1..a.num_states() {
        out.add_state();
    }
    out.set_initial(a.initial(), a.initial_weight())?;
    for (q, w) in a.finals() {
        out.set_final(q, w)?;
    }
    for t in a.transitions() {
        let label = StringTuple::new(tapes.iter().map(|&i| t.label.tape(i).to_string()));
        out.add_transition(t.src, t.dst, label, t.weight)?;
    }
    Ok(out)
}

/// Complementary projection: deletes the listed 1-based tapes from every
/// label, keeping the remaining tapes in their original order.
pub fn cproject(a: &Wmta, tapes: &[usize]) -> Result<Wmta> {
    check_cprojection_tapes(a.arity(), tapes)?;
    let keep: Vec<usize> = (1..=a.arity()).filter(|t| !tapes.contains(t)).collect();
    project(a, &keep)
}
