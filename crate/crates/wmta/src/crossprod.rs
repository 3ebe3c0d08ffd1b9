//! The two cross-product constructions.
//!
//! [`cross_pc`] concatenates paths: the left operand runs first on `ε`-padded
//! labels, then an all-`ε` bridge hands over to the right operand. It keeps
//! weights in path order and therefore works over non-commutative semirings
//! too. [`cross_pa`] aligns paths transition by transition, padding the
//! shorter one with virtual `ε`-steps; it produces shorter paths but needs a
//! commutative semiring. Both realize the same weighted relation
//! `R(a) × R(b)`.

use crate::automaton::{StateId, Wmta};
use crate::tuple::StringTuple;
use crate::{Error, Result};
use std::collections::HashMap;

/// Cross product through path concatenation.
///
/// The result contains `a`'s transitions with labels padded to
/// `ℓ(e) ⋈ ε⁽ᵐ⁾`, `b`'s with `ε⁽ⁿ⁾ ⋈ ℓ(e)`, and one `ε⁽ⁿ⁺ᵐ⁾` bridge from
/// every final state of `a` to `b`'s initial state carrying `ρ_a(f) ⊗ λ_b`.
/// Commutativity is not required.
pub fn cross_pc(a: &Wmta, b: &Wmta) -> Result<Wmta> {
    a.check_same_semiring(b)?;
    let k = a.semiring();
    let (n, m) = (a.arity(), b.arity());
    let pad_right = StringTuple::epsilon(m);
    let pad_left = StringTuple::epsilon(n);
    let bridge_label = StringTuple::epsilon(n + m);

    let mut out = Wmta::new(n + m, k);
    while out.num_states() < a.num_states() + b.num_states() {
        out.add_state();
    }
    let off_b = a.num_states();
    out.set_initial(a.initial(), a.initial_weight())?;
    out.absorb_alphabet(a);
    out.absorb_alphabet(b);

    for t in a.transitions() {
        out.add_transition(t.src, t.dst, t.label.pair(&pad_right), t.weight)?;
    }
    for t in b.transitions() {
        out.add_transition(
            off_b + t.src,
            off_b + t.dst,
            pad_left.pair(&t.label),
            t.weight,
        )?;
    }
    for (f, rho) in a.finals() {
        out.add_transition(
            f,
            off_b + b.initial(),
            bridge_label.clone(),
            k.times(rho, b.initial_weight()),
        )?;
    }
    for (q, w) in b.finals() {
        out.set_final(off_b + q, w)?;
    }
    Ok(out)
}

/// A state of the path-alignment product: a pair of operand states where one
/// side may already be exhausted.
type PairKey = (Option<StateId>, Option<StateId>);

/// Cross product through path alignment.
///
/// States are pairs of operand states. Paired moves advance both sides with
/// label `ℓ(e₁) ⋈ ℓ(e₂)` and weight `w(e₁) ⊗ w(e₂)`. When one side reaches a
/// final state, the walk may continue "virtually" on that side: the final
/// weight is consumed exactly once, on the transition that abandons the
/// exhausted side (its state becomes undefined, with final weight `1̄`).
/// Requires a commutative semiring.
pub fn cross_pa(a: &Wmta, b: &Wmta) -> Result<Wmta> {
    a.check_same_semiring(b)?;
    let k = a.semiring();
    if !k.is_commutative() {
        return Err(Error::NotCommutative(k));
    }
    let (n, m) = (a.arity(), b.arity());
    let eps_n = StringTuple::epsilon(n);
    let eps_m = StringTuple::epsilon(m);
    let adj_a = a.adjacency();
    let adj_b = b.adjacency();

    let mut out = Wmta::new(n + m, k);
    out.absorb_alphabet(a);
    out.absorb_alphabet(b);
    out.set_initial(0, k.times(a.initial_weight(), b.initial_weight()))?;

    let mut ids: HashMap<PairKey, StateId> = HashMap::new();
    let start: PairKey = (Some(a.initial()), Some(b.initial()));
    ids.insert(start, 0);
    let mut stack: Vec<PairKey> = vec![start];

    // discovery-order state numbering; state 0 already exists
    fn intern(
        key: PairKey,
        ids: &mut HashMap<PairKey, StateId>,
        out: &mut Wmta,
        stack: &mut Vec<PairKey>,
    ) -> StateId {
        if let Some(&q) = ids.get(&key) {
            return q;
        }
        let q = out.add_state();
        ids.insert(key, q);
        stack.push(key);
        q
    }

    while let Some(key) = stack.pop() {
        let q = ids[&key];
        match key {
            (Some(q1), Some(q2)) => {
                for &i in &adj_a[q1] {
                    let e1 = &a.transitions()[i];
                    for &jj in &adj_b[q2] {
                        let e2 = &b.transitions()[jj];
                        let dst =
                            intern((Some(e1.dst), Some(e2.dst)), &mut ids, &mut out, &mut stack);
                        out.add_transition(
                            q,
                            dst,
                            e1.label.pair(&e2.label),
                            k.times(e1.weight, e2.weight),
                        )?;
                    }
                }
                // virtual continuation past a final state of a
                if a.is_final(q1) {
                    let rho1 = a.final_weight(q1);
                    for &jj in &adj_b[q2] {
                        let e2 = &b.transitions()[jj];
                        let dst = intern((None, Some(e2.dst)), &mut ids, &mut out, &mut stack);
                        out.add_transition(
                            q,
                            dst,
                            eps_n.pair(&e2.label),
                            k.times(rho1, e2.weight),
                        )?;
                    }
                }
                if b.is_final(q2) {
                    let rho2 = b.final_weight(q2);
                    for &i in &adj_a[q1] {
                        let e1 = &a.transitions()[i];
                        let dst = intern((Some(e1.dst), None), &mut ids, &mut out, &mut stack);
                        out.add_transition(
                            q,
                            dst,
                            e1.label.pair(&eps_m),
                            k.times(e1.weight, rho2),
                        )?;
                    }
                }
                if a.is_final(q1) && b.is_final(q2) {
                    out.set_final(q, k.times(a.final_weight(q1), b.final_weight(q2)))?;
                }
            }
            (None, Some(q2)) => {
                for &jj in &adj_b[q2] {
                    let e2 = &b.transitions()[jj];
                    let dst = intern((None, Some(e2.dst)), &mut ids, &mut out, &mut stack);
                    out.add_transition(q, dst, eps_n.pair(&e2.label), e2.weight)?;
                }
                if b.is_final(q2) {
                    out.set_final(q, b.final_weight(q2))?;
                }
            }
            (Some(q1), None) => {
                for &i in &adj_a[q1] {
                    let e1 = &a.transitions()[i];
                    let dst = intern((Some(e1.dst), None), &mut ids, &mut out, &mut stack);
                    out.add_transition(q, dst, e1.label.pair(&eps_m), e1.weight)?;
                }
                if a.is_final(q1) {
                    out.set_final(q, a.final_weight(q1))?;
                }
            }
            (None, None) => unreachable!("both-exhausted pairs are never created"),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{atom, concat};
    use crate::relation::relation_upto;
    use crate::semiring::{Semiring, Weight};

    fn w1(k: Semiring) -> Weight {
        k.one()
    }

    #[test]
    fn two_atoms_pair_into_a_transducer() {
        let k = Semiring::Boolean;
        let a = atom(StringTuple::new(["a"]), w1(k), k).unwrap();
        let x = atom(StringTuple::new(["x"]), w1(k), k).unwrap();
        for product in [cross_pc(&a, &x).unwrap(), cross_pa(&a, &x).unwrap()] {
            let rel = relation_upto(&product, 4);
            assert_eq!(rel.len(), 1);
            assert_eq!(rel.weight(&StringTuple::new(["a", "x"])), Some(w1(k)));
        }
    }

    #[test]
    fn product_with_the_empty_relation_is_empty() {
        let k = Semiring::Boolean;
        let a = atom(StringTuple::new(["a"]), w1(k), k).unwrap();
        let empty = Wmta::new(1, k);
        assert!(relation_upto(&cross_pc(&a, &empty).unwrap(), 5).is_empty());
        assert!(relation_upto(&cross_pa(&a, &empty).unwrap(), 5).is_empty());
    }

    #[test]
    fn tropical_weights_multiply_through_the_pairing() {
        let k = Semiring::Tropical;
        let a = atom(StringTuple::new(["a"]), Weight::Trop(2.0), k).unwrap();
        let x = atom(StringTuple::new(["x"]), Weight::Trop(3.0), k).unwrap();
        for product in [cross_pc(&a, &x).unwrap(), cross_pa(&a, &x).unwrap()] {
            assert_eq!(
                relation_upto(&product, 4).weight(&StringTuple::new(["a", "x"])),
                Some(Weight::Trop(5.0))
            );
        }
    }

    #[test]
    fn unequal_path_lengths_are_padded() {
        let k = Semiring::Boolean;
        let ab = concat(
            &atom(StringTuple::new(["a"]), w1(k), k).unwrap(),
            &atom(StringTuple::new(["b"]), w1(k), k).unwrap(),
        )
        .unwrap();
        let x = atom(StringTuple::new(["x"]), w1(k), k).unwrap();
        let pa = cross_pa(&ab, &x).unwrap();
        let rel = relation_upto(&pa, 6);
        assert_eq!(rel.len(), 1);
        assert_eq!(rel.weight(&StringTuple::new(["ab", "x"])), Some(w1(k)));
    }

    #[test]
    fn pc_and_pa_agree_on_a_mixed_example() {
        let k = Semiring::Natural;
        let left = concat(
            &atom(StringTuple::new(["a", "p"]), Weight::Nat(2), k).unwrap(),
            &atom(StringTuple::new(["b", ""]), Weight::Nat(3), k).unwrap(),
        )
        .unwrap();
        let right = atom(StringTuple::new(["z"]), Weight::Nat(5), k).unwrap();
        let pc = relation_upto(&cross_pc(&left, &right).unwrap(), 8);
        let pa = relation_upto(&cross_pa(&left, &right).unwrap(), 8);
        assert!(pc.eq_in(k, &pa));
        assert_eq!(
            pc.weight(&StringTuple::new(["ab", "p", "z"])),
            Some(Weight::Nat(30))
        );
    }

    #[test]
    fn mixed_semirings_are_rejected() {
        let a = atom(
            StringTuple::new(["a"]),
            Semiring::Boolean.one(),
            Semiring::Boolean,
        )
        .unwrap();
        let b = atom(
            StringTuple::new(["x"]),
            Semiring::Natural.one(),
            Semiring::Natural,
        )
        .unwrap();
        assert!(matches!(
            cross_pc(&a, &b),
            Err(crate::Error::SemiringMismatch { .. })
        ));
        assert!(matches!(
            cross_pa(&a, &b),
            Err(crate::Error::SemiringMismatch { .. })
        ));
    }

    #[test]
    fn empty_tuples_on_both_sides_pair_too() {
        // both operands accept epsilon at their initial state
        let k = Semiring::Natural;
        let mut a = Wmta::new(1, k);
        a.set_initial(0, Weight::Nat(2)).unwrap();
        a.set_final(0, Weight::Nat(3)).unwrap();
        let mut b = Wmta::new(1, k);
        b.set_initial(0, Weight::Nat(5)).unwrap();
        b.set_final(0, Weight::Nat(7)).unwrap();
        for product in [cross_pc(&a, &b).unwrap(), cross_pa(&a, &b).unwrap()] {
            let rel = relation_upto(&product, 2);
            assert_eq!(
                rel.weight(&StringTuple::epsilon(2)),
                Some(Weight::Nat(2 * 3 * 5 * 7))
            );
        }
    }
}
