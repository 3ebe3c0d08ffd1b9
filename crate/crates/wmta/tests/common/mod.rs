//! Seeded random automata for the oracle-equivalence suites.
#![allow(dead_code)] // each test target compiles its own copy

use rand::rngs::StdRng;
use rand::Rng;
use wmta::{Semiring, StringTuple, Weight, Wmta};

/// Size caps for generated automata.
#[derive(Clone, Copy, Debug)]
pub struct GenConfig {
    pub max_states: usize,
    pub max_transitions: usize,
    /// Labels get 0..=this many symbols per tape, drawn from {a, b}.
    pub max_label_len: usize,
    /// Transitions only go from lower to higher state ids.
    pub acyclic: bool,
}

impl GenConfig {
    pub fn small(acyclic: bool) -> Self {
        GenConfig {
            max_states: 3,
            max_transitions: 5,
            max_label_len: 2,
            acyclic,
        }
    }

    pub fn spec_caps(acyclic: bool) -> Self {
        GenConfig {
            max_states: 4,
            max_transitions: 6,
            max_label_len: 2,
            acyclic,
        }
    }
}

pub fn random_weight(rng: &mut StdRng, k: Semiring) -> Weight {
    match k {
        Semiring::Boolean => Weight::Bool(true),
        Semiring::Natural => Weight::Nat(rng.gen_range(1..=3)),
        Semiring::Real => Weight::Real([0.5, 1.0, 1.5, 2.0][rng.gen_range(0..4)]),
        Semiring::Tropical => Weight::Trop([0.0, 0.5, 1.0, 2.0][rng.gen_range(0..4)]),
    }
}

fn random_label(rng: &mut StdRng, arity: usize, max_len: usize) -> StringTuple {
    StringTuple::new((0..arity).map(|_| {
        let len = rng.gen_range(0..=max_len);
        (0..len)
            .map(|_| if rng.gen_bool(0.5) { 'a' } else { 'b' })
            .collect::<String>()
    }))
}

/// A random automaton within the caps. Every state is mentioned by the
/// initial marker, a final weight, or a transition, so the text round trip
/// preserves the state count.
pub fn random_wmta(rng: &mut StdRng, k: Semiring, arity: usize, cfg: GenConfig) -> Wmta {
    let states = rng.gen_range(1..=cfg.max_states);
    let mut a = Wmta::new(arity, k);
    for _ in 1..states {
        a.add_state();
    }
    a.set_initial(0, random_weight(rng, k)).unwrap();

    let transitions = rng.gen_range(0..=cfg.max_transitions);
    for _ in 0..transitions {
        let (src, dst) = if cfg.acyclic {
            if states < 2 {
                break;
            }
            let src = rng.gen_range(0..states - 1);
            (src, rng.gen_range(src + 1..states))
        } else {
            (rng.gen_range(0..states), rng.gen_range(0..states))
        };
        a.add_transition(
            src,
            dst,
            random_label(rng, arity, cfg.max_label_len),
            random_weight(rng, k),
        )
        .unwrap();
    }

    for q in 0..states {
        if rng.gen_bool(0.4) {
            a.set_final(q, random_weight(rng, k)).unwrap();
        }
    }

    // mention trailing orphan states so serialization keeps the state count
    for q in 1..states {
        let mentioned = a.is_final(q) || a.transitions().iter().any(|t| t.src == q || t.dst == q);
        if !mentioned {
            a.set_final(q, k.one()).unwrap();
        }
    }
    a
}

pub const SEMIRINGS: [Semiring; 4] = [
    Semiring::Boolean,
    Semiring::Natural,
    Semiring::Real,
    Semiring::Tropical,
];
