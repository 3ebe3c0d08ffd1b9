//! The four built-in semirings, their algebra, and the axiom checker.
//!
//! ```bash
//! cargo run --example semirings
//! ```

use wmta::semiring::{check_axioms, Semiring, SemiringOps, Weight, REAL_TOLERANCE};

fn main() {
    for name in ["boolean", "natural", "real", "tropical"] {
        let k = Semiring::by_name(name).unwrap();
        println!(
            "{name}: zero={} one={} idempotent={} k-closed-for={:?}",
            k.zero(),
            k.one(),
            k.is_idempotent(),
            k.k_closed_for()
        );
    }

    // tropical arithmetic: plus is min, times is addition
    let t = Semiring::Tropical;
    println!(
        "\ntropical: 3 (+) 5 = {}   3 (*) 5 = {}",
        t.plus(Weight::Trop(3.0), Weight::Trop(5.0)),
        t.times(Weight::Trop(3.0), Weight::Trop(5.0)),
    );

    // the natural partial order of idempotent semirings: a <= b iff a+b = a
    println!(
        "tropical natural order: 2 below 5? {}   5 below 2? {}",
        t.natural_less(Weight::Trop(2.0), Weight::Trop(5.0))
            .unwrap(),
        t.natural_less(Weight::Trop(5.0), Weight::Trop(2.0))
            .unwrap(),
    );
    println!(
        "natural semiring has no such order: {}",
        Semiring::Natural
            .natural_less(Weight::Nat(1), Weight::Nat(2))
            .unwrap_err()
    );

    // exhaustive axiom check over a small carrier sample
    let samples: Vec<Weight> = [0.0, 0.5, 2.0, f64::INFINITY].map(Weight::Trop).to_vec();
    println!(
        "\ntropical axioms over {:?}: {}",
        samples,
        check_axioms(&t, &samples)
    );

    // a deliberately broken algebra: tropical with zero misdeclared as 1
    struct BrokenZero;
    impl SemiringOps for BrokenZero {
        fn name(&self) -> &str {
            "broken"
        }
        fn plus(&self, a: Weight, b: Weight) -> Weight {
            Semiring::Tropical.plus(a, b)
        }
        fn times(&self, a: Weight, b: Weight) -> Weight {
            Semiring::Tropical.times(a, b)
        }
        fn zero(&self) -> Weight {
            Weight::Trop(1.0)
        }
        fn one(&self) -> Weight {
            Weight::Trop(0.0)
        }
        fn is_commutative(&self) -> bool {
            true
        }
        fn is_idempotent(&self) -> bool {
            true
        }
        fn equality_tolerance(&self) -> f64 {
            REAL_TOLERANCE
        }
        fn contains(&self, w: Weight) -> bool {
            Semiring::Tropical.contains(w)
        }
    }
    println!("broken algebra report:");
    for v in check_axioms(&BrokenZero, &samples).violations {
        println!("  {v}");
    }
}
