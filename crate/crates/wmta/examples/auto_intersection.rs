//! Auto-intersection on the three characteristic inputs: bounded delay,
//! bounded delay with pruned dead ends, and unbounded delay.
//!
//! ```bash
//! cargo run --example auto_intersection
//! ```

use wmta::autoint::auto_intersect;
use wmta::build::{atom, concat, star};
use wmta::relation::relation_upto;
use wmta::{Semiring, StringTuple, Wmta};

fn report(name: &str, a: &Wmta, j: usize, k: usize, max_len: usize) {
    let out = auto_intersect(a, j, k).unwrap();
    println!("{name}");
    println!(
        "  delay_limit={} construction_limit={} successful={}",
        out.limits.d_max, out.limits.d_max2, out.successful
    );
    let core = out.automaton.coreachable_states();
    for q in 0..out.automaton.num_states() {
        let info = &out.state_info[q];
        if info.delay().unsigned_abs() > out.limits.d_max {
            println!(
                "  state {q}: leftover ({:?},{:?}) exceeds the delay limit; coreachable: {}",
                info.leftover.0,
                info.leftover.1,
                core.contains(&q)
            );
        }
    }
    for (tuple, _) in relation_upto(&out.automaton.trim(), max_len).iter() {
        println!("  keeps {tuple}");
    }
    println!();
}

fn main() -> wmta::Result<()> {
    let k = Semiring::Boolean;
    let one = k.one();

    // tapes 1 and 3 agree for exactly one cycle unrolling; the construction
    // stops by itself because further leftovers are incompatible
    let bounded = concat(
        &atom(StringTuple::new(["a", "x", ""]), one, k)?,
        &concat(
            &star(&atom(StringTuple::new(["b", "y", "a"]), one, k)?)?,
            &atom(StringTuple::new(["", "z", "b"]), one, k)?,
        )?,
    )?;
    report(
        "cycle with one matching unrolling (tapes 1,3):",
        &bounded,
        1,
        3,
        10,
    );

    // the hard delay cap kicks in, but everything beyond the soft limit is
    // a dead end, so the construction is still exact
    let mut pruned = Wmta::new(3, k);
    let q1 = pruned.add_state();
    let q2 = pruned.add_state();
    pruned.add_transition(0, q1, StringTuple::new(["a", "", ""]), one)?;
    pruned.add_transition(q1, 0, StringTuple::new(["", "", "x"]), one)?;
    pruned.add_transition(0, q2, StringTuple::new(["", "a", "y"]), one)?;
    pruned.set_final(q2, one)?;
    report(
        "pumping cycle against a single symbol (tapes 1,2):",
        &pruned,
        1,
        2,
        10,
    );

    // two independent cycles whose matches grow without bound: the result
    // is not rational, the construction truncates and says so
    let mut unbounded = Wmta::new(3, k);
    let q1 = unbounded.add_state();
    let q2 = unbounded.add_state();
    let q3 = unbounded.add_state();
    unbounded.add_transition(0, q1, StringTuple::new(["a", "", ""]), one)?;
    unbounded.add_transition(q1, 0, StringTuple::new(["", "", "x"]), one)?;
    unbounded.add_transition(0, q2, StringTuple::new(["a", "a", "y"]), one)?;
    unbounded.add_transition(q2, q3, StringTuple::new(["", "a", ""]), one)?;
    unbounded.add_transition(q3, q2, StringTuple::new(["", "", "z"]), one)?;
    unbounded.set_final(q2, one)?;
    report("two pumping cycles (tapes 1,2):", &unbounded, 1, 2, 20);
    Ok(())
}
