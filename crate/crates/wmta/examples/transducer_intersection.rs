//! Intersecting two transducers tape-wise — an operation classical
//! composition cannot express — on an instance with exactly one solution.
//!
//! ```bash
//! cargo run --example transducer_intersection
//! ```

use wmta::build::{atom, concat, star};
use wmta::intersect::{multi_intersect1, multi_intersect2};
use wmta::relation::relation_upto;
use wmta::{Semiring, StringTuple, Wmta};

fn chain(k: Semiring, parts: &[[&str; 2]]) -> wmta::Result<Wmta> {
    let mut out = atom(StringTuple::new(parts[0]), k.one(), k)?;
    for p in &parts[1..] {
        out = concat(&out, &atom(StringTuple::new(*p), k.one(), k)?)?;
    }
    Ok(out)
}

fn main() -> wmta::Result<()> {
    let k = Semiring::Boolean;

    // <a,eps><b,A> (<c,B><a,eps><b,C>)* <eps,A><eps,B><eps,C><c,eps><eps,A>
    let left = {
        let head = chain(k, &[["a", ""], ["b", "A"]])?;
        let cycle = star(&chain(k, &[["c", "B"], ["a", ""], ["b", "C"]])?)?;
        let tail = chain(k, &[["", "A"], ["", "B"], ["", "C"], ["c", ""], ["", "A"]])?;
        concat(&head, &concat(&cycle, &tail)?)?
    };
    // <eps,A> (<a,B><b,eps><eps,C><c,A>)*
    let right = {
        let head = atom(StringTuple::new(["", "A"]), k.one(), k)?;
        let cycle = star(&chain(k, &[["a", "B"], ["b", ""], ["", "C"], ["c", "A"]])?)?;
        concat(&head, &cycle)?
    };

    println!("left operand spells (paths up to 30):");
    for (t, _) in relation_upto(&left, 30).iter() {
        println!("  {t}");
    }
    println!("right operand spells:");
    for (t, _) in relation_upto(&right, 30).iter() {
        println!("  {t}");
    }

    // intersect both tapes pair-wise; only one pairing agrees on both
    let (fused, exact) = multi_intersect2(&left, &right, &[(1, 1), (2, 2)])?;
    let fused = fused.trim();
    println!("\nfused pipeline (exact: {exact}):");
    for (t, _) in relation_upto(&fused, fused.num_states()).iter() {
        println!("  {t}");
    }

    // the elementary pipeline — full cross product, two auto-intersections,
    // complementary projection — finds the same relation
    let (elementary, _) = multi_intersect1(&left, &right, &[(1, 1), (2, 2)])?;
    let elementary = elementary.trim();
    assert!(relation_upto(&elementary, elementary.num_states())
        .eq_in(k, &relation_upto(&fused, fused.num_states())));
    println!("elementary pipeline agrees");
    Ok(())
}
