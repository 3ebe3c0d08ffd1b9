//! The two cross-product constructions and why there are two.
//!
//! ```bash
//! cargo run --example cross_product
//! ```

use wmta::build::{atom, concat};
use wmta::crossprod::{cross_pa, cross_pc};
use wmta::relation::relation_upto;
use wmta::textfmt::serialize;
use wmta::{Semiring, StringTuple, Weight};

fn main() -> wmta::Result<()> {
    let k = Semiring::Tropical;

    // a two-transition path crossed with a single atom
    let left = concat(
        &atom(StringTuple::new(["a"]), Weight::Trop(1.0), k)?,
        &atom(StringTuple::new(["b"]), Weight::Trop(2.0), k)?,
    )?;
    let right = atom(StringTuple::new(["x"]), Weight::Trop(4.0), k)?;

    // path concatenation: left runs first on epsilon-padded labels, one
    // all-epsilon bridge, then right
    let pc = cross_pc(&left, &right)?;
    println!(
        "path concatenation ({} states):\n{}",
        pc.num_states(),
        serialize(&pc)
    );

    // path alignment: a product construction that pairs transitions and
    // pads the shorter path with virtual epsilon steps
    let pa = cross_pa(&left, &right)?;
    println!(
        "path alignment ({} states):\n{}",
        pa.num_states(),
        serialize(&pa)
    );

    let rel_pc = relation_upto(&pc, 8);
    let rel_pa = relation_upto(&pa, 8);
    println!("both constructions realize the same weighted relation:");
    for (tuple, w) in rel_pc.iter() {
        println!("  {tuple} -> {w}");
    }
    assert!(rel_pc.eq_in(k, &rel_pa));

    // alignment produces shorter paths; concatenation never reorders
    // weights and therefore also works over non-commutative semirings
    println!(
        "longest useful path: pc {} vs pa {} transitions",
        pc.num_states() - 1,
        pa.num_states() - 1
    );
    Ok(())
}
