//! Using a multi-tape automaton as a transducer: any tapes can serve as
//! input, any tapes as output.
//!
//! ```bash
//! cargo run --example transduction
//! ```

use wmta::build::{atom, union};
use wmta::intersect::apply;
use wmta::{Semiring, StringTuple, Weight};

fn main() -> wmta::Result<()> {
    let t = Semiring::Tropical;

    // a 3-tape lexicon: surface form, tag, gloss
    let entries = [
        (["walk", "V", "go-on-foot"], 1.0),
        (["walks", "V", "go-on-foot"], 1.5),
        (["walk", "N", "stroll"], 2.0),
    ];
    let mut lexicon = atom(
        StringTuple::new(entries[0].0),
        Weight::Trop(entries[0].1),
        t,
    )?;
    for (parts, w) in &entries[1..] {
        lexicon = union(
            &lexicon,
            &atom(StringTuple::new(*parts), Weight::Trop(*w), t)?,
        )?;
    }

    // input on tape 1, read tag and gloss off tapes 2 and 3
    let out = apply(
        &lexicon,
        &[1],
        &[2, 3],
        &StringTuple::new(["walk"]),
        t.one(),
        None,
    )?;
    println!("walk ->  (exact: {})", out.successful);
    for (tuple, w) in out.relation.iter() {
        println!("  {tuple} -> {w}");
    }

    // the same automaton used backwards: tag and gloss in, surface out
    let out = apply(
        &lexicon,
        &[2, 3],
        &[1],
        &StringTuple::new(["V", "go-on-foot"]),
        t.one(),
        None,
    )?;
    println!("(V, go-on-foot) ->");
    for (tuple, w) in out.relation.iter() {
        println!("  {tuple} -> {w}");
    }

    // the input weight multiplies into every output
    let out = apply(
        &lexicon,
        &[1],
        &[2],
        &StringTuple::new(["walk"]),
        Weight::Trop(10.0),
        None,
    )?;
    println!("walk with input weight 10 ->");
    for (tuple, w) in out.relation.iter() {
        println!("  {tuple} -> {w}");
    }
    Ok(())
}
