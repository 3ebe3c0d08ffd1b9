//! Building multi-tape relations from atoms with union, concatenation,
//! Kleene closure, projection and complementary projection.
//!
//! ```bash
//! cargo run --example building_relations
//! ```

use wmta::build::{atom, concat, cproject, project, star};
use wmta::relation::relation_upto;
use wmta::{Semiring, StringTuple};

fn main() -> wmta::Result<()> {
    let k = Semiring::Boolean;
    let one = k.one();

    // <a,x,eps> <b,y,a>* <eps,z,b> over three tapes: unrolling the cycle k
    // times spells the tuple <a b^k, x y^k z, a^k b>
    let head = atom(StringTuple::new(["a", "x", ""]), one, k)?;
    let cycle = star(&atom(StringTuple::new(["b", "y", "a"]), one, k)?)?;
    let tail = atom(StringTuple::new(["", "z", "b"]), one, k)?;
    let a = concat(&head, &concat(&cycle, &tail)?)?;

    println!("three-tape cycle relation, paths up to 12 transitions:");
    for (tuple, _) in relation_upto(&a, 12).iter() {
        println!("  {tuple}");
    }

    // projection can reorder and duplicate tapes
    let reversed = project(&a, &[3, 2, 1])?;
    println!("\ntapes reversed:");
    for (tuple, _) in relation_upto(&reversed, 12).iter() {
        println!("  {tuple}");
    }

    // complementary projection removes tapes
    let without_middle = cproject(&a, &[2])?;
    println!("\nmiddle tape removed:");
    for (tuple, _) in relation_upto(&without_middle, 12).iter() {
        println!("  {tuple}");
    }

    // weights collect when projected tuples merge: two tropical paths for
    // the same first tape
    let t = Semiring::Tropical;
    let cheap = atom(StringTuple::new(["a", "x"]), wmta::Weight::Trop(2.0), t)?;
    let costly = atom(StringTuple::new(["a", "y"]), wmta::Weight::Trop(3.0), t)?;
    let both = wmta::build::union(&cheap, &costly)?;
    let first_tape = project(&both, &[1])?;
    println!("\ntropical projection collects with min:");
    for (tuple, w) in relation_upto(&first_tape, 4).iter() {
        println!("  {tuple} -> {w}");
    }
    Ok(())
}
