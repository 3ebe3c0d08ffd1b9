//! The automaton text format: parsing, canonical serialization, and the
//! shape of its diagnostics.
//!
//! ```bash
//! cargo run --example text_format
//! ```

use wmta::relation::relation_upto;
use wmta::textfmt::{parse, serialize};

const LEXICON: &str = "\
# surface / tag pairs, tropical costs
wmta 2 tropical
initial 0 0
final 2 0.5
trans 0 1 1 walk <eps>
trans 1 2 0.25 <eps> V
trans 1 2 2 s N
";

fn main() -> wmta::Result<()> {
    let a = parse(LEXICON)?;
    println!(
        "parsed: arity {}, {} states, {} transitions, alphabet {:?}",
        a.arity(),
        a.num_states(),
        a.transitions().len(),
        a.alphabet()
    );

    println!("\nits relation:");
    for (tuple, w) in relation_upto(&a, 4).iter() {
        println!("  {tuple} -> {w}");
    }

    // serialization is canonical; comments are not preserved
    println!("\ncanonical form:\n{}", serialize(&a));
    assert_eq!(serialize(&parse(&serialize(&a))?), serialize(&a));

    // diagnostics carry line numbers
    for broken in [
        "wmta 2 viterbi\n",
        "wmta 2 boolean\ninitial 0 1\ntrans 0 1 1 a\n",
        "wmta 1 tropical\ninitial 0 inf\n",
    ] {
        println!("error: {}", parse(broken).unwrap_err());
    }
    Ok(())
}
