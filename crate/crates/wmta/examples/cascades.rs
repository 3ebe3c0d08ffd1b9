//! Transduction cascades that preserve intermediate results.
//!
//! A classical cascade forgets everything but the last output. Multi-tape
//! stages can keep earlier tapes alive, so a later stage may re-check them;
//! this example's final stage re-checks the string that entered the
//! pipeline, which no classical cascade of the same stages can do.
//!
//! ```bash
//! cargo run --example cascades
//! ```

use wmta::build::{atom, cproject, project, star, union};
use wmta::cascade::{consult_first_cascade, merge_cascade, run_classical, run_wmta_cascade};
use wmta::intersect::multi_intersect2;
use wmta::relation::relation_upto;
use wmta::{Semiring, StringTuple, Wmta};

fn main() -> wmta::Result<()> {
    let k = Semiring::Boolean;
    let one = k.one();
    let sym = |a: &str, b: &str| atom(StringTuple::new([a, b]), one, k);

    // stage 1: identity over {a,b}*
    let s1 = star(&union(&sym("a", "a")?, &sym("b", "b")?)?)?;
    // stage 2: rewrite every symbol to a
    let s2 = star(&union(&sym("a", "a")?, &sym("b", "a")?)?)?;
    // stage 3 (three tapes): the stage-1 tape and the stage-2 output must
    // both be all-a, symbol by symbol
    let s3 = star(&atom(StringTuple::new(["a", "a", "a"]), one, k)?)?;

    let spec = consult_first_cascade(vec![s1.clone(), s2.clone(), s3.clone()])?;
    // the best a classical cascade can do: stage 3 with its checking tape
    // dropped
    let classical_stages = [s1, s2, cproject(&s3, &[1])?];

    let acceptor = |s: &str| -> wmta::Result<Wmta> {
        if s.is_empty() {
            let mut a = Wmta::new(1, k);
            a.set_final(0, one)?;
            Ok(a)
        } else {
            atom(StringTuple::new([s]), one, k)
        }
    };

    println!("input    classical    multi-tape");
    for input in ["", "a", "b", "aa", "ab", "bb"] {
        let classical = run_classical(&classical_stages, &acceptor(input)?)?;
        let (wmta_out, ok) = run_wmta_cascade(&spec, &acceptor(input)?)?;
        assert!(ok);
        let shown = |a: &Wmta| {
            let t = a.trim();
            if relation_upto(&t, t.num_states()).is_empty() {
                "rejected"
            } else {
                "accepted"
            }
        };
        println!("{input:<8} {:<12} {}", shown(&classical), shown(&wmta_out));
    }

    // the whole cascade as one 2-tape automaton; running through it agrees
    // with the stepwise run
    let (merged, ok) = merge_cascade(&spec)?;
    assert!(ok);
    println!(
        "\nmerged cascade: {} states, arity {}",
        merged.num_states(),
        merged.arity()
    );
    for input in ["a", "b", "aa"] {
        let (joined, _) = multi_intersect2(&acceptor(input)?, &merged, &[(1, 1)])?;
        let out = project(&joined, &[2])?.trim();
        let stepwise = run_wmta_cascade(&spec, &acceptor(input)?)?.0.trim();
        assert!(relation_upto(&out, out.num_states())
            .eq_in(k, &relation_upto(&stepwise, stepwise.num_states())));
        println!("merged({input}) = stepwise({input})");
    }
    Ok(())
}
