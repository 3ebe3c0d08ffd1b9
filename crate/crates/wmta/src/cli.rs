//! The `wmta` command-line surface.
//!
//! Every subcommand reads automata in the [`crate::textfmt`] format from
//! `-i FILE` (or stdin when omitted; binary operations take `-i` twice) and
//! writes results to `-o FILE` (or stdout). Outputs are deterministic:
//! identical inputs and flags produce byte-identical output.
//!
//! Exit codes: `0` success, `2` usage or parse error, `3` the operation
//! completed but reported `successful: false` (the auto-intersection
//! family); the result is still written in that case.

use crate::autoint::{auto_intersect, AutoIntOutcome};
use crate::automaton::Wmta;
use crate::build::{cproject, project};
use crate::cascade::{merge_cascade, run_wmta_cascade, CascadeSpec, CascadeStage};
use crate::crossprod::{cross_pa, cross_pc};
use crate::intersect::{apply, compose, multi_intersect1, multi_intersect2};
use crate::relation::{relation_upto, WeightedRelation};
use crate::semiring::Semiring;
use crate::textfmt::{parse, serialize, EPS_TOKEN};
use crate::tuple::StringTuple;
use crate::{Error, Result};
use clap::{Parser, Subcommand, ValueEnum};
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

/// Command-line interface of the `wmta` binary.
#[derive(Parser, Debug)]
#[command(name = "wmta", version, about = "weighted multi-tape automata toolbox")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CrossMethod {
    /// Path concatenation (no commutativity needed, longer paths).
    Pc,
    /// Path alignment (product construction, commutative semirings).
    Pa,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IntersectMethod {
    /// Cross product, then one auto-intersection per pair.
    #[value(name = "1")]
    Elementary,
    /// Filtered product for the first pair, auto-intersection for the rest.
    #[value(name = "2")]
    Fused,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Summarize an automaton (arity, semiring, sizes, alphabet)
    Info {
        #[arg(short = 'i', value_name = "FILE")]
        inputs: Vec<PathBuf>,
    },
    /// List the bounded weighted relation, one tuple per line
    Enumerate {
        /// Maximal number of transitions per path
        #[arg(long, value_name = "L")]
        max_len: usize,
        #[arg(short = 'i', value_name = "FILE")]
        inputs: Vec<PathBuf>,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Cross product of two automata (arities add up)
    Cross {
        /// Construction to use
        #[arg(long, value_enum, default_value = "pa")]
        method: CrossMethod,
        #[arg(short = 'i', value_name = "FILE")]
        inputs: Vec<PathBuf>,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Keep the listed tapes, in order; repetition allowed
    Project {
        /// Comma-separated 1-based tape list, e.g. `3,2,1`
        #[arg(long, value_delimiter = ',', value_name = "TAPES")]
        tapes: Vec<usize>,
        #[arg(short = 'i', value_name = "FILE")]
        inputs: Vec<PathBuf>,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Remove the listed tapes, keeping the rest in order
    Cproject {
        /// Comma-separated 1-based tape list
        #[arg(long, value_delimiter = ',', value_name = "TAPES")]
        tapes: Vec<usize>,
        #[arg(short = 'i', value_name = "FILE")]
        inputs: Vec<PathBuf>,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Restrict to tuples with equal strings on two tapes
    Autoint {
        /// First tape (1-based)
        #[arg(short)]
        j: usize,
        /// Second tape (1-based)
        #[arg(short)]
        k: usize,
        #[arg(short = 'i', value_name = "FILE")]
        inputs: Vec<PathBuf>,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Intersect tapes of two automata pair-wise
    Intersect {
        /// Pairs `j:k` joined by commas, e.g. `1:1,2:2`
        #[arg(long, value_name = "PAIRS")]
        pairs: String,
        #[arg(long, value_enum, default_value = "2")]
        method: IntersectMethod,
        #[arg(short = 'i', value_name = "FILE")]
        inputs: Vec<PathBuf>,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Compose two transducers (output tape of the first joins the input
    /// tape of the second)
    Compose {
        #[arg(short = 'i', value_name = "FILE")]
        inputs: Vec<PathBuf>,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Transduce an input tuple and list the output relation
    Apply {
        /// 1-based input tapes, comma-separated
        #[arg(long, value_delimiter = ',', value_name = "TAPES")]
        in_tapes: Vec<usize>,
        /// 1-based output tapes, comma-separated
        #[arg(long, value_delimiter = ',', value_name = "TAPES")]
        out_tapes: Vec<usize>,
        /// Input tuple, components comma-separated, `<eps>` for empty
        #[arg(long, value_name = "TUPLE")]
        tuple: String,
        /// Input weight in the automaton's semiring (default `1̄`)
        #[arg(long, value_name = "W")]
        weight: Option<String>,
        /// Enumeration bound; required when the result is cyclic
        #[arg(long, value_name = "L")]
        max_len: Option<usize>,
        #[arg(short = 'i', value_name = "FILE")]
        inputs: Vec<PathBuf>,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Run (or merge) a transduction cascade described by a config file
    Cascade {
        /// Config file: one `stage <path> intersect <j:k[,j:k]>
        /// project <t[,t]>` line per stage
        #[arg(long, value_name = "FILE")]
        config: PathBuf,
        /// 1-tape input automaton (required unless --merge)
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
        /// Merge the cascade into a single 2-tape automaton instead of
        /// running it
        #[arg(long)]
        merge: bool,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Run the built-in golden checks
    Selftest,
}

fn read_input(inputs: &[PathBuf], want: usize) -> Result<Vec<Wmta>> {
    if inputs.len() > want {
        return Err(Error::CascadeWiring(format!(
            "expected at most {want} -i inputs, got {}",
            inputs.len()
        )));
    }
    if want > 1 && inputs.len() != want {
        return Err(Error::CascadeWiring(format!(
            "this operation needs {want} -i inputs"
        )));
    }
    let mut out = Vec::with_capacity(want);
    if inputs.is_empty() {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| Error::Io {
                context: "reading stdin".into(),
                source,
            })?;
        out.push(parse(&text)?);
    } else {
        for path in inputs {
            out.push(read_wmta(path)?);
        }
    }
    Ok(out)
}

fn read_wmta(path: &Path) -> Result<Wmta> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        context: format!("reading {}", path.display()),
        source,
    })?;
    parse(&text)
}

fn write_output(output: &Option<PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|source| Error::Io {
            context: format!("writing {}", path.display()),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Renders a relation in the enumerate format: tab-separated tape strings
/// (`<eps>` for the empty string) followed by the weight, one tuple per
/// line, in tuple order.
pub fn render_relation(rel: &WeightedRelation) -> String {
    let mut out = String::new();
    for (tuple, w) in rel.iter() {
        for part in tuple.components() {
            if part.is_empty() {
                out.push_str(EPS_TOKEN);
            } else {
                out.push_str(part);
            }
            out.push('\t');
        }
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}

fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>> {
    let mut pairs = Vec::new();
    for chunk in text.split(',') {
        let (j, k) = chunk.split_once(':').ok_or_else(|| {
            Error::CascadeWiring(format!("bad tape pair `{chunk}`; expected `j:k`"))
        })?;
        let j: usize = j
            .trim()
            .parse()
            .map_err(|_| Error::CascadeWiring(format!("bad tape index `{j}`")))?;
        let k: usize = k
            .trim()
            .parse()
            .map_err(|_| Error::CascadeWiring(format!("bad tape index `{k}`")))?;
        pairs.push((j, k));
    }
    Ok(pairs)
}

fn parse_tuple(text: &str) -> StringTuple {
    StringTuple::new(text.split(',').map(|part| {
        if part == EPS_TOKEN {
            String::new()
        } else {
            part.to_string()
        }
    }))
}

/// Parses a cascade config. Stage paths are resolved relative to the config
/// file's directory.
pub fn parse_cascade_config(text: &str, base: &Path) -> Result<CascadeSpec> {
    let mut stages = Vec::new();
    for (idx, full_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = full_line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let bad = |msg: String| Error::ParseFormat { line, msg };
        if tokens.len() != 6
            || tokens[0] != "stage"
            || tokens[2] != "intersect"
            || tokens[4] != "project"
        {
            return Err(bad(
                "expected `stage <path> intersect <j:k[,j:k]> project <t[,t]>`".into(),
            ));
        }
        let wmta = read_wmta(&base.join(tokens[1]))?;
        let pairs = parse_pairs(tokens[3]).map_err(|e| bad(e.to_string()))?;
        let mut tapes = Vec::new();
        for t in tokens[5].split(',') {
            tapes.push(
                t.parse::<usize>()
                    .map_err(|_| bad(format!("bad tape index `{t}`")))?,
            );
        }
        stages.push(CascadeStage {
            wmta,
            pairs,
            project: tapes,
        });
    }
    let spec = CascadeSpec { stages };
    spec.validate()?;
    Ok(spec)
}

fn report_autoint(outcome: &AutoIntOutcome) {
    eprintln!("successful: {}", outcome.successful);
    let l = outcome.limits;
    eprintln!("max_state_delay: {}", l.hat_max);
    eprintln!("min_state_delay: {}", l.hat_min);
    eprintln!("max_cycle_delay: {}", l.hat_cyc);
    eprintln!("cycle_match_delay: {}", l.d_cyc);
    eprintln!("delay_limit: {}", l.d_max);
    eprintln!("construction_limit: {}", l.d_max2);
}

fn info_text(a: &Wmta) -> String {
    let alphabet: String = a
        .alphabet()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    format!(
        "arity: {}\nsemiring: {}\nstates: {}\ninitial: {}\ninitial_weight: {}\n\
         final_states: {}\ntransitions: {}\nacyclic: {}\nalphabet: {}\n",
        a.arity(),
        a.semiring().name(),
        a.num_states(),
        a.initial(),
        a.initial_weight(),
        a.finals().count(),
        a.transitions().len(),
        a.is_acyclic(),
        alphabet,
    )
}

fn dispatch(command: Command) -> Result<u8> {
    match command {
        Command::Info { inputs } => {
            let a = read_input(&inputs, 1)?.remove(0);
            print!("{}", info_text(&a));
            Ok(0)
        }
        Command::Enumerate {
            max_len,
            inputs,
            output,
        } => {
            let a = read_input(&inputs, 1)?.remove(0);
            write_output(&output, &render_relation(&relation_upto(&a, max_len)))?;
            Ok(0)
        }
        Command::Cross {
            method,
            inputs,
            output,
        } => {
            let ops = read_input(&inputs, 2)?;
            let result = match method {
                CrossMethod::Pc => cross_pc(&ops[0], &ops[1])?,
                CrossMethod::Pa => cross_pa(&ops[0], &ops[1])?,
            };
            write_output(&output, &serialize(&result))?;
            Ok(0)
        }
        Command::Project {
            tapes,
            inputs,
            output,
        } => {
            let a = read_input(&inputs, 1)?.remove(0);
            write_output(&output, &serialize(&project(&a, &tapes)?))?;
            Ok(0)
        }
        Command::Cproject {
            tapes,
            inputs,
            output,
        } => {
            let a = read_input(&inputs, 1)?.remove(0);
            write_output(&output, &serialize(&cproject(&a, &tapes)?))?;
            Ok(0)
        }
        Command::Autoint {
            j,
            k,
            inputs,
            output,
        } => {
            let a = read_input(&inputs, 1)?.remove(0);
            let outcome = auto_intersect(&a, j, k)?;
            report_autoint(&outcome);
            write_output(&output, &serialize(&outcome.automaton))?;
            Ok(if outcome.successful { 0 } else { 3 })
        }
        Command::Intersect {
            pairs,
            method,
            inputs,
            output,
        } => {
            let ops = read_input(&inputs, 2)?;
            let pairs = parse_pairs(&pairs)?;
            let (result, successful) = match method {
                IntersectMethod::Elementary => multi_intersect1(&ops[0], &ops[1], &pairs)?,
                IntersectMethod::Fused => multi_intersect2(&ops[0], &ops[1], &pairs)?,
            };
            eprintln!("successful: {successful}");
            write_output(&output, &serialize(&result))?;
            Ok(if successful { 0 } else { 3 })
        }
        Command::Compose { inputs, output } => {
            let ops = read_input(&inputs, 2)?;
            write_output(&output, &serialize(&compose(&ops[0], &ops[1])?))?;
            Ok(0)
        }
        Command::Apply {
            in_tapes,
            out_tapes,
            tuple,
            weight,
            max_len,
            inputs,
            output,
        } => {
            let a = read_input(&inputs, 1)?.remove(0);
            let w = match weight {
                Some(token) => a.semiring().parse_weight(&token)?,
                None => a.semiring().one(),
            };
            let outcome = apply(&a, &in_tapes, &out_tapes, &parse_tuple(&tuple), w, max_len)?;
            eprintln!("successful: {}", outcome.successful);
            eprintln!("max_len: {}", outcome.max_len);
            write_output(&output, &render_relation(&outcome.relation))?;
            Ok(if outcome.successful { 0 } else { 3 })
        }
        Command::Cascade {
            config,
            input,
            merge,
            output,
        } => {
            let text = fs::read_to_string(&config).map_err(|source| Error::Io {
                context: format!("reading {}", config.display()),
                source,
            })?;
            let base = config.parent().unwrap_or_else(|| Path::new("."));
            let spec = parse_cascade_config(&text, base)?;
            if merge {
                let (merged, successful) = merge_cascade(&spec)?;
                eprintln!("successful: {successful}");
                write_output(&output, &serialize(&merged))?;
                return Ok(if successful { 0 } else { 3 });
            }
            let input = input.ok_or_else(|| {
                Error::CascadeWiring("--input is required unless --merge is given".into())
            })?;
            let acceptor = read_wmta(&input)?;
            let (result, successful) = run_wmta_cascade(&spec, &acceptor)?;
            eprintln!("successful: {successful}");
            write_output(&output, &serialize(&result))?;
            Ok(if successful { 0 } else { 3 })
        }
        Command::Selftest => {
            let failures = selftest();
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}

/// Runs the parsed command line, returning the process exit code.
pub fn run(cli: Cli) -> u8 {
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

mod golden {
    //! The built-in golden instances used by `wmta selftest`.

    use super::*;
    use crate::build::{atom, concat, star};

    pub fn bool_atom(parts: &[&str]) -> Wmta {
        let k = Semiring::Boolean;
        atom(
            StringTuple::new(parts.iter().map(|s| s.to_string())),
            k.one(),
            k,
        )
        .unwrap()
    }

    pub fn chain(parts: &[&[&str]]) -> Wmta {
        let mut out = bool_atom(parts[0]);
        for p in &parts[1..] {
            out = concat(&out, &bool_atom(p)).unwrap();
        }
        out
    }

    /// `<a,x,eps><b,y,a>*<eps,z,b>`: one tuple matches tapes 1 and 3.
    pub fn bounded_delay_example() -> Wmta {
        concat(
            &bool_atom(&["a", "x", ""]),
            &concat(
                &star(&bool_atom(&["b", "y", "a"])).unwrap(),
                &bool_atom(&["", "z", "b"]),
            )
            .unwrap(),
        )
        .unwrap()
    }

    /// The `{<a^k, a, x^k y>}` relation, cycle split over two states.
    pub fn pruned_states_example() -> Wmta {
        let k = Semiring::Boolean;
        let mut a = Wmta::new(3, k);
        let q1 = a.add_state();
        let q2 = a.add_state();
        a.add_transition(0, q1, StringTuple::new(["a", "", ""]), k.one())
            .unwrap();
        a.add_transition(q1, 0, StringTuple::new(["", "", "x"]), k.one())
            .unwrap();
        a.add_transition(0, q2, StringTuple::new(["", "a", "y"]), k.one())
            .unwrap();
        a.set_final(q2, k.one()).unwrap();
        a
    }

    /// The `{<a^k a, a a^h, x^k y z^h>}` relation, both cycles split.
    pub fn unbounded_delay_example() -> Wmta {
        let k = Semiring::Boolean;
        let mut a = Wmta::new(3, k);
        let q1 = a.add_state();
        let q2 = a.add_state();
        let q3 = a.add_state();
        a.add_transition(0, q1, StringTuple::new(["a", "", ""]), k.one())
            .unwrap();
        a.add_transition(q1, 0, StringTuple::new(["", "", "x"]), k.one())
            .unwrap();
        a.add_transition(0, q2, StringTuple::new(["a", "a", "y"]), k.one())
            .unwrap();
        a.add_transition(q2, q3, StringTuple::new(["", "a", ""]), k.one())
            .unwrap();
        a.add_transition(q3, q2, StringTuple::new(["", "", "z"]), k.one())
            .unwrap();
        a.set_final(q2, k.one()).unwrap();
        a
    }

    /// Left operand of the chained-transducer-intersection instance.
    pub fn chained_intersection_left() -> Wmta {
        let head = chain(&[&["a", ""], &["b", "A"]]);
        let cycle = star(&chain(&[&["c", "B"], &["a", ""], &["b", "C"]])).unwrap();
        let tail = chain(&[&["", "A"], &["", "B"], &["", "C"], &["c", ""], &["", "A"]]);
        concat(&head, &concat(&cycle, &tail).unwrap()).unwrap()
    }

    /// Right operand of the chained-transducer-intersection instance.
    pub fn chained_intersection_right() -> Wmta {
        let head = bool_atom(&["", "A"]);
        let cycle = star(&chain(&[&["a", "B"], &["b", ""], &["", "C"], &["c", "A"]])).unwrap();
        concat(&head, &cycle).unwrap()
    }
}

fn selftest() -> usize {
    let mut failures = 0;
    let mut check = |name: &str, pass: bool| {
        println!("{} - {name}", if pass { "ok" } else { "FAILED" });
        if !pass {
            failures += 1;
        }
    };

    {
        let a = golden::bounded_delay_example();
        let out = auto_intersect(&a, 1, 3).expect("valid tapes");
        let rel = relation_upto(&out.automaton.trim(), 10);
        check(
            "auto-intersection with bounded delay finds the single tuple",
            out.successful
                && out.limits.d_max == 1
                && out.limits.d_max2 == 1
                && rel.len() == 1
                && rel.weight(&StringTuple::new(["ab", "xyz", "ab"])).is_some(),
        );
    }

    {
        let a = golden::pruned_states_example();
        let out = auto_intersect(&a, 1, 2).expect("valid tapes");
        let core = out.automaton.coreachable_states();
        let overs: Vec<usize> = (0..out.automaton.num_states())
            .filter(|&q| out.state_info[q].delay().unsigned_abs() > out.limits.d_max)
            .collect();
        let rel = relation_upto(&out.automaton.trim(), 10);
        check(
            "over-limit states exist but none is coreachable",
            out.successful
                && out.limits.d_max == 2
                && out.limits.d_max2 == 3
                && !overs.is_empty()
                && overs.iter().all(|q| !core.contains(q))
                && rel.len() == 1
                && rel.weight(&StringTuple::new(["a", "a", "xy"])).is_some(),
        );
    }

    {
        let a = golden::unbounded_delay_example();
        let out = auto_intersect(&a, 1, 2).expect("valid tapes");
        let rel = relation_upto(&out.automaton.trim(), 20);
        let all_expected = (0..4).all(|n| {
            rel.weight(&StringTuple::new([
                format!("{}a", "a".repeat(n)),
                format!("a{}", "a".repeat(n)),
                format!("{}y{}", "x".repeat(n), "z".repeat(n)),
            ]))
            .is_some()
        });
        check(
            "unbounded delay is detected and the result truncated",
            !out.successful && rel.len() == 4 && all_expected,
        );
    }

    {
        let left = golden::chained_intersection_left();
        let right = golden::chained_intersection_right();
        let solution = StringTuple::new(["abcabc", "ABCABCA"]);
        let (r2, ok2) = multi_intersect2(&left, &right, &[(1, 1), (2, 2)]).expect("valid pairs");
        let r2 = r2.trim();
        let rel2 = relation_upto(&r2, r2.num_states());
        let (r1, _) = multi_intersect1(&left, &right, &[(1, 1), (2, 2)]).expect("valid pairs");
        let r1 = r1.trim();
        let rel1 = relation_upto(&r1, r1.num_states());
        check(
            "transducer intersection pipelines agree on the chained instance",
            ok2 && r2.is_acyclic()
                && r1.is_acyclic()
                && rel2.len() == 1
                && rel2.weight(&solution).is_some()
                && rel1.eq_in(Semiring::Boolean, &rel2),
        );
    }

    {
        let a = crate::build::union(
            &golden::bool_atom(&["aa", ""]),
            &golden::bool_atom(&["", "aaa"]),
        )
        .and_then(|u| crate::build::star(&u))
        .expect("constructible");
        let limits = crate::autoint::compile_limits(&a, 1, 2).expect("valid tapes");
        check(
            "cycle delay limits follow the match formula",
            limits.hat_cyc == 3 && limits.d_cyc == 6,
        );
    }

    failures
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_is_green() {
        assert_eq!(selftest(), 0);
    }

    #[test]
    fn pair_and_tuple_flags_parse() {
        assert_eq!(parse_pairs("1:1,2:2").unwrap(), vec![(1, 1), (2, 2)]);
        assert!(parse_pairs("1-1").is_err());
        assert_eq!(parse_tuple("ab,<eps>,c"), StringTuple::new(["ab", "", "c"]));
    }

    #[test]
    fn relation_rendering_is_sorted_and_tabbed() {
        let k = Semiring::Boolean;
        let mut rel = WeightedRelation::empty(2);
        rel.collect(k, StringTuple::new(["b", ""]), k.one());
        rel.collect(k, StringTuple::new(["a", "x"]), k.one());
        assert_eq!(render_relation(&rel), "a\tx\t1\nb\t<eps>\t1\n");
    }
}
