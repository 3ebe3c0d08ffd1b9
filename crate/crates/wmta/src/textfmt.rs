//! The line-oriented automaton text format.
//!
//! ```text
//! # any full-line comment
//! wmta <arity> <semiring-name>
//! initial <state> <weight>
//! final <state> <weight>
//! trans <src> <dst> <weight> <f1> ... <fN>
//! ```
//!
//! Exactly one `initial` line is required. Each transition carries one field
//! per tape; the literal `<eps>` stands for the empty string. Label tokens
//! must not contain whitespace and must not start with `<`. Weights are
//! written in the header semiring (`inf` is the tropical zero and therefore
//! never a legal transition or final weight). Serialization is canonical:
//! initial first, finals ascending, transitions sorted by source, target and
//! label.

use crate::automaton::Wmta;
use crate::semiring::{Semiring, Weight};
use crate::tuple::StringTuple;
use crate::{Error, Result};
use std::fmt::Write as _;

/// Epsilon sentinel used in transition fields and relation listings.
pub const EPS_TOKEN: &str = "<eps>";

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::ParseFormat {
        line,
        msg: msg.into(),
    }
}

fn parse_state(token: &str, line: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| err(line, format!("bad state id `{token}`")))
}

fn parse_field(token: &str, line: usize) -> Result<String> {
    if token == EPS_TOKEN {
        return Ok(String::new());
    }
    if token.starts_with('<') {
        return Err(err(
            line,
            format!("label field `{token}` must not start with `<` (only `{EPS_TOKEN}` may)"),
        ));
    }
    Ok(token.to_string())
}

/// Parses the text format. Diagnostics carry 1-based line numbers.
pub fn parse(text: &str) -> Result<Wmta> {
    struct Raw {
        arity: usize,
        semiring: Semiring,
        initial: Option<(usize, Weight, usize)>,
        finals: Vec<(usize, Weight, usize)>,
        trans: Vec<(usize, usize, Weight, StringTuple)>,
    }
    let mut raw: Option<Raw> = None;

    for (idx, full_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = full_line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match (tokens[0], &mut raw) {
            ("wmta", Some(_)) => return Err(err(line, "duplicate header")),
            ("wmta", none) => {
                if tokens.len() != 3 {
                    return Err(err(line, "header must be `wmta <arity> <semiring>`"));
                }
                let arity: usize = tokens[1]
                    .parse()
                    .ok()
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| err(line, format!("bad arity `{}`", tokens[1])))?;
                let semiring = Semiring::by_name(tokens[2])
                    .map_err(|_| err(line, format!("unknown semiring `{}`", tokens[2])))?;
                *none = Some(Raw {
                    arity,
                    semiring,
                    initial: None,
                    finals: Vec::new(),
                    trans: Vec::new(),
                });
            }
            (_, None) => return Err(err(line, "expected `wmta <arity> <semiring>` header first")),
            ("initial", Some(raw)) => {
                if tokens.len() != 3 {
                    return Err(err(line, "expected `initial <state> <weight>`"));
                }
                if raw.initial.is_some() {
                    return Err(err(line, "duplicate initial line; exactly one is allowed"));
                }
                let q = parse_state(tokens[1], line)?;
                let w = raw
                    .semiring
                    .parse_weight(tokens[2])
                    .map_err(|e| err(line, e.to_string()))?;
                if raw.semiring.is_zero(w) {
                    return Err(err(line, "initial weight must not be the semiring zero"));
                }
                raw.initial = Some((q, w, line));
            }
            ("final", Some(raw)) => {
                if tokens.len() != 3 {
                    return Err(err(line, "expected `final <state> <weight>`"));
                }
                let q = parse_state(tokens[1], line)?;
                let w = raw
                    .semiring
                    .parse_weight(tokens[2])
                    .map_err(|e| err(line, e.to_string()))?;
                if raw.semiring.is_zero(w) {
                    return Err(err(line, "final weight must not be the semiring zero"));
                }
                if raw.finals.iter().any(|&(f, _, _)| f == q) {
                    return Err(err(line, format!("duplicate final weight for state {q}")));
                }
                raw.finals.push((q, w, line));
            }
            ("trans", Some(raw)) => {
                if tokens.len() != 4 + raw.arity {
                    return Err(err(
                        line,
                        format!(
                            "expected {} label fields, found {}",
                            raw.arity,
                            tokens.len().saturating_sub(4)
                        ),
                    ));
                }
                let src = parse_state(tokens[1], line)?;
                let dst = parse_state(tokens[2], line)?;
                let w = raw
                    .semiring
                    .parse_weight(tokens[3])
                    .map_err(|e| err(line, e.to_string()))?;
                if raw.semiring.is_zero(w) {
                    return Err(err(line, "transition weight must not be the semiring zero"));
                }
                let fields: Vec<String> = tokens[4..]
                    .iter()
                    .map(|t| parse_field(t, line))
                    .collect::<Result<_>>()?;
                raw.trans.push((src, dst, w, StringTuple::new(fields)));
            }
            (other, Some(_)) => {
                return Err(err(line, format!("unknown directive `{other}`")));
            }
        }
    }

    let raw = raw.ok_or_else(|| err(0, "empty input; expected a `wmta` header"))?;
    let (init_q, init_w, _) = raw
        .initial
        .ok_or_else(|| err(0, "missing `initial` line"))?;

    let max_state = raw
        .finals
        .iter()
        .map(|&(q, _, _)| q)
        .chain(raw.trans.iter().flat_map(|&(s, d, _, _)| [s, d]))
        .chain([init_q])
        .max()
        .unwrap_or(0);

    let mut a = Wmta::new(raw.arity, raw.semiring);
    while a.num_states() <= max_state {
        a.add_state();
    }
    a.set_initial(init_q, init_w)?;
    for (q, w, line) in raw.finals {
        a.set_final(q, w).map_err(|e| err(line, e.to_string()))?;
    }
    for (src, dst, w, label) in raw.trans {
        a.add_transition(src, dst, label, w)?;
    }
    Ok(a)
}

fn field(s: &str) -> &str {
    if s.is_empty() {
        EPS_TOKEN
    } else {
        s
    }
}

/// Serializes to the canonical text form; `parse(serialize(a))` reproduces
/// the relation and the state count.
pub fn serialize(a: &Wmta) -> String {
    let mut out = String::new();
    writeln!(out, "wmta {} {}", a.arity(), a.semiring().name()).unwrap();
    writeln!(out, "initial {} {}", a.initial(), a.initial_weight()).unwrap();
    for (q, w) in a.finals() {
        writeln!(out, "final {q} {w}").unwrap();
    }
    let mut trans: Vec<_> = a.transitions().iter().collect();
    trans.sort_by(|x, y| {
        (x.src, x.dst, &x.label)
            .cmp(&(y.src, y.dst, &y.label))
            .then_with(|| x.weight.to_string().cmp(&y.weight.to_string()))
    });
    for t in trans {
        write!(out, "trans {} {} {}", t.src, t.dst, t.weight).unwrap();
        for part in t.label.components() {
            write!(out, " {}", field(part)).unwrap();
        }
        out.push('\n');
    }
    out
}
