//! Weighted multi-tape finite-state automata over generic semirings.
//!
//! A weighted multi-tape automaton (WMTA) generalizes acceptors and
//! transducers: every transition carries an `n`-tuple of strings and a
//! weight from a semiring. This crate provides the data model and the
//! operations that make multi-tape automata worth having:
//!
//! - the four standard commutative semirings plus an axiom checker
//!   ([`semiring`]),
//! - string-tuple algebra, path semantics, and a brute-force bounded
//!   relation oracle ([`mod@tuple`], [`paths`], [`relation`]),
//! - rational constructors, projection, complementary projection, and label
//!   normalization ([`build`]),
//! - cross product by path concatenation or path alignment ([`crossprod`]),
//! - auto-intersection with computed delay limits, able to report when a
//!   non-rational result was truncated ([`autoint`]),
//! - single- and multi-tape intersection with a simulated composition
//!   `ε`-filter, transducer composition, and transduction ([`intersect`]),
//! - transduction cascades that preserve intermediate results, runnable
//!   stepwise or merged into a single automaton ([`cascade`]),
//! - a line-oriented text format and the `wmta` command-line tool over all
//!   of the above ([`textfmt`], [`cli`]).
//!
//! The quickest way in is the `examples/` directory — one runnable program
//! per capability:
//!
//! ```bash
//! cargo run --example semirings
//! cargo run --example building_relations
//! cargo run --example cross_product
//! cargo run --example auto_intersection
//! cargo run --example transducer_intersection
//! cargo run --example transduction
//! cargo run --example cascades
//! cargo run --example text_format
//! ```
//!
//! A minimal taste — intersect two transducers tape-wise:
//!
//! ```
//! use wmta::{Semiring, StringTuple};
//! use wmta::build::atom;
//! use wmta::intersect::multi_intersect2;
//! use wmta::relation::relation_upto;
//!
//! let k = Semiring::Boolean;
//! let t1 = atom(StringTuple::new(["ab", "xy"]), k.one(), k)?;
//! let t2 = atom(StringTuple::new(["ab", "xy"]), k.one(), k)?;
//! let (both, exact) = multi_intersect2(&t1, &t2, &[(1, 1), (2, 2)])?;
//! assert!(exact);
//! assert_eq!(relation_upto(&both, 8).len(), 1);
//! # Ok::<(), wmta::Error>(())
//! ```
//!
//! Tapes are numbered from 1 throughout the public API, matching the text
//! format and the command-line flags.

pub mod autoint;
pub mod automaton;
pub mod build;
pub mod cascade;
pub mod cli;
pub mod crossprod;
pub mod intersect;
pub mod paths;
pub mod relation;
pub mod semiring;
pub mod textfmt;
pub mod tuple;

pub use automaton::{StateId, Transition, Wmta};
pub use relation::WeightedRelation;
pub use semiring::{Semiring, Weight};
pub use tuple::StringTuple;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A semiring name that is not one of the four built-ins.
    #[error("unknown semiring `{0}` (expected boolean, natural, real or tropical)")]
    UnknownSemiring(String),

    /// A weight token that does not parse in the given semiring.
    #[error("`{token}` cannot be read as a {semiring} weight")]
    BadWeight {
        /// The semiring the weight was parsed for.
        semiring: Semiring,
        /// The offending token.
        token: String,
    },

    /// The natural partial order exists only on idempotent semirings.
    #[error("the {0} semiring is not idempotent and has no natural partial order")]
    NotIdempotent(Semiring),

    /// The operation requires a commutative semiring.
    #[error("the {0} semiring is not commutative, which this operation requires")]
    NotCommutative(Semiring),

    /// Two operands carry different semirings.
    #[error("semiring mismatch: {left} vs {right}")]
    SemiringMismatch {
        /// Left operand's semiring.
        left: Semiring,
        /// Right operand's semiring.
        right: Semiring,
    },

    /// Two arities that were required to be equal differ.
    #[error("arity mismatch: expected {left}, found {right}")]
    ArityMismatch {
        /// Expected arity.
        left: usize,
        /// Actual arity.
        right: usize,
    },

    /// A 1-based tape index outside `1..=arity`.
    #[error("tape {tape} is out of range for arity {arity} (tapes are numbered from 1)")]
    TapeOutOfRange {
        /// The offending index.
        tape: usize,
        /// The arity it was checked against.
        arity: usize,
    },

    /// A tape list that must not repeat indices repeated one.
    #[error("tape {0} occurs more than once")]
    DuplicateTape(usize),

    /// Auto-intersection needs two distinct tapes.
    #[error("auto-intersection needs two distinct tapes, got {0} twice")]
    EqualTapes(usize),

    /// A tape list that must select something was empty.
    #[error("an empty tape list selects nothing")]
    EmptyTapeList,

    /// Complementary projection would remove every tape.
    #[error("cannot remove all tapes; at least one must survive")]
    NoTapeLeft,

    /// A state id outside the automaton.
    #[error("no such state: {0}")]
    NoSuchState(usize),

    /// `0̄` where a non-zero weight is required (initial, final, transition).
    #[error("the semiring zero cannot weight an initial state, final state or transition")]
    ZeroWeight,

    /// A transition label longer than one symbol on a tape that the filter
    /// construction intersects.
    #[error(
        "the {side} operand has a label of length {len} on intersected tape {tape}; \
         labels there may carry at most one symbol (normalize_labels is the remedy)"
    )]
    LabelTooLong {
        /// Which operand violated the condition.
        side: String,
        /// The intersected tape.
        tape: usize,
        /// The offending label length.
        len: usize,
    },

    /// A path that is not a successful path of the automaton it was used on.
    #[error("invalid path: {0}")]
    InvalidPath(&'static str),

    /// Text-format diagnostics, with a 1-based line number (0 for
    /// end-of-input problems).
    #[error("line {line}: {msg}")]
    ParseFormat {
        /// 1-based line number.
        line: usize,
        /// What went wrong.
        msg: String,
    },

    /// Enumerating a cyclic result needs an explicit path-length bound.
    #[error("the result automaton is cyclic; an explicit enumeration bound is required")]
    BoundRequired,

    /// A cascade without stages.
    #[error("a cascade needs at least one stage")]
    EmptyCascade,

    /// Inconsistent cascade wiring.
    #[error("cascade wiring error: {0}")]
    CascadeWiring(String),

    /// Wrapped I/O error from the command-line layer.
    #[error("{context}: {source}")]
    Io {
        /// What was being done.
        context: String,
        /// The underlying error.
        #[source]
        source: std::io::Error,
    },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
