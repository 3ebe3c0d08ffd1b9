//! Semirings and the weights they operate on.
//!
//! Every automaton in this crate is weighted over one of four concrete
//! semirings: boolean `⟨{0,1},∨,∧,0,1⟩`, natural `⟨ℕ,+,×,0,1⟩`, real
//! `⟨ℝ⁺,+,×,0,1⟩`, and tropical `⟨ℝ⁺∪{∞},min,+,∞,0⟩`. Path weights are
//! combined with `times` and alternative paths are collected with `plus`.
//!
//! The [`SemiringOps`] trait exposes the algebra behind a semiring so that
//! [`check_axioms`] can also be pointed at hand-rolled (possibly broken)
//! algebras in tests.

use crate::{Error, Result};
use std::fmt;

/// Absolute tolerance used when comparing real-valued weights.
pub const REAL_TOLERANCE: f64 = 1e-9;

/// A weight value, tagged by the carrier set it belongs to.
///
/// The tropical carrier includes `∞`, which acts as the semiring zero.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum Weight {
    /// Boolean bit.
    Bool(bool),
    /// Natural number.
    Nat(u64),
    /// Non-negative real.
    Real(f64),
    /// Non-negative real extended with `+∞` (tropical carrier).
    Trop(f64),
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Bool(false) => write!(f, "0"),
            Weight::Bool(true) => write!(f, "1"),
            Weight::Nat(n) => write!(f, "{n}"),
            Weight::Real(x) | Weight::Trop(x) => {
                if x.is_infinite() {
                    write!(f, "inf")
                } else if x.fract() == 0.0 && x.abs() < 1e15 {
                    write!(f, "{}", *x as i64)
                } else {
                    // nine fractional digits, trailing zeros trimmed
                    let s = format!("{x:.9}");
                    let s = s.trim_end_matches('0').trim_end_matches('.');
                    write!(f, "{s}")
                }
            }
        }
    }
}

/// The algebra of a semiring, decoupled from the four built-in ones so the
/// axiom checker can be run against arbitrary (including broken) algebras.
pub trait SemiringOps {
    /// Display name of the algebra.
    fn name(&self) -> &str;
    /// Collection `⊕`.
    fn plus(&self, a: Weight, b: Weight) -> Weight;
    /// Extension `⊗`.
    fn times(&self, a: Weight, b: Weight) -> Weight;
    /// Neutral element of collection, `0̄`.
    fn zero(&self) -> Weight;
    /// Neutral element of extension, `1̄`.
    fn one(&self) -> Weight;
    /// Whether extension is commutative.
    fn is_commutative(&self) -> bool;
    /// Whether `a ⊕ a = a` is claimed for all carrier members.
    fn is_idempotent(&self) -> bool;
    /// Absolute tolerance for weight equality (0 for exact carriers).
    fn equality_tolerance(&self) -> f64;
    /// Whether `w` belongs to the carrier set.
    fn contains(&self, w: Weight) -> bool;

    /// Weight equality within [`Self::equality_tolerance`].
    fn weight_eq(&self, a: Weight, b: Weight) -> bool {
        match (a, b) {
            (Weight::Bool(x), Weight::Bool(y)) => x == y,
            (Weight::Nat(x), Weight::Nat(y)) => x == y,
            (Weight::Real(x), Weight::Real(y)) | (Weight::Trop(x), Weight::Trop(y)) => {
                if x.is_infinite() || y.is_infinite() {
                    x == y
                } else {
                    (x - y).abs() <= self.equality_tolerance()
                }
            }
            _ => false,
        }
    }
}

/// One of the four built-in commutative semirings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Semiring {
    /// `⟨{0,1}, ∨, ∧, 0, 1⟩`
    Boolean,
    /// `⟨ℕ, +, ×, 0, 1⟩`
    Natural,
    /// `⟨ℝ⁺, +, ×, 0, 1⟩`
    Real,
    /// `⟨ℝ⁺∪{∞}, min, +, ∞, 0⟩`
    Tropical,
}

impl fmt::Display for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Semiring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Semiring::by_name(s)
    }
}

fn bad_carrier(k: &Semiring, w: Weight) -> ! {
    panic!("weight {w:?} does not belong to the {k} semiring")
}

impl Semiring {
    /// Looks up a semiring by its lowercase name.
    pub fn by_name(name: &str) -> Result<Semiring> {
        match name {
            "boolean" => Ok(Semiring::Boolean),
            "natural" => Ok(Semiring::Natural),
            "real" => Ok(Semiring::Real),
            "tropical" => Ok(Semiring::Tropical),
            _ => Err(Error::UnknownSemiring(name.to_string())),
        }
    }

    /// Display name, usable in the text format header.
    pub fn name(&self) -> &'static str {
        match self {
            Semiring::Boolean => "boolean",
            Semiring::Natural => "natural",
            Semiring::Real => "real",
            Semiring::Tropical => "tropical",
        }
    }

    /// `0̄`, the neutral element of collection and annihilator of extension.
    pub fn zero(&self) -> Weight {
        match self {
            Semiring::Boolean => Weight::Bool(false),
            Semiring::Natural => Weight::Nat(0),
            Semiring::Real => Weight::Real(0.0),
            Semiring::Tropical => Weight::Trop(f64::INFINITY),
        }
    }

    /// `1̄`, the neutral element of extension.
    pub fn one(&self) -> Weight {
        match self {
            Semiring::Boolean => Weight::Bool(true),
            Semiring::Natural => Weight::Nat(1),
            Semiring::Real => Weight::Real(1.0),
            Semiring::Tropical => Weight::Trop(0.0),
        }
    }

    /// Collection `⊕`.
    ///
    /// Panics if a weight does not belong to this semiring's carrier; mixing
    /// weights from different semirings is a programming error.
    pub fn plus(&self, a: Weight, b: Weight) -> Weight {
        match (self, a, b) {
            (Semiring::Boolean, Weight::Bool(x), Weight::Bool(y)) => Weight::Bool(x || y),
            (Semiring::Natural, Weight::Nat(x), Weight::Nat(y)) => Weight::Nat(x + y),
            (Semiring::Real, Weight::Real(x), Weight::Real(y)) => Weight::Real(x + y),
            (Semiring::Tropical, Weight::Trop(x), Weight::Trop(y)) => Weight::Trop(x.min(y)),
            (k, a, b) => {
                if k.contains(a) {
                    bad_carrier(k, b)
                } else {
                    bad_carrier(k, a)
                }
            }
        }
    }

    /// Extension `⊗`.
    pub fn times(&self, a: Weight, b: Weight) -> Weight {
        match (self, a, b) {
            (Semiring::Boolean, Weight::Bool(x), Weight::Bool(y)) => Weight::Bool(x && y),
            (Semiring::Natural, Weight::Nat(x), Weight::Nat(y)) => Weight::Nat(x * y),
            (Semiring::Real, Weight::Real(x), Weight::Real(y)) => Weight::Real(x * y),
            (Semiring::Tropical, Weight::Trop(x), Weight::Trop(y)) => Weight::Trop(x + y),
            (k, a, b) => {
                if k.contains(a) {
                    bad_carrier(k, b)
                } else {
                    bad_carrier(k, a)
                }
            }
        }
    }

    /// All four built-in semirings are commutative.
    pub fn is_commutative(&self) -> bool {
        true
    }

    /// `a ⊕ a = a` holds exactly for boolean and tropical.
    pub fn is_idempotent(&self) -> bool {
        matches!(self, Semiring::Boolean | Semiring::Tropical)
    }

    /// `k` for which the semiring is k-closed, if known. Metadata only; no
    /// algorithm in this crate consumes it.
    pub fn k_closed_for(&self) -> Option<u32> {
        match self {
            Semiring::Tropical => Some(0),
            _ => None,
        }
    }

    /// Absolute tolerance for weight comparisons in this semiring.
    pub fn equality_tolerance(&self) -> f64 {
        match self {
            Semiring::Boolean | Semiring::Natural => 0.0,
            Semiring::Real | Semiring::Tropical => REAL_TOLERANCE,
        }
    }

    /// Whether `w` is a member of this semiring's carrier set.
    pub fn contains(&self, w: Weight) -> bool {
        match (self, w) {
            (Semiring::Boolean, Weight::Bool(_)) => true,
            (Semiring::Natural, Weight::Nat(_)) => true,
            (Semiring::Real, Weight::Real(x)) => x >= 0.0 && x.is_finite(),
            (Semiring::Tropical, Weight::Trop(x)) => x >= 0.0 && !x.is_nan(),
            _ => false,
        }
    }

    /// Weight equality within [`Self::equality_tolerance`].
    pub fn weight_eq(&self, a: Weight, b: Weight) -> bool {
        SemiringOps::weight_eq(self, a, b)
    }

    /// Whether `w` equals `0̄`.
    pub fn is_zero(&self, w: Weight) -> bool {
        self.weight_eq(w, self.zero())
    }

    /// The natural partial order of an idempotent semiring:
    /// `a ≤ b ⇔ a ⊕ b = a`.
    ///
    /// Errors on non-idempotent semirings, which have no such order.
    pub fn natural_less(&self, a: Weight, b: Weight) -> Result<bool> {
        if !self.is_idempotent() {
            return Err(Error::NotIdempotent(*self));
        }
        Ok(self.weight_eq(self.plus(a, b), a))
    }

    /// Parses a weight in this semiring's carrier.
    pub fn parse_weight(&self, s: &str) -> Result<Weight> {
        let bad = || Error::BadWeight {
            semiring: *self,
            token: s.to_string(),
        };
        let w = match self {
            Semiring::Boolean => match s {
                "0" => Weight::Bool(false),
                "1" => Weight::Bool(true),
                _ => return Err(bad()),
            },
            Semiring::Natural => Weight::Nat(s.parse::<u64>().map_err(|_| bad())?),
            Semiring::Real => Weight::Real(s.parse::<f64>().map_err(|_| bad())?),
            Semiring::Tropical => {
                if s == "inf" {
                    Weight::Trop(f64::INFINITY)
                } else {
                    Weight::Trop(s.parse::<f64>().map_err(|_| bad())?)
                }
            }
        };
        if !self.contains(w) {
            return Err(bad());
        }
        Ok(w)
    }
}

impl SemiringOps for Semiring {
    fn name(&self) -> &str {
        Semiring::name(self)
    }
    fn plus(&self, a: Weight, b: Weight) -> Weight {
        Semiring::plus(self, a, b)
    }
    fn times(&self, a: Weight, b: Weight) -> Weight {
        Semiring::times(self, a, b)
    }
    fn zero(&self) -> Weight {
        Semiring::zero(self)
    }
    fn one(&self) -> Weight {
        Semiring::one(self)
    }
    fn is_commutative(&self) -> bool {
        Semiring::is_commutative(self)
    }
    fn is_idempotent(&self) -> bool {
        Semiring::is_idempotent(self)
    }
    fn equality_tolerance(&self) -> f64 {
        Semiring::equality_tolerance(self)
    }
    fn contains(&self, w: Weight) -> bool {
        Semiring::contains(self, w)
    }
}

/// One violated law together with the witness that broke it.
#[derive(Clone, Debug)]
pub struct AxiomViolation {
    /// Human-readable law name, e.g. `"neutral element of collection"`.
    pub law: String,
    /// The sample weights that witnessed the violation.
    pub witness: Vec<Weight>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: witness", self.law)?;
        for w in &self.witness {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

/// Result of [`check_axioms`]: empty iff no law was violated beyond the
/// algebra's equality tolerance.
#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    /// Violated laws, at most one witness per law.
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    /// True iff no violations were found.
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "all laws hold");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Evaluates the semiring laws over every pair and triple of `samples` and
/// reports the violated ones (first witness per law).
///
/// Checked laws: monoid axioms for collection and extension, two-sided
/// distributivity, annihilation by zero, plus commutativity of extension and
/// idempotence of collection where the algebra claims them. Samples outside
/// the carrier are reported rather than evaluated.
pub fn check_axioms<S: SemiringOps + ?Sized>(alg: &S, samples: &[Weight]) -> AxiomReport {
    assert!(
        !samples.is_empty(),
        "check_axioms needs at least one sample"
    );

    let mut report = AxiomReport::default();
    let record = |law: &str, witness: &[Weight], report: &mut AxiomReport| {
        if !report.violations.iter().any(|v| v.law == law) {
            report.violations.push(AxiomViolation {
                law: law.to_string(),
                witness: witness.to_vec(),
            });
        }
    };

    let samples: Vec<Weight> = {
        let mut ok = Vec::with_capacity(samples.len());
        for &w in samples {
            if alg.contains(w) {
                ok.push(w);
            } else {
                record("sample outside carrier", &[w], &mut report);
            }
        }
        ok
    };

    let zero = alg.zero();
    let one = alg.one();
    let eq = |a: Weight, b: Weight| alg.weight_eq(a, b);

    for &a in &samples {
        if !eq(alg.plus(a, zero), a) || !eq(alg.plus(zero, a), a) {
            record("neutral element of collection", &[a], &mut report);
        }
        if !eq(alg.times(a, one), a) || !eq(alg.times(one, a), a) {
            record("neutral element of extension", &[a], &mut report);
        }
        if !eq(alg.times(a, zero), zero) || !eq(alg.times(zero, a), zero) {
            record("annihilation by zero", &[a], &mut report);
        }
        if alg.is_idempotent() && !eq(alg.plus(a, a), a) {
            record("idempotence of collection", &[a], &mut report);
        }
    }

    for &a in &samples {
        for &b in &samples {
            if !eq(alg.plus(a, b), alg.plus(b, a)) {
                record("commutativity of collection", &[a, b], &mut report);
            }
            if alg.is_commutative() && !eq(alg.times(a, b), alg.times(b, a)) {
                record("commutativity of extension", &[a, b], &mut report);
            }
        }
    }

    for &a in &samples {
        for &b in &samples {
            for &c in &samples {
                let w = [a, b, c];
                if !eq(alg.plus(alg.plus(a, b), c), alg.plus(a, alg.plus(b, c))) {
                    record("associativity of collection", &w, &mut report);
                }
                if !eq(alg.times(alg.times(a, b), c), alg.times(a, alg.times(b, c))) {
                    record("associativity of extension", &w, &mut report);
                }
                if !eq(
                    alg.times(a, alg.plus(b, c)),
                    alg.plus(alg.times(a, b), alg.times(a, c)),
                ) {
                    record("distributivity (left)", &w, &mut report);
                }
                if !eq(
                    alg.times(alg.plus(a, b), c),
                    alg.plus(alg.times(a, c), alg.times(b, c)),
                ) {
                    record("distributivity (right)", &w, &mut report);
                }
            }
        }
    }

    report
}
