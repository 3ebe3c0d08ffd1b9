//! Transduction cascades: pipelines of automata where each stage intersects
//! tapes of the running intermediate result and projects the tapes the next
//! stage needs.
//!
//! A classical cascade of transducers only ever feeds a stage its immediate
//! predecessor's output. Multi-tape stages lift that restriction: an
//! intermediate result can keep several tapes alive, so later stages can
//! re-check earlier outputs (or the original input). The wiring is data
//! driven — [`CascadeStage`] says which tapes to intersect and which to keep
//! — and the two standard patterns ship as presets:
//! [`preserve_previous_cascade`] keeps the last two results visible to every
//! stage, [`consult_first_cascade`] runs like a classical cascade but lets
//! the final stage also check the tape that went through the first stage.
//!
//! [`merge_cascade`] folds a whole cascade into a single two-tape automaton
//! relating input to final output, without any input acceptor. It threads an
//! extra leading tape (the eventual input tape) through the same stage
//! wiring, so one algorithm covers classical composition chains and both
//! multi-tape patterns.

use crate::automaton::Wmta;
use crate::build::project;
use crate::intersect::multi_intersect2;
use crate::{Error, Result};

/// One cascade stage: the automaton plus its wiring.
#[derive(Clone, Debug)]
pub struct CascadeStage {
    /// The stage automaton.
    pub wmta: Wmta,
    /// Tape pairs `(running, stage)` to intersect, 1-based.
    pub pairs: Vec<(usize, usize)>,
    /// 1-based tapes of the intersection result that form the next
    /// intermediate.
    pub project: Vec<usize>,
}

/// A full cascade: stages applied left to right to a 1-tape input.
#[derive(Clone, Debug)]
pub struct CascadeSpec {
    /// The stages in application order.
    pub stages: Vec<CascadeStage>,
}

impl CascadeSpec {
    /// Validates arity bookkeeping: the first stage consumes the input
    /// acceptor's single tape, every stage's wiring indices are in range,
    /// and the last stage leaves exactly one tape.
    pub fn validate(&self) -> Result<()> {
        if self.stages.is_empty() {
            return Err(Error::EmptyCascade);
        }
        let mut running = 1usize;
        for (idx, stage) in self.stages.iter().enumerate() {
            if stage.pairs.is_empty() {
                return Err(Error::EmptyTapeList);
            }
            if idx == 0 && (stage.pairs.len() != 1 || stage.pairs[0].0 != 1) {
                return Err(Error::CascadeWiring(
                    "the first stage must intersect exactly the input's single tape".into(),
                ));
            }
            for &(j, k) in &stage.pairs {
                if j < 1 || j > running {
                    return Err(Error::TapeOutOfRange {
                        tape: j,
                        arity: running,
                    });
                }
                if k < 1 || k > stage.wmta.arity() {
                    return Err(Error::TapeOutOfRange {
                        tape: k,
                        arity: stage.wmta.arity(),
                    });
                }
            }
            let result_arity = running + stage.wmta.arity() - stage.pairs.len();
            for &t in &stage.project {
                if t < 1 || t > result_arity {
                    return Err(Error::TapeOutOfRange {
                        tape: t,
                        arity: result_arity,
                    });
                }
            }
            if stage.project.is_empty() {
                return Err(Error::EmptyTapeList);
            }
            running = stage.project.len();
        }
        if running != 1 {
            return Err(Error::CascadeWiring(
                "the last stage must project to a single output tape".into(),
            ));
        }
        Ok(())
    }
}

/// A classical cascade: composes the 2-tape `stages` onto `input` left to
/// right, keeping only each stage's output tape.
pub fn run_classical(stages: &[Wmta], input: &Wmta) -> Result<Wmta> {
    if input.arity() != 1 {
        return Err(Error::ArityMismatch {
            left: 1,
            right: input.arity(),
        });
    }
    let mut cur = input.clone();
    for t in stages {
        if t.arity() != 2 {
            return Err(Error::ArityMismatch {
                left: 2,
                right: t.arity(),
            });
        }
        let (joined, _) = multi_intersect2(&cur, t, &[(1, 1)])?;
        cur = project(&joined, &[2])?.trim();
    }
    Ok(cur)
}

/// Runs a cascade on a 1-tape input acceptor. Returns the 1-tape output
/// automaton and the conjunction of all stage success flags; a `false` flag
/// means some auto-intersection was cut off and the output may be missing
/// strings.
pub fn run_wmta_cascade(spec: &CascadeSpec, input: &Wmta) -> Result<(Wmta, bool)> {
    spec.validate()?;
    if input.arity() != 1 {
        return Err(Error::ArityMismatch {
            left: 1,
            right: input.arity(),
        });
    }
    let mut cur = input.clone();
    let mut ok = true;
    for stage in &spec.stages {
        let (joined, success) = multi_intersect2(&cur, &stage.wmta, &stage.pairs)?;
        ok &= success;
        cur = project(&joined, &stage.project)?.trim();
    }
    Ok((cur, ok))
}

/// Merges a cascade into a single automaton relating input (tape 1) to final
/// output (tape 2), without consuming any input acceptor.
///
/// The merged intermediate carries one extra leading tape — the eventual
/// input — in front of the tapes the running intermediate would have at the
/// same point of [`run_wmta_cascade`]; stage wirings are re-indexed
/// accordingly. Applying the merged automaton to an input and running the
/// cascade stepwise agree whenever all stage constructions succeed.
pub fn merge_cascade(spec: &CascadeSpec) -> Result<(Wmta, bool)> {
    spec.validate()?;
    let first = &spec.stages[0];
    let k1 = first.pairs[0].1;

    // Rebuild the first stage's result layout out of the stage automaton
    // alone: result tape 1 was the input (= stage tape k1), result tape 1+t
    // was the stage's t-th surviving tape.
    let survivors: Vec<usize> = (1..=first.wmta.arity()).filter(|&t| t != k1).collect();
    let translate = |t: usize| -> usize {
        if t == 1 {
            k1
        } else {
            survivors[t - 2]
        }
    };
    let mut keep: Vec<usize> = vec![k1];
    keep.extend(first.project.iter().map(|&t| translate(t)));
    let mut cur = project(&first.wmta, &keep)?.trim();
    let mut ok = true;

    for stage in &spec.stages[1..] {
        let shifted: Vec<(usize, usize)> = stage.pairs.iter().map(|&(j, k)| (j + 1, k)).collect();
        let (joined, success) = multi_intersect2(&cur, &stage.wmta, &shifted)?;
        ok &= success;
        let mut keep: Vec<usize> = vec![1];
        keep.extend(stage.project.iter().map(|&t| t + 1));
        cur = project(&joined, &keep)?.trim();
    }
    Ok((cur, ok))
}

/// The pattern where every stage after the first sees the two most recent
/// results: the first stage is 2-tape, all later stages are 3-tape and
/// intersect both carried tapes.
pub fn preserve_previous_cascade(stages: Vec<Wmta>) -> Result<CascadeSpec> {
    if stages.len() < 2 {
        return Err(Error::CascadeWiring(
            "the preserve-previous pattern needs at least two stages".into(),
        ));
    }
    let last = stages.len() - 1;
    let mut out = Vec::with_capacity(stages.len());
    for (i, wmta) in stages.into_iter().enumerate() {
        let want_arity = if i == 0 { 2 } else { 3 };
        if wmta.arity() != want_arity {
            return Err(Error::ArityMismatch {
                left: want_arity,
                right: wmta.arity(),
            });
        }
        let (pairs, project) = if i == 0 {
            (vec![(1, 1)], vec![1, 2])
        } else if i < last {
            (vec![(1, 1), (2, 2)], vec![2, 3])
        } else {
            (vec![(1, 1), (2, 2)], vec![3])
        };
        out.push(CascadeStage {
            wmta,
            pairs,
            project,
        });
    }
    Ok(CascadeSpec { stages: out })
}

/// The pattern where each stage consumes its predecessor's output as usual,
/// but the carried intermediate keeps the tape consumed by the first stage
/// so the final 3-tape stage can check it again.
pub fn consult_first_cascade(stages: Vec<Wmta>) -> Result<CascadeSpec> {
    if stages.len() < 2 {
        return Err(Error::CascadeWiring(
            "the consult-first pattern needs at least two stages".into(),
        ));
    }
    let last = stages.len() - 1;
    let mut out = Vec::with_capacity(stages.len());
    for (i, wmta) in stages.into_iter().enumerate() {
        let want_arity = if i == last { 3 } else { 2 };
        if wmta.arity() != want_arity {
            return Err(Error::ArityMismatch {
                left: want_arity,
                right: wmta.arity(),
            });
        }
        let (pairs, project) = if i == 0 {
            (vec![(1, 1)], vec![1, 2])
        } else if i < last {
            (vec![(2, 1)], vec![1, 3])
        } else {
            (vec![(1, 1), (2, 2)], vec![3])
        };
        out.push(CascadeStage {
            wmta,
            pairs,
            project,
        });
    }
    Ok(CascadeSpec { stages: out })
}

/// A classical cascade as a [`CascadeSpec`]: 2-tape stages, each consuming
/// only its predecessor's output.
pub fn classical_cascade(stages: Vec<Wmta>) -> Result<CascadeSpec> {
    if stages.is_empty() {
        return Err(Error::EmptyCascade);
    }
    let mut out = Vec::with_capacity(stages.len());
    for wmta in stages {
        if wmta.arity() != 2 {
            return Err(Error::ArityMismatch {
                left: 2,
                right: wmta.arity(),
            });
        }
        out.push(CascadeStage {
            wmta,
            pairs: vec![(1, 1)],
            project: vec![2],
        });
    }
    Ok(CascadeSpec { stages: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{atom, union};
    use crate::intersect::compose;
    use crate::relation::relation_upto;
    use crate::semiring::{Semiring, Weight};
    use crate::tuple::StringTuple;

    fn pair(k: Semiring, a: &str, b: &str, w: Weight) -> Wmta {
        atom(StringTuple::new([a, b]), w, k).unwrap()
    }

    fn acceptor(k: Semiring, s: &str) -> Wmta {
        atom(StringTuple::new([s]), k.one(), k).unwrap()
    }

    #[test]
    fn one_classical_stage_rewrites() {
        let k = Semiring::Boolean;
        let out = run_classical(&[pair(k, "a", "b", k.one())], &acceptor(k, "a")).unwrap();
        let rel = relation_upto(&out, 6);
        assert_eq!(rel.len(), 1);
        assert_eq!(rel.weight(&StringTuple::new(["b"])), Some(k.one()));
    }

    #[test]
    fn two_classical_stages_chain() {
        let k = Semiring::Boolean;
        let stages = [pair(k, "a", "b", k.one()), pair(k, "b", "c", k.one())];
        let out = run_classical(&stages, &acceptor(k, "a")).unwrap();
        assert_eq!(
            relation_upto(&out, 8).weight(&StringTuple::new(["c"])),
            Some(k.one())
        );
    }

    #[test]
    fn tropical_weights_accumulate_along_the_cascade() {
        let k = Semiring::Tropical;
        let stages = [
            pair(k, "a", "b", Weight::Trop(1.0)),
            pair(k, "b", "c", Weight::Trop(2.0)),
        ];
        let out = run_classical(&stages, &acceptor(k, "a")).unwrap();
        assert_eq!(
            relation_upto(&out, 8).weight(&StringTuple::new(["c"])),
            Some(Weight::Trop(3.0))
        );
    }

    #[test]
    fn degenerate_wmta_cascade_matches_classical() {
        let k = Semiring::Boolean;
        let t = pair(k, "a", "b", k.one());
        let spec = classical_cascade(vec![t.clone()]).unwrap();
        let via_spec = run_wmta_cascade(&spec, &acceptor(k, "a")).unwrap();
        assert!(via_spec.1);
        let via_classical = run_classical(&[t], &acceptor(k, "a")).unwrap();
        assert!(relation_upto(&via_spec.0, 6).eq_in(k, &relation_upto(&via_classical, 6)));
    }

    #[test]
    fn empty_input_stays_empty() {
        let k = Semiring::Boolean;
        let spec = classical_cascade(vec![pair(k, "a", "b", k.one())]).unwrap();
        let empty = Wmta::new(1, k);
        let (out, ok) = run_wmta_cascade(&spec, &empty).unwrap();
        assert!(ok);
        assert!(relation_upto(&out, 6).is_empty());
    }

    #[test]
    fn merged_classical_cascade_equals_composition_fold() {
        let k = Semiring::Tropical;
        let t1 = union(
            &pair(k, "a", "m", Weight::Trop(1.0)),
            &pair(k, "b", "m", Weight::Trop(2.0)),
        )
        .unwrap();
        let t2 = pair(k, "m", "z", Weight::Trop(4.0));
        let spec = classical_cascade(vec![t1.clone(), t2.clone()]).unwrap();
        let (merged, ok) = merge_cascade(&spec).unwrap();
        assert!(ok);
        let composed = compose(&t1, &t2).unwrap();
        assert!(relation_upto(&merged, 10).eq_in(k, &relation_upto(&composed, 10)));
    }

    #[test]
    fn single_stage_merge_is_the_stage_itself() {
        let k = Semiring::Boolean;
        let t = pair(k, "a", "b", k.one());
        let spec = classical_cascade(vec![t.clone()]).unwrap();
        let (merged, ok) = merge_cascade(&spec).unwrap();
        assert!(ok);
        assert!(relation_upto(&merged, 6).eq_in(k, &relation_upto(&t, 6)));
    }

    #[test]
    fn consult_first_rejects_what_the_final_stage_contradicts() {
        let k = Semiring::Boolean;
        // stage 1: identity over {a,b}; stage 2: collapse both to a;
        // stage 3: demands the stage-1 tape and the stage-2 output both be a
        let s1 = union(&pair(k, "a", "a", k.one()), &pair(k, "b", "b", k.one())).unwrap();
        let s2 = union(&pair(k, "a", "a", k.one()), &pair(k, "b", "a", k.one())).unwrap();
        let s3 = atom(StringTuple::new(["a", "a", "a"]), k.one(), k).unwrap();
        let spec = consult_first_cascade(vec![s1.clone(), s2.clone(), s3.clone()]).unwrap();

        let (yes, ok_yes) = run_wmta_cascade(&spec, &acceptor(k, "a")).unwrap();
        assert!(ok_yes);
        assert_eq!(
            relation_upto(&yes, 12).weight(&StringTuple::new(["a"])),
            Some(k.one())
        );

        let (no, ok_no) = run_wmta_cascade(&spec, &acceptor(k, "b")).unwrap();
        assert!(ok_no);
        assert!(relation_upto(&no, 12).is_empty());

        // the classical shadow (stage 3 with its checking tape dropped)
        // happily accepts b
        let shadow = crate::build::cproject(&s3, &[1]).unwrap();
        let classical = run_classical(&[s1, s2, shadow], &acceptor(k, "b")).unwrap();
        assert!(!relation_upto(&classical, 12).is_empty());
    }

    #[test]
    fn wiring_validation_catches_bad_indices() {
        let k = Semiring::Boolean;
        let spec = CascadeSpec {
            stages: vec![CascadeStage {
                wmta: pair(k, "a", "b", k.one()),
                pairs: vec![(1, 3)],
                project: vec![2],
            }],
        };
        assert!(matches!(spec.validate(), Err(Error::TapeOutOfRange { .. })));
    }
}
