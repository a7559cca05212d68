//! The rewriting engine: fuel-bounded reduction to canonical form.
//!
//! The deterministic strategy always contracts the leftmost redex with the
//! lowest-index rule, so canonical forms are reproducible run to run.  A
//! randomized strategy is provided for strategy-independence testing on
//! confluent systems, and a tracing variant records every step so that a
//! reduction can be replayed and audited (rule applicability and strict
//! measure descent at each step).

use std::collections::BTreeMap;

use rand::Rng;

use crate::ncalg::element::Element;
use crate::ncalg::error::AlgebraError;
use crate::ncalg::presentation::Measure;
use crate::ncalg::word::Word;
use crate::scalar::Scalar;

/// One recorded rewrite step: `rule` applied to `input` at letter `pos`.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceStep {
    pub input: Word,
    pub rule: usize,
    pub pos: usize,
}

fn fuel_error(elem: &Element) -> AlgebraError {
    AlgebraError::FuelExhausted {
        word: elem.to_string(),
    }
}

/// Reduce to canonical form under the deterministic strategy.
pub fn normal_form(elem: &Element, fuel: u64) -> Result<Element, AlgebraError> {
    reduce_inner(elem, fuel, &mut None, &mut StrategyImpl::Deterministic)
}

/// Reduce while recording each step for later replay.
pub fn normal_form_traced(
    elem: &Element,
    fuel: u64,
) -> Result<(Element, Vec<TraceStep>), AlgebraError> {
    let mut trace = Some(Vec::new());
    let out = reduce_inner(elem, fuel, &mut trace, &mut StrategyImpl::Deterministic)?;
    Ok((out, trace.unwrap()))
}

/// Reduce with uniformly random redex choice; on a confluent system the
/// result agrees with the deterministic strategy.
pub fn normal_form_randomized<R: Rng>(
    elem: &Element,
    fuel: u64,
    rng: &mut R,
) -> Result<Element, AlgebraError> {
    reduce_inner(elem, fuel, &mut None, &mut StrategyImpl::Randomized(rng))
}

enum StrategyImpl<'a> {
    Deterministic,
    Randomized(&'a mut dyn rand::RngCore),
}

fn reduce_inner(
    elem: &Element,
    fuel: u64,
    trace: &mut Option<Vec<TraceStep>>,
    strategy: &mut StrategyImpl,
) -> Result<Element, AlgebraError> {
    let pres = elem.presentation().clone();
    let measure = pres.measure();
    let mut out: BTreeMap<Word, Scalar> = BTreeMap::new();
    let mut pending: Vec<(Word, Scalar)> =
        elem.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    let mut remaining = fuel;

    while let Some((word, coeff)) = pending.pop() {
        if coeff.is_zero() {
            continue;
        }
        let letters = word.letter_vec();
        let redex = match strategy {
            StrategyImpl::Deterministic => pres.find_redex(&letters, 0),
            StrategyImpl::Randomized(rng) => {
                let all = pres.all_redexes(&letters);
                if all.is_empty() {
                    None
                } else {
                    let i = rng.gen_range(0..all.len());
                    Some(all[i])
                }
            }
        };
        match redex {
            None => {
                accumulate(&mut out, word, coeff)?;
            }
            Some((pos, ri)) => {
                if remaining == 0 {
                    return Err(fuel_error(elem));
                }
                remaining -= 1;
                if let Some(t) = trace.as_mut() {
                    t.push(TraceStep {
                        input: word.clone(),
                        rule: ri,
                        pos,
                    });
                }
                let rule = &pres.rules()[ri];
                let lhs_len = rule.lhs.len();
                for (rw, rc) in &rule.rhs {
                    let new_word = word.splice(pos, lhs_len, rw);
                    debug_assert!(
                        measure == Measure::None || measure.rank(&new_word) < measure.rank(&word),
                        "termination measure failed to decrease"
                    );
                    pending.push((new_word, coeff.mul(rc)?));
                }
            }
        }
    }

    Ok(Element::from_reduced_terms(pres, out))
}

fn accumulate(
    out: &mut BTreeMap<Word, Scalar>,
    word: Word,
    coeff: Scalar,
) -> Result<(), AlgebraError> {
    match out.entry(word) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get().add(&coeff)?;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
    Ok(())
}

/// Replay a recorded reduction against its presentation, checking that each
/// step applied an existing rule at a real occurrence of its left-hand side
/// and (when a measure is attached) that every produced word ranks strictly
/// below its input.  Returns the number of validated steps.
pub fn validate_trace(
    pres: &crate::ncalg::presentation::Presentation,
    trace: &[TraceStep],
) -> Result<usize, String> {
    let measure = pres.measure();
    for (i, step) in trace.iter().enumerate() {
        let rule = pres
            .rules()
            .get(step.rule)
            .ok_or_else(|| format!("step {i}: rule index {} out of range", step.rule))?;
        if !step.input.matches_at(&rule.lhs, step.pos) {
            return Err(format!(
                "step {i}: rule lhs does not occur at position {}",
                step.pos
            ));
        }
        if measure != Measure::None {
            let before = measure.rank(&step.input);
            for (rw, _) in &rule.rhs {
                let after_word = step.input.splice(step.pos, rule.lhs.len(), rw);
                if measure.rank(&after_word) >= before {
                    return Err(format!("step {i}: measure did not decrease"));
                }
            }
        }
    }
    Ok(trace.len())
}
