//! Critical pairs and the local-confluence check.
//!
//! Two kinds of ambiguity are enumerated: overlaps (a proper suffix of one
//! left-hand side equals a proper prefix of another) and inclusions (one
//! left-hand side occurs strictly inside another).  For each ambiguity the
//! two one-step reducts are formed and reduced to normal form; the system is
//! locally confluent when every pair joins.  Together with a validated
//! termination measure this certifies confluence, hence well-defined
//! canonical forms.

use std::sync::Arc;

use crate::ncalg::element::Element;
use crate::ncalg::error::AlgebraError;
use crate::ncalg::presentation::{ConfluenceStatus, Presentation};
use crate::ncalg::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmbiguityKind {
    Overlap,
    Inclusion,
}

/// An unresolved superposition of two rules on one word, with its two
/// one-step reducts (returned unreduced).
#[derive(Debug, Clone)]
pub struct CriticalPair {
    pub kind: AmbiguityKind,
    pub rules: (usize, usize),
    pub overlap_word: Word,
    pub left_reduct: Element,
    pub right_reduct: Element,
}

/// Result of reducing one critical pair to normal forms.
#[derive(Debug, Clone)]
pub struct PairResolution {
    pub pair: CriticalPair,
    pub left_normal_form: Element,
    pub right_normal_form: Element,
    pub joined: bool,
}

#[derive(Debug, Clone)]
pub struct ConfluenceReport {
    pub resolutions: Vec<PairResolution>,
    pub status: ConfluenceStatus,
}

/// Apply `rule` to `word` at letter position `pos`, producing the linear
/// combination that replaces it (a single rewriting step, unreduced).
fn one_step(
    pres: &Arc<Presentation>,
    word: &Word,
    rule_idx: usize,
    pos: usize,
) -> Result<Element, AlgebraError> {
    let rule = &pres.rules()[rule_idx];
    debug_assert!(word.matches_at(&rule.lhs, pos));
    let raw = rule
        .rhs
        .iter()
        .map(|(rw, rc)| (word.splice(pos, rule.lhs.len(), rw), rc.clone()))
        .collect();
    Element::from_terms(pres, raw)
}

/// Enumerate every critical pair of the presentation's rewrite system.
///
/// For an overlap `lhs_i = A·B`, `lhs_j = B·C` (`B` nonempty, both proper),
/// the superposed word is `A·B·C`; the left reduct applies rule `i` at the
/// prefix and the right reduct applies rule `j` at the suffix.  For an
/// inclusion of `lhs_j` strictly inside `lhs_i`, the superposed word is
/// `lhs_i` itself.
pub fn critical_pairs(pres: &Arc<Presentation>) -> Result<Vec<CriticalPair>, AlgebraError> {
    let rules = pres.rules();
    let mut pairs = Vec::new();
    for (i, ri) in rules.iter().enumerate() {
        let li = ri.lhs.letter_vec();
        for (j, rj) in rules.iter().enumerate() {
            let lj = rj.lhs.letter_vec();
            // Overlaps: proper suffix of lhs_i equals proper prefix of lhs_j.
            for k in 1..li.len().min(lj.len()) {
                if li[li.len() - k..] == lj[..k] {
                    let overlap_word = ri.lhs.concat(&Word::from_letters(lj[k..].iter().copied()));
                    let left = one_step(pres, &overlap_word, i, 0)?;
                    let right = one_step(pres, &overlap_word, j, li.len() - k)?;
                    pairs.push(CriticalPair {
                        kind: AmbiguityKind::Overlap,
                        rules: (i, j),
                        overlap_word,
                        left_reduct: left,
                        right_reduct: right,
                    });
                }
            }
            // Inclusions: lhs_j strictly inside lhs_i.
            if i != j && lj.len() < li.len() {
                for pos in 0..=li.len() - lj.len() {
                    if li[pos..pos + lj.len()] == lj[..] {
                        let left = one_step(pres, &ri.lhs, i, 0)?;
                        let right = one_step(pres, &ri.lhs, j, pos)?;
                        pairs.push(CriticalPair {
                            kind: AmbiguityKind::Inclusion,
                            rules: (i, j),
                            overlap_word: ri.lhs.clone(),
                            left_reduct: left,
                            right_reduct: right,
                        });
                    }
                }
            }
        }
    }
    Ok(pairs)
}

/// Resolve every critical pair and record the outcome on the presentation.
///
/// Termination is covered by the attached measure (validated rule by rule at
/// construction); systems without a measure get an empirical, fuel-bounded
/// answer, reported as `Unverified` when fuel runs out.
pub fn check_local_confluence(
    pres: &Arc<Presentation>,
    fuel: u64,
) -> Result<ConfluenceReport, AlgebraError> {
    let pairs = critical_pairs(pres)?;
    let mut resolutions = Vec::with_capacity(pairs.len());
    let mut status = ConfluenceStatus::LocallyConfluent { pairs: pairs.len() };
    for pair in pairs {
        let left_nf = match pair.left_reduct.normal_form(fuel) {
            Ok(nf) => nf,
            Err(AlgebraError::FuelExhausted { word }) => {
                status = ConfluenceStatus::Unverified {
                    reason: format!("fuel exhausted while joining a critical pair at {word}"),
                };
                pres.set_confluence_status(status.clone());
                return Ok(ConfluenceReport {
                    resolutions,
                    status,
                });
            }
            Err(e) => return Err(e),
        };
        let right_nf = match pair.right_reduct.normal_form(fuel) {
            Ok(nf) => nf,
            Err(AlgebraError::FuelExhausted { word }) => {
                status = ConfluenceStatus::Unverified {
                    reason: format!("fuel exhausted while joining a critical pair at {word}"),
                };
                pres.set_confluence_status(status.clone());
                return Ok(ConfluenceReport {
                    resolutions,
                    status,
                });
            }
            Err(e) => return Err(e),
        };
        let joined = left_nf == right_nf;
        if !joined && matches!(status, ConfluenceStatus::LocallyConfluent { .. }) {
            status = ConfluenceStatus::NotLocallyConfluent {
                overlap: pair.overlap_word.format(&pres.generator_names()),
                left_normal_form: left_nf.to_string(),
                right_normal_form: right_nf.to_string(),
            };
        }
        resolutions.push(PairResolution {
            pair,
            left_normal_form: left_nf,
            right_normal_form: right_nf,
            joined,
        });
    }
    pres.set_confluence_status(status.clone());
    Ok(ConfluenceReport {
        resolutions,
        status,
    })
}
