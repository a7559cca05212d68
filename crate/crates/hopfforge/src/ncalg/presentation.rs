//! Finitely presented associative algebras over an exact field.
//!
//! A presentation holds generators, defining relations (elements that are
//! zero in the quotient), and an oriented rewrite system used to compute
//! canonical forms.  An optional termination measure is validated against
//! every rule at construction time and re-asserted on every rewrite step in
//! debug builds.

use std::sync::{Arc, RwLock};

use crate::ncalg::error::AlgebraError;
use crate::ncalg::word::{GenId, Word};
use crate::scalar::{FieldDescriptor, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSymbol {
    pub name: String,
}

/// One oriented rule `lhs -> rhs` with a single-word left side and a linear
/// combination on the right (possibly empty, meaning the word is zero).
#[derive(Debug, Clone, PartialEq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Vec<(Word, Scalar)>,
}

/// Termination measure attached to a rewrite system.
///
/// `None` claims no certificate: construction accepts any rules and
/// reduction relies on the fuel bound alone.  `Length` certifies systems
/// whose every rule strictly shortens words.  `MoverInversions` ranks a word
/// by a lexicographic triple: for each occurrence of `mover` (scanned right
/// to left) the number of `backward` letters to its right, then the same
/// count for `forward` letters, then the total length.  Rules that push
/// `forward` letters left past `mover` and eliminate `backward` letters
/// after it strictly decrease this rank in any context.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    None,
    Length,
    MoverInversions {
        mover: GenId,
        forward: GenId,
        backward: GenId,
    },
}

/// Comparable rank produced by a measure; ordering is the derived
/// lexicographic order on the fields.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MeasureRank {
    backward_inversions: Vec<u32>,
    forward_inversions: Vec<u32>,
    length: usize,
}

impl Measure {
    /// Rank a word; `Length` (and the uncertified `None`) rank by length
    /// alone.
    pub fn rank(&self, word: &Word) -> MeasureRank {
        match *self {
            Measure::None | Measure::Length => MeasureRank {
                backward_inversions: Vec::new(),
                forward_inversions: Vec::new(),
                length: word.len(),
            },
            Measure::MoverInversions {
                mover,
                forward,
                backward,
            } => {
                let mut back_seen = 0u32;
                let mut fwd_seen = 0u32;
                let mut backs = Vec::new();
                let mut fwds = Vec::new();
                let letters = word.letter_vec();
                for &g in letters.iter().rev() {
                    if g == mover {
                        backs.push(back_seen);
                        fwds.push(fwd_seen);
                    } else if g == backward {
                        back_seen += 1;
                    } else if g == forward {
                        fwd_seen += 1;
                    }
                }
                MeasureRank {
                    backward_inversions: backs,
                    forward_inversions: fwds,
                    length: word.len(),
                }
            }
        }
    }

    /// Does every rewrite with this rule strictly decrease the rank?
    /// `None` claims nothing and accepts every rule.
    pub fn validates_rule(&self, rule: &RewriteRule) -> bool {
        if *self == Measure::None {
            return true;
        }
        let lhs_rank = self.rank(&rule.lhs);
        rule.rhs.iter().all(|(w, _)| self.rank(w) < lhs_rank)
    }
}

/// Outcome of the local-confluence analysis, cached on the presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConfluenceStatus {
    Unanalyzed,
    /// All critical pairs joined; the count is recorded.
    LocallyConfluent {
        pairs: usize,
    },
    /// Some critical pair has distinct normal forms.
    NotLocallyConfluent {
        overlap: String,
        left_normal_form: String,
        right_normal_form: String,
    },
    /// Analysis could not finish (for example, fuel ran out).
    Unverified {
        reason: String,
    },
}

#[derive(Debug)]
pub struct Presentation {
    field: FieldDescriptor,
    generators: Vec<GeneratorSymbol>,
    /// Each relation is a linear combination that is zero in the algebra,
    /// stored as raw terms to avoid self-reference.
    relations: Vec<Vec<(Word, Scalar)>>,
    rules: Vec<RewriteRule>,
    measure: Measure,
    default_fuel: u64,
    confluence: RwLock<ConfluenceStatus>,
}

pub const DEFAULT_FUEL: u64 = 1_000_000;

impl Presentation {
    pub fn new(
        field: FieldDescriptor,
        generator_names: &[&str],
        relations: Vec<Vec<(Word, Scalar)>>,
        rules: Vec<RewriteRule>,
        measure: Measure,
        default_fuel: u64,
    ) -> Result<Arc<Presentation>, AlgebraError> {
        let mut generators = Vec::with_capacity(generator_names.len());
        for (i, name) in generator_names.iter().enumerate() {
            if name.is_empty() {
                return Err(AlgebraError::UnknownGenerator(format!("<empty #{i}>")));
            }
            if generator_names[..i].contains(name) {
                return Err(AlgebraError::DuplicateGenerator(name.to_string()));
            }
            generators.push(GeneratorSymbol {
                name: name.to_string(),
            });
        }
        let n = generators.len();
        let check_word = |w: &Word| -> Result<(), AlgebraError> {
            match w.max_gen() {
                Some(g) if g >= n => Err(AlgebraError::GeneratorIndex(g)),
                _ => Ok(()),
            }
        };
        let check_scalar = |s: &Scalar| -> Result<(), AlgebraError> {
            if s.field() == field {
                Ok(())
            } else {
                Err(AlgebraError::Scalar(
                    crate::scalar::ScalarError::FieldMismatch {
                        left: field.to_string(),
                        right: s.field().to_string(),
                    },
                ))
            }
        };
        for rel in &relations {
            for (w, c) in rel {
                check_word(w)?;
                check_scalar(c)?;
            }
        }
        for (index, rule) in rules.iter().enumerate() {
            if rule.lhs.is_one() {
                return Err(AlgebraError::EmptyRuleLhs { index });
            }
            check_word(&rule.lhs)?;
            for (w, c) in &rule.rhs {
                check_word(w)?;
                check_scalar(c)?;
            }
            if !measure.validates_rule(rule) {
                return Err(AlgebraError::MeasureViolation {
                    index,
                    lhs: rule.lhs.format(&name_vec(&generators)),
                });
            }
        }
        if let Measure::MoverInversions {
            mover,
            forward,
            backward,
        } = measure
        {
            for g in [mover, forward, backward] {
                if g >= n {
                    return Err(AlgebraError::GeneratorIndex(g));
                }
            }
        }
        Ok(Arc::new(Presentation {
            field,
            generators,
            relations,
            rules,
            measure,
            default_fuel,
            confluence: RwLock::new(ConfluenceStatus::Unanalyzed),
        }))
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn generators(&self) -> &[GeneratorSymbol] {
        &self.generators
    }

    pub fn generator_names(&self) -> Vec<String> {
        name_vec(&self.generators)
    }

    pub fn gen_id(&self, name: &str) -> Option<GenId> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn gen_name(&self, id: GenId) -> &str {
        &self.generators[id].name
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn raw_relations(&self) -> &[Vec<(Word, Scalar)>] {
        &self.relations
    }

    pub fn measure(&self) -> Measure {
        self.measure
    }

    pub fn default_fuel(&self) -> u64 {
        self.default_fuel
    }

    pub fn confluence_status(&self) -> ConfluenceStatus {
        self.confluence.read().expect("confluence lock").clone()
    }

    pub fn set_confluence_status(&self, status: ConfluenceStatus) {
        *self.confluence.write().expect("confluence lock") = status;
    }

    /// Leftmost redex at or after `from`: smallest letter position, then
    /// lowest rule index.  Returns `(position, rule index)`.
    pub fn find_redex(&self, letters: &[GenId], from: usize) -> Option<(usize, usize)> {
        for pos in from..letters.len() {
            for (ri, rule) in self.rules.iter().enumerate() {
                let pat = rule.lhs.letter_vec();
                if pos + pat.len() <= letters.len() && letters[pos..pos + pat.len()] == pat[..] {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    /// Every redex of a word, as `(position, rule index)` pairs.
    pub fn all_redexes(&self, letters: &[GenId]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for pos in 0..letters.len() {
            for (ri, rule) in self.rules.iter().enumerate() {
                let pat = rule.lhs.letter_vec();
                if pos + pat.len() <= letters.len() && letters[pos..pos + pat.len()] == pat[..] {
                    out.push((pos, ri));
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, word: &Word) -> bool {
        self.find_redex(&word.letter_vec(), 0).is_none()
    }

    /// Structural identity of the algebraic content (field, generators,
    /// relations, rules, measure); the fuel default and cached analysis
    /// results do not participate.
    pub fn structurally_equal(&self, other: &Presentation) -> bool {
        self.field == other.field
            && self.generators == other.generators
            && self.relations == other.relations
            && self.rules == other.rules
            && self.measure == other.measure
    }
}

fn name_vec(gens: &[GeneratorSymbol]) -> Vec<String> {
    gens.iter().map(|g| g.name.clone()).collect()
}

/// Are two presentation handles interchangeable for element arithmetic?
pub fn compatible(a: &Arc<Presentation>, b: &Arc<Presentation>) -> bool {
    Arc::ptr_eq(a, b) || a.structurally_equal(b)
}
