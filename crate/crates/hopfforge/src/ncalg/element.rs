//! Elements of a presented algebra: finite linear combinations of words.
//!
//! Terms live in a `BTreeMap` keyed by the graded word order, so iteration,
//! equality, and printing are deterministic.  An element remembers whether
//! its words are known to be irreducible (`canonical`); arithmetic that can
//! only shrink the support preserves the flag, and `normal_form` establishes
//! it.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::ncalg::error::AlgebraError;
use crate::ncalg::presentation::{compatible, Presentation};
use crate::ncalg::rewrite;
use crate::ncalg::word::{GenId, Word};
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct Element {
    pres: Arc<Presentation>,
    terms: BTreeMap<Word, Scalar>,
    canonical: bool,
}

impl Element {
    pub fn zero(pres: &Arc<Presentation>) -> Element {
        Element {
            pres: pres.clone(),
            terms: BTreeMap::new(),
            canonical: true,
        }
    }

    pub fn one(pres: &Arc<Presentation>) -> Element {
        Element::from_word(pres, Word::one())
    }

    pub fn generator(pres: &Arc<Presentation>, g: GenId) -> Result<Element, AlgebraError> {
        if g >= pres.generators().len() {
            return Err(AlgebraError::GeneratorIndex(g));
        }
        Ok(Element::from_word(pres, Word::gen(g)))
    }

    pub fn generator_named(pres: &Arc<Presentation>, name: &str) -> Result<Element, AlgebraError> {
        let g = pres
            .gen_id(name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))?;
        Element::generator(pres, g)
    }

    /// A single word with coefficient one.
    pub fn from_word(pres: &Arc<Presentation>, word: Word) -> Element {
        let canonical = pres.is_irreducible(&word);
        let mut terms = BTreeMap::new();
        terms.insert(word, pres.field().one());
        Element {
            pres: pres.clone(),
            terms,
            canonical,
        }
    }

    /// Embed a scalar as `c * 1`.
    pub fn scalar(pres: &Arc<Presentation>, c: Scalar) -> Result<Element, AlgebraError> {
        Element::from_terms(pres, vec![(Word::one(), c)])
    }

    /// Combine raw `(word, coefficient)` terms; like terms merge and zero
    /// coefficients drop.  The result is not assumed canonical.
    pub fn from_terms(
        pres: &Arc<Presentation>,
        raw: Vec<(Word, Scalar)>,
    ) -> Result<Element, AlgebraError> {
        let mut terms: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (w, c) in raw {
            if c.field() != pres.field() {
                return Err(AlgebraError::Scalar(
                    crate::scalar::ScalarError::FieldMismatch {
                        left: pres.field().to_string(),
                        right: c.field().to_string(),
                    },
                ));
            }
            if let Some(g) = w.max_gen() {
                if g >= pres.generators().len() {
                    return Err(AlgebraError::GeneratorIndex(g));
                }
            }
            match terms.entry(w) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    if !c.is_zero() {
                        e.insert(c);
                    }
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get().add(&c)?;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        let canonical = terms.keys().all(|w| pres.is_irreducible(w));
        Ok(Element {
            pres: pres.clone(),
            terms,
            canonical,
        })
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// Largest word length in the support (0 for the zero element).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    fn ensure_compatible(&self, other: &Element) -> Result<(), AlgebraError> {
        if compatible(&self.pres, &other.pres) {
            Ok(())
        } else {
            Err(AlgebraError::PresentationMismatch)
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.ensure_compatible(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            match terms.entry(w.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get().add(c)?;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        Ok(Element {
            pres: self.pres.clone(),
            terms,
            canonical: self.canonical && other.canonical,
        })
    }

    pub fn neg(&self) -> Element {
        Element {
            pres: self.pres.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
            canonical: self.canonical,
        }
    }

    pub fn sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Result<Element, AlgebraError> {
        if c.field() != self.pres.field() {
            return Err(AlgebraError::Scalar(
                crate::scalar::ScalarError::FieldMismatch {
                    left: self.pres.field().to_string(),
                    right: c.field().to_string(),
                },
            ));
        }
        if c.is_zero() {
            return Ok(Element::zero(&self.pres));
        }
        let mut terms = BTreeMap::new();
        for (w, a) in &self.terms {
            let prod = a.mul(c)?;
            if !prod.is_zero() {
                terms.insert(w.clone(), prod);
            }
        }
        Ok(Element {
            pres: self.pres.clone(),
            terms,
            canonical: self.canonical,
        })
    }

    /// Product in the free algebra: bilinear word concatenation, no
    /// reduction.
    pub fn mul_free(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.ensure_compatible(other)?;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                raw.push((w1.concat(w2), c1.mul(c2)?));
            }
        }
        Element::from_terms(&self.pres, raw)
    }

    /// Product in the presented algebra: concatenate, then reduce to normal
    /// form with the presentation's default fuel.
    pub fn mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.mul_free(other)?.normal_form(self.pres.default_fuel())
    }

    pub fn pow(&self, e: u32) -> Result<Element, AlgebraError> {
        let mut acc = Element::one(&self.pres);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Canonical form under the presentation's rewrite system.
    pub fn normal_form(&self, fuel: u64) -> Result<Element, AlgebraError> {
        if self.canonical {
            return Ok(self.clone());
        }
        rewrite::normal_form(self, fuel)
    }

    pub(crate) fn from_reduced_terms(
        pres: Arc<Presentation>,
        terms: BTreeMap<Word, Scalar>,
    ) -> Element {
        Element {
            pres,
            terms,
            canonical: true,
        }
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        compatible(&self.pres, &other.pres) && self.terms == other.terms
    }
}

impl Eq for Element {}

impl std::fmt::Display for Element {
    /// Canonical rendering: terms in descending word order, negative
    /// coefficients folded into the joining sign where the field has a
    /// canonical sign, unit coefficients omitted.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.pres.generator_names();
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            let (mag, negative) = match c.display_neg_abs() {
                Some(abs) => (abs, true),
                None => (c.clone(), false),
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let word_part = w.format(&names);
            if w.is_one() {
                let s = mag.to_string();
                if mag.needs_parens() {
                    write!(f, "({s})")?;
                } else {
                    write!(f, "{s}")?;
                }
            } else if mag.is_one() {
                write!(f, "{word_part}")?;
            } else {
                let s = mag.to_string();
                if mag.needs_parens() {
                    write!(f, "({s})*{word_part}")?;
                } else {
                    write!(f, "{s}*{word_part}")?;
                }
            }
        }
        Ok(())
    }
}
