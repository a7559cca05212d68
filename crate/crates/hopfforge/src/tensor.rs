//! Tensor products of presented algebras.
//!
//! A tensor element lives in `A_1 (x) ... (x) A_k` for presented algebras
//! `A_i` over one common field; it is stored as a linear combination of
//! word vectors, one word per leg.  Products reduce leg by leg, and
//! `map_leg` applies a linear map to a single leg, splicing the result back
//! in whether it lands in the field (dropping the leg), in an algebra
//! (replacing the leg), or in a tensor product (expanding the leg).

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::ncalg::{compatible, AlgebraError, Element, HomTarget, Presentation, Word};
use crate::scalar::Scalar;

/// Where a mapped leg lands: the field, an algebra, or a tensor product.
#[derive(Debug, Clone)]
pub enum LegImage {
    Scalar(Scalar),
    Element(Element),
    Tensor(TensorElement),
}

#[derive(Debug, Clone)]
pub struct TensorElement {
    legs: Vec<Arc<Presentation>>,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl TensorElement {
    pub fn zero(legs: Vec<Arc<Presentation>>) -> Result<TensorElement, AlgebraError> {
        validate_legs(&legs)?;
        Ok(TensorElement {
            legs,
            terms: BTreeMap::new(),
        })
    }

    /// `1 (x) 1 (x) ... (x) 1`.
    pub fn unit(legs: Vec<Arc<Presentation>>) -> Result<TensorElement, AlgebraError> {
        validate_legs(&legs)?;
        let field = legs[0].field();
        let mut terms = BTreeMap::new();
        terms.insert(vec![Word::one(); legs.len()], field.one());
        Ok(TensorElement { legs, terms })
    }

    /// Outer product `x_1 (x) ... (x) x_k` of algebra elements.
    pub fn from_elements(factors: &[Element]) -> Result<TensorElement, AlgebraError> {
        let legs: Vec<Arc<Presentation>> =
            factors.iter().map(|x| x.presentation().clone()).collect();
        validate_legs(&legs)?;
        let field = legs[0].field();
        let mut terms: BTreeMap<Vec<Word>, Scalar> = BTreeMap::new();
        let mut stack: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), field.one())];
        for x in factors {
            let mut next = Vec::new();
            for (words, coeff) in &stack {
                for (w, c) in x.terms() {
                    let mut ws = words.clone();
                    ws.push(w.clone());
                    next.push((ws, coeff.mul(c)?));
                }
            }
            stack = next;
        }
        for (ws, c) in stack {
            accumulate(&mut terms, ws, c)?;
        }
        Ok(TensorElement { legs, terms })
    }

    /// Combine raw `(word vector, coefficient)` terms.
    pub fn from_terms(
        legs: Vec<Arc<Presentation>>,
        raw: Vec<(Vec<Word>, Scalar)>,
    ) -> Result<TensorElement, AlgebraError> {
        validate_legs(&legs)?;
        let field = legs[0].field();
        let mut terms: BTreeMap<Vec<Word>, Scalar> = BTreeMap::new();
        for (ws, c) in raw {
            if ws.len() != legs.len() {
                return Err(AlgebraError::LegCount {
                    expected: legs.len(),
                    got: ws.len(),
                });
            }
            for (i, w) in ws.iter().enumerate() {
                if let Some(g) = w.max_gen() {
                    if g >= legs[i].generators().len() {
                        return Err(AlgebraError::GeneratorIndex(g));
                    }
                }
            }
            if c.field() != field {
                return Err(AlgebraError::Scalar(
                    crate::scalar::ScalarError::FieldMismatch {
                        left: field.to_string(),
                        right: c.field().to_string(),
                    },
                ));
            }
            accumulate(&mut terms, ws, c)?;
        }
        Ok(TensorElement { legs, terms })
    }

    pub fn legs(&self) -> &[Arc<Presentation>] {
        &self.legs
    }

    pub fn leg_count(&self) -> usize {
        self.legs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.check_same_legs(other)?;
        let mut terms = self.terms.clone();
        for (ws, c) in &other.terms {
            accumulate(&mut terms, ws.clone(), c.clone())?;
        }
        Ok(TensorElement {
            legs: self.legs.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> TensorElement {
        TensorElement {
            legs: self.legs.clone(),
            terms: self
                .terms
                .iter()
                .map(|(ws, c)| (ws.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Result<TensorElement, AlgebraError> {
        let mut terms = BTreeMap::new();
        for (ws, a) in &self.terms {
            let prod = a.mul(c)?;
            if !prod.is_zero() {
                terms.insert(ws.clone(), prod);
            }
        }
        Ok(TensorElement {
            legs: self.legs.clone(),
            terms,
        })
    }

    /// Componentwise product, each leg reduced to canonical form.
    pub fn mul(&self, other: &TensorElement, fuel: u64) -> Result<TensorElement, AlgebraError> {
        self.check_same_legs(other)?;
        let mut terms: BTreeMap<Vec<Word>, Scalar> = BTreeMap::new();
        for (wx, cx) in &self.terms {
            for (wy, cy) in &other.terms {
                // Reduce each leg's concatenation; rules have linear right
                // sides, so a leg may fan out into several words.
                let mut expansion: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), cx.mul(cy)?)];
                for i in 0..self.legs.len() {
                    let reduced = Element::from_word(&self.legs[i], wx[i].concat(&wy[i]))
                        .normal_form(fuel)?;
                    let mut next = Vec::new();
                    for (ws, coeff) in &expansion {
                        for (w, c) in reduced.terms() {
                            let mut ws2 = ws.clone();
                            ws2.push(w.clone());
                            next.push((ws2, coeff.mul(c)?));
                        }
                    }
                    expansion = next;
                }
                for (ws, c) in expansion {
                    accumulate(&mut terms, ws, c)?;
                }
            }
        }
        Ok(TensorElement {
            legs: self.legs.clone(),
            terms,
        })
    }

    /// Reduce every leg word to canonical form.
    pub fn normal_form(&self, fuel: u64) -> Result<TensorElement, AlgebraError> {
        let mut terms: BTreeMap<Vec<Word>, Scalar> = BTreeMap::new();
        for (ws, c) in &self.terms {
            let mut expansion: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), c.clone())];
            for (i, w) in ws.iter().enumerate() {
                let reduced = Element::from_word(&self.legs[i], w.clone()).normal_form(fuel)?;
                let mut next = Vec::new();
                for (acc_ws, coeff) in &expansion {
                    for (rw, rc) in reduced.terms() {
                        let mut ws2 = acc_ws.clone();
                        ws2.push(rw.clone());
                        next.push((ws2, coeff.mul(rc)?));
                    }
                }
                expansion = next;
            }
            for (ws2, c2) in expansion {
                accumulate(&mut terms, ws2, c2)?;
            }
        }
        Ok(TensorElement {
            legs: self.legs.clone(),
            terms,
        })
    }

    /// Apply a linear map to one leg.  The map reports where it lands via
    /// [`LegImage`]; scalars drop the leg, elements replace it, tensors
    /// splice their legs in place.  Every term must land in the same shape.
    pub fn map_leg<F>(&self, leg: usize, f: F) -> Result<TensorElement, AlgebraError>
    where
        F: Fn(&Element) -> Result<LegImage, AlgebraError>,
    {
        if leg >= self.legs.len() {
            return Err(AlgebraError::LegIndex(leg));
        }
        // Probe with the unit to learn the output shape, so that zero and
        // empty inputs still produce a well-typed result.
        let probe = f(&Element::one(&self.legs[leg]))?;
        let new_legs: Vec<Arc<Presentation>> = match &probe {
            LegImage::Scalar(_) => {
                let mut l = self.legs.clone();
                l.remove(leg);
                l
            }
            LegImage::Element(e) => {
                let mut l = self.legs.clone();
                l[leg] = e.presentation().clone();
                l
            }
            LegImage::Tensor(t) => {
                let mut l = self.legs[..leg].to_vec();
                l.extend(t.legs().iter().cloned());
                l.extend(self.legs[leg + 1..].iter().cloned());
                l
            }
        };
        if new_legs.is_empty() {
            return Err(AlgebraError::LegCount {
                expected: 1,
                got: 0,
            });
        }

        let mut terms: BTreeMap<Vec<Word>, Scalar> = BTreeMap::new();
        for (ws, c) in &self.terms {
            let image = f(&Element::from_word(&self.legs[leg], ws[leg].clone()))?;
            match (&probe, image) {
                (LegImage::Scalar(_), LegImage::Scalar(s)) => {
                    let mut ws2 = ws.clone();
                    ws2.remove(leg);
                    accumulate(&mut terms, ws2, c.mul(&s)?)?;
                }
                (LegImage::Element(pe), LegImage::Element(e)) => {
                    if !compatible(e.presentation(), pe.presentation()) {
                        return Err(AlgebraError::LegPresentation);
                    }
                    for (w, ec) in e.terms() {
                        let mut ws2 = ws.clone();
                        ws2[leg] = w.clone();
                        accumulate(&mut terms, ws2, c.mul(ec)?)?;
                    }
                }
                (LegImage::Tensor(pt), LegImage::Tensor(t)) => {
                    if t.legs().len() != pt.legs().len()
                        || t.legs()
                            .iter()
                            .zip(pt.legs())
                            .any(|(x, y)| !compatible(x, y))
                    {
                        return Err(AlgebraError::LegPresentation);
                    }
                    for (tws, tc) in t.terms() {
                        let mut ws2 = ws[..leg].to_vec();
                        ws2.extend(tws.iter().cloned());
                        ws2.extend(ws[leg + 1..].iter().cloned());
                        accumulate(&mut terms, ws2, c.mul(tc)?)?;
                    }
                }
                _ => return Err(AlgebraError::LegPresentation),
            }
        }
        Ok(TensorElement {
            legs: new_legs,
            terms,
        })
    }

    /// Exchange the two legs of a two-fold tensor.
    pub fn flip(&self) -> Result<TensorElement, AlgebraError> {
        if self.legs.len() != 2 {
            return Err(AlgebraError::LegCount {
                expected: 2,
                got: self.legs.len(),
            });
        }
        let legs = vec![self.legs[1].clone(), self.legs[0].clone()];
        let mut terms = BTreeMap::new();
        for (ws, c) in &self.terms {
            terms.insert(vec![ws[1].clone(), ws[0].clone()], c.clone());
        }
        Ok(TensorElement { legs, terms })
    }

    /// Multiply all legs together inside one algebra (every leg must share
    /// one presentation); this is the iterated multiplication map.
    pub fn multiply_legs(&self, fuel: u64) -> Result<Element, AlgebraError> {
        let pres = &self.legs[0];
        for l in &self.legs[1..] {
            if !compatible(l, pres) {
                return Err(AlgebraError::LegPresentation);
            }
        }
        let mut acc = Element::zero(pres);
        for (ws, c) in &self.terms {
            let mut prod = Word::one();
            for w in ws {
                prod = prod.concat(w);
            }
            let reduced = Element::from_word(pres, prod).normal_form(fuel)?.scale(c)?;
            acc = acc.add(&reduced)?;
        }
        Ok(acc)
    }

    /// View a one-leg tensor as a plain algebra element.
    pub fn into_element(&self) -> Result<Element, AlgebraError> {
        if self.legs.len() != 1 {
            return Err(AlgebraError::LegCount {
                expected: 1,
                got: self.legs.len(),
            });
        }
        Element::from_terms(
            &self.legs[0],
            self.terms
                .iter()
                .map(|(ws, c)| (ws[0].clone(), c.clone()))
                .collect(),
        )
    }

    fn check_same_legs(&self, other: &TensorElement) -> Result<(), AlgebraError> {
        if self.legs.len() != other.legs.len() {
            return Err(AlgebraError::LegCount {
                expected: self.legs.len(),
                got: other.legs.len(),
            });
        }
        for (a, b) in self.legs.iter().zip(&other.legs) {
            if !compatible(a, b) {
                return Err(AlgebraError::LegPresentation);
            }
        }
        Ok(())
    }
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.legs.len() == other.legs.len()
            && self
                .legs
                .iter()
                .zip(&other.legs)
                .all(|(a, b)| compatible(a, b))
            && self.terms == other.terms
    }
}

impl Eq for TensorElement {}

impl std::fmt::Display for TensorElement {
    /// Terms in descending order; legs joined with the `(x)` separator.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names: Vec<Vec<String>> = self.legs.iter().map(|l| l.generator_names()).collect();
        let mut first = true;
        for (ws, c) in self.terms.iter().rev() {
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
            let body = ws
                .iter()
                .enumerate()
                .map(|(i, w)| w.format(&names[i]))
                .collect::<Vec<_>>()
                .join(" (x) ");
            if mag.is_one() {
                write!(f, "{body}")?;
            } else {
                let s = mag.to_string();
                if mag.needs_parens() {
                    write!(f, "({s})*{body}")?;
                } else {
                    write!(f, "{s}*{body}")?;
                }
            }
        }
        Ok(())
    }
}

fn validate_legs(legs: &[Arc<Presentation>]) -> Result<(), AlgebraError> {
    if legs.is_empty() {
        return Err(AlgebraError::LegCount {
            expected: 1,
            got: 0,
        });
    }
    let field = legs[0].field();
    for l in legs {
        if l.field() != field {
            return Err(AlgebraError::Scalar(
                crate::scalar::ScalarError::FieldMismatch {
                    left: field.to_string(),
                    right: l.field().to_string(),
                },
            ));
        }
    }
    Ok(())
}

fn accumulate(
    terms: &mut BTreeMap<Vec<Word>, Scalar>,
    ws: Vec<Word>,
    c: Scalar,
) -> Result<(), AlgebraError> {
    if c.is_zero() {
        return Ok(());
    }
    match terms.entry(ws) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
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
    Ok(())
}

/// A tensor power as a hom target, so coproducts and coactions extend over
/// whole algebras through the generic evaluation engine.
pub struct TensorTarget {
    pub legs: Vec<Arc<Presentation>>,
    pub fuel: u64,
}

impl HomTarget for TensorTarget {
    type Value = TensorElement;

    fn zero(&self) -> TensorElement {
        TensorElement::zero(self.legs.clone()).expect("validated legs")
    }

    fn one(&self) -> TensorElement {
        TensorElement::unit(self.legs.clone()).expect("validated legs")
    }

    fn mul(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement, AlgebraError> {
        a.mul(b, self.fuel)
    }

    fn add(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement, AlgebraError> {
        a.add(b)
    }

    fn scale(&self, a: &TensorElement, c: &Scalar) -> Result<TensorElement, AlgebraError> {
        a.scale(c)
    }
}
