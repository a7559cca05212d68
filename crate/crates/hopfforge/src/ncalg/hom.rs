//! Extending generator assignments to (anti)homomorphisms.
//!
//! The same evaluation engine drives every structure map in the crate: an
//! assignment of images to generators extends multiplicatively over words
//! (in reverse order for antihomomorphisms) and linearly over elements.  The
//! target only needs unit, product, sum, and scalar action, so algebras,
//! tensor powers, and the base field itself all plug in.

use std::sync::Arc;

use crate::ncalg::element::Element;
use crate::ncalg::error::AlgebraError;
use crate::ncalg::presentation::Presentation;
use crate::ncalg::word::GenId;
use crate::scalar::{FieldDescriptor, Scalar};

/// Anything an algebra map can land in.
pub trait HomTarget {
    type Value: Clone;
    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, AlgebraError>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, AlgebraError>;
    fn scale(&self, a: &Self::Value, c: &Scalar) -> Result<Self::Value, AlgebraError>;
}

/// A presented algebra as a hom target; products are reduced with `fuel`.
pub struct AlgebraTarget {
    pub pres: Arc<Presentation>,
    pub fuel: u64,
}

impl HomTarget for AlgebraTarget {
    type Value = Element;

    fn zero(&self) -> Element {
        Element::zero(&self.pres)
    }

    fn one(&self) -> Element {
        Element::one(&self.pres)
    }

    fn mul(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        a.mul_free(b)?.normal_form(self.fuel)
    }

    fn add(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        a.add(b)
    }

    fn scale(&self, a: &Element, c: &Scalar) -> Result<Element, AlgebraError> {
        a.scale(c)
    }
}

/// The coefficient field as a hom target (for counits and characters).
pub struct ScalarTarget {
    pub field: FieldDescriptor,
}

impl HomTarget for ScalarTarget {
    type Value = Scalar;

    fn zero(&self) -> Scalar {
        self.field.zero()
    }

    fn one(&self) -> Scalar {
        self.field.one()
    }

    fn mul(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, AlgebraError> {
        Ok(a.mul(b)?)
    }

    fn add(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, AlgebraError> {
        Ok(a.add(b)?)
    }

    fn scale(&self, a: &Scalar, c: &Scalar) -> Result<Scalar, AlgebraError> {
        Ok(a.mul(c)?)
    }
}

/// Evaluate an element under generator images.  With `anti` set, each word
/// is evaluated right to left, extending an antihomomorphism.
pub fn eval_element<T: HomTarget>(
    target: &T,
    x: &Element,
    images: &[T::Value],
    anti: bool,
) -> Result<T::Value, AlgebraError> {
    let mut acc = target.zero();
    for (word, coeff) in x.terms() {
        let mut v = target.one();
        let runs: Vec<(GenId, u32)> = if anti {
            word.runs().iter().rev().copied().collect()
        } else {
            word.runs().to_vec()
        };
        for (g, e) in runs {
            let img = images.get(g).ok_or(AlgebraError::GeneratorIndex(g))?;
            for _ in 0..e {
                v = target.mul(&v, img)?;
            }
        }
        acc = target.add(&acc, &target.scale(&v, coeff)?)?;
    }
    Ok(acc)
}

/// Outcome of checking a candidate map on the defining relations.
#[derive(Debug, Clone)]
pub enum WellDefinedness {
    WellDefined,
    /// Some relation maps to a nonzero element: the map does not descend.
    Violated {
        relation: Element,
        image: Element,
    },
}

impl WellDefinedness {
    pub fn is_well_defined(&self) -> bool {
        matches!(self, WellDefinedness::WellDefined)
    }
}

/// A linear multiplicative (or antimultiplicative) map between presented
/// algebras, given by images of the source generators.
#[derive(Debug, Clone)]
pub struct AlgebraHom {
    source: Arc<Presentation>,
    target: Arc<Presentation>,
    images: Vec<Element>,
    anti: bool,
}

impl AlgebraHom {
    pub fn new(
        source: &Arc<Presentation>,
        target: &Arc<Presentation>,
        images: Vec<Element>,
        anti: bool,
    ) -> Result<AlgebraHom, AlgebraError> {
        if images.len() != source.generators().len() {
            let missing = source
                .generators()
                .get(images.len())
                .map(|g| g.name.clone())
                .unwrap_or_else(|| "?".to_string());
            return Err(AlgebraError::MissingImage(missing));
        }
        for img in &images {
            if !crate::ncalg::presentation::compatible(img.presentation(), target) {
                return Err(AlgebraError::PresentationMismatch);
            }
        }
        Ok(AlgebraHom {
            source: source.clone(),
            target: target.clone(),
            images,
            anti,
        })
    }

    /// Convenience: images given by generator name.
    pub fn from_named(
        source: &Arc<Presentation>,
        target: &Arc<Presentation>,
        named: &[(&str, Element)],
        anti: bool,
    ) -> Result<AlgebraHom, AlgebraError> {
        let mut images: Vec<Option<Element>> = vec![None; source.generators().len()];
        for (name, img) in named {
            let g = source
                .gen_id(name)
                .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))?;
            images[g] = Some(img.clone());
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(g, img)| {
                img.ok_or_else(|| AlgebraError::MissingImage(source.gen_name(g).to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        AlgebraHom::new(source, target, images, anti)
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Presentation> {
        &self.target
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn is_anti(&self) -> bool {
        self.anti
    }

    pub fn apply(&self, x: &Element) -> Result<Element, AlgebraError> {
        if !crate::ncalg::presentation::compatible(x.presentation(), &self.source) {
            return Err(AlgebraError::PresentationMismatch);
        }
        let target = AlgebraTarget {
            pres: self.target.clone(),
            fuel: self.target.default_fuel(),
        };
        eval_element(&target, x, &self.images, self.anti)
    }

    /// Check that every defining relation of the source maps to zero in the
    /// target; for `anti` maps this verifies the reversed relations.
    pub fn well_defined(&self, fuel: u64) -> Result<WellDefinedness, AlgebraError> {
        let target = AlgebraTarget {
            pres: self.target.clone(),
            fuel,
        };
        for raw in self.source.raw_relations() {
            let rel = Element::from_terms(&self.source, raw.clone())?;
            let image = eval_element(&target, &rel, &self.images, self.anti)?;
            if !image.is_zero() {
                return Ok(WellDefinedness::Violated {
                    relation: rel,
                    image,
                });
            }
        }
        Ok(WellDefinedness::WellDefined)
    }
}
