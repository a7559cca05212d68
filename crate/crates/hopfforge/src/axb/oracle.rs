//! Independent crossed-product model for the q-twisted algebras
//! `k<a, a^-1, b> / (a^n b - q b a^n)`.
//!
//! This model never touches the rewrite engine, so it can arbitrate the
//! engine's canonical forms.  Set `b_i := a^i b a^-i` for `i` in `Z`.  The
//! defining relation `a^n b = q b a^n` says precisely `b_{i+n} = q b_i`, so
//! the `b_i` are determined by representatives `b_0, ..., b_{n-1}` up to
//! powers of `q`.  A basis of the algebra is
//!
//! ```text
//!     b_{i_1} b_{i_2} ... b_{i_m} a^t,   0 <= i_k < n,  t in Z,
//! ```
//!
//! a free word in the representatives times a shift.  The product law is
//! forced by two computations:
//!
//! 1. `a^t b_j = a^t (a^j b a^-j) = a^{t+j} b a^-(t+j) a^t = b_{j+t} a^t`,
//!    so a shift passing a `b`-letter raises its index by the shift;
//! 2. `b_{j+t} = q^floor((j+t)/n) b_{(j+t) mod n}` by iterating the twist
//!    (Euclidean floor and remainder, valid for negative values).
//!
//! Hence `(I; t) * (J; s) = q^E (I ++ ((J+t) mod n); t+s)` with
//! `E = sum_k floor((j_k + t)/n)`.  The generators embed as
//! `a -> (; 1)`, `a^-1 -> (; -1)`, `b -> (0; 0)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::ncalg::{AlgebraError, Element, GenId, Presentation};
use crate::scalar::Scalar;

/// Basis word of the crossed-product model: `b`-letter indices (each in
/// `[0, n)`) followed by a shift power.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CrossedWord {
    pub indices: Vec<u32>,
    pub shift: i64,
}

impl CrossedWord {
    pub fn unit() -> CrossedWord {
        CrossedWord {
            indices: Vec::new(),
            shift: 0,
        }
    }
}

/// A finite linear combination of crossed-product basis words.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossedElement {
    terms: BTreeMap<CrossedWord, Scalar>,
}

impl CrossedElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CrossedWord, &Scalar)> {
        self.terms.iter()
    }
}

/// Which generators of a presentation play the shift, inverse-shift, and
/// `b` roles when evaluating into the model.
#[derive(Debug, Clone, Copy)]
pub struct GeneratorRoles {
    pub shift: GenId,
    pub shift_inverse: GenId,
    pub skew: GenId,
}

/// The crossed-product model at twist parameter `q` and period `n >= 1`.
#[derive(Debug, Clone)]
pub struct CrossedModel {
    n: u32,
    q: Scalar,
}

impl CrossedModel {
    pub fn new(n: u32, q: Scalar) -> Result<CrossedModel, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::Structure(
                "crossed-product model needs period n >= 1".into(),
            ));
        }
        if q.is_zero() {
            return Err(AlgebraError::Structure(
                "crossed-product model needs an invertible twist parameter".into(),
            ));
        }
        Ok(CrossedModel { n, q })
    }

    pub fn period(&self) -> u32 {
        self.n
    }

    pub fn zero(&self) -> CrossedElement {
        CrossedElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> CrossedElement {
        self.monomial(CrossedWord::unit(), self.q.field().one())
    }

    fn monomial(&self, w: CrossedWord, c: Scalar) -> CrossedElement {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        CrossedElement { terms }
    }

    /// The product law `(I; t) * (J; s)`; returns the twist power picked up
    /// and the resulting basis word.
    fn word_mul(
        &self,
        x: &CrossedWord,
        y: &CrossedWord,
    ) -> Result<(Scalar, CrossedWord), AlgebraError> {
        let n = self.n as i64;
        let mut twist_exp: i64 = 0;
        let mut indices = x.indices.clone();
        for &j in &y.indices {
            let raised = j as i64 + x.shift;
            twist_exp += raised.div_euclid(n);
            indices.push(raised.rem_euclid(n) as u32);
        }
        let coeff = self.q.pow(twist_exp)?;
        Ok((
            coeff,
            CrossedWord {
                indices,
                shift: x.shift + y.shift,
            },
        ))
    }

    pub fn add(
        &self,
        x: &CrossedElement,
        y: &CrossedElement,
    ) -> Result<CrossedElement, AlgebraError> {
        let mut terms = x.terms.clone();
        for (w, c) in &y.terms {
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
        Ok(CrossedElement { terms })
    }

    pub fn scale(&self, x: &CrossedElement, c: &Scalar) -> Result<CrossedElement, AlgebraError> {
        let mut terms = BTreeMap::new();
        for (w, a) in &x.terms {
            let prod = a.mul(c)?;
            if !prod.is_zero() {
                terms.insert(w.clone(), prod);
            }
        }
        Ok(CrossedElement { terms })
    }

    pub fn mul(
        &self,
        x: &CrossedElement,
        y: &CrossedElement,
    ) -> Result<CrossedElement, AlgebraError> {
        let mut acc = self.zero();
        for (wx, cx) in &x.terms {
            for (wy, cy) in &y.terms {
                let (twist, w) = self.word_mul(wx, wy)?;
                let coeff = cx.mul(cy)?.mul(&twist)?;
                acc = self.add(&acc, &self.monomial(w, coeff))?;
            }
        }
        Ok(acc)
    }

    /// Image of a single generator under the embedding.
    pub fn generator_image(&self, roles: GeneratorRoles, g: GenId) -> Option<CrossedElement> {
        let one = self.q.field().one();
        if g == roles.shift {
            Some(self.monomial(
                CrossedWord {
                    indices: vec![],
                    shift: 1,
                },
                one,
            ))
        } else if g == roles.shift_inverse {
            Some(self.monomial(
                CrossedWord {
                    indices: vec![],
                    shift: -1,
                },
                one,
            ))
        } else if g == roles.skew {
            Some(self.monomial(
                CrossedWord {
                    indices: vec![0],
                    shift: 0,
                },
                one,
            ))
        } else {
            None
        }
    }

    /// Evaluate an engine element into the model.
    pub fn eval(
        &self,
        pres: &Arc<Presentation>,
        roles: GeneratorRoles,
        x: &Element,
    ) -> Result<CrossedElement, AlgebraError> {
        let mut acc = self.zero();
        for (word, coeff) in x.terms() {
            let mut v = self.one();
            for (g, e) in word.runs() {
                let img = self
                    .generator_image(roles, *g)
                    .ok_or_else(|| AlgebraError::UnknownGenerator(pres.gen_name(*g).to_string()))?;
                for _ in 0..*e {
                    v = self.mul(&v, &img)?;
                }
            }
            acc = self.add(&acc, &self.scale(&v, coeff)?)?;
        }
        Ok(acc)
    }

    /// Do two engine elements represent the same algebra element?
    pub fn elements_equal(
        &self,
        pres: &Arc<Presentation>,
        roles: GeneratorRoles,
        x: &Element,
        y: &Element,
    ) -> Result<bool, AlgebraError> {
        Ok(self.eval(pres, roles, x)? == self.eval(pres, roles, y)?)
    }
}
