//! Comodule algebras and coactions.
//!
//! A [`ComoduleAlgebra`] is a presented algebra with a degree weight per
//! generator; [`CoactionSpec`] attaches generator images of a right or
//! left coaction by a Hopf presentation.  The checkers verify coaction
//! coassociativity, the counit law, multiplicativity, and degree
//! filtration; [`classify_to_universal`] factors an arbitrary coaction on
//! the polynomial line through the universal one in verified stages.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::axb::{standard_coaction, standard_structure, universal_axb, GEN_A, GEN_AINV, GEN_B};
use crate::hopf::{CheckOutcome, HopfPresentation, MultiplicativeMatrix};
use crate::ncalg::{
    compatible, eval_element, sample::sample_element, AlgebraError, AlgebraHom, Element, Measure,
    Presentation, WellDefinedness, Word,
};
use crate::scalar::FieldDescriptor;
use crate::tensor::{LegImage, TensorElement, TensorTarget};

/// A presented algebra with a degree weight per generator.
#[derive(Debug, Clone)]
pub struct ComoduleAlgebra {
    pres: Arc<Presentation>,
    degrees: Vec<u64>,
}

impl ComoduleAlgebra {
    pub fn new(
        pres: Arc<Presentation>,
        degrees: Vec<u64>,
    ) -> Result<ComoduleAlgebra, AlgebraError> {
        if degrees.len() != pres.generators().len() {
            return Err(AlgebraError::Structure(format!(
                "need {} generator degrees, got {}",
                pres.generators().len(),
                degrees.len()
            )));
        }
        Ok(ComoduleAlgebra { pres, degrees })
    }

    /// The free polynomial algebra on one degree-one generator.
    pub fn polynomial_line(
        field: FieldDescriptor,
        name: &str,
    ) -> Result<ComoduleAlgebra, AlgebraError> {
        let pres = Presentation::new(field, &[name], vec![], vec![], Measure::Length, 1_000)?;
        ComoduleAlgebra::new(pres, vec![1])
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn degree(&self, g: usize) -> u64 {
        self.degrees[g]
    }

    pub fn word_degree(&self, w: &Word) -> u64 {
        w.runs()
            .iter()
            .map(|(g, e)| self.degrees[*g] * u64::from(*e))
            .sum()
    }

    /// Largest term degree, or `None` for the zero element.
    pub fn element_degree(&self, x: &Element) -> Option<u64> {
        x.terms().map(|(w, _)| self.word_degree(w)).max()
    }
}

/// Which side the Hopf algebra coacts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoactionSide {
    /// Images live in `B (x) A`.
    Right,
    /// Images live in `A (x) B`.
    Left,
}

/// A coaction of a Hopf presentation on a comodule algebra, given by
/// generator images.
#[derive(Debug, Clone)]
pub struct CoactionSpec {
    comodule: ComoduleAlgebra,
    hopf: HopfPresentation,
    side: CoactionSide,
    images: Vec<TensorElement>,
}

impl CoactionSpec {
    pub fn new(
        comodule: ComoduleAlgebra,
        hopf: HopfPresentation,
        side: CoactionSide,
        images: Vec<TensorElement>,
    ) -> Result<CoactionSpec, AlgebraError> {
        let b = comodule.presentation();
        let a = hopf.base();
        if b.field() != a.field() {
            return Err(AlgebraError::Scalar(
                crate::scalar::ScalarError::FieldMismatch {
                    left: b.field().to_string(),
                    right: a.field().to_string(),
                },
            ));
        }
        if images.len() != b.generators().len() {
            return Err(AlgebraError::MissingImage(format!(
                "coaction needs {} generator images, got {}",
                b.generators().len(),
                images.len()
            )));
        }
        let (first, second) = match side {
            CoactionSide::Right => (b, a),
            CoactionSide::Left => (a, b),
        };
        for t in &images {
            if t.leg_count() != 2 {
                return Err(AlgebraError::LegCount {
                    expected: 2,
                    got: t.leg_count(),
                });
            }
            if !compatible(&t.legs()[0], first) || !compatible(&t.legs()[1], second) {
                return Err(AlgebraError::LegPresentation);
            }
        }
        Ok(CoactionSpec {
            comodule,
            hopf,
            side,
            images,
        })
    }

    pub fn comodule(&self) -> &ComoduleAlgebra {
        &self.comodule
    }

    pub fn hopf(&self) -> &HopfPresentation {
        &self.hopf
    }

    pub fn side(&self) -> CoactionSide {
        self.side
    }

    pub fn images(&self) -> &[TensorElement] {
        &self.images
    }

    fn legs(&self) -> Vec<Arc<Presentation>> {
        let b = self.comodule.presentation().clone();
        let a = self.hopf.base().clone();
        match self.side {
            CoactionSide::Right => vec![b, a],
            CoactionSide::Left => vec![a, b],
        }
    }

    /// Index of the comodule leg in the coaction's codomain.
    fn comodule_leg(&self) -> usize {
        match self.side {
            CoactionSide::Right => 0,
            CoactionSide::Left => 1,
        }
    }

    /// Index of the Hopf-algebra leg in the coaction's codomain.
    fn hopf_leg(&self) -> usize {
        1 - self.comodule_leg()
    }

    /// Apply the coaction to an element of the comodule algebra.
    pub fn coact(&self, p: &Element) -> Result<TensorElement, AlgebraError> {
        self.coact_with_fuel(p, self.hopf.base().default_fuel())
    }

    pub fn coact_with_fuel(&self, p: &Element, fuel: u64) -> Result<TensorElement, AlgebraError> {
        if !compatible(p.presentation(), self.comodule.presentation()) {
            return Err(AlgebraError::PresentationMismatch);
        }
        let target = TensorTarget {
            legs: self.legs(),
            fuel,
        };
        eval_element(&target, p, &self.images, false)
    }
}

/// Coaction coassociativity and counit law on one element; `None` means
/// both identities hold exactly.
fn coaction_defect(
    spec: &CoactionSpec,
    p: &Element,
    fuel: u64,
) -> Result<Option<String>, AlgebraError> {
    let h = spec.hopf();
    let ap = spec.coact_with_fuel(p, fuel)?;
    let (again, delta_side) = match spec.side() {
        CoactionSide::Right => {
            // (alpha (x) id) alpha versus (id (x) delta) alpha, both in B (x) A (x) A.
            let again = ap.map_leg(0, |e| Ok(LegImage::Tensor(spec.coact_with_fuel(e, fuel)?)))?;
            let delta_side =
                ap.map_leg(1, |e| Ok(LegImage::Tensor(h.delta_with_fuel(e, fuel)?)))?;
            (again, delta_side)
        }
        CoactionSide::Left => {
            // (id (x) alpha) alpha versus (delta (x) id) alpha, both in A (x) A (x) B.
            let again = ap.map_leg(1, |e| Ok(LegImage::Tensor(spec.coact_with_fuel(e, fuel)?)))?;
            let delta_side =
                ap.map_leg(0, |e| Ok(LegImage::Tensor(h.delta_with_fuel(e, fuel)?)))?;
            (again, delta_side)
        }
    };
    if again != delta_side {
        return Ok(Some(format!(
            "coaction coassociativity fails on {p}: repeated coaction gives {again} but the coproduct side gives {delta_side}"
        )));
    }
    let collapsed = ap
        .map_leg(spec.hopf_leg(), |e| Ok(LegImage::Scalar(h.counit(e)?)))?
        .into_element()?;
    let pnf = p.normal_form(fuel)?;
    if collapsed != pnf {
        return Ok(Some(format!(
            "coaction counit law fails on {p}: collapsing the Hopf leg gives {collapsed}"
        )));
    }
    Ok(None)
}

/// Full coaction check: well-definedness on the comodule relations, then
/// coassociativity and the counit law exactly on generators and random
/// elements, plus multiplicativity and unitality spot checks.
pub fn check_coaction(
    spec: &CoactionSpec,
    max_degree: usize,
    samples: usize,
    seed: u64,
    fuel: u64,
) -> Result<CheckOutcome, AlgebraError> {
    let b = spec.comodule().presentation();
    for raw in b.raw_relations() {
        let rel = Element::from_terms(b, raw.clone())?;
        let img = spec.coact_with_fuel(&rel, fuel)?;
        if !img.is_zero() {
            return Ok(CheckOutcome::fail(format!(
                "coaction is not defined on the quotient: alpha({rel}) = {img}"
            )));
        }
    }

    let unit = spec.coact_with_fuel(&Element::one(b), fuel)?;
    if unit != TensorElement::unit(spec.legs())? {
        return Ok(CheckOutcome::fail(format!("alpha(1) = {unit}, expected 1")));
    }

    for g in 0..b.generators().len() {
        let x = Element::generator(b, g)?;
        if let Some(witness) = coaction_defect(spec, &x, fuel)? {
            return Ok(CheckOutcome::fail(witness));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let p = sample_element(b, max_degree, &mut rng)?;
        if let Some(witness) = coaction_defect(spec, &p, fuel)? {
            return Ok(CheckOutcome::fail(witness));
        }
    }

    for _ in 0..samples / 2 {
        let p = sample_element(b, max_degree, &mut rng)?;
        let q = sample_element(b, max_degree, &mut rng)?;
        let apq = spec.coact_with_fuel(&p.mul(&q)?, fuel)?;
        let apaq = spec
            .coact_with_fuel(&p, fuel)?
            .mul(&spec.coact_with_fuel(&q, fuel)?, fuel)?;
        if apq != apaq {
            return Ok(CheckOutcome::fail(format!(
                "coaction is not multiplicative on ({p})*({q})"
            )));
        }
    }

    Ok(CheckOutcome::Pass)
}

/// Verify that the coaction respects the degree filtration: every term of
/// `alpha(p)` keeps its comodule leg inside the degree-`d` part whenever
/// `p` has degree `d`, for random `p` of degree at most `cap`.
pub fn check_filtration(
    spec: &CoactionSpec,
    cap: usize,
    samples: usize,
    seed: u64,
    fuel: u64,
) -> Result<CheckOutcome, AlgebraError> {
    let b = spec.comodule().presentation();
    let leg = spec.comodule_leg();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let p = sample_element(b, cap, &mut rng)?.normal_form(fuel)?;
        let Some(d) = spec.comodule().element_degree(&p) else {
            continue;
        };
        let ap = spec.coact_with_fuel(&p, fuel)?;
        for (ws, _) in ap.terms() {
            let term_degree = spec.comodule().word_degree(&ws[leg]);
            if term_degree > d {
                return Ok(CheckOutcome::fail(format!(
                    "filtration violated: alpha({p}) has a comodule-leg term of degree {term_degree} > {d}"
                )));
            }
        }
    }
    Ok(CheckOutcome::Pass)
}

/// The matrix of the coaction on a finite basis of comodule words:
/// `alpha(e_i) = sum_j e_j (x) m[j][i]`.  Every comodule-leg word of every
/// image must lie in the basis.
pub fn matrix_on_basis(
    spec: &CoactionSpec,
    basis: &[Word],
    fuel: u64,
) -> Result<MultiplicativeMatrix, AlgebraError> {
    let b = spec.comodule().presentation();
    let a = spec.hopf().base();
    let leg = spec.comodule_leg();
    let n = basis.len();
    let mut columns: Vec<Vec<Element>> = Vec::with_capacity(n);
    for w in basis {
        let e = Element::from_word(b, w.clone());
        let ap = spec.coact_with_fuel(&e, fuel)?;
        let mut column: Vec<Vec<(Word, crate::scalar::Scalar)>> = vec![Vec::new(); n];
        for (ws, c) in ap.terms() {
            let j = basis.iter().position(|bw| bw == &ws[leg]).ok_or_else(|| {
                AlgebraError::Structure(format!(
                    "coaction leaves the span of the basis: term {} appears",
                    ws[leg].format(&b.generator_names())
                ))
            })?;
            column[j].push((ws[1 - leg].clone(), c.clone()));
        }
        columns.push(
            column
                .into_iter()
                .map(|terms| Element::from_terms(a, terms))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    let entries = (0..n)
        .map(|j| (0..n).map(|i| columns[i][j].clone()).collect())
        .collect();
    MultiplicativeMatrix::new(entries)
}

/// Outcome of factoring a coaction through the universal one.
#[derive(Debug, Clone)]
pub enum Classification {
    /// Every stage passed; the projection sends the universal generators to
    /// the returned elements.
    Factors {
        scaling: Element,
        scaling_inverse: Element,
        translation: Element,
    },
    /// A stage failed: 1 = coaction image not affine in the generator,
    /// 2 = scaling part not invertible, 3 = projection not well defined,
    /// 4 = projection not comultiplicative/counital, 5 = antipode not
    /// intertwined, 6 = coaction does not factor through the projection.
    Failed { stage: u8, witness: String },
}

impl Classification {
    pub fn factors(&self) -> bool {
        matches!(self, Classification::Factors { .. })
    }
}

/// Factor a right coaction on the polynomial line through the universal
/// one.  Stages: (1) the image of the line generator is affine,
/// `x (x) a0 + 1 (x) b0`; (2) `a0` is invertible (the inverse comes from
/// `inverse_hint` or the antipode); (3) mapping the universal generators
/// onto `a0`, its inverse, and `b0` is a well-defined homomorphism;
/// (4) that map is comultiplicative and counital; (5) it intertwines the
/// antipodes; (6) pushing the universal coaction through it reproduces the
/// given coaction on random polynomials.
pub fn classify_to_universal(
    spec: &CoactionSpec,
    inverse_hint: Option<Element>,
    max_degree: usize,
    samples: usize,
    seed: u64,
    fuel: u64,
) -> Result<Classification, AlgebraError> {
    if spec.side() != CoactionSide::Right {
        return Err(AlgebraError::Structure(
            "classification expects a right coaction".into(),
        ));
    }
    let b_pres = spec.comodule().presentation();
    if b_pres.generators().len() != 1 {
        return Err(AlgebraError::Structure(
            "classification expects the polynomial line (one generator)".into(),
        ));
    }
    let h0 = spec.hopf();
    let a0_pres = h0.base();

    // Stage 1: the image of x must be x (x) a0 + 1 (x) b0.
    let x = Element::generator(b_pres, 0)?;
    let ax = spec.coact_with_fuel(&x, fuel)?;
    let x_word = Word::gen(0);
    let one_word = Word::one();
    let mut scaling_terms = Vec::new();
    let mut translation_terms = Vec::new();
    for (ws, c) in ax.terms() {
        if ws[0] == x_word {
            scaling_terms.push((ws[1].clone(), c.clone()));
        } else if ws[0] == one_word {
            translation_terms.push((ws[1].clone(), c.clone()));
        } else {
            return Ok(Classification::Failed {
                stage: 1,
                witness: format!(
                    "coaction image is not affine: alpha({x}) = {ax} has comodule-leg term {}",
                    ws[0].format(&b_pres.generator_names())
                ),
            });
        }
    }
    let a0 = Element::from_terms(a0_pres, scaling_terms)?;
    let b0 = Element::from_terms(a0_pres, translation_terms)?;
    if a0.is_zero() {
        return Ok(Classification::Failed {
            stage: 1,
            witness: format!("coaction image has no scaling part: alpha({x}) = {ax}"),
        });
    }

    // Stage 2: a0 must be invertible.
    let a0_inv = match inverse_hint {
        Some(e) => e,
        None => h0.antipode_with_fuel(&a0, fuel)?,
    };
    for (label, product) in [("left", a0.mul(&a0_inv)?), ("right", a0_inv.mul(&a0)?)] {
        let defect = product.sub(&Element::one(a0_pres))?;
        if !defect.is_zero() {
            return Ok(Classification::Failed {
                stage: 2,
                witness: format!(
                    "scaling part is not invertible: {label} product differs from 1 by {defect}"
                ),
            });
        }
    }

    // Stage 3: the projection from the universal algebra is well defined.
    let field = a0_pres.field();
    let universal = universal_axb(field)?;
    let mut images = vec![Element::zero(a0_pres); 3];
    images[GEN_A] = a0.clone();
    images[GEN_AINV] = a0_inv.clone();
    images[GEN_B] = b0.clone();
    let pi = AlgebraHom::new(&universal, a0_pres, images, false)?;
    if let WellDefinedness::Violated { relation, image } = pi.well_defined(fuel)? {
        return Ok(Classification::Failed {
            stage: 3,
            witness: format!("projection breaks the relation {relation}: image {image}"),
        });
    }

    // Stage 4: the projection is comultiplicative and counital.
    let hu = standard_structure(&universal)?;
    for g in 0..universal.generators().len() {
        let gen = Element::generator(&universal, g)?;
        let pushed = hu
            .delta_with_fuel(&gen, fuel)?
            .map_leg(0, |e| Ok(LegImage::Element(pi.apply(e)?)))?
            .map_leg(1, |e| Ok(LegImage::Element(pi.apply(e)?)))?;
        let direct = h0.delta_with_fuel(&pi.apply(&gen)?, fuel)?;
        if pushed != direct {
            return Ok(Classification::Failed {
                stage: 4,
                witness: format!(
                    "projection is not comultiplicative on {gen}: pushing gives {pushed}, expected {direct}"
                ),
            });
        }
        let eu = hu.counit(&gen)?;
        let e0 = h0.counit(&pi.apply(&gen)?)?;
        if eu != e0 {
            return Ok(Classification::Failed {
                stage: 4,
                witness: format!("projection is not counital on {gen}: {e0} versus {eu}"),
            });
        }
    }

    // Stage 5: the projection intertwines the antipodes.
    if h0.has_antipode() {
        for g in 0..universal.generators().len() {
            let gen = Element::generator(&universal, g)?;
            let through = pi.apply(&hu.antipode_with_fuel(&gen, fuel)?)?;
            let direct = h0.antipode_with_fuel(&pi.apply(&gen)?, fuel)?;
            if through != direct {
                return Ok(Classification::Failed {
                    stage: 5,
                    witness: format!(
                        "antipodes differ on {gen}: through the projection {through}, directly {direct}"
                    ),
                });
            }
        }
    }

    // Stage 6: the coaction factors through the universal one.
    let universal_spec = standard_coaction(&hu, spec.comodule().clone())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let p = sample_element(b_pres, max_degree, &mut rng)?;
        let through = universal_spec
            .coact_with_fuel(&p, fuel)?
            .map_leg(1, |e| Ok(LegImage::Element(pi.apply(e)?)))?;
        let direct = spec.coact_with_fuel(&p, fuel)?;
        if through != direct {
            return Ok(Classification::Failed {
                stage: 6,
                witness: format!(
                    "coaction does not factor on {p}: through the projection {through}, directly {direct}"
                ),
            });
        }
    }

    Ok(Classification::Factors {
        scaling: a0,
        scaling_inverse: a0_inv,
        translation: b0,
    })
}
