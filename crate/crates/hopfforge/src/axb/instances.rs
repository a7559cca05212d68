//! Fully assembled catalog instances.
//!
//! An [`AxbInstance`] bundles a catalog presentation with its standard
//! Hopf structure, the right coaction on the polynomial line, and the
//! fundamental multiplicative matrix with its inverse.  The module also
//! provides the twist-ideal identity checks and morphisms between twisted
//! quotients.

use std::sync::Arc;

use crate::comodule::{CoactionSide, CoactionSpec, ComoduleAlgebra};
use crate::hopf::{CheckOutcome, HopfPresentation, MultiplicativeMatrix};
use crate::ncalg::{AlgebraError, AlgebraHom, Element, Presentation, WellDefinedness};
use crate::scalar::{FieldDescriptor, Scalar};
use crate::tensor::{LegImage, TensorElement};

use super::{axb_qn, laurent_pair, universal_axb, InstanceKind, QuantumInstance};

/// The standard Hopf structure on a catalog presentation: the invertible
/// pair `a`, `ainv` is grouplike, and the skew generator `b` (when present)
/// has coproduct `b (x) a + 1 (x) b` and antipode `-b ainv`.
pub fn standard_structure(pres: &Arc<Presentation>) -> Result<HopfPresentation, AlgebraError> {
    let a_id = pres
        .gen_id("a")
        .ok_or_else(|| AlgebraError::UnknownGenerator("a".into()))?;
    let ainv_id = pres
        .gen_id("ainv")
        .ok_or_else(|| AlgebraError::UnknownGenerator("ainv".into()))?;
    let a = Element::generator(pres, a_id)?;
    let ainv = Element::generator(pres, ainv_id)?;
    let one = Element::one(pres);
    let f = pres.field();
    let mut delta = Vec::new();
    let mut counit = Vec::new();
    let mut antipode = Vec::new();
    for g in 0..pres.generators().len() {
        match pres.gen_name(g) {
            "a" => {
                delta.push(TensorElement::from_elements(&[a.clone(), a.clone()])?);
                counit.push(f.one());
                antipode.push(ainv.clone());
            }
            "ainv" => {
                delta.push(TensorElement::from_elements(&[ainv.clone(), ainv.clone()])?);
                counit.push(f.one());
                antipode.push(a.clone());
            }
            "b" => {
                let b = Element::generator(pres, g)?;
                delta.push(
                    TensorElement::from_elements(&[b.clone(), a.clone()])?
                        .add(&TensorElement::from_elements(&[one.clone(), b.clone()])?)?,
                );
                counit.push(f.zero());
                antipode.push(b.neg().mul(&ainv)?);
            }
            other => {
                return Err(AlgebraError::Structure(format!(
                    "the standard structure knows the generators a, ainv, b; found {other}"
                )))
            }
        }
    }
    HopfPresentation::new(pres.clone(), delta, counit, Some(antipode))
}

/// The standard right coaction on the polynomial line: the line generator
/// maps to `x (x) a + 1 (x) b`, with the translation term dropped when the
/// presentation has no skew generator.
pub fn standard_coaction(
    hopf: &HopfPresentation,
    comodule: ComoduleAlgebra,
) -> Result<CoactionSpec, AlgebraError> {
    let b_pres = comodule.presentation();
    if b_pres.generators().len() != 1 {
        return Err(AlgebraError::Structure(
            "the standard coaction lives on the polynomial line (one generator)".into(),
        ));
    }
    let pres = hopf.base();
    let a_id = pres
        .gen_id("a")
        .ok_or_else(|| AlgebraError::UnknownGenerator("a".into()))?;
    let x = Element::generator(b_pres, 0)?;
    let a = Element::generator(pres, a_id)?;
    let mut image = TensorElement::from_elements(&[x, a])?;
    if let Some(b_id) = pres.gen_id("b") {
        let b = Element::generator(pres, b_id)?;
        image = image.add(&TensorElement::from_elements(&[Element::one(b_pres), b])?)?;
    }
    CoactionSpec::new(comodule, hopf.clone(), CoactionSide::Right, vec![image])
}

/// The fundamental multiplicative matrix and its inverse.  With a skew
/// generator these are the affine pair `[[a, 0], [b, 1]]` and
/// `[[ainv, 0], [-b ainv, 1]]`; without one they collapse to `[[a]]` and
/// `[[ainv]]`.
pub fn standard_matrix(
    pres: &Arc<Presentation>,
) -> Result<(MultiplicativeMatrix, MultiplicativeMatrix), AlgebraError> {
    let a_id = pres
        .gen_id("a")
        .ok_or_else(|| AlgebraError::UnknownGenerator("a".into()))?;
    let ainv_id = pres
        .gen_id("ainv")
        .ok_or_else(|| AlgebraError::UnknownGenerator("ainv".into()))?;
    let a = Element::generator(pres, a_id)?;
    let ainv = Element::generator(pres, ainv_id)?;
    match pres.gen_id("b") {
        Some(b_id) => {
            let b = Element::generator(pres, b_id)?;
            let one = Element::one(pres);
            let zero = Element::zero(pres);
            let u = MultiplicativeMatrix::new(vec![
                vec![a, zero.clone()],
                vec![b.clone(), one.clone()],
            ])?;
            let v = MultiplicativeMatrix::new(vec![
                vec![ainv.clone(), zero],
                vec![b.neg().mul(&ainv)?, one],
            ])?;
            Ok((u, v))
        }
        None => Ok((
            MultiplicativeMatrix::new(vec![vec![a]])?,
            MultiplicativeMatrix::new(vec![vec![ainv]])?,
        )),
    }
}

/// A catalog presentation with every structure the checkers consume.
#[derive(Debug, Clone)]
pub struct AxbInstance {
    pub presentation: Arc<Presentation>,
    pub kind: InstanceKind,
    pub hopf: HopfPresentation,
    pub coaction: CoactionSpec,
    pub matrix: MultiplicativeMatrix,
    pub matrix_inverse: MultiplicativeMatrix,
}

impl AxbInstance {
    fn assemble(instance: QuantumInstance) -> Result<AxbInstance, AlgebraError> {
        let QuantumInstance { presentation, kind } = instance;
        let hopf = standard_structure(&presentation)?;
        let line = ComoduleAlgebra::polynomial_line(presentation.field(), "x")?;
        let coaction = standard_coaction(&hopf, line)?;
        let (matrix, matrix_inverse) = standard_matrix(&presentation)?;
        Ok(AxbInstance {
            presentation,
            kind,
            hopf,
            coaction,
            matrix,
            matrix_inverse,
        })
    }
}

/// The fully assembled universal instance.
pub fn universal_instance(field: FieldDescriptor) -> Result<AxbInstance, AlgebraError> {
    AxbInstance::assemble(QuantumInstance {
        presentation: universal_axb(field)?,
        kind: InstanceKind::Universal,
    })
}

/// The fully assembled twisted instance with period `n`.
pub fn qn_instance(field: FieldDescriptor, q: Scalar, n: i64) -> Result<AxbInstance, AlgebraError> {
    AxbInstance::assemble(axb_qn(field, q, n)?)
}

/// The fully assembled twisted instance with period one.
pub fn q_instance(field: FieldDescriptor, q: Scalar) -> Result<AxbInstance, AlgebraError> {
    qn_instance(field, q, 1)
}

/// The fully assembled standalone Laurent instance.
pub fn laurent_instance(field: FieldDescriptor) -> Result<AxbInstance, AlgebraError> {
    AxbInstance::assemble(QuantumInstance {
        presentation: laurent_pair(field)?,
        kind: InstanceKind::LaurentPair,
    })
}

/// Check the structural identities of the twist combination
/// `g = a^n b - q b a^n` inside the universal algebra: `eps(g) = 0`,
/// `delta(g) = g (x) a^(n+1) + a^n (x) g`, and
/// `S(g) = -ainv^n g ainv^(n+1)`.
pub fn ideal_identities(
    field: FieldDescriptor,
    q: &Scalar,
    n: u32,
    fuel: u64,
) -> Result<CheckOutcome, AlgebraError> {
    let pres = universal_axb(field)?;
    let h = standard_structure(&pres)?;
    let a = Element::generator(&pres, super::GEN_A)?;
    let ainv = Element::generator(&pres, super::GEN_AINV)?;
    let b = Element::generator(&pres, super::GEN_B)?;
    let an = a.pow(n)?;
    let g = an.mul(&b)?.sub(&b.mul(&an)?.scale(q)?)?;

    let e = h.counit(&g)?;
    if !e.is_zero() {
        return Ok(CheckOutcome::fail(format!("eps({g}) = {e}")));
    }

    let d = h.delta_with_fuel(&g, fuel)?;
    let expected = TensorElement::from_elements(&[g.clone(), a.pow(n + 1)?])?
        .add(&TensorElement::from_elements(&[an, g.clone()])?)?;
    if d != expected {
        return Ok(CheckOutcome::fail(format!(
            "delta({g}) = {d}, expected {expected}"
        )));
    }

    let s = h.antipode_with_fuel(&g, fuel)?;
    let expected_s = ainv.pow(n)?.mul(&g)?.mul(&ainv.pow(n + 1)?)?.neg();
    if s != expected_s {
        return Ok(CheckOutcome::fail(format!(
            "S({g}) = {s}, expected {expected_s}"
        )));
    }

    Ok(CheckOutcome::Pass)
}

/// Outcome of a morphism check between twisted quotients.
#[derive(Debug, Clone)]
pub enum MorphismVerdict {
    /// The source relation dies in the target: the identity assignment of
    /// generators is a morphism of Hopf algebras.
    Embeds { hom: AlgebraHom },
    /// The morphism does not exist; the witness describes the obstruction.
    Obstructed { witness: String },
}

impl MorphismVerdict {
    pub fn embeds(&self) -> bool {
        matches!(self, MorphismVerdict::Embeds { .. })
    }

    pub fn witness(&self) -> Option<&str> {
        match self {
            MorphismVerdict::Embeds { .. } => None,
            MorphismVerdict::Obstructed { witness } => Some(witness),
        }
    }
}

/// The twist combination `a^n b - q b a^n` (with inverse powers for
/// negative `n`) reduced inside `pres`.
pub fn twist_defect(
    pres: &Arc<Presentation>,
    q: &Scalar,
    n: i64,
    fuel: u64,
) -> Result<Element, AlgebraError> {
    let a_id = pres
        .gen_id("a")
        .ok_or_else(|| AlgebraError::UnknownGenerator("a".into()))?;
    let ainv_id = pres
        .gen_id("ainv")
        .ok_or_else(|| AlgebraError::UnknownGenerator("ainv".into()))?;
    let b_id = pres
        .gen_id("b")
        .ok_or_else(|| AlgebraError::UnknownGenerator("b".into()))?;
    let power = if n >= 0 {
        Element::generator(pres, a_id)?.pow(n as u32)?
    } else {
        Element::generator(pres, ainv_id)?.pow((-n) as u32)?
    };
    let b = Element::generator(pres, b_id)?;
    power
        .mul(&b)?
        .sub(&b.mul(&power)?.scale(q)?)?
        .normal_form(fuel)
}

/// Try to build the Hopf-algebra morphism from the `(source_q, source_n)`
/// quotient to the `(target_q, target_n)` quotient that fixes every
/// generator.  The morphism exists exactly when the source twist relation
/// already holds in the target; on success the identity assignment is
/// verified to be a well-defined homomorphism that commutes with the
/// coproduct, counit, and antipode on every generator.
pub fn twist_morphism(
    field: FieldDescriptor,
    source_q: Scalar,
    source_n: i64,
    target_q: Scalar,
    target_n: i64,
    fuel: u64,
) -> Result<MorphismVerdict, AlgebraError> {
    let source = axb_qn(field, source_q.clone(), source_n)?;
    let target = axb_qn(field, target_q, target_n)?;
    let defect = twist_defect(&target.presentation, &source_q, source_n, fuel)?;
    if !defect.is_zero() {
        return Ok(MorphismVerdict::Obstructed {
            witness: defect.to_string(),
        });
    }

    let images = (0..source.presentation.generators().len())
        .map(|g| {
            let name = source.presentation.gen_name(g);
            let tg = target
                .presentation
                .gen_id(name)
                .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))?;
            Element::generator(&target.presentation, tg)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let hom = AlgebraHom::new(&source.presentation, &target.presentation, images, false)?;
    if let WellDefinedness::Violated { relation, image } = hom.well_defined(fuel)? {
        return Ok(MorphismVerdict::Obstructed {
            witness: format!("the identity assignment breaks {relation}: image {image}"),
        });
    }

    let hs = standard_structure(&source.presentation)?;
    let ht = standard_structure(&target.presentation)?;
    for g in 0..source.presentation.generators().len() {
        let gen = Element::generator(&source.presentation, g)?;
        let pushed = hs
            .delta_with_fuel(&gen, fuel)?
            .map_leg(0, |e| Ok(LegImage::Element(hom.apply(e)?)))?
            .map_leg(1, |e| Ok(LegImage::Element(hom.apply(e)?)))?;
        let direct = ht.delta_with_fuel(&hom.apply(&gen)?, fuel)?;
        if pushed != direct {
            return Ok(MorphismVerdict::Obstructed {
                witness: format!(
                    "the coproducts differ on {gen}: pushed {pushed}, direct {direct}"
                ),
            });
        }
        if hs.counit(&gen)? != ht.counit(&hom.apply(&gen)?)? {
            return Ok(MorphismVerdict::Obstructed {
                witness: format!("the counits differ on {gen}"),
            });
        }
        let through = hom.apply(&hs.antipode_with_fuel(&gen, fuel)?)?;
        let direct = ht.antipode_with_fuel(&hom.apply(&gen)?, fuel)?;
        if through != direct {
            return Ok(MorphismVerdict::Obstructed {
                witness: format!(
                    "the antipodes differ on {gen}: through {through}, direct {direct}"
                ),
            });
        }
    }

    Ok(MorphismVerdict::Embeds { hom })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::is_multiplicative;

    #[test]
    fn assembled_instances_carry_multiplicative_matrix_pairs() {
        let f = FieldDescriptor::Rationals;
        let rf = FieldDescriptor::RationalFunctions;
        let instances = vec![
            universal_instance(f).unwrap(),
            q_instance(rf, rf.q().unwrap()).unwrap(),
            qn_instance(rf, rf.q().unwrap(), 2).unwrap(),
            laurent_instance(f).unwrap(),
            qn_instance(f, f.zero(), 3).unwrap(),
        ];
        for inst in instances {
            assert!(
                is_multiplicative(&inst.hopf, &inst.matrix, 100_000)
                    .unwrap()
                    .passed(),
                "{:?}",
                inst.kind
            );
            let defect = inst
                .matrix
                .mul(&inst.matrix_inverse)
                .unwrap()
                .identity_defect(100_000)
                .unwrap();
            assert!(defect.is_none(), "{:?}: {defect:?}", inst.kind);
        }
    }

    #[test]
    fn twist_identities_hold_for_symbolic_and_concrete_parameters() {
        let rf = FieldDescriptor::RationalFunctions;
        for n in 1..=4 {
            assert!(ideal_identities(rf, &rf.q().unwrap(), n, 100_000)
                .unwrap()
                .passed());
        }
        let f = FieldDescriptor::Rationals;
        assert!(ideal_identities(f, &f.from_i64(2), 3, 100_000)
            .unwrap()
            .passed());
        let gf = FieldDescriptor::prime(5).unwrap();
        assert!(ideal_identities(gf, &gf.from_i64(3), 2, 100_000)
            .unwrap()
            .passed());
    }

    #[test]
    fn doubled_parameters_embed_into_the_period_one_quotient() {
        let rf = FieldDescriptor::RationalFunctions;
        let q = rf.q().unwrap();
        // Source (q^2, 2) maps into target (q, 1): a^2 b - q^2 b a^2 = 0 there.
        let verdict = twist_morphism(rf, q.pow(2).unwrap(), 2, q.clone(), 1, 100_000).unwrap();
        assert!(verdict.embeds(), "{:?}", verdict.witness());

        // Negative powers work through the inverse generator.
        let verdict = twist_morphism(rf, q.pow(-1).unwrap(), -1, q, 1, 100_000).unwrap();
        assert!(verdict.embeds(), "{:?}", verdict.witness());
    }

    #[test]
    fn the_wrong_direction_is_obstructed_with_the_unreduced_defect() {
        let rf = FieldDescriptor::RationalFunctions;
        let q = rf.q().unwrap();
        let verdict = twist_morphism(rf, q.clone(), 1, q.clone(), 2, 100_000).unwrap();
        let target = axb_qn(rf, q.clone(), 2).unwrap();
        let expected = twist_defect(&target.presentation, &q, 1, 100_000).unwrap();
        assert!(!expected.is_zero());
        assert_eq!(verdict.witness(), Some(expected.to_string().as_str()));
    }
}
