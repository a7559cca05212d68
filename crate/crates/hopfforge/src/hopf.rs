//! Bialgebra and Hopf-algebra structure on a presented algebra.
//!
//! A [`HopfPresentation`] attaches generator images of the coproduct,
//! counit, and (optionally) antipode to a presentation.  Construction only
//! validates shapes — the axioms are the checkers' job, so deliberately
//! broken structures can be fed to them.  The module also houses
//! multiplicative matrices, the staged antipode-existence verifier, Hopf
//! ideal quotients, opposite structures, and characters with convolution.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ncalg::{
    compatible, eval_element, sample::sample_element, AlgebraError, AlgebraHom, AlgebraTarget,
    Element, GenId, Measure, Presentation, RewriteRule, ScalarTarget, WellDefinedness, Word,
};
use crate::scalar::{FieldDescriptor, Scalar};
use crate::tensor::{LegImage, TensorElement, TensorTarget};

/// Verdict of a single structural check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail { witness: String },
}

impl CheckOutcome {
    pub fn fail(witness: impl Into<String>) -> CheckOutcome {
        CheckOutcome::Fail {
            witness: witness.into(),
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }

    pub fn witness(&self) -> Option<&str> {
        match self {
            CheckOutcome::Pass => None,
            CheckOutcome::Fail { witness } => Some(witness),
        }
    }
}

/// A presentation with coproduct/counit (and optional antipode) images.
#[derive(Debug, Clone)]
pub struct HopfPresentation {
    base: Arc<Presentation>,
    delta_images: Vec<TensorElement>,
    counit_images: Vec<Scalar>,
    antipode_images: Option<Vec<Element>>,
    op_product: bool,
    op_coproduct: bool,
}

impl HopfPresentation {
    pub fn new(
        base: Arc<Presentation>,
        delta_images: Vec<TensorElement>,
        counit_images: Vec<Scalar>,
        antipode_images: Option<Vec<Element>>,
    ) -> Result<HopfPresentation, AlgebraError> {
        HopfPresentation::with_flags(
            base,
            delta_images,
            counit_images,
            antipode_images,
            false,
            false,
        )
    }

    pub fn with_flags(
        base: Arc<Presentation>,
        delta_images: Vec<TensorElement>,
        counit_images: Vec<Scalar>,
        antipode_images: Option<Vec<Element>>,
        op_product: bool,
        op_coproduct: bool,
    ) -> Result<HopfPresentation, AlgebraError> {
        let n = base.generators().len();
        if delta_images.len() != n {
            return Err(AlgebraError::MissingImage(format!(
                "coproduct needs {n} generator images, got {}",
                delta_images.len()
            )));
        }
        if counit_images.len() != n {
            return Err(AlgebraError::MissingImage(format!(
                "counit needs {n} generator images, got {}",
                counit_images.len()
            )));
        }
        for t in &delta_images {
            if t.leg_count() != 2 {
                return Err(AlgebraError::LegCount {
                    expected: 2,
                    got: t.leg_count(),
                });
            }
            for leg in t.legs() {
                if !compatible(leg, &base) {
                    return Err(AlgebraError::LegPresentation);
                }
            }
        }
        for c in &counit_images {
            if c.field() != base.field() {
                return Err(AlgebraError::Scalar(
                    crate::scalar::ScalarError::FieldMismatch {
                        left: base.field().to_string(),
                        right: c.field().to_string(),
                    },
                ));
            }
        }
        if let Some(imgs) = &antipode_images {
            if imgs.len() != n {
                return Err(AlgebraError::MissingImage(format!(
                    "antipode needs {n} generator images, got {}",
                    imgs.len()
                )));
            }
            for e in imgs {
                if !compatible(e.presentation(), &base) {
                    return Err(AlgebraError::PresentationMismatch);
                }
            }
        }
        Ok(HopfPresentation {
            base,
            delta_images,
            counit_images,
            antipode_images,
            op_product,
            op_coproduct,
        })
    }

    /// Convenience constructor with images keyed by generator name.
    pub fn from_named(
        base: &Arc<Presentation>,
        delta: &[(&str, TensorElement)],
        counit: &[(&str, Scalar)],
        antipode: Option<&[(&str, Element)]>,
    ) -> Result<HopfPresentation, AlgebraError> {
        fn resolve<T: Clone>(
            base: &Arc<Presentation>,
            what: &str,
            named: &[(&str, T)],
        ) -> Result<Vec<T>, AlgebraError> {
            let mut out: Vec<Option<T>> = vec![None; base.generators().len()];
            for (name, img) in named {
                let g = base
                    .gen_id(name)
                    .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))?;
                out[g] = Some(img.clone());
            }
            out.into_iter()
                .enumerate()
                .map(|(g, img)| {
                    img.ok_or_else(|| {
                        AlgebraError::MissingImage(format!("{what} image of {}", base.gen_name(g)))
                    })
                })
                .collect()
        }
        let delta_images = resolve(base, "coproduct", delta)?;
        let counit_images = resolve(base, "counit", counit)?;
        let antipode_images = match antipode {
            Some(named) => Some(resolve(base, "antipode", named)?),
            None => None,
        };
        HopfPresentation::new(base.clone(), delta_images, counit_images, antipode_images)
    }

    pub fn base(&self) -> &Arc<Presentation> {
        &self.base
    }

    pub fn field(&self) -> FieldDescriptor {
        self.base.field()
    }

    pub fn delta_images(&self) -> &[TensorElement] {
        &self.delta_images
    }

    pub fn counit_images(&self) -> &[Scalar] {
        &self.counit_images
    }

    pub fn antipode_images(&self) -> Option<&[Element]> {
        self.antipode_images.as_deref()
    }

    pub fn has_antipode(&self) -> bool {
        self.antipode_images.is_some()
    }

    pub fn is_op_product(&self) -> bool {
        self.op_product
    }

    pub fn is_op_coproduct(&self) -> bool {
        self.op_coproduct
    }

    /// Coproduct of an element, reduced in both legs.
    pub fn delta(&self, x: &Element) -> Result<TensorElement, AlgebraError> {
        self.delta_with_fuel(x, self.base.default_fuel())
    }

    pub fn delta_with_fuel(&self, x: &Element, fuel: u64) -> Result<TensorElement, AlgebraError> {
        let target = TensorTarget {
            legs: vec![self.base.clone(), self.base.clone()],
            fuel,
        };
        eval_element(&target, x, &self.delta_images, false)
    }

    /// Counit of an element.
    pub fn counit(&self, x: &Element) -> Result<Scalar, AlgebraError> {
        let target = ScalarTarget {
            field: self.base.field(),
        };
        eval_element(&target, x, &self.counit_images, false)
    }

    /// Antipode of an element (anti-homomorphic extension).
    pub fn antipode(&self, x: &Element) -> Result<Element, AlgebraError> {
        self.antipode_with_fuel(x, self.base.default_fuel())
    }

    pub fn antipode_with_fuel(&self, x: &Element, fuel: u64) -> Result<Element, AlgebraError> {
        let images = self.antipode_images.as_ref().ok_or_else(|| {
            AlgebraError::Structure("this presentation carries no antipode".into())
        })?;
        let target = AlgebraTarget {
            pres: self.base.clone(),
            fuel,
        };
        eval_element(&target, x, images, true)
    }

    /// `S(S(x))`, the antipode square.
    pub fn antipode_square(&self, x: &Element) -> Result<Element, AlgebraError> {
        self.antipode(&self.antipode(x)?)
    }
}

impl PartialEq for HopfPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.base.structurally_equal(&other.base)
            && self.delta_images == other.delta_images
            && self.counit_images == other.counit_images
            && self.antipode_images == other.antipode_images
            && self.op_product == other.op_product
            && self.op_coproduct == other.op_coproduct
    }
}

fn delta_leg(
    h: &HopfPresentation,
    fuel: u64,
) -> impl Fn(&Element) -> Result<LegImage, AlgebraError> + '_ {
    move |e| Ok(LegImage::Tensor(h.delta_with_fuel(e, fuel)?))
}

fn counit_leg(h: &HopfPresentation) -> impl Fn(&Element) -> Result<LegImage, AlgebraError> + '_ {
    move |e| Ok(LegImage::Scalar(h.counit(e)?))
}

fn antipode_leg(
    h: &HopfPresentation,
    fuel: u64,
) -> impl Fn(&Element) -> Result<LegImage, AlgebraError> + '_ {
    move |e| Ok(LegImage::Element(h.antipode_with_fuel(e, fuel)?))
}

/// Coassociativity and the counit law on one element; `None` means both
/// identities hold exactly.
fn bialgebra_defect(
    h: &HopfPresentation,
    x: &Element,
    fuel: u64,
) -> Result<Option<String>, AlgebraError> {
    let d = h.delta_with_fuel(x, fuel)?;
    let left = d.map_leg(0, delta_leg(h, fuel))?;
    let right = d.map_leg(1, delta_leg(h, fuel))?;
    if left != right {
        return Ok(Some(format!(
            "coassociativity fails on {x}: (delta (x) id)delta = {left} but (id (x) delta)delta = {right}"
        )));
    }
    let xnf = x.normal_form(fuel)?;
    let l = d.map_leg(0, counit_leg(h))?.into_element()?;
    if l != xnf {
        return Ok(Some(format!(
            "counit law fails on {x}: (eps (x) id)delta = {l}"
        )));
    }
    let r = d.map_leg(1, counit_leg(h))?.into_element()?;
    if r != xnf {
        return Ok(Some(format!(
            "counit law fails on {x}: (id (x) eps)delta = {r}"
        )));
    }
    Ok(None)
}

/// Full bialgebra check: well-definedness of the coproduct and counit on
/// every relation, then coassociativity/counit laws exactly on all
/// generators and on `samples` random elements of degree at most
/// `max_degree`, plus multiplicativity spot checks on random pairs.
pub fn check_bialgebra(
    h: &HopfPresentation,
    max_degree: usize,
    samples: usize,
    seed: u64,
    fuel: u64,
) -> Result<CheckOutcome, AlgebraError> {
    for raw in h.base().raw_relations() {
        let rel = Element::from_terms(h.base(), raw.clone())?;
        let d = h.delta_with_fuel(&rel, fuel)?;
        if !d.is_zero() {
            return Ok(CheckOutcome::fail(format!(
                "coproduct is not defined on the quotient: delta({rel}) = {d}"
            )));
        }
        let e = h.counit(&rel)?;
        if !e.is_zero() {
            return Ok(CheckOutcome::fail(format!(
                "counit is not defined on the quotient: eps({rel}) = {e}"
            )));
        }
    }

    for g in 0..h.base().generators().len() {
        let x = Element::generator(h.base(), g)?;
        if let Some(witness) = bialgebra_defect(h, &x, fuel)? {
            return Ok(CheckOutcome::fail(witness));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = sample_element(h.base(), max_degree, &mut rng)?;
        if let Some(witness) = bialgebra_defect(h, &x, fuel)? {
            return Ok(CheckOutcome::fail(witness));
        }
    }

    // The coproduct and counit extend multiplicatively by construction;
    // these spot checks guard the extension engine itself.
    for _ in 0..samples / 2 {
        let x = sample_element(h.base(), max_degree, &mut rng)?;
        let y = sample_element(h.base(), max_degree, &mut rng)?;
        let xy = x.mul(&y)?;
        let dxy = h.delta_with_fuel(&xy, fuel)?;
        let dxdy = h
            .delta_with_fuel(&x, fuel)?
            .mul(&h.delta_with_fuel(&y, fuel)?, fuel)?;
        if dxy != dxdy {
            return Ok(CheckOutcome::fail(format!(
                "coproduct is not multiplicative on ({x})*({y})"
            )));
        }
        let exy = h.counit(&xy)?;
        let exey = h.counit(&x)?.mul(&h.counit(&y)?)?;
        if exy != exey {
            return Ok(CheckOutcome::fail(format!(
                "counit is not multiplicative on ({x})*({y})"
            )));
        }
    }

    Ok(CheckOutcome::Pass)
}

/// The antipode axiom `m(S (x) id)delta(x) = eps(x) 1 = m(id (x) S)delta(x)`
/// on one element.
fn antipode_defect(
    h: &HopfPresentation,
    x: &Element,
    fuel: u64,
) -> Result<Option<String>, AlgebraError> {
    let d = h.delta_with_fuel(x, fuel)?;
    let target = Element::scalar(h.base(), h.counit(x)?)?;
    let left = d.map_leg(0, antipode_leg(h, fuel))?.multiply_legs(fuel)?;
    if left != target {
        return Ok(Some(format!(
            "antipode axiom fails on {x}: m(S (x) id)delta = {left}, expected {target}"
        )));
    }
    let right = d.map_leg(1, antipode_leg(h, fuel))?.multiply_legs(fuel)?;
    if right != target {
        return Ok(Some(format!(
            "antipode axiom fails on {x}: m(id (x) S)delta = {right}, expected {target}"
        )));
    }
    Ok(None)
}

/// Antipode check: the anti-map is well defined on every relation (the
/// reversed-relations condition) and the antipode axiom holds exactly on
/// generators and random elements; anti-multiplicativity is spot-checked.
pub fn check_antipode(
    h: &HopfPresentation,
    max_degree: usize,
    samples: usize,
    seed: u64,
    fuel: u64,
) -> Result<CheckOutcome, AlgebraError> {
    if !h.has_antipode() {
        return Err(AlgebraError::Structure(
            "antipode check requested but no antipode images are attached".into(),
        ));
    }
    for raw in h.base().raw_relations() {
        let rel = Element::from_terms(h.base(), raw.clone())?;
        let img = h.antipode_with_fuel(&rel, fuel)?;
        if !img.is_zero() {
            return Ok(CheckOutcome::fail(format!(
                "antipode does not respect the relations: S({rel}) = {img}"
            )));
        }
    }

    for g in 0..h.base().generators().len() {
        let x = Element::generator(h.base(), g)?;
        if let Some(witness) = antipode_defect(h, &x, fuel)? {
            return Ok(CheckOutcome::fail(witness));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = sample_element(h.base(), max_degree, &mut rng)?;
        if let Some(witness) = antipode_defect(h, &x, fuel)? {
            return Ok(CheckOutcome::fail(witness));
        }
    }

    for _ in 0..samples / 2 {
        let x = sample_element(h.base(), max_degree, &mut rng)?;
        let y = sample_element(h.base(), max_degree, &mut rng)?;
        let sxy = h.antipode_with_fuel(&x.mul(&y)?, fuel)?;
        let sysx = h
            .antipode_with_fuel(&y, fuel)?
            .mul(&h.antipode_with_fuel(&x, fuel)?)?;
        if sxy != sysx {
            return Ok(CheckOutcome::fail(format!(
                "antipode is not anti-multiplicative on ({x})*({y})"
            )));
        }
    }

    Ok(CheckOutcome::Pass)
}

/// A square matrix over one presented algebra.
#[derive(Debug, Clone)]
pub struct MultiplicativeMatrix {
    pres: Arc<Presentation>,
    entries: Vec<Vec<Element>>,
}

impl PartialEq for MultiplicativeMatrix {
    fn eq(&self, other: &Self) -> bool {
        compatible(&self.pres, &other.pres) && self.entries == other.entries
    }
}

impl MultiplicativeMatrix {
    pub fn new(entries: Vec<Vec<Element>>) -> Result<MultiplicativeMatrix, AlgebraError> {
        let n = entries.len();
        if n == 0 {
            return Err(AlgebraError::MatrixSize(0, 0));
        }
        let pres = entries[0]
            .first()
            .ok_or(AlgebraError::MatrixSize(n, 0))?
            .presentation()
            .clone();
        for row in &entries {
            if row.len() != n {
                return Err(AlgebraError::MatrixSize(n, row.len()));
            }
            for e in row {
                if !compatible(e.presentation(), &pres) {
                    return Err(AlgebraError::PresentationMismatch);
                }
            }
        }
        Ok(MultiplicativeMatrix { pres, entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn entry(&self, i: usize, j: usize) -> &Element {
        &self.entries[i][j]
    }

    pub fn mul(&self, other: &MultiplicativeMatrix) -> Result<MultiplicativeMatrix, AlgebraError> {
        if self.size() != other.size() {
            return Err(AlgebraError::MatrixSize(self.size(), other.size()));
        }
        let n = self.size();
        let mut entries = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let mut acc = Element::zero(&self.pres);
                for k in 0..n {
                    acc = acc.add(&self.entries[i][k].mul(&other.entries[k][j])?)?;
                }
                row.push(acc);
            }
            entries.push(row);
        }
        MultiplicativeMatrix::new(entries)
    }

    pub fn transpose(&self) -> MultiplicativeMatrix {
        let n = self.size();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect())
            .collect();
        MultiplicativeMatrix {
            pres: self.pres.clone(),
            entries,
        }
    }

    /// Apply a map entrywise.
    pub fn map<F>(&self, f: F) -> Result<MultiplicativeMatrix, AlgebraError>
    where
        F: Fn(&Element) -> Result<Element, AlgebraError>,
    {
        let mut entries = Vec::with_capacity(self.size());
        for row in &self.entries {
            let mut out = Vec::with_capacity(row.len());
            for e in row {
                out.push(f(e)?);
            }
            entries.push(out);
        }
        MultiplicativeMatrix::new(entries)
    }

    /// First entry where the matrix differs from the identity, as
    /// `(row, column, defect)` with 0-based indices, after reduction.
    pub fn identity_defect(
        &self,
        fuel: u64,
    ) -> Result<Option<(usize, usize, Element)>, AlgebraError> {
        let n = self.size();
        for i in 0..n {
            for j in 0..n {
                let mut defect = self.entries[i][j].normal_form(fuel)?;
                if i == j {
                    defect = defect.sub(&Element::one(&self.pres))?;
                }
                if !defect.is_zero() {
                    return Ok(Some((i, j, defect)));
                }
            }
        }
        Ok(None)
    }
}

/// Is `u` a multiplicative matrix for `h`, i.e. does
/// `delta(u_ij) = sum_k u_ik (x) u_kj` and `eps(u_ij) = delta_ij` hold?
pub fn is_multiplicative(
    h: &HopfPresentation,
    u: &MultiplicativeMatrix,
    fuel: u64,
) -> Result<CheckOutcome, AlgebraError> {
    if !compatible(u.presentation(), h.base()) {
        return Err(AlgebraError::PresentationMismatch);
    }
    let n = u.size();
    for i in 0..n {
        for j in 0..n {
            let got = h.delta_with_fuel(u.entry(i, j), fuel)?;
            let mut expected = TensorElement::zero(vec![h.base().clone(), h.base().clone()])?;
            for k in 0..n {
                expected = expected.add(&TensorElement::from_elements(&[
                    u.entry(i, k).normal_form(fuel)?,
                    u.entry(k, j).normal_form(fuel)?,
                ])?)?;
            }
            if got != expected.normal_form(fuel)? {
                return Ok(CheckOutcome::fail(format!(
                    "delta(u[{}][{}]) = {got}, expected {expected}",
                    i + 1,
                    j + 1
                )));
            }
            let e = h.counit(u.entry(i, j))?;
            let expected_eps = if i == j {
                h.field().one()
            } else {
                h.field().zero()
            };
            if e != expected_eps {
                return Ok(CheckOutcome::fail(format!(
                    "eps(u[{}][{}]) = {e}, expected {expected_eps}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(CheckOutcome::Pass)
}

/// Outcome of the staged antipode-existence verification.
#[derive(Debug, Clone)]
pub enum AntipodeExistence {
    /// All four stages passed; the returned structure carries the antipode
    /// read off the inverse matrix.
    Established(HopfPresentation),
    /// A stage failed: 1 = matrix not multiplicative, 2 = candidate not a
    /// two-sided inverse, 3 = anti-map not well defined on the relations,
    /// 4 = antipode axiom violated.
    Failed { stage: u8, witness: String },
}

impl AntipodeExistence {
    pub fn established(&self) -> Option<&HopfPresentation> {
        match self {
            AntipodeExistence::Established(h) => Some(h),
            AntipodeExistence::Failed { .. } => None,
        }
    }
}

/// Staged antipode-existence criterion for a bialgebra generated by the
/// entries of a multiplicative matrix `u` with candidate inverse `v`:
/// (1) `u` is multiplicative; (2) `u v = v u = 1` entrywise; (3) the
/// anti-map sending each generator entry of `u` to the matching entry of
/// `v` (completed by `extra_images` for generators not appearing in `u`)
/// is well defined; (4) the antipode axiom holds for it.
#[allow(clippy::too_many_arguments)]
pub fn verify_antipode_existence(
    h: &HopfPresentation,
    u: &MultiplicativeMatrix,
    v: &MultiplicativeMatrix,
    extra_images: &[(&str, Element)],
    max_degree: usize,
    samples: usize,
    seed: u64,
    fuel: u64,
) -> Result<AntipodeExistence, AlgebraError> {
    // Stage 1: u is multiplicative.
    if let CheckOutcome::Fail { witness } = is_multiplicative(h, u, fuel)? {
        return Ok(AntipodeExistence::Failed { stage: 1, witness });
    }

    // Stage 2: v is a two-sided inverse.
    for (label, product) in [("u*v", u.mul(v)?), ("v*u", v.mul(u)?)] {
        if let Some((i, j, defect)) = product.identity_defect(fuel)? {
            return Ok(AntipodeExistence::Failed {
                stage: 2,
                witness: format!("({label})[{}][{}] = {defect}", i + 1, j + 1),
            });
        }
    }

    // Stage 3: read the antipode off the inverse matrix and check the
    // anti-map respects the relations.
    let base = h.base();
    let mut images: Vec<Option<Element>> = vec![None; base.generators().len()];
    let n = u.size();
    for i in 0..n {
        for j in 0..n {
            if let Some(g) = as_single_generator(u.entry(i, j)) {
                if images[g].is_none() {
                    images[g] = Some(v.entry(i, j).normal_form(fuel)?);
                }
            }
        }
    }
    for (name, img) in extra_images {
        let g = base
            .gen_id(name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))?;
        if images[g].is_none() {
            images[g] = Some(img.clone());
        }
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(g, img)| img.ok_or_else(|| AlgebraError::MissingImage(base.gen_name(g).to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let anti = AlgebraHom::new(base, base, images.clone(), true)?;
    if let WellDefinedness::Violated { relation, image } = anti.well_defined(fuel)? {
        return Ok(AntipodeExistence::Failed {
            stage: 3,
            witness: format!("S({relation}) = {image}"),
        });
    }

    // Stage 4: the antipode axiom.
    let candidate = HopfPresentation::with_flags(
        base.clone(),
        h.delta_images().to_vec(),
        h.counit_images().to_vec(),
        Some(images),
        h.is_op_product(),
        h.is_op_coproduct(),
    )?;
    match check_antipode(&candidate, max_degree, samples, seed, fuel)? {
        CheckOutcome::Pass => Ok(AntipodeExistence::Established(candidate)),
        CheckOutcome::Fail { witness } => Ok(AntipodeExistence::Failed { stage: 4, witness }),
    }
}

/// Is the element exactly one generator with coefficient one?
fn as_single_generator(x: &Element) -> Option<GenId> {
    let mut terms = x.terms();
    let (w, c) = terms.next()?;
    if terms.next().is_some() || !c.is_one() {
        return None;
    }
    match w.runs() {
        [(g, 1)] => Some(*g),
        _ => None,
    }
}

/// Which Hopf-ideal condition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealCheckPart {
    Counit,
    Coproduct,
    Antipode,
    QuotientStructure,
}

/// Outcome of a Hopf-ideal verification.
#[derive(Debug, Clone)]
pub enum IdealVerification {
    /// All conditions hold; the quotient inherits the structure maps.
    Quotient(HopfPresentation),
    Failed {
        part: IdealCheckPart,
        witness: String,
    },
}

impl IdealVerification {
    pub fn quotient(&self) -> Option<&HopfPresentation> {
        match self {
            IdealVerification::Quotient(h) => Some(h),
            IdealVerification::Failed { .. } => None,
        }
    }
}

/// Verify that the two-sided ideal generated by `ideal_generators` is a
/// Hopf ideal of `h`: for every generator `g` of the ideal, `eps(g) = 0`,
/// `(pi (x) pi)(delta(g)) = 0`, and `pi(S(g)) = 0`, where `pi` is the
/// quotient map onto `quotient` (a presentation of the same generators
/// whose rules absorb the ideal).  On success the quotient is equipped
/// with the pushed-forward structure maps and re-checked in full.
pub fn hopf_ideal_verify(
    h: &HopfPresentation,
    ideal_generators: &[Element],
    quotient: &Arc<Presentation>,
    max_degree: usize,
    samples: usize,
    seed: u64,
    fuel: u64,
) -> Result<IdealVerification, AlgebraError> {
    let base = h.base();
    if quotient.generators() != base.generators() {
        return Err(AlgebraError::Structure(
            "quotient presentation must keep the same generators".into(),
        ));
    }
    let pi_images: Vec<Element> = (0..base.generators().len())
        .map(|g| Element::generator(quotient, g))
        .collect::<Result<_, _>>()?;
    let pi = AlgebraHom::new(base, quotient, pi_images, false)?;
    if let WellDefinedness::Violated { relation, image } = pi.well_defined(fuel)? {
        return Err(AlgebraError::Structure(format!(
            "quotient does not absorb the base relations: pi({relation}) = {image}"
        )));
    }
    for g in ideal_generators {
        // The counit condition needs no quotient map, so it is checked
        // first: a nonzero value is the mathematical obstruction even when
        // the supplied quotient presentation does not match the ideal.
        let e = h.counit(g)?;
        if !e.is_zero() {
            return Ok(IdealVerification::Failed {
                part: IdealCheckPart::Counit,
                witness: format!("eps({g}) = {e}"),
            });
        }

        // The ideal generators must die in the quotient, or the supplied
        // presentation does not match the ideal.
        let image = pi.apply(g)?;
        if !image.is_zero() {
            return Err(AlgebraError::Structure(format!(
                "quotient does not kill the ideal generator {g}: pi maps it to {image}"
            )));
        }

        let d = h.delta_with_fuel(g, fuel)?;
        let projected = d
            .map_leg(0, |e| Ok(LegImage::Element(pi.apply(e)?)))?
            .map_leg(1, |e| Ok(LegImage::Element(pi.apply(e)?)))?;
        if !projected.is_zero() {
            return Ok(IdealVerification::Failed {
                part: IdealCheckPart::Coproduct,
                witness: format!("(pi (x) pi)delta({g}) = {projected}"),
            });
        }

        if h.has_antipode() {
            let s = h.antipode_with_fuel(g, fuel)?;
            let image = pi.apply(&s)?;
            if !image.is_zero() {
                return Ok(IdealVerification::Failed {
                    part: IdealCheckPart::Antipode,
                    witness: format!("pi(S({g})) = {image}"),
                });
            }
        }
    }

    // Push the structure maps forward along pi and re-verify in full.
    let delta_images = h
        .delta_images()
        .iter()
        .map(|t| {
            t.map_leg(0, |e| Ok(LegImage::Element(pi.apply(e)?)))?
                .map_leg(1, |e| Ok(LegImage::Element(pi.apply(e)?)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let antipode_images = match h.antipode_images() {
        Some(imgs) => Some(
            imgs.iter()
                .map(|e| pi.apply(e))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        None => None,
    };
    let quotient_hopf = HopfPresentation::with_flags(
        quotient.clone(),
        delta_images,
        h.counit_images().to_vec(),
        antipode_images,
        h.is_op_product(),
        h.is_op_coproduct(),
    )?;
    if let CheckOutcome::Fail { witness } =
        check_bialgebra(&quotient_hopf, max_degree, samples, seed, fuel)?
    {
        return Ok(IdealVerification::Failed {
            part: IdealCheckPart::QuotientStructure,
            witness,
        });
    }
    if quotient_hopf.has_antipode() {
        if let CheckOutcome::Fail { witness } =
            check_antipode(&quotient_hopf, max_degree, samples, seed, fuel)?
        {
            return Ok(IdealVerification::Failed {
                part: IdealCheckPart::QuotientStructure,
                witness,
            });
        }
    }
    Ok(IdealVerification::Quotient(quotient_hopf))
}

/// The opposite structure: `op_product` reverses every word (relations,
/// rules, and structure-map images alike), `op_coproduct` flips the legs of
/// every coproduct image; antipode images are carried across unchanged.
/// The reversed rule system keeps the original termination measure only if
/// it still validates every reversed rule.
pub fn opposite(
    h: &HopfPresentation,
    op_product: bool,
    op_coproduct: bool,
) -> Result<HopfPresentation, AlgebraError> {
    let base = h.base();
    let new_base = if op_product {
        let relations = base
            .raw_relations()
            .iter()
            .map(|rel| {
                rel.iter()
                    .map(|(w, c)| (w.reverse(), c.clone()))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        let rules: Vec<RewriteRule> = base
            .rules()
            .iter()
            .map(|r| RewriteRule {
                lhs: r.lhs.reverse(),
                rhs: r
                    .rhs
                    .iter()
                    .map(|(w, c)| (w.reverse(), c.clone()))
                    .collect(),
            })
            .collect();
        let measure = if rules.iter().all(|r| base.measure().validates_rule(r)) {
            base.measure()
        } else {
            Measure::None
        };
        let names = base.generator_names();
        let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Presentation::new(
            base.field(),
            &name_refs,
            relations,
            rules,
            measure,
            base.default_fuel(),
        )?
    } else {
        base.clone()
    };

    let rev_word = |w: &Word| if op_product { w.reverse() } else { w.clone() };
    let delta_images = h
        .delta_images()
        .iter()
        .map(|t| {
            let terms = t
                .terms()
                .map(|(ws, c)| (vec![rev_word(&ws[0]), rev_word(&ws[1])], c.clone()))
                .collect();
            let rebuilt =
                TensorElement::from_terms(vec![new_base.clone(), new_base.clone()], terms)?;
            if op_coproduct {
                rebuilt.flip()
            } else {
                Ok(rebuilt)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let antipode_images = match h.antipode_images() {
        Some(imgs) => Some(
            imgs.iter()
                .map(|e| {
                    Element::from_terms(
                        &new_base,
                        e.terms().map(|(w, c)| (rev_word(w), c.clone())).collect(),
                    )
                })
                .collect::<Result<Vec<_>, _>>()?,
        ),
        None => None,
    };
    HopfPresentation::with_flags(
        new_base,
        delta_images,
        h.counit_images().to_vec(),
        antipode_images,
        h.is_op_product() ^ op_product,
        h.is_op_coproduct() ^ op_coproduct,
    )
}

/// An algebra homomorphism to the ground field, given by generator values.
#[derive(Debug, Clone)]
pub struct Character {
    pres: Arc<Presentation>,
    values: Vec<Scalar>,
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        compatible(&self.pres, &other.pres) && self.values == other.values
    }
}

impl Character {
    /// Build and validate: every defining relation must evaluate to zero.
    pub fn new(pres: &Arc<Presentation>, values: Vec<Scalar>) -> Result<Character, AlgebraError> {
        if values.len() != pres.generators().len() {
            return Err(AlgebraError::MissingImage(format!(
                "character needs {} generator values, got {}",
                pres.generators().len(),
                values.len()
            )));
        }
        for v in &values {
            if v.field() != pres.field() {
                return Err(AlgebraError::Scalar(
                    crate::scalar::ScalarError::FieldMismatch {
                        left: pres.field().to_string(),
                        right: v.field().to_string(),
                    },
                ));
            }
        }
        let chi = Character {
            pres: pres.clone(),
            values,
        };
        for raw in pres.raw_relations() {
            let rel = Element::from_terms(pres, raw.clone())?;
            let img = chi.eval(&rel)?;
            if !img.is_zero() {
                return Err(AlgebraError::Structure(format!(
                    "character does not respect the relation {rel}: value {img}"
                )));
            }
        }
        Ok(chi)
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn value(&self, g: GenId) -> &Scalar {
        &self.values[g]
    }

    pub fn eval(&self, x: &Element) -> Result<Scalar, AlgebraError> {
        let target = ScalarTarget {
            field: self.pres.field(),
        };
        eval_element(&target, x, &self.values, false)
    }
}

/// The counit as a character.
pub fn counit_character(h: &HopfPresentation) -> Result<Character, AlgebraError> {
    Character::new(h.base(), h.counit_images().to_vec())
}

/// Convolution of characters: `(chi1 * chi2)(g) = (chi1 (x) chi2)(delta g)`.
pub fn char_convolve(
    h: &HopfPresentation,
    chi1: &Character,
    chi2: &Character,
) -> Result<Character, AlgebraError> {
    let mut values = Vec::with_capacity(h.base().generators().len());
    for g in 0..h.base().generators().len() {
        let d = h.delta(&Element::generator(h.base(), g)?)?;
        let mut acc = h.field().zero();
        for (ws, c) in d.terms() {
            let left = chi1.eval(&Element::from_word(h.base(), ws[0].clone()))?;
            let right = chi2.eval(&Element::from_word(h.base(), ws[1].clone()))?;
            acc = acc.add(&c.mul(&left)?.mul(&right)?)?;
        }
        values.push(acc);
    }
    Character::new(h.base(), values)
}

/// Precompose a character with the antipode: `g -> chi(S(g))`; for a
/// character of a Hopf algebra this is its convolution inverse.
pub fn char_antipode(h: &HopfPresentation, chi: &Character) -> Result<Character, AlgebraError> {
    let mut values = Vec::with_capacity(h.base().generators().len());
    for g in 0..h.base().generators().len() {
        let s = h.antipode(&Element::generator(h.base(), g)?)?;
        values.push(chi.eval(&s)?);
    }
    Character::new(h.base(), values)
}

/// Result of the transpose-versus-inverse comparison for a multiplicative
/// matrix `u` with antipode image `v = S(u)` (entrywise).
#[derive(Debug, Clone)]
pub struct TransposeInverseReport {
    /// `S(u^t) = S(u)^t` entrywise (definitional for entrywise anti-maps,
    /// certified by computation).
    pub antipode_transposes: bool,
    /// First defect of `u^t * S(u)^t` against the identity, if any.
    pub left_defect: Option<(usize, usize, Element)>,
    /// First defect of `S(u)^t * u^t` against the identity, if any.
    pub right_defect: Option<(usize, usize, Element)>,
}

impl TransposeInverseReport {
    /// Does `S(u)^t` invert `u^t`?
    pub fn transpose_inverts(&self) -> bool {
        self.left_defect.is_none() && self.right_defect.is_none()
    }
}

/// Compare the transpose of the antipode matrix with the inverse of the
/// transpose: computes `u^t (S u)^t` and `(S u)^t u^t` and reports the
/// first non-identity entries.  For the twisted algebras these products
/// differ from the identity, witnessing that transposition and inversion
/// do not commute for multiplicative matrices.
pub fn transpose_inverse_check(
    h: &HopfPresentation,
    u: &MultiplicativeMatrix,
    fuel: u64,
) -> Result<TransposeInverseReport, AlgebraError> {
    let su = u.map(|e| h.antipode_with_fuel(e, fuel))?;
    let sut = u.transpose().map(|e| h.antipode_with_fuel(e, fuel))?;
    let antipode_transposes = sut == su.transpose();
    let ut = u.transpose();
    let left_defect = ut.mul(&su.transpose())?.identity_defect(fuel)?;
    let right_defect = su.transpose().mul(&ut)?.identity_defect(fuel)?;
    Ok(TransposeInverseReport {
        antipode_transposes,
        left_defect,
        right_defect,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axb::{axb_q, universal_axb, GEN_A, GEN_AINV, GEN_B};

    /// The standard structure maps on a catalog presentation: the invertible
    /// generator pair is grouplike and the skew generator is primitive-like
    /// over it.
    fn standard_hopf(pres: &Arc<Presentation>) -> HopfPresentation {
        let a = Element::generator(pres, GEN_A).unwrap();
        let ainv = Element::generator(pres, GEN_AINV).unwrap();
        let b = Element::generator(pres, GEN_B).unwrap();
        let one = Element::one(pres);
        let f = pres.field();
        let delta = vec![
            TensorElement::from_elements(&[a.clone(), a.clone()]).unwrap(),
            TensorElement::from_elements(&[ainv.clone(), ainv.clone()]).unwrap(),
            TensorElement::from_elements(&[b.clone(), a.clone()])
                .unwrap()
                .add(&TensorElement::from_elements(&[one, b.clone()]).unwrap())
                .unwrap(),
        ];
        let counit = vec![f.one(), f.one(), f.zero()];
        let antipode = vec![ainv.clone(), a.clone(), b.neg().mul(&ainv).unwrap()];
        HopfPresentation::new(pres.clone(), delta, counit, Some(antipode)).unwrap()
    }

    fn universal() -> (Arc<Presentation>, HopfPresentation) {
        let pres = universal_axb(FieldDescriptor::Rationals).unwrap();
        let h = standard_hopf(&pres);
        (pres, h)
    }

    #[test]
    fn structure_maps_evaluate_on_generators() {
        let (pres, h) = universal();
        let b = Element::generator(&pres, GEN_B).unwrap();
        assert_eq!(h.delta(&b).unwrap().to_string(), "b (x) a + 1 (x) b");
        assert_eq!(h.antipode(&b).unwrap().to_string(), "-b*ainv");
        assert!(h.counit(&b).unwrap().is_zero());

        // eps kills the twist combination a^n b - q b a^n for n = 2, q = 3.
        let f = pres.field();
        let a = Element::generator(&pres, GEN_A).unwrap();
        let g = a
            .pow(2)
            .unwrap()
            .mul(&b)
            .unwrap()
            .sub(
                &b.mul(&a.pow(2).unwrap())
                    .unwrap()
                    .scale(&f.from_i64(3))
                    .unwrap(),
            )
            .unwrap();
        assert!(h.counit(&g).unwrap().is_zero());
    }

    #[test]
    fn bialgebra_and_antipode_checks_pass_on_the_universal_algebra() {
        let (_, h) = universal();
        assert!(check_bialgebra(&h, 4, 25, 42, 100_000).unwrap().passed());
        assert!(check_antipode(&h, 4, 25, 42, 100_000).unwrap().passed());
    }

    #[test]
    fn broken_coproduct_fails_the_counit_law() {
        // delta(b) := b (x) b is coassociative but fails the counit law.
        let pres = universal_axb(FieldDescriptor::Rationals).unwrap();
        let good = standard_hopf(&pres);
        let b = Element::generator(&pres, GEN_B).unwrap();
        let mut delta = good.delta_images().to_vec();
        delta[GEN_B] = TensorElement::from_elements(&[b.clone(), b]).unwrap();
        let broken =
            HopfPresentation::new(pres.clone(), delta, good.counit_images().to_vec(), None)
                .unwrap();
        match check_bialgebra(&broken, 4, 10, 42, 100_000).unwrap() {
            CheckOutcome::Fail { witness } => {
                assert!(witness.contains("counit law fails on b"), "{witness}");
            }
            CheckOutcome::Pass => panic!("broken coproduct must fail"),
        }
    }

    #[test]
    fn sign_flipped_antipode_fails_the_axiom() {
        let pres = universal_axb(FieldDescriptor::Rationals).unwrap();
        let good = standard_hopf(&pres);
        let b = Element::generator(&pres, GEN_B).unwrap();
        let ainv = Element::generator(&pres, GEN_AINV).unwrap();
        let mut antipode = good.antipode_images().unwrap().to_vec();
        antipode[GEN_B] = b.mul(&ainv).unwrap();
        let broken = HopfPresentation::new(
            pres.clone(),
            good.delta_images().to_vec(),
            good.counit_images().to_vec(),
            Some(antipode),
        )
        .unwrap();
        match check_antipode(&broken, 4, 10, 42, 100_000).unwrap() {
            CheckOutcome::Fail { witness } => {
                assert!(witness.contains("antipode axiom fails on b"), "{witness}");
            }
            CheckOutcome::Pass => panic!("sign-flipped antipode must fail"),
        }
    }

    #[test]
    fn antipode_square_frozen_values() {
        // S^2(b) = a b ainv in the universal algebra; = q b after twisting.
        let (pres, h) = universal();
        let b = Element::generator(&pres, GEN_B).unwrap();
        assert_eq!(h.antipode_square(&b).unwrap().to_string(), "a*b*ainv");

        let f = FieldDescriptor::RationalFunctions;
        let inst = axb_q(f, f.q().unwrap()).unwrap();
        let hq = standard_hopf(&inst.presentation);
        let bq = Element::generator(&inst.presentation, GEN_B).unwrap();
        assert_eq!(hq.antipode_square(&bq).unwrap().to_string(), "q*b");
    }

    fn standard_matrix(pres: &Arc<Presentation>) -> (MultiplicativeMatrix, MultiplicativeMatrix) {
        let a = Element::generator(pres, GEN_A).unwrap();
        let ainv = Element::generator(pres, GEN_AINV).unwrap();
        let b = Element::generator(pres, GEN_B).unwrap();
        let one = Element::one(pres);
        let zero = Element::zero(pres);
        let u =
            MultiplicativeMatrix::new(vec![vec![a, zero.clone()], vec![b.clone(), one.clone()]])
                .unwrap();
        let v = MultiplicativeMatrix::new(vec![
            vec![ainv.clone(), zero],
            vec![b.neg().mul(&ainv).unwrap(), one],
        ])
        .unwrap();
        (u, v)
    }

    #[test]
    fn antipode_existence_verifier_accepts_the_standard_pair() {
        let (pres, h) = universal();
        let (u, v) = standard_matrix(&pres);
        let a = Element::generator(&pres, GEN_A).unwrap();
        let result =
            verify_antipode_existence(&h, &u, &v, &[("ainv", a)], 4, 20, 42, 100_000).unwrap();
        let established = match result {
            AntipodeExistence::Established(hh) => hh,
            AntipodeExistence::Failed { stage, witness } => {
                panic!("failed at stage {stage}: {witness}")
            }
        };
        // The constructed antipode matches the standard one on generators.
        assert_eq!(
            established.antipode_images().unwrap(),
            h.antipode_images().unwrap()
        );
    }

    #[test]
    fn sign_flipped_inverse_fails_at_stage_two() {
        let (pres, h) = universal();
        let (u, _) = standard_matrix(&pres);
        let ainv = Element::generator(&pres, GEN_AINV).unwrap();
        let b = Element::generator(&pres, GEN_B).unwrap();
        let one = Element::one(&pres);
        let zero = Element::zero(&pres);
        let v_bad = MultiplicativeMatrix::new(vec![
            vec![ainv, zero],
            vec![
                b.mul(&Element::generator(&pres, GEN_AINV).unwrap())
                    .unwrap(),
                one,
            ],
        ])
        .unwrap();
        let a = Element::generator(&pres, GEN_A).unwrap();
        match verify_antipode_existence(&h, &u, &v_bad, &[("ainv", a)], 4, 20, 42, 100_000).unwrap()
        {
            AntipodeExistence::Failed { stage, witness } => {
                assert_eq!(stage, 2);
                assert!(witness.contains("2*b*ainv"), "{witness}");
            }
            AntipodeExistence::Established(_) => panic!("perturbed inverse must fail"),
        }
    }

    #[test]
    fn ideal_of_the_skew_generator_gives_the_degenerate_quotient() {
        let (pres, h) = universal();
        let b = Element::generator(&pres, GEN_B).unwrap();
        let quotient = crate::axb::laurent_quotient(FieldDescriptor::Rationals).unwrap();
        match hopf_ideal_verify(&h, &[b], &quotient, 4, 15, 42, 100_000).unwrap() {
            IdealVerification::Quotient(qh) => {
                assert!(qh.has_antipode());
            }
            IdealVerification::Failed { part, witness } => {
                panic!("expected a quotient, failed at {part:?}: {witness}")
            }
        }
    }

    #[test]
    fn shifted_generator_fails_the_counit_condition() {
        let (pres, h) = universal();
        let b = Element::generator(&pres, GEN_B).unwrap();
        let shifted = b.sub(&Element::one(&pres)).unwrap();
        let quotient = crate::axb::laurent_quotient(FieldDescriptor::Rationals).unwrap();
        match hopf_ideal_verify(&h, &[shifted], &quotient, 4, 10, 42, 100_000).unwrap() {
            IdealVerification::Failed { part, witness } => {
                assert_eq!(part, IdealCheckPart::Counit);
                assert!(witness.contains("eps(b - 1) = -1"), "{witness}");
            }
            IdealVerification::Quotient(_) => panic!("b - 1 does not generate a Hopf ideal"),
        }
    }

    #[test]
    fn opposite_is_an_involution_on_the_universal_structure() {
        let (_, h) = universal();
        let op = opposite(&h, true, true).unwrap();
        assert!(op.is_op_product() && op.is_op_coproduct());
        let back = opposite(&op, true, true).unwrap();
        assert_eq!(back, h);
        // The opposite structure is itself a bialgebra with antipode-ready
        // well-definedness.
        assert!(check_bialgebra(&op, 4, 15, 42, 100_000).unwrap().passed());
    }

    #[test]
    fn characters_convolve_by_the_affine_composition_law() {
        let (pres, h) = universal();
        let f = pres.field();
        let chi = |av: i64, bv: i64| {
            Character::new(
                &pres,
                vec![f.from_i64(av), f.ratio(1, av).unwrap(), f.from_i64(bv)],
            )
            .unwrap()
        };
        let c1 = chi(2, 3);
        let c2 = chi(5, 7);
        let conv = char_convolve(&h, &c1, &c2).unwrap();
        // a -> a1*a2, b -> b1*a2 + b2.
        assert_eq!(conv.value(GEN_A), &f.from_i64(10));
        assert_eq!(conv.value(GEN_B), &f.from_i64(22));

        let eps = counit_character(&h).unwrap();
        assert_eq!(char_convolve(&h, &eps, &c1).unwrap(), c1);
        assert_eq!(char_convolve(&h, &c1, &eps).unwrap(), c1);

        let inv = char_antipode(&h, &c1).unwrap();
        assert_eq!(char_convolve(&h, &c1, &inv).unwrap(), eps);
        assert_eq!(char_convolve(&h, &inv, &c1).unwrap(), eps);
    }

    #[test]
    fn transpose_and_inverse_do_not_commute_after_twisting() {
        let f = FieldDescriptor::RationalFunctions;
        let inst = axb_q(f, f.q().unwrap()).unwrap();
        let h = standard_hopf(&inst.presentation);
        let (u, _) = standard_matrix(&inst.presentation);
        let report = transpose_inverse_check(&h, &u, 100_000).unwrap();
        assert!(report.antipode_transposes);
        assert!(!report.transpose_inverts());
        let (i, j, defect) = report.left_defect.unwrap();
        // (u^t S(u)^t)[1][2] = b - a b ainv = (1 - q) b.
        assert_eq!((i, j), (0, 1));
        let b = Element::generator(&inst.presentation, GEN_B).unwrap();
        let one_minus_q = f.one().sub(&f.q().unwrap()).unwrap();
        assert_eq!(defect, b.scale(&one_minus_q).unwrap());

        // At q = 1 the algebra is commutative and the defect vanishes.
        let rf = FieldDescriptor::Rationals;
        let inst1 = axb_q(rf, rf.one()).unwrap();
        let h1 = standard_hopf(&inst1.presentation);
        let (u1, _) = standard_matrix(&inst1.presentation);
        let report1 = transpose_inverse_check(&h1, &u1, 100_000).unwrap();
        assert!(report1.transpose_inverts());
    }
}
