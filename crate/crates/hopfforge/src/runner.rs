//! Build a workspace from a parsed document (or the builtin catalog) and
//! run its declared check suites into a [`Report`](crate::report::Report).
//!
//! A document *declares* its checks; running with no suite filter (or the
//! pseudo-name `all`) runs every declared directive in order.  A filter
//! selects directives by suite name.  Structural problems while building
//! the workspace are input errors; problems while *running* a case (such
//! as fuel exhaustion) downgrade that case to `unverified` — they never
//! count as mathematical failures.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::axb::{
    axb_generator_roles, axb_qn, laurent_instance, laurent_quotient, oracle::CrossedModel,
    qn_instance, twist_morphism, universal_instance, InstanceKind, MorphismVerdict,
};
use crate::comodule::{
    check_coaction, check_filtration, classify_to_universal, Classification, CoactionSide,
    CoactionSpec, ComoduleAlgebra,
};
use crate::dsl::{
    as_ident, eval_element, eval_int, eval_scalar, eval_tensor, AlgebraItem, CheckItem,
    CoactionItem, ComoduleItem, Document, DslError, Expr, HopfItem, Item, MatrixItem, MeasureAst,
    Pos, SideAst,
};
use crate::hopf::{
    check_antipode, check_bialgebra, hopf_ideal_verify, transpose_inverse_check,
    verify_antipode_existence, AntipodeExistence, CheckOutcome, HopfPresentation, IdealCheckPart,
    IdealVerification, MultiplicativeMatrix,
};
use crate::ncalg::{
    sample::sample_element, AlgebraError, ConfluenceStatus, Element, Measure, Presentation,
    RewriteRule, Word,
};
use crate::report::{CaseResult, Report};
use crate::scalar::{FieldDescriptor, Scalar};
use crate::tensor::TensorElement;

/// Every suite name the runner understands.
pub const KNOWN_SUITES: &[&str] = &[
    "confluence",
    "bialgebra",
    "antipode",
    "antipode-existence",
    "hopf-ideal",
    "coaction",
    "filtration",
    "ideal-identities",
    "lattice",
    "oracle",
    "transpose-inverse",
];

/// Sampling and reduction parameters shared by every suite.
#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub max_degree: usize,
    pub samples: usize,
    pub seed: u64,
    pub fuel: u64,
}

impl Default for RunOptions {
    fn default() -> RunOptions {
        RunOptions {
            max_degree: 6,
            samples: 100,
            seed: 42,
            fuel: 1_000_000,
        }
    }
}

/// A fully resolved check directive.
#[derive(Debug, Clone)]
pub enum SuiteJob {
    Confluence {
        algebra: String,
    },
    Bialgebra {
        hopf: String,
    },
    Antipode {
        hopf: String,
    },
    AntipodeExistence {
        hopf: String,
        matrix: String,
        inverse: String,
    },
    HopfIdeal {
        hopf: String,
        ideal: Vec<Element>,
        quotient: String,
    },
    Coaction {
        coaction: String,
    },
    Filtration {
        coaction: String,
        cap: usize,
    },
    IdealIdentities {
        q: Scalar,
        ns: Vec<u32>,
    },
    Lattice {
        q: Scalar,
        ns: Vec<i64>,
        ms: Vec<i64>,
    },
    Oracle {
        q: Scalar,
        ns: Vec<i64>,
        samples: Option<usize>,
    },
    TransposeInverse {
        hopf: String,
        matrix: String,
    },
}

impl SuiteJob {
    /// The suite name this job belongs to.
    pub fn suite(&self) -> &'static str {
        match self {
            SuiteJob::Confluence { .. } => "confluence",
            SuiteJob::Bialgebra { .. } => "bialgebra",
            SuiteJob::Antipode { .. } => "antipode",
            SuiteJob::AntipodeExistence { .. } => "antipode-existence",
            SuiteJob::HopfIdeal { .. } => "hopf-ideal",
            SuiteJob::Coaction { .. } => "coaction",
            SuiteJob::Filtration { .. } => "filtration",
            SuiteJob::IdealIdentities { .. } => "ideal-identities",
            SuiteJob::Lattice { .. } => "lattice",
            SuiteJob::Oracle { .. } => "oracle",
            SuiteJob::TransposeInverse { .. } => "transpose-inverse",
        }
    }
}

/// Named objects built from a document, plus the resolved check directives.
#[derive(Debug, Clone)]
pub struct Workspace {
    pub field: FieldDescriptor,
    pub algebras: BTreeMap<String, Arc<Presentation>>,
    pub hopfs: BTreeMap<String, HopfPresentation>,
    pub comodules: BTreeMap<String, ComoduleAlgebra>,
    pub coactions: BTreeMap<String, CoactionSpec>,
    pub matrices: BTreeMap<String, MultiplicativeMatrix>,
    pub jobs: Vec<SuiteJob>,
}

fn at(pos: Pos, e: DslError) -> DslError {
    DslError {
        pos: e.pos.or(Some(pos)),
        message: e.message,
    }
}

fn single_monomial(x: &Element) -> Result<Word, DslError> {
    let mut terms = x.terms();
    if let Some((w, c)) = terms.next() {
        if terms.next().is_none() && c.is_one() {
            return Ok(w.clone());
        }
    }
    Err(DslError::bare(
        "a rule left-hand side must be a single word with coefficient one".to_string(),
    ))
}

fn gen_or_err(pres: &Arc<Presentation>, name: &str) -> Result<usize, DslError> {
    pres.gen_id(name)
        .ok_or_else(|| DslError::bare(format!("unknown generator `{name}`")))
}

fn build_algebra(
    item: &AlgebraItem,
    field: FieldDescriptor,
    fuel: u64,
) -> Result<Arc<Presentation>, DslError> {
    if item.gens.is_empty() {
        return Err(DslError::at(
            item.pos,
            format!("algebra `{}` declares no generators", item.name),
        ));
    }
    let names: Vec<&str> = item.gens.iter().map(String::as_str).collect();
    // Relations and rules are written in the free algebra on the same
    // generators: products concatenate without any reduction.
    let free = Presentation::new(field, &names, Vec::new(), Vec::new(), Measure::None, fuel)?;
    let mut relations = Vec::new();
    for (lhs, rhs) in &item.rels {
        let l = eval_element(lhs, &free)?;
        let r = eval_element(rhs, &free)?;
        let rel = l.sub(&r)?;
        relations.push(
            rel.terms()
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect::<Vec<_>>(),
        );
    }
    let mut rules = Vec::new();
    for (lhs, rhs) in &item.rules {
        let l = eval_element(lhs, &free)?;
        let r = eval_element(rhs, &free)?;
        rules.push(RewriteRule {
            lhs: single_monomial(&l)?,
            rhs: r.terms().map(|(w, c)| (w.clone(), c.clone())).collect(),
        });
    }
    let measure = match &item.measure {
        None | Some(MeasureAst::None) => Measure::None,
        Some(MeasureAst::Length) => Measure::Length,
        Some(MeasureAst::Skew {
            mover,
            forward,
            backward,
        }) => Measure::MoverInversions {
            mover: gen_or_err(&free, mover)?,
            forward: gen_or_err(&free, forward)?,
            backward: gen_or_err(&free, backward)?,
        },
    };
    Ok(Presentation::new(
        field, &names, relations, rules, measure, fuel,
    )?)
}

fn build_comodule(
    item: &ComoduleItem,
    field: FieldDescriptor,
    fuel: u64,
) -> Result<ComoduleAlgebra, DslError> {
    if item.gens.is_empty() {
        return Err(DslError::at(
            item.pos,
            format!("comodule `{}` declares no generators", item.name),
        ));
    }
    let names: Vec<&str> = item.gens.iter().map(String::as_str).collect();
    let pres = Presentation::new(field, &names, Vec::new(), Vec::new(), Measure::Length, fuel)?;
    let mut degrees = vec![1u64; names.len()];
    for (g, d) in &item.degrees {
        degrees[gen_or_err(&pres, g)?] = *d;
    }
    Ok(ComoduleAlgebra::new(pres, degrees)?)
}

fn build_hopf(
    item: &HopfItem,
    algebras: &BTreeMap<String, Arc<Presentation>>,
    field: FieldDescriptor,
) -> Result<HopfPresentation, DslError> {
    let base = algebras
        .get(&item.algebra)
        .ok_or_else(|| DslError::at(item.pos, format!("unknown algebra `{}`", item.algebra)))?;
    let legs = vec![base.clone(), base.clone()];
    let mut deltas: Vec<(&str, TensorElement)> = Vec::new();
    for (g, e) in &item.deltas {
        deltas.push((g.as_str(), eval_tensor(e, &legs)?));
    }
    let mut counits: Vec<(&str, Scalar)> = Vec::new();
    for (g, e) in &item.counits {
        counits.push((g.as_str(), eval_scalar(e, field)?));
    }
    let antipodes: Option<Vec<(&str, Element)>> = if item.antipodes.is_empty() {
        None
    } else {
        let mut v = Vec::new();
        for (g, e) in &item.antipodes {
            v.push((g.as_str(), eval_element(e, base)?));
        }
        Some(v)
    };
    Ok(HopfPresentation::from_named(
        base,
        &deltas,
        &counits,
        antipodes.as_deref(),
    )?)
}

fn build_coaction(
    item: &CoactionItem,
    hopfs: &BTreeMap<String, HopfPresentation>,
    comodules: &BTreeMap<String, ComoduleAlgebra>,
) -> Result<CoactionSpec, DslError> {
    let hopf = hopfs
        .get(&item.hopf)
        .ok_or_else(|| DslError::at(item.pos, format!("unknown Hopf structure `{}`", item.hopf)))?;
    let com = comodules
        .get(&item.comodule)
        .ok_or_else(|| DslError::at(item.pos, format!("unknown comodule `{}`", item.comodule)))?;
    let side = match item.side {
        SideAst::Right => CoactionSide::Right,
        SideAst::Left => CoactionSide::Left,
    };
    let legs = match side {
        CoactionSide::Right => vec![com.presentation().clone(), hopf.base().clone()],
        CoactionSide::Left => vec![hopf.base().clone(), com.presentation().clone()],
    };
    let count = com.presentation().generators().len();
    let mut images: Vec<Option<TensorElement>> = vec![None; count];
    for (g, e) in &item.acts {
        images[gen_or_err(com.presentation(), g)?] = Some(eval_tensor(e, &legs)?);
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, img)| {
            img.ok_or_else(|| {
                DslError::at(
                    item.pos,
                    format!(
                        "missing act image for generator `{}`",
                        com.presentation().gen_name(i)
                    ),
                )
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CoactionSpec::new(com.clone(), hopf.clone(), side, images)?)
}

fn build_matrix(
    item: &MatrixItem,
    algebras: &BTreeMap<String, Arc<Presentation>>,
) -> Result<MultiplicativeMatrix, DslError> {
    let base = algebras
        .get(&item.algebra)
        .ok_or_else(|| DslError::at(item.pos, format!("unknown algebra `{}`", item.algebra)))?;
    let mut rows = Vec::new();
    for row in &item.rows {
        rows.push(
            row.iter()
                .map(|e| eval_element(e, base))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(MultiplicativeMatrix::new(rows)?)
}

fn opt_values<'a>(options: &'a [(String, Expr)], key: &str) -> Vec<&'a Expr> {
    options
        .iter()
        .filter(|(k, _)| k == key)
        .map(|(_, v)| v)
        .collect()
}

fn opt_single<'a>(options: &'a [(String, Expr)], key: &str) -> Result<Option<&'a Expr>, DslError> {
    let vs = opt_values(options, key);
    match vs.len() {
        0 => Ok(None),
        1 => Ok(Some(vs[0])),
        _ => Err(DslError::bare(format!(
            "option `{key}` given more than once"
        ))),
    }
}

fn known_option_keys(options: &[(String, Expr)], allowed: &[&str]) -> Result<(), DslError> {
    for (k, _) in options {
        if !allowed.contains(&k.as_str()) {
            return Err(DslError::bare(format!(
                "unknown option `{k}` (allowed: {})",
                allowed.join(", ")
            )));
        }
    }
    Ok(())
}

fn default_q(field: FieldDescriptor) -> Result<Scalar, DslError> {
    if field.has_parameter() {
        Ok(field.q()?)
    } else {
        Ok(field.from_i64(2))
    }
}

fn resolve_q(options: &[(String, Expr)], field: FieldDescriptor) -> Result<Scalar, DslError> {
    match opt_single(options, "q")? {
        Some(e) => eval_scalar(e, field),
        None => default_q(field),
    }
}

fn resolve_int_list(
    options: &[(String, Expr)],
    key: &str,
    default: &[i64],
) -> Result<Vec<i64>, DslError> {
    let vs = opt_values(options, key);
    if vs.is_empty() {
        return Ok(default.to_vec());
    }
    vs.into_iter().map(eval_int).collect()
}

struct Names<'a> {
    algebras: &'a BTreeMap<String, Arc<Presentation>>,
    hopfs: &'a BTreeMap<String, HopfPresentation>,
    coactions: &'a BTreeMap<String, CoactionSpec>,
    matrices: &'a BTreeMap<String, MultiplicativeMatrix>,
}

impl Names<'_> {
    fn hopf_target(&self, item: &CheckItem) -> Result<String, DslError> {
        let t = item.target.as_deref().ok_or_else(|| {
            DslError::at(item.pos, format!("check {} needs `on <hopf>`", item.suite))
        })?;
        if !self.hopfs.contains_key(t) {
            return Err(DslError::at(
                item.pos,
                format!("unknown Hopf structure `{t}`"),
            ));
        }
        Ok(t.to_string())
    }

    fn algebra_target(&self, item: &CheckItem) -> Result<String, DslError> {
        let t = item.target.as_deref().ok_or_else(|| {
            DslError::at(
                item.pos,
                format!("check {} needs `on <algebra>`", item.suite),
            )
        })?;
        if !self.algebras.contains_key(t) {
            return Err(DslError::at(item.pos, format!("unknown algebra `{t}`")));
        }
        Ok(t.to_string())
    }

    fn coaction_target(&self, item: &CheckItem) -> Result<String, DslError> {
        let t = item.target.as_deref().ok_or_else(|| {
            DslError::at(
                item.pos,
                format!("check {} needs `on <coaction>`", item.suite),
            )
        })?;
        if !self.coactions.contains_key(t) {
            return Err(DslError::at(item.pos, format!("unknown coaction `{t}`")));
        }
        Ok(t.to_string())
    }

    fn matrix_option(&self, item: &CheckItem, key: &str) -> Result<String, DslError> {
        let e = opt_single(&item.options, key)
            .map_err(|e| at(item.pos, e))?
            .ok_or_else(|| {
                DslError::at(
                    item.pos,
                    format!("check {} needs `{key} = <matrix>`", item.suite),
                )
            })?;
        let name = as_ident(e).map_err(|e| at(item.pos, e))?;
        if !self.matrices.contains_key(name) {
            return Err(DslError::at(item.pos, format!("unknown matrix `{name}`")));
        }
        Ok(name.to_string())
    }
}

fn resolve_check(
    item: &CheckItem,
    names: &Names<'_>,
    field: FieldDescriptor,
) -> Result<SuiteJob, DslError> {
    let wrap = |e: DslError| at(item.pos, e);
    match item.suite.as_str() {
        "confluence" => {
            known_option_keys(&item.options, &[]).map_err(wrap)?;
            Ok(SuiteJob::Confluence {
                algebra: names.algebra_target(item)?,
            })
        }
        "bialgebra" => {
            known_option_keys(&item.options, &[]).map_err(wrap)?;
            Ok(SuiteJob::Bialgebra {
                hopf: names.hopf_target(item)?,
            })
        }
        "antipode" => {
            known_option_keys(&item.options, &[]).map_err(wrap)?;
            Ok(SuiteJob::Antipode {
                hopf: names.hopf_target(item)?,
            })
        }
        "antipode-existence" => {
            known_option_keys(&item.options, &["matrix", "inverse"]).map_err(wrap)?;
            Ok(SuiteJob::AntipodeExistence {
                hopf: names.hopf_target(item)?,
                matrix: names.matrix_option(item, "matrix")?,
                inverse: names.matrix_option(item, "inverse")?,
            })
        }
        "hopf-ideal" => {
            known_option_keys(&item.options, &["ideal", "quotient"]).map_err(wrap)?;
            let hopf = names.hopf_target(item)?;
            let base = names.hopfs[&hopf].base();
            let gens = opt_values(&item.options, "ideal");
            if gens.is_empty() {
                return Err(DslError::at(
                    item.pos,
                    "check hopf-ideal needs at least one `ideal = <element>`".to_string(),
                ));
            }
            let ideal = gens
                .into_iter()
                .map(|e| eval_element(e, base))
                .collect::<Result<Vec<_>, _>>()
                .map_err(wrap)?;
            let quotient_expr = opt_single(&item.options, "quotient")
                .map_err(wrap)?
                .ok_or_else(|| {
                    DslError::at(
                        item.pos,
                        "check hopf-ideal needs `quotient = <algebra>`".to_string(),
                    )
                })?;
            let quotient = as_ident(quotient_expr).map_err(wrap)?.to_string();
            if !names.algebras.contains_key(&quotient) {
                return Err(DslError::at(
                    item.pos,
                    format!("unknown algebra `{quotient}`"),
                ));
            }
            Ok(SuiteJob::HopfIdeal {
                hopf,
                ideal,
                quotient,
            })
        }
        "coaction" => {
            known_option_keys(&item.options, &[]).map_err(wrap)?;
            Ok(SuiteJob::Coaction {
                coaction: names.coaction_target(item)?,
            })
        }
        "filtration" => {
            known_option_keys(&item.options, &["cap"]).map_err(wrap)?;
            let cap = match opt_single(&item.options, "cap").map_err(wrap)? {
                Some(e) => usize::try_from(eval_int(e).map_err(wrap)?)
                    .map_err(|_| DslError::at(item.pos, "cap must be nonnegative".to_string()))?,
                None => 10,
            };
            Ok(SuiteJob::Filtration {
                coaction: names.coaction_target(item)?,
                cap,
            })
        }
        "ideal-identities" => {
            known_option_keys(&item.options, &["q", "n"]).map_err(wrap)?;
            let q = resolve_q(&item.options, field).map_err(wrap)?;
            let ns = resolve_int_list(&item.options, "n", &[1, 2, 3, 4])
                .map_err(wrap)?
                .into_iter()
                .map(|n| {
                    u32::try_from(n).map_err(|_| {
                        DslError::at(item.pos, "n must be a positive integer".to_string())
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(SuiteJob::IdealIdentities { q, ns })
        }
        "lattice" => {
            known_option_keys(&item.options, &["q", "n", "m"]).map_err(wrap)?;
            Ok(SuiteJob::Lattice {
                q: resolve_q(&item.options, field).map_err(wrap)?,
                ns: resolve_int_list(&item.options, "n", &[1, 2]).map_err(wrap)?,
                ms: resolve_int_list(&item.options, "m", &[2, 3, -1]).map_err(wrap)?,
            })
        }
        "oracle" => {
            known_option_keys(&item.options, &["q", "n", "samples"]).map_err(wrap)?;
            let samples = match opt_single(&item.options, "samples").map_err(wrap)? {
                Some(e) => Some(usize::try_from(eval_int(e).map_err(wrap)?).map_err(|_| {
                    DslError::at(item.pos, "samples must be nonnegative".to_string())
                })?),
                None => None,
            };
            Ok(SuiteJob::Oracle {
                q: resolve_q(&item.options, field).map_err(wrap)?,
                ns: resolve_int_list(&item.options, "n", &[1, 2]).map_err(wrap)?,
                samples,
            })
        }
        "transpose-inverse" => {
            known_option_keys(&item.options, &["matrix"]).map_err(wrap)?;
            Ok(SuiteJob::TransposeInverse {
                hopf: names.hopf_target(item)?,
                matrix: names.matrix_option(item, "matrix")?,
            })
        }
        other => Err(DslError::at(
            item.pos,
            format!(
                "unknown suite `{other}` (known: {})",
                KNOWN_SUITES.join(", ")
            ),
        )),
    }
}

/// Build all named objects a document declares, resolving check directives.
///
/// `field_override` replaces the document's field declaration; without an
/// override the document must declare exactly one field.
pub fn build_workspace(
    doc: &Document,
    field_override: Option<FieldDescriptor>,
    fuel: u64,
) -> Result<Workspace, DslError> {
    let mut declared: Option<FieldDescriptor> = None;
    for item in &doc.items {
        if let Item::Field(pos, f) = item {
            if declared.is_some() {
                return Err(DslError::at(
                    *pos,
                    "more than one field declaration".to_string(),
                ));
            }
            declared = Some(*f);
        }
    }
    let field = match field_override.or(declared) {
        Some(f) => f,
        None => {
            return Err(DslError::bare(
                "the document declares no field (and no override was given)".to_string(),
            ))
        }
    };

    let mut algebras = BTreeMap::new();
    let mut hopfs = BTreeMap::new();
    let mut comodules = BTreeMap::new();
    let mut coactions = BTreeMap::new();
    let mut matrices = BTreeMap::new();
    let mut checks: Vec<&CheckItem> = Vec::new();

    for item in &doc.items {
        match item {
            Item::Field(..) => {}
            Item::Algebra(a) => {
                let pres = build_algebra(a, field, fuel).map_err(|e| at(a.pos, e))?;
                if algebras.insert(a.name.clone(), pres).is_some() {
                    return Err(DslError::at(
                        a.pos,
                        format!("duplicate algebra `{}`", a.name),
                    ));
                }
            }
            Item::Hopf(h) => {
                let hp = build_hopf(h, &algebras, field).map_err(|e| at(h.pos, e))?;
                if hopfs.insert(h.name.clone(), hp).is_some() {
                    return Err(DslError::at(
                        h.pos,
                        format!("duplicate Hopf structure `{}`", h.name),
                    ));
                }
            }
            Item::Comodule(c) => {
                let cm = build_comodule(c, field, fuel).map_err(|e| at(c.pos, e))?;
                if comodules.insert(c.name.clone(), cm).is_some() {
                    return Err(DslError::at(
                        c.pos,
                        format!("duplicate comodule `{}`", c.name),
                    ));
                }
            }
            Item::Coaction(c) => {
                let spec = build_coaction(c, &hopfs, &comodules).map_err(|e| at(c.pos, e))?;
                if coactions.insert(c.name.clone(), spec).is_some() {
                    return Err(DslError::at(
                        c.pos,
                        format!("duplicate coaction `{}`", c.name),
                    ));
                }
            }
            Item::Matrix(m) => {
                let mat = build_matrix(m, &algebras).map_err(|e| at(m.pos, e))?;
                if matrices.insert(m.name.clone(), mat).is_some() {
                    return Err(DslError::at(
                        m.pos,
                        format!("duplicate matrix `{}`", m.name),
                    ));
                }
            }
            Item::Check(c) => checks.push(c),
        }
    }

    let names = Names {
        algebras: &algebras,
        hopfs: &hopfs,
        coactions: &coactions,
        matrices: &matrices,
    };
    let jobs = checks
        .into_iter()
        .map(|c| resolve_check(c, &names, field))
        .collect::<Result<Vec<_>, _>>()?;

    Ok(Workspace {
        field,
        algebras,
        hopfs,
        comodules,
        coactions,
        matrices,
        jobs,
    })
}

// ---------------------------------------------------------------------------
// Running
// ---------------------------------------------------------------------------

fn elapsed_ms(start: Instant) -> u64 {
    u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX)
}

fn push_result(
    report: &mut Report,
    suite: &str,
    id: &str,
    start: Instant,
    result: Result<CheckOutcome, AlgebraError>,
) {
    let ms = elapsed_ms(start);
    match result {
        Ok(outcome) => report.push(CaseResult::from_outcome(suite, id, outcome, ms)),
        Err(e) => report.push(CaseResult::unverified(suite, id, e.to_string(), ms)),
    }
}

/// For generators that are not bare entries of `u`, derive antipode images
/// that are forced by the structure: a grouplike generator must map to its
/// two-sided inverse, so scan the generators for one.
fn grouplike_inverse_extras(
    h: &HopfPresentation,
    u: &MultiplicativeMatrix,
    fuel: u64,
) -> Result<Vec<(String, Element)>, AlgebraError> {
    let base = h.base();
    let mut covered = vec![false; base.generators().len()];
    for i in 0..u.size() {
        for j in 0..u.size() {
            if let Some(g) = as_single_generator(u.entry(i, j)) {
                covered[g] = true;
            }
        }
    }
    let one = Element::one(base);
    let mut extras = Vec::new();
    for (g, &cov) in covered.iter().enumerate() {
        if cov {
            continue;
        }
        let gen = Element::generator(base, g)?;
        let grouplike = TensorElement::from_elements(&[gen.clone(), gen.clone()])?;
        if h.delta_with_fuel(&gen, fuel)? != grouplike.normal_form(fuel)? {
            continue;
        }
        for cand in 0..base.generators().len() {
            let c = Element::generator(base, cand)?;
            let left = gen.mul(&c)?.sub(&one)?.normal_form(fuel)?;
            let right = c.mul(&gen)?.sub(&one)?.normal_form(fuel)?;
            if left.is_zero() && right.is_zero() {
                extras.push((base.gen_name(g).to_string(), c));
                break;
            }
        }
    }
    Ok(extras)
}

fn as_single_generator(x: &Element) -> Option<usize> {
    let mut terms = x.terms();
    let (w, c) = terms.next()?;
    if terms.next().is_some() || !c.is_one() {
        return None;
    }
    let mut runs = w.runs().iter();
    match (runs.next(), runs.next()) {
        (Some(&(g, 1)), None) => Some(g),
        _ => None,
    }
}

fn run_confluence(report: &mut Report, pres: &Arc<Presentation>, opts: &RunOptions) {
    let suite = "confluence";
    let start = Instant::now();
    match crate::ncalg::check_local_confluence(pres, opts.fuel) {
        Ok(rep) => {
            let ms = elapsed_ms(start);
            match rep.status {
                ConfluenceStatus::LocallyConfluent { .. } => {
                    report.push(CaseResult::from_outcome(
                        suite,
                        "critical-pairs",
                        CheckOutcome::Pass,
                        ms,
                    ));
                }
                ConfluenceStatus::NotLocallyConfluent {
                    overlap,
                    left_normal_form,
                    right_normal_form,
                } => {
                    report.push(CaseResult::from_outcome(
                        suite,
                        "critical-pairs",
                        CheckOutcome::Fail {
                            witness: format!(
                                "overlap {overlap} resolves to {left_normal_form} and {right_normal_form}"
                            ),
                        },
                        ms,
                    ));
                }
                ConfluenceStatus::Unverified { reason } => {
                    report.push(CaseResult::unverified(suite, "critical-pairs", reason, ms));
                }
                ConfluenceStatus::Unanalyzed => {
                    report.push(CaseResult::unverified(
                        suite,
                        "critical-pairs",
                        "not analyzed",
                        ms,
                    ));
                }
            }
        }
        Err(e) => push_result(report, suite, "critical-pairs", start, Err(e)),
    }

    if !pres.rules().is_empty() {
        let start = Instant::now();
        if pres.measure() == Measure::None {
            report.push(CaseResult::unverified(
                suite,
                "measure-decreases",
                "no termination measure declared",
                elapsed_ms(start),
            ));
        } else {
            let measure = pres.measure();
            let bad = pres.rules().iter().find(|r| !measure.validates_rule(r));
            let outcome = match bad {
                None => CheckOutcome::Pass,
                Some(r) => CheckOutcome::Fail {
                    witness: format!(
                        "rule {} -> ... does not decrease the measure",
                        r.lhs.format(&pres.generator_names())
                    ),
                },
            };
            report.push(CaseResult::from_outcome(
                suite,
                "measure-decreases",
                outcome,
                elapsed_ms(start),
            ));
        }
    }
}

fn run_antipode_existence(
    report: &mut Report,
    h: &HopfPresentation,
    u: &MultiplicativeMatrix,
    v: &MultiplicativeMatrix,
    opts: &RunOptions,
) {
    let suite = "antipode-existence";
    let start = Instant::now();
    let extras = match grouplike_inverse_extras(h, u, opts.fuel) {
        Ok(e) => e,
        Err(e) => {
            report.push(CaseResult::unverified(
                suite,
                "established",
                e.to_string(),
                elapsed_ms(start),
            ));
            return;
        }
    };
    let extra_refs: Vec<(&str, Element)> = extras
        .iter()
        .map(|(n, e)| (n.as_str(), e.clone()))
        .collect();
    match verify_antipode_existence(
        h,
        u,
        v,
        &extra_refs,
        opts.max_degree,
        opts.samples,
        opts.seed,
        opts.fuel,
    ) {
        Ok(AntipodeExistence::Established(constructed)) => {
            report.push(CaseResult::from_outcome(
                suite,
                "established",
                CheckOutcome::Pass,
                elapsed_ms(start),
            ));
            if h.has_antipode() {
                let start = Instant::now();
                let outcome = compare_antipodes(h, &constructed, opts.fuel);
                push_result(report, suite, "matches-declared", start, outcome);
            }
        }
        Ok(AntipodeExistence::Failed { stage, witness }) => {
            report.push(CaseResult::from_outcome(
                suite,
                "established",
                CheckOutcome::Fail {
                    witness: format!("stage {stage}: {witness}"),
                },
                elapsed_ms(start),
            ));
        }
        Err(e) => push_result(report, suite, "established", start, Err(e)),
    }
}

fn compare_antipodes(
    declared: &HopfPresentation,
    constructed: &HopfPresentation,
    fuel: u64,
) -> Result<CheckOutcome, AlgebraError> {
    let base = declared.base();
    let lhs = declared
        .antipode_images()
        .expect("caller checked has_antipode");
    let rhs = constructed
        .antipode_images()
        .expect("established structures carry an antipode");
    for g in 0..base.generators().len() {
        let diff = lhs[g].sub(&rhs[g])?.normal_form(fuel)?;
        if !diff.is_zero() {
            return Ok(CheckOutcome::Fail {
                witness: format!(
                    "S({}) constructed as {}, declared {}",
                    base.gen_name(g),
                    rhs[g],
                    lhs[g]
                ),
            });
        }
    }
    Ok(CheckOutcome::Pass)
}

fn run_hopf_ideal(
    report: &mut Report,
    h: &HopfPresentation,
    ideal: &[Element],
    quotient: &Arc<Presentation>,
    opts: &RunOptions,
) {
    let suite = "hopf-ideal";
    let start = Instant::now();
    match hopf_ideal_verify(
        h,
        ideal,
        quotient,
        opts.max_degree,
        opts.samples,
        opts.seed,
        opts.fuel,
    ) {
        Ok(IdealVerification::Quotient(_)) => {
            report.push(CaseResult::from_outcome(
                suite,
                "quotient",
                CheckOutcome::Pass,
                elapsed_ms(start),
            ));
        }
        Ok(IdealVerification::Failed { part, witness }) => {
            let label = match part {
                IdealCheckPart::Counit => "counit",
                IdealCheckPart::Coproduct => "coproduct",
                IdealCheckPart::Antipode => "antipode",
                IdealCheckPart::QuotientStructure => "quotient-structure",
            };
            report.push(CaseResult::from_outcome(
                suite,
                "quotient",
                CheckOutcome::Fail {
                    witness: format!("{label}: {witness}"),
                },
                elapsed_ms(start),
            ));
        }
        Err(e) => push_result(report, suite, "quotient", start, Err(e)),
    }
}

fn run_coaction_suite(report: &mut Report, spec: &CoactionSpec, opts: &RunOptions) {
    let suite = "coaction";
    let start = Instant::now();
    push_result(
        report,
        suite,
        "laws",
        start,
        check_coaction(spec, opts.max_degree, opts.samples, opts.seed, opts.fuel),
    );
    let one_generator = spec.comodule().presentation().generators().len() == 1;
    if spec.side() == CoactionSide::Right && one_generator {
        let start = Instant::now();
        match classify_to_universal(
            spec,
            None,
            opts.max_degree,
            opts.samples,
            opts.seed,
            opts.fuel,
        ) {
            Ok(Classification::Factors { .. }) => {
                report.push(CaseResult::from_outcome(
                    suite,
                    "classifies",
                    CheckOutcome::Pass,
                    elapsed_ms(start),
                ));
            }
            Ok(Classification::Failed { stage, witness }) => {
                report.push(CaseResult::from_outcome(
                    suite,
                    "classifies",
                    CheckOutcome::Fail {
                        witness: format!("stage {stage}: {witness}"),
                    },
                    elapsed_ms(start),
                ));
            }
            Err(e) => push_result(report, suite, "classifies", start, Err(e)),
        }
    }
}

fn run_lattice(
    report: &mut Report,
    field: FieldDescriptor,
    q: &Scalar,
    ns: &[i64],
    ms: &[i64],
    opts: &RunOptions,
) {
    let suite = "lattice";
    for &n in ns {
        for &m in ms {
            let id = format!("n{n}-m{m}");
            let start = Instant::now();
            let result = q.pow(m).map_err(AlgebraError::from).and_then(|source_q| {
                twist_morphism(field, source_q, m * n, q.clone(), n, opts.fuel)
            });
            match result {
                Ok(MorphismVerdict::Embeds { .. }) => {
                    report.push(CaseResult::from_outcome(
                        suite,
                        &id,
                        CheckOutcome::Pass,
                        elapsed_ms(start),
                    ));
                }
                Ok(MorphismVerdict::Obstructed { witness }) => {
                    report.push(CaseResult::from_outcome(
                        suite,
                        &id,
                        CheckOutcome::Fail { witness },
                        elapsed_ms(start),
                    ));
                }
                Err(e) => push_result(report, suite, &id, start, Err(e)),
            }
        }
    }
    // A map in the wrong direction must be obstructed: the period-one twist
    // relation does not hold in the period-two quotient.
    let start = Instant::now();
    match twist_morphism(field, q.clone(), 1, q.clone(), 2, opts.fuel) {
        Ok(MorphismVerdict::Obstructed { .. }) => {
            report.push(CaseResult::from_outcome(
                suite,
                "obstruction",
                CheckOutcome::Pass,
                elapsed_ms(start),
            ));
        }
        Ok(MorphismVerdict::Embeds { .. }) => {
            report.push(CaseResult::from_outcome(
                suite,
                "obstruction",
                CheckOutcome::Fail {
                    witness: "expected an obstruction, but the map is well defined".to_string(),
                },
                elapsed_ms(start),
            ));
        }
        Err(e) => push_result(report, suite, "obstruction", start, Err(e)),
    }
}

fn run_oracle(
    report: &mut Report,
    field: FieldDescriptor,
    q: &Scalar,
    ns: &[i64],
    samples: Option<usize>,
    opts: &RunOptions,
) {
    let suite = "oracle";
    for &n in ns {
        let id = format!("n{n}");
        let start = Instant::now();
        let outcome = oracle_case(field, q, n, samples.unwrap_or(opts.samples), opts);
        match outcome {
            Ok(Some(outcome)) => {
                report.push(CaseResult::from_outcome(
                    suite,
                    &id,
                    outcome,
                    elapsed_ms(start),
                ));
            }
            Ok(None) => {
                report.push(CaseResult::unverified(
                    suite,
                    &id,
                    "degenerate parameters have no crossed-product model",
                    elapsed_ms(start),
                ));
            }
            Err(e) => push_result(report, suite, &id, start, Err(e)),
        }
    }
}

fn oracle_case(
    field: FieldDescriptor,
    q: &Scalar,
    n: i64,
    samples: usize,
    opts: &RunOptions,
) -> Result<Option<CheckOutcome>, AlgebraError> {
    let inst = axb_qn(field, q.clone(), n)?;
    let (model_q, model_n) = match &inst.kind {
        InstanceKind::Twisted { q, n } => (q.clone(), *n),
        _ => return Ok(None),
    };
    let model = CrossedModel::new(model_n, model_q)?;
    let roles = axb_generator_roles();
    let pres = &inst.presentation;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..samples {
        let x = sample_element(pres, opts.max_degree, &mut rng)?;
        let y = sample_element(pres, opts.max_degree, &mut rng)?;
        let reduced = x.mul(&y)?;
        let free = x.mul_free(&y)?;
        if !model.elements_equal(pres, roles, &reduced, &free)? {
            return Ok(Some(CheckOutcome::Fail {
                witness: format!("({x}) * ({y}) disagrees with the crossed-product model"),
            }));
        }
    }
    Ok(Some(CheckOutcome::Pass))
}

fn run_job(ws: &Workspace, job: &SuiteJob, opts: &RunOptions, report: &mut Report) {
    match job {
        SuiteJob::Confluence { algebra } => {
            run_confluence(report, &ws.algebras[algebra], opts);
        }
        SuiteJob::Bialgebra { hopf } => {
            let start = Instant::now();
            push_result(
                report,
                "bialgebra",
                "laws",
                start,
                check_bialgebra(
                    &ws.hopfs[hopf],
                    opts.max_degree,
                    opts.samples,
                    opts.seed,
                    opts.fuel,
                ),
            );
        }
        SuiteJob::Antipode { hopf } => {
            let h = &ws.hopfs[hopf];
            let start = Instant::now();
            if !h.has_antipode() {
                report.push(CaseResult::unverified(
                    "antipode",
                    "axiom",
                    "no antipode declared",
                    elapsed_ms(start),
                ));
            } else {
                push_result(
                    report,
                    "antipode",
                    "axiom",
                    start,
                    check_antipode(h, opts.max_degree, opts.samples, opts.seed, opts.fuel),
                );
            }
        }
        SuiteJob::AntipodeExistence {
            hopf,
            matrix,
            inverse,
        } => {
            run_antipode_existence(
                report,
                &ws.hopfs[hopf],
                &ws.matrices[matrix],
                &ws.matrices[inverse],
                opts,
            );
        }
        SuiteJob::HopfIdeal {
            hopf,
            ideal,
            quotient,
        } => {
            run_hopf_ideal(report, &ws.hopfs[hopf], ideal, &ws.algebras[quotient], opts);
        }
        SuiteJob::Coaction { coaction } => {
            run_coaction_suite(report, &ws.coactions[coaction], opts);
        }
        SuiteJob::Filtration { coaction, cap } => {
            let start = Instant::now();
            push_result(
                report,
                "filtration",
                "degree-bound",
                start,
                check_filtration(
                    &ws.coactions[coaction],
                    *cap,
                    opts.samples,
                    opts.seed,
                    opts.fuel,
                ),
            );
        }
        SuiteJob::IdealIdentities { q, ns } => {
            for &n in ns {
                let start = Instant::now();
                push_result(
                    report,
                    "ideal-identities",
                    &format!("n{n}"),
                    start,
                    crate::axb::ideal_identities(ws.field, q, n, opts.fuel),
                );
            }
        }
        SuiteJob::Lattice { q, ns, ms } => {
            run_lattice(report, ws.field, q, ns, ms, opts);
        }
        SuiteJob::Oracle { q, ns, samples } => {
            run_oracle(report, ws.field, q, ns, *samples, opts);
        }
        SuiteJob::TransposeInverse { hopf, matrix } => {
            let start = Instant::now();
            let result = transpose_inverse_check(&ws.hopfs[hopf], &ws.matrices[matrix], opts.fuel)
                .map(|rep| {
                    if rep.antipode_transposes {
                        CheckOutcome::Pass
                    } else {
                        CheckOutcome::Fail {
                            witness: "the antipode does not commute with transposition".to_string(),
                        }
                    }
                });
            push_result(
                report,
                "transpose-inverse",
                "antipode-transposes",
                start,
                result,
            );
        }
    }
}

/// Run the declared checks, optionally filtered by suite name, in
/// declaration order.  Suites requested by the filter but not declared by
/// the document appear as unverified cases.
pub fn run_checks(ws: &Workspace, filter: &[String], opts: &RunOptions) -> Report {
    let run_all = filter.is_empty() || filter.iter().any(|s| s == "all");
    let mut report = Report::new(opts.seed);
    for job in &ws.jobs {
        if run_all || filter.iter().any(|s| s == job.suite()) {
            run_job(ws, job, opts, &mut report);
        }
    }
    if !run_all {
        for s in filter {
            if !ws.jobs.iter().any(|j| j.suite() == s) {
                report.push(CaseResult::unverified(
                    s.clone(),
                    "declared",
                    "the document declares no such check",
                    0,
                ));
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Builtin catalog
// ---------------------------------------------------------------------------

/// Names accepted by [`builtin_workspace`].
pub const BUILTIN_NAMES: &[&str] = &["axb-universal", "axb-q", "axb-qn", "laurent"];

/// Assemble a catalog instance as a ready-to-run workspace with its
/// canonical check set.
pub fn builtin_workspace(
    name: &str,
    field: FieldDescriptor,
    q: Option<Scalar>,
    n: Option<i64>,
) -> Result<Workspace, DslError> {
    let q = match q {
        Some(q) => q,
        None => default_q(field)?,
    };
    let inst = match name {
        "axb-universal" => universal_instance(field)?,
        "axb-q" => qn_instance(field, q.clone(), 1)?,
        "axb-qn" => qn_instance(field, q.clone(), n.unwrap_or(2))?,
        "laurent" => laurent_instance(field)?,
        other => {
            return Err(DslError::bare(format!(
                "unknown builtin `{other}` (available: {})",
                BUILTIN_NAMES.join(", ")
            )))
        }
    };

    let mut algebras = BTreeMap::new();
    algebras.insert("A".to_string(), inst.presentation.clone());
    let mut hopfs = BTreeMap::new();
    hopfs.insert("H".to_string(), inst.hopf.clone());
    let mut comodules = BTreeMap::new();
    comodules.insert("kx".to_string(), inst.coaction.comodule().clone());
    let mut coactions = BTreeMap::new();
    coactions.insert("alpha".to_string(), inst.coaction.clone());
    let mut matrices = BTreeMap::new();
    matrices.insert("T".to_string(), inst.matrix.clone());
    matrices.insert("Tinv".to_string(), inst.matrix_inverse.clone());

    let mut jobs = vec![
        SuiteJob::Confluence {
            algebra: "A".to_string(),
        },
        SuiteJob::Bialgebra {
            hopf: "H".to_string(),
        },
        SuiteJob::Antipode {
            hopf: "H".to_string(),
        },
    ];
    let twisted = matches!(inst.kind, InstanceKind::Twisted { .. });
    let universal = matches!(inst.kind, InstanceKind::Universal);
    let laurent = matches!(inst.kind, InstanceKind::LaurentPair);
    if universal || twisted || laurent {
        jobs.push(SuiteJob::AntipodeExistence {
            hopf: "H".to_string(),
            matrix: "T".to_string(),
            inverse: "Tinv".to_string(),
        });
        jobs.push(SuiteJob::TransposeInverse {
            hopf: "H".to_string(),
            matrix: "T".to_string(),
        });
    }
    jobs.push(SuiteJob::Coaction {
        coaction: "alpha".to_string(),
    });
    jobs.push(SuiteJob::Filtration {
        coaction: "alpha".to_string(),
        cap: 10,
    });
    if universal {
        let base = &inst.presentation;
        let b = Element::generator(base, crate::axb::GEN_B)?;
        algebras.insert("LQ".to_string(), laurent_quotient(field)?);
        jobs.push(SuiteJob::HopfIdeal {
            hopf: "H".to_string(),
            ideal: vec![b],
            quotient: "LQ".to_string(),
        });
        jobs.push(SuiteJob::IdealIdentities {
            q: q.clone(),
            ns: vec![1, 2, 3, 4],
        });
        jobs.push(SuiteJob::Lattice {
            q: q.clone(),
            ns: vec![1, 2],
            ms: vec![2, 3, -1],
        });
    }
    if twisted {
        let period = match &inst.kind {
            InstanceKind::Twisted { n, .. } => i64::from(*n),
            _ => unreachable!("guarded by `twisted`"),
        };
        jobs.push(SuiteJob::Oracle {
            q: q.clone(),
            ns: vec![period],
            samples: None,
        });
    }

    Ok(Workspace {
        field,
        algebras,
        hopfs,
        comodules,
        coactions,
        matrices,
        jobs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_document;
    use crate::report::CheckStatus;

    const AXB_DOC: &str = "\
field ratfunc;

algebra A {
  gens a, ainv, b;
  rel a*ainv = 1;
  rel ainv*a = 1;
  rule a*ainv -> 1;
  rule ainv*a -> 1;
  measure skew(b, a, ainv);
}

hopf H on A {
  delta a = a (x) a;
  delta ainv = ainv (x) ainv;
  delta b = b (x) a + 1 (x) b;
  counit a = 1;
  counit ainv = 1;
  counit b = 0;
  antipode a = ainv;
  antipode ainv = a;
  antipode b = -b*ainv;
}

comodule kx {
  gens x;
}

coaction alpha : H on kx right {
  act x = x (x) a + 1 (x) b;
}

matrix T on A {
  row a, 0;
  row b, 1;
}

matrix Tinv on A {
  row ainv, 0;
  row -b*ainv, 1;
}

check confluence on A;

check bialgebra on H;

check antipode on H;

check antipode-existence on H with matrix = T, inverse = Tinv;

check coaction on alpha;

check filtration on alpha;

check transpose-inverse on H with matrix = T;
";

    fn quick() -> RunOptions {
        RunOptions {
            max_degree: 4,
            samples: 12,
            seed: 42,
            fuel: 1_000_000,
        }
    }

    #[test]
    fn document_workspace_runs_every_declared_suite_green() {
        let doc = parse_document(AXB_DOC).unwrap();
        let ws = build_workspace(&doc, None, 1_000_000).unwrap();
        let report = run_checks(&ws, &[], &quick());
        assert_eq!(report.failed(), 0, "{}", report.to_text());
        assert_eq!(report.unverified(), 0, "{}", report.to_text());
        assert_eq!(report.exit_code(), 0);
        // One case per simple suite, two for antipode-existence (established
        // + matches-declared), two for coaction (laws + classifies), and two
        // for confluence (critical pairs + measure).
        assert_eq!(report.passed(), 10, "{}", report.to_text());
    }

    #[test]
    fn suite_filter_selects_and_reports_missing_suites() {
        let doc = parse_document(AXB_DOC).unwrap();
        let ws = build_workspace(&doc, None, 1_000_000).unwrap();
        let report = run_checks(
            &ws,
            &["bialgebra".to_string(), "oracle".to_string()],
            &quick(),
        );
        assert_eq!(report.passed(), 1);
        assert_eq!(report.unverified(), 1);
        assert_eq!(report.exit_code(), 3);
        let cases = &report.cases;
        assert_eq!(cases[1].suite, "oracle");
        assert_eq!(cases[1].status, CheckStatus::Unverified);
    }

    #[test]
    fn field_override_replaces_the_declared_field() {
        let doc = parse_document(AXB_DOC).unwrap();
        // The document says ratfunc; run it over GF(5) instead.  The q-free
        // structure builds identically.
        let ws =
            build_workspace(&doc, Some(FieldDescriptor::prime(5).unwrap()), 1_000_000).unwrap();
        assert_eq!(ws.field, FieldDescriptor::prime(5).unwrap());
        let report = run_checks(&ws, &["bialgebra".to_string()], &quick());
        assert_eq!(report.exit_code(), 0, "{}", report.to_text());
    }

    #[test]
    fn unknown_suite_names_are_build_errors() {
        let text = format!("{AXB_DOC}\ncheck nonsense on H;\n");
        let doc = parse_document(&text).unwrap();
        let err = build_workspace(&doc, None, 1_000_000).unwrap_err();
        assert!(err.message.contains("unknown suite"), "{err}");
    }

    #[test]
    fn builtin_universal_runs_green() {
        let ws = builtin_workspace(
            "axb-universal",
            FieldDescriptor::RationalFunctions,
            None,
            None,
        )
        .unwrap();
        let opts = RunOptions {
            samples: 8,
            max_degree: 4,
            ..RunOptions::default()
        };
        let report = run_checks(&ws, &[], &opts);
        assert_eq!(report.exit_code(), 0, "{}", report.to_text());
        assert_eq!(report.failed(), 0);
        assert_eq!(report.unverified(), 0);
    }

    #[test]
    fn builtin_twisted_runs_green_including_the_oracle() {
        let f = FieldDescriptor::RationalFunctions;
        let ws = builtin_workspace("axb-qn", f, Some(f.q().unwrap()), Some(2)).unwrap();
        let opts = RunOptions {
            samples: 8,
            max_degree: 4,
            ..RunOptions::default()
        };
        let report = run_checks(&ws, &[], &opts);
        assert_eq!(report.exit_code(), 0, "{}", report.to_text());
        assert!(report.cases.iter().any(|c| c.suite == "oracle"));
    }

    #[test]
    fn builtin_degenerate_parameters_collapse_to_the_laurent_quotient() {
        let f = FieldDescriptor::Rationals;
        let ws = builtin_workspace("axb-qn", f, Some(f.zero()), Some(3)).unwrap();
        // Degenerate instances skip the matrix-based suites.
        assert!(!ws
            .jobs
            .iter()
            .any(|j| matches!(j, SuiteJob::AntipodeExistence { .. })));
        let opts = RunOptions {
            samples: 8,
            max_degree: 4,
            ..RunOptions::default()
        };
        let report = run_checks(&ws, &[], &opts);
        assert_eq!(report.exit_code(), 0, "{}", report.to_text());
    }

    #[test]
    fn builtin_laurent_runs_green() {
        let ws = builtin_workspace("laurent", FieldDescriptor::Rationals, None, None).unwrap();
        let opts = RunOptions {
            samples: 8,
            max_degree: 4,
            ..RunOptions::default()
        };
        let report = run_checks(&ws, &[], &opts);
        assert_eq!(report.exit_code(), 0, "{}", report.to_text());
    }

    #[test]
    fn left_coactions_skip_classification() {
        // A left coaction over the doubly-opposite structure: laws hold,
        // and no classification case is emitted.
        let doc = parse_document(AXB_DOC).unwrap();
        let ws = build_workspace(&doc, None, 1_000_000).unwrap();
        let h = &ws.hopfs["H"];
        let op = crate::hopf::opposite(h, true, true).unwrap();
        let line = ComoduleAlgebra::polynomial_line(ws.field, "x").unwrap();
        let a = Element::generator(op.base(), 0).unwrap();
        let b = Element::generator(op.base(), 2).unwrap();
        let x = Element::generator(line.presentation(), 0).unwrap();
        let image = TensorElement::from_elements(&[a, x.clone()])
            .unwrap()
            .add(&TensorElement::from_elements(&[b, Element::one(line.presentation())]).unwrap())
            .unwrap();
        let spec = CoactionSpec::new(line, op, CoactionSide::Left, vec![image]).unwrap();
        let mut report = Report::new(42);
        run_coaction_suite(&mut report, &spec, &quick());
        assert_eq!(report.passed(), 1, "{}", report.to_text());
        assert!(report.cases.iter().all(|c| c.id != "classifies"));
    }
}
