//! Catalog of the affine-transformation quantum algebras and their
//! verification helpers.
//!
//! The universal object is `k<a, a^-1, b>` with `a` invertible and `b` free;
//! its quotients by `a^n b - q b a^n` (for invertible `q` and period
//! `n >= 1`) form the two-parameter family this crate studies.  Degenerate
//! parameter choices collapse `b` to zero and leave the Laurent-polynomial
//! algebra `k[a, a^-1]`.

pub mod instances;
pub mod oracle;

pub use instances::{
    ideal_identities, laurent_instance, q_instance, qn_instance, standard_coaction,
    standard_matrix, standard_structure, twist_defect, twist_morphism, universal_instance,
    AxbInstance, MorphismVerdict,
};

use std::sync::Arc;

use crate::ncalg::{AlgebraError, Measure, Presentation, RewriteRule, Word, DEFAULT_FUEL};
use crate::scalar::{FieldDescriptor, Scalar};

use oracle::GeneratorRoles;

/// Generator indices shared by every three-generator catalog presentation.
pub const GEN_A: usize = 0;
pub const GEN_AINV: usize = 1;
pub const GEN_B: usize = 2;

/// How a requested parameter pair was classified.
#[derive(Debug, Clone, PartialEq)]
pub enum InstanceKind {
    /// No twist relation (or a trivially zero one): the universal algebra.
    Universal,
    /// A genuine twist `a^n b = q b a^n` with invertible `q` and `n >= 1`.
    Twisted { q: Scalar, n: u32 },
    /// The parameters force `b = 0`; the algebra is `k[a, a^-1]` presented
    /// on three generators with `b` rewritten away.
    LaurentQuotient,
    /// The standalone Laurent algebra `k[a, a^-1]` on two generators.
    LaurentPair,
}

/// A catalog presentation together with its parameter classification.
#[derive(Debug, Clone)]
pub struct QuantumInstance {
    pub presentation: Arc<Presentation>,
    pub kind: InstanceKind,
}

impl QuantumInstance {
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self.kind,
            InstanceKind::LaurentQuotient | InstanceKind::LaurentPair
        )
    }
}

/// Roles of the catalog generators inside the crossed-product model.
pub fn axb_generator_roles() -> GeneratorRoles {
    GeneratorRoles {
        shift: GEN_A,
        shift_inverse: GEN_AINV,
        skew: GEN_B,
    }
}

fn inverse_pair_relations(field: FieldDescriptor) -> Vec<Vec<(Word, Scalar)>> {
    let one = field.one();
    let minus_one = field.from_i64(-1);
    vec![
        vec![
            (Word::from_letters([GEN_A, GEN_AINV]), one.clone()),
            (Word::one(), minus_one.clone()),
        ],
        vec![
            (Word::from_letters([GEN_AINV, GEN_A]), one),
            (Word::one(), minus_one),
        ],
    ]
}

fn inverse_pair_rules(field: FieldDescriptor) -> Vec<RewriteRule> {
    let one = field.one();
    vec![
        RewriteRule {
            lhs: Word::from_letters([GEN_A, GEN_AINV]),
            rhs: vec![(Word::one(), one.clone())],
        },
        RewriteRule {
            lhs: Word::from_letters([GEN_AINV, GEN_A]),
            rhs: vec![(Word::one(), one)],
        },
    ]
}

fn skew_measure() -> Measure {
    Measure::MoverInversions {
        mover: GEN_B,
        forward: GEN_A,
        backward: GEN_AINV,
    }
}

/// The universal algebra `k<a, a^-1, b>`.
pub fn universal_axb(field: FieldDescriptor) -> Result<Arc<Presentation>, AlgebraError> {
    Presentation::new(
        field,
        &["a", "ainv", "b"],
        inverse_pair_relations(field),
        inverse_pair_rules(field),
        skew_measure(),
        DEFAULT_FUEL,
    )
}

/// The Laurent-polynomial algebra `k[a, a^-1]` on its own two generators.
pub fn laurent_pair(field: FieldDescriptor) -> Result<Arc<Presentation>, AlgebraError> {
    let one = field.one();
    let minus_one = field.from_i64(-1);
    Presentation::new(
        field,
        &["a", "ainv"],
        vec![
            vec![
                (Word::from_letters([0, 1]), one.clone()),
                (Word::one(), minus_one.clone()),
            ],
            vec![
                (Word::from_letters([1, 0]), one.clone()),
                (Word::one(), minus_one),
            ],
        ],
        vec![
            RewriteRule {
                lhs: Word::from_letters([0, 1]),
                rhs: vec![(Word::one(), one.clone())],
            },
            RewriteRule {
                lhs: Word::from_letters([1, 0]),
                rhs: vec![(Word::one(), one)],
            },
        ],
        Measure::Length,
        DEFAULT_FUEL,
    )
}

/// `k[a, a^-1]` presented on the three catalog generators with `b -> 0`.
pub fn laurent_quotient(field: FieldDescriptor) -> Result<Arc<Presentation>, AlgebraError> {
    let mut relations = inverse_pair_relations(field);
    relations.push(vec![(Word::gen(GEN_B), field.one())]);
    let mut rules = inverse_pair_rules(field);
    rules.push(RewriteRule {
        lhs: Word::gen(GEN_B),
        rhs: Vec::new(),
    });
    Presentation::new(
        field,
        &["a", "ainv", "b"],
        relations,
        rules,
        skew_measure(),
        DEFAULT_FUEL,
    )
}

/// The quotient by `a^n b - q b a^n`, with degenerate parameters collapsed.
///
/// Negative periods are normalized through `a^-n b = q b a^-n  <=>
/// a^n b = q^-1 b a^n`.  A zero twist parameter forces `b = 0` (multiply the
/// relation by `a^-n` on the left); a zero period leaves `(1 - q) b = 0`,
/// which is vacuous for `q = 1` and forces `b = 0` otherwise.
pub fn axb_qn(field: FieldDescriptor, q: Scalar, n: i64) -> Result<QuantumInstance, AlgebraError> {
    if q.field() != field {
        return Err(AlgebraError::Scalar(
            crate::scalar::ScalarError::FieldMismatch {
                left: field.to_string(),
                right: q.field().to_string(),
            },
        ));
    }
    if q.is_zero() {
        return Ok(QuantumInstance {
            presentation: laurent_quotient(field)?,
            kind: InstanceKind::LaurentQuotient,
        });
    }
    if n == 0 {
        return if q.is_one() {
            Ok(QuantumInstance {
                presentation: universal_axb(field)?,
                kind: InstanceKind::Universal,
            })
        } else {
            Ok(QuantumInstance {
                presentation: laurent_quotient(field)?,
                kind: InstanceKind::LaurentQuotient,
            })
        };
    }
    let (q, n) = if n < 0 {
        (q.inv()?, n.unsigned_abs() as u32)
    } else {
        (q, n as u32)
    };

    let q_inv = q.inv()?;
    let mut relations = inverse_pair_relations(field);
    relations.push(vec![
        (Word::from_runs([(GEN_A, n), (GEN_B, 1)]), field.one()),
        (Word::from_runs([(GEN_B, 1), (GEN_A, n)]), q.neg()),
    ]);

    let mut rules = inverse_pair_rules(field);
    // b a^n -> q^-1 a^n b: move shift powers to the left.
    rules.push(RewriteRule {
        lhs: Word::from_runs([(GEN_B, 1), (GEN_A, n)]),
        rhs: vec![(Word::from_runs([(GEN_A, n), (GEN_B, 1)]), q_inv)],
    });
    // b a^-1 -> q a^-n b a^(n-1): the inverse-shift form of the same move.
    rules.push(RewriteRule {
        lhs: Word::from_letters([GEN_B, GEN_AINV]),
        rhs: vec![(
            Word::from_runs([(GEN_AINV, n), (GEN_B, 1), (GEN_A, n - 1)]),
            q.clone(),
        )],
    });

    let presentation = Presentation::new(
        field,
        &["a", "ainv", "b"],
        relations,
        rules,
        skew_measure(),
        DEFAULT_FUEL,
    )?;
    Ok(QuantumInstance {
        presentation,
        kind: InstanceKind::Twisted { q, n },
    })
}

/// The single-twist quotient `a b = q b a` (period one).
pub fn axb_q(field: FieldDescriptor, q: Scalar) -> Result<QuantumInstance, AlgebraError> {
    axb_qn(field, q, 1)
}
