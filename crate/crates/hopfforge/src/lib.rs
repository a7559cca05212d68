//! hopfforge: an exact symbolic engine for finitely presented noncommutative
//! Hopf algebras.
//!
//! The crate builds algebras from generators, relations, and oriented rewrite
//! rules, computes canonical forms by exact rewriting, and machine-checks the
//! bialgebra/Hopf axioms, coactions, quantum-subgroup lattices, and related
//! structure with zero numerical tolerance.  Everything is deterministic:
//! random sampling is seeded, term orders are total, and reports are
//! byte-stable.
//!
//! Module map:
//! - [`scalar`]: exact coefficient fields (arbitrary-precision rationals,
//!   prime fields, rational functions in one parameter `q`).
//! - [`ncalg`]: free noncommutative algebra, presentations, rewriting,
//!   critical pairs, local confluence, homomorphism extension.
//! - [`tensor`]: tensor powers of presented algebras and leg-wise maps.
//! - [`hopf`]: coproduct/counit/antipode plumbing and the structural checks.
//! - [`comodule`]: comodule algebras, coaction axioms, filtration checks,
//!   and classification of coactions on a polynomial line.
//! - [`axb`]: the built-in catalog of affine-substitution ("ax+b") quantum
//!   groups, their quantum subgroups, and an independent crossed-product
//!   oracle used to cross-validate the rewriting engine.
//! - [`dsl`]: the `.hopf` document language (parser and printer).
//! - [`report`] and [`runner`]: check execution and deterministic reports.

pub mod axb;
pub mod comodule;
pub mod dsl;
pub mod hopf;
pub mod ncalg;
pub mod report;
pub mod runner;
pub mod scalar;
pub mod tensor;
