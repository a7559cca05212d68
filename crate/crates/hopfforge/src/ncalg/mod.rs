//! Free noncommutative algebra over an exact field: words, elements,
//! presentations with oriented rewrite systems, canonical forms, critical
//! pairs and local confluence, homomorphism extension, and seeded sampling.

mod confluence;
mod element;
mod error;
mod hom;
mod presentation;
mod rewrite;
pub mod sample;
mod word;

pub use confluence::{
    check_local_confluence, critical_pairs, AmbiguityKind, ConfluenceReport, CriticalPair,
    PairResolution,
};
pub use element::Element;
pub use error::AlgebraError;
pub use hom::{eval_element, AlgebraHom, AlgebraTarget, HomTarget, ScalarTarget, WellDefinedness};
pub use presentation::{
    compatible, ConfluenceStatus, GeneratorSymbol, Measure, MeasureRank, Presentation, RewriteRule,
    DEFAULT_FUEL,
};
pub use rewrite::{
    normal_form, normal_form_randomized, normal_form_traced, validate_trace, TraceStep,
};
pub use word::{GenId, Word};
