//! Seeded random sampling of words and elements.
//!
//! Sampling is fully determined by the caller's RNG: word lengths are
//! uniform on `[0, max_degree]`, letters are uniform over the generators,
//! and coefficients come from a small fixed pool (`1, -1, 2, -2`, plus
//! `q, q^-1` over the rational-function field).  Sampled elements are
//! reduced to canonical form.

use rand::Rng;
use std::sync::Arc;

use crate::ncalg::element::Element;
use crate::ncalg::error::AlgebraError;
use crate::ncalg::presentation::Presentation;
use crate::ncalg::word::Word;
use crate::scalar::{FieldDescriptor, Scalar};

/// The fixed coefficient pool for a field.
pub fn coefficient_pool(field: FieldDescriptor) -> Vec<Scalar> {
    let mut pool = vec![
        field.from_i64(1),
        field.from_i64(-1),
        field.from_i64(2),
        field.from_i64(-2),
    ];
    if field.has_parameter() {
        let q = field.q().expect("parameter exists");
        pool.push(q.clone());
        pool.push(q.pow(-1).expect("q is invertible"));
    }
    pool
}

pub fn sample_word<R: Rng>(pres: &Arc<Presentation>, max_degree: usize, rng: &mut R) -> Word {
    let n = pres.generators().len();
    if n == 0 {
        return Word::one();
    }
    let len = rng.gen_range(0..=max_degree);
    Word::from_letters((0..len).map(|_| rng.gen_range(0..n)))
}

/// A canonical random element: one to three random terms, reduced.
pub fn sample_element<R: Rng>(
    pres: &Arc<Presentation>,
    max_degree: usize,
    rng: &mut R,
) -> Result<Element, AlgebraError> {
    let pool = coefficient_pool(pres.field());
    let terms = rng.gen_range(1..=3);
    let mut raw = Vec::with_capacity(terms);
    for _ in 0..terms {
        let w = sample_word(pres, max_degree, rng);
        let c = pool[rng.gen_range(0..pool.len())].clone();
        raw.push((w, c));
    }
    Element::from_terms(pres, raw)?.normal_form(pres.default_fuel())
}
