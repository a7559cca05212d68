//! Randomized algebraic-law batteries: field axioms for every scalar
//! backend, ring axioms and strategy independence for reduced elements,
//! and module laws for tensor terms.  Counts are deliberately high; every
//! comparison is exact.

use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hopfforge::axb::{axb_qn, universal_axb};
use hopfforge::ncalg::{
    normal_form_randomized, sample::sample_element, Element, Presentation, DEFAULT_FUEL,
};
use hopfforge::scalar::{FieldDescriptor, Scalar};
use hopfforge::tensor::TensorElement;

fn ratfunc() -> FieldDescriptor {
    FieldDescriptor::RationalFunctions
}

/// Build one scalar per raw coefficient block: a plain ratio over the
/// rationals, a residue over gf:5, and a degree-one rational function of
/// the parameter.
fn scalars_from(raw: &[i64; 4], field: FieldDescriptor) -> Scalar {
    let [n0, n1, d0, _] = *raw;
    match field {
        FieldDescriptor::Rationals => field.ratio(n0, if d0 == 0 { 1 } else { d0 }).unwrap(),
        FieldDescriptor::Prime(_) => field.from_i64(n0),
        FieldDescriptor::RationalFunctions => {
            let q = field.q().unwrap();
            let num = field
                .from_i64(n0)
                .add(&field.from_i64(n1).mul(&q).unwrap())
                .unwrap();
            let den = field.from_i64(if d0 == 0 { 1 } else { d0 });
            num.div(&den).unwrap()
        }
    }
}

fn field_axioms(x: &Scalar, y: &Scalar, z: &Scalar, field: FieldDescriptor) {
    let zero = field.zero();
    let one = field.one();
    // Additive group.
    assert_eq!(
        x.add(y).unwrap().add(z).unwrap(),
        x.add(&y.add(z).unwrap()).unwrap()
    );
    assert_eq!(x.add(y).unwrap(), y.add(x).unwrap());
    assert_eq!(x.add(&zero).unwrap(), *x);
    assert_eq!(x.add(&x.neg()).unwrap(), zero);
    assert_eq!(x.sub(y).unwrap(), x.add(&y.neg()).unwrap());
    // Multiplicative laws.
    assert_eq!(
        x.mul(y).unwrap().mul(z).unwrap(),
        x.mul(&y.mul(z).unwrap()).unwrap()
    );
    assert_eq!(x.mul(y).unwrap(), y.mul(x).unwrap());
    assert_eq!(x.mul(&one).unwrap(), *x);
    assert_eq!(x.mul(&zero).unwrap(), zero);
    // Distributivity.
    assert_eq!(
        x.mul(&y.add(z).unwrap()).unwrap(),
        x.mul(y).unwrap().add(&x.mul(z).unwrap()).unwrap()
    );
    // Inverses and powers.
    assert_eq!(x.pow(3).unwrap(), x.mul(x).unwrap().mul(x).unwrap());
    if !x.is_zero() {
        assert_eq!(x.mul(&x.inv().unwrap()).unwrap(), one);
        assert_eq!(y.div(x).unwrap().mul(x).unwrap(), *y);
        assert_eq!(
            x.pow(-2).unwrap(),
            x.inv().unwrap().mul(&x.inv().unwrap()).unwrap()
        );
    }
}

proptest! {
    // 350 cases, three fields each: 1050 random triples.
    #![proptest_config(ProptestConfig::with_cases(350))]
    #[test]
    fn scalar_backends_satisfy_the_field_axioms(
        rx in prop::array::uniform4(-20i64..=20),
        ry in prop::array::uniform4(-20i64..=20),
        rz in prop::array::uniform4(-20i64..=20),
    ) {
        for field in [
            FieldDescriptor::Rationals,
            FieldDescriptor::prime(5).unwrap(),
            ratfunc(),
        ] {
            let x = scalars_from(&rx, field);
            let y = scalars_from(&ry, field);
            let z = scalars_from(&rz, field);
            field_axioms(&x, &y, &z, field);
        }
    }
}

fn ring_axioms(pres: &Arc<Presentation>, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = sample_element(pres, 4, &mut rng).unwrap();
    let y = sample_element(pres, 4, &mut rng).unwrap();
    let z = sample_element(pres, 4, &mut rng).unwrap();
    let one = Element::one(pres);
    let zero = Element::zero(pres);
    let c = pres.field().from_i64(3);

    assert_eq!(
        x.add(&y).unwrap().add(&z).unwrap(),
        x.add(&y.add(&z).unwrap()).unwrap()
    );
    assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
    assert_eq!(x.add(&zero).unwrap(), x);
    assert!(x.sub(&x).unwrap().is_zero());
    assert_eq!(
        x.mul(&y).unwrap().mul(&z).unwrap(),
        x.mul(&y.mul(&z).unwrap()).unwrap()
    );
    assert_eq!(x.mul(&one).unwrap(), x);
    assert_eq!(one.mul(&x).unwrap(), x);
    assert!(x.mul(&zero).unwrap().is_zero());
    // Two-sided distributivity.
    assert_eq!(
        x.mul(&y.add(&z).unwrap()).unwrap(),
        x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
    );
    assert_eq!(
        y.add(&z).unwrap().mul(&x).unwrap(),
        y.mul(&x).unwrap().add(&z.mul(&x).unwrap()).unwrap()
    );
    // Scalars slide through products.
    let scaled = x.scale(&c).unwrap();
    assert_eq!(
        scaled.mul(&y).unwrap(),
        x.mul(&y).unwrap().scale(&c).unwrap()
    );
    assert_eq!(
        x.mul(&y.scale(&c).unwrap()).unwrap(),
        x.mul(&y).unwrap().scale(&c).unwrap()
    );
}

proptest! {
    // 250 cases, two presentations each: 500 random triples.
    #![proptest_config(ProptestConfig::with_cases(250))]
    #[test]
    fn reduced_elements_satisfy_the_ring_axioms(seed in any::<u64>()) {
        let free = universal_axb(FieldDescriptor::Rationals).unwrap();
        ring_axioms(&free, seed);
        let f = ratfunc();
        let twisted = axb_qn(f, f.q().unwrap(), 2).unwrap().presentation;
        ring_axioms(&twisted, seed);
    }
}

proptest! {
    // 500 cases of reduction-order independence on the period-two twist.
    #![proptest_config(ProptestConfig::with_cases(500))]
    #[test]
    fn normal_forms_do_not_depend_on_the_reduction_strategy(seed in any::<u64>()) {
        let f = ratfunc();
        let pres = axb_qn(f, f.q().unwrap(), 2).unwrap().presentation;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = sample_element(&pres, 5, &mut rng).unwrap();
        let y = sample_element(&pres, 5, &mut rng).unwrap();
        // Reducing during the product and reducing the free product agree.
        let reduced = x.mul(&y).unwrap();
        let free = x.mul_free(&y).unwrap();
        prop_assert_eq!(&reduced, &free.normal_form(DEFAULT_FUEL).unwrap());
        // Randomized rule/position choice reaches the same form.
        let randomized = normal_form_randomized(&free, DEFAULT_FUEL, &mut rng).unwrap();
        prop_assert_eq!(&reduced, &randomized);
        // Normal forms are fixed points.
        prop_assert_eq!(&reduced, &reduced.normal_form(DEFAULT_FUEL).unwrap());
    }
}

fn random_tensor(pres: &Arc<Presentation>, rng: &mut ChaCha8Rng) -> TensorElement {
    let a = sample_element(pres, 3, rng).unwrap();
    let b = sample_element(pres, 3, rng).unwrap();
    TensorElement::from_elements(&[a, b]).unwrap()
}

proptest! {
    // 300 random triples of two-leg tensors.
    #![proptest_config(ProptestConfig::with_cases(300))]
    #[test]
    fn tensor_terms_satisfy_the_module_laws(seed in any::<u64>()) {
        let pres = universal_axb(FieldDescriptor::Rationals).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_tensor(&pres, &mut rng);
        let y = random_tensor(&pres, &mut rng);
        let z = random_tensor(&pres, &mut rng);
        let c = pres.field().from_i64(2);

        prop_assert_eq!(
            x.add(&y).unwrap().add(&z).unwrap(),
            x.add(&y.add(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        prop_assert!(x.sub(&x).unwrap().is_zero());
        // Legwise multiplication is associative and distributes over sums.
        prop_assert_eq!(
            x.mul(&y, DEFAULT_FUEL).unwrap().mul(&z, DEFAULT_FUEL).unwrap(),
            x.mul(&y.mul(&z, DEFAULT_FUEL).unwrap(), DEFAULT_FUEL).unwrap()
        );
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap(), DEFAULT_FUEL).unwrap(),
            x.mul(&y, DEFAULT_FUEL).unwrap().add(&x.mul(&z, DEFAULT_FUEL).unwrap()).unwrap()
        );
        // Scaling commutes with multiplication.
        prop_assert_eq!(
            x.scale(&c).unwrap().mul(&y, DEFAULT_FUEL).unwrap(),
            x.mul(&y, DEFAULT_FUEL).unwrap().scale(&c).unwrap()
        );
        // Flipping the legs is an involutive ring map (both legs share one
        // presentation, so the flip stays well typed).
        prop_assert_eq!(x.flip().unwrap().flip().unwrap(), x.clone());
        prop_assert_eq!(
            x.add(&y).unwrap().flip().unwrap(),
            x.flip().unwrap().add(&y.flip().unwrap()).unwrap()
        );
        prop_assert_eq!(
            x.mul(&y, DEFAULT_FUEL).unwrap().flip().unwrap(),
            x.flip().unwrap().mul(&y.flip().unwrap(), DEFAULT_FUEL).unwrap()
        );
    }
}
