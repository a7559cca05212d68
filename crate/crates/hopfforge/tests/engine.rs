//! Rewrite-engine battery: frozen canonical forms, critical-pair analysis,
//! trace replay, strategy independence, and large-scale agreement with the
//! independent crossed-product model.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hopfforge::axb::{
    axb_generator_roles, axb_q, axb_qn, laurent_pair, oracle::CrossedModel, universal_axb, GEN_A,
    GEN_AINV, GEN_B,
};
use hopfforge::ncalg::{
    check_local_confluence, critical_pairs, normal_form_randomized, normal_form_traced,
    sample::sample_element, validate_trace, AlgebraError, ConfluenceStatus, Element, Measure,
    Presentation, RewriteRule, Word, DEFAULT_FUEL,
};
use hopfforge::scalar::FieldDescriptor;

use std::sync::Arc;

fn ratfunc() -> FieldDescriptor {
    FieldDescriptor::RationalFunctions
}

fn gen(pres: &Arc<Presentation>, g: usize) -> Element {
    Element::generator(pres, g).unwrap()
}

#[test]
fn frozen_reductions_in_the_period_two_twist() {
    // b ainv reduces in one step to q ainv^2 b a, which is irreducible.
    let f = ratfunc();
    let inst = axb_qn(f, f.q().unwrap(), 2).unwrap();
    let pres = &inst.presentation;
    let b = gen(pres, GEN_B);
    let ainv = gen(pres, GEN_AINV);
    let got = b.mul(&ainv).unwrap();
    assert_eq!(got.to_string(), "q*ainv^2*b*a");

    let expected = Element::from_terms(
        pres,
        vec![(
            Word::from_runs([(GEN_AINV, 2), (GEN_B, 1), (GEN_A, 1)]),
            f.q().unwrap(),
        )],
    )
    .unwrap();
    assert_eq!(got, expected);
    assert!(got.is_canonical());
}

#[test]
fn frozen_reductions_in_the_period_one_twist() {
    let f = ratfunc();
    let inst = axb_q(f, f.q().unwrap()).unwrap();
    let pres = &inst.presentation;
    let a = gen(pres, GEN_A);
    let b = gen(pres, GEN_B);

    // b a^2 = q^-2 a^2 b.
    let got = b.mul(&a.pow(2).unwrap()).unwrap();
    assert_eq!(got.to_string(), "q^-2*a^2*b");

    // b ainv = q ainv b.
    let ainv = gen(pres, GEN_AINV);
    assert_eq!(b.mul(&ainv).unwrap().to_string(), "q*ainv*b");
}

#[test]
fn frozen_reductions_in_the_universal_algebra() {
    let pres = universal_axb(FieldDescriptor::Rationals).unwrap();
    let a = gen(&pres, GEN_A);
    let ainv = gen(&pres, GEN_AINV);
    let b = gen(&pres, GEN_B);

    let aia = a.mul(&ainv).unwrap().mul(&a).unwrap();
    assert_eq!(aia, a);

    let bai = b.mul(&a).unwrap().mul(&ainv).unwrap();
    assert_eq!(bai, b);

    // b itself commutes with nothing: a b stays a b.
    let ab = a.mul(&b).unwrap();
    assert_eq!(ab.to_string(), "a*b");
}

#[test]
fn universal_algebra_has_two_joinable_critical_pairs() {
    let pres = universal_axb(FieldDescriptor::Rationals).unwrap();
    let pairs = critical_pairs(&pres).unwrap();
    assert_eq!(pairs.len(), 2);
    let overlaps: Vec<String> = pairs
        .iter()
        .map(|p| p.overlap_word.format(&pres.generator_names()))
        .collect();
    assert!(overlaps.contains(&"a*ainv*a".to_string()));
    assert!(overlaps.contains(&"ainv*a*ainv".to_string()));

    let report = check_local_confluence(&pres, DEFAULT_FUEL).unwrap();
    assert!(report.resolutions.iter().all(|r| r.joined));
    assert_eq!(
        report.status,
        ConfluenceStatus::LocallyConfluent { pairs: 2 }
    );
    assert_eq!(pres.confluence_status(), report.status);
}

#[test]
fn twisted_algebras_have_four_joinable_critical_pairs() {
    let f = ratfunc();
    for n in [1i64, 2, 3, 4] {
        let inst = axb_qn(f, f.q().unwrap(), n).unwrap();
        let pairs = critical_pairs(&inst.presentation).unwrap();
        assert_eq!(pairs.len(), 4, "period {n}");
        let report = check_local_confluence(&inst.presentation, DEFAULT_FUEL).unwrap();
        assert_eq!(
            report.status,
            ConfluenceStatus::LocallyConfluent { pairs: 4 },
            "period {n}"
        );
    }
}

#[test]
fn measure_validates_every_shipped_rule() {
    let f = ratfunc();
    let mut presentations = vec![universal_axb(f).unwrap()];
    for n in [1i64, 2, 3, 4] {
        presentations.push(axb_qn(f, f.q().unwrap(), n).unwrap().presentation);
    }
    for pres in &presentations {
        let measure = pres.measure();
        assert_ne!(measure, Measure::None);
        for rule in pres.rules() {
            assert!(measure.validates_rule(rule));
        }
    }
    // The Laurent pair ships with the length measure, which also validates.
    let laurent = laurent_pair(f).unwrap();
    for rule in laurent.rules() {
        assert!(laurent.measure().validates_rule(rule));
    }
}

#[test]
fn unjoinable_system_is_reported_with_its_critical_pair() {
    // a b -> b and b a -> a overlap on a b a, whose two reducts have the
    // distinct normal forms a and a^2 (and b a b splits into b and b^2).
    let f = FieldDescriptor::Rationals;
    let one = f.one();
    let pres = Presentation::new(
        f,
        &["a", "b"],
        vec![],
        vec![
            RewriteRule {
                lhs: Word::from_letters([0, 1]),
                rhs: vec![(Word::gen(1), one.clone())],
            },
            RewriteRule {
                lhs: Word::from_letters([1, 0]),
                rhs: vec![(Word::gen(0), one)],
            },
        ],
        Measure::Length,
        DEFAULT_FUEL,
    )
    .unwrap();

    let pairs = critical_pairs(&pres).unwrap();
    assert_eq!(pairs.len(), 2);

    let report = check_local_confluence(&pres, DEFAULT_FUEL).unwrap();
    match &report.status {
        ConfluenceStatus::NotLocallyConfluent {
            overlap,
            left_normal_form,
            right_normal_form,
        } => {
            assert_eq!(overlap, "a*b*a");
            assert_eq!(left_normal_form, "a");
            assert_eq!(right_normal_form, "a^2");
        }
        other => panic!("expected a non-confluence report, got {other:?}"),
    }
}

#[test]
fn traced_reduction_replays_and_tampering_is_caught() {
    let f = ratfunc();
    let inst = axb_q(f, f.q().unwrap()).unwrap();
    let pres = &inst.presentation;
    // b a^2 ainv needs several steps.
    let x = Element::from_word(
        pres,
        Word::from_runs([(GEN_B, 1), (GEN_A, 2), (GEN_AINV, 1)]),
    );
    let (nf, trace) = normal_form_traced(&x, DEFAULT_FUEL).unwrap();
    assert_eq!(nf.to_string(), "q^-1*a*b");
    assert!(!trace.is_empty());
    assert_eq!(validate_trace(pres, &trace), Ok(trace.len()));

    // Claiming the rule applied one letter later must be rejected.
    let mut tampered = trace.clone();
    tampered[0].pos += 1;
    assert!(validate_trace(pres, &tampered).is_err());

    // Pointing at a rule that does not exist must be rejected.
    let mut bad_rule = trace;
    bad_rule[0].rule = 99;
    assert!(validate_trace(pres, &bad_rule).is_err());
}

#[test]
fn randomized_strategy_agrees_with_deterministic() {
    let f = ratfunc();
    let inst = axb_qn(f, f.q().unwrap(), 2).unwrap();
    let pres = &inst.presentation;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let x = sample_element(pres, 6, &mut rng).unwrap();
        let y = sample_element(pres, 6, &mut rng).unwrap();
        let product = x.mul_free(&y).unwrap();
        let det = product.normal_form(DEFAULT_FUEL).unwrap();
        let rand_nf = normal_form_randomized(&product, DEFAULT_FUEL, &mut rng).unwrap();
        assert_eq!(det, rand_nf);
    }
}

#[test]
fn engine_products_match_the_crossed_product_model() {
    // 200 random pairs per parameter choice: reduce x*y in the engine and
    // compare with the model product of the unreduced factors.
    let symbolic = ratfunc();
    let rationals = FieldDescriptor::Rationals;
    let cases: Vec<(FieldDescriptor, hopfforge::scalar::Scalar, i64)> = vec![
        (symbolic, symbolic.q().unwrap(), 1),
        (symbolic, symbolic.q().unwrap(), 2),
        (rationals, rationals.from_i64(2), 3),
    ];
    for (field, q, n) in cases {
        let inst = axb_qn(field, q.clone(), n).unwrap();
        let pres = &inst.presentation;
        let model = CrossedModel::new(n as u32, q).unwrap();
        let roles = axb_generator_roles();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for i in 0..200 {
            let x = sample_element(pres, 6, &mut rng).unwrap();
            let y = sample_element(pres, 6, &mut rng).unwrap();
            let engine = x.mul(&y).unwrap();
            let lhs = model.eval(pres, roles, &engine).unwrap();
            let free = x.mul_free(&y).unwrap();
            let rhs = model.eval(pres, roles, &free).unwrap();
            assert_eq!(lhs, rhs, "pair {i} at period {n}");
        }
    }
}

#[test]
fn model_separates_engine_normal_forms() {
    // Injectivity spot check: distinct canonical words map to distinct
    // model elements.
    let f = ratfunc();
    let inst = axb_qn(f, f.q().unwrap(), 2).unwrap();
    let pres = &inst.presentation;
    let model = CrossedModel::new(2, f.q().unwrap()).unwrap();
    let roles = axb_generator_roles();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut seen: Vec<(Element, hopfforge::axb::oracle::CrossedElement)> = Vec::new();
    for _ in 0..60 {
        let x = sample_element(pres, 5, &mut rng)
            .unwrap()
            .normal_form(DEFAULT_FUEL)
            .unwrap();
        let image = model.eval(pres, roles, &x).unwrap();
        for (y, img) in &seen {
            assert_eq!(&x == y, &image == img, "model must separate {x} and {y}");
        }
        seen.push((x, image));
    }
}

#[test]
fn fuel_exhaustion_is_reported() {
    let f = ratfunc();
    let inst = axb_qn(f, f.q().unwrap(), 2).unwrap();
    let pres = &inst.presentation;
    let x = Element::from_word(pres, Word::from_runs([(GEN_B, 3), (GEN_AINV, 5)]));
    match x.normal_form(2) {
        Err(AlgebraError::FuelExhausted { .. }) => {}
        other => panic!("expected fuel exhaustion, got {other:?}"),
    }
    // The same reduction succeeds with the default budget.
    assert!(x.normal_form(DEFAULT_FUEL).is_ok());
}

#[test]
fn measure_violations_are_rejected_at_construction() {
    // A word-lengthening rule cannot carry the length measure...
    let f = FieldDescriptor::Rationals;
    let growing = |measure| {
        Presentation::new(
            f,
            &["a"],
            vec![],
            vec![RewriteRule {
                lhs: Word::gen(0),
                rhs: vec![(Word::power(0, 2), f.one())],
            }],
            measure,
            DEFAULT_FUEL,
        )
    };
    assert!(matches!(
        growing(Measure::Length),
        Err(AlgebraError::MeasureViolation { .. })
    ));
    // ...but an uncertified system is accepted and runs on fuel alone.
    assert!(growing(Measure::None).is_ok());
}

#[test]
fn structural_compatibility_tracks_content() {
    let f = ratfunc();
    let p1 = axb_q(f, f.q().unwrap()).unwrap().presentation;
    let p2 = axb_q(f, f.q().unwrap()).unwrap().presentation;
    let q2 = f.q().unwrap().mul(&f.q().unwrap()).unwrap();
    let p3 = axb_q(f, q2).unwrap().presentation;
    assert!(hopfforge::ncalg::compatible(&p1, &p2));
    assert!(!hopfforge::ncalg::compatible(&p1, &p3));

    // Elements of structurally equal presentations interoperate.
    let x = gen(&p1, GEN_B);
    let y = gen(&p2, GEN_B);
    assert_eq!(x, y);
}
