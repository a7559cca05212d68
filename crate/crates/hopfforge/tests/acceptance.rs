//! Acceptance gate: one test per release criterion, each printing a single
//! PASS line.  Every comparison is exact — no tolerances anywhere.

use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hopfforge::axb::{
    axb_generator_roles, axb_q, axb_qn, ideal_identities, laurent_instance, laurent_quotient,
    oracle::CrossedModel, q_instance, qn_instance, twist_defect, twist_morphism, universal_axb,
    universal_instance, InstanceKind, MorphismVerdict, GEN_A, GEN_AINV, GEN_B,
};
use hopfforge::comodule::{
    check_coaction, check_filtration, classify_to_universal, Classification, CoactionSide,
    CoactionSpec, ComoduleAlgebra,
};
use hopfforge::hopf::{
    char_antipode, char_convolve, check_antipode, check_bialgebra, counit_character,
    hopf_ideal_verify, opposite, transpose_inverse_check, verify_antipode_existence,
    AntipodeExistence, Character, CheckOutcome, HopfPresentation, IdealCheckPart,
    IdealVerification, MultiplicativeMatrix,
};
use hopfforge::ncalg::{
    check_local_confluence, sample::sample_element, ConfluenceStatus, Element, Measure,
    Presentation, RewriteRule, Word,
};
use hopfforge::scalar::{FieldDescriptor, Scalar};
use hopfforge::tensor::TensorElement;

const MAX_DEGREE: usize = 6;
const SAMPLES: usize = 100;
const SEED: u64 = 42;
const FUEL: u64 = 1_000_000;

fn ratfunc() -> FieldDescriptor {
    FieldDescriptor::RationalFunctions
}

fn gf5() -> FieldDescriptor {
    FieldDescriptor::prime(5).unwrap()
}

fn assert_pass(outcome: CheckOutcome, what: &str) {
    match outcome {
        CheckOutcome::Pass => {}
        CheckOutcome::Fail { witness } => panic!("{what} failed: {witness}"),
    }
}

fn standard_hopf(field: FieldDescriptor) -> HopfPresentation {
    universal_instance(field).unwrap().hopf
}

#[test]
fn c01_bialgebra_and_antipode_laws_hold_over_three_fields() {
    for field in [FieldDescriptor::Rationals, gf5(), ratfunc()] {
        let h = standard_hopf(field);
        assert_pass(
            check_bialgebra(&h, MAX_DEGREE, SAMPLES, SEED, FUEL).unwrap(),
            &format!("bialgebra laws over {field}"),
        );
        assert_pass(
            check_antipode(&h, MAX_DEGREE, SAMPLES, SEED, FUEL).unwrap(),
            &format!("antipode axiom over {field}"),
        );
    }
    println!("PASS c01 bialgebra and antipode laws over rational, gf:5, ratfunc");
}

#[test]
fn c02_antipode_existence_criterion_constructs_and_rejects() {
    let inst = universal_instance(ratfunc()).unwrap();
    let pres = &inst.presentation;
    let a = Element::generator(pres, GEN_A).unwrap();
    let ainv = Element::generator(pres, GEN_AINV).unwrap();
    let b = Element::generator(pres, GEN_B).unwrap();
    let extras = [("ainv", a.clone())];

    // The affine matrix and its inverse establish the antipode.
    let result = verify_antipode_existence(
        &inst.hopf,
        &inst.matrix,
        &inst.matrix_inverse,
        &extras,
        MAX_DEGREE,
        SAMPLES,
        SEED,
        FUEL,
    )
    .unwrap();
    let constructed = match result {
        AntipodeExistence::Established(h) => h,
        AntipodeExistence::Failed { stage, witness } => {
            panic!("construction failed at stage {stage}: {witness}")
        }
    };
    // The constructed antipode agrees with the catalog antipode on every
    // generator.
    let declared = inst.hopf.antipode_images().unwrap();
    let built = constructed.antipode_images().unwrap();
    for g in 0..pres.generators().len() {
        let diff = declared[g]
            .sub(&built[g])
            .unwrap()
            .normal_form(FUEL)
            .unwrap();
        assert!(diff.is_zero(), "antipode differs on {}", pres.gen_name(g));
    }

    // Perturbing one inverse entry breaks the two-sided-inverse stage with
    // an exact witness.
    let zero = Element::zero(pres);
    let one = Element::one(pres);
    let perturbed = MultiplicativeMatrix::new(vec![
        vec![ainv.clone(), zero],
        vec![b.mul(&ainv).unwrap(), one],
    ])
    .unwrap();
    let result = verify_antipode_existence(
        &inst.hopf,
        &inst.matrix,
        &perturbed,
        &extras,
        MAX_DEGREE,
        SAMPLES,
        SEED,
        FUEL,
    )
    .unwrap();
    match result {
        AntipodeExistence::Failed { stage: 2, witness } => {
            assert!(
                witness.contains("2*b*ainv"),
                "unexpected witness: {witness}"
            );
        }
        other => panic!("expected a stage-2 failure, got {other:?}"),
    }
    println!("PASS c02 antipode-existence criterion constructs the antipode and rejects a perturbed inverse");
}

#[test]
fn c03_twist_generator_identities_hold_symbolically_and_numerically() {
    let f = ratfunc();
    let q = f.q().unwrap();
    for n in 1..=8 {
        assert_pass(
            ideal_identities(f, &q, n, FUEL).unwrap(),
            &format!("identities at symbolic q, n = {n}"),
        );
    }
    for field in [FieldDescriptor::Rationals, gf5()] {
        for (qv, n) in [(2, 3u32), (3, 2)] {
            let q = field.from_i64(qv);
            assert_pass(
                ideal_identities(field, &q, n, FUEL).unwrap(),
                &format!("identities at q = {qv}, n = {n} over {field}"),
            );
        }
    }
    println!("PASS c03 coproduct/counit/antipode identities for the twist generator (n = 1..8 symbolic, numeric spot checks)");
}

fn twist_generator(pres: &Arc<Presentation>, q: &Scalar, n: u32) -> Element {
    // a^n b - q b a^n as a raw (unreduced) combination.
    Element::from_terms(
        pres,
        vec![
            (Word::from_runs([(GEN_A, n), (GEN_B, 1)]), q.field().one()),
            (Word::from_runs([(GEN_B, 1), (GEN_A, n)]), q.neg()),
        ],
    )
    .unwrap()
}

#[test]
fn c04_twist_ideals_are_hopf_ideals_and_a_shifted_one_is_not() {
    // Symbolic q over the rational-function field; numeric twists over the
    // rationals.  Quotient structures re-pass the full bialgebra and
    // antipode checks inside the verifier.
    let symbolic = ratfunc();
    let rationals = FieldDescriptor::Rationals;
    let mut grids: Vec<(FieldDescriptor, Scalar)> = vec![(symbolic, symbolic.q().unwrap())];
    for qv in [2i64, -1] {
        grids.push((rationals, rationals.from_i64(qv)));
    }
    for (field, q) in grids {
        let h = standard_hopf(field);
        for n in [1u32, 2, 3] {
            let g = twist_generator(h.base(), &q, n);
            let quotient = axb_qn(field, q.clone(), n as i64).unwrap().presentation;
            match hopf_ideal_verify(&h, &[g], &quotient, MAX_DEGREE, SAMPLES, SEED, FUEL).unwrap() {
                IdealVerification::Quotient(_) => {}
                IdealVerification::Failed { part, witness } => {
                    panic!("q = {q}, n = {n}: failed {part:?}: {witness}")
                }
            }
        }
    }

    // b - 1 does not generate a Hopf ideal: the counit does not kill it.
    let h = standard_hopf(FieldDescriptor::Rationals);
    let b = Element::generator(h.base(), GEN_B).unwrap();
    let shifted = b.sub(&Element::one(h.base())).unwrap();
    let quotient = laurent_quotient(FieldDescriptor::Rationals).unwrap();
    match hopf_ideal_verify(&h, &[shifted], &quotient, MAX_DEGREE, SAMPLES, SEED, FUEL).unwrap() {
        IdealVerification::Failed {
            part: IdealCheckPart::Counit,
            witness,
        } => {
            assert!(witness.contains("eps(b - 1) = -1"), "witness: {witness}");
        }
        other => panic!("expected a counit failure, got {other:?}"),
    }
    println!("PASS c04 twist ideals are Hopf ideals (grid of q and n); the shifted generator fails the counit condition");
}

#[test]
fn c05_quotient_lattice_morphisms_embed_and_the_reverse_is_obstructed() {
    let f = ratfunc();
    let q = f.q().unwrap();
    for n in [1i64, 2] {
        for m in [-2i64, -1, 2, 3] {
            let source_q = q.pow(m).unwrap();
            match twist_morphism(f, source_q, m * n, q.clone(), n, FUEL).unwrap() {
                MorphismVerdict::Embeds { .. } => {}
                MorphismVerdict::Obstructed { witness } => {
                    panic!("n = {n}, m = {m}: obstructed by {witness}")
                }
            }
        }
    }

    // The period-one relation does not hold in the period-two quotient; the
    // obstruction witness is the nonzero reduced defect.
    let target = axb_qn(f, q.clone(), 2).unwrap().presentation;
    let expected = twist_defect(&target, &q, 1, FUEL).unwrap();
    assert!(!expected.is_zero());
    match twist_morphism(f, q.clone(), 1, q.clone(), 2, FUEL).unwrap() {
        MorphismVerdict::Obstructed { witness } => {
            assert_eq!(witness, expected.to_string());
        }
        MorphismVerdict::Embeds { .. } => panic!("expected an obstruction"),
    }
    println!("PASS c05 lattice morphisms embed for n in {{1,2}}, m in {{-2,-1,2,3}}; the wrong direction is obstructed");
}

#[test]
fn c06_coactions_hold_on_both_sides_and_respect_the_filtration() {
    let inst = universal_instance(ratfunc()).unwrap();
    assert_pass(
        check_coaction(&inst.coaction, MAX_DEGREE, SAMPLES, SEED, FUEL).unwrap(),
        "right coaction laws",
    );
    assert_pass(
        check_filtration(&inst.coaction, 10, SAMPLES, SEED, FUEL).unwrap(),
        "filtration bound",
    );

    // The mirrored coaction lives over the doubly-opposite structure.
    let op = opposite(&inst.hopf, true, true).unwrap();
    let line = ComoduleAlgebra::polynomial_line(ratfunc(), "x").unwrap();
    let a = Element::generator(op.base(), GEN_A).unwrap();
    let b = Element::generator(op.base(), GEN_B).unwrap();
    let x = Element::generator(line.presentation(), 0).unwrap();
    let image = TensorElement::from_elements(&[a, x])
        .unwrap()
        .add(&TensorElement::from_elements(&[b, Element::one(line.presentation())]).unwrap())
        .unwrap();
    let left = CoactionSpec::new(line, op, CoactionSide::Left, vec![image]).unwrap();
    assert_pass(
        check_coaction(&left, MAX_DEGREE, SAMPLES, SEED, FUEL).unwrap(),
        "left coaction laws",
    );
    println!("PASS c06 right coaction, filtration bound (cap 10), and the mirrored left coaction");
}

#[test]
fn c07_every_instance_coaction_classifies_through_the_universal_one() {
    let f = ratfunc();
    let q = f.q().unwrap();
    let instances = vec![
        ("universal", universal_instance(f).unwrap()),
        ("single-twist", q_instance(f, q.clone()).unwrap()),
        ("period-two", qn_instance(f, q, 2).unwrap()),
        ("laurent", laurent_instance(f).unwrap()),
    ];
    for (label, inst) in instances {
        let (scaling, scaling_inverse, translation) = match classify_to_universal(
            &inst.coaction,
            None,
            MAX_DEGREE,
            50,
            SEED,
            FUEL,
        )
        .unwrap()
        {
            Classification::Factors {
                scaling,
                scaling_inverse,
                translation,
            } => (scaling, scaling_inverse, translation),
            Classification::Failed { stage, witness } => {
                panic!("{label}: stage {stage}: {witness}")
            }
        };
        // The antipode sends the scaling part to its inverse and the
        // translation part to -translation * inverse.
        let h = &inst.hopf;
        let s_scaling = h.antipode(&scaling).unwrap();
        assert_eq!(
            s_scaling,
            scaling_inverse.normal_form(FUEL).unwrap(),
            "{label}"
        );
        let s_translation = h.antipode(&translation).unwrap();
        let expected = translation
            .neg()
            .mul(&scaling_inverse)
            .unwrap()
            .normal_form(FUEL)
            .unwrap();
        assert_eq!(s_translation, expected, "{label}");
    }
    println!("PASS c07 coactions of all four catalog instances classify through the universal structure (50 random polynomials each)");
}

#[test]
fn c08_transposition_facts_and_the_antipode_square() {
    let f = ratfunc();
    let q = f.q().unwrap();

    // In the single-twist quotient the transpose of the matrix is NOT
    // inverted by the entrywise antipode: the (1,2) defect is (1 - q) b.
    let inst = q_instance(f, q.clone()).unwrap();
    let rep = transpose_inverse_check(&inst.hopf, &inst.matrix, FUEL).unwrap();
    assert!(rep.antipode_transposes);
    let (i, j, defect) = rep.left_defect.expect("twisted instance has a defect");
    assert_eq!((i, j), (0, 1));
    let b = Element::generator(&inst.presentation, GEN_B).unwrap();
    let one_minus_q = f.one().sub(&q).unwrap();
    let expected = b.scale(&one_minus_q).unwrap().normal_form(FUEL).unwrap();
    assert!(!expected.is_zero());
    assert_eq!(defect.normal_form(FUEL).unwrap(), expected);

    // At q = 1 the defect vanishes: transpose and inverse commute.
    let trivial = q_instance(f, f.one()).unwrap();
    let rep = transpose_inverse_check(&trivial.hopf, &trivial.matrix, FUEL).unwrap();
    assert!(rep.left_defect.is_none() && rep.right_defect.is_none());

    // The antipode square is conjugation by the grouplike: a b a^-1 in the
    // universal algebra, and the scalar q on b in the single-twist quotient.
    let universal = universal_instance(f).unwrap();
    let b_u = Element::generator(&universal.presentation, GEN_B).unwrap();
    let s2 = universal.hopf.antipode_square(&b_u).unwrap();
    let a = Element::generator(&universal.presentation, GEN_A).unwrap();
    let ainv = Element::generator(&universal.presentation, GEN_AINV).unwrap();
    let conj = a.mul(&b_u).unwrap().mul(&ainv).unwrap();
    assert_eq!(s2, conj);

    let b_q = Element::generator(&inst.presentation, GEN_B).unwrap();
    let s2 = inst.hopf.antipode_square(&b_q).unwrap();
    assert_eq!(s2, b_q.scale(&q).unwrap());
    println!(
        "PASS c08 transpose-inverse defect (1 - q) b, identity at q = 1, and the antipode square"
    );
}

#[test]
fn c09_degenerate_parameters_collapse_to_the_commutative_laurent_algebra() {
    let f = FieldDescriptor::Rationals;
    let cases = vec![
        ("q = 2, n = 0", axb_qn(f, f.from_i64(2), 0).unwrap()),
        ("q = 0", axb_q(f, f.zero()).unwrap()),
    ];
    for (label, inst) in cases {
        assert!(
            matches!(inst.kind, InstanceKind::LaurentQuotient),
            "{label} should collapse"
        );
        let h = hopfforge::axb::standard_structure(&inst.presentation).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for i in 0..SAMPLES {
            let x = sample_element(&inst.presentation, MAX_DEGREE, &mut rng).unwrap();
            let y = sample_element(&inst.presentation, MAX_DEGREE, &mut rng).unwrap();
            // Commutative: xy = yx.
            assert_eq!(
                x.mul(&y).unwrap(),
                y.mul(&x).unwrap(),
                "{label}: pair {i} does not commute"
            );
            // Cocommutative: flipping the coproduct changes nothing.
            let d = h.delta(&x).unwrap();
            assert_eq!(
                d,
                d.flip().unwrap(),
                "{label}: sample {i} not cocommutative"
            );
        }
    }
    println!("PASS c09 degenerate parameters give the commutative, cocommutative Laurent quotient (100 random pairs each)");
}

#[test]
fn c10_rewriting_agrees_with_the_crossed_product_model() {
    let symbolic = ratfunc();
    let rationals = FieldDescriptor::Rationals;
    let cases: Vec<(FieldDescriptor, Scalar, i64)> = vec![
        (symbolic, symbolic.q().unwrap(), 1),
        (symbolic, symbolic.q().unwrap(), 2),
        (rationals, rationals.from_i64(2), 3),
    ];
    for (field, q, n) in cases {
        let inst = axb_qn(field, q.clone(), n).unwrap();
        let pres = &inst.presentation;
        let model = CrossedModel::new(n as u32, q).unwrap();
        let roles = axb_generator_roles();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut disagreements = 0;
        for _ in 0..200 {
            let x = sample_element(pres, MAX_DEGREE, &mut rng).unwrap();
            let y = sample_element(pres, MAX_DEGREE, &mut rng).unwrap();
            let reduced = x.mul(&y).unwrap();
            let free = x.mul_free(&y).unwrap();
            if !model.elements_equal(pres, roles, &reduced, &free).unwrap() {
                disagreements += 1;
            }
        }
        assert_eq!(disagreements, 0, "period {n}");
    }
    println!("PASS c10 engine products match the crossed-product model (200 products per instance, zero disagreements)");
}

#[test]
fn c11_rewriting_systems_carry_confluence_certificates() {
    let f = ratfunc();
    let q = f.q().unwrap();
    let mut systems = vec![("universal", universal_axb(f).unwrap())];
    systems.push(("single-twist", axb_q(f, q.clone()).unwrap().presentation));
    for n in [2i64, 3, 4] {
        systems.push(("period-n", axb_qn(f, q.clone(), n).unwrap().presentation));
    }
    for (label, pres) in &systems {
        let report = check_local_confluence(pres, FUEL).unwrap();
        assert!(
            matches!(report.status, ConfluenceStatus::LocallyConfluent { .. }),
            "{label}: {:?}",
            report.status
        );
        let measure = pres.measure();
        assert_ne!(measure, Measure::None, "{label} must declare a measure");
        for rule in pres.rules() {
            assert!(
                measure.validates_rule(rule),
                "{label}: rule {} fails the measure",
                rule.lhs.format(&pres.generator_names())
            );
        }
    }

    // A deliberately broken pair of rules is reported with its critical pair.
    let broken = Presentation::new(
        FieldDescriptor::Rationals,
        &["a", "b"],
        Vec::new(),
        vec![
            RewriteRule {
                lhs: Word::from_letters([0, 1]),
                rhs: vec![(Word::gen(1), FieldDescriptor::Rationals.one())],
            },
            RewriteRule {
                lhs: Word::from_letters([1, 0]),
                rhs: vec![(Word::gen(0), FieldDescriptor::Rationals.one())],
            },
        ],
        Measure::Length,
        FUEL,
    )
    .unwrap();
    let report = check_local_confluence(&broken, FUEL).unwrap();
    match report.status {
        ConfluenceStatus::NotLocallyConfluent {
            overlap,
            left_normal_form,
            right_normal_form,
        } => {
            assert_eq!(overlap, "a*b*a");
            let mut nfs = [left_normal_form, right_normal_form];
            nfs.sort();
            assert_eq!(nfs, ["a".to_string(), "a^2".to_string()]);
        }
        other => panic!("expected non-confluence, got {other:?}"),
    }
    println!("PASS c11 confluence certificates for all twist systems; the broken system is rejected with its critical pair");
}

fn affine_character(h: &HopfPresentation, a: &Scalar, b: &Scalar) -> Character {
    let values = vec![a.clone(), a.inv().unwrap(), b.clone()];
    Character::new(h.base(), values).unwrap()
}

fn random_unit(field: FieldDescriptor, rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let v = field.from_i64(rng.gen_range(-6i64..=6));
        if !v.is_zero() {
            return v;
        }
    }
}

#[test]
fn c12_characters_compose_like_the_affine_group() {
    for field in [FieldDescriptor::Rationals, gf5()] {
        let h = standard_hopf(field);
        let eps = counit_character(&h).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..SAMPLES {
            let a1 = random_unit(field, &mut rng);
            let b1 = field.from_i64(rng.gen_range(-6i64..=6));
            let a2 = random_unit(field, &mut rng);
            let b2 = field.from_i64(rng.gen_range(-6i64..=6));
            let chi1 = affine_character(&h, &a1, &b1);
            let chi2 = affine_character(&h, &a2, &b2);
            // (a1, b1) * (a2, b2) = (a1 a2, b1 a2 + b2).
            let a12 = a1.mul(&a2).unwrap();
            let b12 = b1.mul(&a2).unwrap().add(&b2).unwrap();
            assert_eq!(
                char_convolve(&h, &chi1, &chi2).unwrap(),
                affine_character(&h, &a12, &b12)
            );
            // The counit is the convolution identity.
            assert_eq!(char_convolve(&h, &chi1, &eps).unwrap(), chi1);
            assert_eq!(char_convolve(&h, &eps, &chi1).unwrap(), chi1);
            // chi after S is the convolution inverse.
            let inv = char_antipode(&h, &chi1).unwrap();
            assert_eq!(char_convolve(&h, &chi1, &inv).unwrap(), eps);
            assert_eq!(char_convolve(&h, &inv, &chi1).unwrap(), eps);
        }
    }
    println!("PASS c12 character convolution realizes the affine composition law over rational and gf:5 (100 pairs each)");
}

#[test]
fn c13_cli_full_run_is_green_and_byte_stable() {
    let exe = env!("CARGO_BIN_EXE_hopfforge");
    let doc = concat!(env!("CARGO_MANIFEST_DIR"), "/../../axb.hopf");

    // The document is in canonical form: it reparses and reprints to the
    // same bytes.
    let text = std::fs::read_to_string(doc).unwrap();
    let parsed = hopfforge::dsl::parse_document(&text).unwrap();
    assert_eq!(hopfforge::dsl::print_document(&parsed), text);

    let start = Instant::now();
    let run = |_: usize| {
        Command::new(exe)
            .args(["check", doc, "--suite", "all", "--report", "json"])
            .output()
            .unwrap()
    };
    let first = run(1);
    let second = run(2);
    assert!(
        start.elapsed().as_secs() < 180,
        "full suite took {:?}",
        start.elapsed()
    );
    assert_eq!(
        first.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&first.stderr)
    );
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "reports are not byte-stable");

    let report: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report["version"], 1);
    assert_eq!(report["seed"], 42);
    let cases = report["cases"].as_array().unwrap();
    assert!(!cases.is_empty());
    for case in cases {
        assert_eq!(case["status"], "pass", "case {case}");
        assert_eq!(case["duration_ms"], 0);
    }
    println!(
        "PASS c13 CLI full run exits 0 with byte-stable JSON ({} cases)",
        cases.len()
    );
}
