//! Acceptance gate: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//! Every tolerance is pinned here or in the suite it drives; the sampled
//! criteria run the seeded property suites at full size.

use uslev::defaults::DEFAULT_TOL;
use uslev::efficiency::{eff, weff};
use uslev::extvalues::ExtScalar;
use uslev::norms::{norm_phi_coincidence_check, OrderUnitSpec};
use uslev::order::{min_via_eff, DominationRelation};
use uslev::phi::PhiProblem;
use uslev::sampling::seeded;
use uslev::sets::{OrthantSign, SetExpr};
use uslev::suites::{pointed_cone, random_cloud, run_suite, SuiteConfig, SuiteOutcome};
use uslev::vector::{vec2, Vector};

const SEED: u64 = 42;

fn report(number: u32, description: &str, passed: bool, detail: &str) {
    println!(
        "ACCEPTANCE {number:2} {} {description}: {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {number} failed: {detail}");
}

fn run(name: &str) -> SuiteOutcome {
    run_suite(name, &SuiteConfig { seed: SEED, scale: 1 }).expect("suite runs")
}

fn suite_criterion(number: u32, description: &str, name: &str) {
    let outcome = run(name);
    let detail = match &outcome.witness {
        Some(w) => format!("{} [witness: {w}]", outcome.detail),
        None => format!("{} ({} samples)", outcome.detail, outcome.samples),
    };
    report(number, description, outcome.passed, &detail);
}

#[test]
fn acceptance_01_reference_example() {
    let lower = SetExpr::orthant(2, OrthantSign::Nonpos);
    let problem = PhiProblem::with_defaults(lower, vec2(1.0, 1.0)).unwrap();
    let v1 = problem.eval(&vec2(-1.0, -1.0)).unwrap();
    let v2 = problem.eval(&vec2(-2.0, 0.0)).unwrap();
    let order =
        DominationRelation::new(SetExpr::orthant(2, OrthantSign::Nonneg), DEFAULT_TOL).unwrap();
    // Scalar values order the two points, yet the vector order refuses the
    // pair: the difference (-1, 1) is not componentwise nonnegative.
    let reversal = order.holds(&vec2(-1.0, -1.0), &vec2(-2.0, 0.0)).unwrap();
    let passed = v1 == ExtScalar::Real(-1.0) && v2 == ExtScalar::Real(0.0) && !reversal;
    report(
        1,
        "reference values -1 / 0 exact and the non-reversal pair",
        passed,
        &format!("phi = {v1:?}, {v2:?}; relation holds = {reversal}"),
    );
}

#[test]
fn acceptance_02_closed_form_vs_bisection() {
    suite_criterion(
        2,
        "closed form vs bisection on 1000 certified instances (class exact, reals within 1e-6)",
        "oracle-agreement",
    );
}

#[test]
fn acceptance_03_translation_scaling_shift_identities() {
    suite_criterion(
        3,
        "translation / scaling / both shift identities on 1000 samples within 1e-8",
        "translation-identities",
    );
}

#[test]
fn acceptance_04_sublevel_identity() {
    suite_criterion(
        4,
        "value<=t coincides with membership of A+tk on 1000 samples, zero discrepancies",
        "sublevel-identity",
    );
}

#[test]
fn acceptance_05_characterization_equivalence() {
    suite_criterion(
        5,
        "pointwise characterizations equal the pairwise sets on 100 clouds (dims 2-4, <=200 points)",
        "characterize-equivalence",
    );
}

#[test]
fn acceptance_06_bound_anchored_scalarization() {
    suite_criterion(
        6,
        "bound-anchored verdicts equal the weak set with anchors -1 +- 1e-9 (a = max + 1)",
        "bound-anchored",
    );
}

#[test]
fn acceptance_07_norm_scalarization_and_coincidence() {
    let verdicts = run("norm-scalarization");
    let mut passed = verdicts.passed;
    let mut detail = verdicts.detail.clone();
    if let Some(w) = &verdicts.witness {
        detail = format!("{detail} [witness: {w}]");
    }

    // Order-unit-norm / scalarization coincidence at 1e-9 over 1000 samples
    // drawn from the translated cone.
    if passed {
        let mut rng = seeded(SEED);
        let spec = OrderUnitSpec::new(
            SetExpr::orthant(3, OrthantSign::Nonneg),
            Vector::new(vec![1.0; 3]).unwrap(),
            DEFAULT_TOL,
        )
        .unwrap();
        let anchor = Vector::new(vec![-1.0, 0.5, 2.0]).unwrap();
        let coincidence = norm_phi_coincidence_check(&spec, &anchor, 1000, &mut rng).unwrap();
        passed = coincidence.pass;
        detail = format!(
            "{detail}; coincidence max |norm - phi| = {:.3e} over {} samples",
            coincidence.max_abs_diff, coincidence.samples
        );
    }
    report(
        7,
        "norm verdicts equal the weak set with anchor 1; norm/value coincidence <= 1e-9",
        passed,
        &detail,
    );
}

#[test]
fn acceptance_08_minkowski_relation() {
    suite_criterion(
        8,
        "gauge of C+k equals max(phi,0) within 1e-8 on 1000 samples",
        "minkowski-relation",
    );
}

#[test]
fn acceptance_09_efficiency_algebra() {
    suite_criterion(
        9,
        "augmentation invariance and slice identities on 100 pointed-cone instances, zero witnesses",
        "efficiency-algebra",
    );
}

#[test]
fn acceptance_10_monotonicity() {
    suite_criterion(
        10,
        "recession monotonicity (weak and strict) on 1000 sampled ordered pairs, no violations",
        "monotonicity",
    );
}

#[test]
fn acceptance_11_separation() {
    suite_criterion(
        11,
        "separation verdicts match construction on 50 disjoint/overlapping instances",
        "separation",
    );
}

#[test]
fn acceptance_12_min_eff_equivalence() {
    // 100 random (cloud, D) pairs with antisymmetric polyhedral D.
    let mut rng = seeded(SEED ^ 0x12);
    let mut witness = None;
    for i in 0..100 {
        let dim = 2 + i % 3;
        let set = if i % 2 == 0 {
            SetExpr::orthant(dim, OrthantSign::Nonneg)
        } else {
            pointed_cone(&mut rng, dim)
        };
        let n = 2 + (i * 7) % 60;
        let cloud = random_cloud(&mut rng, dim, n, -5.0, 5.0);
        let relation = DominationRelation::new(set.clone(), DEFAULT_TOL).unwrap();
        let via_relation = relation.min_points(&cloud).unwrap();
        let via_efficiency = min_via_eff(&set, &cloud, DEFAULT_TOL).unwrap();
        if via_relation != via_efficiency {
            witness = Some(format!(
                "instance {i}: {via_relation:?} vs {via_efficiency:?}"
            ));
            break;
        }
        // For antisymmetric D the minimal set also equals Eff(F, D) itself.
        let plain_eff = eff(&cloud, &set, DEFAULT_TOL).unwrap().indices;
        if via_relation != plain_eff {
            witness = Some(format!(
                "instance {i}: minimal {via_relation:?} vs efficient {plain_eff:?}"
            ));
            break;
        }
    }
    let passed = witness.is_none();
    report(
        12,
        "minimal points equal the efficient points on 100 antisymmetric instances",
        passed,
        witness.as_deref().unwrap_or("exact index-set match on all instances"),
    );
}

// Cross-cutting sanity: the efficiency inclusion the characterizations rely
// on holds on the acceptance clouds themselves.
#[test]
fn acceptance_eff_in_weff_inclusion() {
    let mut rng = seeded(SEED ^ 0x99);
    for i in 0..50 {
        let dim = 2 + i % 3;
        let set = pointed_cone(&mut rng, dim);
        let cloud = random_cloud(&mut rng, dim, 2 + i % 50, -5.0, 5.0);
        let e = eff(&cloud, &set, DEFAULT_TOL).unwrap().indices;
        let w = weff(&cloud, &set, DEFAULT_TOL).unwrap().indices;
        for idx in &e {
            assert!(w.contains(idx), "efficient {idx} missing from weak set");
        }
    }
    println!("ACCEPTANCE  + PASS efficiency subset of weak efficiency on 50 instances");
}
