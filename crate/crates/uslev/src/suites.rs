//! Seeded property suites.
//!
//! Every invariant the library rests on runs here as a sampled audit with
//! reproducible randomness: the scalarization identities (translation,
//! scaling, both shifts), the sublevel-set characterizations, agreement of
//! the closed form with the bisection oracle, monotonicity, the gauge and
//! norm coincidences, the efficiency set algebra, the pointwise
//! characterizations against the brute-force enumerations, and the
//! separation ground truth. `uslev check` drives them from the CLI; the
//! acceptance tests drive them at full sample sizes.
//!
//! A suite never proves a universal statement — it searches for a
//! counterexample and reports the minimal witness when one appears.

use rand::Rng as _;

use crate::defaults::DEFAULT_TOL;
use crate::efficiency::{eff, eff_algebra_check, weff, PointCloud};
use crate::error::Result;
use crate::extvalues::ExtScalar;
use crate::norms::{minkowski_eval, norm_phi_coincidence_check, order_unit_norm, OrderUnitSpec};
use crate::order::{min_via_eff, DominationRelation, PropertyStatus};
use crate::phi::PhiProblem;
use crate::sampling::{random_direction, seeded, uniform_box, uniform_range, Rng, Sampler};
use crate::scalarize::{
    bound_scalarize, characterize_eff, characterize_weff, norm_characterize,
    reference_scalarize, separate, Orientation, SeparationVerdict, VerdictKind,
};
use crate::sets::{OrthantSign, SetExpr};
use crate::vector::{vec2, Vector};

#[derive(Debug, Clone, serde::Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub passed: bool,
    pub samples: usize,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Multiplies the baseline sample counts; 0 runs every suite vacuously.
    pub scale: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 42, scale: 1 }
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "paper-example",
    "oracle-agreement",
    "translation-identities",
    "sublevel-identity",
    "strict-sublevel-identity",
    "convexity-sublinearity",
    "monotonicity",
    "recession-inequality",
    "finiteness",
    "minkowski-relation",
    "norm-axioms",
    "norm-phi-coincidence",
    "relation-catalog",
    "min-eff-equivalence",
    "eff-weff-basics",
    "efficiency-algebra",
    "characterize-equivalence",
    "bound-anchored",
    "norm-scalarization",
    "separation",
    "reference-subset",
];

pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<SuiteOutcome>> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, cfg))
        .collect()
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    if cfg.scale == 0 {
        return Ok(SuiteOutcome {
            name: name.into(),
            passed: true,
            samples: 0,
            detail: "vacuous: sample scale is 0".into(),
            witness: None,
        });
    }
    let mut rng = seeded(cfg.seed ^ stable_hash(name));
    match name {
        "paper-example" => paper_example(),
        "oracle-agreement" => oracle_agreement(&mut rng, 1000 * cfg.scale),
        "translation-identities" => translation_identities(&mut rng, 1000 * cfg.scale),
        "sublevel-identity" => sublevel_identity(&mut rng, 1000 * cfg.scale),
        "strict-sublevel-identity" => strict_sublevel_identity(&mut rng, 1000 * cfg.scale),
        "convexity-sublinearity" => convexity_sublinearity(&mut rng, 400 * cfg.scale),
        "monotonicity" => monotonicity(&mut rng, 1000 * cfg.scale),
        "recession-inequality" => recession_inequality(&mut rng, 400 * cfg.scale),
        "finiteness" => finiteness(&mut rng, 10_000 * cfg.scale),
        "minkowski-relation" => minkowski_relation(&mut rng, 1000 * cfg.scale),
        "norm-axioms" => norm_axioms(&mut rng, 400 * cfg.scale),
        "norm-phi-coincidence" => norm_phi_coincidence(&mut rng, 1000 * cfg.scale),
        "relation-catalog" => relation_catalog(&mut rng),
        "min-eff-equivalence" => min_eff_equivalence(&mut rng, 100 * cfg.scale),
        "eff-weff-basics" => eff_weff_basics(&mut rng, 60 * cfg.scale),
        "efficiency-algebra" => efficiency_algebra(&mut rng, 100 * cfg.scale),
        "characterize-equivalence" => characterize_equivalence(&mut rng, 100 * cfg.scale),
        "bound-anchored" => bound_anchored(&mut rng, 100 * cfg.scale),
        "norm-scalarization" => norm_scalarization(&mut rng, 100 * cfg.scale),
        "separation" => separation_ground_truth(&mut rng, 50 * cfg.scale),
        "reference-subset" => reference_subset(&mut rng, 60 * cfg.scale),
        other => Err(crate::error::Error::InvalidInput(format!(
            "unknown suite \"{other}\" (see `uslev check --list`)"
        ))),
    }
}

fn stable_hash(name: &str) -> u64 {
    // FNV-1a; keeps per-suite streams decoupled under one user seed.
    let mut h: u64 = 0xcbf29ce484222325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn outcome(name: &str, samples: usize, witness: Option<String>, detail: String) -> SuiteOutcome {
    SuiteOutcome {
        name: name.into(),
        passed: witness.is_none(),
        samples,
        detail,
        witness,
    }
}

// ---------------------------------------------------------------------------
// Random instance generators shared with the acceptance tests.

/// A random polyhedron together with a direction certified to lie in the
/// negated recession cone. Lateral rows (direction component exactly zero)
/// appear with positive probability so the `-inf`/`nu` branches get
/// exercised; rows never have a direction component in the numerically
/// treacherous near-zero band.
pub fn recession_instance(rng: &mut Rng, dim: usize, allow_lateral: bool) -> (SetExpr, Vector) {
    let k = random_direction(dim, rng);
    let m = rng.random_range(1..=4);
    let mut normals = Vec::with_capacity(m);
    let mut offsets = Vec::with_capacity(m);
    while normals.len() < m {
        let mut a = random_direction(dim, rng);
        let mut d = a.dot(&k);
        if allow_lateral && rng.random_range(0.0..1.0) < 0.25 {
            // Project the row orthogonal to k; the second pass clears the
            // floating-point residue of the first, which would otherwise
            // masquerade as a genuine direction component at bracket
            // magnitudes near 1e18.
            a = a.add_scaled(-d / k.dot(&k), &k);
            a = a.add_scaled(-a.dot(&k) / k.dot(&k), &k);
            if a.norm2() < 0.2 {
                continue;
            }
        } else {
            if d < 0.0 {
                a = a.neg();
                d = -d;
            }
            if d < 0.05 * (1.0 + a.norm2() * k.norm2()) {
                continue;
            }
        }
        offsets.push(rng.random_range(-3.0..3.0));
        normals.push(a);
    }
    (
        SetExpr::halfspaces(normals, offsets).expect("rows are nonzero by construction"),
        k,
    )
}

/// Like [`recession_instance`] but with every row strictly decreasing along
/// `k`, which puts `k` in the interior of the negated recession cone; with
/// zero offsets the set is a closed convex cone.
pub fn strict_recession_instance(
    rng: &mut Rng,
    dim: usize,
    homogeneous: bool,
) -> (SetExpr, Vector) {
    let k = random_direction(dim, rng);
    let m = rng.random_range(1..=4).max(1);
    let mut normals = Vec::with_capacity(m);
    let mut offsets = Vec::with_capacity(m);
    while normals.len() < m {
        let mut a = random_direction(dim, rng);
        let mut d = a.dot(&k);
        if d < 0.0 {
            a = a.neg();
            d = -d;
        }
        if d < 0.1 * (1.0 + a.norm2() * k.norm2()) {
            continue;
        }
        offsets.push(if homogeneous {
            0.0
        } else {
            rng.random_range(-3.0..3.0)
        });
        normals.push(a);
    }
    (
        SetExpr::halfspaces(normals, offsets).expect("rows are nonzero by construction"),
        k,
    )
}

/// A pointed polyhedral cone whose interior contains every strictly
/// positive vector: rows `-(I + E)` with `E >= 0` small. The all-ones
/// vector is an interior direction.
pub fn pointed_cone(rng: &mut Rng, dim: usize) -> SetExpr {
    let mut normals = Vec::with_capacity(dim);
    for i in 0..dim {
        let coords = (0..dim)
            .map(|j| {
                let e = rng.random_range(0.0..0.4);
                -(if i == j { 1.0 + e } else { e })
            })
            .collect();
        normals.push(Vector::new(coords).unwrap());
    }
    SetExpr::halfspaces(normals, vec![0.0; dim]).unwrap()
}

pub fn random_cloud(rng: &mut Rng, dim: usize, n: usize, lo: f64, hi: f64) -> PointCloud {
    PointCloud::new((0..n.max(1)).map(|_| uniform_range(dim, lo, hi, rng)).collect()).unwrap()
}

/// Rejection-samples a vector of the negated recession cone of a
/// polyhedral instance (strictly interior when `strict`).
fn sample_minus_recession(
    set: &SetExpr,
    rng: &mut Rng,
    strict: bool,
    attempts: usize,
) -> Option<Vector> {
    let poly = set.to_polyhedron().ok()?;
    let dim = poly.dim();
    for _ in 0..attempts {
        let u = uniform_box(dim, 2.0, rng);
        if strict && u.norm2() < 0.2 {
            continue;
        }
        let ok = poly.rows().all(|(a, _)| {
            let v = a.dot(&u);
            if strict {
                v >= 0.02 * a.norm2() * u.norm2()
            } else {
                v >= 0.0
            }
        });
        if ok {
            return Some(u);
        }
    }
    None
}

fn ext_close(a: ExtScalar, b: ExtScalar, tol: f64) -> bool {
    match (a, b) {
        (ExtScalar::Real(x), ExtScalar::Real(y)) => (x - y).abs() <= tol,
        (x, y) => x == y,
    }
}

// ---------------------------------------------------------------------------
// Suites.

fn paper_example() -> Result<SuiteOutcome> {
    let name = "paper-example";
    let lower = SetExpr::orthant(2, OrthantSign::Nonpos);
    let problem = PhiProblem::with_defaults(lower, vec2(1.0, 1.0))?;
    let y1 = vec2(-1.0, -1.0);
    let y2 = vec2(-2.0, 0.0);
    let mut witness = None;
    if problem.eval(&y1)? != ExtScalar::Real(-1.0) {
        witness = Some(format!("value at {y1} is {:?}", problem.eval(&y1)?));
    } else if problem.eval(&y2)? != ExtScalar::Real(0.0) {
        witness = Some(format!("value at {y2} is {:?}", problem.eval(&y2)?));
    } else {
        // The scalar comparison does not reverse into the vector order:
        // y2 - y1 = (-1, 1) is outside the nonnegative orthant.
        let order = DominationRelation::new(
            SetExpr::orthant(2, OrthantSign::Nonneg),
            DEFAULT_TOL,
        )?;
        if order.holds(&y1, &y2)? {
            witness = Some("relation y1 <= y2 unexpectedly holds".into());
        }
    }
    Ok(outcome(
        name,
        3,
        witness,
        "reference values -1 and 0 exact; non-reversal pair refused".into(),
    ))
}

fn oracle_agreement(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "oracle-agreement";
    let mut witness = None;
    let mut max_diff: f64 = 0.0;
    for i in 0..samples {
        let dim = 2 + i % 3;
        let (set, k) = recession_instance(rng, dim, true);
        let problem = PhiProblem::with_defaults(set, k)?;
        let y = uniform_box(dim, 5.0, rng);
        let closed = problem.eval(&y)?;
        let oracle = problem.eval_oracle(&y, 1.0, 60)?;
        match (closed, oracle) {
            (ExtScalar::Real(a), ExtScalar::Real(b)) => {
                max_diff = max_diff.max((a - b).abs());
                if (a - b).abs() > 1e-6 {
                    witness = Some(format!("at {y}: closed {a} vs bisection {b}"));
                    break;
                }
            }
            (a, b) if a == b => {}
            (a, b) => {
                witness = Some(format!("class mismatch at {y}: {a:?} vs {b:?}"));
                break;
            }
        }
    }
    Ok(outcome(
        name,
        samples,
        witness,
        format!("max |closed - bisection| = {max_diff:.3e}"),
    ))
}

fn translation_identities(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "translation-identities";
    let mut witness = None;
    'outer: for i in 0..samples {
        let dim = 2 + i % 3;
        let (set, k) = recession_instance(rng, dim, true);
        let problem = PhiProblem::with_defaults(set.clone(), k.clone())?;
        let y = uniform_box(dim, 5.0, rng);
        let base = problem.eval(&y)?;

        // Translation along k adds exactly t.
        let t = rng.random_range(-10.0..10.0);
        let shifted_val = problem.eval(&y.add_scaled(t, &k))?;
        if !ext_close(shifted_val, base.add(t), 1e-8) {
            witness = Some(format!("translation: {shifted_val:?} vs {base:?}+{t}"));
            break 'outer;
        }

        // Scaling the direction divides the value.
        for lambda in [0.5, 2.0, 7.0] {
            let scaled = PhiProblem::with_defaults(set.clone(), k.scale(lambda))?;
            let lhs = scaled.eval(&y)?;
            let rhs = base.scale(lambda)?;
            if !ext_close(lhs, rhs, 1e-8) {
                witness = Some(format!("scaling lambda={lambda}: {lhs:?} vs {rhs:?}"));
                break 'outer;
            }
        }

        // Shifting the set along k subtracts the shift.
        let c = rng.random_range(-5.0..5.0);
        let direction_shifted = PhiProblem::with_defaults(
            SetExpr::shift(k.scale(c), set.clone()),
            k.clone(),
        )?;
        let lhs = direction_shifted.eval(&y)?;
        if !ext_close(lhs, base.add(-c), 1e-8) {
            witness = Some(format!("direction shift c={c}: {lhs:?} vs {base:?}-{c}"));
            break 'outer;
        }

        // Shifting the set by a point relocates the argument.
        let y0 = uniform_box(dim, 4.0, rng);
        let point_shifted =
            PhiProblem::with_defaults(SetExpr::shift(y0.clone(), set), k)?;
        let lhs = point_shifted.eval(&y.add(&y0))?;
        if !ext_close(lhs, base, 1e-8) {
            witness = Some(format!("point shift: {lhs:?} vs {base:?}"));
            break 'outer;
        }
    }
    Ok(outcome(
        name,
        samples,
        witness,
        "translation, direction scaling, and both shift identities".into(),
    ))
}

fn sublevel_identity(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "sublevel-identity";
    let mut witness = None;
    let mut discrepancies = 0;
    for i in 0..samples {
        let dim = 2 + i % 3;
        let (set, k) = recession_instance(rng, dim, true);
        debug_assert!(set.classify_direction(&k, DEFAULT_TOL)?.in_minus_recession);
        let problem = PhiProblem::with_defaults(set, k)?;
        let y = uniform_box(dim, 5.0, rng);
        let t = rng.random_range(-8.0..8.0);
        let via_value = problem.eval(&y)?.le(t);
        let via_membership = problem.sublevel_contains(&y, t)?;
        if via_value != via_membership {
            discrepancies += 1;
            witness = Some(format!(
                "at {y}, t={t}: value route {via_value}, membership route {via_membership}"
            ));
        }
    }
    Ok(outcome(
        name,
        samples,
        witness,
        format!("{discrepancies} discrepancies"),
    ))
}

fn strict_sublevel_identity(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "strict-sublevel-identity";
    let mut witness = None;
    for i in 0..samples {
        let dim = 2 + i % 3;
        let (set, k) = strict_recession_instance(rng, dim, false);
        let problem = PhiProblem::with_defaults(set.clone(), k.clone())?;
        let y = uniform_box(dim, 5.0, rng);
        let t = rng.random_range(-8.0..8.0);
        let via_value = problem.eval(&y)?.lt(t);
        let via_core = SetExpr::shift(k.scale(t), set)
            .contains_core(&y, crate::defaults::STRICT_MARGIN)?;
        if via_value != via_core {
            witness = Some(format!(
                "at {y}, t={t}: strict value route {via_value}, interior route {via_core}"
            ));
            break;
        }
    }
    Ok(outcome(
        name,
        samples,
        witness,
        "strict sublevel sets coincide with shifted interiors".into(),
    ))
}

fn convexity_sublinearity(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "convexity-sublinearity";
    let mut witness = None;
    'outer: for i in 0..samples {
        let dim = 2 + i % 3;

        // Midpoint inequality on a convex polyhedron.
        let (set, k) = recession_instance(rng, dim, true);
        let problem = PhiProblem::with_defaults(set, k)?;
        let y1 = uniform_box(dim, 5.0, rng);
        let y2 = uniform_box(dim, 5.0, rng);
        if let (ExtScalar::Real(a), ExtScalar::Real(b)) =
            (problem.eval(&y1)?, problem.eval(&y2)?)
        {
            let mid = y1.add(&y2).scale(0.5);
            if let ExtScalar::Real(m) = problem.eval(&mid)? {
                if m > 0.5 * (a + b) + 1e-9 {
                    witness = Some(format!("midpoint of {y1},{y2}: {m} > {}", 0.5 * (a + b)));
                    break 'outer;
                }
            }
        }

        // Positive homogeneity and subadditivity on a cone.
        let (cone, k) = strict_recession_instance(rng, dim, true);
        let problem = PhiProblem::with_defaults(cone, k)?;
        let v1 = problem.eval(&y1)?.as_real().expect("finite on a cone with interior direction");
        let v2 = problem.eval(&y2)?.as_real().expect("finite");
        for lambda in [0.5, 2.0] {
            let scaled = problem.eval(&y1.scale(lambda))?.as_real().unwrap();
            if (scaled - lambda * v1).abs() > 1e-9 * (1.0 + scaled.abs()) {
                witness = Some(format!("homogeneity: phi({lambda}y) = {scaled} vs {}", lambda * v1));
                break 'outer;
            }
        }
        let sum = problem.eval(&y1.add(&y2))?.as_real().unwrap();
        if sum > v1 + v2 + 1e-9 {
            witness = Some(format!("subadditivity: {sum} > {v1} + {v2}"));
            break 'outer;
        }
    }
    Ok(outcome(
        name,
        samples,
        witness,
        "midpoint convexity; homogeneity and subadditivity on cones".into(),
    ))
}

fn monotonicity(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "monotonicity";
    let mut witness = None;
    let mut pairs = 0;
    let mut min_strict_gap = f64::INFINITY;
    while pairs < samples {
        let dim = 2 + pairs % 3;
        let (set, k) = recession_instance(rng, dim, false);
        let problem = PhiProblem::with_defaults(set.clone(), k)?;
        let Some(u) = sample_minus_recession(&set, rng, false, 50) else {
            continue;
        };
        let y1 = uniform_box(dim, 5.0, rng);
        let y2 = y1.add(&u);
        let (v1, v2) = (problem.eval(&y1)?, problem.eval(&y2)?);
        pairs += 1;
        match (v1, v2) {
            (_, ExtScalar::Nu) => {}
            (ExtScalar::Nu, _) => {
                witness = Some(format!("domain broke: {y2} feasible but {y1} is not"));
                break;
            }
            (ExtScalar::NegInf, _) => {}
            (ExtScalar::Real(_), ExtScalar::NegInf) => {
                witness = Some(format!("monotone violation at {y1}: real above -inf"));
                break;
            }
            (ExtScalar::Real(a), ExtScalar::Real(b)) => {
                if a > b + 1e-9 {
                    witness = Some(format!("monotone violation: phi({y1})={a} > phi({y2})={b}"));
                    break;
                }
            }
        }

        // Strict version along interior recession directions.
        if let Some(u) = sample_minus_recession(&set, rng, true, 50) {
            let y2 = y1.add(&u);
            if let (ExtScalar::Real(a), ExtScalar::Real(b)) =
                (problem.eval(&y1)?, problem.eval(&y2)?)
            {
                min_strict_gap = min_strict_gap.min(b - a);
                if a >= b {
                    witness = Some(format!(
                        "strict violation: phi({y1})={a} vs phi({y2})={b} along {u}"
                    ));
                    break;
                }
            }
        }
    }
    Ok(outcome(
        name,
        pairs,
        witness,
        format!("min strict gap {min_strict_gap:.3e}"),
    ))
}

fn recession_inequality(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "recession-inequality";
    let mut witness = None;
    let mut checked = 0;
    let sampler = Sampler::box_draw(5.0);
    while checked < samples {
        let dim = 2 + checked % 3;
        let (set, k) = recession_instance(rng, dim, true);
        let problem = PhiProblem::with_defaults(set.clone(), k.clone())?;
        let recession = set.recession_cone()?;
        let rec_problem = PhiProblem::with_defaults(recession, k.clone())?;
        let Some(a) = sampler.draw(&set, 1, DEFAULT_TOL, rng)?.pop() else {
            continue;
        };
        let Some(u) = sample_minus_recession(&set, rng, false, 50).map(|u| u.neg()) else {
            continue;
        };
        checked += 1;
        let y0 = a.add_scaled(rng.random_range(-3.0..3.0), &k);
        let y1 = u.add_scaled(rng.random_range(-3.0..3.0), &k);
        let lhs = problem.eval(&y0.add(&y1))?;
        let base = problem.eval(&y0)?;
        let rec = rec_problem.eval(&y1)?;
        match (lhs, base, rec) {
            (ExtScalar::NegInf, _, _) => {}
            (ExtScalar::Real(l), ExtScalar::Real(b), ExtScalar::Real(r)) => {
                if l > b + r + 1e-9 {
                    witness = Some(format!("phi(y0+y1)={l} > {b} + {r}"));
                    break;
                }
            }
            (ExtScalar::Real(_), b, r) => {
                witness = Some(format!("finite sum from non-finite parts: {b:?}, {r:?}"));
                break;
            }
            (ExtScalar::Nu, _, _) => {
                witness = Some("sum left the domain".into());
                break;
            }
        }
    }
    Ok(outcome(
        name,
        checked,
        witness,
        "value at a sum bounded by value plus recession value".into(),
    ))
}

fn finiteness(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "finiteness";
    let mut witness = None;
    let per_instance = 500;
    let mut done = 0;
    while done < samples {
        let dim = 2 + (done / per_instance) % 3;
        let (set, k) = strict_recession_instance(rng, dim, false);
        let class = set.classify_direction(&k, DEFAULT_TOL)?;
        if !class.in_minus_core_recession {
            witness = Some("generator failed to certify the interior direction".into());
            break;
        }
        let problem = PhiProblem::with_defaults(set, k)?;
        for _ in 0..per_instance {
            let y = uniform_box(dim, 8.0, rng);
            let v = problem.eval(&y)?;
            done += 1;
            if !v.is_real() {
                witness = Some(format!("non-finite value {v:?} at {y}"));
                break;
            }
        }
        if witness.is_some() {
            break;
        }
    }
    Ok(outcome(
        name,
        done,
        witness,
        "interior recession direction forces finite values everywhere".into(),
    ))
}

fn minkowski_relation(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "minkowski-relation";
    let mut witness = None;
    let mut max_diff: f64 = 0.0;
    for i in 0..samples {
        let dim = 2 + i % 3;
        let (cone, k) = strict_recession_instance(rng, dim, true);
        let problem = PhiProblem::with_defaults(cone.clone(), k.clone())?;
        let shifted = SetExpr::shift(k.clone(), cone);
        let y = uniform_box(dim, 4.0, rng);
        let gauge = match minkowski_eval(&shifted, &y, 1e-10)? {
            ExtScalar::Real(g) => g,
            other => {
                witness = Some(format!("gauge came back {other:?} at {y}"));
                break;
            }
        };
        let phi = problem.eval(&y)?.as_real().expect("finite");
        let rhs = phi.max(0.0);
        max_diff = max_diff.max((gauge - rhs).abs());
        if (gauge - rhs).abs() > 1e-8 {
            witness = Some(format!("at {y}: gauge {gauge} vs max(phi,0) {rhs}"));
            break;
        }
    }
    Ok(outcome(
        name,
        samples,
        witness,
        format!("max |gauge - max(phi,0)| = {max_diff:.3e}"),
    ))
}

fn norm_axioms(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "norm-axioms";
    let mut witness = None;
    'outer: for i in 0..samples {
        let dim = 2 + i % 3;
        let cone = if i % 2 == 0 {
            SetExpr::orthant(dim, OrthantSign::Nonneg)
        } else {
            pointed_cone(rng, dim)
        };
        let k = Vector::new(vec![1.0; dim]).unwrap();
        let spec = OrderUnitSpec::new(cone, k, DEFAULT_TOL)?;
        let y = uniform_box(dim, 4.0, rng);
        let z = uniform_box(dim, 4.0, rng);
        let ny = order_unit_norm(&spec, &y)?;
        let nz = order_unit_norm(&spec, &z)?;
        for lambda in [-2.0, -0.5, 0.5, 3.0] {
            let scaled = order_unit_norm(&spec, &y.scale(lambda))?;
            if (scaled - lambda.abs() * ny).abs() > 1e-9 * (1.0 + scaled.abs()) {
                witness = Some(format!("homogeneity broke at lambda={lambda}, y={y}"));
                break 'outer;
            }
        }
        let nsum = order_unit_norm(&spec, &y.add(&z))?;
        if nsum > ny + nz + 1e-9 {
            witness = Some(format!("triangle broke: {nsum} > {ny} + {nz}"));
            break;
        }
        if order_unit_norm(&spec, &Vector::zeros(dim))? != 0.0 {
            witness = Some("norm of zero is not zero".into());
            break;
        }
        if y.norm_inf() > 0.1 && ny <= 0.0 {
            witness = Some(format!("definiteness broke at {y}"));
            break;
        }
    }
    Ok(outcome(
        name,
        samples,
        witness,
        "homogeneity, triangle inequality, definiteness".into(),
    ))
}

fn norm_phi_coincidence(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "norm-phi-coincidence";
    let mut witness = None;
    let mut max_diff: f64 = 0.0;
    let per_spec = 250;
    let mut done = 0;
    while done < samples && witness.is_none() {
        let dim = 2 + (done / per_spec) % 3;
        let cone = if (done / per_spec) % 2 == 0 {
            SetExpr::orthant(dim, OrthantSign::Nonneg)
        } else {
            pointed_cone(rng, dim)
        };
        let spec = OrderUnitSpec::new(cone, Vector::new(vec![1.0; dim]).unwrap(), DEFAULT_TOL)?;
        let anchor = uniform_box(dim, 3.0, rng);
        let report = norm_phi_coincidence_check(&spec, &anchor, per_spec, rng)?;
        done += report.samples;
        max_diff = max_diff.max(report.max_abs_diff);
        if !report.pass {
            witness = Some(format!(
                "coincidence broke: max diff {} at anchor {anchor}",
                report.max_abs_diff
            ));
        }
    }
    // The coincidence genuinely needs y in a + C: off the cone a strict gap
    // must exist for the orthant.
    if witness.is_none() {
        let spec = OrderUnitSpec::new(
            SetExpr::orthant(2, OrthantSign::Nonneg),
            vec2(1.0, 1.0),
            DEFAULT_TOL,
        )?;
        let off = vec2(-3.0, 1.0);
        let norm = order_unit_norm(&spec, &off)?;
        let phi = PhiProblem::with_defaults(
            SetExpr::negate(SetExpr::orthant(2, OrthantSign::Nonneg)),
            vec2(1.0, 1.0),
        )?
        .eval(&off)?
        .as_real()
        .unwrap();
        if norm <= phi + 1e-9 {
            witness = Some("expected strict gap off the cone did not appear".into());
        }
    }
    Ok(outcome(
        name,
        done,
        witness,
        format!("max |norm - phi| = {max_diff:.3e} on the translated cone"),
    ))
}

fn relation_catalog(rng: &mut Rng) -> Result<SuiteOutcome> {
    let name = "relation-catalog";
    let tol = DEFAULT_TOL;
    let sampler = Sampler::box_draw(3.0);
    let mut witness = None;

    let orthant = DominationRelation::new(SetExpr::orthant(2, OrthantSign::Nonneg), tol)?;
    let report = orthant.properties(&sampler, 80, rng)?;
    if report.reflexive != PropertyStatus::Holds
        || !matches!(report.asymmetric, PropertyStatus::Fails { .. })
        || !matches!(report.antisymmetric, PropertyStatus::NotRefuted { .. })
        || !matches!(report.transitive, PropertyStatus::NotRefuted { .. })
        || !matches!(report.cone_compatible, PropertyStatus::NotRefuted { .. })
    {
        witness = Some(format!("orthant relation report off: {report:?}"));
    }

    if witness.is_none() {
        let strict =
            DominationRelation::strict(SetExpr::orthant(2, OrthantSign::Nonneg), tol)?;
        let report = strict.properties(&sampler, 80, rng)?;
        if !matches!(report.reflexive, PropertyStatus::Fails { .. })
            || !matches!(report.asymmetric, PropertyStatus::NotRefuted { .. })
        {
            witness = Some(format!("strict orthant relation report off: {report:?}"));
        }
    }

    if witness.is_none() {
        let shifted = DominationRelation::new(
            SetExpr::shift(vec2(1.0, 1.0), SetExpr::orthant(2, OrthantSign::Nonneg)),
            tol,
        )?;
        let report = shifted.properties(&sampler, 80, rng)?;
        if !matches!(report.reflexive, PropertyStatus::Fails { .. })
            || !matches!(report.transitive, PropertyStatus::NotRefuted { .. })
        {
            witness = Some(format!("shifted orthant relation report off: {report:?}"));
        }
    }

    if witness.is_none() {
        // A halfplane has lineality: antisymmetry must be refuted.
        let halfplane = DominationRelation::new(
            SetExpr::halfspaces(vec![vec2(-1.0, 0.0)], vec![0.0])?,
            tol,
        )?;
        let report = halfplane.properties(&sampler, 80, rng)?;
        if !matches!(report.antisymmetric, PropertyStatus::Fails { .. }) {
            witness = Some(format!("halfplane lineality not refuted: {report:?}"));
        }
    }

    // Reflexivity must track membership of zero on random cones.
    if witness.is_none() {
        for _ in 0..20 {
            let dim = 2 + (rng.random_range(0..2_u32) as usize);
            let cone = pointed_cone(rng, dim);
            let relation = DominationRelation::new(cone.clone(), tol)?;
            let zero_in = cone.contains(&Vector::zeros(cone.dim()?), tol)?;
            let report = relation.properties(&sampler, 20, rng)?;
            let reflexive = report.reflexive == PropertyStatus::Holds;
            if reflexive != zero_in {
                witness = Some("reflexivity disagreed with membership of zero".into());
                break;
            }
        }
    }

    Ok(outcome(
        name,
        5,
        witness,
        "catalog relations show the expected property fingerprint".into(),
    ))
}

fn min_eff_equivalence(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "min-eff-equivalence";
    let mut witness = None;
    for i in 0..samples {
        let dim = 2 + i % 2;
        let set = match i % 3 {
            0 => SetExpr::orthant(dim, OrthantSign::Nonneg),
            1 => pointed_cone(rng, dim),
            _ => SetExpr::shift(
                Vector::new(vec![0.5; dim]).unwrap(),
                SetExpr::orthant(dim, OrthantSign::Nonneg),
            ),
        };
        let n = rng.random_range(2..=40);
        let cloud = random_cloud(rng, dim, n, -5.0, 5.0);
        let relation = DominationRelation::new(set.clone(), DEFAULT_TOL)?;
        let via_relation = relation.min_points(&cloud)?;
        let via_efficiency = min_via_eff(&set, &cloud, DEFAULT_TOL)?;
        if via_relation != via_efficiency {
            witness = Some(format!(
                "instance {i}: relation route {via_relation:?} vs efficiency route {via_efficiency:?}"
            ));
            break;
        }
    }
    Ok(outcome(
        name,
        samples,
        witness,
        "minimal points agree between the relation and efficiency routes".into(),
    ))
}

fn eff_weff_basics(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "eff-weff-basics";
    let mut witness = None;
    'outer: for i in 0..samples {
        let dim = 2 + i % 3;
        let set = if i % 2 == 0 {
            SetExpr::orthant(dim, OrthantSign::Nonneg)
        } else {
            pointed_cone(rng, dim)
        };
        let n = rng.random_range(2..=50);
        let cloud = random_cloud(rng, dim, n, -5.0, 5.0);
        let e = eff(&cloud, &set, DEFAULT_TOL)?;
        let w = weff(&cloud, &set, DEFAULT_TOL)?;
        for idx in &e.indices {
            if !w.indices.contains(idx) {
                witness = Some(format!("efficient index {idx} missing from the weak set"));
                break 'outer;
            }
        }

        // Shrinking the domination set only grows the efficient set.
        if let SetExpr::Halfspaces(poly) = &set {
            let mut normals = poly.normals.clone();
            let mut offsets = poly.offsets.clone();
            let mut extra = random_direction(dim, rng);
            // Keep the smaller cone nonempty-ish by pointing the row away
            // from the all-ones interior direction.
            if extra.iter().sum::<f64>() > 0.0 {
                extra = extra.neg();
            }
            normals.push(extra);
            offsets.push(0.0);
            let smaller = SetExpr::halfspaces(normals, offsets)?;
            let e_small = eff(&cloud, &smaller, DEFAULT_TOL)?;
            for idx in &e.indices {
                if !e_small.indices.contains(idx) {
                    witness = Some(format!(
                        "monotone shrink broke: index {idx} efficient for D but not for D1 ⊆ D"
                    ));
                    break 'outer;
                }
            }
        }
    }

    // The weak set equals the complement of the interior of F + D on a
    // hand-built instance (union of shifted cones).
    if witness.is_none() {
        let cloud = PointCloud::new(vec![
            vec2(0.0, 3.0),
            vec2(1.0, 1.0),
            vec2(3.0, 0.0),
            vec2(2.0, 2.0),
        ])?;
        let orthant = SetExpr::orthant(2, OrthantSign::Nonneg);
        let f_plus_d = SetExpr::union(
            cloud
                .points()
                .iter()
                .map(|p| SetExpr::shift(p.clone(), orthant.clone()))
                .collect(),
        );
        let w = weff(&cloud, &orthant, DEFAULT_TOL)?;
        for (i, p) in cloud.points().iter().enumerate() {
            let interior = f_plus_d.contains_core(p, crate::defaults::STRICT_MARGIN)?;
            let weakly_efficient = w.indices.contains(&i);
            if interior == weakly_efficient {
                witness = Some(format!(
                    "set-level identity broke at point {i}: interior={interior}"
                ));
                break;
            }
        }
    }

    Ok(outcome(
        name,
        samples,
        witness,
        "inclusion, monotone shrink, and the interior complement identity".into(),
    ))
}

fn efficiency_algebra(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "efficiency-algebra";
    let mut witness = None;
    for i in 0..samples {
        let dim = 2 + i % 3;
        let set = if i % 2 == 0 {
            SetExpr::orthant(dim, OrthantSign::Nonneg)
        } else {
            pointed_cone(rng, dim)
        };
        let n = rng.random_range(3..=40);
        let cloud = random_cloud(rng, dim, n, -5.0, 5.0);
        let report = eff_algebra_check(&cloud, &set, &Sampler::box_draw(2.0), 20, DEFAULT_TOL, rng)?;
        if !report.all_passed {
            let failed: Vec<&str> = report
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name.as_str())
                .collect();
            witness = Some(format!("instance {i}: failed checks {failed:?}"));
            break;
        }
    }
    Ok(outcome(
        name,
        samples,
        witness,
        "augmentation, slices, zero handling, interior probes".into(),
    ))
}

fn characterize_equivalence(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "characterize-equivalence";
    let mut witness = None;
    for i in 0..samples {
        let dim = 2 + i % 3;
        let set = if i % 2 == 0 {
            SetExpr::orthant(dim, OrthantSign::Nonneg)
        } else {
            pointed_cone(rng, dim)
        };
        let k = Vector::new(vec![1.0; dim]).unwrap();
        let n = rng.random_range(2..=200);
        let cloud = random_cloud(rng, dim, n, -5.0, 5.0);

        let strict = characterize_eff(&cloud, &set, &k, DEFAULT_TOL)?;
        let brute = eff(&cloud, &set, DEFAULT_TOL)?;
        if strict.result.indices != brute.indices || !strict.indeterminate.is_empty() {
            witness = Some(format!(
                "instance {i}: pointwise {:?} (indeterminate {:?}) vs pairwise {:?}",
                strict.result.indices, strict.indeterminate, brute.indices
            ));
            break;
        }

        let weak = characterize_weff(&cloud, &set, &k, DEFAULT_TOL, rng)?;
        let brute_weak = weff(&cloud, &set, DEFAULT_TOL)?;
        if weak.result.indices != brute_weak.indices {
            witness = Some(format!(
                "instance {i}: weak pointwise {:?} vs pairwise {:?}",
                weak.result.indices, brute_weak.indices
            ));
            break;
        }
    }
    Ok(outcome(
        name,
        samples,
        witness,
        "pointwise characterizations equal the pairwise enumerations".into(),
    ))
}

fn verdict_sets(report: &crate::scalarize::ScalarReport) -> (Vec<usize>, Vec<usize>) {
    let weakly: Vec<usize> = report
        .verdicts
        .iter()
        .filter(|v| {
            matches!(
                v.kind,
                VerdictKind::WeaklyEfficient | VerdictKind::Efficient
            )
        })
        .map(|v| v.index)
        .collect();
    let strictly: Vec<usize> = report
        .verdicts
        .iter()
        .filter(|v| v.kind == VerdictKind::Efficient)
        .map(|v| v.index)
        .collect();
    (weakly, strictly)
}

fn bound_anchored(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "bound-anchored";
    let mut witness = None;
    for i in 0..samples {
        let dim = 2 + i % 3;
        let set = if i % 2 == 0 {
            SetExpr::orthant(dim, OrthantSign::Nonneg)
        } else {
            pointed_cone(rng, dim)
        };
        let n = rng.random_range(2..=200);
        let cloud = random_cloud(rng, dim, n, -5.0, 5.0);

        // Componentwise maximum plus one dominates the whole cloud.
        let mut upper = vec![f64::NEG_INFINITY; dim];
        for p in cloud.points() {
            for j in 0..dim {
                upper[j] = upper[j].max(p[j]);
            }
        }
        let anchor = Vector::new(upper.iter().map(|v| v + 1.0).collect()).unwrap();

        let report = bound_scalarize(&cloud, &set, &anchor, Orientation::Below, DEFAULT_TOL)?;
        let (weakly, strictly) = verdict_sets(&report);
        let brute_weak = weff(&cloud, &set, DEFAULT_TOL)?.indices;
        let brute = eff(&cloud, &set, DEFAULT_TOL)?.indices;
        if weakly != brute_weak {
            witness = Some(format!(
                "instance {i}: verdicts {weakly:?} vs weak set {brute_weak:?}"
            ));
            break;
        }
        if strictly != brute {
            witness = Some(format!(
                "instance {i}: strict verdicts {strictly:?} vs efficient set {brute:?}"
            ));
            break;
        }
        for v in &report.verdicts {
            if weakly.contains(&v.index) {
                let anchor_value = v.anchor.expect("anchored verdicts carry their value");
                if (anchor_value + 1.0).abs() > 1e-9 {
                    witness = Some(format!(
                        "instance {i}: anchor at index {} is {anchor_value}, expected -1",
                        v.index
                    ));
                    break;
                }
            }
        }
        if witness.is_some() {
            break;
        }
    }
    Ok(outcome(
        name,
        samples,
        witness,
        "verdicts equal the weak set; anchors land on -1; strict verdicts equal the efficient set"
            .into(),
    ))
}

fn norm_scalarization(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "norm-scalarization";
    let mut witness = None;
    for i in 0..samples {
        let dim = 2 + i % 3;
        let set = if i % 2 == 0 {
            SetExpr::orthant(dim, OrthantSign::Nonneg)
        } else {
            pointed_cone(rng, dim)
        };
        let n = rng.random_range(2..=120);
        let cloud = random_cloud(rng, dim, n, 1.0, 6.0);

        let mut lower = vec![f64::INFINITY; dim];
        for p in cloud.points() {
            for j in 0..dim {
                lower[j] = lower[j].min(p[j]);
            }
        }
        let anchor = Vector::new(lower.iter().map(|v| v - 1.0).collect()).unwrap();

        let report = norm_characterize(&cloud, &set, &anchor, DEFAULT_TOL)?;
        let (weakly, strictly) = verdict_sets(&report);
        let brute_weak = weff(&cloud, &set, DEFAULT_TOL)?.indices;
        let brute = eff(&cloud, &set, DEFAULT_TOL)?.indices;
        if weakly != brute_weak || strictly != brute {
            witness = Some(format!(
                "instance {i}: verdicts {weakly:?}/{strictly:?} vs {brute_weak:?}/{brute:?}"
            ));
            break;
        }
        for v in &report.verdicts {
            if weakly.contains(&v.index) {
                let anchor_value = v.anchor.expect("anchored verdicts carry their value");
                if (anchor_value - 1.0).abs() > 1e-9 {
                    witness = Some(format!(
                        "instance {i}: norm anchor at index {} is {anchor_value}, expected 1",
                        v.index
                    ));
                    break;
                }
            }
        }
        if witness.is_some() {
            break;
        }
    }
    Ok(outcome(
        name,
        samples,
        witness,
        "norm verdicts equal the weak set; anchors land on 1".into(),
    ))
}


fn separation_ground_truth(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "separation";
    let mut witness = None;
    for i in 0..samples {
        let dim = 2 + i % 3;
        let corner = uniform_box(dim, 3.0, rng);
        let set = SetExpr::shift(corner.clone(), SetExpr::orthant(dim, OrthantSign::Nonpos));
        let k = Vector::new((0..dim).map(|_| rng.random_range(0.3..1.3)).collect()).unwrap();
        let overlap = i % 2 == 0;
        let n = rng.random_range(1..=12);
        let mut points = Vec::with_capacity(n);
        for _ in 0..n {
            if overlap {
                // Every coordinate at or below the corner: inside the set.
                let offset = uniform_range(dim, 0.0, 2.0, rng);
                points.push(corner.sub(&offset));
            } else {
                // Some coordinate clearly above the corner: outside.
                let mut p = corner.add(&uniform_box(dim, 1.5, rng));
                let j = rng.random_range(0..dim);
                let mut coords: Vec<f64> = p.as_slice().to_vec();
                coords[j] = corner[j] + rng.random_range(0.5..2.0);
                p = Vector::new(coords).unwrap();
                points.push(p);
            }
        }
        let cloud = PointCloud::new(points)?;
        let report = separate(&set, &k, &cloud, DEFAULT_TOL, rng)?;
        let intersecting = matches!(report.verdict, SeparationVerdict::Intersecting);
        if intersecting != overlap {
            witness = Some(format!(
                "instance {i}: constructed overlap={overlap} but verdict {:?}",
                report.verdict
            ));
            break;
        }
    }
    Ok(outcome(
        name,
        samples,
        witness,
        "verdicts match the constructed ground truth".into(),
    ))
}

fn reference_subset(rng: &mut Rng, samples: usize) -> Result<SuiteOutcome> {
    let name = "reference-subset";
    let mut witness = None;
    for i in 0..samples {
        let dim = 2 + i % 3;
        let set = if i % 2 == 0 {
            SetExpr::orthant(dim, OrthantSign::Nonneg)
        } else {
            pointed_cone(rng, dim)
        };
        let n = rng.random_range(2..=60);
        let cloud = random_cloud(rng, dim, n, -5.0, 5.0);
        let anchor = uniform_range(dim, 6.0, 8.0, rng);
        let k = Vector::new(vec![1.0; dim]).unwrap();
        let report = reference_scalarize(&cloud, &set, &anchor, &k, &set, DEFAULT_TOL, rng)?;
        let brute_weak = weff(&cloud, &set, DEFAULT_TOL)?.indices;
        for idx in &report.argmin {
            if !brute_weak.contains(idx) {
                witness = Some(format!(
                    "instance {i}: minimizer {idx} is not weakly efficient"
                ));
                break;
            }
        }
        if witness.is_some() {
            break;
        }
        if report.argmin.len() == 1 {
            let brute = eff(&cloud, &set, DEFAULT_TOL)?.indices;
            if !brute.contains(&report.argmin[0]) {
                witness = Some(format!(
                    "instance {i}: unique minimizer {} is not efficient",
                    report.argmin[0]
                ));
                break;
            }
        }
    }
    Ok(outcome(
        name,
        samples,
        witness,
        "minimizers of the reference scalarization are weakly efficient".into(),
    ))
}
