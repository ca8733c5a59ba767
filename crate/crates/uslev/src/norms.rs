//! Minkowski functionals and order-unit norms.
//!
//! The gauge of a set `S` containing the origin is
//! `p_S(y) = inf { lambda > 0 | y in lambda * S }`, computed here by
//! bisection on the membership predicate. For a closed convex cone `C` with
//! the direction `-k` interior to it, the gauge of `C + k` coincides with
//! `max(phi[C,k](y), 0)` — the two routes cross-check each other in the
//! test suites.
//!
//! When `C` is additionally pointed and `k` lies in its interior, the gauge
//! of the order interval `(C - k) ∩ (k - C)` is a norm. On the translated
//! cone `a + C` that norm of `y - a` equals `phi[a-C,k](y)`, so it is
//! computed here by two closed-form evaluations rather than a
//! two-sided gauge bisection; the gauge-based route stays available as an
//! independent oracle via [`order_interval`].

use crate::defaults::{MAX_DOUBLINGS, STRICT_MARGIN};
use crate::error::{Error, Result};
use crate::extvalues::ExtScalar;
use crate::phi::PhiProblem;
use crate::sampling::{Rng, Sampler};
use crate::sets::{ConeFlags, HalfspacePolyhedron, SetExpr, TriState};
use crate::vector::Vector;

/// An order-unit pair: a pointed convex cone representation `C` and a unit
/// `k` certified interior to it by margin.
#[derive(Debug, Clone)]
pub struct OrderUnitSpec {
    pub cone: SetExpr,
    pub unit: Vector,
    pub tol: f64,
    warnings: Vec<String>,
}

impl OrderUnitSpec {
    /// Validates the pair. Pointedness of a polyhedral cone is probed, not
    /// proved: a refuted flag is an error, an unknown one only a warning.
    pub fn new(cone: SetExpr, unit: Vector, tol: f64) -> Result<OrderUnitSpec> {
        let dim = cone.validate()?;
        if unit.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: unit.dim(),
            });
        }
        if !cone.contains_core(&unit, STRICT_MARGIN)? {
            return Err(Error::Refusal(
                "k ∈ core C not certified (unit must be interior by margin)".into(),
            ));
        }
        // Deterministic probe set; flag computation never claims more than
        // the probes can refute.
        let mut rng = crate::sampling::seeded(0xC0FE);
        let probes = Sampler::box_draw(2.0).draw(&cone, 64, tol, &mut rng)?;
        let flags = ConeFlags::compute(&cone, tol, &probes)?;
        let mut warnings = Vec::new();
        match flags.is_cone {
            TriState::True => {}
            TriState::False => {
                return Err(Error::InvalidInput(
                    "order-unit spec needs a cone representation".into(),
                ))
            }
            TriState::Unknown => warnings.push("cone-hood of C not decidable; assumed".into()),
        }
        match flags.pointed {
            TriState::True => {}
            TriState::False => {
                return Err(Error::Refusal(format!(
                    "C pointed not certified: lineality witness {}",
                    flags
                        .pointedness_witness
                        .map(|w| w.to_string())
                        .unwrap_or_default()
                )))
            }
            TriState::Unknown => {
                warnings.push("pointedness of C not refuted by probes; assumed".into())
            }
        }
        Ok(OrderUnitSpec {
            cone,
            unit,
            tol,
            warnings,
        })
    }

    /// Constructor for callers that have already audited the cone flags and
    /// only need the interior check on the unit.
    pub(crate) fn new_preaudited(
        cone: SetExpr,
        unit: Vector,
        tol: f64,
        warnings: Vec<String>,
    ) -> Result<OrderUnitSpec> {
        if !cone.contains_core(&unit, STRICT_MARGIN)? {
            return Err(Error::Refusal(
                "k ∈ core C not certified (unit must be interior by margin)".into(),
            ));
        }
        Ok(OrderUnitSpec {
            cone,
            unit,
            tol,
            warnings,
        })
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

/// Gauge of `set` at `y` by bisection over the scaling factor.
///
/// Requires `0 in set`. Returns `Real(0)` when membership persists down to
/// the floor (the infimum may be unattained) and `nu` when no scaling up to
/// the cap admits `y`.
pub fn minkowski_eval(set: &SetExpr, y: &Vector, tol: f64) -> Result<ExtScalar> {
    let dim = set.validate()?;
    if y.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: y.dim(),
        });
    }
    if !set.contains(&Vector::zeros(dim), tol)? {
        return Err(Error::Refusal(
            "gauge undefined here: 0 is not a member of the set".into(),
        ));
    }
    if y.norm_inf() == 0.0 {
        return Ok(ExtScalar::Real(0.0));
    }
    // Membership of y/lambda with the tolerance shrunk by lambda, so the
    // slack stays on the scale of y itself. Otherwise any ray would look
    // like a member once y/lambda drifts within tol of a boundary through
    // the origin, and the empty-gauge case could never be reported.
    let member =
        |lambda: f64| set.contains(&y.scale(1.0 / lambda), tol / lambda.max(1.0));

    let mut hi = 1.0;
    let mut doublings = 0;
    while !member(hi)? {
        if doublings >= MAX_DOUBLINGS {
            return Ok(ExtScalar::Nu);
        }
        hi *= 2.0;
        doublings += 1;
    }
    let mut lo = hi;
    while member(lo * 0.5)? {
        lo *= 0.5;
        if lo <= 1e-12 {
            return Ok(ExtScalar::Real(0.0));
        }
    }
    let (mut a, mut b) = (0.5 * lo, lo);
    loop {
        let mid = 0.5 * (a + b);
        if b - a <= tol || mid <= a || mid >= b {
            break;
        }
        if member(mid)? {
            b = mid;
        } else {
            a = mid;
        }
    }
    Ok(ExtScalar::Real(0.5 * (a + b)))
}

/// The order-unit norm `||y||_{C,k}`, computed as
/// `max(phi[-C,k](y), phi[-C,k](-y))`.
pub fn order_unit_norm(spec: &OrderUnitSpec, y: &Vector) -> Result<f64> {
    let problem = PhiProblem::new(
        SetExpr::negate(spec.cone.clone()),
        spec.unit.clone(),
        spec.tol,
    )?;
    let plus = problem.evaluate(y)?;
    let minus = problem.evaluate(&y.neg())?;
    match (plus, minus) {
        (ExtScalar::Real(p), ExtScalar::Real(m)) => Ok(p.max(m)),
        _ => Err(Error::Refusal(
            "order-unit norm undefined: scalarization value is not finite here".into(),
        )),
    }
}

/// The order interval `(C - k) ∩ (k - C)` of a polyhedral cone, as one
/// polyhedron. Its gauge is the independent route to the order-unit norm.
pub fn order_interval(cone: &HalfspacePolyhedron, k: &Vector) -> Result<HalfspacePolyhedron> {
    let mut normals = Vec::with_capacity(2 * cone.normals.len());
    let mut offsets = Vec::with_capacity(2 * cone.normals.len());
    for (a, _) in cone.rows() {
        let shift = -a.dot(k);
        normals.push(a.clone());
        offsets.push(shift);
        normals.push(a.neg());
        offsets.push(shift);
    }
    HalfspacePolyhedron::new(normals, offsets)
}

/// Outcome of a sampled coincidence audit between the order-unit norm of
/// `y - a` and the shifted-cone scalarization at `y`, over `y in a + C`.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CoincidenceReport {
    pub samples: usize,
    pub max_abs_diff: f64,
    pub pass: bool,
}

pub fn norm_phi_coincidence_check(
    spec: &OrderUnitSpec,
    anchor: &Vector,
    n_samples: usize,
    rng: &mut Rng,
) -> Result<CoincidenceReport> {
    let problem = PhiProblem::new(
        SetExpr::shift(anchor.clone(), SetExpr::negate(spec.cone.clone())),
        spec.unit.clone(),
        spec.tol,
    )?;
    let sampler = Sampler::box_draw(4.0);
    let mut cone_points = sampler.draw(&spec.cone, n_samples, spec.tol, rng)?;
    cone_points.push(Vector::zeros(anchor.dim()));

    let mut max_abs_diff: f64 = 0.0;
    let mut samples = 0;
    for c in &cone_points {
        let y = anchor.add(c);
        let lhs = order_unit_norm(spec, &y.sub(anchor))?;
        let rhs = match problem.evaluate(&y)? {
            ExtScalar::Real(v) => v,
            other => {
                return Err(Error::Refusal(format!(
                    "coincidence audit hit a non-finite value {other} inside a + C"
                )))
            }
        };
        max_abs_diff = max_abs_diff.max((lhs - rhs).abs());
        samples += 1;
    }
    Ok(CoincidenceReport {
        samples,
        max_abs_diff,
        pass: max_abs_diff <= 1e-9,
    })
}
