//! The translation-invariant scalarizing functional with uniform sublevel
//! sets,
//!
//! ```text
//! phi[A,k](y) = inf { t in R | y in A + t*k },
//! ```
//!
//! evaluated two independent ways: a closed form on halfspace compositions
//! and a bracketed bisection against the membership oracle. The sublevel
//! set at height `t` is the translate `A + t*k`, which is what makes the
//! functional useful: `phi(y) <= t` coincides with `y in A + t*k` exactly
//! when `k` lies in the negated recession cone of a directionally closed
//! `A`.
//!
//! The closed form: for each halfspace `<a_i, y> <= b_i` put
//! `d_i = <a_i, k>` and `c_i = <a_i, y> - b_i`. Then `y in A + t*k` is the
//! linear system `t * d_i >= c_i`, whose solution set is an interval
//! `[L, U]` with `L` the largest `c_i / d_i` over rows with `d_i > 0` and
//! `U` the smallest over rows with `d_i < 0`; rows with `d_i = 0` are
//! feasibility constraints `c_i <= 0`. The value is `L` (possibly `-inf`),
//! or `nu` when the interval is empty. `+inf` never occurs. Note the value
//! is `L` even when upper bounds exist (`k` outside the negated recession
//! cone); the sublevel identity then legitimately fails, and callers that
//! need it must gate on [`SetExpr::classify_direction`].

use crate::defaults::{BRACKET_INIT, DEFAULT_TOL, DIR_ZERO_REL, MAX_DOUBLINGS};
use crate::error::{Error, Result};
use crate::extvalues::ExtScalar;
use crate::sets::{HalfspacePolyhedron, SetExpr};
use crate::vector::Vector;

/// A set `A`, a nonzero direction `k`, and the working tolerance.
#[derive(Debug, Clone)]
pub struct PhiProblem {
    pub set: SetExpr,
    pub direction: Vector,
    pub tol: f64,
    // Halfspace form, flattened once at construction when the expression
    // supports it.
    polyhedra: Option<Vec<HalfspacePolyhedron>>,
}

impl PhiProblem {
    pub fn new(set: SetExpr, direction: Vector, tol: f64) -> Result<Self> {
        let dim = set.validate()?;
        if direction.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: direction.dim(),
            });
        }
        if direction.norm_inf() == 0.0 {
            return Err(Error::InvalidInput("direction k must be nonzero".into()));
        }
        let polyhedra = set.to_polyhedra().ok();
        Ok(PhiProblem {
            set,
            direction,
            tol,
            polyhedra,
        })
    }

    pub fn with_defaults(set: SetExpr, direction: Vector) -> Result<Self> {
        PhiProblem::new(set, direction, DEFAULT_TOL)
    }

    /// Closed-form evaluation on halfspace compositions.
    ///
    /// A union evaluates to the pointwise minimum over its parts, ignoring
    /// `nu` parts (`-inf` short-circuits; all parts `nu` gives `nu`).
    /// Oracle leaves are rejected; use [`Self::eval_oracle`].
    pub fn eval(&self, y: &Vector) -> Result<ExtScalar> {
        if y.dim() != self.direction.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.direction.dim(),
                got: y.dim(),
            });
        }
        let polys = self.polyhedra.as_ref().ok_or_else(|| {
            Error::Unsupported(
                "no halfspace form for this expression; use the bisection path".into(),
            )
        })?;
        let mut best: Option<f64> = None;
        for poly in polys {
            match eval_polyhedron(poly, &self.direction, y, self.tol) {
                ExtScalar::Nu => continue,
                ExtScalar::NegInf => return Ok(ExtScalar::NegInf),
                ExtScalar::Real(v) => {
                    best = Some(match best {
                        Some(b) => b.min(v),
                        None => v,
                    })
                }
            }
        }
        Ok(best.map_or(ExtScalar::Nu, ExtScalar::Real))
    }

    /// Bisection against the membership oracle.
    ///
    /// Valid only when the sublevel family `{t | y in A + t*k}` is an
    /// up-set, which holds when `k` lies in the negated recession cone of a
    /// closed `A`; the direction must be certified structurally or declared
    /// by the oracle set, otherwise the evaluation is refused.
    ///
    /// The bracket `[-T, T]` doubles from `bracket_init` until membership
    /// flips; `nu` if membership never becomes true up to the cap, `-inf`
    /// if it is still true at the lowest probe.
    pub fn eval_oracle(
        &self,
        y: &Vector,
        bracket_init: f64,
        max_doublings: u32,
    ) -> Result<ExtScalar> {
        if y.dim() != self.direction.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.direction.dim(),
                got: y.dim(),
            });
        }
        if !self.set.is_declared_closed() {
            return Err(Error::Refusal(
                "oracle invalid: A is not declared algebraically closed".into(),
            ));
        }
        if !direction_certified(&self.set, &self.direction, self.tol)? {
            return Err(Error::Refusal(
                "oracle invalid: sublevel sets not monotone along k (k ∈ -0⁺A not certified)"
                    .into(),
            ));
        }

        // Membership fuzz shifts the detected boundary by up to its own
        // tolerance, so the oracle queries with a fraction of the working
        // tolerance and bisects below it; the combined error stays within
        // `tol` of the true infimum on desk-scale data.
        let member = |t: f64| -> Result<bool> {
            self.set
                .contains(&y.add_scaled(-t, &self.direction), self.tol / 16.0)
        };
        // Beyond this magnitude a membership flip would correspond to a
        // direction component below the zero threshold of the closed form,
        // and the f64 dot products behind `contains` are pure rounding
        // noise anyway; the class out there is lateral (`nu` / `-inf`),
        // not an astronomically large real.
        let trust_cap = (1.0 + y.norm2() / self.direction.norm2()) / DIR_ZERO_REL;
        let t0 = bracket_init.abs().max(1e-6);
        let mut hi = t0;
        let mut doublings = 0;
        while !member(hi)? {
            if doublings >= max_doublings || hi >= trust_cap {
                return Ok(ExtScalar::Nu);
            }
            hi *= 2.0;
            doublings += 1;
        }
        let mut lo = -t0;
        doublings = 0;
        while member(lo)? {
            if doublings >= max_doublings || -lo >= trust_cap {
                return Ok(ExtScalar::NegInf);
            }
            lo *= 2.0;
            doublings += 1;
        }
        // Invariant: member(hi) true, member(lo) false, lo < hi.
        loop {
            let mid = 0.5 * (lo + hi);
            if hi - lo <= 0.25 * self.tol || mid <= lo || mid >= hi {
                break;
            }
            if member(mid)? {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(ExtScalar::Real(0.5 * (lo + hi)))
    }

    /// Closed form when the representation supports it, bisection with
    /// default bracketing otherwise.
    pub fn evaluate(&self, y: &Vector) -> Result<ExtScalar> {
        match self.eval(y) {
            Ok(v) => Ok(v),
            Err(Error::Unsupported(_)) => self.eval_oracle(y, BRACKET_INIT, MAX_DOUBLINGS),
            Err(e) => Err(e),
        }
    }

    /// Pure membership `y in A + t*k` — not a comparison against an
    /// evaluated value.
    pub fn sublevel_contains(&self, y: &Vector, t: f64) -> Result<bool> {
        self.set
            .contains(&y.add_scaled(-t, &self.direction), self.tol)
    }

    /// Whether `y` lies in the effective domain `A + R*k`, i.e. the value
    /// is not `nu`.
    pub fn dom_contains(&self, y: &Vector) -> Result<bool> {
        Ok(!self.evaluate(y)?.is_nu())
    }
}

fn eval_polyhedron(poly: &HalfspacePolyhedron, k: &Vector, y: &Vector, tol: f64) -> ExtScalar {
    let k_norm = k.norm2();
    let mut lower = f64::NEG_INFINITY;
    let mut upper = f64::INFINITY;
    for (a, b) in poly.rows() {
        let d = a.dot(k);
        let c = a.dot(y) - b;
        if d.abs() <= DIR_ZERO_REL * (1.0 + a.norm2() * k_norm) {
            // Lateral row: t does not move it, so it must already hold.
            if c > tol * (1.0 + b.abs()) {
                return ExtScalar::Nu;
            }
        } else if d > 0.0 {
            lower = lower.max(c / d);
        } else {
            upper = upper.min(c / d);
        }
    }
    if lower.is_finite() && upper.is_finite() {
        let slack = tol * (1.0 + lower.abs().min(upper.abs()));
        if lower > upper + slack {
            return ExtScalar::Nu;
        }
    }
    if lower == f64::NEG_INFINITY {
        ExtScalar::NegInf
    } else {
        ExtScalar::Real(lower)
    }
}

/// Certifies `k ∈ -0⁺A` from the representation: structurally through the
/// recession cone where computable, through the declared directions for
/// oracle sets, and for a union by certifying every part.
pub fn direction_certified(set: &SetExpr, k: &Vector, tol: f64) -> Result<bool> {
    match set {
        SetExpr::Oracle(o) => Ok(o.declares_direction(k)),
        SetExpr::Union { parts } => {
            for p in parts {
                if !direction_certified(p, k, tol)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        SetExpr::Shift { base, .. } => direction_certified(base, k, tol),
        // 0⁺(-A) = -0⁺A, so the direction flips through a negation.
        SetExpr::Negate { base } => direction_certified(base, &k.neg(), tol),
        _ => Ok(set.classify_direction(k, tol)?.in_minus_recession),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::{hyperbola_oracle, OrthantSign};
    use crate::vector::vec2;

    fn nonpos2() -> SetExpr {
        SetExpr::orthant(2, OrthantSign::Nonpos)
    }

    fn problem(set: SetExpr, k: Vector) -> PhiProblem {
        PhiProblem::with_defaults(set, k).unwrap()
    }

    #[test]
    fn closed_form_reference_values() {
        let p = problem(nonpos2(), vec2(1.0, 1.0));
        assert_eq!(p.eval(&vec2(-1.0, -1.0)).unwrap(), ExtScalar::Real(-1.0));
        assert_eq!(p.eval(&vec2(-2.0, 0.0)).unwrap(), ExtScalar::Real(0.0));

        let lower_halfplane = SetExpr::halfspaces(vec![vec2(0.0, 1.0)], vec![0.0]).unwrap();
        let p = problem(lower_halfplane, vec2(1.0, 0.0));
        // k runs parallel to the boundary: the whole line y + R*k sits in A.
        assert_eq!(p.eval(&vec2(5.0, -1.0)).unwrap(), ExtScalar::NegInf);
        assert_eq!(p.eval(&vec2(5.0, 1.0)).unwrap(), ExtScalar::Nu);

        let diag = SetExpr::halfspaces(vec![vec2(1.0, 1.0)], vec![0.0]).unwrap();
        let p = problem(diag, vec2(1.0, 0.0));
        assert_eq!(p.eval(&vec2(2.0, 2.0)).unwrap(), ExtScalar::Real(4.0));
    }

    #[test]
    fn oracle_path_matches_analytic_values() {
        let p = problem(hyperbola_oracle(), vec2(-1.0, 0.0));
        let v = p.eval_oracle(&vec2(0.0, 2.0), 1.0, 60).unwrap();
        let x = v.as_real().expect("finite");
        assert!((x - 0.5).abs() <= 1e-9, "got {x}");
        let v = p.eval_oracle(&vec2(1.0, 1.0), 1.0, 60).unwrap();
        assert!(v.as_real().unwrap().abs() <= 1e-9);

        let p = problem(nonpos2(), vec2(1.0, 1.0));
        let v = p.eval_oracle(&vec2(-1.0, -1.0), 1.0, 60).unwrap();
        assert!((v.as_real().unwrap() + 1.0).abs() <= 1e-9);
    }

    #[test]
    fn oracle_refuses_uncertified_direction() {
        // (0, 1) points out of the hyperbola's declared directions.
        let p = problem(hyperbola_oracle(), vec2(0.0, 1.0));
        let err = p.eval_oracle(&vec2(1.0, 1.0), 1.0, 60).unwrap_err();
        assert!(matches!(err, Error::Refusal(_)));
    }

    #[test]
    fn oracle_variant_classes() {
        let lower_halfplane = SetExpr::halfspaces(vec![vec2(0.0, 1.0)], vec![0.0]).unwrap();
        let p = problem(lower_halfplane, vec2(1.0, 0.0));
        assert_eq!(
            p.eval_oracle(&vec2(5.0, -1.0), 1.0, 60).unwrap(),
            ExtScalar::NegInf
        );
        assert_eq!(
            p.eval_oracle(&vec2(5.0, 1.0), 1.0, 60).unwrap(),
            ExtScalar::Nu
        );
    }

    #[test]
    fn sublevel_examples() {
        let p = problem(nonpos2(), vec2(1.0, 1.0));
        assert!(p.sublevel_contains(&vec2(-1.0, -1.0), -1.0).unwrap());
        assert!(!p.sublevel_contains(&vec2(-1.0, -1.0), -1.5).unwrap());

        let lower_halfplane = SetExpr::halfspaces(vec![vec2(0.0, 1.0)], vec![0.0]).unwrap();
        let p = problem(lower_halfplane, vec2(1.0, 0.0));
        for t in [-100.0, 0.0, 100.0] {
            assert!(!p.sublevel_contains(&vec2(5.0, 1.0), t).unwrap());
        }
    }

    #[test]
    fn dom_examples() {
        let p = problem(nonpos2(), vec2(1.0, 1.0));
        assert!(p.dom_contains(&vec2(7.0, -3.0)).unwrap());
        assert_eq!(p.eval(&vec2(7.0, -3.0)).unwrap(), ExtScalar::Real(7.0));

        let lower_halfplane = SetExpr::halfspaces(vec![vec2(0.0, 1.0)], vec![0.0]).unwrap();
        let p = problem(lower_halfplane, vec2(1.0, 0.0));
        assert!(!p.dom_contains(&vec2(0.0, 1.0)).unwrap());

        let p = problem(hyperbola_oracle(), vec2(-1.0, 0.0));
        assert!(p.dom_contains(&vec2(-5.0, 2.0)).unwrap());
        let v = p.evaluate(&vec2(-5.0, 2.0)).unwrap().as_real().unwrap();
        assert!((v - 5.5).abs() <= 1e-9);
    }

    #[test]
    fn union_takes_the_minimum() {
        // Two shifted lower orthants; the lower shift wins.
        let u = SetExpr::union(vec![
            SetExpr::shift(vec2(0.0, 0.0), nonpos2()),
            SetExpr::shift(vec2(3.0, 3.0), nonpos2()),
        ]);
        let p = problem(u, vec2(1.0, 1.0));
        assert_eq!(p.eval(&vec2(0.0, 0.0)).unwrap(), ExtScalar::Real(-3.0));

        // A nu part is ignored; an all-nu union is nu. With k = (1, 0) the
        // first halfplane never admits (2, 5) while the second does.
        let lateral = SetExpr::halfspaces(vec![vec2(0.0, 1.0)], vec![0.0]).unwrap();
        let left = SetExpr::halfspaces(vec![vec2(1.0, 0.0)], vec![0.0]).unwrap();
        let u = SetExpr::union(vec![lateral.clone(), left]);
        let p = problem(u, vec2(1.0, 0.0));
        assert_eq!(p.eval(&vec2(2.0, 5.0)).unwrap(), ExtScalar::Real(2.0));
        let p = problem(lateral, vec2(1.0, 0.0));
        assert_eq!(p.eval(&vec2(2.0, 5.0)).unwrap(), ExtScalar::Nu);
    }

    #[test]
    fn translation_identity_is_tight_on_closed_form() {
        let p = problem(
            SetExpr::halfspaces(vec![vec2(1.0, 2.0), vec2(0.5, -0.25)], vec![1.0, 2.0]).unwrap(),
            vec2(1.0, 1.0),
        );
        let y = vec2(0.3, -0.7);
        for t in [-4.0, -0.5, 0.25, 2.0] {
            let lhs = p.eval(&y.add_scaled(t, &p.direction)).unwrap();
            let rhs = p.eval(&y).unwrap().add(t);
            match (lhs, rhs) {
                (ExtScalar::Real(a), ExtScalar::Real(b)) => {
                    assert!((a - b).abs() <= 1e-10, "{a} vs {b}")
                }
                (a, b) => assert_eq!(a, b),
            }
        }
    }
}
