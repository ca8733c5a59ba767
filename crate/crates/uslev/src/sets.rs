//! Set representations over `R^n`.
//!
//! A [`SetExpr`] composes halfspace polyhedra, coordinate orthants, shifts,
//! negations, unions and a small catalog of nonpolyhedral oracle sets.
//! Everything downstream (the value functional, domination orders,
//! efficiency enumeration) talks to sets only through membership
//! ([`SetExpr::contains`]), algebraic-interior membership
//! ([`SetExpr::contains_core`]), and recession-cone structure.
//!
//! Membership against a halfspace `<a, y> <= b` uses the blended slack
//! `tol * (1 + |b|)`; interior membership replaces `+` by `-` with the
//! strict margin. Non-full-dimensional polyhedra therefore have an empty
//! margin-interior: no attempt is made to detect implicit equalities, and
//! reports flag the interior as possibly empty instead.

use serde::{Deserialize, Serialize};

use crate::defaults::STRICT_MARGIN;
use crate::error::{Error, Result};
use crate::vector::Vector;

/// A finite intersection of halfspaces `<a_i, y> <= b_i`.
///
/// Always algebraically closed by construction. Rows with an all-zero
/// normal are rejected.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HalfspacePolyhedron {
    pub normals: Vec<Vector>,
    pub offsets: Vec<f64>,
}

impl HalfspacePolyhedron {
    pub fn new(normals: Vec<Vector>, offsets: Vec<f64>) -> Result<Self> {
        let poly = HalfspacePolyhedron { normals, offsets };
        poly.validate()?;
        Ok(poly)
    }

    pub fn validate(&self) -> Result<()> {
        if self.normals.is_empty() {
            return Err(Error::InvalidSet("halfspaces: need at least one row".into()));
        }
        if self.normals.len() != self.offsets.len() {
            return Err(Error::InvalidSet(format!(
                "halfspaces: {} normals but {} offsets",
                self.normals.len(),
                self.offsets.len()
            )));
        }
        let dim = self.normals[0].dim();
        for (i, row) in self.normals.iter().enumerate() {
            if row.dim() != dim {
                return Err(Error::InvalidSet(format!(
                    "halfspaces: row {i} has dimension {} != {dim}",
                    row.dim()
                )));
            }
            if row.norm_inf() == 0.0 {
                return Err(Error::InvalidSet(format!(
                    "halfspaces: row {i} has an all-zero normal"
                )));
            }
        }
        if let Some(bad) = self.offsets.iter().find(|b| !b.is_finite()) {
            return Err(Error::InvalidSet(format!(
                "halfspaces: offsets must be finite, got {bad}"
            )));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.normals[0].dim()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&Vector, f64)> {
        self.normals.iter().zip(self.offsets.iter().copied())
    }

    pub fn contains(&self, y: &Vector, tol: f64) -> bool {
        self.rows()
            .all(|(a, b)| a.dot(y) <= b + tol * (1.0 + b.abs()))
    }

    pub fn contains_core(&self, y: &Vector, margin: f64) -> bool {
        self.rows()
            .all(|(a, b)| a.dot(y) <= b - margin * (1.0 + b.abs()))
    }

    /// Recession cone: the same normals with all offsets zero.
    pub fn recession(&self) -> HalfspacePolyhedron {
        HalfspacePolyhedron {
            normals: self.normals.clone(),
            offsets: vec![0.0; self.offsets.len()],
        }
    }

    /// The polyhedron translated by `offset`.
    pub fn shifted(&self, offset: &Vector) -> HalfspacePolyhedron {
        HalfspacePolyhedron {
            normals: self.normals.clone(),
            offsets: self
                .rows()
                .map(|(a, b)| b + a.dot(offset))
                .collect(),
        }
    }

    /// The reflection `-P`.
    pub fn negated(&self) -> HalfspacePolyhedron {
        HalfspacePolyhedron {
            normals: self.normals.iter().map(Vector::neg).collect(),
            offsets: self.offsets.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrthantSign {
    Nonneg,
    Nonpos,
}

/// Catalog entry for a set only reachable through its membership predicate.
///
/// Oracle sets must declare whether they are algebraically closed and which
/// directions are asserted to lie in the negated recession cone; bisection
/// along a direction is only valid when that direction is declared.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleSet {
    pub name: String,
    pub closed: bool,
    #[serde(default)]
    pub recession: Vec<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    /// Ball radius for `norm-ball`; ignored by `hyperbola`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
}

impl OracleSet {
    fn checked_dim(&self) -> Result<usize> {
        let from_recession = self.recession.first().map(Vector::dim);
        let dim = match self.name.as_str() {
            "hyperbola" => {
                let d = self.dim.or(from_recession).unwrap_or(2);
                if d != 2 {
                    return Err(Error::InvalidSet(
                        "oracle \"hyperbola\" is two-dimensional".into(),
                    ));
                }
                2
            }
            "norm-ball" => self.dim.or(from_recession).ok_or_else(|| {
                Error::InvalidSet("oracle \"norm-ball\" needs a \"dim\" field".into())
            })?,
            other => {
                return Err(Error::InvalidSet(format!(
                    "unknown oracle set \"{other}\" (catalog: hyperbola, norm-ball)"
                )))
            }
        };
        for r in &self.recession {
            if r.dim() != dim {
                return Err(Error::InvalidSet(format!(
                    "oracle recession direction {r} has dimension {} != {dim}",
                    r.dim()
                )));
            }
        }
        Ok(dim)
    }

    // Catalog predicates are exact: the boundary of an oracle set is sharp
    // so that bisection converges to the analytic value.
    fn contains(&self, y: &Vector) -> bool {
        match self.name.as_str() {
            "hyperbola" => y[0] > 0.0 && y[0] * y[1] >= 1.0,
            "norm-ball" => y.norm2() <= self.radius.unwrap_or(1.0),
            _ => unreachable!("validated at parse"),
        }
    }

    fn contains_core(&self, y: &Vector, margin: f64) -> bool {
        match self.name.as_str() {
            "hyperbola" => y[0] > 0.0 && y[0] * y[1] > 1.0 + margin,
            "norm-ball" => {
                let r = self.radius.unwrap_or(1.0);
                y.norm2() < r - margin * (1.0 + r)
            }
            _ => unreachable!("validated at parse"),
        }
    }

    /// Whether `k` matches one of the declared recession directions (up to
    /// positive scaling).
    pub fn declares_direction(&self, k: &Vector) -> bool {
        self.recession
            .iter()
            .any(|r| r.is_positive_multiple_of(k, 1e-9))
    }
}

/// Compositional description of a subset of `R^n`.
///
/// The JSON encoding is tagged by `"kind"`:
/// `{"kind":"halfspaces","normals":[[...]],"offsets":[...]}`,
/// `{"kind":"orthant","dim":2,"sign":"nonneg"}`,
/// `{"kind":"shift","offset":[...],"base":{...}}`,
/// `{"kind":"negate","base":{...}}`,
/// `{"kind":"union","parts":[...]}`,
/// `{"kind":"oracle","name":"hyperbola","closed":true,"recession":[[-1,0]]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SetExpr {
    Halfspaces(HalfspacePolyhedron),
    Orthant { dim: usize, sign: OrthantSign },
    Shift { offset: Vector, base: Box<SetExpr> },
    Negate { base: Box<SetExpr> },
    Union { parts: Vec<SetExpr> },
    Oracle(OracleSet),
}

/// Result of checking a direction against a set's recession cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DirectionClass {
    /// `k` lies in the negated recession cone (weak membership).
    pub in_minus_recession: bool,
    /// `k` lies in the algebraic interior of the negated recession cone
    /// (membership by margin).
    pub in_minus_core_recession: bool,
}

impl SetExpr {
    pub fn halfspaces(normals: Vec<Vector>, offsets: Vec<f64>) -> Result<SetExpr> {
        Ok(SetExpr::Halfspaces(HalfspacePolyhedron::new(
            normals, offsets,
        )?))
    }

    pub fn orthant(dim: usize, sign: OrthantSign) -> SetExpr {
        SetExpr::Orthant { dim, sign }
    }

    pub fn shift(offset: Vector, base: SetExpr) -> SetExpr {
        SetExpr::Shift {
            offset,
            base: Box::new(base),
        }
    }

    pub fn negate(base: SetExpr) -> SetExpr {
        SetExpr::Negate {
            base: Box::new(base),
        }
    }

    pub fn union(parts: Vec<SetExpr>) -> SetExpr {
        SetExpr::Union { parts }
    }

    /// Checks structural invariants and returns the common dimension.
    pub fn validate(&self) -> Result<usize> {
        match self {
            SetExpr::Halfspaces(p) => {
                p.validate()?;
                Ok(p.dim())
            }
            SetExpr::Orthant { dim, .. } => {
                if *dim == 0 {
                    Err(Error::InvalidSet("orthant: dim must be >= 1".into()))
                } else {
                    Ok(*dim)
                }
            }
            SetExpr::Shift { offset, base } => {
                let d = base.validate()?;
                if offset.dim() != d {
                    return Err(Error::InvalidSet(format!(
                        "shift: offset has dimension {} but base has {d}",
                        offset.dim()
                    )));
                }
                Ok(d)
            }
            SetExpr::Negate { base } => base.validate(),
            SetExpr::Union { parts } => {
                if parts.is_empty() {
                    return Err(Error::InvalidSet("union: needs at least one part".into()));
                }
                let d = parts[0].validate()?;
                for (i, part) in parts.iter().enumerate().skip(1) {
                    let di = part.validate()?;
                    if di != d {
                        return Err(Error::InvalidSet(format!(
                            "union: part {i} has dimension {di} != {d}"
                        )));
                    }
                }
                Ok(d)
            }
            SetExpr::Oracle(oracle) => oracle.checked_dim(),
        }
    }

    pub fn dim(&self) -> Result<usize> {
        self.validate()
    }

    fn check_dim(&self, y: &Vector) -> Result<()> {
        let d = self.dim()?;
        if y.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: y.dim(),
            });
        }
        Ok(())
    }

    /// Membership `y in S` up to the blended tolerance.
    pub fn contains(&self, y: &Vector, tol: f64) -> Result<bool> {
        self.check_dim(y)?;
        Ok(self.contains_unchecked(y, tol))
    }

    fn contains_unchecked(&self, y: &Vector, tol: f64) -> bool {
        match self {
            SetExpr::Halfspaces(p) => p.contains(y, tol),
            SetExpr::Orthant { sign, .. } => match sign {
                OrthantSign::Nonneg => y.iter().all(|c| *c >= -tol),
                OrthantSign::Nonpos => y.iter().all(|c| *c <= tol),
            },
            SetExpr::Shift { offset, base } => base.contains_unchecked(&y.sub(offset), tol),
            SetExpr::Negate { base } => base.contains_unchecked(&y.neg(), tol),
            SetExpr::Union { parts } => parts.iter().any(|p| p.contains_unchecked(y, tol)),
            SetExpr::Oracle(oracle) => oracle.contains(y),
        }
    }

    /// Algebraic-interior membership by margin.
    ///
    /// The interior of a union is approximated by the union of interiors,
    /// a subset of the true algebraic interior (touching parts are missed).
    pub fn contains_core(&self, y: &Vector, margin: f64) -> Result<bool> {
        self.check_dim(y)?;
        self.contains_core_unchecked(y, margin)
    }

    fn contains_core_unchecked(&self, y: &Vector, margin: f64) -> Result<bool> {
        match self {
            SetExpr::Halfspaces(p) => Ok(p.contains_core(y, margin)),
            SetExpr::Orthant { sign, .. } => Ok(match sign {
                OrthantSign::Nonneg => y.iter().all(|c| *c > margin),
                OrthantSign::Nonpos => y.iter().all(|c| *c < -margin),
            }),
            SetExpr::Shift { offset, base } => {
                base.contains_core_unchecked(&y.sub(offset), margin)
            }
            SetExpr::Negate { base } => base.contains_core_unchecked(&y.neg(), margin),
            SetExpr::Union { parts } => {
                for p in parts {
                    if p.contains_core_unchecked(y, margin)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            SetExpr::Oracle(oracle) => Ok(oracle.contains_core(y, margin)),
        }
    }

    /// Recession cone of the expression.
    ///
    /// Translations do not change the recession cone, a negated set has the
    /// negated recession cone, a polyhedron keeps its normals with all
    /// offsets dropped to zero. Unions and oracle sets are not supported.
    pub fn recession_cone(&self) -> Result<SetExpr> {
        match self {
            SetExpr::Halfspaces(p) => Ok(SetExpr::Halfspaces(p.recession())),
            SetExpr::Orthant { dim, sign } => Ok(SetExpr::Orthant {
                dim: *dim,
                sign: *sign,
            }),
            SetExpr::Shift { base, .. } => base.recession_cone(),
            SetExpr::Negate { base } => Ok(SetExpr::negate(base.recession_cone()?)),
            SetExpr::Union { .. } => Err(Error::Unsupported(
                "recession cone of a union is not representable here".into(),
            )),
            SetExpr::Oracle(_) => Err(Error::Unsupported(
                "recession cone of an oracle set is not computable; use its declared directions"
                    .into(),
            )),
        }
    }

    /// Tests whether `k` lies in the negated recession cone of the set,
    /// weakly and by strict margin.
    pub fn classify_direction(&self, k: &Vector, tol: f64) -> Result<DirectionClass> {
        if k.norm_inf() == 0.0 {
            return Err(Error::InvalidInput("direction k must be nonzero".into()));
        }
        let recession = self.recession_cone()?;
        let minus_k = k.neg();
        Ok(DirectionClass {
            in_minus_recession: recession.contains(&minus_k, tol)?,
            in_minus_core_recession: recession.contains_core(&minus_k, STRICT_MARGIN)?,
        })
    }

    /// Flattens the expression into a union of halfspace polyhedra.
    /// Fails on oracle leaves.
    pub fn to_polyhedra(&self) -> Result<Vec<HalfspacePolyhedron>> {
        match self {
            SetExpr::Halfspaces(p) => Ok(vec![p.clone()]),
            SetExpr::Orthant { dim, sign } => Ok(vec![orthant_polyhedron(*dim, *sign)]),
            SetExpr::Shift { offset, base } => Ok(base
                .to_polyhedra()?
                .into_iter()
                .map(|p| p.shifted(offset))
                .collect()),
            SetExpr::Negate { base } => Ok(base
                .to_polyhedra()?
                .into_iter()
                .map(|p| p.negated())
                .collect()),
            SetExpr::Union { parts } => {
                let mut out = Vec::new();
                for part in parts {
                    out.extend(part.to_polyhedra()?);
                }
                Ok(out)
            }
            SetExpr::Oracle(o) => Err(Error::Unsupported(format!(
                "oracle set \"{}\" has no halfspace form; use the bisection path",
                o.name
            ))),
        }
    }

    /// Like [`Self::to_polyhedra`] but insists on a single polyhedron
    /// (no unions).
    pub fn to_polyhedron(&self) -> Result<HalfspacePolyhedron> {
        if matches!(self, SetExpr::Union { .. }) {
            return Err(Error::Unsupported(
                "operation needs a single polyhedron, got a union".into(),
            ));
        }
        let mut polys = self.to_polyhedra()?;
        if polys.len() != 1 {
            return Err(Error::Unsupported(
                "operation needs a single polyhedron".into(),
            ));
        }
        Ok(polys.pop().unwrap())
    }

    /// Whether the set is algebraically closed, as far as the
    /// representation tells: polyhedral compositions always are, oracle
    /// sets carry a declaration.
    pub fn is_declared_closed(&self) -> bool {
        match self {
            SetExpr::Halfspaces(_) | SetExpr::Orthant { .. } => true,
            SetExpr::Shift { base, .. } | SetExpr::Negate { base } => base.is_declared_closed(),
            // A union of closed sets need not be closed in general, but a
            // finite union is.
            SetExpr::Union { parts } => parts.iter().all(SetExpr::is_declared_closed),
            SetExpr::Oracle(o) => o.closed,
        }
    }
}

pub fn orthant_polyhedron(dim: usize, sign: OrthantSign) -> HalfspacePolyhedron {
    let flip = match sign {
        OrthantSign::Nonneg => -1.0,
        OrthantSign::Nonpos => 1.0,
    };
    let normals = (0..dim)
        .map(|i| Vector::axis(dim, i).scale(flip))
        .collect();
    HalfspacePolyhedron {
        normals,
        offsets: vec![0.0; dim],
    }
}

/// Ships the catalog hyperbola `{ y : y2 >= 1/y1, y1 > 0 }` with its
/// standard declaration.
pub fn hyperbola_oracle() -> SetExpr {
    SetExpr::Oracle(OracleSet {
        name: "hyperbola".into(),
        closed: true,
        recession: vec![Vector::new(vec![-1.0, 0.0]).unwrap()],
        dim: Some(2),
        radius: None,
    })
}

/// The closed Euclidean unit ball in `dim` dimensions.
pub fn norm_ball_oracle(dim: usize, radius: f64) -> SetExpr {
    SetExpr::Oracle(OracleSet {
        name: "norm-ball".into(),
        closed: true,
        recession: Vec::new(),
        dim: Some(dim),
        radius: Some(radius),
    })
}

/// Three-valued answer for structural predicates that are only sometimes
/// decidable from the representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    True,
    False,
    Unknown,
}

impl TriState {
    pub fn is_true(self) -> bool {
        self == TriState::True
    }
    pub fn is_false(self) -> bool {
        self == TriState::False
    }
}

/// Structural flags of a candidate domination/ordering set.
///
/// Flags are computed from the representation where decidable and left
/// `unknown` otherwise; sampled probes may refute a property (with a
/// witness) but never prove a universal one.
#[derive(Debug, Clone, Serialize)]
pub struct ConeFlags {
    pub contains_zero: bool,
    pub is_cone: TriState,
    pub pointed: TriState,
    pub core_nonempty: TriState,
    /// Witness for a refuted flag, if any.
    pub pointedness_witness: Option<Vector>,
}

impl ConeFlags {
    pub fn compute(set: &SetExpr, tol: f64, probes: &[Vector]) -> Result<ConeFlags> {
        let dim = set.validate()?;
        let contains_zero = set.contains(&Vector::zeros(dim), tol)?;
        let is_cone = cone_flag(set, tol);

        let mut pointed = match structurally_pointed(set) {
            Some(true) => TriState::True,
            Some(false) => TriState::False,
            None => TriState::Unknown,
        };
        let mut pointedness_witness = None;
        if pointed == TriState::Unknown {
            // Refutation probes: a nonzero u with both u and -u members
            // shows the set is not pointed. The skeleton directions catch
            // axis-aligned and diagonal lineality that random probes
            // never hit.
            let mut candidates = crate::sampling::skeleton_probes(dim);
            candidates.extend_from_slice(probes);
            for u in candidates {
                if u.norm_inf() <= tol {
                    continue;
                }
                if set.contains(&u, tol)? && set.contains(&u.neg(), tol)? {
                    pointed = TriState::False;
                    pointedness_witness = Some(u);
                    break;
                }
            }
        }

        let core_nonempty = core_nonempty_flag(set, probes)?;
        Ok(ConeFlags {
            contains_zero,
            is_cone,
            pointed,
            core_nonempty,
            pointedness_witness,
        })
    }
}

fn cone_flag(set: &SetExpr, tol: f64) -> TriState {
    match set {
        SetExpr::Halfspaces(p) => {
            if p.offsets.iter().all(|b| b.abs() <= tol) {
                TriState::True
            } else {
                TriState::Unknown
            }
        }
        SetExpr::Orthant { .. } => TriState::True,
        SetExpr::Shift { offset, base } => {
            if offset.norm_inf() <= tol {
                cone_flag(base, tol)
            } else {
                TriState::Unknown
            }
        }
        SetExpr::Negate { base } => cone_flag(base, tol),
        SetExpr::Union { parts } => {
            if parts.iter().all(|p| cone_flag(p, tol) == TriState::True) {
                TriState::True
            } else {
                TriState::Unknown
            }
        }
        // Catalog sets are fully known.
        SetExpr::Oracle(_) => TriState::False,
    }
}

fn structurally_pointed(set: &SetExpr) -> Option<bool> {
    match set {
        SetExpr::Orthant { .. } => Some(true),
        SetExpr::Negate { base } => structurally_pointed(base),
        SetExpr::Shift { offset, base } if offset.norm_inf() == 0.0 => structurally_pointed(base),
        _ => None,
    }
}

fn core_nonempty_flag(set: &SetExpr, probes: &[Vector]) -> Result<TriState> {
    match set {
        SetExpr::Orthant { .. } => Ok(TriState::True),
        SetExpr::Oracle(_) => Ok(TriState::True),
        SetExpr::Negate { base } => core_nonempty_flag(base, &[]),
        _ => {
            let dim = set.validate()?;
            let mut candidates: Vec<Vector> = vec![Vector::zeros(dim)];
            for i in 0..dim {
                for s in [1.0, -1.0] {
                    candidates.push(Vector::axis(dim, i).scale(s));
                }
            }
            candidates.push(Vector::new(vec![1.0; dim]).unwrap());
            candidates.push(Vector::new(vec![-1.0; dim]).unwrap());
            candidates.extend_from_slice(probes);
            for y in &candidates {
                if set.contains_core(y, STRICT_MARGIN)? {
                    return Ok(TriState::True);
                }
            }
            Ok(TriState::Unknown)
        }
    }
}

/// Outcome of a sampled free-disposal audit `A = A - C`.
#[derive(Debug, Clone, Serialize)]
pub struct FreeDisposalReport {
    pub holds: bool,
    pub pairs_checked: usize,
    /// `(a, c)` with `a - c` outside the set, when found.
    pub witness: Option<(Vector, Vector)>,
}

/// Samples `a in S`, `c in C` and checks `a - c in S`; one counterexample
/// refutes the free-disposal property.
pub fn free_disposal_check(
    set: &SetExpr,
    cone: &SetExpr,
    sampler: &crate::sampling::Sampler,
    n_samples: usize,
    tol: f64,
    rng: &mut crate::sampling::Rng,
) -> Result<FreeDisposalReport> {
    let set_points = sampler.draw(set, n_samples, tol, rng)?;
    let cone_points = sampler.draw(cone, n_samples, tol, rng)?;
    let mut pairs = 0;
    for a in &set_points {
        for c in &cone_points {
            pairs += 1;
            if !set.contains(&a.sub(c), tol)? {
                return Ok(FreeDisposalReport {
                    holds: false,
                    pairs_checked: pairs,
                    witness: Some((a.clone(), c.clone())),
                });
            }
        }
    }
    Ok(FreeDisposalReport {
        holds: true,
        pairs_checked: pairs,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{Rng, Sampler};
    use crate::vector::vec2;
    use rand::SeedableRng;

    fn nonpos2() -> SetExpr {
        SetExpr::orthant(2, OrthantSign::Nonpos)
    }

    fn nonneg2() -> SetExpr {
        SetExpr::orthant(2, OrthantSign::Nonneg)
    }

    #[test]
    fn membership_basics() {
        let tol = 1e-9;
        // Boundary point of the nonpositive orthant is a member.
        assert!(nonpos2().contains(&vec2(-1.0, 0.0), tol).unwrap());
        let halfplane = SetExpr::halfspaces(vec![vec2(1.0, 1.0)], vec![0.0]).unwrap();
        assert!(!halfplane.contains(&vec2(1.0, 0.0), tol).unwrap());
        assert!(hyperbola_oracle().contains(&vec2(1.0, 1.0), tol).unwrap());
        assert!(!hyperbola_oracle().contains(&vec2(-1.0, 5.0), tol).unwrap());
    }

    #[test]
    fn core_membership() {
        assert!(nonneg2().contains_core(&vec2(1.0, 1.0), 1e-9).unwrap());
        assert!(!nonneg2().contains_core(&vec2(0.0, 1.0), 1e-9).unwrap());
        let quadrant =
            SetExpr::halfspaces(vec![vec2(1.0, 0.0), vec2(0.0, 1.0)], vec![0.0, 0.0]).unwrap();
        assert!(quadrant.contains_core(&vec2(-1.0, -1.0), 1e-9).unwrap());
        assert!(!quadrant.contains_core(&vec2(0.0, -1.0), 1e-9).unwrap());
    }

    #[test]
    fn core_implies_membership() {
        let sets = [
            nonneg2(),
            SetExpr::shift(vec2(1.0, -2.0), nonpos2()),
            SetExpr::halfspaces(vec![vec2(1.0, 2.0), vec2(-1.0, 1.0)], vec![3.0, 0.5]).unwrap(),
        ];
        let mut rng = Rng::seed_from_u64(7);
        let sampler = Sampler::box_draw(5.0);
        for s in &sets {
            let pts = sampler.draw_raw(2, 500, &mut rng);
            for y in pts {
                if s.contains_core(&y, 1e-9).unwrap() {
                    assert!(s.contains(&y, 1e-9).unwrap(), "core but not member: {y}");
                }
            }
        }
    }

    #[test]
    fn recession_cone_examples() {
        // Offsets drop to zero.
        let p = SetExpr::halfspaces(vec![vec2(1.0, 1.0), vec2(-1.0, 0.0)], vec![3.0, 1.0]).unwrap();
        let r = p.recession_cone().unwrap();
        match &r {
            SetExpr::Halfspaces(hp) => assert!(hp.offsets.iter().all(|b| *b == 0.0)),
            _ => panic!("expected halfspaces"),
        }
        // A cone is its own recession cone.
        assert_eq!(nonpos2().recession_cone().unwrap(), nonpos2());
        // Shifts are dropped.
        let shifted = SetExpr::shift(vec2(5.0, 5.0), nonpos2());
        assert_eq!(shifted.recession_cone().unwrap(), nonpos2());
        // Unions and oracles are unsupported.
        assert!(SetExpr::union(vec![nonpos2(), nonneg2()])
            .recession_cone()
            .is_err());
        assert!(hyperbola_oracle().recession_cone().is_err());
    }

    #[test]
    fn classify_direction_examples() {
        let tol = 1e-9;
        let c = nonpos2().classify_direction(&vec2(1.0, 1.0), tol).unwrap();
        assert!(c.in_minus_recession && c.in_minus_core_recession);
        let c = nonpos2().classify_direction(&vec2(1.0, 0.0), tol).unwrap();
        assert!(c.in_minus_recession && !c.in_minus_core_recession);
        let halfplane = SetExpr::halfspaces(vec![vec2(1.0, 1.0)], vec![0.0]).unwrap();
        let c = halfplane
            .classify_direction(&vec2(1.0, 1.0), tol)
            .unwrap();
        assert!(c.in_minus_recession && c.in_minus_core_recession);
        assert!(nonpos2().classify_direction(&vec2(0.0, 0.0), tol).is_err());
    }

    #[test]
    fn recession_membership_implies_ray_containment() {
        let tol = 1e-9;
        let p = SetExpr::halfspaces(vec![vec2(1.0, 2.0), vec2(-1.0, 1.0)], vec![3.0, 0.5]).unwrap();
        let mut rng = Rng::seed_from_u64(11);
        let sampler = Sampler::box_draw(4.0);
        let members = sampler.draw(&p, 50, tol, &mut rng).unwrap();
        // Rows (1,2) and (-1,1) both have nonnegative inner product with k.
        let k = vec2(1.0, 1.0);
        let class = p.classify_direction(&k, tol).unwrap();
        assert!(class.in_minus_recession);
        for a in members {
            for t in [0.1, 1.0, 10.0] {
                let moved = a.add_scaled(-t, &k);
                assert!(p.contains(&moved, tol).unwrap(), "ray left the set at {moved}");
            }
        }
    }

    #[test]
    fn double_negate_is_identity_on_membership() {
        let tol = 1e-9;
        let s = SetExpr::halfspaces(vec![vec2(2.0, -1.0), vec2(0.5, 0.5)], vec![1.0, -0.25]).unwrap();
        let nn = SetExpr::negate(SetExpr::negate(s.clone()));
        let mut rng = Rng::seed_from_u64(3);
        let sampler = Sampler::box_draw(5.0);
        for y in sampler.draw_raw(2, 1000, &mut rng) {
            assert_eq!(
                s.contains(&y, tol).unwrap(),
                nn.contains(&y, tol).unwrap()
            );
        }
    }

    #[test]
    fn cone_flags_on_catalog() {
        let tol = 1e-9;
        let flags = ConeFlags::compute(&nonneg2(), tol, &[]).unwrap();
        assert!(flags.contains_zero);
        assert_eq!(flags.is_cone, TriState::True);
        assert_eq!(flags.pointed, TriState::True);
        assert_eq!(flags.core_nonempty, TriState::True);

        // A halfplane cone is not pointed; the axis probe finds lineality.
        let halfplane = SetExpr::halfspaces(vec![vec2(1.0, 0.0)], vec![0.0]).unwrap();
        let flags = ConeFlags::compute(&halfplane, tol, &[]).unwrap();
        assert_eq!(flags.is_cone, TriState::True);
        assert_eq!(flags.pointed, TriState::False);
        assert!(flags.pointedness_witness.is_some());

        let ball = norm_ball_oracle(2, 1.0);
        let flags = ConeFlags::compute(&ball, tol, &[]).unwrap();
        assert!(flags.contains_zero);
        assert_eq!(flags.is_cone, TriState::False);
    }

    #[test]
    fn free_disposal_examples() {
        let tol = 1e-9;
        let mut rng = Rng::seed_from_u64(42);
        let sampler = Sampler::box_draw(3.0);

        // A - R^2_+ = A for the lower orthant.
        let rep =
            free_disposal_check(&nonpos2(), &nonneg2(), &sampler, 30, tol, &mut rng).unwrap();
        assert!(rep.holds, "witness: {:?}", rep.witness);

        // Halfplane y1+y2 <= 0 with the ray through (-1, 2): every c on the
        // ray has c1+c2 >= 0, so a - c stays in the halfplane. The ray is
        // measure-zero, hence the explicit sampler.
        let halfplane = SetExpr::halfspaces(vec![vec2(1.0, 1.0)], vec![0.0]).unwrap();
        let ray_pos: Vec<Vector> = (0..20).map(|i| vec2(-1.0, 2.0).scale(i as f64 * 0.25)).collect();
        let ray_cone = SetExpr::halfspaces(
            vec![vec2(2.0, 1.0), vec2(-2.0, -1.0), vec2(1.0, 0.0)],
            vec![0.0, 0.0, 0.0],
        )
        .unwrap();
        let rep = free_disposal_check(
            &halfplane,
            &ray_cone,
            &Sampler::explicit(ray_pos),
            20,
            tol,
            &mut rng,
        )
        .unwrap();
        assert!(rep.holds);

        // The ray through (1, -2) leaves the halfplane: a=(0,0), c=(1,-2)
        // gives a - c = (-1, 2) with coordinate sum 1 > 0.
        let bad_ray: Vec<Vector> = (1..20).map(|i| vec2(1.0, -2.0).scale(i as f64 * 0.25)).collect();
        let bad_cone = SetExpr::halfspaces(
            vec![vec2(2.0, 1.0), vec2(-2.0, -1.0), vec2(-1.0, 0.0)],
            vec![0.0, 0.0, 0.0],
        )
        .unwrap();
        let mut pts = vec![vec2(0.0, 0.0)];
        pts.extend(bad_ray);
        let rep = free_disposal_check(
            &halfplane,
            &bad_cone,
            &Sampler::explicit(pts),
            20,
            tol,
            &mut rng,
        )
        .unwrap();
        assert!(!rep.holds);
        assert!(rep.witness.is_some());

        // Unit square minus the nonnegative orthant leaves the square.
        let square = SetExpr::halfspaces(
            vec![
                vec2(1.0, 0.0),
                vec2(0.0, 1.0),
                vec2(-1.0, 0.0),
                vec2(0.0, -1.0),
            ],
            vec![1.0, 1.0, 0.0, 0.0],
        )
        .unwrap();
        let rep = free_disposal_check(&square, &nonneg2(), &sampler, 30, tol, &mut rng).unwrap();
        assert!(!rep.holds);
    }

    #[test]
    fn json_schema_round_trip() {
        let text = r#"{"kind":"shift","offset":[4,4],"base":{"kind":"negate","base":{"kind":"orthant","dim":2,"sign":"nonneg"}}}"#;
        let parsed: SetExpr = serde_json::from_str(text).unwrap();
        parsed.validate().unwrap();
        // a - D: membership of y means a - y in D.
        assert!(parsed.contains(&vec2(3.0, 2.0), 1e-9).unwrap());
        assert!(!parsed.contains(&vec2(5.0, 2.0), 1e-9).unwrap());

        let oracle = r#"{"kind":"oracle","name":"hyperbola","closed":true,"recession":[[-1,0]]}"#;
        let parsed: SetExpr = serde_json::from_str(oracle).unwrap();
        assert_eq!(parsed.validate().unwrap(), 2);

        let poly = r#"{"kind":"halfspaces","normals":[[1,1]],"offsets":[0]}"#;
        let parsed: SetExpr = serde_json::from_str(poly).unwrap();
        let back = serde_json::to_string(&parsed).unwrap();
        let reparsed: SetExpr = serde_json::from_str(&back).unwrap();
        assert_eq!(parsed, reparsed);
    }

    #[test]
    fn schema_violations_rejected() {
        // Length mismatch between normals and offsets.
        let bad = r#"{"kind":"halfspaces","normals":[[1,1],[0,1]],"offsets":[0]}"#;
        let parsed: SetExpr = serde_json::from_str(bad).unwrap();
        assert!(parsed.validate().is_err());
        // Unknown oracle name.
        let bad = r#"{"kind":"oracle","name":"mystery","closed":true}"#;
        let parsed: SetExpr = serde_json::from_str(bad).unwrap();
        assert!(parsed.validate().is_err());
        // Empty union.
        assert!(SetExpr::union(vec![]).validate().is_err());
        // All-zero normal row.
        assert!(SetExpr::halfspaces(vec![vec2(0.0, 0.0)], vec![1.0]).is_err());
    }
}
