//! Efficient and weakly efficient points of a finite outcome set.
//!
//! `y0` is efficient with respect to a domination set `D` when no other
//! outcome lies in `y0 - D`; weakly efficient when no other outcome lies in
//! `y0 - core D`. Both are enumerated by the quadratic pairwise loop — a
//! correctness-first reference implementation for desk-scale clouds, not a
//! divide-and-conquer non-dominance sort.
//!
//! Point identity in the `\ {y0}` clause is value-based: duplicates of an
//! efficient outcome never disqualify it.

use serde::Serialize;

use crate::defaults::{ARGMIN_TIE_TOL, POINT_EQ_TOL, STRICT_MARGIN};
use crate::error::{Error, Result};
use crate::extvalues::ExtScalar;
use crate::sampling::{uniform_box, Rng, Sampler};
use crate::sets::{ConeFlags, SetExpr, TriState};
use crate::vector::Vector;

/// A finite indexed list of outcome vectors, all of one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    points: Vec<Vector>,
    labels: Option<Vec<String>>,
}

impl PointCloud {
    pub fn new(points: Vec<Vector>) -> Result<PointCloud> {
        if points.is_empty() {
            return Err(Error::InvalidInput("point cloud must be nonempty".into()));
        }
        let dim = points[0].dim();
        for (i, p) in points.iter().enumerate() {
            if p.dim() != dim {
                return Err(Error::InvalidInput(format!(
                    "point {i} has dimension {} but point 0 has {dim}",
                    p.dim()
                )));
            }
        }
        Ok(PointCloud {
            points,
            labels: None,
        })
    }

    pub fn with_labels(points: Vec<Vector>, labels: Vec<String>) -> Result<PointCloud> {
        if labels.len() != points.len() {
            return Err(Error::InvalidInput(format!(
                "{} labels for {} points",
                labels.len(),
                points.len()
            )));
        }
        let mut cloud = PointCloud::new(points)?;
        cloud.labels = Some(labels);
        Ok(cloud)
    }

    /// Parses CSV text: one point per row, comma-separated coordinates, an
    /// optional single header row detected by a non-numeric first token.
    pub fn from_csv_str(text: &str) -> Result<PointCloud> {
        let mut points = Vec::new();
        let mut first_data_line = true;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let first_token = line.split(',').next().unwrap_or("").trim();
            if first_data_line && first_token.parse::<f64>().is_err() {
                // Header row.
                first_data_line = false;
                continue;
            }
            first_data_line = false;
            let coords = line
                .split(',')
                .map(|tok| {
                    tok.trim().parse::<f64>().map_err(|_| {
                        Error::InvalidInput(format!(
                            "csv line {}: not a number: \"{}\"",
                            lineno + 1,
                            tok.trim()
                        ))
                    })
                })
                .collect::<Result<Vec<f64>>>()?;
            points.push(Vector::new(coords).map_err(|e| {
                Error::InvalidInput(format!("csv line {}: {e}", lineno + 1))
            })?);
        }
        let cloud = PointCloud::new(points)
            .map_err(|_| Error::InvalidInput("csv contains no data rows".into()))?;
        let dim = cloud.dim();
        for (i, p) in cloud.points.iter().enumerate() {
            if p.dim() != dim {
                return Err(Error::InvalidInput(format!(
                    "csv row {} has {} columns, expected {dim}",
                    i + 1,
                    p.dim()
                )));
            }
        }
        Ok(cloud)
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn point(&self, i: usize) -> &Vector {
        &self.points[i]
    }
}

/// Index set of efficient points plus a per-index certificate naming the
/// route that established it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EffResult {
    pub indices: Vec<usize>,
    pub certificates: Vec<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub index: usize,
    pub reason: String,
}

impl EffResult {
    fn tagged(indices: Vec<usize>, reason: &str) -> EffResult {
        let certificates = indices
            .iter()
            .map(|&index| Certificate {
                index,
                reason: reason.to_string(),
            })
            .collect();
        EffResult {
            indices,
            certificates,
        }
    }
}

pub(crate) fn points_equal(a: &Vector, b: &Vector) -> bool {
    a.approx_eq(b, POINT_EQ_TOL)
}

/// Pairwise efficiency loop over an arbitrary domination predicate on the
/// difference `y0 - y`. `y0` is dropped as soon as some other point (as a
/// value, not an index) has its difference inside the predicate's set.
pub fn eff_indices_by<F>(cloud: &PointCloud, mut dominates: F) -> Result<Vec<usize>>
where
    F: FnMut(&Vector) -> Result<bool>,
{
    let points = cloud.points();
    let mut keep = Vec::new();
    'outer: for (i, y0) in points.iter().enumerate() {
        for y in points.iter() {
            if points_equal(y, y0) {
                continue;
            }
            if dominates(&y0.sub(y))? {
                continue 'outer;
            }
        }
        keep.push(i);
    }
    Ok(keep)
}

/// Efficient points of `cloud` with respect to the domination set.
pub fn eff(cloud: &PointCloud, set: &SetExpr, tol: f64) -> Result<EffResult> {
    set.validate()?;
    let indices = eff_indices_by(cloud, |diff| set.contains(diff, tol))?;
    Ok(EffResult::tagged(indices, "pairwise"))
}

/// Weakly efficient points: the same loop through the algebraic interior.
pub fn weff(cloud: &PointCloud, set: &SetExpr, tol: f64) -> Result<EffResult> {
    set.validate()?;
    let _ = tol;
    let indices = eff_indices_by(cloud, |diff| set.contains_core(diff, STRICT_MARGIN))?;
    Ok(EffResult::tagged(indices, "pairwise-core"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    None,
    Monotone,
    Strict,
}

/// Outcome of filtering a cloud through externally supplied scalar values.
#[derive(Debug, Clone, Serialize)]
pub struct FilterOutcome {
    /// Minimizer indices (ties within an absolute window; `nu` skipped).
    pub argmin: Vec<usize>,
    /// Indices certified or determined efficient.
    pub efficient: Vec<usize>,
    /// True when monotonicity alone granted the certificate.
    pub certified: bool,
    pub certificate: String,
    pub warning: Option<String>,
}

/// Argmin over extended values: `-inf` beats every real, `nu` never enters.
pub fn argmin_ext(values: &[ExtScalar]) -> Vec<usize> {
    let neg_inf: Vec<usize> = values
        .iter()
        .enumerate()
        .filter(|(_, v)| matches!(v, ExtScalar::NegInf))
        .map(|(i, _)| i)
        .collect();
    if !neg_inf.is_empty() {
        return neg_inf;
    }
    let mut best: Option<f64> = None;
    for v in values {
        if let ExtScalar::Real(x) = v {
            best = Some(best.map_or(*x, |b: f64| b.min(*x)));
        }
    }
    let Some(best) = best else {
        return Vec::new();
    };
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| matches!(v, ExtScalar::Real(x) if *x <= best + ARGMIN_TIE_TOL))
        .map(|(i, _)| i)
        .collect()
}

/// Filters a cloud by scalar values whose monotonicity class the caller
/// asserts. Strict monotonicity certifies the whole argmin efficient; plain
/// monotonicity certifies a unique minimizer; otherwise the argmin is
/// post-processed by the pairwise loop.
pub fn scalar_filter(
    cloud: &PointCloud,
    values: &[ExtScalar],
    set: &SetExpr,
    monotonicity: Monotonicity,
    tol: f64,
) -> Result<FilterOutcome> {
    if values.len() != cloud.len() {
        return Err(Error::InvalidInput(format!(
            "{} values for {} points",
            values.len(),
            cloud.len()
        )));
    }
    let argmin = argmin_ext(values);
    if argmin.is_empty() {
        return Ok(FilterOutcome {
            argmin,
            efficient: Vec::new(),
            certified: false,
            certificate: "none".into(),
            warning: Some("all values are nu: the feasible range is empty".into()),
        });
    }
    let (efficient, certified, certificate) = match monotonicity {
        Monotonicity::Strict => (
            argmin.clone(),
            true,
            "strict-monotone-argmin".to_string(),
        ),
        Monotonicity::Monotone if argmin.len() == 1 => (
            argmin.clone(),
            true,
            "unique-argmin-monotone".to_string(),
        ),
        _ => {
            // Efficient points among the minimizers, by the pairwise loop
            // restricted to the argmin subcloud.
            let sub = PointCloud::new(
                argmin.iter().map(|&i| cloud.point(i).clone()).collect(),
            )?;
            let sub_eff = eff(&sub, set, tol)?;
            let mapped = sub_eff.indices.iter().map(|&j| argmin[j]).collect();
            (mapped, false, "argmin-restriction".to_string())
        }
    };
    Ok(FilterOutcome {
        argmin,
        efficient,
        certified,
        certificate,
        warning: None,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Report of the efficiency set-algebra audits.
#[derive(Debug, Clone, Serialize)]
pub struct AlgebraReport {
    pub checks: Vec<AlgebraCheck>,
    pub all_passed: bool,
    pub notes: Vec<String>,
}

fn point_set_of(cloud: &PointCloud, indices: &[usize]) -> Vec<Vector> {
    indices.iter().map(|&i| cloud.point(i).clone()).collect()
}

fn same_point_set(a: &[Vector], b: &[Vector]) -> bool {
    let covered = |xs: &[Vector], ys: &[Vector]| {
        xs.iter()
            .all(|x| ys.iter().any(|y| x.approx_eq(y, 1e-9)))
    };
    covered(a, b) && covered(b, a)
}

/// Runs the set-algebra identities of efficient point sets as sampled
/// audits: invariance under adding/removing zero, invariance under
/// augmenting the cloud by dominated points, the slice identities for both
/// efficiency notions, and the interior-point probe on a polyhedral hull.
///
/// The augmentation identity needs a pointed convex cone; when the flags
/// cannot certify that, the check still runs and a note records that a
/// failure is the known behavior for non-pointed cones.
pub fn eff_algebra_check(
    cloud: &PointCloud,
    set: &SetExpr,
    sampler: &Sampler,
    n_samples: usize,
    tol: f64,
    rng: &mut Rng,
) -> Result<AlgebraReport> {
    let mut checks = Vec::new();
    let mut notes = Vec::new();

    let base = eff(cloud, set, tol)?;

    // (i) adding or removing zero never changes the efficient set.
    let with_zero =
        eff_indices_by(cloud, |d| Ok(d.norm_inf() <= tol || set.contains(d, tol)?))?;
    let without_zero =
        eff_indices_by(cloud, |d| Ok(d.norm_inf() > tol && set.contains(d, tol)?))?;
    let passed = with_zero == base.indices && without_zero == base.indices;
    checks.push(AlgebraCheck {
        name: "zero-invariance".into(),
        passed,
        witness: (!passed).then(|| {
            format!(
                "with0 {:?} / without0 {:?} vs base {:?}",
                with_zero, without_zero, base.indices
            )
        }),
    });

    // Structural context for the augmentation identity.
    let probes = sampler.draw(set, 32, tol, rng)?;
    let flags = ConeFlags::compute(set, tol, &probes)?;
    let pointed_cone_certified =
        flags.is_cone == TriState::True && flags.pointed != TriState::False;
    if !pointed_cone_certified {
        notes.push(
            "domination set not certified a pointed convex cone: augmentation may add new efficient points"
                .into(),
        );
    }

    // (ii) augmenting by dominated points leaves the efficient set alone.
    let mut nonzero_members: Vec<Vector> = Vec::new();
    for d in sampler.draw(set, 4 * n_samples, tol, rng)? {
        if d.norm_inf() > 0.1 {
            nonzero_members.push(d);
        }
        if nonzero_members.len() >= n_samples.max(1) {
            break;
        }
    }
    if nonzero_members.is_empty() {
        notes.push("no nonzero members of the domination set sampled; augmentation skipped".into());
    } else {
        let mut augmented = cloud.points().to_vec();
        for (j, d) in nonzero_members.iter().enumerate() {
            let y = cloud.point(j % cloud.len());
            augmented.push(y.add(d));
        }
        let big = PointCloud::new(augmented)?;
        let big_eff = eff(&big, set, tol)?;
        let passed = same_point_set(
            &point_set_of(&big, &big_eff.indices),
            &point_set_of(cloud, &base.indices),
        );
        checks.push(AlgebraCheck {
            name: "augmentation-invariance".into(),
            passed,
            witness: (!passed).then(|| {
                format!(
                    "augmented efficient set {:?} differ. hypotheses certified: {}",
                    big_eff.indices, pointed_cone_certified
                )
            }),
        });
    }

    // (iii)/(iv) slice identities: restrict to a lower slice y - D and
    // compare against slicing the result.
    for (name, weak) in [("slice-eff", false), ("slice-weff", true)] {
        let mut slice_witness = None;
        let mut ran = false;
        for trial in 0..3 {
            let anchor = cloud.point((7 * trial + 1) % cloud.len());
            let head = match nonzero_members.first() {
                Some(d) => anchor.add(d),
                None => anchor.clone(),
            };
            let member_of_slice = |p: &Vector| set.contains(&head.sub(p), tol);
            let sub_idx: Vec<usize> = (0..cloud.len())
                .map(|i| member_of_slice(cloud.point(i)).map(|m| (i, m)))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter(|(_, m)| *m)
                .map(|(i, _)| i)
                .collect();
            if sub_idx.is_empty() {
                continue;
            }
            ran = true;
            let sub = PointCloud::new(point_set_of(cloud, &sub_idx))?;
            let lhs: Vec<usize> = if weak {
                weff(&sub, set, tol)?.indices
            } else {
                eff(&sub, set, tol)?.indices
            }
            .into_iter()
            .map(|j| sub_idx[j])
            .collect();
            let full = if weak {
                weff(cloud, set, tol)?.indices
            } else {
                base.indices.clone()
            };
            let rhs: Vec<usize> = full
                .into_iter()
                .filter(|i| sub_idx.contains(i))
                .collect();
            if lhs != rhs {
                slice_witness = Some(format!(
                    "slice at {head}: restricted {lhs:?} vs sliced {rhs:?}"
                ));
                break;
            }
        }
        checks.push(AlgebraCheck {
            name: name.into(),
            passed: slice_witness.is_none() && ran,
            witness: slice_witness.or((!ran).then(|| "no nonempty slice sampled".into())),
        });
    }

    // (v) interior points of a polyhedral hull probe are never efficient:
    // walking a small step against a domination direction must stay inside.
    if let Some(d) = nonzero_members.first() {
        let dim = cloud.dim();
        let mut lo = vec![f64::INFINITY; dim];
        let mut hi = vec![f64::NEG_INFINITY; dim];
        for p in cloud.points() {
            for i in 0..dim {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        let mut normals = Vec::new();
        let mut offsets = Vec::new();
        for i in 0..dim {
            normals.push(Vector::axis(dim, i));
            offsets.push(hi[i] + 1.0);
            normals.push(Vector::axis(dim, i).scale(-1.0));
            offsets.push(-(lo[i] - 1.0));
        }
        let hull = SetExpr::halfspaces(normals, offsets)?;
        let mut witness = None;
        let mut tested = 0;
        for _ in 0..200 {
            if tested >= n_samples.max(8) {
                break;
            }
            let y = uniform_box(dim, hi.iter().fold(0.0_f64, |m, v| m.max(v.abs())) + 2.0, rng);
            if !hull.contains_core(&y, 0.05)? {
                continue;
            }
            tested += 1;
            let dominated_inside = [1e-3, 1e-2, 0.1, 1.0].iter().any(|&t| {
                let z = y.add_scaled(-t, d);
                hull.contains(&z, tol).unwrap_or(false)
            });
            if !dominated_inside {
                witness = Some(format!("interior point {y} admits no dominated neighbor"));
                break;
            }
        }
        checks.push(AlgebraCheck {
            name: "interior-point-dominated".into(),
            passed: witness.is_none() && tested > 0,
            witness: witness.or((tested == 0).then(|| "no interior probes landed".into())),
        });
    }

    let all_passed = checks.iter().all(|c| c.passed);
    Ok(AlgebraReport {
        checks,
        all_passed,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defaults::DEFAULT_TOL;
    use crate::sets::OrthantSign;
    use crate::vector::vec2;

    fn orthant() -> SetExpr {
        SetExpr::orthant(2, OrthantSign::Nonneg)
    }

    fn cloud(points: &[(f64, f64)]) -> PointCloud {
        PointCloud::new(points.iter().map(|&(a, b)| vec2(a, b)).collect()).unwrap()
    }

    fn quad() -> PointCloud {
        cloud(&[(0.0, 3.0), (1.0, 1.0), (3.0, 0.0), (2.0, 2.0)])
    }

    #[test]
    fn eff_reference_examples() {
        let r = eff(&quad(), &orthant(), DEFAULT_TOL).unwrap();
        assert_eq!(r.indices, vec![0, 1, 2]);

        let r = eff(&cloud(&[(0.0, 0.0), (0.0, 1.0)]), &orthant(), DEFAULT_TOL).unwrap();
        assert_eq!(r.indices, vec![0]);

        // Infeasible rows make an empty-like domination set: nothing
        // dominates anything.
        let empty_like = SetExpr::halfspaces(
            vec![vec2(1.0, 0.0), vec2(-1.0, 0.0)],
            vec![-1.0, -1.0],
        )
        .unwrap();
        let r = eff(&quad(), &empty_like, DEFAULT_TOL).unwrap();
        assert_eq!(r.indices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn weff_reference_examples() {
        let r = weff(&cloud(&[(0.0, 0.0), (0.0, 1.0)]), &orthant(), DEFAULT_TOL).unwrap();
        assert_eq!(r.indices, vec![0, 1]);

        let r = weff(&quad(), &orthant(), DEFAULT_TOL).unwrap();
        assert_eq!(r.indices, vec![0, 1, 2]);

        let r = weff(&cloud(&[(5.0, -2.0)]), &orthant(), DEFAULT_TOL).unwrap();
        assert_eq!(r.indices, vec![0]);
    }

    #[test]
    fn eff_subset_of_weff_and_duplicates_survive() {
        let f = cloud(&[(1.0, 1.0), (1.0, 1.0), (0.0, 3.0), (2.0, 2.0)]);
        let e = eff(&f, &orthant(), DEFAULT_TOL).unwrap();
        let w = weff(&f, &orthant(), DEFAULT_TOL).unwrap();
        for i in &e.indices {
            assert!(w.indices.contains(i));
        }
        // Duplicates of the efficient point (1,1) both stay.
        assert!(e.indices.contains(&0) && e.indices.contains(&1));
    }

    #[test]
    fn csv_parsing() {
        let with_header = "x,y\n0,3\n1,1\n3,0\n2,2\n";
        let f = PointCloud::from_csv_str(with_header).unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(f.point(3), &vec2(2.0, 2.0));

        let without_header = "0.5, 1.5\n-1, 2\n";
        let f = PointCloud::from_csv_str(without_header).unwrap();
        assert_eq!(f.len(), 2);

        assert!(PointCloud::from_csv_str("x,y\n1,oops\n").is_err());
        assert!(PointCloud::from_csv_str("").is_err());
        assert!(PointCloud::from_csv_str("1,2\n3\n").is_err());
    }

    #[test]
    fn scalar_filter_reference_case() {
        // phi over a - D with a = (4,4), k = (1,1): max(y_i - 4).
        let values: Vec<ExtScalar> = quad()
            .points()
            .iter()
            .map(|p| ExtScalar::Real((p[0] - 4.0).max(p[1] - 4.0)))
            .collect();
        assert_eq!(
            values,
            vec![
                ExtScalar::Real(-1.0),
                ExtScalar::Real(-3.0),
                ExtScalar::Real(-1.0),
                ExtScalar::Real(-2.0)
            ]
        );
        let out = scalar_filter(&quad(), &values, &orthant(), Monotonicity::Monotone, DEFAULT_TOL)
            .unwrap();
        assert_eq!(out.argmin, vec![1]);
        assert_eq!(out.efficient, vec![1]);
        assert!(out.certified);
    }

    #[test]
    fn scalar_filter_constant_values() {
        let values = vec![ExtScalar::Real(1.0); 4];
        let out = scalar_filter(&quad(), &values, &orthant(), Monotonicity::Monotone, DEFAULT_TOL)
            .unwrap();
        assert_eq!(out.argmin, vec![0, 1, 2, 3]);
        // Eff(argmin, D) = eff(F, D) here.
        assert_eq!(out.efficient, vec![0, 1, 2]);
        assert!(!out.certified);
    }

    #[test]
    fn scalar_filter_nu_handling() {
        let values = vec![ExtScalar::Nu; 4];
        let out = scalar_filter(&quad(), &values, &orthant(), Monotonicity::None, DEFAULT_TOL)
            .unwrap();
        assert!(out.argmin.is_empty());
        assert!(out.warning.is_some());

        let values = vec![
            ExtScalar::Nu,
            ExtScalar::Real(2.0),
            ExtScalar::NegInf,
            ExtScalar::Real(-5.0),
        ];
        assert_eq!(argmin_ext(&values), vec![2]);
    }

    #[test]
    fn algebra_checks_pass_on_orthant() {
        let mut rng = crate::sampling::seeded(17);
        let report = eff_algebra_check(
            &quad(),
            &orthant(),
            &Sampler::box_draw(2.0),
            25,
            DEFAULT_TOL,
            &mut rng,
        )
        .unwrap();
        assert!(report.all_passed, "{:#?}", report.checks);
    }

    #[test]
    fn augmentation_can_fail_for_nonpointed_cone() {
        // A halfplane cone has lineality; augmented points can become
        // efficient, which the report must surface rather than hide.
        let halfplane = SetExpr::halfspaces(vec![vec2(-1.0, -1.0)], vec![0.0]).unwrap();
        let mut rng = crate::sampling::seeded(23);
        let report = eff_algebra_check(
            &cloud(&[(0.0, 0.0), (1.0, -1.0), (2.0, 1.0)]),
            &halfplane,
            &Sampler::box_draw(2.0),
            25,
            DEFAULT_TOL,
            &mut rng,
        )
        .unwrap();
        assert!(report
            .notes
            .iter()
            .any(|n| n.contains("not certified a pointed convex cone")));
    }

    #[test]
    fn permutation_does_not_change_the_selected_points() {
        let f = quad();
        let g = cloud(&[(2.0, 2.0), (3.0, 0.0), (0.0, 3.0), (1.0, 1.0)]);
        let ef: Vec<Vector> = eff(&f, &orthant(), DEFAULT_TOL)
            .unwrap()
            .indices
            .iter()
            .map(|&i| f.point(i).clone())
            .collect();
        let eg: Vec<Vector> = eff(&g, &orthant(), DEFAULT_TOL)
            .unwrap()
            .indices
            .iter()
            .map(|&i| g.point(i).clone())
            .collect();
        assert!(same_point_set(&ef, &eg));
    }
}
