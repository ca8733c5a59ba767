//! Binary relations induced by a constant domination set.
//!
//! A set `D` induces the relation `y1 > y2  iff  y2 in y1 + D`; everything
//! here evaluates that relation through a single membership test on the
//! difference `y2 - y1`, so adding a constant to both arguments never
//! changes the verdict. Strictness is encoded in the set: a relation can
//! be run through the algebraic interior of `D` instead of `D` itself.
//!
//! Structural properties of the relation map to set algebra: reflexivity
//! is membership of zero, asymmetry and antisymmetry are statements about
//! `D ∩ (-D)`, transitivity is `D + D ⊆ D`, and compatibility with
//! positive scaling says `D ∪ {0}` is a cone. Only reflexivity is decided
//! exactly; the rest are refuted by a witness or reported not-refuted
//! after `n` samples — a sampled universal claim is never reported as
//! proven.

use serde::Serialize;

use crate::efficiency::{eff_indices_by, PointCloud};
use crate::error::Result;
use crate::sampling::{Rng, Sampler};
use crate::sets::SetExpr;
use crate::vector::Vector;

#[derive(Debug, Clone)]
pub struct DominationRelation {
    pub set: SetExpr,
    /// Evaluate membership through the algebraic interior of the set.
    pub strict: bool,
    pub tol: f64,
}

/// Verdict on one structural property of a relation.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PropertyStatus {
    /// Decided exactly from the representation.
    Holds,
    /// Refuted, exactly or by a sampled counterexample.
    Fails { witness: String },
    /// No counterexample found; not a proof.
    NotRefuted { samples: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub reflexive: PropertyStatus,
    pub asymmetric: PropertyStatus,
    pub antisymmetric: PropertyStatus,
    pub transitive: PropertyStatus,
    pub cone_compatible: PropertyStatus,
}

impl DominationRelation {
    pub fn new(set: SetExpr, tol: f64) -> Result<DominationRelation> {
        set.validate()?;
        Ok(DominationRelation {
            set,
            strict: false,
            tol,
        })
    }

    pub fn strict(set: SetExpr, tol: f64) -> Result<DominationRelation> {
        set.validate()?;
        Ok(DominationRelation {
            set,
            strict: true,
            tol,
        })
    }

    /// Membership of a difference vector in the (possibly strict)
    /// domination set.
    pub fn member(&self, d: &Vector) -> Result<bool> {
        if self.strict {
            self.set.contains_core(d, self.tol)
        } else {
            self.set.contains(d, self.tol)
        }
    }

    /// `y1 > y2`, i.e. `y2 - y1` is a domination factor.
    pub fn holds(&self, y1: &Vector, y2: &Vector) -> Result<bool> {
        self.member(&y2.sub(y1))
    }

    /// Structural property report. Reflexivity is exact; the other four are
    /// counterexample searches over `n` sampled members.
    pub fn properties(
        &self,
        sampler: &Sampler,
        n: usize,
        rng: &mut Rng,
    ) -> Result<RelationReport> {
        let dim = self.set.dim()?;
        let zero = Vector::zeros(dim);
        let zero_member = self.member(&zero)?;

        let reflexive = if zero_member {
            PropertyStatus::Holds
        } else {
            PropertyStatus::Fails {
                witness: "0 is not a member of D".into(),
            }
        };

        // Pool of sampled members of D.
        let mut members: Vec<Vector> = Vec::with_capacity(n);
        match sampler {
            Sampler::Explicit(points) => {
                for p in points {
                    if members.len() >= n {
                        break;
                    }
                    if self.member(p)? {
                        members.push(p.clone());
                    }
                }
            }
            Sampler::Box { .. } => {
                let raw = sampler.draw_raw(dim, 40 * n.max(1), rng);
                for p in raw {
                    if members.len() >= n {
                        break;
                    }
                    if self.member(&p)? {
                        members.push(p);
                    }
                }
            }
        }

        // Axis probes catch lineality directions random draws almost never
        // hit exactly.
        let mut symmetry_pool = members.clone();
        for i in 0..dim {
            symmetry_pool.push(Vector::axis(dim, i));
        }

        let mut asymmetric = if zero_member {
            PropertyStatus::Fails {
                witness: "0 lies in both D and -D".into(),
            }
        } else {
            PropertyStatus::NotRefuted {
                samples: symmetry_pool.len(),
            }
        };
        let mut antisymmetric = PropertyStatus::NotRefuted {
            samples: symmetry_pool.len(),
        };
        for u in &symmetry_pool {
            if self.member(u)? && self.member(&u.neg())? {
                if matches!(asymmetric, PropertyStatus::NotRefuted { .. }) {
                    asymmetric = PropertyStatus::Fails {
                        witness: format!("{u} lies in both D and -D"),
                    };
                }
                if u.norm_inf() > self.tol {
                    antisymmetric = PropertyStatus::Fails {
                        witness: format!("nonzero {u} lies in both D and -D"),
                    };
                    break;
                }
            }
        }

        let mut transitive = PropertyStatus::NotRefuted {
            samples: members.len() * members.len(),
        };
        'trans: for d1 in &members {
            for d2 in &members {
                if !self.member(&d1.add(d2))? {
                    transitive = PropertyStatus::Fails {
                        witness: format!("{d1} + {d2} left D"),
                    };
                    break 'trans;
                }
            }
        }

        let lambdas = [0.25, 0.5, 2.0, 7.5];
        let mut cone_compatible = PropertyStatus::NotRefuted {
            samples: members.len() * lambdas.len(),
        };
        'cone: for d in &members {
            for lambda in lambdas {
                let scaled = d.scale(lambda);
                if scaled.norm_inf() <= self.tol {
                    continue;
                }
                if !self.member(&scaled)? {
                    cone_compatible = PropertyStatus::Fails {
                        witness: format!("{lambda} * {d} left D ∪ {{0}}"),
                    };
                    break 'cone;
                }
            }
        }

        Ok(RelationReport {
            reflexive,
            asymmetric,
            antisymmetric,
            transitive,
            cone_compatible,
        })
    }

    /// Minimal points of a finite cloud: `y0` is kept when every `y` that
    /// dominates it is dominated back.
    pub fn min_points(&self, cloud: &PointCloud) -> Result<Vec<usize>> {
        let mut keep = Vec::new();
        'outer: for (i, y0) in cloud.points().iter().enumerate() {
            for y in cloud.points() {
                if self.holds(y, y0)? && !self.holds(y0, y)? {
                    continue 'outer;
                }
            }
            keep.push(i);
        }
        Ok(keep)
    }
}

/// Minimal points computed through the efficiency route: efficient points
/// with respect to `D \ (-D)`. Coincides with
/// [`DominationRelation::min_points`] for a constant domination set.
pub fn min_via_eff(set: &SetExpr, cloud: &PointCloud, tol: f64) -> Result<Vec<usize>> {
    set.validate()?;
    eff_indices_by(cloud, |diff| {
        Ok(set.contains(diff, tol)? && !set.contains(&diff.neg(), tol)?)
    })
}
