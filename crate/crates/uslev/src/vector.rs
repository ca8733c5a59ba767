//! Dense points of `R^n` with the handful of linear-algebra operations the
//! crate needs. Entries are always finite; that invariant is checked at
//! construction and at the serde boundary.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidInput("vector must have dimension >= 1".into()));
        }
        if let Some(bad) = coords.iter().find(|c| !c.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "vector entries must be finite, got {bad}"
            )));
        }
        Ok(Vector(coords))
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![0.0; dim])
    }

    /// Standard basis vector `e_i`.
    pub fn axis(dim: usize, i: usize) -> Self {
        let mut v = vec![0.0; dim];
        v[i] = 1.0;
        Vector(v)
    }

    /// Parses a comma-separated coordinate list like `"1,-2,0.5"`.
    pub fn parse(text: &str) -> Result<Self> {
        let coords = text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::InvalidInput(format!("not a number: \"{}\"", tok.trim())))
            })
            .collect::<Result<Vec<f64>>>()?;
        Vector::new(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.0.iter()
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, lambda: f64) -> Vector {
        Vector(self.0.iter().map(|a| a * lambda).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    /// `self + t * other`.
    pub fn add_scaled(&self, t: f64, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + t * b)
                .collect(),
        )
    }

    pub fn norm2(&self) -> f64 {
        self.0.iter().map(|a| a * a).sum::<f64>().sqrt()
    }

    pub fn norm_inf(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, a| m.max(a.abs()))
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.norm_inf() <= tol
    }

    /// Componentwise agreement within an absolute tolerance.
    pub fn approx_eq(&self, other: &Vector, tol: f64) -> bool {
        self.dim() == other.dim()
            && self
                .0
                .iter()
                .zip(&other.0)
                .all(|(a, b)| (a - b).abs() <= tol)
    }

    /// True when `other = lambda * self` for some `lambda > 0` (within tol).
    pub fn is_positive_multiple_of(&self, other: &Vector, tol: f64) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let (ns, no) = (self.norm2(), other.norm2());
        if ns <= tol || no <= tol {
            return false;
        }
        let cos = self.dot(other) / (ns * no);
        cos >= 1.0 - tol
    }
}

impl Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl TryFrom<Vec<f64>> for Vector {
    type Error = Error;
    fn try_from(coords: Vec<f64>) -> Result<Self> {
        Vector::new(coords)
    }
}

impl From<Vector> for Vec<f64> {
    fn from(v: Vector) -> Vec<f64> {
        v.0
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Shorthand used pervasively in tests.
pub fn vec2(a: f64, b: f64) -> Vector {
    Vector::new(vec![a, b]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_coords() {
        assert!(Vector::new(vec![]).is_err());
        assert!(Vector::new(vec![1.0, f64::NAN]).is_err());
        assert!(Vector::new(vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn parse_and_ops() {
        let v = Vector::parse("1, -2, 0.5").unwrap();
        assert_eq!(v.dim(), 3);
        assert_eq!(v[1], -2.0);
        assert!(Vector::parse("1,x").is_err());
        let w = v.add(&v.neg());
        assert!(w.is_zero(0.0));
        assert_eq!(vec2(3.0, 4.0).norm2(), 5.0);
    }

    #[test]
    fn positive_multiple_detection() {
        let k = vec2(1.0, 1.0);
        assert!(k.is_positive_multiple_of(&vec2(2.5, 2.5), 1e-9));
        assert!(!k.is_positive_multiple_of(&vec2(-1.0, -1.0), 1e-9));
        assert!(!k.is_positive_multiple_of(&vec2(1.0, 2.0), 1e-9));
    }
}
