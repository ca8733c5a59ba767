//! Extended scalar values: the reals together with `-inf` and the symbol
//! `nu` marking an empty infimum.
//!
//! The value functional evaluated anywhere returns one of these three
//! variants and never `+inf`: an empty feasible set yields [`ExtScalar::Nu`],
//! an unbounded-below one yields [`ExtScalar::NegInf`]. `nu` is incomparable
//! to every real, so "not <=" is not the same as ">".

use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A value in `R ∪ {-inf, nu}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtScalar {
    /// A finite real. The payload is never NaN or an IEEE infinity.
    Real(f64),
    /// Unbounded below.
    NegInf,
    /// The infimum of the empty set; incomparable to every real.
    Nu,
}

impl ExtScalar {
    /// Wraps a finite real, rejecting NaN and IEEE infinities.
    pub fn real(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(ExtScalar::Real(value))
        } else {
            Err(Error::InvalidInput(format!(
                "extended scalar payload must be finite, got {value}"
            )))
        }
    }

    /// Adds a finite real; `-inf` and `nu` absorb.
    pub fn add(self, t: f64) -> Self {
        assert!(t.is_finite(), "translation offset must be finite");
        match self {
            ExtScalar::Real(x) => ExtScalar::Real(x + t),
            other => other,
        }
    }

    /// Divides the real payload by `lambda > 0`; `-inf` and `nu` absorb.
    ///
    /// Replacing the direction `k` by `lambda * k` rescales the functional
    /// by `1 / lambda`, which is exactly this operation on its values.
    pub fn scale(self, lambda: f64) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::InvalidInput(format!(
                "scale factor must be a positive real, got {lambda}"
            )));
        }
        Ok(match self {
            ExtScalar::Real(x) => ExtScalar::Real(x / lambda),
            other => other,
        })
    }

    /// `self <= t`. False for `nu` (and so is [`Self::gt`]: `nu` fails both).
    pub fn le(self, t: f64) -> bool {
        match self {
            ExtScalar::Real(x) => x <= t,
            ExtScalar::NegInf => true,
            ExtScalar::Nu => false,
        }
    }

    /// `self < t`; false for `nu`.
    pub fn lt(self, t: f64) -> bool {
        match self {
            ExtScalar::Real(x) => x < t,
            ExtScalar::NegInf => true,
            ExtScalar::Nu => false,
        }
    }

    /// `self >= t`; false for `nu` and `-inf`.
    pub fn ge(self, t: f64) -> bool {
        match self {
            ExtScalar::Real(x) => x >= t,
            ExtScalar::NegInf | ExtScalar::Nu => false,
        }
    }

    /// `self > t`; false for `nu` and `-inf`.
    pub fn gt(self, t: f64) -> bool {
        match self {
            ExtScalar::Real(x) => x > t,
            ExtScalar::NegInf | ExtScalar::Nu => false,
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, ExtScalar::Real(_))
    }

    pub fn is_nu(self) -> bool {
        matches!(self, ExtScalar::Nu)
    }

    pub fn as_real(self) -> Option<f64> {
        match self {
            ExtScalar::Real(x) => Some(x),
            _ => None,
        }
    }

    /// Variant name as printed in reports: `real`, `neginf` or `nu`.
    pub fn class_name(self) -> &'static str {
        match self {
            ExtScalar::Real(_) => "real",
            ExtScalar::NegInf => "neginf",
            ExtScalar::Nu => "nu",
        }
    }

    /// Ordering used when taking minima: `-inf < real < real`, with `nu`
    /// incomparable (`None`). Argmin logic skips `nu` entries.
    pub fn min_order(self, other: ExtScalar) -> Option<std::cmp::Ordering> {
        use std::cmp::Ordering::*;
        match (self, other) {
            (ExtScalar::Nu, _) | (_, ExtScalar::Nu) => None,
            (ExtScalar::NegInf, ExtScalar::NegInf) => Some(Equal),
            (ExtScalar::NegInf, _) => Some(Less),
            (_, ExtScalar::NegInf) => Some(Greater),
            (ExtScalar::Real(a), ExtScalar::Real(b)) => a.partial_cmp(&b),
        }
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtScalar::Real(x) => write!(f, "{x}"),
            ExtScalar::NegInf => write!(f, "-inf"),
            ExtScalar::Nu => write!(f, "nu"),
        }
    }
}

// JSON: a finite number, the string "-inf", or the string "nu". Encoding the
// non-real variants as strings keeps round-trips lossless without leaning on
// IEEE infinities.
impl Serialize for ExtScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtScalar::Real(x) => serializer.serialize_f64(*x),
            ExtScalar::NegInf => serializer.serialize_str("-inf"),
            ExtScalar::Nu => serializer.serialize_str("nu"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ExtVisitor;
        impl<'de> Visitor<'de> for ExtVisitor {
            type Value = ExtScalar;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a finite number, \"-inf\" or \"nu\"")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<ExtScalar, E> {
                ExtScalar::real(v).map_err(|_| E::custom("number must be finite"))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExtScalar, E> {
                self.visit_f64(v as f64)
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExtScalar, E> {
                self.visit_f64(v as f64)
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExtScalar, E> {
                match v {
                    "-inf" => Ok(ExtScalar::NegInf),
                    "nu" => Ok(ExtScalar::Nu),
                    other => Err(E::custom(format!("unknown extended scalar \"{other}\""))),
                }
            }
        }
        deserializer.deserialize_any(ExtVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_examples() {
        assert_eq!(ExtScalar::Real(-1.0).add(2.0), ExtScalar::Real(1.0));
        assert_eq!(ExtScalar::NegInf.add(5.0), ExtScalar::NegInf);
        assert_eq!(ExtScalar::Nu.add(5.0), ExtScalar::Nu);
    }

    #[test]
    fn scale_examples() {
        assert_eq!(
            ExtScalar::Real(3.0).scale(3.0).unwrap(),
            ExtScalar::Real(1.0)
        );
        assert_eq!(
            ExtScalar::Real(-2.0).scale(2.0).unwrap(),
            ExtScalar::Real(-1.0)
        );
        assert_eq!(ExtScalar::Nu.scale(2.0).unwrap(), ExtScalar::Nu);
        assert!(ExtScalar::Real(1.0).scale(0.0).is_err());
        assert!(ExtScalar::Real(1.0).scale(-1.0).is_err());
    }

    #[test]
    fn nu_fails_both_directions() {
        // nu satisfies neither <= nor >, so "not <=" cannot be read as ">".
        assert!(!ExtScalar::Nu.le(0.0));
        assert!(!ExtScalar::Nu.gt(0.0));
        assert!(!ExtScalar::Nu.lt(0.0));
        assert!(!ExtScalar::Nu.ge(0.0));
    }

    #[test]
    fn neginf_below_everything() {
        assert!(ExtScalar::NegInf.le(-1e9));
        assert!(ExtScalar::NegInf.lt(f64::MIN));
        assert!(!ExtScalar::NegInf.ge(-1e9));
    }

    #[test]
    fn exactly_one_of_le_gt_unless_nu() {
        for v in [ExtScalar::Real(1.5), ExtScalar::Real(-3.0), ExtScalar::NegInf] {
            for t in [-10.0, -3.0, 0.0, 1.5, 7.0] {
                assert_ne!(v.le(t), v.gt(t), "{v:?} vs {t}");
            }
        }
        assert_eq!(ExtScalar::Nu.le(0.0), ExtScalar::Nu.gt(0.0));
    }

    #[test]
    fn add_is_associative_exactly() {
        for v in [ExtScalar::Real(0.125), ExtScalar::NegInf, ExtScalar::Nu] {
            assert_eq!(v.add(0.25).add(0.5), v.add(0.75));
        }
    }

    #[test]
    fn json_round_trip() {
        let cases = [ExtScalar::Real(-1.0), ExtScalar::NegInf, ExtScalar::Nu];
        for v in cases {
            let s = serde_json::to_string(&v).unwrap();
            let back: ExtScalar = serde_json::from_str(&s).unwrap();
            assert_eq!(v, back);
        }
        assert_eq!(serde_json::to_string(&ExtScalar::Nu).unwrap(), "\"nu\"");
        assert_eq!(
            serde_json::to_string(&ExtScalar::NegInf).unwrap(),
            "\"-inf\""
        );
        assert!(serde_json::from_str::<ExtScalar>("\"inf\"").is_err());
    }

    #[test]
    fn rejects_non_finite() {
        assert!(ExtScalar::real(f64::NAN).is_err());
        assert!(ExtScalar::real(f64::INFINITY).is_err());
        assert!(ExtScalar::real(f64::NEG_INFINITY).is_err());
    }
}
