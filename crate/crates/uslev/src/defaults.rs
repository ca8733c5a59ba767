//! Default tolerances and solver knobs.
//!
//! Membership tests against a halfspace `<a, y> <= b` use the blended slack
//! `tol * (1 + |b|)` so behavior is scale-free on desk-scale data; strict
//! (interior) tests use the same blend with [`STRICT_MARGIN`] subtracted
//! instead of added.

/// Default membership tolerance; overridable via the `USLEV_TOL` env var in
/// the CLI.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Margin for algebraic-interior (strict) membership.
pub const STRICT_MARGIN: f64 = 1e-9;

/// Two points are "the same outcome" if every coordinate differs by at most
/// this. Used by the `\ {y0}` part of the efficiency definitions.
pub const POINT_EQ_TOL: f64 = 1e-12;

/// Absolute tie window when collecting argmin index sets.
pub const ARGMIN_TIE_TOL: f64 = 1e-9;

/// A row direction component `d = <a, k>` below `DIR_ZERO_REL * (1 + |a||k|)`
/// is treated as zero to avoid catastrophic division.
pub const DIR_ZERO_REL: f64 = 1e-12;

/// Initial half-width of the bisection bracket.
pub const BRACKET_INIT: f64 = 1.0;

/// Bracket doublings before giving up; covers magnitudes up to ~1e18.
pub const MAX_DOUBLINGS: u32 = 60;

/// Strict-positivity threshold in pointwise efficiency characterizations.
/// Values in `(0, THRESH]` are reported indeterminate, never classified.
pub const STRICT_POSITIVITY: f64 = 1e-9;
