//! Scalarization with uniform sublevel sets.
//!
//! This crate evaluates the translation-invariant functional
//! `phi[A,k](y) = inf { t | y in A + t*k }` over finite-dimensional set
//! expressions, represents binary preference relations by domination sets,
//! enumerates efficient and weakly efficient points of finite outcome
//! clouds, and certifies them through reference-point, bound-anchored and
//! norm-based scalarizations. All sublevel sets of `phi[A,k]` are
//! translates of the single set `A` along `k`, which is what ties the
//! scalar minimization problems back to the vector order.
//!
//! The functional takes values in the reals extended by `-inf` and the
//! symbol `nu` (the infimum of an empty set); it never takes `+inf`.
//!
//! Modules mirror the pipeline: [`sets`] describes geometry, [`phi`]
//! evaluates the functional, [`norms`] relates it to gauges and order-unit
//! norms, [`order`] and [`efficiency`] handle domination relations and
//! efficient points, [`scalarize`] runs the certification drivers, and
//! [`suites`] bundles the seeded property audits behind `uslev check`.
//!
//! The accompanying guide under `book/` walks through the concepts; its
//! code snippets compile and run as doc-tests of this crate, so the book
//! and the library cannot drift apart silently.

pub mod cli;
pub mod defaults;
pub mod efficiency;
pub mod error;
pub mod extvalues;
pub mod jsonfmt;
pub mod norms;
pub mod order;
pub mod phi;
pub mod sampling;
pub mod scalarize;
pub mod sets;
pub mod suites;
pub mod vector;

pub use error::{Error, Result};
pub use extvalues::ExtScalar;
pub use vector::Vector;

// Book chapters double as doc-tests: every fenced Rust block in the guide
// is compiled and run by `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/functional.md")]
    pub struct FunctionalChapter;
    #[doc = include_str!("../../../book/src/sets.md")]
    pub struct SetsChapter;
    #[doc = include_str!("../../../book/src/orders.md")]
    pub struct OrdersChapter;
    #[doc = include_str!("../../../book/src/efficiency.md")]
    pub struct EfficiencyChapter;
    #[doc = include_str!("../../../book/src/scalarization.md")]
    pub struct ScalarizationChapter;
    #[doc = include_str!("../../../book/src/norms.md")]
    pub struct NormsChapter;
}
