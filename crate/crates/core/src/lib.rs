//! Exact transverse Poisson structures to nilpotent orbits of sl_n.
//!
//! A nilpotent `e` comes from a partition of `n` ([`orbit`]). A complement
//! to the centralizer ([`complement`]) fixes the slice `e + Σ q_s Z̄_s`, and
//! [`dirac`] assembles the constraint matrices and returns
//! `Λ = A + Dᵀ C⁻¹ D` over ℚ(q). [`engine::run`] chains these steps.
//! [`check`] runs the invariant suites and the shipped examples.

pub mod check;
pub mod compare;
pub mod complement;
pub mod dirac;
pub mod engine;
pub mod error;
pub mod fixtures;
pub mod lie;
pub mod linalg;
pub mod orbit;
pub mod poly;
pub mod rational;
pub mod report;

pub use error::{Error, Result};
