//! Exploration-walk simulation of the giant component in random
//! `k`-uniform hypergraphs `H_k(n, p)`, together with the deterministic
//! limit theory it is measured against.
//!
//! - [`theory`]: dual parameter, survival probabilities, variance constant,
//!   and the deterministic trajectories `g`, `x_t`, `β_t`, `u_t`.
//! - [`explorer`]: the explored/active/unseen exploration process, in an
//!   implicit mode that samples edges on the fly and an exact replay mode
//!   over an explicit hypergraph, plus the martingale decomposition of the walk.
//! - [`hypergraph`]: explicit `H_k(n, p)` sampling and union-find components,
//!   used as the ground-truth oracle.
//! - [`stats`]: normality testing, Kolmogorov–Smirnov and chi-square
//!   comparisons, and the Brownian-excursion oracle for the critical window.
//! - [`experiment`]: seeded, parallel experiment runners behind the
//!   `hypergiant` binary.

// `!(x > 0.0)` is used on purpose so NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod binom;
pub mod error;
pub mod experiment;
pub mod explorer;
pub mod hypergraph;
pub mod seed;
pub mod stats;
pub mod theory;

pub use error::{Error, Result};
pub use theory::{ModelParams, TheoryValues};
