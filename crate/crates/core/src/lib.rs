//! Exact computation of degrees of Stiefel manifolds.
//!
//! The Stiefel manifold `St(k, n)` is the Zariski closure of the set of
//! complex `k x n` matrices `A` with `A A^T = id_k`, i.e. the variety of
//! `k` orthonormal vectors in `n`-space. This crate computes its degree
//! as an embedded affine variety, exactly, by three independent routes:
//!
//! * the complete-intersection (Bezout) count `2^binom(k+1, 2)` for
//!   `n >= 2k - 1`,
//! * a binomial determinant equal to `2^k` times a count of
//!   non-intersecting lattice paths for `k + 1 <= n <= 2k - 1`,
//! * a symbolic integral of products of alternating polynomials arising
//!   from volumes of Gelfand-Tsetlin polytopes.
//!
//! The supporting stack (arbitrary-precision arithmetic, partitions and
//! dominant weights of `SO(n)`, Gelfand-Tsetlin pattern enumeration,
//! multivariate polynomial integration, polytope volumes) is exposed as
//! public modules so each layer can be exercised and cross-checked on
//! its own.
//!
//! Everything is exact: no floating point is used anywhere.

pub mod checks;
pub mod degree;
pub mod error;
pub mod exact;
pub mod gt;
pub mod symb;
pub mod volumes;
pub mod weights;

pub use degree::{degree, degree_table, DegreeResult, Method, PathConfig, Regime};
pub use error::{Error, Result};
pub use exact::Matrix;
pub use gt::{GTFilling, GTShape};
pub use symb::MultiPoly;
pub use volumes::VolumeFormula;
pub use weights::{Partition, Rank};
