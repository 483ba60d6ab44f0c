//! Exact arithmetic for the integral rotation groups SO3(Z[i]) and
//! SO(2,1)_Z realized as groups of fractional linear transformations,
//! together with Ford-type fundamental domains on hyperbolic 2- and
//! 3-space and the reduction algorithms that move an arbitrary point
//! into them while tracking an exact group-element witness.
//!
//! The crate is organized around a small exact-arithmetic kernel and a
//! floating-point geometry layer:
//!
//! - [`gaussian`]: the Gaussian integers Z[i] (arbitrary precision),
//!   their standard-associate normalization, Euclidean gcd, residue
//!   systems, and the cyclotomic localization Z[w8, 1/(1+i)] where
//!   w8^2 = i.
//! - [`matrix`]: 2x2 and 3x3 matrices over the cyclotomic ring, shared
//!   by every module that multiplies group elements.
//! - [`hecke`]: reduction of SL2(Z[i]) mod (1+i), the Xi subsets, and
//!   the Gaussian Hecke decomposition of determinant-N matrices into
//!   upper-triangular orbit representatives.
//! - [`orthogonal`]: the spin cover conj: SL(2,C) -> SO(3,C) in an
//!   orthonormal basis of sl2, exact membership in SO3(Z[i]), and the
//!   six-coset structure of its preimage.
//! - [`hyperbolic`]: the quaternion upper half-space model of H^3,
//!   Mobius action, the Picard domain and the Ford-type domain F(G),
//!   and point reduction with exact witnesses.
//! - [`realform`]: the split real form SO(2,1), its integral points
//!   inside SL(2,R), the H^2 domain, and the geometric relation between
//!   the real and complex fundamental domains.
//! - [`geometry`]: JSON/SVG export of the fixed fundamental domains.
//! - [`verify`]: deterministic, seedable property suites used by the
//!   CLI `verify` subcommand and the acceptance tests.
//!
//! Group elements and witnesses are exact (never floats); only points
//! of hyperbolic space and distances are represented in binary64.

pub mod error;
pub mod gaussian;
pub mod geometry;
pub mod hecke;
pub mod hyperbolic;
pub mod matrix;
pub mod orthogonal;
pub mod realform;
pub mod rng;
pub mod sample;
pub mod verify;

pub use error::Error;
pub use gaussian::{CycloNum, GaussianInt, ResidueSystem};
pub use hyperbolic::{H2Point, H3Point, ReductionResult};
pub use matrix::{Mat2, Mat3};

/// Default geometric tolerance used by the reduction algorithms and the
/// domain membership tests. Overridable per call and, in the CLI, via
/// the `FORD_EPS` environment variable.
pub const DEFAULT_EPS: f64 = 1e-9;

/// Iteration cap for the reduction loops; exceeding it is reported as a
/// nonconvergence error rather than looping forever.
pub const MAX_REDUCTION_ITERATIONS: usize = 10_000;
