//! Rate-region toolkit for the two-user interference channel with noisy
//! channel-output feedback (IC-NF).
//!
//! The crate has two arithmetic lanes. The linear deterministic (LD) model is
//! exact: bounds are integers, regions are compared with zero tolerance, and
//! the Fourier-Motzkin engine runs over rationals. The Gaussian model is
//! float-based: regions carry an explicit tolerance and all set queries go
//! through membership and boundary sampling.
//!
//! Module map:
//! - [`rational`], [`scalar`]: exact rationals and the scalar abstraction the
//!   geometry is generic over.
//! - [`geometry`]: 2-D rate polytopes (half-space form), unions, membership,
//!   vertex enumeration, boundary sampling, gap-style set comparison.
//! - [`ld`]: the binary linear deterministic channel and its dimension
//!   bookkeeping.
//! - [`ld_region`]: the exact LD capacity region and its special cases.
//! - [`fm`]: Fourier-Motzkin elimination and the rate-split projection.
//! - [`gaussian`]: Gaussian parameterization, achievable (inner) and converse
//!   (outer) regions.
//! - [`gap`]: the constant-gap calculus and the symmetric gap surface.
//! - [`gdof`]: finite-SNR generalized-degrees-of-freedom estimation.
//! - [`selfcheck`]: the acceptance suite, runnable from tests or the CLI.

pub mod fm;
pub mod gap;
pub mod gaussian;
pub mod gdof;
pub mod geometry;
pub mod ld;
pub mod ld_region;
pub mod rational;
pub mod scalar;
pub mod selfcheck;

pub use geometry::{ConvexRateRegion, LinearBound, RatePair, RegionUnion};
pub use ld::LdParams;


use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("region is unbounded: missing a ({0},{1}) bound family")]
    UnboundedRegion(u8, u8),
    #[error("bit-vector length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("no gap case matched the parameters: {0}")]
    NoCaseMatched(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
