//! Scalar abstraction shared by the exact (rational) and float region lanes.

use crate::rational::{rat_from_f64, rat_int, rat_to_f64, Rational};
use num_traits::Zero;

/// Arithmetic interface the 2-D geometry is generic over.
///
/// `Rational` gives the exact LD lane; `f64` gives the Gaussian lane. The
/// geometry never divides by a scalar, only by small integer determinants,
/// which keeps rational denominators in check.
pub trait RateScalar: Clone + PartialEq + PartialOrd + std::fmt::Debug + Send + Sync {
    const EXACT: bool;
    fn zero() -> Self;
    fn from_int(v: i64) -> Self;
    /// Conversion from `f64`; exact (bit-for-bit) in the rational lane.
    fn from_f64(x: f64) -> Self;
    fn to_f64(&self) -> f64;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn scale(&self, k: i64) -> Self;
    fn div_int(&self, k: i64) -> Self;
    /// `self <= bound + slack`; slack is ignored in the exact lane.
    fn le_slack(&self, bound: &Self, slack: f64) -> bool;
}

impl RateScalar for f64 {
    const EXACT: bool = false;
    fn zero() -> Self {
        0.0
    }
    fn from_int(v: i64) -> Self {
        v as f64
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn scale(&self, k: i64) -> Self {
        self * k as f64
    }
    fn div_int(&self, k: i64) -> Self {
        self / k as f64
    }
    fn le_slack(&self, bound: &Self, slack: f64) -> bool {
        *self <= bound + slack
    }
}

impl RateScalar for Rational {
    const EXACT: bool = true;
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_int(v: i64) -> Self {
        rat_int(v)
    }
    fn from_f64(x: f64) -> Self {
        rat_from_f64(x)
    }
    fn to_f64(&self) -> f64 {
        rat_to_f64(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn scale(&self, k: i64) -> Self {
        self * Rational::from_integer(k as i128)
    }
    fn div_int(&self, k: i64) -> Self {
        self / Rational::from_integer(k as i128)
    }
    fn le_slack(&self, bound: &Self, _slack: f64) -> bool {
        self <= bound
    }
}
