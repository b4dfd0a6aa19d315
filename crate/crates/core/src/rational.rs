//! Exact rational arithmetic for the LD lane and the Fourier-Motzkin engine.
//!
//! `Rational` is a reduced `i128` ratio. All values that reach it are small:
//! LD bounds are integers below a few hundred, and float inputs are snapped
//! through their exact binary representation (mantissa over a power of two),
//! so intermediate products stay far from the `i128` range.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Rational = Ratio<i128>;

/// Exact conversion of a finite `f64` into a rational.
///
/// The result equals the binary value of `x` bit for bit. Panics on
/// non-finite input or magnitudes outside what `i128` can hold exactly
/// (|x| must lie in roughly [1e-30, 1e18] or be zero).
pub fn rat_from_f64(x: f64) -> Rational {
    assert!(x.is_finite(), "cannot snap non-finite value {x} to a rational");
    if x == 0.0 {
        return Rational::zero();
    }
    let bits = x.to_bits();
    let sign: i128 = if bits >> 63 == 1 { -1 } else { 1 };
    let biased = ((bits >> 52) & 0x7ff) as i64;
    let frac = (bits & ((1u64 << 52) - 1)) as i128;
    let (mut mant, mut exp) = if biased == 0 {
        (frac, -1074i64)
    } else {
        (frac | (1i128 << 52), biased - 1075)
    };
    while mant != 0 && mant & 1 == 0 && exp < 0 {
        mant >>= 1;
        exp += 1;
    }
    if exp >= 0 {
        assert!(exp <= 60, "value {x} too large for exact i128 rational");
        Rational::from_integer(sign * (mant << exp))
    } else {
        assert!(exp >= -100, "value {x} too small for exact i128 rational");
        Rational::new(sign * mant, 1i128 << (-exp) as u32)
    }
}

pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(v as i128)
}

pub fn rat_to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Positive part, `max(r, 0)`.
pub fn rat_pos(r: Rational) -> Rational {
    if r.is_negative() {
        Rational::zero()
    } else {
        r
    }
}

/// Renders `p/q` (or just `p` for integers), the form used in JSON output.
pub fn rat_display(r: &Rational) -> String {
    if r.denom() == &1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snaps_floats_exactly() {
        assert_eq!(rat_from_f64(0.5), Rational::new(1, 2));
        assert_eq!(rat_from_f64(-1.25), Rational::new(-5, 4));
        assert_eq!(rat_from_f64(7.0), rat_int(7));
        assert_eq!(rat_from_f64(0.0), Rational::zero());
        // 0.1 is not exactly representable; its snap must equal the binary value.
        let r = rat_from_f64(0.1);
        assert_eq!(rat_to_f64(&r), 0.1);
        assert_ne!(r, Rational::new(1, 10));
    }

    #[test]
    fn displays_as_p_over_q() {
        assert_eq!(rat_display(&rat_int(7)), "7");
        assert_eq!(rat_display(&Rational::new(-3, 2)), "-3/2");
    }

    #[test]
    fn positive_part() {
        assert_eq!(rat_pos(rat_int(-4)), rat_int(0));
        assert_eq!(rat_pos(Rational::new(1, 3)), Rational::new(1, 3));
    }
}
