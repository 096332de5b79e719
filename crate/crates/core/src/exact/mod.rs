//! Exact arithmetic: rationals over big integers, polynomials with rational
//! coefficients, and the field ℚ(π²).
//!
//! Every squared overlap and every partial sum of squared overlaps handled by
//! the spectral code is an element of ℚ(π²), so results stay exact until the
//! very last step where they are rendered or evaluated.

mod pi;
mod pisq;
mod poly;

pub use num_rational::BigRational;
pub use pi::{pi_bounds, pi_squared_bounds};
pub use pisq::{pisq_eval, HighPrecision, PiSquaredElement};
pub use poly::PolynomialQ;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `num / den` as a reduced rational. Panics on a zero denominator, so use
/// [`checked_div`] for anything data dependent.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

pub fn checked_div(a: &BigRational, b: &BigRational) -> Result<BigRational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Sign of a rational as -1, 0 or +1.
pub fn rat_signum(a: &BigRational) -> i8 {
    if a.is_zero() {
        0
    } else if a.is_positive() {
        1
    } else {
        -1
    }
}

/// Nearest `f64`. Handles numerators and denominators far outside the `f64`
/// range by scaling with powers of two first.
pub fn rat_to_f64(a: &BigRational) -> f64 {
    if let Some(v) = a.to_f64() {
        if v.is_finite() && (v != 0.0 || a.is_zero()) {
            return v;
        }
    }
    let num_bits = a.numer().bits() as i64;
    let den_bits = a.denom().bits() as i64;
    let shift = num_bits - den_bits;
    // Bring the ratio into [2^-64, 2^64] with 64 bits of mantissa to spare.
    let scaled = if shift > 0 {
        BigRational::new(a.numer() << 64usize, a.denom() << (shift as usize))
    } else {
        BigRational::new(a.numer() << ((64 - shift) as usize), a.denom().clone())
    };
    let mantissa = scaled.to_f64().unwrap_or(f64::NAN);
    mantissa * 2f64.powi((shift - 64) as i32)
}

/// Exact rational value of a finite `f64`.
pub fn rat_from_f64(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or_else(|| Error::InvalidArgument(format!("{x} is not finite")))
}
