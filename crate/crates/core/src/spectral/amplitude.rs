use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{pisq_eval, rat_to_f64, BigRational, PiSquaredElement};

/// Signed square root `sign · √square` of a nonnegative element of ℚ(π²).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Amplitude {
    sign: i8,
    square: PiSquaredElement,
}

impl Amplitude {
    pub fn new(sign: i8, square: PiSquaredElement) -> Result<Self> {
        if !(-1..=1).contains(&sign) {
            return Err(Error::InvalidArgument(format!("amplitude sign must be -1, 0 or 1, got {sign}")));
        }
        if (sign == 0) != square.is_zero() {
            return Err(Error::InvalidArgument("amplitude sign is zero exactly when its square is".into()));
        }
        if square.signum() < 0 {
            return Err(Error::InvalidArgument(format!("negative square {square}")));
        }
        Ok(Self { sign, square })
    }

    pub fn zero() -> Self {
        Self { sign: 0, square: PiSquaredElement::zero() }
    }

    pub(crate) fn from_parts_unchecked(sign: i8, square: PiSquaredElement) -> Self {
        debug_assert_eq!(sign == 0, square.is_zero());
        Self { sign, square }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn square(&self) -> &PiSquaredElement {
        &self.square
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn negated(&self) -> Self {
        Self { sign: -self.sign, square: self.square.clone() }
    }

    pub fn to_f64(&self) -> f64 {
        self.sign as f64 * self.square.to_f64().sqrt()
    }

    /// Rational approximation within `10^-digits` of the true value.
    pub fn value(&self, digits: u32) -> Result<BigRational> {
        if self.sign == 0 {
            return Ok(BigRational::zero());
        }
        // √ of an approximation good to 2·digits+4 places, truncated at
        // digits+2 places.
        let sq = pisq_eval(&self.square, 2 * digits + 4)?;
        let scale = BigInt::from(10).pow(2 * (digits + 2));
        let scaled = (sq.value() * BigRational::from_integer(scale)).to_integer();
        if scaled.is_negative() {
            return Err(Error::Numerical(format!("square {} evaluated negative", self.square)));
        }
        let root = scaled.sqrt();
        let value = BigRational::new(root, BigInt::from(10).pow(digits + 2));
        Ok(if self.sign < 0 { -value } else { value })
    }

    pub fn value_f64(&self, digits: u32) -> Result<f64> {
        Ok(rat_to_f64(&self.value(digits)?))
    }
}

impl Mul for &Amplitude {
    type Output = Amplitude;
    fn mul(self, rhs: &Amplitude) -> Amplitude {
        let sign = self.sign * rhs.sign;
        if sign == 0 {
            return Amplitude::zero();
        }
        Amplitude { sign, square: &self.square * &rhs.square }
    }
}
