use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::exact::{factorial, rat, rat_signum, rat_to_f64, BigRational, PolynomialQ};
use crate::specfun::laguerre;

use super::QuantumNumbers;

/// `R_{n,ℓ}(r) = √norm_sq · poly(r) · r^ℓ · e^{-decay_rate·r}`, with
/// `poly(r) = L_{n-ℓ-1}^{2ℓ+1}(2r/n)` and `norm_sq` fixed by requiring
/// `∫ R² r² dr = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RadialFunction {
    pub n: u32,
    pub ell: u32,
    pub poly: PolynomialQ,
    pub decay_rate: BigRational,
    pub norm_sq: BigRational,
}

/// `∫_0^∞ r^k e^{-αr} dr = k!/α^{k+1}`
pub fn gamma_moment(k: u32, alpha: &BigRational) -> BigRational {
    BigRational::from_integer(factorial(k)) / alpha.pow(k as i32 + 1)
}

pub fn radial(n: u32, ell: u32) -> Result<RadialFunction> {
    QuantumNumbers::axial(n, ell)?;
    let poly = laguerre(2 * ell + 1, n - ell - 1).compose_scale(&rat(2, n as i64));
    let mut out = RadialFunction { n, ell, poly, decay_rate: rat(1, n as i64), norm_sq: BigRational::zero() };
    out.norm_sq = out.raw_overlap(&out).recip();
    Ok(out)
}

impl RadialFunction {
    /// `∫ poly·poly'·r^{ℓ+ℓ'+2}·e^{-(α+α')r} dr` without normalization.
    fn raw_overlap(&self, other: &Self) -> BigRational {
        self.raw_moment(other, self.ell + other.ell + 2)
    }

    fn raw_moment(&self, other: &Self, power: u32) -> BigRational {
        let alpha = &self.decay_rate + &other.decay_rate;
        let product = &self.poly * &other.poly;
        product
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(BigRational::zero(), |acc, (k, c)| acc + c * gamma_moment(k as u32 + power, &alpha))
    }

    /// Exact `∫ R² r² dr`; one by construction.
    pub fn norm_integral(&self) -> BigRational {
        &self.norm_sq * self.raw_overlap(self)
    }

    /// Sign and square of `∫ R_self R_other r² dr`. The square is rational
    /// because both normalizations are.
    pub fn overlap_sign_and_square(&self, other: &Self) -> (i8, BigRational) {
        let raw = self.raw_overlap(other);
        let sign = rat_signum(&raw);
        (sign, &raw * &raw * &self.norm_sq * &other.norm_sq)
    }

    /// `⟨1/r⟩ = ∫ R² r dr`, which equals `1/n²`.
    pub fn expectation_inv_r(&self) -> BigRational {
        &self.norm_sq * self.raw_moment(self, 2 * self.ell + 1)
    }

    pub fn eval(&self, r: f64) -> f64 {
        rat_to_f64(&self.norm_sq).sqrt()
            * self.poly.eval_f64(r)
            * r.powi(self.ell as i32)
            * (-rat_to_f64(&self.decay_rate) * r).exp()
    }

    /// Standard phase: `R > 0` near the origin.
    pub fn is_positive_at_origin(&self) -> bool {
        self.poly.coeff(0).is_positive()
    }
}
