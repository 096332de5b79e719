use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::exact::{rat, rat_to_f64, BigRational, PiSquaredElement, PolynomialQ};
use crate::quadrature::integrate_endpoints;
use crate::specfun::{artanh_cos, legendre_p, legendre_q, q_norm_sq, LegendreQRep};

/// Overall sign `σ_ℓ` of each pseudo angular part. The default is `-1` for
/// every `ℓ`, which makes `ξ_{0,0}(θ) = (√6/π) ln tan(θ/2)`. Squared
/// quantities do not depend on this choice.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignConvention {
    overrides: BTreeMap<u32, i8>,
}

impl SignConvention {
    pub fn standard() -> Self {
        Self::default()
    }

    pub fn with_sign(mut self, ell: u32, sign: i8) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidArgument(format!("sign must be +1 or -1, got {sign}")));
        }
        self.overrides.insert(ell, sign);
        Ok(self)
    }

    pub fn sigma(&self, ell: u32) -> i8 {
        self.overrides.get(&ell).copied().unwrap_or(-1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AngularKind {
    Regular,
    Pseudo,
}

#[derive(Clone, Debug, PartialEq)]
enum Payload {
    /// `√((2ℓ+1)/2) P_ℓ(cos θ)`
    Regular { p: PolynomialQ, scale_sq: BigRational },
    /// `σ Q_ℓ(cos θ) / ‖Q_ℓ‖`
    Pseudo { q: LegendreQRep, norm_sq: PiSquaredElement, norm: f64, sigma: i8 },
}

/// Polar factor of an axially symmetric state, normalized with weight
/// `sin θ` on `[0, π]`.
#[derive(Clone, Debug, PartialEq)]
pub struct AngularPart {
    pub ell: u32,
    payload: Payload,
}

pub fn theta_regular(ell: u32) -> AngularPart {
    AngularPart {
        ell,
        payload: Payload::Regular { p: legendre_p(ell), scale_sq: rat(2 * ell as i64 + 1, 2) },
    }
}

/// Pseudo polar factor with the default sign `σ_ℓ = -1`.
pub fn xi(ell: u32) -> AngularPart {
    xi_with_sign(ell, -1)
}

pub fn xi_with_sign(ell: u32, sigma: i8) -> AngularPart {
    let norm_sq = q_norm_sq(ell);
    let norm = norm_sq.to_f64().sqrt();
    AngularPart {
        ell,
        payload: Payload::Pseudo { q: legendre_q(ell), norm_sq, norm, sigma: sigma.signum() },
    }
}

impl AngularPart {
    pub fn kind(&self) -> AngularKind {
        match self.payload {
            Payload::Regular { .. } => AngularKind::Regular,
            Payload::Pseudo { .. } => AngularKind::Pseudo,
        }
    }

    /// `σ_ℓ` for pseudo parts, `+1` for regular ones.
    pub fn sigma(&self) -> i8 {
        match self.payload {
            Payload::Regular { .. } => 1,
            Payload::Pseudo { sigma, .. } => sigma,
        }
    }

    pub fn eval(&self, theta: f64) -> Result<f64> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::Domain { value: theta, domain: "theta in [0, pi]" });
        }
        match &self.payload {
            Payload::Regular { .. } => Ok(self.eval_near(theta, PI - theta)),
            Payload::Pseudo { .. } => {
                if theta == 0.0 || theta == PI {
                    return Err(Error::SingularPoint { theta });
                }
                Ok(self.eval_near(theta, PI - theta))
            }
        }
    }

    /// Evaluation from the distances to both poles; whichever is smaller
    /// drives the computation so values stay accurate near `θ = π`.
    fn eval_near(&self, d0: f64, dpi: f64) -> f64 {
        let (x, t) = if dpi < d0 {
            (-dpi.cos(), -artanh_cos(dpi))
        } else {
            (d0.cos(), artanh_cos(d0))
        };
        match &self.payload {
            Payload::Regular { p, scale_sq } => rat_to_f64(scale_sq).sqrt() * p.eval_f64(x),
            Payload::Pseudo { q, norm, sigma, .. } => *sigma as f64 * q.eval_with_artanh(x, t) / norm,
        }
    }

    /// Exact `∫_0^π sin θ |Θ(θ)|² dθ`. For the pseudo kind the numerator is
    /// expanded through moments of `artanh`, independently of the
    /// partial-fraction value used as the normalization.
    pub fn norm_integral_exact(&self) -> PiSquaredElement {
        match &self.payload {
            Payload::Regular { p, scale_sq } => PiSquaredElement::rational(scale_sq * (p * p).integrate_symmetric()),
            Payload::Pseudo { q, norm_sq, .. } => {
                q.norm_sq_by_moments().checked_div(norm_sq).expect("norm is positive")
            }
        }
    }

    /// `∫_0^π sin θ |Θ(θ)|² dθ` by tanh-sinh quadrature in θ.
    pub fn norm_integral_quad(&self, tol: f64) -> Result<f64> {
        let r = integrate_endpoints(
            |_, d0, dpi| {
                let v = self.eval_near(d0, dpi);
                d0.min(dpi).sin() * v * v
            },
            0.0,
            PI,
            tol,
        )?;
        Ok(r.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn regular_ground_value() {
        let t = theta_regular(0);
        for theta in [0.0, 0.4, FRAC_PI_2, PI] {
            assert!((t.eval(theta).unwrap() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        }
        assert!(theta_regular(1).eval(FRAC_PI_2).unwrap().abs() < 1e-15);
        assert_eq!(theta_regular(3).norm_integral_exact(), PiSquaredElement::one());
    }

    #[test]
    fn xi_zero_matches_log_tan() {
        let x = xi(0);
        assert!(x.eval(FRAC_PI_2).unwrap().abs() < 1e-15);
        let expected = 6f64.sqrt() / PI * (PI / 8.0).tan().ln();
        assert!((x.eval(FRAC_PI_4).unwrap() - expected).abs() < 1e-15);
        assert!((expected + 0.687_204_166_5).abs() < 1e-9);
        for theta in [0.01f64, 0.5, 1.2, 2.0, 3.0] {
            let direct = 6f64.sqrt() / PI * (theta / 2.0).tan().ln();
            assert!((x.eval(theta).unwrap() - direct).abs() < 1e-13);
        }
    }

    #[test]
    fn pseudo_axis_is_singular() {
        assert!(matches!(xi(2).eval(0.0), Err(Error::SingularPoint { .. })));
        assert!(matches!(xi(2).eval(PI), Err(Error::SingularPoint { .. })));
        assert!(xi(1).eval(1e-8).unwrap().abs() > xi(1).eval(1e-4).unwrap().abs());
    }

    #[test]
    fn pseudo_parity() {
        for ell in 0..=6 {
            let x = xi(ell);
            let s = if ell % 2 == 0 { -1.0 } else { 1.0 };
            for theta in [0.2, 0.9, 1.4] {
                let a = x.eval(theta).unwrap();
                let b = x.eval(PI - theta).unwrap();
                assert!((b - s * a).abs() < 1e-13 * (1.0 + a.abs()));
            }
        }
    }

    #[test]
    fn exact_norms() {
        for ell in 0..=8 {
            assert_eq!(xi(ell).norm_integral_exact(), PiSquaredElement::one());
            assert_eq!(theta_regular(ell).norm_integral_exact(), PiSquaredElement::one());
        }
    }

    #[test]
    fn quadrature_norms() {
        for ell in 0..=8 {
            let v = xi(ell).norm_integral_quad(1e-13).unwrap();
            assert!((v - 1.0).abs() < 1e-12, "l={ell}: {v}");
        }
    }

    #[test]
    fn sign_conventions() {
        let c = SignConvention::standard().with_sign(2, 1).unwrap();
        assert_eq!(c.sigma(0), -1);
        assert_eq!(c.sigma(2), 1);
        assert!(SignConvention::standard().with_sign(0, 0).is_err());
        let a = xi_with_sign(2, 1).eval(0.3).unwrap();
        assert_eq!(a, -xi(2).eval(0.3).unwrap());
    }
}
