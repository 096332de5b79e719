//! Exact decomposition of the pseudo-states `Ξ_{n,ℓ,0}` onto the bound
//! states `Ψ_{n',ℓ',0}`, the partial sums `P(N)²`, and the numerical probes
//! around them (pseudo-eigenvalue residuals, point-spectrum
//! autocorrelation, divergence of the `m ≠ 0` angular densities).

mod amplitude;
mod autocorr;
mod decompose;
mod divergence;
mod residual;

pub use amplitude::Amplitude;
pub use autocorr::{autocorrelation_from_report, point_autocorrelation, Autocorrelation};
pub use decompose::{decompose, decompose_with, CoefficientEntry, DecomposeOptions, DecompositionReport, PartialSum, DEFAULT_N_MAX_CAP};
pub use divergence::divergence_scan;
pub use residual::{residual_check, residual_check_state};

use crate::error::Result;
use crate::exact::{rat, rat_signum, PiSquaredElement};
use crate::hydrogen::{radial, SignConvention};
use crate::specfun::{pq_overlap, q_norm_sq};

/// `∫_0^∞ R_{n',ℓ'}(r) R_{n,ℓ}(r) r² dr`.
pub fn radial_overlap(n: u32, ell: u32, n_p: u32, ell_p: u32) -> Result<Amplitude> {
    let (sign, square) = radial(n, ell)?.overlap_sign_and_square(&radial(n_p, ell_p)?);
    Ok(Amplitude::from_parts_unchecked(sign, square.into()))
}

/// `⟨Θ̄_{ℓ'}, ξ_ℓ⟩` under the default sign convention.
pub fn angular_overlap(ell_xi: u32, ell_theta: u32) -> Amplitude {
    angular_overlap_with(ell_xi, ell_theta, &SignConvention::standard())
}

/// `σ_ℓ √((2ℓ'+1)/2) ∫ Q_ℓ P_{ℓ'} dx / ‖Q_ℓ‖`.
pub fn angular_overlap_with(ell_xi: u32, ell_theta: u32, signs: &SignConvention) -> Amplitude {
    angular_overlap_normed(ell_xi, ell_theta, signs, &q_norm_sq(ell_xi))
}

fn angular_overlap_normed(ell_xi: u32, ell_theta: u32, signs: &SignConvention, norm_sq: &PiSquaredElement) -> Amplitude {
    let pq = pq_overlap(ell_xi, ell_theta);
    let sign = signs.sigma(ell_xi) * rat_signum(&pq);
    if sign == 0 {
        return Amplitude::zero();
    }
    let numerator = PiSquaredElement::rational(rat(2 * ell_theta as i64 + 1, 2) * &pq * &pq);
    let square = numerator.checked_div(norm_sq).expect("Q norm is positive");
    Amplitude::from_parts_unchecked(sign, square)
}

/// `C^{(n)}_{n',ℓ'} = ⟨Ψ_{n',ℓ',0}, Ξ_{n,ℓ,0}⟩` under the default signs.
pub fn coefficient(n: u32, ell: u32, n_p: u32, ell_p: u32) -> Result<Amplitude> {
    coefficient_with(n, ell, n_p, ell_p, &SignConvention::standard())
}

pub fn coefficient_with(n: u32, ell: u32, n_p: u32, ell_p: u32, signs: &SignConvention) -> Result<Amplitude> {
    let radial = radial_overlap(n, ell, n_p, ell_p)?;
    Ok(&radial * &angular_overlap_with(ell, ell_p, signs))
}
