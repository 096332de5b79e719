use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::hydrogen::xi;
use crate::quadrature::integrate;
use crate::specfun::{assoc_legendre_q_theta, SUPPORTED_ORDERS};

/// `I(ε) = ∫_ε^{π-ε} sin θ |Q_ℓ^m(cos θ)|² dθ` for each cutoff.
///
/// `m = 0` uses the normalized `ξ_ℓ`, for which the integrals converge to
/// one. The integrand is symmetric about `π/2`, so `I(ε) = 2∫_ε^{π/2}`, and
/// each gap between cutoffs is integrated in `u = ln θ`, where the
/// `1/θ` tail of the `m ≠ 0` densities is flat.
pub fn divergence_scan(ell: u32, m: u32, epsilons: &[f64]) -> Result<Vec<f64>> {
    if m != 0 && !SUPPORTED_ORDERS.contains(&(ell, m)) {
        return Err(Error::UnsupportedOrder { ell, m });
    }
    if epsilons.is_empty() {
        return Err(Error::InvalidArgument("no cutoffs given".into()));
    }
    for &e in epsilons {
        if !(e > 0.0 && e < FRAC_PI_2) {
            return Err(Error::InvalidArgument(format!("cutoff {e} is outside (0, pi/2)")));
        }
    }
    if epsilons.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidArgument("cutoffs must be strictly decreasing".into()));
    }

    let pseudo = xi(ell);
    let density = |theta: f64| -> f64 {
        let v = if m == 0 { pseudo.eval(theta) } else { assoc_legendre_q_theta(ell, m, theta) };
        let v = v.expect("theta is interior");
        theta.sin() * v * v
    };
    let in_log = |u: f64| {
        let theta = u.exp();
        density(theta) * theta
    };

    let mut total = 0.0;
    let mut upper = FRAC_PI_2;
    let mut out = Vec::with_capacity(epsilons.len());
    for &eps in epsilons {
        let (a, b) = (eps.ln(), upper.ln());
        // Pieces grow like ε^{-2m+2} near the axis, so the tolerance is
        // taken relative to a three-point estimate of the piece.
        let scale = (b - a) * (in_log(a) + in_log(0.5 * (a + b)) + in_log(b)) / 3.0;
        let piece = integrate(in_log, a, b, 1e-13 * scale.max(1.0))?;
        total += 2.0 * piece.value;
        out.push(total);
        upper = eps;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decades(k: std::ops::RangeInclusive<i32>) -> Vec<f64> {
        k.map(|e| 10f64.powi(-e)).collect()
    }

    #[test]
    fn associated_integrals_grow_per_decade() {
        for (ell, m) in SUPPORTED_ORDERS {
            let values = divergence_scan(ell, m, &decades(2..=6)).unwrap();
            let steps: Vec<f64> = values.windows(2).map(|w| w[1] - w[0]).collect();
            assert!(steps.iter().all(|&s| s > 0.1), "({ell},{m}) {steps:?}");
        }
    }

    #[test]
    fn q11_increments_match_asymptotic_rate() {
        // Q_1^1(cos θ) ~ -1/sin θ near the axis, so the density is ~1/θ and
        // each decade on both ends contributes 2 ln 10.
        let values = divergence_scan(1, 1, &decades(3..=6)).unwrap();
        for w in values.windows(2) {
            assert!(((w[1] - w[0]) - 2.0 * 10f64.ln()).abs() < 1e-4);
        }
    }

    #[test]
    fn axial_control_converges_to_one() {
        let values = divergence_scan(1, 0, &decades(2..=6)).unwrap();
        let steps: Vec<f64> = values.windows(2).map(|w| w[1] - w[0]).collect();
        assert!(steps.windows(2).all(|w| w[1] < w[0]));
        assert!(*steps.last().unwrap() < 1e-7);
        assert!((values.last().unwrap() - 1.0).abs() < 1e-8);
    }

    #[test]
    fn bad_scans() {
        assert!(divergence_scan(3, 1, &[0.1]).is_err());
        assert!(divergence_scan(1, 1, &[0.01, 0.1]).is_err());
        assert!(divergence_scan(1, 1, &[2.0]).is_err());
        assert!(divergence_scan(1, 1, &[]).is_err());
    }
}
