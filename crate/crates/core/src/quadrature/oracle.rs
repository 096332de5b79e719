//! Floating-point counterparts of the exact overlaps. Special functions are
//! evaluated by their numeric recurrences and the radial normalization uses
//! the textbook factorial formula, so nothing here depends on the exact
//! polynomial machinery.

use super::{integrate_endpoints, integrate_to_infinity};
use crate::error::{Error, Result};

fn check(n: u32, ell: u32) -> Result<()> {
    if n == 0 || ell >= n {
        return Err(Error::InvalidQuantumNumbers {
            n: n as i64,
            ell: ell as i64,
            m: 0,
            reason: "need 0 <= l < n",
        });
    }
    Ok(())
}

fn ln_factorial(k: u32) -> f64 {
    (2..=k).map(|i| (i as f64).ln()).sum()
}

fn laguerre_value(alpha: u32, degree: u32, x: f64) -> f64 {
    let a = alpha as f64;
    let (mut prev, mut cur) = (1.0, 1.0 + a - x);
    if degree == 0 {
        return prev;
    }
    for d in 1..degree {
        let d = d as f64;
        let next = ((2.0 * d + a + 1.0 - x) * cur - (d + a) * prev) / (d + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

fn legendre_value(ell: u32, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, x);
    if ell == 0 {
        return prev;
    }
    for k in 1..ell {
        let k = k as f64;
        let next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

fn legendre_q_value(ell: u32, x: f64, artanh_x: f64) -> f64 {
    let (mut prev, mut cur) = (artanh_x, x * artanh_x - 1.0);
    if ell == 0 {
        return prev;
    }
    for k in 1..ell {
        let k = k as f64;
        let next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Normalized hydrogen radial function
/// `R_{n,ℓ}(r) = √((2/n)³ (n-ℓ-1)!/(2n (n+ℓ)!)) e^{-r/n} (2r/n)^ℓ L_{n-ℓ-1}^{2ℓ+1}(2r/n)`.
pub fn radial_value(n: u32, ell: u32, r: f64) -> f64 {
    let nf = n as f64;
    let ln_norm_sq = 3.0 * (2.0 / nf).ln() + ln_factorial(n - ell - 1) - (2.0 * nf).ln() - ln_factorial(n + ell);
    let rho = 2.0 * r / nf;
    (0.5 * ln_norm_sq - r / nf).exp() * rho.powi(ell as i32) * laguerre_value(2 * ell + 1, n - ell - 1, rho)
}

/// `∫_0^∞ R_{n,ℓ} R_{n',ℓ'} r² dr` by exp-sinh quadrature.
pub fn oracle_radial_overlap(n: u32, ell: u32, n_p: u32, ell_p: u32, tol: f64) -> Result<f64> {
    check(n, ell)?;
    check(n_p, ell_p)?;
    Ok(integrate_to_infinity(|r| radial_value(n, ell, r) * radial_value(n_p, ell_p, r) * r * r, 0.0, tol)?.value)
}

fn artanh_from_distances(da: f64, db: f64) -> f64 {
    0.5 * (da.ln() - db.ln())
}

/// `∫_{-1}^{1} Q_ℓ(x)² dx` by tanh-sinh quadrature.
pub fn oracle_q_norm_sq(ell: u32, tol: f64) -> Result<f64> {
    Ok(integrate_endpoints(
        |x, da, db| {
            let q = legendre_q_value(ell, x, artanh_from_distances(da, db));
            q * q
        },
        -1.0,
        1.0,
        tol,
    )?
    .value)
}

/// `⟨Θ̄_{ℓ'}, ξ_ℓ⟩` with `ξ_ℓ = σ Q_ℓ/‖Q_ℓ‖` and `Θ̄_{ℓ'} = √((2ℓ'+1)/2) P_{ℓ'}`.
pub fn oracle_angular_overlap(ell_xi: u32, ell_theta: u32, sigma: f64, tol: f64) -> Result<f64> {
    let norm = oracle_q_norm_sq(ell_xi, tol)?.sqrt();
    let raw = integrate_endpoints(
        |x, da, db| legendre_value(ell_theta, x) * legendre_q_value(ell_xi, x, artanh_from_distances(da, db)),
        -1.0,
        1.0,
        tol,
    )?
    .value;
    Ok(sigma * ((2 * ell_theta + 1) as f64 / 2.0).sqrt() * raw / norm)
}

/// `C^{(n)}_{n',ℓ'} = ⟨Ψ_{n',ℓ',0}, Ξ_{n,ℓ,0}⟩` with the default sign
/// convention `σ_ℓ = -1`.
pub fn oracle_coefficient(n: u32, ell: u32, n_p: u32, ell_p: u32, tol: f64) -> Result<f64> {
    let radial = oracle_radial_overlap(n, ell, n_p, ell_p, tol)?;
    let angular = oracle_angular_overlap(ell, ell_p, -1.0, tol)?;
    Ok(radial * angular)
}
