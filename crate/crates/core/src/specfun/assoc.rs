use crate::error::{Error, Result};

/// `(ℓ, m)` pairs with a closed form here.
pub const SUPPORTED_ORDERS: [(u32, u32); 3] = [(1, 1), (2, 1), (2, 2)];

/// Associated Legendre function of the second kind `Q_ℓ^m(x)` on `(-1, 1)`,
/// Ferrers form `(-1)^m (1-x²)^{m/2} d^m Q_ℓ/dx^m`:
///
/// - `Q_1^1 = -√(1-x²) (artanh x + x/(1-x²))`
/// - `Q_2^1 = -√(1-x²) (3x artanh x + (3x²-2)/(1-x²))`
/// - `Q_2^2 = 3(1-x²) artanh x + (5x - 3x³)/(1-x²)`
pub fn assoc_legendre_q_small_m(ell: u32, m: u32, x: f64) -> Result<f64> {
    check_order(ell, m)?;
    if x.is_nan() || x.abs() >= 1.0 {
        return Err(Error::Domain { value: x, domain: "(-1, 1)" });
    }
    Ok(closed_form(ell, m, x, 1.0 - x * x, x.atanh()))
}

/// Same function at `x = cos θ`, with `1-x²` and `artanh x` formed from θ so
/// the value stays accurate right up to the axis.
pub fn assoc_legendre_q_theta(ell: u32, m: u32, theta: f64) -> Result<f64> {
    check_order(ell, m)?;
    if !(theta > 0.0 && theta < std::f64::consts::PI) {
        return Err(Error::SingularPoint { theta });
    }
    let s = theta.sin();
    Ok(closed_form(ell, m, theta.cos(), s * s, super::artanh_cos(theta)))
}

fn check_order(ell: u32, m: u32) -> Result<()> {
    if SUPPORTED_ORDERS.contains(&(ell, m)) {
        Ok(())
    } else {
        Err(Error::UnsupportedOrder { ell, m })
    }
}

fn closed_form(ell: u32, m: u32, x: f64, one_minus_x2: f64, t: f64) -> f64 {
    match (ell, m) {
        (1, 1) => -one_minus_x2.sqrt() * (t + x / one_minus_x2),
        (2, 1) => -one_minus_x2.sqrt() * (3.0 * x * t + (3.0 * x * x - 2.0) / one_minus_x2),
        (2, 2) => 3.0 * one_minus_x2 * t + (5.0 * x - 3.0 * x * x * x) / one_minus_x2,
        _ => unreachable!("order checked by caller"),
    }
}
