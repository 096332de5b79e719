//! Double-exponential quadrature: tanh-sinh on finite intervals and exp-sinh
//! on half-lines. This is the numeric oracle that every exact result in the
//! crate is checked against, so it shares no code with the exact path.

mod oracle;

pub use oracle::{
    oracle_angular_overlap, oracle_coefficient, oracle_q_norm_sq, oracle_radial_overlap, radial_value,
};

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntegrationResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Largest abscissa parameter for tanh-sinh; `1 - tanh(π/2·sinh 6)` is
/// still a normal double.
const TANH_SINH_T_MAX: f64 = 6.0;
const MIN_LEVELS: u32 = 3;
const MAX_LEVELS: u32 = 12;

/// `∫_a^b f(x) dx`. Nodes that round onto an endpoint are skipped, which
/// only matters for singularities stronger than logarithmic; use
/// [`integrate_endpoints`] when the integrand can exploit the distance to
/// the endpoint.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<IntegrationResult> {
    integrate_endpoints(
        |x, _, _| if x <= a || x >= b { 0.0 } else { f(x) },
        a,
        b,
        tol,
    )
}

/// `∫_a^b f(x, x-a, b-x) dx`, where the second and third arguments are the
/// distances to the endpoints computed without cancellation.
pub fn integrate_endpoints<F: Fn(f64, f64, f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<IntegrationResult> {
    check_args(a, b, tol)?;
    let half = 0.5 * (b - a);
    let width = b - a;
    let term = |t: f64| -> f64 {
        let u = FRAC_PI_2 * t.abs().sinh();
        let e = (-2.0 * u).exp();
        // 1 - tanh(u) and the Jacobian π/2·cosh t·sech²(u)
        let comp = 2.0 * e / (1.0 + e);
        let weight = FRAC_PI_2 * t.cosh() * comp * (2.0 - comp);
        let near = half * comp;
        if near <= 0.0 || weight <= 0.0 {
            return 0.0;
        }
        let far = width - near;
        let value = if t > 0.0 {
            f(b - near, far, near)
        } else if t < 0.0 {
            f(a + near, near, far)
        } else {
            f(a + half, half, half)
        };
        weight * value * half
    };
    double_exponential(term, -TANH_SINH_T_MAX, TANH_SINH_T_MAX, tol)
}

/// `∫_a^∞ f(x) dx` by the exp-sinh map `x = a + exp(π/2·sinh t)`, for
/// integrands that decay at least exponentially.
pub fn integrate_to_infinity<F: Fn(f64) -> f64>(f: F, a: f64, tol: f64) -> Result<IntegrationResult> {
    if tol.is_nan() || tol <= 0.0 || !a.is_finite() {
        return Err(Error::InvalidArgument(format!("need finite a and tol > 0, got a={a}, tol={tol}")));
    }
    let term = |t: f64| -> f64 {
        let s = (FRAC_PI_2 * t.sinh()).exp();
        let w = FRAC_PI_2 * t.cosh() * s;
        if s == 0.0 || !w.is_finite() {
            return 0.0;
        }
        let v = f(a + s);
        if v == 0.0 {
            0.0
        } else {
            w * v
        }
    };
    // The decaying side is trimmed to where the terms stop mattering, so
    // polynomial factors never get evaluated at astronomically large x.
    let mut t_hi = 0.0;
    let mut peak: f64 = term(0.0).abs();
    let mut quiet = 0;
    while t_hi < 5.0 {
        t_hi += 0.125;
        let v = term(t_hi).abs();
        if !v.is_finite() {
            break;
        }
        peak = peak.max(v);
        if v <= f64::EPSILON * 1e-3 * peak {
            quiet += 1;
            if quiet >= 4 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    double_exponential(term, -5.0, t_hi, tol)
}

fn check_args(a: f64, b: f64, tol: f64) -> Result<()> {
    if !a.is_finite() || !b.is_finite() || a >= b {
        return Err(Error::InvalidArgument(format!("need finite a < b, got [{a}, {b}]")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    Ok(())
}

/// Trapezoidal sums of `term` on `[t_lo, t_hi]`, halving the step until
/// consecutive levels agree within `tol`.
fn double_exponential<G: Fn(f64) -> f64>(term: G, t_lo: f64, t_hi: f64, tol: f64) -> Result<IntegrationResult> {
    let mut h = 0.5;
    let mut evaluations = 0usize;
    let mut sum = 0.0;
    let k_lo = (t_lo / h).ceil() as i64;
    let k_hi = (t_hi / h).floor() as i64;
    for k in k_lo..=k_hi {
        sum += term(k as f64 * h);
        evaluations += 1;
    }
    let mut estimate = h * sum;
    let mut error_estimate = f64::INFINITY;
    for level in 1..=MAX_LEVELS {
        h *= 0.5;
        let k_lo = (t_lo / h).ceil() as i64;
        let k_hi = (t_hi / h).floor() as i64;
        for k in k_lo..=k_hi {
            if k % 2 != 0 {
                sum += term(k as f64 * h);
                evaluations += 1;
            }
        }
        let next = h * sum;
        if !next.is_finite() {
            return Err(Error::Numerical(format!("integrand produced a non-finite value at level {level}")));
        }
        error_estimate = (next - estimate).abs();
        estimate = next;
        if level >= MIN_LEVELS && error_estimate <= tol {
            return Ok(IntegrationResult { value: estimate, error_estimate, evaluations });
        }
    }
    Err(Error::Quadrature { best: estimate, error_estimate, evaluations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn constant() {
        let r = integrate(|_| 1.0, 0.0, 1.0, 1e-14).unwrap();
        assert!((r.value - 1.0).abs() < 1e-14);
        assert!(r.evaluations > 0 && r.error_estimate >= 0.0);
    }

    #[test]
    fn log_singularity() {
        let r = integrate_endpoints(|_, da, _| da.ln(), 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value + 1.0).abs() < 1e-12);
    }

    #[test]
    fn inverse_square_root() {
        let r = integrate_endpoints(|_, da, _| 1.0 / da.sqrt(), 0.0, 1.0, 1e-10).unwrap();
        assert!((r.value - 2.0).abs() < 1e-10);
    }

    #[test]
    fn artanh_squared_is_zeta_two() {
        let r = integrate_endpoints(
            |_, da, db| {
                let t = 0.5 * (da.ln() - db.ln());
                t * t
            },
            -1.0,
            1.0,
            1e-10,
        )
        .unwrap();
        assert!((r.value - PI * PI / 6.0).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn normalized_log_tan_in_theta() {
        // sinθ·(6/π²)·ln²tan(θ/2); near θ = π use tan(θ/2) = cot(d/2).
        let r = integrate_endpoints(
            |theta, _, db| {
                let lt = if db < 0.5 { -(0.5 * db).tan().ln() } else { (0.5 * theta).tan().ln() };
                theta.sin() * 6.0 / (PI * PI) * lt * lt
            },
            0.0,
            PI,
            1e-12,
        )
        .unwrap();
        assert!((r.value - 1.0).abs() < 1e-12, "{}", r.value);
    }

    #[test]
    fn half_line() {
        let r = integrate_to_infinity(|x| x * x * x * (-x).exp(), 0.0, 1e-12).unwrap();
        assert!((r.value - 6.0).abs() < 1e-11);
        let g = integrate_to_infinity(|x| (-x * x).exp(), 0.0, 1e-12).unwrap();
        assert!((g.value - PI.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn bad_arguments() {
        assert!(integrate(|x| x, 1.0, 0.0, 1e-8).is_err());
        assert!(integrate(|x| x, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn non_convergence_reports_best_estimate() {
        let err = integrate(|x| (1.0 / x).sin() / x, 0.0, 1.0, 1e-15).unwrap_err();
        assert!(matches!(err, Error::Quadrature { .. }));
    }

    #[test]
    fn additivity_and_linearity() {
        let f = |x: f64| (3.0 * x).cos() + x * x;
        let g = |x: f64| (-x).exp();
        let tol = 1e-12;
        let whole = integrate(f, -1.0, 2.0, tol).unwrap().value;
        let left = integrate(f, -1.0, 0.5, tol).unwrap().value;
        let right = integrate(f, 0.5, 2.0, tol).unwrap().value;
        assert!((whole - left - right).abs() < 3.0 * tol);
        let (alpha, beta) = (1.7, -0.3);
        let combo = integrate(|x| alpha * f(x) + beta * g(x), -1.0, 2.0, tol).unwrap().value;
        let parts = alpha * whole + beta * integrate(g, -1.0, 2.0, tol).unwrap().value;
        assert!((combo - parts).abs() < 3.0 * tol);
    }
}
