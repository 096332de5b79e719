use crate::error::{Error, Result};
use crate::hydrogen::{eigenvalue, AngularKind, QuantumNumbers, SpatialPoint, Wavefunction};

/// `|(-½Δ_h - 1/r)Ξ - λ_n Ξ|` at `p`, with `Δ_h` the second-order central
/// difference Laplacian in `(r, θ)`.
///
/// `Q_ℓ(cos θ)` solves the Legendre equation away from the axis, so this
/// goes to zero as `O(h²)` just as it does for a true eigenfunction.
pub fn residual_check(n: u32, ell: u32, p: &SpatialPoint, h: f64) -> Result<f64> {
    residual_check_state(n, ell, AngularKind::Pseudo, p, h)
}

/// Same check for either kind; the regular kind is the control.
pub fn residual_check_state(n: u32, ell: u32, kind: AngularKind, p: &SpatialPoint, h: f64) -> Result<f64> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidArgument(format!("step must be positive, got {h}")));
    }
    if p.r <= 10.0 * h {
        return Err(Error::Domain { value: p.r, domain: "r > 10h" });
    }
    if p.theta < 10.0 * h || std::f64::consts::PI - p.theta < 10.0 * h {
        return Err(Error::SingularPoint { theta: p.theta });
    }
    let wf = Wavefunction::new(QuantumNumbers::axial(n, ell)?, kind)?;
    let f = |r: f64, t: f64| wf.eval_rt(r, t);
    let (r, t) = (p.r, p.theta);
    let f0 = f(r, t)?;
    let (fr_p, fr_m) = (f(r + h, t)?, f(r - h, t)?);
    let (ft_p, ft_m) = (f(r, t + h)?, f(r, t - h)?);
    let f_rr = (fr_p - 2.0 * f0 + fr_m) / (h * h);
    let f_r = (fr_p - fr_m) / (2.0 * h);
    let f_tt = (ft_p - 2.0 * f0 + ft_m) / (h * h);
    let f_t = (ft_p - ft_m) / (2.0 * h);
    let laplacian = f_rr + 2.0 * f_r / r + (f_tt + f_t / t.tan()) / (r * r);
    Ok((-0.5 * laplacian - f0 / r - eigenvalue(n)? * f0).abs())
}
