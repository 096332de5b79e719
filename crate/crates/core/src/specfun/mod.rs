//! Legendre polynomials, Legendre functions of the second kind with exact
//! coefficients, generalized Laguerre polynomials, and the closed-form
//! integrals that tie them together.

mod assoc;
mod laguerre;
mod legendre;

pub use crate::exact::PolynomialQ;
pub use assoc::{assoc_legendre_q_small_m, assoc_legendre_q_theta, SUPPORTED_ORDERS};
pub use laguerre::laguerre;
pub use legendre::{
    artanh_moment, artanh_sq_moment, legendre_p, legendre_q, pq_overlap, q_norm_sq, LegendreQRep,
};

/// `artanh(cos θ)`, accurate on the whole open interval `(0, π)`.
pub fn artanh_cos(theta: f64) -> f64 {
    -(0.5 * theta).tan().ln()
}
