use std::f64::consts::PI;
use std::fmt::Write;

use super::{Mode, RunConfig};
use crate::error::{Error, Result};
use crate::exact::HighPrecision;
use crate::hydrogen::{density_grid, theta_regular, xi, QuantumNumbers};
use crate::quadrature::oracle_coefficient;
use crate::spectral::{autocorrelation_from_report, decompose, divergence_scan};

const ORACLE_TOL: f64 = 1e-13;

fn header(config: &RunConfig) -> String {
    format!("# {config}\n")
}

/// One row per `(n', ℓ')`, ordered by `n'` then `ℓ'`.
pub fn cmd_coeffs(config: &RunConfig) -> Result<String> {
    let report = decompose(config.n, config.ell, config.n_max, config.digits)?;
    let mut out = header(config);
    out.push_str(match config.mode {
        Mode::Exact => "n_p,l_p,sign,square_exact,value\n",
        Mode::Both => "n_p,l_p,sign,square_exact,value,quad_value\n",
        Mode::Quad => "n_p,l_p,quad_value\n",
    });
    for e in &report.entries {
        let quad = || oracle_coefficient(config.n, config.ell, e.n_p, e.ell_p, ORACLE_TOL);
        let exact = || -> Result<String> {
            let value = HighPrecision::from_rational(e.amplitude.value(config.digits)?, config.digits);
            Ok(format!("{},{},{},{},{}", e.n_p, e.ell_p, e.amplitude.sign(), e.amplitude.square(), value))
        };
        match config.mode {
            Mode::Exact => writeln!(out, "{}", exact()?),
            Mode::Both => writeln!(out, "{},{:.15e}", exact()?, quad()?),
            Mode::Quad => writeln!(out, "{},{},{:.15e}", e.n_p, e.ell_p, quad()?),
        }
        .expect("writing to a String");
    }
    Ok(out)
}

/// `P(N)` for `N = 1..=nmax`, closed by the continuum lower bound.
pub fn cmd_pn(config: &RunConfig) -> Result<String> {
    let report = decompose(config.n, config.ell, config.n_max, config.digits)?;
    if !report.is_monotone() || !report.within_bessel_bound() {
        return Err(Error::Numerical("P(N)^2 is not monotone within [0, 1]".into()));
    }
    let mut out = header(config);
    out.push_str("N,P_squared_exact,P_float\n");
    for row in &report.p_of_n {
        writeln!(out, "{},{},{}", row.n_cap, row.p_squared, row.p).expect("writing to a String");
    }
    writeln!(out, "# continuum_lower_bound = 1 - P({})^2 = {:.12}", config.n_max, report.continuum_lower_bound).expect("writing to a String");
    writeln!(out, "# continuum_lower_bound_exact = {}", report.continuum_lower_bound_exact).expect("writing to a String");
    if let Some(x) = report.extrapolated_p_squared {
        writeln!(out, "# heuristic P(inf)^2 from a + b/N^2 fit (not a bound) = {x:.12}").expect("writing to a String");
    }
    Ok(out)
}

/// `|ξ_ℓ(θ)|` and `|Θ_ℓ(θ)|` on the midpoints of `samples` equal cells.
pub fn cmd_angular(config: &RunConfig) -> Result<String> {
    let (pseudo, regular) = (xi(config.ell), theta_regular(config.ell));
    let mut out = header(config);
    out.push_str("theta,abs_xi,abs_theta_regular\n");
    let step = PI / config.samples as f64;
    for j in 0..config.samples {
        let theta = (j as f64 + 0.5) * step;
        writeln!(out, "{theta:.12},{:.12},{:.12}", pseudo.eval(theta)?.abs(), regular.eval(theta)?.abs()).expect("writing to a String");
    }
    Ok(out)
}

/// `(r, θ, density)` rows, `nr × samples` of them.
pub fn cmd_surface(config: &RunConfig) -> Result<String> {
    let qn = QuantumNumbers::axial(config.n, config.ell)?;
    let grid = density_grid(qn, config.kind.into(), config.r_max, config.n_r, config.samples)?;
    let mut out = header(config);
    out.push_str("r,theta,density\n");
    for (r, theta, density) in grid.rows() {
        writeln!(out, "{r:.12},{theta:.12},{density:.15e}").expect("writing to a String");
    }
    Ok(out)
}

/// `a_p(t)` at `t = 0, t_step, …, ≤ t_max`.
pub fn cmd_autocorr(config: &RunConfig) -> Result<String> {
    if config.n_max < 2 {
        return Err(Error::InvalidArgument("--nmax must be at least 2".into()));
    }
    let report = decompose(config.n, config.ell, config.n_max, config.digits)?;
    let steps = (config.t_max / config.t_step + 1e-9).floor() as usize;
    let times: Vec<f64> = (0..=steps).map(|k| k as f64 * config.t_step).collect();
    let mut out = header(config);
    let last = report.p_of_n.last().expect("n_max >= 2");
    writeln!(out, "# P({})^2 = {:.15}", config.n_max, last.p_squared_f64()).expect("writing to a String");
    out.push_str("t,re,im,modulus\n");
    for a in autocorrelation_from_report(&report, &times)? {
        writeln!(out, "{:.6},{:.15e},{:.15e},{:.15e}", a.t, a.value.re, a.value.im, a.modulus()).expect("writing to a String");
    }
    Ok(out)
}

/// `I(ε)` over `ε = 10^-1 … 10^-8`; `m = 0` uses the normalized `ξ_ℓ`.
pub fn cmd_divergence(config: &RunConfig) -> Result<String> {
    let epsilons: Vec<f64> = (1..=8).map(|k| 10f64.powi(-k)).collect();
    let values = divergence_scan(config.ell, config.m as u32, &epsilons)?;
    let mut out = header(config);
    out.push_str("epsilon,integral,increment\n");
    let mut prev = None;
    for (eps, value) in epsilons.iter().zip(&values) {
        let inc = prev.map_or(String::new(), |p: f64| format!("{:.15e}", value - p));
        writeln!(out, "{eps:.0e},{value:.15e},{inc}").expect("writing to a String");
        prev = Some(*value);
    }
    Ok(out)
}
