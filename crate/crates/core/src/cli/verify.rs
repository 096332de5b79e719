use std::fmt;
use std::time::Instant;

use super::{Mode, RunConfig};
use crate::error::Result;
use crate::exact::{int, PiSquaredElement};
use crate::hydrogen::{radial, theta_regular, xi, AngularKind, SpatialPoint};
use crate::quadrature::integrate;
use crate::quadrature::{oracle_coefficient, oracle_radial_overlap};
use crate::specfun::legendre_p;
use crate::spectral::{coefficient, divergence_scan, residual_check_state};

/// Deliberate corruption used to prove the suites can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Negates the exact `(n', ℓ') = (2, 1)` coefficient before it is
    /// compared with the oracle.
    FlipCoefficientSign,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub mode: Mode,
    pub suites: Vec<SuiteOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "hydroxi {} verify (mode {:?})", env!("CARGO_PKG_VERSION"), self.mode)?;
        for s in &self.suites {
            let mark = if s.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{mark} {:<18} {:>7} ms  {}", s.name, s.millis, s.detail)?;
        }
        writeln!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

type Check = Result<(bool, String)>;
type Suite = (&'static str, Box<dyn Fn() -> Check>);

pub fn cmd_verify(config: &RunConfig) -> VerifyReport {
    let mode = config.mode;
    let fault = config.fault;
    let suites: Vec<Suite> = vec![
        ("orthonormality", Box::new(move || orthonormality(mode))),
        ("normalization", Box::new(move || normalization(mode))),
        ("selection-rule", Box::new(move || selection_rule(mode))),
        ("cross-validation", Box::new(move || cross_validation(fault))),
        ("residual-order", Box::new(residual_order)),
        ("divergence-scan", Box::new(divergence)),
    ];
    let suites = suites
        .into_iter()
        .map(|(name, check)| {
            let start = Instant::now();
            let (passed, detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
            SuiteOutcome { name, passed, detail, millis: start.elapsed().as_millis() }
        })
        .collect();
    VerifyReport { mode, suites }
}

const GRAM_N: u32 = 6;

fn regular_angular_overlap_quad(ell: u32, ell_p: u32) -> Result<f64> {
    let (a, b) = (theta_regular(ell), theta_regular(ell_p));
    let v = integrate(|t| t.sin() * a.eval(t).unwrap() * b.eval(t).unwrap(), 0.0, std::f64::consts::PI, 1e-14)?;
    Ok(v.value)
}

/// Gram matrix of `Ψ_{n,ℓ,0}`, `n ≤ 6`.
fn orthonormality(mode: Mode) -> Check {
    let states: Vec<(u32, u32)> = (1..=GRAM_N).flat_map(|n| (0..n).map(move |l| (n, l))).collect();
    let mut worst = 0.0f64;
    let mut exact_ok = true;
    for &(n, l) in &states {
        for &(n_p, l_p) in &states {
            let diagonal = n == n_p && l == l_p;
            if mode != Mode::Quad {
                let angular = if l == l_p {
                    theta_regular(l).norm_integral_exact()
                } else {
                    PiSquaredElement::rational((&legendre_p(l) * &legendre_p(l_p)).integrate_symmetric())
                };
                let (sign, square) = radial(n, l)?.overlap_sign_and_square(&radial(n_p, l_p)?);
                let entry = if l == l_p && !diagonal { sign == 0 } else { true };
                let unit = !diagonal || (sign == 1 && square == int(1) && angular == PiSquaredElement::one());
                let orthogonal_angles = l == l_p || angular.is_zero();
                exact_ok &= entry && unit && orthogonal_angles;
            }
            if mode != Mode::Exact {
                let g = oracle_radial_overlap(n, l, n_p, l_p, 1e-14)? * regular_angular_overlap_quad(l, l_p)?;
                worst = worst.max((g - if diagonal { 1.0 } else { 0.0 }).abs());
            }
        }
    }
    let quad_ok = worst < 1e-10;
    Ok((exact_ok && quad_ok, format!("{} states, exact identity {exact_ok}, max quad deviation {worst:.2e}", states.len())))
}

/// `∫ sin θ |ξ_ℓ|² dθ = 1` for `ℓ ≤ 8`.
fn normalization(mode: Mode) -> Check {
    let mut exact_ok = true;
    let mut worst = 0.0f64;
    for ell in 0..=8 {
        let a = xi(ell);
        if mode != Mode::Quad {
            exact_ok &= a.norm_integral_exact() == PiSquaredElement::one();
        }
        if mode != Mode::Exact {
            worst = worst.max((a.norm_integral_quad(1e-14)? - 1.0).abs());
        }
    }
    Ok((exact_ok && worst < 1e-12, format!("l <= 8, exact {exact_ok}, max quad deviation {worst:.2e}")))
}

/// Coefficients vanish exactly when `ℓ + ℓ'` is even.
fn selection_rule(mode: Mode) -> Check {
    let sources = [(1, 0), (2, 1), (3, 0), (3, 2)];
    let mut checked = 0;
    let mut failures = Vec::new();
    for (n, ell) in sources {
        for n_p in 1..=12u32 {
            for ell_p in 0..n_p {
                let even = (ell + ell_p) % 2 == 0;
                // The nonzero side is only asserted for small shells.
                let must_be_nonzero = !even && n_p <= 3;
                let ok = match mode {
                    Mode::Quad => {
                        let c = oracle_coefficient(n, ell, n_p, ell_p, 1e-13)?;
                        if even { c.abs() < 1e-9 } else { !must_be_nonzero || c.abs() > 1e-9 }
                    }
                    _ => {
                        let c = coefficient(n, ell, n_p, ell_p)?;
                        if even { c.is_zero() } else { !must_be_nonzero || !c.is_zero() }
                    }
                };
                checked += 1;
                if !ok {
                    failures.push(format!("({n},{ell})->({n_p},{ell_p})"));
                }
            }
        }
    }
    Ok((failures.is_empty(), format!("{checked} coefficients, failures: [{}]", failures.join(" "))))
}

/// Exact coefficients of `Ξ_{1,0,0}` against the quadrature oracle.
fn cross_validation(fault: Option<Fault>) -> Check {
    let mut worst = 0.0f64;
    let mut count = 0;
    for (n, ell) in [(1u32, 0u32), (2, 1)] {
        for n_p in 1..=12u32 {
            for ell_p in 0..n_p {
                let mut c = coefficient(n, ell, n_p, ell_p)?;
                if fault == Some(Fault::FlipCoefficientSign) && (n, n_p, ell_p) == (1, 2, 1) {
                    c = c.negated();
                }
                let exact = c.value_f64(20)?;
                let quad = oracle_coefficient(n, ell, n_p, ell_p, 1e-13)?;
                worst = worst.max((exact - quad).abs());
                count += 1;
            }
        }
    }
    Ok((worst < 1e-9, format!("{count} coefficients, max |exact - quad| {worst:.2e}")))
}

/// `log2` ratios of residuals over `h = 4, 2, 1 · 10^-3` for pseudo and
/// regular states.
pub(crate) fn residual_slopes() -> Result<Vec<f64>> {
    let points = [(2.0, std::f64::consts::FRAC_PI_3), (1.0, 0.7), (3.5, 2.0), (0.8, 1.3), (5.0, 2.6)];
    let mut slopes = Vec::new();
    for (n, ell) in [(1, 0), (2, 1)] {
        for &(r, theta) in &points {
            let p = SpatialPoint::new(r, theta, 0.0)?;
            let res: Vec<f64> = [4e-3, 2e-3, 1e-3]
                .iter()
                .map(|&h| residual_check_state(n, ell, AngularKind::Pseudo, &p, h))
                .collect::<Result<_>>()?;
            slopes.push((res[0] / res[1]).log2());
            slopes.push((res[1] / res[2]).log2());
        }
    }
    Ok(slopes)
}

fn residual_order() -> Check {
    let slopes = residual_slopes()?;
    let (lo, hi) = slopes.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &s| (lo.min(s), hi.max(s)));
    Ok((lo >= 1.8 && hi <= 2.2, format!("{} slopes in [{lo:.3}, {hi:.3}]", slopes.len())))
}

fn divergence() -> Check {
    let eps: Vec<f64> = (2..=6).map(|k| 10f64.powi(-k)).collect();
    let steps = |ell, m| -> Result<Vec<f64>> {
        Ok(divergence_scan(ell, m, &eps)?.windows(2).map(|w| w[1] - w[0]).collect())
    };
    let diverging = steps(1, 1)?;
    let floor = diverging.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut control_ok = true;
    let mut control_last = 0.0f64;
    for ell in 0..=2 {
        let c = steps(ell, 0)?;
        control_ok &= c.windows(2).all(|w| w[1] < w[0]) && *c.last().expect("four steps") < 1e-6;
        control_last = control_last.max(*c.last().expect("four steps"));
    }
    Ok((floor > 1.0 && control_ok, format!("(1,1) min decade increment {floor:.4}, m=0 last increment {control_last:.2e}")))
}

#[cfg(test)]
mod tests {
    use super::super::{Cli, RunConfig};
    use super::*;
    use clap::Parser;

    fn config(args: &[&str]) -> RunConfig {
        RunConfig::from_cli(Cli::try_parse_from(std::iter::once("hydroxi").chain(args.iter().copied())).unwrap()).unwrap()
    }

    #[test]
    fn default_run_passes() {
        let report = cmd_verify(&config(&["verify", "--mode", "both"]));
        assert!(report.passed(), "{report}");
        assert_eq!(report.suites.len(), 6);
        assert!(report.to_string().trim_end().ends_with("PASS"));
    }

    #[test]
    fn injected_fault_fails() {
        let report = cmd_verify(&config(&["verify", "--inject-fault"]));
        assert!(!report.passed());
        let failed: Vec<_> = report.suites.iter().filter(|s| !s.passed).map(|s| s.name).collect();
        assert_eq!(failed, ["cross-validation"]);
    }

    #[test]
    fn quad_mode_passes() {
        assert!(orthonormality(Mode::Quad).unwrap().0);
        assert!(normalization(Mode::Quad).unwrap().0);
        assert!(selection_rule(Mode::Quad).unwrap().0);
    }
}
