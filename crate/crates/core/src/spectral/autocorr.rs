use num_complex::Complex64;

use super::decompose::{decompose, DecompositionReport};
use crate::error::{Error, Result};
use crate::hydrogen::eigenvalue;

/// Point-spectrum part `a_p(t) = Σ_{n'} e^{-iλ_{n'} t} S_{n'}` of
/// `⟨Ξ, e^{-iHt} Ξ⟩`. The continuum part is not modelled.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Autocorrelation {
    pub t: f64,
    pub value: Complex64,
}

impl Autocorrelation {
    pub fn modulus(&self) -> f64 {
        self.value.norm()
    }

    pub fn phase(&self) -> f64 {
        self.value.arg()
    }
}

pub fn point_autocorrelation(n: u32, ell: u32, n_max: u32, t: f64) -> Result<Autocorrelation> {
    if n_max < 2 {
        return Err(Error::InvalidArgument(format!("n_max must be at least 2, got {n_max}")));
    }
    let report = decompose(n, ell, n_max, 20)?;
    Ok(autocorrelation_from_report(&report, &[t])?[0])
}

/// Evaluates `a_p` at every `t` from the shell weights of an existing
/// report. Shells are summed from `n' = 1`; the `1s` weight vanishes for
/// `Ξ_{1,0,0}` but not for higher sources.
pub fn autocorrelation_from_report(report: &DecompositionReport, times: &[f64]) -> Result<Vec<Autocorrelation>> {
    let shells: Vec<(f64, f64)> = report
        .shell_weights()
        .iter()
        .zip(1u32..)
        .map(|(s, n_p)| Ok((eigenvalue(n_p)?, s.to_f64())))
        .collect::<Result<_>>()?;
    times
        .iter()
        .map(|&t| {
            if !t.is_finite() {
                return Err(Error::InvalidArgument(format!("time must be finite, got {t}")));
            }
            let value = shells.iter().map(|&(lambda, s)| Complex64::from_polar(s, -lambda * t)).sum();
            Ok(Autocorrelation { t, value })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::decompose_with;
    use crate::spectral::DecomposeOptions;
    use crate::hydrogen::SignConvention;

    #[test]
    fn starts_at_p_squared() {
        let report = decompose(1, 0, 12, 20).unwrap();
        let a = autocorrelation_from_report(&report, &[0.0]).unwrap()[0];
        assert!((a.value.re - report.p_of_n[11].p_squared_f64()).abs() < 1e-14);
        assert!(a.value.im.abs() < 1e-15);
    }

    #[test]
    fn bounded_by_value_at_zero() {
        let report = decompose(1, 0, 12, 20).unwrap();
        let times: Vec<f64> = (0..400).map(|k| 0.37 * k as f64).collect();
        let values = autocorrelation_from_report(&report, &times).unwrap();
        let a0 = values[0].modulus();
        assert!(values.iter().all(|a| a.modulus() <= a0 + 1e-15 && a.modulus() < 0.36));
        let lambda = |n: f64| -0.5 / (n * n);
        let t = 2.0 * std::f64::consts::PI / (lambda(2.0) - lambda(3.0));
        assert!(point_autocorrelation(1, 0, 12, t).unwrap().modulus() < 0.36);
    }

    #[test]
    fn sign_convention_invariant() {
        let flipped = DecomposeOptions { signs: SignConvention::standard().with_sign(1, 1).unwrap(), ..Default::default() };
        let a = decompose(2, 1, 6, 20).unwrap();
        let b = decompose_with(2, 1, 6, 20, &flipped).unwrap();
        let times = [0.0, 1.3, 7.9, 40.0];
        let xs = autocorrelation_from_report(&a, &times).unwrap();
        let ys = autocorrelation_from_report(&b, &times).unwrap();
        for (x, y) in xs.iter().zip(&ys) {
            assert_eq!(x.modulus(), y.modulus());
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(point_autocorrelation(1, 0, 1, 0.0).is_err());
        let report = decompose(1, 0, 3, 20).unwrap();
        assert!(autocorrelation_from_report(&report, &[f64::NAN]).is_err());
    }
}
