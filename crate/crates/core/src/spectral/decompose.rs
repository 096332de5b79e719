use rayon::prelude::*;

use super::{angular_overlap_normed, Amplitude};
use crate::error::{Error, Result};
use crate::exact::{pisq_eval, rat_to_f64, BigRational, HighPrecision, PiSquaredElement};
use crate::hydrogen::{radial, QuantumNumbers, SignConvention};
use crate::specfun::q_norm_sq;

pub const DEFAULT_N_MAX_CAP: u32 = 60;

#[derive(Clone, Debug)]
pub struct DecomposeOptions {
    pub n_max_cap: u32,
    pub signs: SignConvention,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        Self { n_max_cap: DEFAULT_N_MAX_CAP, signs: SignConvention::standard() }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientEntry {
    pub n_p: u32,
    pub ell_p: u32,
    pub amplitude: Amplitude,
}

/// `P(N)² = Σ_{n' ≤ N} Σ_{ℓ'} |C_{n',ℓ'}|²` and its square root.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialSum {
    pub n_cap: u32,
    pub p_squared: PiSquaredElement,
    pub p: HighPrecision,
}

impl PartialSum {
    pub fn p_f64(&self) -> f64 {
        self.p.to_f64()
    }

    pub fn p_squared_f64(&self) -> f64 {
        self.p_squared.to_f64()
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub n: u32,
    pub ell: u32,
    pub digits: u32,
    /// Ordered by `n'`, then `ℓ'`.
    pub entries: Vec<CoefficientEntry>,
    /// One row per `N = 1..=n_max`.
    pub p_of_n: Vec<PartialSum>,
    /// `1 - P(n_max)²`, a lower bound on the squared norm of the
    /// continuous-spectrum component.
    pub continuum_lower_bound_exact: PiSquaredElement,
    pub continuum_lower_bound: f64,
    /// Heuristic `P(∞)²` from fitting `a + b/N²` to the last two rows.
    /// Not a bound.
    pub extrapolated_p_squared: Option<f64>,
}

impl DecompositionReport {
    pub fn n_max(&self) -> u32 {
        self.p_of_n.len() as u32
    }

    pub fn entry(&self, n_p: u32, ell_p: u32) -> Option<&CoefficientEntry> {
        self.entries.iter().find(|e| e.n_p == n_p && e.ell_p == ell_p)
    }

    /// `P(N)²` for `N` in `1..=n_max`.
    pub fn p_squared(&self, n_cap: u32) -> Option<&PiSquaredElement> {
        self.p_of_n.get(n_cap.checked_sub(1)? as usize).map(|row| &row.p_squared)
    }

    /// `S_{n'} = Σ_{ℓ'} |C_{n',ℓ'}|²` for `n' = 1..=n_max`.
    pub fn shell_weights(&self) -> Vec<PiSquaredElement> {
        let mut prev = PiSquaredElement::zero();
        self.p_of_n
            .iter()
            .map(|row| {
                let s = &row.p_squared - &prev;
                prev = row.p_squared.clone();
                s
            })
            .collect()
    }

    /// Exact check that `P(N)²` never decreases.
    pub fn is_monotone(&self) -> bool {
        self.shell_weights().iter().all(|s| s.signum() >= 0)
    }

    /// Exact check of `0 ≤ P(N)² ≤ 1` for every row.
    pub fn within_bessel_bound(&self) -> bool {
        let one = PiSquaredElement::one();
        self.p_of_n.iter().all(|row| row.p_squared.signum() >= 0 && row.p_squared <= one)
    }
}

/// Decomposition under the default options.
pub fn decompose(n: u32, ell: u32, n_max: u32, digits: u32) -> Result<DecompositionReport> {
    decompose_with(n, ell, n_max, digits, &DecomposeOptions::default())
}

pub fn decompose_with(n: u32, ell: u32, n_max: u32, digits: u32, options: &DecomposeOptions) -> Result<DecompositionReport> {
    QuantumNumbers::axial(n, ell)?;
    if n_max < n {
        return Err(Error::InvalidArgument(format!("n_max = {n_max} must be at least n = {n}")));
    }
    if n_max > options.n_max_cap {
        return Err(Error::ResourceCap { n_max, cap: options.n_max_cap });
    }
    if digits < 15 {
        return Err(Error::InvalidArgument(format!("digits must be at least 15, got {digits}")));
    }

    let source = radial(n, ell)?;
    let norm_sq = q_norm_sq(ell);
    let pairs: Vec<(u32, u32)> = (1..=n_max).flat_map(|np| (0..np).map(move |lp| (np, lp))).collect();
    let entries: Vec<CoefficientEntry> = pairs
        .par_iter()
        .map(|&(n_p, ell_p)| -> Result<CoefficientEntry> {
            let angular = angular_overlap_normed(ell, ell_p, &options.signs, &norm_sq);
            let amplitude = if angular.is_zero() {
                Amplitude::zero()
            } else {
                let (sign, square) = source.overlap_sign_and_square(&radial(n_p, ell_p)?);
                &Amplitude::from_parts_unchecked(sign, square.into()) * &angular
            };
            Ok(CoefficientEntry { n_p, ell_p, amplitude })
        })
        .collect::<Result<_>>()?;

    let tolerance = BigRational::new(1.into(), num_bigint::BigInt::from(10).pow(digits.saturating_sub(5)));
    let mut exact_sum = PiSquaredElement::zero();
    let mut float_sum = BigRational::from_integer(0.into());
    let mut p_of_n = Vec::with_capacity(n_max as usize);
    let mut iter = entries.iter().peekable();
    for n_cap in 1..=n_max {
        while let Some(e) = iter.next_if(|e| e.n_p == n_cap) {
            if !e.amplitude.is_zero() {
                exact_sum = &exact_sum + e.amplitude.square();
                float_sum += pisq_eval(e.amplitude.square(), digits)?.value();
            }
        }
        let exact_value = pisq_eval(&exact_sum, digits)?;
        let gap = exact_value.value() - &float_sum;
        if gap.clone() * gap.clone() > &tolerance * &tolerance {
            return Err(Error::Numerical(format!(
                "exact and summed float P({n_cap})^2 disagree by {}",
                rat_to_f64(&gap)
            )));
        }
        let p = Amplitude::from_parts_unchecked(if exact_sum.is_zero() { 0 } else { 1 }, exact_sum.clone());
        p_of_n.push(PartialSum {
            n_cap,
            p_squared: exact_sum.clone(),
            p: sqrt_high_precision(&p, digits)?,
        });
    }

    let continuum_lower_bound_exact = &PiSquaredElement::one() - &exact_sum;
    let continuum_lower_bound = pisq_eval(&continuum_lower_bound_exact, digits)?.to_f64();
    let extrapolated_p_squared = (n_max >= 4).then(|| {
        let big = n_max as f64;
        let small = big - 1.0;
        let last = p_of_n[n_max as usize - 1].p_squared_f64();
        let prev = p_of_n[n_max as usize - 2].p_squared_f64();
        (big * big * last - small * small * prev) / (big * big - small * small)
    });

    Ok(DecompositionReport {
        n,
        ell,
        digits,
        entries,
        p_of_n,
        continuum_lower_bound_exact,
        continuum_lower_bound,
        extrapolated_p_squared,
    })
}

fn sqrt_high_precision(a: &Amplitude, digits: u32) -> Result<HighPrecision> {
    Ok(HighPrecision::from_rational(a.value(digits + 2)?, digits))
}
