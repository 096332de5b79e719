use std::f64::consts::PI;

use rayon::prelude::*;

use super::{azimuthal_m0, radial, theta_regular, xi_with_sign, AngularKind, AngularPart, QuantumNumbers, RadialFunction, SpatialPoint};
use crate::error::{Error, Result};

/// `R_{n,ℓ}(r) · Θ(θ) · Φ_0(φ)` with either the regular polar factor (`Ψ`)
/// or the pseudo one (`Ξ`).
#[derive(Clone, Debug)]
pub struct Wavefunction {
    qn: QuantumNumbers,
    radial: RadialFunction,
    angular: AngularPart,
}

impl Wavefunction {
    pub fn new(qn: QuantumNumbers, kind: AngularKind) -> Result<Self> {
        Self::with_sign(qn, kind, -1)
    }

    /// `sigma` only affects the pseudo kind.
    pub fn with_sign(qn: QuantumNumbers, kind: AngularKind, sigma: i8) -> Result<Self> {
        qn.require_axial()?;
        let angular = match kind {
            AngularKind::Regular => theta_regular(qn.ell()),
            AngularKind::Pseudo => xi_with_sign(qn.ell(), sigma),
        };
        Ok(Self { qn, radial: radial(qn.n(), qn.ell())?, angular })
    }

    pub fn quantum_numbers(&self) -> QuantumNumbers {
        self.qn
    }

    pub fn kind(&self) -> AngularKind {
        self.angular.kind()
    }

    pub fn radial(&self) -> &RadialFunction {
        &self.radial
    }

    pub fn angular(&self) -> &AngularPart {
        &self.angular
    }

    /// Value at `(r, θ)`; axial symmetry makes φ irrelevant.
    pub fn eval_rt(&self, r: f64, theta: f64) -> Result<f64> {
        Ok(self.radial.eval(r) * self.angular.eval(theta)? * azimuthal_m0())
    }

    pub fn eval(&self, p: &SpatialPoint) -> Result<f64> {
        self.eval_rt(p.r, p.theta)
    }
}

/// `Ψ_{n,ℓ,0}` at a point.
pub fn psi_eval(qn: QuantumNumbers, p: &SpatialPoint) -> Result<f64> {
    Wavefunction::new(qn, AngularKind::Regular)?.eval(p)
}

/// `Ξ_{n,ℓ,0}` at a point off the z axis.
pub fn xi_eval(qn: QuantumNumbers, p: &SpatialPoint) -> Result<f64> {
    Wavefunction::new(qn, AngularKind::Pseudo)?.eval(p)
}

/// `|ψ|²` sampled on a rectangular `(r, θ)` grid, stored r-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityGrid {
    pub qn: QuantumNumbers,
    pub kind: AngularKind,
    pub r: Vec<f64>,
    pub theta: Vec<f64>,
    pub density: Vec<f64>,
}

impl DensityGrid {
    pub fn get(&self, i_r: usize, i_theta: usize) -> f64 {
        self.density[i_r * self.theta.len() + i_theta]
    }

    /// `(r, θ, density)` in output order.
    pub fn rows(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        self.r
            .iter()
            .flat_map(move |&r| self.theta.iter().map(move |&t| (r, t)))
            .zip(&self.density)
            .map(|((r, t), &d)| (r, t, d))
    }
}

/// Radii run over `[0, r_max]` inclusive. Regular grids include both poles;
/// pseudo grids use cell midpoints `θ_j = (j + ½)π/n_theta` so no sample
/// lands on the axis.
pub fn density_grid(qn: QuantumNumbers, kind: AngularKind, r_max: f64, n_r: usize, n_theta: usize) -> Result<DensityGrid> {
    if !(r_max > 0.0 && r_max.is_finite()) {
        return Err(Error::InvalidArgument(format!("r_max must be positive, got {r_max}")));
    }
    if n_r < 2 || n_theta < 2 {
        return Err(Error::InvalidArgument(format!("grid needs at least 2x2 nodes, got {n_r}x{n_theta}")));
    }
    let wf = Wavefunction::new(qn, kind)?;
    let r: Vec<f64> = (0..n_r).map(|i| r_max * i as f64 / (n_r - 1) as f64).collect();
    let theta: Vec<f64> = match kind {
        AngularKind::Regular => (0..n_theta).map(|j| PI * j as f64 / (n_theta - 1) as f64).collect(),
        AngularKind::Pseudo => (0..n_theta).map(|j| PI * (j as f64 + 0.5) / n_theta as f64).collect(),
    };
    let angular: Vec<f64> = theta.iter().map(|&t| wf.angular.eval(t)).collect::<Result<_>>()?;
    let phi2 = azimuthal_m0() * azimuthal_m0();
    let density: Vec<f64> = r
        .par_iter()
        .flat_map_iter(|&ri| {
            let rad = wf.radial.eval(ri);
            angular.iter().map(move |a| rad * rad * a * a * phi2)
        })
        .collect();
    Ok(DensityGrid { qn, kind, r, theta, density })
}
