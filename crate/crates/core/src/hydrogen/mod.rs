//! Hydrogen bound states `Ψ_{n,ℓ,0}` and the pseudo-states `Ξ_{n,ℓ,0}` that
//! replace the regular polar factor with a normalized Legendre function of
//! the second kind. Hartree atomic units throughout.

mod angular;
mod radial;
mod wavefunction;

pub use angular::{theta_regular, xi, xi_with_sign, AngularKind, AngularPart, SignConvention};
pub use radial::{gamma_moment, radial, RadialFunction};
pub use wavefunction::{density_grid, psi_eval, xi_eval, DensityGrid, Wavefunction};

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::exact::{rat, BigRational};

/// Physical constants in the unit system used by the crate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitSystem {
    pub hbar: f64,
    pub mu: f64,
    pub e_charge: f64,
    pub a0: f64,
}

pub const ATOMIC_UNITS: UnitSystem = UnitSystem { hbar: 1.0, mu: 1.0, e_charge: 1.0, a0: 1.0 };

impl UnitSystem {
    /// `ħ²/(μe²)`
    pub fn bohr_radius(&self) -> f64 {
        self.hbar * self.hbar / (self.mu * self.e_charge * self.e_charge)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumNumbers {
    n: u32,
    ell: u32,
    m: i32,
}

impl QuantumNumbers {
    pub fn new(n: u32, ell: u32, m: i32) -> Result<Self> {
        let invalid = |reason| Error::InvalidQuantumNumbers { n: n as i64, ell: ell as i64, m: m as i64, reason };
        if n < 1 {
            return Err(invalid("n must be at least 1"));
        }
        if ell >= n {
            return Err(invalid("l must be below n"));
        }
        if m.unsigned_abs() > ell {
            return Err(invalid("|m| must not exceed l"));
        }
        Ok(Self { n, ell, m })
    }

    /// `(n, ℓ, 0)`
    pub fn axial(n: u32, ell: u32) -> Result<Self> {
        Self::new(n, ell, 0)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    pub(crate) fn require_axial(&self) -> Result<()> {
        if self.m != 0 {
            return Err(Error::InvalidQuantumNumbers {
                n: self.n as i64,
                ell: self.ell as i64,
                m: self.m as i64,
                reason: "only m = 0 states are supported",
            });
        }
        Ok(())
    }
}

/// Point in spherical coordinates, `r` in Bohr radii.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpatialPoint {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl SpatialPoint {
    pub fn new(r: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(r >= 0.0 && r.is_finite()) {
            return Err(Error::Domain { value: r, domain: "r >= 0" });
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::Domain { value: theta, domain: "theta in [0, pi]" });
        }
        if !(0.0..2.0 * PI).contains(&phi) {
            return Err(Error::Domain { value: phi, domain: "phi in [0, 2pi)" });
        }
        Ok(Self { r, theta, phi })
    }
}

/// `λ_n = -1/(2n²)` Hartree.
pub fn eigenvalue(n: u32) -> Result<f64> {
    Ok(crate::exact::rat_to_f64(&eigenvalue_exact(n)?))
}

pub fn eigenvalue_exact(n: u32) -> Result<BigRational> {
    if n < 1 {
        return Err(Error::InvalidArgument("principal quantum number must be at least 1".into()));
    }
    Ok(rat(-1, 2 * (n as i64) * (n as i64)))
}

/// `Φ_0(φ) = 1/√(2π)`
pub(crate) fn azimuthal_m0() -> f64 {
    (2.0 * PI).sqrt().recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalues() {
        assert_eq!(eigenvalue(1).unwrap(), -0.5);
        assert_eq!(eigenvalue(2).unwrap(), -0.125);
        for n in 1..20 {
            assert_eq!(eigenvalue_exact(n).unwrap() / eigenvalue_exact(2 * n).unwrap(), rat(4, 1));
        }
        assert!(eigenvalue(0).is_err());
    }

    #[test]
    fn units_are_consistent() {
        assert_eq!(ATOMIC_UNITS.bohr_radius(), ATOMIC_UNITS.a0);
    }

    #[test]
    fn quantum_number_rules() {
        assert!(QuantumNumbers::new(1, 0, 0).is_ok());
        assert!(QuantumNumbers::new(0, 0, 0).is_err());
        assert!(QuantumNumbers::new(2, 2, 0).is_err());
        assert!(QuantumNumbers::new(3, 1, -2).is_err());
        assert!(QuantumNumbers::new(3, 2, -2).unwrap().require_axial().is_err());
    }

    #[test]
    fn point_ranges() {
        assert!(SpatialPoint::new(1.0, 0.0, 0.0).is_ok());
        assert!(SpatialPoint::new(-1.0, 0.0, 0.0).is_err());
        assert!(SpatialPoint::new(1.0, 3.5, 0.0).is_err());
        assert!(SpatialPoint::new(1.0, 1.0, 2.0 * PI).is_err());
    }
}
