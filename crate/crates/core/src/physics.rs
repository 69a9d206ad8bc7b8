//! Constants, natural units (ħ = c = 1), per-atom parameters and geometry.

use std::f64::consts::{PI, TAU};

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// CODATA 2018 fine-structure constant.
pub const FINE_STRUCTURE: f64 = 0.007_297_352_569_3;

/// ħ / (m_e c²) in seconds: the natural time unit when `mass = 1` means the
/// electron mass. The only SI conversion used anywhere in the crate.
pub const NATURAL_TIME_SECONDS: f64 = 1.288_088_667_12e-21;

/// Hydrogen-like atom in natural units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AtomConfig {
    z: u32,
    alpha: f64,
    mass: f64,
    gamma_exp: f64,
    bohr_radius: f64,
}

impl AtomConfig {
    pub fn new(z: u32, alpha: f64, mass: f64) -> Result<Self> {
        if z == 0 {
            return Err(Error::domain("nuclear charge Z must be at least 1"));
        }
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::domain(format!("alpha must be positive and finite, got {alpha}")));
        }
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(Error::domain(format!("mass must be positive and finite, got {mass}")));
        }
        let z_alpha = z as f64 * alpha;
        if z_alpha >= 1.0 {
            return Err(Error::SupercriticalCoupling { z_alpha });
        }
        // (1 - x)(1 + x) keeps full relative precision as x -> 1
        let gamma_exp = ((1.0 - z_alpha) * (1.0 + z_alpha)).sqrt();
        Ok(Self {
            z,
            alpha,
            mass,
            gamma_exp,
            bohr_radius: 1.0 / (mass * z_alpha),
        })
    }

    /// Hydrogen with the physical coupling and unit mass.
    pub fn hydrogen() -> Self {
        Self::new(1, FINE_STRUCTURE, 1.0).expect("physical hydrogen is subcritical")
    }

    pub fn z(&self) -> u32 {
        self.z
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn z_alpha(&self) -> f64 {
        self.z as f64 * self.alpha
    }

    /// Relativistic radial exponent √(1 − (Zα)²).
    pub fn gamma_exp(&self) -> f64 {
        self.gamma_exp
    }

    pub fn bohr_radius(&self) -> f64 {
        self.bohr_radius
    }

    /// Small-to-large component ratio (1 − γ)/(Zα), evaluated as Zα/(1 + γ).
    pub fn mixing_ratio(&self) -> f64 {
        self.z_alpha() / (1.0 + self.gamma_exp)
    }
}

/// Point in spherical coordinates, θ ∈ [0, π], φ ∈ [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphericalPoint {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl SphericalPoint {
    /// Validates `r` and `θ`; `φ` is wrapped into [0, 2π).
    pub fn new(r: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(r >= 0.0 && r.is_finite()) {
            return Err(Error::domain(format!("r must be finite and non-negative, got {r}")));
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::domain(format!("theta must lie in [0, pi], got {theta}")));
        }
        if !phi.is_finite() {
            return Err(Error::domain(format!("phi must be finite, got {phi}")));
        }
        Ok(Self { r, theta, phi: wrap_angle(phi) })
    }

    pub(crate) fn unchecked(r: f64, theta: f64, phi: f64) -> Self {
        Self { r, theta, phi }
    }

    pub fn from_cartesian(x: &Vector3<f64>) -> Self {
        let r = x.norm();
        let theta = if r == 0.0 { 0.0 } else { (x.z / r).clamp(-1.0, 1.0).acos() };
        let phi = wrap_angle(x.y.atan2(x.x));
        Self { r, theta, phi }
    }

    pub fn to_cartesian(&self) -> Vector3<f64> {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        Vector3::new(self.r * st * cp, self.r * st * sp, self.r * ct)
    }

    pub fn r_hat(&self) -> Vector3<f64> {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        Vector3::new(st * cp, st * sp, ct)
    }

    pub fn theta_hat(&self) -> Vector3<f64> {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        Vector3::new(ct * cp, ct * sp, -st)
    }

    pub fn phi_hat(&self) -> Vector3<f64> {
        let (sp, cp) = self.phi.sin_cos();
        Vector3::new(-sp, cp, 0.0)
    }
}

fn wrap_angle(phi: f64) -> f64 {
    let w = phi.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// Vector given by components in the local orthonormal basis (r̂, θ̂, φ̂).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct LocalVector {
    pub radial: f64,
    pub polar: f64,
    pub azimuthal: f64,
}

impl LocalVector {
    pub const ZERO: LocalVector = LocalVector { radial: 0.0, polar: 0.0, azimuthal: 0.0 };

    pub fn azimuthal(value: f64) -> Self {
        Self { azimuthal: value, ..Self::ZERO }
    }

    pub fn norm(&self) -> f64 {
        (self.radial * self.radial + self.polar * self.polar + self.azimuthal * self.azimuthal).sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            radial: self.radial * s,
            polar: self.polar * s,
            azimuthal: self.azimuthal * s,
        }
    }

    pub fn to_cartesian(&self, at: &SphericalPoint) -> Vector3<f64> {
        // starting from +0 keeps an all-zero vector free of negative zeros
        Vector3::zeros() + at.r_hat() * self.radial + at.theta_hat() * self.polar + at.phi_hat() * self.azimuthal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hydrogen_gamma_exponent() {
        let atom = AtomConfig::new(1, FINE_STRUCTURE, 1.0).unwrap();
        // frozen: sqrt(1 - alpha^2) at 40 digits
        assert!((atom.gamma_exp() - 0.999_973_373_968_266_9).abs() < 1e-15);
        assert!((atom.mixing_ratio() - 0.003_648_724_860_181_956).abs() < 1e-17);
    }

    #[test]
    fn weak_coupling_limit() {
        let atom = AtomConfig::new(1, 1e-12, 1.0).unwrap();
        assert_eq!(atom.gamma_exp(), 1.0);
    }

    #[test]
    fn supercritical_is_rejected() {
        let err = AtomConfig::new(200, FINE_STRUCTURE, 1.0).unwrap_err();
        assert!(matches!(err, Error::SupercriticalCoupling { .. }));
        assert!(AtomConfig::new(137, 1.0 / 137.0, 1.0).is_err());
        assert!(AtomConfig::new(0, FINE_STRUCTURE, 1.0).is_err());
        assert!(AtomConfig::new(1, -1.0, 1.0).is_err());
        assert!(AtomConfig::new(1, FINE_STRUCTURE, 0.0).is_err());
    }

    #[test]
    fn point_validation_and_wrapping() {
        assert!(SphericalPoint::new(-1.0, 0.0, 0.0).is_err());
        assert!(SphericalPoint::new(1.0, 3.5, 0.0).is_err());
        let p = SphericalPoint::new(1.0, 1.0, -0.5).unwrap();
        assert!((p.phi - (TAU - 0.5)).abs() < 1e-15);
        let p = SphericalPoint::new(1.0, 1.0, -1e-300).unwrap();
        assert!(p.phi < TAU);
    }

    proptest! {
        #[test]
        fn derived_fields_are_consistent(z in 1u32..100, alpha in 1e-6f64..0.0099, mass in 0.01f64..300.0) {
            let atom = AtomConfig::new(z, alpha, mass).unwrap();
            let za = atom.z_alpha();
            prop_assert!((atom.gamma_exp().powi(2) + za * za - 1.0).abs() < 4.0 * f64::EPSILON);
            prop_assert!((atom.bohr_radius() * mass * za - 1.0).abs() < 4.0 * f64::EPSILON);
            prop_assert!(atom.gamma_exp() > 0.0 && atom.gamma_exp() <= 1.0);
        }

        #[test]
        fn cartesian_round_trip(r in 1e-3f64..1e3, theta in 1e-3f64..3.1, phi in 0.0f64..6.2) {
            let p = SphericalPoint::new(r, theta, phi).unwrap();
            let q = SphericalPoint::from_cartesian(&p.to_cartesian());
            prop_assert!((p.r - q.r).abs() < 1e-12 * r);
            prop_assert!((p.theta - q.theta).abs() < 1e-10);
            prop_assert!((p.phi - q.phi).abs() < 1e-10);
        }
    }
}
