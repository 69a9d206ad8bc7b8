//! Lorentz factors of the Dirac ground-state flow and the resulting lifetime
//! dilation of a bound unstable particle.
//!
//! The dilation is defined as the density-weighted ensemble mean
//! ⟨γ_L⟩ = ∫ γ_L(v(x)) j⁰(x) d³x over the normalized stationary density.

use std::f64::consts::PI;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::dirac::{bohm_velocity, dirac_current, dirac_ground_state, ground_state_quadrature, SpinOrientation};
use crate::error::{Error, Result};
use crate::physics::{AtomConfig, SphericalPoint};
use crate::quadrature::{CompensatedSum, GaussLegendre};

const MIN_THETA_NODES: usize = 8;
const MAX_THETA_NODES: usize = 4096;

/// 1/√(1 − |v|²) for |v| < 1.
pub fn lorentz_factor(v: &Vector3<f64>) -> Result<f64> {
    Ok(1.0 + lorentz_factor_minus_one(v.norm())?)
}

/// γ_L − 1 = v²/(s(1 + s)) with s = √(1 − v²), free of cancellation at small v.
pub fn lorentz_factor_minus_one(speed: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&speed) {
        return Err(Error::domain(format!("speed must satisfy 0 <= |v| < 1, got {speed}")));
    }
    let s = ((1.0 - speed) * (1.0 + speed)).sqrt();
    Ok(speed * speed / (s * (1.0 + s)))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanLorentzFactor {
    pub mean_gamma: f64,
    /// ⟨γ_L⟩ − 1 accumulated directly.
    pub excess: f64,
    pub error_estimate: f64,
    pub theta_nodes: usize,
}

/// θ-reduced quadrature. The velocity depends only on θ and the r-marginal of
/// j⁰ integrates out, leaving a weight proportional to j⁰(r, θ)·sinθ at any
/// fixed r. Gauss–Legendre nodes are doubled until successive results agree.
pub fn mean_lorentz_factor(spin: SpinOrientation, atom: &AtomConfig) -> Result<MeanLorentzFactor> {
    let r_ref = atom.bohr_radius();
    let mut n = MIN_THETA_NODES;
    let mut previous = theta_average(spin, atom, r_ref, n)?;
    loop {
        n *= 2;
        let current = theta_average(spin, atom, r_ref, n)?;
        let diff = (current - previous).abs();
        if diff <= 1e-14 * current.abs() || diff == 0.0 {
            return Ok(MeanLorentzFactor {
                mean_gamma: 1.0 + current,
                excess: current,
                error_estimate: diff,
                theta_nodes: n,
            });
        }
        if n >= MAX_THETA_NODES {
            return Err(Error::QuadratureNonConvergence { estimate: 1.0 + current, error: diff, nodes: n });
        }
        previous = current;
    }
}

fn theta_average(spin: SpinOrientation, atom: &AtomConfig, r: f64, nodes: usize) -> Result<f64> {
    let mut weighted = CompensatedSum::new();
    let mut total = CompensatedSum::new();
    for (theta, w) in GaussLegendre::new(nodes).mapped(0.0, PI) {
        let p = SphericalPoint::new(r, theta, 0.0)?;
        let psi = dirac_ground_state(spin, atom, &p)?;
        let j = dirac_current(&psi);
        let weight = w * theta.sin() * j.j0;
        let excess = lorentz_factor_minus_one((j.spatial() / j.j0).norm())?;
        weighted.add(weight * excess);
        total.add(weight);
    }
    Ok(weighted.value() / total.value())
}

/// Full r × θ × φ quadrature of ∫(γ_L − 1) j⁰ d³x / ∫ j⁰ d³x, independent of the
/// θ reduction. The error estimate compares two θ resolutions.
pub fn mean_lorentz_factor_volume(spin: SpinOrientation, atom: &AtomConfig) -> Result<MeanLorentzFactor> {
    let coarse = volume_average(spin, atom, 32)?;
    let fine = volume_average(spin, atom, 64)?;
    Ok(MeanLorentzFactor {
        mean_gamma: 1.0 + fine,
        excess: fine,
        error_estimate: (fine - coarse).abs(),
        theta_nodes: 64,
    })
}

fn volume_average(spin: SpinOrientation, atom: &AtomConfig, theta_nodes: usize) -> Result<f64> {
    let rule = ground_state_quadrature(atom, theta_nodes, 4);
    let mut failure: Option<Error> = None;
    let mut density = |p: &SphericalPoint, weighted: bool| -> f64 {
        let eval = || -> Result<f64> {
            let j = dirac_current(&dirac_ground_state(spin, atom, p)?);
            if weighted {
                Ok(j.j0 * lorentz_factor_minus_one((j.spatial() / j.j0).norm())?)
            } else {
                Ok(j.j0)
            }
        };
        eval().unwrap_or_else(|e| {
            failure.get_or_insert(e);
            0.0
        })
    };
    let weighted = rule.integrate(|p| density(p, true));
    let total = rule.integrate(|p| density(p, false));
    match failure {
        Some(e) => Err(e),
        None => Ok(weighted / total),
    }
}

/// τ' = τ₀ ⟨γ_L⟩.
pub fn dilated_lifetime(rest_lifetime: f64, mean_gamma: f64) -> Result<f64> {
    if !(rest_lifetime > 0.0 && rest_lifetime.is_finite()) {
        return Err(Error::domain(format!("rest lifetime must be positive, got {rest_lifetime}")));
    }
    if !(mean_gamma >= 1.0 && mean_gamma.is_finite()) {
        return Err(Error::domain(format!("mean Lorentz factor must be >= 1, got {mean_gamma}")));
    }
    Ok(rest_lifetime * mean_gamma)
}

/// Lorentz factor at the fastest point of the flow, the equator.
pub fn pointwise_max_gamma(spin: SpinOrientation, atom: &AtomConfig) -> Result<f64> {
    let equator = SphericalPoint::new(atom.bohr_radius(), PI / 2.0, 0.0)?;
    lorentz_factor(&bohm_velocity(spin, atom, &equator)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DilationReport {
    pub mean_gamma: f64,
    pub pointwise_max_gamma: f64,
    /// Seconds.
    pub rest_lifetime: f64,
    /// Seconds.
    pub dilated_lifetime: f64,
    pub quadrature_error_estimate: f64,
}

impl DilationReport {
    pub fn compute(spin: SpinOrientation, atom: &AtomConfig, rest_lifetime: f64) -> Result<Self> {
        let mean = mean_lorentz_factor(spin, atom)?;
        Ok(Self {
            mean_gamma: mean.mean_gamma,
            pointwise_max_gamma: pointwise_max_gamma(spin, atom)?.max(mean.mean_gamma),
            rest_lifetime,
            dilated_lifetime: dilated_lifetime(rest_lifetime, mean.mean_gamma)?,
            quadrature_error_estimate: mean.error_estimate,
        })
    }
}
