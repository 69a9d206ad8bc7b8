//! Non-relativistic hydrogen eigenstates, their polar form, the guidance
//! momentum ∇S and the probability current `j = Im(ψ* ∇ψ)/m`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::physics::{AtomConfig, LocalVector, SphericalPoint};
use crate::special_functions::{associated_laguerre, factorial, spherical_harmonic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantumNumbers {
    n: u32,
    l: u32,
    m: i32,
}

impl QuantumNumbers {
    pub fn new(n: u32, l: u32, m: i32) -> Result<Self> {
        if n == 0 || l >= n || m.unsigned_abs() > l {
            return Err(Error::InvalidQuantumNumbers { n, l, m });
        }
        Ok(Self { n, l, m })
    }

    pub fn ground() -> Self {
        Self { n: 1, l: 0, m: 0 }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    /// All valid (n, l, m) with n up to `max_n`.
    pub fn all_up_to(max_n: u32) -> impl Iterator<Item = QuantumNumbers> {
        (1..=max_n).flat_map(|n| {
            (0..n).flat_map(move |l| (-(l as i32)..=l as i32).map(move |m| QuantumNumbers { n, l, m }))
        })
    }
}

/// ψ = R e^{iS}. `phase` is `None` where R = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarForm {
    pub amplitude: f64,
    pub phase: Option<f64>,
}

impl PolarForm {
    pub fn reconstruct(&self) -> Complex64 {
        match self.phase {
            Some(s) => Complex64::from_polar(self.amplitude, s),
            None => Complex64::new(0.0, 0.0),
        }
    }
}

pub fn polar_decompose(psi: Complex64) -> PolarForm {
    let amplitude = psi.norm();
    if amplitude == 0.0 {
        return PolarForm { amplitude, phase: None };
    }
    // atan2 returns -π for (-x, -0.0); fold it onto π
    let mut phase = psi.im.atan2(psi.re);
    if phase == -PI {
        phase = PI;
    }
    PolarForm { amplitude, phase: Some(phase) }
}

/// Normalized radial function R_nl(r).
pub fn hydrogen_radial(n: u32, l: u32, atom: &AtomConfig, r: f64) -> Result<f64> {
    let a0 = atom.bohr_radius();
    let nf = n as f64;
    let scale = 2.0 / (nf * a0);
    let norm = (scale.powi(3) * factorial(n - l - 1) / (2.0 * nf * factorial(n + l))).sqrt();
    let rho = scale * r;
    Ok(norm * (-0.5 * rho).exp() * rho.powi(l as i32) * associated_laguerre(n - l - 1, 2 * l + 1, rho)?)
}

/// Normalized hydrogen-like eigenfunction ψ_nlm(r, θ, φ).
pub fn hydrogen_wavefunction(q: &QuantumNumbers, atom: &AtomConfig, p: &SphericalPoint) -> Result<Complex64> {
    let radial = hydrogen_radial(q.n, q.l, atom, p.r)?;
    Ok(spherical_harmonic(q.l, q.m, p.theta, p.phi)? * radial)
}

/// Phase of ψ_nlm up to the sign of the real radial-angular factor: S = mφ.
pub fn eigenstate_phase(q: &QuantumNumbers, p: &SphericalPoint) -> f64 {
    q.m as f64 * p.phi
}

/// Guidance momentum p = ∇S with S = mφ, in the (r̂, θ̂, φ̂) basis.
///
/// For m = 0 the phase is constant everywhere and the momentum is zero at
/// every point, nodes included.
pub fn bohm_momentum(q: &QuantumNumbers, atom: &AtomConfig, p: &SphericalPoint) -> Result<LocalVector> {
    if q.m == 0 {
        return Ok(LocalVector::ZERO);
    }
    let rho_perp = p.r * p.theta.sin();
    if rho_perp == 0.0 || hydrogen_wavefunction(q, atom, p)?.norm_sqr() == 0.0 {
        return Err(Error::PhaseSingularity { r: p.r, theta: p.theta });
    }
    Ok(LocalVector::azimuthal(q.m as f64 / rho_perp))
}

/// Probability current `(1/2im)[ψ*∇ψ − ψ∇ψ*]/mass` with ħ = 1, in the
/// (r̂, θ̂, φ̂) basis. Vanishes identically for m = 0 and on the z axis.
pub fn probability_current(q: &QuantumNumbers, atom: &AtomConfig, p: &SphericalPoint) -> Result<LocalVector> {
    if q.m == 0 {
        return Ok(LocalVector::ZERO);
    }
    let rho_perp = p.r * p.theta.sin();
    if rho_perp == 0.0 {
        return Ok(LocalVector::ZERO);
    }
    let density = hydrogen_wavefunction(q, atom, p)?.norm_sqr();
    Ok(LocalVector::azimuthal(density * q.m as f64 / (atom.mass() * rho_perp)))
}
