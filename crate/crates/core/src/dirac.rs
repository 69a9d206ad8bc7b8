//! Dirac–Pauli gamma matrices, the n = 1, j = 1/2 Coulomb spinors, the
//! bilinear current j^μ = Ψ̄γ^μΨ and the velocity v^i = j^i / j^0.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use nalgebra::{Matrix4, Vector3};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::physics::{AtomConfig, SphericalPoint};
use crate::quadrature::{RadialRule, SphericalQuadrature};
use crate::special_functions::gamma_function;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Minkowski metric η = diag(+1, −1, −1, −1).
pub fn minkowski(mu: usize, nu: usize) -> f64 {
    match (mu, nu) {
        (0, 0) => 1.0,
        (a, b) if a == b => -1.0,
        _ => 0.0,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GammaMatrix {
    pub label: usize,
    pub entries: Matrix4<Complex64>,
}

/// γ⁰ = diag(1, 1, −1, −1) and γ^i = [[0, σ^i], [−σ^i, 0]].
pub fn gamma_matrices() -> [GammaMatrix; 4] {
    let pauli: [[[Complex64; 2]; 2]; 3] = [
        [[ZERO, ONE], [ONE, ZERO]],
        [[ZERO, -I], [I, ZERO]],
        [[ONE, ZERO], [ZERO, -ONE]],
    ];
    let g0 = Matrix4::from_diagonal(&nalgebra::Vector4::new(ONE, ONE, -ONE, -ONE));
    let spatial = |k: usize| {
        let mut m = Matrix4::<Complex64>::zeros();
        for a in 0..2 {
            for b in 0..2 {
                m[(a, b + 2)] = pauli[k][a][b];
                m[(a + 2, b)] = -pauli[k][a][b];
            }
        }
        m
    };
    [
        GammaMatrix { label: 0, entries: g0 },
        GammaMatrix { label: 1, entries: spatial(0) },
        GammaMatrix { label: 2, entries: spatial(1) },
        GammaMatrix { label: 3, entries: spatial(2) },
    ]
}

/// γ⁰γ^μ for μ = 0..3, so that Ψ̄γ^μΨ = Ψ†(γ⁰γ^μ)Ψ.
fn current_kernels() -> &'static [Matrix4<Complex64>; 4] {
    static KERNELS: OnceLock<[Matrix4<Complex64>; 4]> = OnceLock::new();
    KERNELS.get_or_init(|| {
        let g = gamma_matrices();
        [0, 1, 2, 3].map(|mu| g[0].entries * g[mu].entries)
    })
}

/// Four-component bispinor evaluated at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor4(pub [Complex64; 4]);

impl Spinor4 {
    /// Ψ†Ψ.
    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum()
    }

    fn as_vector(&self) -> nalgebra::Vector4<Complex64> {
        nalgebra::Vector4::from_row_slice(&self.0)
    }
}

/// Row spinor Ψ̄ = Ψ†γ⁰.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdjointSpinor(pub [Complex64; 4]);

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourCurrent {
    pub j0: f64,
    pub j1: f64,
    pub j2: f64,
    pub j3: f64,
}

impl FourCurrent {
    pub fn spatial(&self) -> Vector3<f64> {
        Vector3::new(self.j1, self.j2, self.j3)
    }

    /// j⁰² − |j⃗|².
    pub fn minkowski_norm(&self) -> f64 {
        self.j0 * self.j0 - self.spatial().norm_squared()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpinOrientation {
    Up,
    Down,
}

impl SpinOrientation {
    /// +1 for up, −1 for down.
    pub fn sign(self) -> f64 {
        match self {
            SpinOrientation::Up => 1.0,
            SpinOrientation::Down => -1.0,
        }
    }
}

impl fmt::Display for SpinOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpinOrientation::Up => "up",
            SpinOrientation::Down => "down",
        })
    }
}

impl FromStr for SpinOrientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "up" => Ok(SpinOrientation::Up),
            "down" => Ok(SpinOrientation::Down),
            other => Err(Error::domain(format!("unknown spin orientation '{other}'"))),
        }
    }
}

/// A(r) = (2mZα)^{3/2}/√(4π) · √((1+γ)/(2Γ(1+2γ))) · (2mZαr)^{γ−1} · e^{−mZαr}.
pub fn radial_amplitude(atom: &AtomConfig, r: f64) -> Result<f64> {
    if r == 0.0 {
        return Err(Error::OriginSingularity);
    }
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain(format!("radius must be positive and finite, got {r}")));
    }
    let g = atom.gamma_exp();
    let k = 2.0 * atom.mass() * atom.z_alpha();
    let prefactor = k.powf(1.5) / (4.0 * std::f64::consts::PI).sqrt()
        * ((1.0 + g) / (2.0 * gamma_function(1.0 + 2.0 * g)?)).sqrt();
    Ok(prefactor * (k * r).powf(g - 1.0) * (-0.5 * k * r).exp())
}

/// Ground-state spinor.
///
/// Up: A·(1, 0, iB, iD e^{iφ}). Down: A·(0, 1, iD e^{−iφ}, −iB).
/// B = ((1−γ)/Zα) cosθ, D = ((1−γ)/Zα) sinθ.
pub fn dirac_ground_state(spin: SpinOrientation, atom: &AtomConfig, p: &SphericalPoint) -> Result<Spinor4> {
    let a = radial_amplitude(atom, p.r)?;
    let ratio = atom.mixing_ratio();
    let (st, ct) = p.theta.sin_cos();
    let b = ratio * ct;
    let d = ratio * st;
    let c = |z: Complex64| z * a;
    Ok(Spinor4(match spin {
        SpinOrientation::Up => [
            c(ONE),
            ZERO,
            c(I * b),
            c(I * d * Complex64::from_polar(1.0, p.phi)),
        ],
        SpinOrientation::Down => [
            ZERO,
            c(ONE),
            c(I * d * Complex64::from_polar(1.0, -p.phi)),
            c(-I * b),
        ],
    }))
}

pub fn dirac_adjoint(psi: &Spinor4) -> AdjointSpinor {
    let g0 = &gamma_matrices()[0].entries;
    let row = psi.as_vector().adjoint() * g0;
    AdjointSpinor([row[0], row[1], row[2], row[3]])
}

/// j^μ = Re[Ψ̄γ^μΨ]. The imaginary parts vanish for a Hermitian form and are
/// checked against 1e−13 · Ψ†Ψ.
pub fn dirac_current(psi: &Spinor4) -> FourCurrent {
    let v = psi.as_vector();
    let scale = psi.norm_sqr();
    let mut j = [0.0; 4];
    for (mu, kernel) in current_kernels().iter().enumerate() {
        let value = v.dotc(&(kernel * v));
        debug_assert!(
            value.im.abs() <= 1e-13 * scale.max(f64::MIN_POSITIVE),
            "non-real bilinear component {mu}: {value}"
        );
        j[mu] = value.re;
    }
    FourCurrent { j0: j[0], j1: j[1], j2: j[2], j3: j[3] }
}

/// j⁰ = A²(1 + B² + D²), j¹ = ∓2A²D sinφ, j² = ±2A²D cosφ, j³ = 0.
pub fn closed_form_current(spin: SpinOrientation, atom: &AtomConfig, p: &SphericalPoint) -> Result<FourCurrent> {
    let a2 = radial_amplitude(atom, p.r)?.powi(2);
    let ratio = atom.mixing_ratio();
    let (st, ct) = p.theta.sin_cos();
    let (b, d) = (ratio * ct, ratio * st);
    let (sp, cp) = p.phi.sin_cos();
    let s = spin.sign();
    Ok(FourCurrent {
        j0: a2 * (1.0 + b * b + d * d),
        j1: -s * 2.0 * a2 * d * sp,
        j2: s * 2.0 * a2 * d * cp,
        j3: 0.0,
    })
}

/// Velocity (units of c) from a four-current.
pub fn velocity_from_current(j: &FourCurrent) -> Result<Vector3<f64>> {
    if j.j0.is_nan() || j.j0 <= 0.0 {
        return Err(Error::UndefinedVelocity { j0: j.j0 });
    }
    Ok(j.spatial() / j.j0)
}

/// v^i = Ψ̄γ^iΨ / Ψ†Ψ in Cartesian components.
pub fn bohm_velocity(spin: SpinOrientation, atom: &AtomConfig, p: &SphericalPoint) -> Result<Vector3<f64>> {
    velocity_from_current(&dirac_current(&dirac_ground_state(spin, atom, p)?))
}

/// Product rule adapted to the ground-state density, whose radial profile is
/// (2mZαr)^{2γ} e^{−2mZαr} after the r² Jacobian.
pub fn ground_state_quadrature(atom: &AtomConfig, theta_nodes: usize, phi_nodes: usize) -> SphericalQuadrature {
    let r_max = 90.0 / (2.0 * atom.mass() * atom.z_alpha());
    SphericalQuadrature::new(RadialRule::new(r_max, 48, 20), theta_nodes, phi_nodes)
}

/// Result of the numeric ∫ j⁰ d³x check on the closed-form A(r).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalizationCheck {
    pub integral: f64,
    /// Factor by which A(r) has to be multiplied to reach unit norm.
    pub amplitude_correction: f64,
}

impl NormalizationCheck {
    pub fn needs_correction(&self) -> bool {
        (self.amplitude_correction - 1.0).abs() > 1e-9
    }
}

pub fn normalization_check(spin: SpinOrientation, atom: &AtomConfig) -> Result<NormalizationCheck> {
    let rule = ground_state_quadrature(atom, 32, 4);
    let mut failure = None;
    let integral = rule.integrate(|p| match dirac_ground_state(spin, atom, p) {
        Ok(psi) => dirac_current(&psi).j0,
        Err(e) => {
            failure.get_or_insert(e);
            0.0
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(NormalizationCheck {
        integral,
        amplitude_correction: integral.sqrt().recip(),
    })
}
