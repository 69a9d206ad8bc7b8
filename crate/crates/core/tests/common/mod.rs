//! Test-only oracles: finite differences, seeded random points, and closed
//! forms derived independently of the library code paths.
#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use dirac_bohm::{AtomConfig, SphericalPoint};
use nalgebra::Vector3;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random point with r in [r_lo, r_hi] Bohr radii and θ away from the poles
/// by `pole_margin`.
pub fn random_point(rng: &mut ChaCha8Rng, atom: &AtomConfig, r_lo: f64, r_hi: f64, pole_margin: f64) -> SphericalPoint {
    let r = rng.gen_range(r_lo..r_hi) * atom.bohr_radius();
    let theta = rng.gen_range(pole_margin..(PI - pole_margin));
    let phi = rng.gen_range(0.0..TAU);
    SphericalPoint::new(r, theta, phi).unwrap()
}

/// Central-difference gradient of a complex scalar field in Cartesian coordinates.
pub fn complex_gradient<F: Fn(&Vector3<f64>) -> Complex64>(f: F, x: &Vector3<f64>, h: f64) -> [Complex64; 3] {
    let mut g = [Complex64::new(0.0, 0.0); 3];
    for (i, gi) in g.iter_mut().enumerate() {
        let mut e = Vector3::zeros();
        e[i] = h;
        *gi = (f(&(x + e)) - f(&(x - e))) / (2.0 * h);
    }
    g
}

/// Central-difference divergence plus the scale Σ|∂_i j_i| it is compared against.
pub fn divergence<F: Fn(&Vector3<f64>) -> Vector3<f64>>(f: F, x: &Vector3<f64>, h: f64) -> (f64, f64) {
    let mut div = 0.0;
    let mut scale = 0.0;
    for i in 0..3 {
        let mut e = Vector3::zeros();
        e[i] = h;
        let d = (f(&(x + e))[i] - f(&(x - e))[i]) / (2.0 * h);
        div += d;
        scale += d.abs();
    }
    (div, scale)
}

/// ⟨γ_L⟩ for speed profile Zα sinθ over an isotropic angular density:
/// ½∫ sinθ dθ / √(1 − a² sin²θ) = atanh(a)/a. Returns ⟨γ_L⟩ − 1 via its series
/// a²/3 + a⁴/5 + a⁶/7 + …, which keeps full relative precision.
pub fn mean_gamma_excess_oracle(z_alpha: f64) -> f64 {
    let a2 = z_alpha * z_alpha;
    let mut term = a2;
    let mut sum = 0.0;
    for k in 1..40 {
        sum += term / (2 * k + 1) as f64;
        term *= a2;
    }
    sum
}

/// Leading-order small-coupling value of (⟨γ_L⟩ − 1)/(Zα)².
pub const SMALL_ALPHA_LAW: f64 = 1.0 / 3.0;
