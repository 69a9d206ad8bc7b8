//! Real-valued special functions used by the hydrogen and Dirac wavefunctions.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense polynomial in ascending powers, `c[0] + c[1] x + ...`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialCoefficients {
    coefficients: Vec<f64>,
}

impl PolynomialCoefficients {
    pub fn new(coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::domain("polynomial needs at least one coefficient"));
        }
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::domain("polynomial coefficients must be finite"));
        }
        if coefficients.len() > 1 && *coefficients.last().unwrap() == 0.0 {
            return Err(Error::domain("leading coefficient must be nonzero"));
        }
        Ok(Self { coefficients })
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }
}

/// Explicit coefficients of the generalized Laguerre polynomial `L_degree^order`.
pub fn laguerre_coefficients(degree: u32, order: u32) -> PolynomialCoefficients {
    let n = degree as usize;
    let k = order as f64;
    // c_i = (-1)^i C(n+k, n-i) / i!, built by the ratio c_{i+1}/c_i = -(n-i) / ((k+i+1)(i+1))
    let mut c = Vec::with_capacity(n + 1);
    let mut c0 = 1.0;
    for j in 1..=n {
        c0 *= (k + j as f64) / j as f64;
    }
    c.push(c0);
    for i in 0..n {
        let next = -c[i] * (n - i) as f64 / ((k + i as f64 + 1.0) * (i as f64 + 1.0));
        c.push(next);
    }
    PolynomialCoefficients { coefficients: c }
}

/// Generalized Laguerre polynomial `L_degree^order(x)`, with `L_0 = 1` and
/// `L_1 = 1 + order - x`, evaluated by the three-term recurrence.
pub fn associated_laguerre(degree: u32, order: u32, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(format!("laguerre argument must be finite, got {x}")));
    }
    let k = order as f64;
    if degree == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + k - x;
    for n in 2..=degree {
        let nf = n as f64;
        let next = ((2.0 * nf - 1.0 + k - x) * cur - (nf - 1.0 + k) * prev) / nf;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Associated Legendre function `P_l^m(cos θ)` for `0 <= m <= l`, including the
/// Condon–Shortley phase `(-1)^m`.
pub fn associated_legendre(l: u32, m: u32, x: f64) -> f64 {
    debug_assert!(m <= l);
    let sin_theta = (1.0 - x * x).max(0.0).sqrt();
    let mut pmm = 1.0;
    let mut odd = 1.0;
    for _ in 0..m {
        pmm *= -odd * sin_theta;
        odd += 2.0;
    }
    if l == m {
        return pmm;
    }
    let mut pm1 = x * (2 * m + 1) as f64 * pmm;
    if l == m + 1 {
        return pm1;
    }
    let mut pm0 = pmm;
    for ll in (m + 2)..=l {
        let next = (x * (2 * ll - 1) as f64 * pm1 - (ll + m - 1) as f64 * pm0) / (ll - m) as f64;
        pm0 = pm1;
        pm1 = next;
    }
    pm1
}

/// Orthonormal spherical harmonic `Y_l^m(θ, φ)` with the Condon–Shortley phase.
pub fn spherical_harmonic(l: u32, m: i32, theta: f64, phi: f64) -> Result<Complex64> {
    if m.unsigned_abs() > l {
        return Err(Error::domain(format!("|m| = {} exceeds l = {l}", m.abs())));
    }
    if !(0.0..=PI).contains(&theta) || !phi.is_finite() {
        return Err(Error::domain(format!("theta must lie in [0, pi], got {theta}")));
    }
    let ma = m.unsigned_abs();
    // (l - |m|)! / (l + |m|)!
    let ratio: f64 = ((l - ma + 1)..=(l + ma)).map(|j| 1.0 / j as f64).product();
    let norm = ((2 * l + 1) as f64 / (4.0 * PI) * ratio).sqrt();
    let value = norm * associated_legendre(l, ma, theta.cos());
    let positive = Complex64::from_polar(value, ma as f64 * phi);
    if m >= 0 {
        Ok(positive)
    } else if ma.is_multiple_of(2) {
        Ok(positive.conj())
    } else {
        Ok(-positive.conj())
    }
}

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFICIENTS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Euler Gamma for positive real arguments (Lanczos, g = 7, nine terms).
///
/// Arguments below 1/2 are shifted up with `Γ(x) = Γ(x + 1) / x`.
pub fn gamma_function(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 || x.is_infinite() {
        return Err(Error::domain(format!("gamma needs a positive finite argument, got {x}")));
    }
    if x < 0.5 {
        return Ok(gamma_function(x + 1.0)? / x);
    }
    let z = x - 1.0;
    let mut series = LANCZOS_COEFFICIENTS[0];
    for (i, &c) in LANCZOS_COEFFICIENTS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Ok((2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * series)
}

/// `n!` as a float.
pub fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}
