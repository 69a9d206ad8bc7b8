//! Gauss–Legendre rules, compensated accumulation, and a product rule over
//! spherical coordinates.
//!
//! All rules are fixed node sets summed in a fixed order, so results are
//! bit-reproducible.

use std::f64::consts::PI;

use crate::physics::SphericalPoint;

/// Neumaier compensated sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Gauss–Legendre nodes and weights on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Newton iteration on `P_n` from the Chebyshev-like initial guesses.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes and weights mapped onto `[a, b]`.
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        self.mapped(a, b).map(|(x, w)| w * f(x)).collect::<CompensatedSum>().value()
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let p = if n == 0 { 1.0 } else { p1 };
    let d = n as f64 * (x * p - p0) / (x * x - 1.0);
    (p, d)
}

/// Composite Gauss–Legendre over `[0, r_max]` with panels that grow
/// geometrically away from the origin, so integrable endpoint behaviour at
/// `r = 0` (never sampled) is resolved.
#[derive(Debug, Clone)]
pub struct RadialRule {
    points: Vec<(f64, f64)>,
}

impl RadialRule {
    pub fn new(r_max: f64, panels: usize, nodes_per_panel: usize) -> Self {
        assert!(r_max > 0.0 && panels >= 1);
        let gl = GaussLegendre::new(nodes_per_panel);
        // first panel width r_max * 1e-6, ratio chosen so the panels tile [0, r_max]
        let first = 1e-6_f64;
        let ratio = solve_geometric_ratio(first, panels);
        let mut edges = Vec::with_capacity(panels + 1);
        edges.push(0.0);
        let mut width = first;
        let mut acc = 0.0;
        for _ in 0..panels {
            acc += width;
            edges.push(acc);
            width *= ratio;
        }
        let scale = r_max / acc;
        let mut points = Vec::with_capacity(panels * nodes_per_panel);
        for pair in edges.windows(2) {
            points.extend(gl.mapped(pair[0] * scale, pair[1] * scale));
        }
        Self { points }
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.points.iter().map(|&(r, w)| w * f(r)).collect::<CompensatedSum>().value()
    }
}

/// Ratio q with first * (q^n - 1)/(q - 1) = 1.
fn solve_geometric_ratio(first: f64, n: usize) -> f64 {
    if n == 1 {
        return 1.0;
    }
    let total = |q: f64| first * (q.powi(n as i32) - 1.0) / (q - 1.0);
    let (mut lo, mut hi) = (1.0 + 1e-12, 2.0);
    while total(hi) < 1.0 {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if total(mid) < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Product rule: radial composite Gauss–Legendre, Gauss–Legendre in θ, and
/// the trapezoid rule in φ (spectrally exact for trigonometric polynomials).
#[derive(Debug, Clone)]
pub struct SphericalQuadrature {
    radial: RadialRule,
    theta: Vec<(f64, f64)>,
    phi: Vec<(f64, f64)>,
}

impl SphericalQuadrature {
    pub fn new(radial: RadialRule, theta_nodes: usize, phi_nodes: usize) -> Self {
        let theta = GaussLegendre::new(theta_nodes).mapped(0.0, PI).collect();
        let dphi = 2.0 * PI / phi_nodes as f64;
        let phi = (0..phi_nodes).map(|k| (k as f64 * dphi, dphi)).collect();
        Self { radial, theta, phi }
    }

    /// Angular-only rule for integrals over the unit sphere.
    pub fn angular(theta_nodes: usize, phi_nodes: usize) -> Self {
        Self::new(RadialRule { points: vec![(1.0, 1.0)] }, theta_nodes, phi_nodes)
    }

    /// ∫ f dΩ over the unit sphere (ignores the radial rule).
    pub fn integrate_sphere<F: FnMut(f64, f64) -> f64>(&self, mut f: F) -> f64 {
        let mut acc = CompensatedSum::new();
        for &(t, wt) in &self.theta {
            let st = t.sin();
            for &(p, wp) in &self.phi {
                acc.add(wt * wp * st * f(t, p));
            }
        }
        acc.value()
    }

    /// ∫ f d³x with volume element r² sinθ.
    pub fn integrate<F: FnMut(&SphericalPoint) -> f64>(&self, mut f: F) -> f64 {
        let mut acc = CompensatedSum::new();
        for &(r, wr) in self.radial.points() {
            for &(t, wt) in &self.theta {
                let jac = wr * wt * r * r * t.sin();
                for &(p, wp) in &self.phi {
                    let point = SphericalPoint::unchecked(r, t, p);
                    acc.add(jac * wp * f(&point));
                }
            }
        }
        acc.value()
    }
}
