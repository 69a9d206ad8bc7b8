//! Integral curves dx/dt = v(x) of either model's velocity field.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::dirac::{bohm_velocity, SpinOrientation};
use crate::error::{Error, Result};
use crate::physics::{AtomConfig, SphericalPoint};
use crate::schrodinger::{bohm_momentum, QuantumNumbers};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Schrodinger,
    Dirac,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Schrodinger => "schrodinger",
            Model::Dirac => "dirac",
        })
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "schrodinger" | "schroedinger" => Ok(Model::Schrodinger),
            "dirac" => Ok(Model::Dirac),
            other => Err(Error::domain(format!("unknown model '{other}'"))),
        }
    }
}

/// A stationary velocity field in Cartesian coordinates (units of c).
pub trait VelocityField {
    fn velocity(&self, x: &Vector3<f64>) -> Result<Vector3<f64>>;

    /// Identically zero field; integration is skipped.
    fn is_static(&self) -> bool {
        false
    }

    /// Trajectories closer than this to the origin are aborted.
    fn singular_radius(&self) -> f64;

    /// Signed angular velocity about z of the exact (circular) orbit through `start`.
    fn orbital_angular_velocity(&self, start: &SphericalPoint) -> Result<f64>;

    fn model(&self) -> Model;

    fn spin(&self) -> Option<SpinOrientation> {
        None
    }
}

#[derive(Debug, Clone, Copy)]
pub struct DiracField {
    pub spin: SpinOrientation,
    pub atom: AtomConfig,
}

impl VelocityField for DiracField {
    fn velocity(&self, x: &Vector3<f64>) -> Result<Vector3<f64>> {
        bohm_velocity(self.spin, &self.atom, &SphericalPoint::from_cartesian(x))
    }

    fn singular_radius(&self) -> f64 {
        1e-6 * self.atom.bohr_radius()
    }

    fn orbital_angular_velocity(&self, start: &SphericalPoint) -> Result<f64> {
        angular_velocity(self.spin, &self.atom, start)
    }

    fn model(&self) -> Model {
        Model::Dirac
    }

    fn spin(&self) -> Option<SpinOrientation> {
        Some(self.spin)
    }
}

/// Guidance velocity ∇S/m of a hydrogen eigenstate.
#[derive(Debug, Clone, Copy)]
pub struct SchrodingerField {
    pub state: QuantumNumbers,
    pub atom: AtomConfig,
}

impl VelocityField for SchrodingerField {
    fn velocity(&self, x: &Vector3<f64>) -> Result<Vector3<f64>> {
        if self.is_static() {
            return Ok(Vector3::zeros());
        }
        let p = SphericalPoint::from_cartesian(x);
        Ok(bohm_momentum(&self.state, &self.atom, &p)?.to_cartesian(&p) / self.atom.mass())
    }

    fn is_static(&self) -> bool {
        self.state.m() == 0
    }

    fn singular_radius(&self) -> f64 {
        1e-6 * self.atom.bohr_radius()
    }

    fn orbital_angular_velocity(&self, start: &SphericalPoint) -> Result<f64> {
        if self.is_static() {
            return Ok(0.0);
        }
        let rho = start.r * start.theta.sin();
        if rho == 0.0 {
            return Err(Error::PhaseSingularity { r: start.r, theta: start.theta });
        }
        Ok(self.state.m() as f64 / (self.atom.mass() * rho * rho))
    }

    fn model(&self) -> Model {
        Model::Schrodinger
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryState {
    pub t: f64,
    pub position: SphericalPoint,
    pub cartesian: Vector3<f64>,
    pub velocity: Vector3<f64>,
}

impl TrajectoryState {
    fn new(t: f64, cartesian: Vector3<f64>, velocity: Vector3<f64>) -> Self {
        Self {
            t,
            position: SphericalPoint::from_cartesian(&cartesian),
            cartesian,
            velocity,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub states: Vec<TrajectoryState>,
    pub model: Model,
    pub spin: Option<SpinOrientation>,
}

impl Trajectory {
    pub fn first(&self) -> Option<&TrajectoryState> {
        self.states.first()
    }

    pub fn last(&self) -> Option<&TrajectoryState> {
        self.states.last()
    }

    /// Signed area swept in the x–y plane, positive for anticlockwise motion
    /// seen from +z.
    pub fn signed_area_xy(&self) -> f64 {
        self.states
            .windows(2)
            .map(|w| {
                let (a, b) = (&w[0].cartesian, &w[1].cartesian);
                0.5 * (a.x * b.y - b.x * a.y)
            })
            .sum()
    }
}

/// Fixed-step classical RK4 in Cartesian coordinates. Returns `steps + 1`
/// states including the start.
pub fn integrate_trajectory(
    field: &dyn VelocityField,
    start: &SphericalPoint,
    dt: f64,
    steps: usize,
) -> Result<Trajectory> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::domain(format!("time step must be positive and finite, got {dt}")));
    }
    let mut trajectory = Trajectory {
        states: Vec::with_capacity(steps + 1),
        model: field.model(),
        spin: field.spin(),
    };
    let x0 = start.to_cartesian();

    if field.is_static() {
        trajectory.states.extend((0..=steps).map(|i| TrajectoryState {
            t: i as f64 * dt,
            position: *start,
            cartesian: x0,
            velocity: Vector3::zeros(),
        }));
        return Ok(trajectory);
    }

    let guard = field.singular_radius();
    let eval = |x: &Vector3<f64>| -> std::result::Result<Vector3<f64>, String> {
        if x.norm() < guard {
            return Err(format!("position within {guard:e} of the origin"));
        }
        field.velocity(x).map_err(|e| e.to_string())
    };
    let abort = |reason: String, trajectory: Trajectory| Error::TrajectoryAborted {
        reason,
        partial: Box::new(trajectory),
    };

    let v0 = match eval(&x0) {
        Ok(v) => v,
        Err(reason) => return Err(abort(reason, trajectory)),
    };
    trajectory.states.push(TrajectoryState { t: 0.0, position: *start, cartesian: x0, velocity: v0 });

    let (mut x, mut v) = (x0, v0);
    for i in 1..=steps {
        let step = (|| {
            let k1 = v;
            let k2 = eval(&(x + k1 * (0.5 * dt)))?;
            let k3 = eval(&(x + k2 * (0.5 * dt)))?;
            let k4 = eval(&(x + k3 * dt))?;
            let next = x + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
            let v_next = eval(&next)?;
            Ok::<_, String>((next, v_next))
        })();
        match step {
            Ok((next, v_next)) => {
                x = next;
                v = v_next;
                trajectory.states.push(TrajectoryState::new(i as f64 * dt, x, v));
            }
            Err(reason) => return Err(abort(reason, trajectory)),
        }
    }
    Ok(trajectory)
}

/// Signed angular velocity of the exact Dirac orbit: ω = ±|v(θ)|/(r sinθ),
/// zero on the axis.
pub fn angular_velocity(spin: SpinOrientation, atom: &AtomConfig, start: &SphericalPoint) -> Result<f64> {
    let rho = start.r * start.theta.sin();
    let speed = bohm_velocity(spin, atom, start)?.norm();
    if rho == 0.0 || speed == 0.0 {
        return Ok(0.0);
    }
    Ok(spin.sign() * speed / rho)
}

/// Period 2π/|ω| of the circle through `start`; `None` on the axis.
pub fn analytic_period(spin: SpinOrientation, atom: &AtomConfig, start: &SphericalPoint) -> Result<Option<f64>> {
    let omega = angular_velocity(spin, atom, start)?;
    Ok((omega != 0.0).then(|| TAU / omega.abs()))
}

/// Exact solution: r and θ fixed, φ(t) = φ₀ + ωt.
pub fn analytic_orbit(spin: SpinOrientation, atom: &AtomConfig, start: &SphericalPoint, t: f64) -> Result<SphericalPoint> {
    let omega = angular_velocity(spin, atom, start)?;
    Ok(circular_position(start, omega, t))
}

pub fn circular_position(start: &SphericalPoint, omega: f64, t: f64) -> SphericalPoint {
    SphericalPoint::new(start.r, start.theta, start.phi + omega * t).expect("start point is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn dirac(spin: SpinOrientation) -> DiracField {
        DiracField { spin, atom: AtomConfig::hydrogen() }
    }

    #[test]
    fn ground_state_schrodinger_is_fixed() {
        let field = SchrodingerField { state: QuantumNumbers::ground(), atom: AtomConfig::hydrogen() };
        let start = SphericalPoint::new(120.0, 1.0, 2.0).unwrap();
        let traj = integrate_trajectory(&field, &start, 10.0, 50).unwrap();
        assert_eq!(traj.states.len(), 51);
        assert!(traj.states.iter().all(|s| s.position == start && s.velocity == Vector3::zeros()));
    }

    #[test]
    fn zero_steps_returns_start() {
        let start = SphericalPoint::new(137.0, PI / 2.0, 0.0).unwrap();
        let traj = integrate_trajectory(&dirac(SpinOrientation::Up), &start, 1.0, 0).unwrap();
        assert_eq!(traj.states.len(), 1);
        assert_eq!(traj.states[0].position, start);
    }

    #[test]
    fn rejects_bad_step() {
        let start = SphericalPoint::new(137.0, PI / 2.0, 0.0).unwrap();
        assert!(integrate_trajectory(&dirac(SpinOrientation::Up), &start, 0.0, 3).is_err());
        assert!(integrate_trajectory(&dirac(SpinOrientation::Up), &start, f64::NAN, 3).is_err());
    }

    #[test]
    fn origin_start_aborts() {
        let start = SphericalPoint::new(0.0, 0.0, 0.0).unwrap();
        match integrate_trajectory(&dirac(SpinOrientation::Up), &start, 1.0, 3) {
            Err(Error::TrajectoryAborted { partial, .. }) => assert!(partial.states.is_empty()),
            other => panic!("expected abort, got {other:?}"),
        }
    }

    #[test]
    fn schrodinger_axis_start_aborts() {
        let field = SchrodingerField { state: QuantumNumbers::new(2, 1, 1).unwrap(), atom: AtomConfig::hydrogen() };
        let start = SphericalPoint::new(137.0, 0.0, 0.0).unwrap();
        assert!(matches!(
            integrate_trajectory(&field, &start, 1.0, 3),
            Err(Error::TrajectoryAborted { .. })
        ));
    }

    #[test]
    fn analytic_orbit_half_period() {
        let atom = AtomConfig::hydrogen();
        let start = SphericalPoint::new(atom.bohr_radius(), PI / 2.0, 0.3).unwrap();
        assert_eq!(analytic_orbit(SpinOrientation::Up, &atom, &start, 0.0).unwrap(), start);
        let period = analytic_period(SpinOrientation::Up, &atom, &start).unwrap().unwrap();
        let half = analytic_orbit(SpinOrientation::Up, &atom, &start, 0.5 * period).unwrap();
        assert!((half.phi - (0.3 + PI)).abs() < 1e-12);
        // frozen: ω = α / a0 = α² at m = 1
        let omega = angular_velocity(SpinOrientation::Up, &atom, &start).unwrap();
        assert!((omega - 5.325_135_452_066_931e-5).abs() < 1e-17);
        assert!(angular_velocity(SpinOrientation::Down, &atom, &start).unwrap() < 0.0);
    }

    #[test]
    fn poles_do_not_move() {
        let atom = AtomConfig::hydrogen();
        let start = SphericalPoint::new(50.0, 0.0, 1.0).unwrap();
        assert_eq!(analytic_period(SpinOrientation::Up, &atom, &start).unwrap(), None);
        assert_eq!(analytic_orbit(SpinOrientation::Up, &atom, &start, 1e9).unwrap(), start);
    }
}
