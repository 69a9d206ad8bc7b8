use std::f64::consts::{PI, TAU};
use std::path::{Path, PathBuf};

use nalgebra::Vector3;
use serde_json::{json, Map, Value};

use super::output::{format_number, to_json_string, write_output, Table};
use super::{Format, GridArgs, RunConfig};
use crate::dilation::{mean_lorentz_factor, mean_lorentz_factor_volume, DilationReport};
use crate::dirac::{
    bohm_velocity, dirac_current, dirac_ground_state, normalization_check, radial_amplitude, velocity_from_current,
};
use crate::error::{Error, Result};
use crate::physics::{AtomConfig, SphericalPoint, NATURAL_TIME_SECONDS};
use crate::schrodinger::{bohm_momentum, hydrogen_wavefunction, polar_decompose, probability_current};
use crate::trajectory::{
    circular_position, integrate_trajectory, DiracField, Model, SchrodingerField, VelocityField,
};

const ALPHA_SCALING: [f64; 4] = [1.0, 0.5, 0.1, 0.01];

/// Grid in Bohr radii; θ spans [0, π] inclusive, φ spans [0, 2π) exclusive.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldGrid {
    pub r_min: f64,
    pub r_max: f64,
    pub r_count: usize,
    pub theta_count: usize,
    pub phi_count: usize,
}

impl FieldGrid {
    pub fn from_args(args: &GridArgs) -> Result<Self> {
        let grid = Self {
            r_min: args.r_min,
            r_max: args.r_max,
            r_count: args.r_count,
            theta_count: args.theta_count,
            phi_count: args.phi_count,
        };
        grid.validate()?;
        Ok(grid)
    }

    fn validate(&self) -> Result<()> {
        if !(self.r_min >= 0.0 && self.r_min.is_finite() && self.r_max.is_finite() && self.r_max >= self.r_min) {
            return Err(Error::domain(format!("invalid radial range [{}, {}]", self.r_min, self.r_max)));
        }
        if self.r_count == 0 || self.theta_count == 0 || self.phi_count == 0 {
            return Err(Error::domain("grid counts must be at least 1"));
        }
        Ok(())
    }

    fn radii(&self) -> Vec<f64> {
        linspace(self.r_min, self.r_max, self.r_count)
    }

    fn thetas(&self) -> Vec<f64> {
        if self.theta_count == 1 {
            vec![PI / 2.0]
        } else {
            linspace(0.0, PI, self.theta_count)
        }
    }

    fn phis(&self) -> Vec<f64> {
        (0..self.phi_count).map(|k| TAU * k as f64 / self.phi_count as f64).collect()
    }
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![a];
    }
    (0..n)
        .map(|i| if i == n - 1 { b } else { a + (b - a) * i as f64 / (n - 1) as f64 })
        .collect()
}

fn describe(config: &RunConfig, command: &str) -> String {
    let model = match config.model {
        Model::Dirac => format!("model=dirac spin={}", config.spin()),
        Model::Schrodinger => {
            let q = config.quantum();
            format!("model=schrodinger n={} l={} m={}", q.n(), q.l(), q.m())
        }
    };
    format!(
        "dirac-bohm {command}: {model} Z={} alpha={} mass={}; natural units (hbar=c=1), lengths and times in 1/mass, velocities in c, lifetimes in seconds",
        config.z,
        format_number(config.alpha()),
        format_number(config.mass),
    )
}

fn meta(config: &RunConfig) -> Value {
    json!({
        "model": config.model,
        "spin": config.spin,
        "quantum_numbers": config.quantum.map(|q| [q.n() as i64, q.l() as i64, q.m() as i64]),
        "Z": config.z,
        "alpha": config.alpha(),
        "alpha_scale": config.alpha_scale,
        "mass": config.mass,
    })
}

struct FieldSample {
    current: [f64; 4],
    velocity: Vector3<f64>,
}

fn sample_field(config: &RunConfig, atom: &AtomConfig, p: &SphericalPoint) -> Result<FieldSample> {
    match config.model {
        Model::Dirac => {
            let j = dirac_current(&dirac_ground_state(config.spin(), atom, p)?);
            Ok(FieldSample { current: [j.j0, j.j1, j.j2, j.j3], velocity: velocity_from_current(&j)? })
        }
        Model::Schrodinger => {
            let q = config.quantum();
            let density = hydrogen_wavefunction(&q, atom, p)?.norm_sqr();
            let j = probability_current(&q, atom, p)?.to_cartesian(p);
            let velocity = match bohm_momentum(&q, atom, p) {
                Ok(mom) => mom.to_cartesian(p) / atom.mass(),
                Err(Error::PhaseSingularity { .. }) => Vector3::repeat(f64::NAN),
                Err(e) => return Err(e),
            };
            Ok(FieldSample { current: [density, j.x, j.y, j.z], velocity })
        }
    }
}

fn emit(config: &RunConfig, table: &Table, extra: Map<String, Value>) -> Result<String> {
    match config.format {
        Format::Csv => Ok(table.to_csv()),
        Format::Json => table.to_json(meta(config), extra),
    }
}

pub fn cmd_field(config: &RunConfig, grid: &FieldGrid) -> Result<()> {
    grid.validate()?;
    let atom = config.atom()?;
    let a0 = atom.bohr_radius();
    let mut table = Table::new(
        describe(config, "field"),
        vec!["r", "theta", "phi", "j0", "j1", "j2", "j3", "vx", "vy", "vz", "speed"],
    );
    for r in grid.radii() {
        for theta in grid.thetas() {
            for phi in grid.phis() {
                let p = SphericalPoint::new(r * a0, theta, phi)?;
                let s = sample_field(config, &atom, &p)?;
                let v = s.velocity;
                table.push(vec![
                    p.r, p.theta, p.phi, s.current[0], s.current[1], s.current[2], s.current[3], v.x, v.y, v.z,
                    v.norm(),
                ]);
            }
        }
    }
    let content = emit(config, &table, Map::new())?;
    write_output(config.output_path.as_deref(), &content)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryRequest {
    /// Bohr radii.
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
    pub dt: Option<f64>,
    pub steps: usize,
}

fn field_for(config: &RunConfig, atom: AtomConfig) -> Box<dyn VelocityField> {
    match config.model {
        Model::Dirac => Box::new(DiracField { spin: config.spin(), atom }),
        Model::Schrodinger => Box::new(SchrodingerField { state: config.quantum(), atom }),
    }
}

fn summary_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".summary.json");
    PathBuf::from(name)
}

pub fn cmd_trajectory(config: &RunConfig, request: &TrajectoryRequest) -> Result<()> {
    let atom = config.atom()?;
    let start = SphericalPoint::new(request.r * atom.bohr_radius(), request.theta, request.phi)?;
    let field = field_for(config, atom);
    let omega = field.orbital_angular_velocity(&start).ok();
    let period = omega.filter(|w| *w != 0.0).map(|w| TAU / w.abs());
    // without a finite period fall back to the atomic time unit 1/(m (Zα)²)
    let dt = match request.dt {
        Some(dt) => dt,
        None => period.map_or(1.0 / (atom.mass() * atom.z_alpha().powi(2)), |t| t / 1e4),
    };

    let (trajectory, failure) = match integrate_trajectory(field.as_ref(), &start, dt, request.steps) {
        Ok(t) => (t, None),
        Err(Error::TrajectoryAborted { reason, partial }) => {
            let states = (*partial).clone();
            (states, Some(Error::TrajectoryAborted { reason, partial }))
        }
        Err(e) => return Err(e),
    };

    let mut table = Table::new(
        describe(config, "trajectory"),
        vec!["t", "x", "y", "z", "vx", "vy", "vz", "x_exact", "y_exact", "z_exact", "deviation"],
    );
    let mut max_deviation: f64 = 0.0;
    let mut max_radial_drift: f64 = 0.0;
    let mut max_polar_drift: f64 = 0.0;
    let mut max_speed_drift: f64 = 0.0;
    let speed0 = trajectory.first().map_or(0.0, |s| s.velocity.norm());
    for s in &trajectory.states {
        let exact = omega.map_or(Vector3::repeat(f64::NAN), |w| circular_position(&start, w, s.t).to_cartesian());
        let deviation = (s.cartesian - exact).norm();
        max_deviation = max_deviation.max(deviation);
        max_radial_drift = max_radial_drift.max((s.position.r - start.r).abs() / start.r.max(f64::MIN_POSITIVE));
        max_polar_drift = max_polar_drift.max((s.position.theta - start.theta).abs());
        max_speed_drift = max_speed_drift.max((s.velocity.norm() - speed0).abs());
        let (x, v) = (s.cartesian, s.velocity);
        table.push(vec![s.t, x.x, x.y, x.z, v.x, v.y, v.z, exact.x, exact.y, exact.z, deviation]);
    }
    let area = trajectory.signed_area_xy();
    let summary = json!({
        "states": trajectory.states.len(),
        "dt": dt,
        "period": period,
        "angular_velocity": omega,
        "signed_area_xy": area,
        "rotation": if area > 0.0 { "anticlockwise" } else if area < 0.0 { "clockwise" } else { "none" },
        "max_deviation": max_deviation,
        "max_relative_deviation": max_deviation / start.r.max(f64::MIN_POSITIVE),
        "max_relative_radial_drift": max_radial_drift,
        "max_polar_drift": max_polar_drift,
        "max_speed_drift": max_speed_drift,
        "aborted": failure.is_some(),
    });

    match (config.format, config.output_path.as_deref()) {
        (Format::Json, path) => {
            let mut extra = Map::new();
            extra.insert("summary".into(), summary);
            write_output(path, &table.to_json(meta(config), extra)?)?;
        }
        (Format::Csv, Some(path)) => {
            write_output(Some(path), &table.to_csv())?;
            std::fs::write(summary_path(path), to_json_string(&summary)?)?;
        }
        (Format::Csv, None) => {
            write_output(None, &table.to_csv())?;
            eprint!("{}", to_json_string(&summary)?);
        }
    }
    match failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

pub fn cmd_dilate(config: &RunConfig, rest_lifetime: f64) -> Result<()> {
    if config.model != Model::Dirac {
        return Err(Error::domain("dilate requires --model dirac"));
    }
    if config.format != Format::Json {
        return Err(Error::domain("dilate writes JSON only; pass --format json"));
    }
    let atom = config.atom()?;
    let spin = config.spin();
    let report = DilationReport::compute(spin, &atom, rest_lifetime)?;
    let reduced = mean_lorentz_factor(spin, &atom)?;
    let volume = mean_lorentz_factor_volume(spin, &atom)?;
    let normalization = normalization_check(spin, &atom)?;
    if normalization.needs_correction() {
        eprintln!(
            "warning: closed-form amplitude integrates to {} (correction factor {})",
            normalization.integral, normalization.amplitude_correction
        );
    }

    let mut scaling = Vec::with_capacity(ALPHA_SCALING.len());
    for s in ALPHA_SCALING {
        let scaled = AtomConfig::new(atom.z(), atom.alpha() * s, atom.mass())?;
        let mean = mean_lorentz_factor(spin, &scaled)?;
        let equator = SphericalPoint::new(scaled.bohr_radius(), PI / 2.0, 0.0)?;
        let max_speed = bohm_velocity(spin, &scaled, &equator)?.norm();
        scaling.push(json!({
            "scale": s,
            "alpha": scaled.alpha(),
            "mean_gamma": mean.mean_gamma,
            "mean_gamma_excess_over_z_alpha_sq": mean.excess / scaled.z_alpha().powi(2),
            "max_speed": max_speed,
            "max_speed_over_z_alpha": max_speed / scaled.z_alpha(),
        }));
    }

    let equatorial_period = TAU * atom.bohr_radius() / (atom.z_alpha());
    let doc = json!({
        "comment": describe_dilate(config),
        "Z": atom.z(),
        "alpha": atom.alpha(),
        "mass": atom.mass(),
        "gamma_exponent": atom.gamma_exp(),
        "report": report,
        "mean_gamma_excess": reduced.excess,
        "theta_reduction": reduced,
        "volume_quadrature": volume,
        "path_relative_difference": (volume.mean_gamma - reduced.mean_gamma).abs() / reduced.mean_gamma,
        "normalization": normalization,
        "natural_time_seconds": NATURAL_TIME_SECONDS / atom.mass(),
        "equatorial_period_at_bohr_radius_seconds": equatorial_period * NATURAL_TIME_SECONDS,
        "alpha_scaling": scaling,
    });
    write_output(config.output_path.as_deref(), &to_json_string(&doc)?)
}

// spin is left out so that both orientations produce the same document
fn describe_dilate(config: &RunConfig) -> String {
    format!(
        "dirac-bohm dilate: model=dirac Z={} alpha={} mass={}; natural units except lifetimes and *_seconds fields",
        config.z,
        format_number(config.alpha()),
        format_number(config.mass),
    )
}

pub fn cmd_state(config: &RunConfig, r: f64, theta: f64, phi: f64) -> Result<()> {
    let atom = config.atom()?;
    let p = SphericalPoint::new(r * atom.bohr_radius(), theta, phi)?;
    let mut quantities: Vec<(String, f64)> = vec![
        ("r".into(), p.r),
        ("theta".into(), p.theta),
        ("phi".into(), p.phi),
    ];
    match config.model {
        Model::Dirac => {
            let psi = dirac_ground_state(config.spin(), &atom, &p)?;
            quantities.push(("amplitude".into(), radial_amplitude(&atom, p.r)?));
            for (k, c) in psi.0.iter().enumerate() {
                quantities.push((format!("psi{}_re", k + 1), c.re));
                quantities.push((format!("psi{}_im", k + 1), c.im));
            }
        }
        Model::Schrodinger => {
            let q = config.quantum();
            let psi = hydrogen_wavefunction(&q, &atom, &p)?;
            let polar = polar_decompose(psi);
            quantities.push(("psi_re".into(), psi.re));
            quantities.push(("psi_im".into(), psi.im));
            quantities.push(("amplitude".into(), polar.amplitude));
            quantities.push(("phase".into(), polar.phase.unwrap_or(f64::NAN)));
        }
    }
    let s = sample_field(config, &atom, &p)?;
    for (name, value) in ["j0", "j1", "j2", "j3"].iter().zip(s.current) {
        quantities.push(((*name).into(), value));
    }
    for (name, value) in ["vx", "vy", "vz"].iter().zip(s.velocity.iter()) {
        quantities.push(((*name).into(), *value));
    }
    quantities.push(("speed".into(), s.velocity.norm()));

    let content = match config.format {
        Format::Csv => {
            let mut out = format!("# {}\nquantity,value\n", describe(config, "state"));
            for (name, value) in &quantities {
                out.push_str(&format!("{name},{}\n", format_number(*value)));
            }
            out
        }
        Format::Json => {
            let mut values = Map::new();
            for (name, value) in quantities {
                values.insert(name, json!(value));
            }
            to_json_string(&json!({ "comment": describe(config, "state"), "meta": meta(config), "values": values }))?
        }
    };
    write_output(config.output_path.as_deref(), &content)
}
