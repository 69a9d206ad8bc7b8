//! Command-line front end. Every command is a pure function of its flags and
//! writes either CSV (single `#` comment line, one header row, LF endings) or
//! JSON. Numbers use the shortest representation that round-trips.

mod commands;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dirac::SpinOrientation;
use crate::error::{Error, Result};
use crate::physics::{AtomConfig, FINE_STRUCTURE};
use crate::schrodinger::QuantumNumbers;
use crate::trajectory::Model;

pub use commands::{cmd_dilate, cmd_field, cmd_state, cmd_trajectory, FieldGrid, TrajectoryRequest};

#[derive(Debug, Parser)]
#[command(name = "dirac-bohm", version, about = "Bohmian velocity fields and trajectories for hydrogen-like atoms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate currents and velocities on an (r, θ, φ) grid.
    Field {
        #[command(flatten)]
        config: ConfigArgs,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Integrate a trajectory with RK4 and compare against the exact orbit.
    Trajectory {
        #[command(flatten)]
        config: ConfigArgs,
        #[command(flatten)]
        start: PointArgs,
        /// Time step in natural units (default: period / 10^4).
        #[arg(long)]
        dt: Option<f64>,
        #[arg(long, default_value_t = 10_000)]
        steps: usize,
    },
    /// Mean Lorentz factor and dilated lifetime (JSON only).
    Dilate {
        #[command(flatten)]
        config: ConfigArgs,
        /// Rest-frame lifetime of the bound particle, seconds.
        #[arg(long)]
        rest_lifetime: f64,
    },
    /// Wavefunction or spinor, current and velocity at one point.
    State {
        #[command(flatten)]
        config: ConfigArgs,
        #[command(flatten)]
        point: PointArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Schrodinger,
    Dirac,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpinArg {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct ConfigArgs {
    #[arg(long, value_enum, default_value = "dirac")]
    pub model: ModelArg,
    /// Dirac only (default: up).
    #[arg(long, value_enum)]
    pub spin: Option<SpinArg>,
    /// Schrödinger only (default: 1 0 0).
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub l: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i32>,
    #[arg(long = "Z", default_value_t = 1)]
    pub z: u32,
    /// Multiplier on the physical fine-structure constant.
    #[arg(long, default_value_t = 1.0)]
    pub alpha_scale: f64,
    /// Particle mass in electron masses.
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    /// Output file (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

/// Sampling grid. Radii are given in Bohr radii.
#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 0.5)]
    pub r_min: f64,
    #[arg(long, default_value_t = 3.0)]
    pub r_max: f64,
    #[arg(long, default_value_t = 6)]
    pub r_count: usize,
    /// θ nodes spanning [0, π] inclusive.
    #[arg(long, default_value_t = 7)]
    pub theta_count: usize,
    /// φ nodes spanning [0, 2π) exclusive.
    #[arg(long, default_value_t = 8)]
    pub phi_count: usize,
}

/// Point with radius in Bohr radii.
#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2)]
    pub theta: f64,
    #[arg(long, default_value_t = 0.0)]
    pub phi: f64,
}

/// Validated, model-conditional run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub model: Model,
    pub spin: Option<SpinOrientation>,
    pub quantum: Option<QuantumNumbers>,
    pub z: u32,
    pub alpha_scale: f64,
    pub mass: f64,
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn from_args(args: &ConfigArgs) -> Result<Self> {
        let model = match args.model {
            ModelArg::Schrodinger => Model::Schrodinger,
            ModelArg::Dirac => Model::Dirac,
        };
        let has_quantum = args.n.is_some() || args.l.is_some() || args.m.is_some();
        let (spin, quantum) = match model {
            Model::Dirac => {
                if has_quantum {
                    return Err(Error::domain("--n/--l/--m apply to the schrodinger model only"));
                }
                let spin = match args.spin.unwrap_or(SpinArg::Up) {
                    SpinArg::Up => SpinOrientation::Up,
                    SpinArg::Down => SpinOrientation::Down,
                };
                (Some(spin), None)
            }
            Model::Schrodinger => {
                if args.spin.is_some() {
                    return Err(Error::domain("--spin applies to the dirac model only"));
                }
                let q = QuantumNumbers::new(args.n.unwrap_or(1), args.l.unwrap_or(0), args.m.unwrap_or(0))?;
                (None, Some(q))
            }
        };
        if !(args.alpha_scale > 0.0 && args.alpha_scale.is_finite()) {
            return Err(Error::domain("--alpha-scale must be positive"));
        }
        let config = Self {
            model,
            spin,
            quantum,
            z: args.z,
            alpha_scale: args.alpha_scale,
            mass: args.mass,
            output_path: args.out.clone(),
            format: args.format,
        };
        config.atom()?;
        Ok(config)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha_scale * FINE_STRUCTURE
    }

    pub fn atom(&self) -> Result<AtomConfig> {
        AtomConfig::new(self.z, self.alpha(), self.mass)
    }

    /// Dirac runs carry a spin, Schrödinger runs quantum numbers.
    pub(crate) fn spin(&self) -> SpinOrientation {
        self.spin.unwrap_or(SpinOrientation::Up)
    }

    pub(crate) fn quantum(&self) -> QuantumNumbers {
        self.quantum.unwrap_or_else(QuantumNumbers::ground)
    }
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Field { config, grid } => {
            let config = RunConfig::from_args(&config)?;
            let grid = FieldGrid::from_args(&grid)?;
            cmd_field(&config, &grid)
        }
        Command::Trajectory { config, start, dt, steps } => {
            let config = RunConfig::from_args(&config)?;
            let request = TrajectoryRequest { r: start.r, theta: start.theta, phi: start.phi, dt, steps };
            cmd_trajectory(&config, &request)
        }
        Command::Dilate { config, rest_lifetime } => {
            let config = RunConfig::from_args(&config)?;
            cmd_dilate(&config, rest_lifetime)
        }
        Command::State { config, point } => {
            let config = RunConfig::from_args(&config)?;
            cmd_state(&config, point.r, point.theta, point.phi)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("dirac-bohm").chain(args.iter().copied())).unwrap()
    }

    fn config_of(cli: &Cli) -> &ConfigArgs {
        match &cli.command {
            Command::Field { config, .. }
            | Command::Trajectory { config, .. }
            | Command::Dilate { config, .. }
            | Command::State { config, .. } => config,
        }
    }

    #[test]
    fn model_conditional_flags() {
        let cli = parse(&["field", "--model", "schrodinger", "--n", "2", "--l", "1", "--m", "-1"]);
        let c = RunConfig::from_args(config_of(&cli)).unwrap();
        assert_eq!(c.quantum, Some(QuantumNumbers::new(2, 1, -1).unwrap()));
        assert_eq!(c.spin, None);

        let cli = parse(&["field", "--model", "schrodinger", "--spin", "up"]);
        assert!(RunConfig::from_args(config_of(&cli)).is_err());
        let cli = parse(&["field", "--model", "dirac", "--n", "1"]);
        assert!(RunConfig::from_args(config_of(&cli)).is_err());

        let cli = parse(&["state"]);
        let c = RunConfig::from_args(config_of(&cli)).unwrap();
        assert_eq!(c.spin, Some(SpinOrientation::Up));
    }

    #[test]
    fn supercritical_config_is_rejected() {
        let cli = parse(&["dilate", "--Z", "100", "--alpha-scale", "2", "--rest-lifetime", "1"]);
        assert!(matches!(RunConfig::from_args(config_of(&cli)), Err(Error::SupercriticalCoupling { .. })));
        let cli = parse(&["dilate", "--alpha-scale", "0", "--rest-lifetime", "1"]);
        assert!(RunConfig::from_args(config_of(&cli)).is_err());
    }
}
