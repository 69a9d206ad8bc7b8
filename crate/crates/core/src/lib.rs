//! Bohmian velocity fields, probability currents, trajectories and lifetime
//! dilation for hydrogen-like atoms in the Schrödinger and Dirac pictures.
//!
//! Natural units throughout (ħ = c = 1); lengths are in inverse mass units and
//! the Bohr radius is `1 / (m Z α)`.

pub mod cli;
pub mod dilation;
pub mod dirac;
pub mod error;
pub mod physics;
pub mod quadrature;
pub mod schrodinger;
pub mod special_functions;
pub mod trajectory;

pub use dirac::{FourCurrent, SpinOrientation, Spinor4};
pub use error::{Error, Result};
pub use physics::{AtomConfig, LocalVector, SphericalPoint, FINE_STRUCTURE};
pub use schrodinger::QuantumNumbers;
pub use trajectory::{Model, Trajectory, TrajectoryState, VelocityField};
