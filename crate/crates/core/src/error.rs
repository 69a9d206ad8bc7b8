use thiserror::Error;

use crate::trajectory::Trajectory;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("supercritical coupling: Z*alpha = {z_alpha} must be < 1")]
    SupercriticalCoupling { z_alpha: f64 },

    #[error("invalid quantum numbers (n={n}, l={l}, m={m}): need n >= 1, l <= n-1, |m| <= l")]
    InvalidQuantumNumbers { n: u32, l: u32, m: i32 },

    #[error("phase singularity at r={r}, theta={theta}: the phase gradient is undefined here")]
    PhaseSingularity { r: f64, theta: f64 },

    #[error("origin singularity: the Dirac ground state diverges at r = 0")]
    OriginSingularity,

    #[error("undefined velocity: j0 = {j0}")]
    UndefinedVelocity { j0: f64 },

    #[error("trajectory aborted after {} states: {reason}", partial.states.len())]
    TrajectoryAborted {
        reason: String,
        partial: Box<Trajectory>,
    },

    #[error("quadrature did not converge: last estimate {estimate} with error {error} after {nodes} nodes")]
    QuadratureNonConvergence {
        estimate: f64,
        error: f64,
        nodes: usize,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
