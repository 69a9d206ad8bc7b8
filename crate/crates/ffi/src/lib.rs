//! C interface to `dirac_bohm`.
//!
//! Every fallible function returns a [`BohmStatus`] and writes its result
//! through an out-pointer. On failure a message is available from
//! [`bohm_last_error_message`] until the next call on the same thread.
//! Atoms and trajectories are opaque heap handles released with their
//! matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dirac_bohm::dilation::{dilated_lifetime, mean_lorentz_factor};
use dirac_bohm::dirac::{bohm_velocity, dirac_current, dirac_ground_state};
use dirac_bohm::schrodinger::{bohm_momentum, hydrogen_wavefunction, probability_current};
use dirac_bohm::trajectory::{integrate_trajectory, DiracField, SchrodingerField};
use dirac_bohm::{
    AtomConfig, Error, LocalVector, QuantumNumbers, SpinOrientation, SphericalPoint, Trajectory, TrajectoryState,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BohmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Domain = 3,
    SupercriticalCoupling = 4,
    InvalidQuantumNumbers = 5,
    PhaseSingularity = 6,
    OriginSingularity = 7,
    UndefinedVelocity = 8,
    TrajectoryAborted = 9,
    QuadratureNonConvergence = 10,
    IndexOutOfRange = 11,
    Panic = 12,
    Internal = 13,
}

/// Spin projection selector. Use [`BOHM_SPIN_UP`] or [`BOHM_SPIN_DOWN`].
pub type BohmSpin = i32;
pub const BOHM_SPIN_UP: BohmSpin = 0;
pub const BOHM_SPIN_DOWN: BohmSpin = 1;

/// Opaque atom parameters (Z, alpha, mass).
pub struct BohmAtom(AtomConfig);

/// Opaque integrated trajectory.
pub struct BohmTrajectory(Trajectory);

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct BohmPoint {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct BohmVec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Components in the local (r̂, θ̂, φ̂) basis.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct BohmLocalVector {
    pub radial: f64,
    pub polar: f64,
    pub azimuthal: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct BohmComplex {
    pub re: f64,
    pub im: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct BohmSpinor {
    pub components: [BohmComplex; 4],
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct BohmFourCurrent {
    pub j0: f64,
    pub j1: f64,
    pub j2: f64,
    pub j3: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct BohmMeanLorentzFactor {
    pub mean_gamma: f64,
    pub excess: f64,
    pub error_estimate: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct BohmTrajectoryState {
    pub t: f64,
    pub position: BohmVec3,
    pub velocity: BohmVec3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> BohmStatus {
    match err {
        Error::Domain(_) => BohmStatus::Domain,
        Error::SupercriticalCoupling { .. } => BohmStatus::SupercriticalCoupling,
        Error::InvalidQuantumNumbers { .. } => BohmStatus::InvalidQuantumNumbers,
        Error::PhaseSingularity { .. } => BohmStatus::PhaseSingularity,
        Error::OriginSingularity => BohmStatus::OriginSingularity,
        Error::UndefinedVelocity { .. } => BohmStatus::UndefinedVelocity,
        Error::TrajectoryAborted { .. } => BohmStatus::TrajectoryAborted,
        Error::QuadratureNonConvergence { .. } => BohmStatus::QuadratureNonConvergence,
        _ => BohmStatus::Internal,
    }
}

struct Failure(BohmStatus, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure(status_of(&err), err.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BohmStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BohmStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {msg}"));
            BohmStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure(BohmStatus::NullPointer, format!("{name} is null")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(BohmStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

fn spin_of(spin: BohmSpin) -> Result<SpinOrientation, Failure> {
    match spin {
        BOHM_SPIN_UP => Ok(SpinOrientation::Up),
        BOHM_SPIN_DOWN => Ok(SpinOrientation::Down),
        other => Err(Failure(BohmStatus::InvalidArgument, format!("unknown spin selector {other}"))),
    }
}

fn point_of(p: &BohmPoint) -> Result<SphericalPoint, Failure> {
    Ok(SphericalPoint::new(p.r, p.theta, p.phi)?)
}

fn vec3(v: &nalgebra::Vector3<f64>) -> BohmVec3 {
    BohmVec3 { x: v.x, y: v.y, z: v.z }
}

fn local(v: &LocalVector) -> BohmLocalVector {
    BohmLocalVector {
        radial: v.radial,
        polar: v.polar,
        azimuthal: v.azimuthal,
    }
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn bohm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bohm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Creates an atom with nuclear charge `z`, coupling `alpha` and particle
/// mass `mass` (natural units).
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn bohm_atom_new(z: u32, alpha: f64, mass: f64, out: *mut *mut BohmAtom) -> BohmStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure(BohmStatus::NullPointer, "output pointer is null".into()));
        }
        let atom = AtomConfig::new(z, alpha, mass)?;
        out.write(Box::into_raw(Box::new(BohmAtom(atom))));
        Ok(())
    })
}

/// Hydrogen with the physical fine-structure constant and unit mass. Never null.
#[no_mangle]
pub extern "C" fn bohm_atom_hydrogen() -> *mut BohmAtom {
    Box::into_raw(Box::new(BohmAtom(AtomConfig::hydrogen())))
}

/// # Safety
/// `atom` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn bohm_atom_free(atom: *mut BohmAtom) {
    if !atom.is_null() {
        drop(Box::from_raw(atom));
    }
}

/// Relativistic exponent sqrt(1 - (Z alpha)^2). NaN for a null handle.
///
/// # Safety
/// `atom` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bohm_atom_gamma_exponent(atom: *const BohmAtom) -> f64 {
    atom.as_ref().map_or(f64::NAN, |a| a.0.gamma_exp())
}

/// Bohr radius 1/(m Z alpha). NaN for a null handle.
///
/// # Safety
/// `atom` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bohm_atom_bohr_radius(atom: *const BohmAtom) -> f64 {
    atom.as_ref().map_or(f64::NAN, |a| a.0.bohr_radius())
}

/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bohm_dirac_spinor(
    atom: *const BohmAtom,
    spin: BohmSpin,
    point: *const BohmPoint,
    out: *mut BohmSpinor,
) -> BohmStatus {
    guard(|| {
        let atom = &deref(atom, "atom")?.0;
        let p = point_of(deref(point, "point")?)?;
        let psi = dirac_ground_state(spin_of(spin)?, atom, &p)?;
        let mut spinor = BohmSpinor::default();
        for (dst, src) in spinor.components.iter_mut().zip(psi.0) {
            *dst = BohmComplex { re: src.re, im: src.im };
        }
        write(out, spinor)
    })
}

/// Conserved four-current of the ground state at `point`.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bohm_dirac_current(
    atom: *const BohmAtom,
    spin: BohmSpin,
    point: *const BohmPoint,
    out: *mut BohmFourCurrent,
) -> BohmStatus {
    guard(|| {
        let atom = &deref(atom, "atom")?.0;
        let p = point_of(deref(point, "point")?)?;
        let j = dirac_current(&dirac_ground_state(spin_of(spin)?, atom, &p)?);
        write(
            out,
            BohmFourCurrent {
                j0: j.j0,
                j1: j.j1,
                j2: j.j2,
                j3: j.j3,
            },
        )
    })
}

/// Guidance velocity in Cartesian components.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bohm_dirac_velocity(
    atom: *const BohmAtom,
    spin: BohmSpin,
    point: *const BohmPoint,
    out: *mut BohmVec3,
) -> BohmStatus {
    guard(|| {
        let atom = &deref(atom, "atom")?.0;
        let p = point_of(deref(point, "point")?)?;
        write(out, vec3(&bohm_velocity(spin_of(spin)?, atom, &p)?))
    })
}

/// Hydrogen-like eigenfunction psi_nlm.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bohm_hydrogen_wavefunction(
    atom: *const BohmAtom,
    n: u32,
    l: u32,
    m: i32,
    point: *const BohmPoint,
    out: *mut BohmComplex,
) -> BohmStatus {
    guard(|| {
        let atom = &deref(atom, "atom")?.0;
        let p = point_of(deref(point, "point")?)?;
        let psi = hydrogen_wavefunction(&QuantumNumbers::new(n, l, m)?, atom, &p)?;
        write(out, BohmComplex { re: psi.re, im: psi.im })
    })
}

/// Guidance momentum grad S of psi_nlm in the local spherical basis.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bohm_schrodinger_momentum(
    atom: *const BohmAtom,
    n: u32,
    l: u32,
    m: i32,
    point: *const BohmPoint,
    out: *mut BohmLocalVector,
) -> BohmStatus {
    guard(|| {
        let atom = &deref(atom, "atom")?.0;
        let p = point_of(deref(point, "point")?)?;
        write(out, local(&bohm_momentum(&QuantumNumbers::new(n, l, m)?, atom, &p)?))
    })
}

/// Probability current of psi_nlm in the local spherical basis.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bohm_schrodinger_current(
    atom: *const BohmAtom,
    n: u32,
    l: u32,
    m: i32,
    point: *const BohmPoint,
    out: *mut BohmLocalVector,
) -> BohmStatus {
    guard(|| {
        let atom = &deref(atom, "atom")?.0;
        let p = point_of(deref(point, "point")?)?;
        write(out, local(&probability_current(&QuantumNumbers::new(n, l, m)?, atom, &p)?))
    })
}

/// Density-weighted mean Lorentz factor of the ground state.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bohm_mean_lorentz_factor(
    atom: *const BohmAtom,
    spin: BohmSpin,
    out: *mut BohmMeanLorentzFactor,
) -> BohmStatus {
    guard(|| {
        let atom = &deref(atom, "atom")?.0;
        let m = mean_lorentz_factor(spin_of(spin)?, atom)?;
        write(
            out,
            BohmMeanLorentzFactor {
                mean_gamma: m.mean_gamma,
                excess: m.excess,
                error_estimate: m.error_estimate,
            },
        )
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bohm_dilated_lifetime(rest_lifetime: f64, mean_gamma: f64, out: *mut f64) -> BohmStatus {
    guard(|| write(out, dilated_lifetime(rest_lifetime, mean_gamma)?))
}

unsafe fn finish_trajectory(
    result: dirac_bohm::Result<Trajectory>,
    out: *mut *mut BohmTrajectory,
) -> Result<(), Failure> {
    match result {
        Ok(t) => {
            out.write(Box::into_raw(Box::new(BohmTrajectory(t))));
            Ok(())
        }
        Err(Error::TrajectoryAborted { reason, partial }) => {
            let msg = format!("trajectory aborted after {} states: {reason}", partial.states.len());
            out.write(Box::into_raw(Box::new(BohmTrajectory(*partial))));
            Err(Failure(BohmStatus::TrajectoryAborted, msg))
        }
        Err(e) => Err(e.into()),
    }
}

/// Integrates `steps` fixed RK4 steps of size `dt` through the Dirac
/// ground-state velocity field. On `BOHM_STATUS_TRAJECTORY_ABORTED` the
/// handle written to `out` holds the states computed before the abort and
/// must still be freed. On any other failure `out` is left untouched.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bohm_dirac_trajectory(
    atom: *const BohmAtom,
    spin: BohmSpin,
    start: *const BohmPoint,
    dt: f64,
    steps: usize,
    out: *mut *mut BohmTrajectory,
) -> BohmStatus {
    guard(|| {
        let atom = deref(atom, "atom")?.0;
        let start = point_of(deref(start, "start")?)?;
        let field = DiracField { spin: spin_of(spin)?, atom };
        if out.is_null() {
            return Err(Failure(BohmStatus::NullPointer, "output pointer is null".into()));
        }
        finish_trajectory(integrate_trajectory(&field, &start, dt, steps), out)
    })
}

/// Same as [`bohm_dirac_trajectory`] for the Schrödinger state psi_nlm.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bohm_schrodinger_trajectory(
    atom: *const BohmAtom,
    n: u32,
    l: u32,
    m: i32,
    start: *const BohmPoint,
    dt: f64,
    steps: usize,
    out: *mut *mut BohmTrajectory,
) -> BohmStatus {
    guard(|| {
        let atom = deref(atom, "atom")?.0;
        let start = point_of(deref(start, "start")?)?;
        let field = SchrodingerField {
            state: QuantumNumbers::new(n, l, m)?,
            atom,
        };
        if out.is_null() {
            return Err(Failure(BohmStatus::NullPointer, "output pointer is null".into()));
        }
        finish_trajectory(integrate_trajectory(&field, &start, dt, steps), out)
    })
}

/// Number of stored states, 0 for a null handle.
///
/// # Safety
/// `trajectory` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bohm_trajectory_len(trajectory: *const BohmTrajectory) -> usize {
    trajectory.as_ref().map_or(0, |t| t.0.states.len())
}

/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bohm_trajectory_state(
    trajectory: *const BohmTrajectory,
    index: usize,
    out: *mut BohmTrajectoryState,
) -> BohmStatus {
    guard(|| {
        let states = &deref(trajectory, "trajectory")?.0.states;
        let s: &TrajectoryState = states.get(index).ok_or_else(|| {
            Failure(BohmStatus::IndexOutOfRange, format!("index {index} out of range for {} states", states.len()))
        })?;
        write(
            out,
            BohmTrajectoryState {
                t: s.t,
                position: vec3(&s.cartesian),
                velocity: vec3(&s.velocity),
            },
        )
    })
}

/// Signed area swept in the x-y plane; positive for anticlockwise motion
/// seen from +z. NaN for a null handle.
///
/// # Safety
/// `trajectory` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bohm_trajectory_signed_area_xy(trajectory: *const BohmTrajectory) -> f64 {
    trajectory.as_ref().map_or(f64::NAN, |t| t.0.signed_area_xy())
}

/// # Safety
/// `trajectory` must be null or a handle that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn bohm_trajectory_free(trajectory: *mut BohmTrajectory) {
    if !trajectory.is_null() {
        drop(Box::from_raw(trajectory));
    }
}
