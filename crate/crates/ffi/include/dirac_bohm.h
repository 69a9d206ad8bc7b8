#ifndef DIRAC_BOHM_H
#define DIRAC_BOHM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BohmStatus {
  BOHM_STATUS_OK = 0,
  BOHM_STATUS_NULL_POINTER = 1,
  BOHM_STATUS_INVALID_ARGUMENT = 2,
  BOHM_STATUS_DOMAIN = 3,
  BOHM_STATUS_SUPERCRITICAL_COUPLING = 4,
  BOHM_STATUS_INVALID_QUANTUM_NUMBERS = 5,
  BOHM_STATUS_PHASE_SINGULARITY = 6,
  BOHM_STATUS_ORIGIN_SINGULARITY = 7,
  BOHM_STATUS_UNDEFINED_VELOCITY = 8,
  BOHM_STATUS_TRAJECTORY_ABORTED = 9,
  BOHM_STATUS_QUADRATURE_NON_CONVERGENCE = 10,
  BOHM_STATUS_INDEX_OUT_OF_RANGE = 11,
  BOHM_STATUS_PANIC = 12,
  BOHM_STATUS_INTERNAL = 13,
} BohmStatus;

/**
 * Opaque atom parameters (Z, alpha, mass).
 */
typedef struct BohmAtom BohmAtom;

/**
 * Opaque integrated trajectory.
 */
typedef struct BohmTrajectory BohmTrajectory;

/**
 * Spin projection selector. Use [`BOHM_SPIN_UP`] or [`BOHM_SPIN_DOWN`].
 */
typedef int32_t BohmSpin;

typedef struct BohmPoint {
  double r;
  double theta;
  double phi;
} BohmPoint;

typedef struct BohmComplex {
  double re;
  double im;
} BohmComplex;

typedef struct BohmSpinor {
  struct BohmComplex components[4];
} BohmSpinor;

typedef struct BohmFourCurrent {
  double j0;
  double j1;
  double j2;
  double j3;
} BohmFourCurrent;

typedef struct BohmVec3 {
  double x;
  double y;
  double z;
} BohmVec3;

/**
 * Components in the local (r̂, θ̂, φ̂) basis.
 */
typedef struct BohmLocalVector {
  double radial;
  double polar;
  double azimuthal;
} BohmLocalVector;

typedef struct BohmMeanLorentzFactor {
  double mean_gamma;
  double excess;
  double error_estimate;
} BohmMeanLorentzFactor;

typedef struct BohmTrajectoryState {
  double t;
  struct BohmVec3 position;
  struct BohmVec3 velocity;
} BohmTrajectoryState;

#define BOHM_SPIN_UP 0

#define BOHM_SPIN_DOWN 1

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *bohm_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *bohm_version(void);

/**
 * Creates an atom with nuclear charge `z`, coupling `alpha` and particle
 * mass `mass` (natural units).
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum BohmStatus bohm_atom_new(uint32_t z, double alpha, double mass, struct BohmAtom **out);

/**
 * Hydrogen with the physical fine-structure constant and unit mass. Never null.
 */
struct BohmAtom *bohm_atom_hydrogen(void);

/**
 * # Safety
 * `atom` must be null or a handle from this library that has not been freed.
 */
void bohm_atom_free(struct BohmAtom *atom);

/**
 * Relativistic exponent sqrt(1 - (Z alpha)^2). NaN for a null handle.
 *
 * # Safety
 * `atom` must be null or a live handle.
 */
double bohm_atom_gamma_exponent(const struct BohmAtom *atom);

/**
 * Bohr radius 1/(m Z alpha). NaN for a null handle.
 *
 * # Safety
 * `atom` must be null or a live handle.
 */
double bohm_atom_bohr_radius(const struct BohmAtom *atom);

/**
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum BohmStatus bohm_dirac_spinor(const struct BohmAtom *atom,
                                  BohmSpin spin,
                                  const struct BohmPoint *point,
                                  struct BohmSpinor *out);

/**
 * Conserved four-current of the ground state at `point`.
 *
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum BohmStatus bohm_dirac_current(const struct BohmAtom *atom,
                                   BohmSpin spin,
                                   const struct BohmPoint *point,
                                   struct BohmFourCurrent *out);

/**
 * Guidance velocity in Cartesian components.
 *
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum BohmStatus bohm_dirac_velocity(const struct BohmAtom *atom,
                                    BohmSpin spin,
                                    const struct BohmPoint *point,
                                    struct BohmVec3 *out);

/**
 * Hydrogen-like eigenfunction psi_nlm.
 *
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum BohmStatus bohm_hydrogen_wavefunction(const struct BohmAtom *atom,
                                           uint32_t n,
                                           uint32_t l,
                                           int32_t m,
                                           const struct BohmPoint *point,
                                           struct BohmComplex *out);

/**
 * Guidance momentum grad S of psi_nlm in the local spherical basis.
 *
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum BohmStatus bohm_schrodinger_momentum(const struct BohmAtom *atom,
                                          uint32_t n,
                                          uint32_t l,
                                          int32_t m,
                                          const struct BohmPoint *point,
                                          struct BohmLocalVector *out);

/**
 * Probability current of psi_nlm in the local spherical basis.
 *
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum BohmStatus bohm_schrodinger_current(const struct BohmAtom *atom,
                                         uint32_t n,
                                         uint32_t l,
                                         int32_t m,
                                         const struct BohmPoint *point,
                                         struct BohmLocalVector *out);

/**
 * Density-weighted mean Lorentz factor of the ground state.
 *
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum BohmStatus bohm_mean_lorentz_factor(const struct BohmAtom *atom,
                                         BohmSpin spin,
                                         struct BohmMeanLorentzFactor *out);

/**
 * # Safety
 * `out` must be writable.
 */
enum BohmStatus bohm_dilated_lifetime(double rest_lifetime, double mean_gamma, double *out);

/**
 * Integrates `steps` fixed RK4 steps of size `dt` through the Dirac
 * ground-state velocity field. On `BOHM_STATUS_TRAJECTORY_ABORTED` the
 * handle written to `out` holds the states computed before the abort and
 * must still be freed. On any other failure `out` is left untouched.
 *
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum BohmStatus bohm_dirac_trajectory(const struct BohmAtom *atom,
                                      BohmSpin spin,
                                      const struct BohmPoint *start,
                                      double dt,
                                      size_t steps,
                                      struct BohmTrajectory **out);

/**
 * Same as [`bohm_dirac_trajectory`] for the Schrödinger state psi_nlm.
 *
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum BohmStatus bohm_schrodinger_trajectory(const struct BohmAtom *atom,
                                            uint32_t n,
                                            uint32_t l,
                                            int32_t m,
                                            const struct BohmPoint *start,
                                            double dt,
                                            size_t steps,
                                            struct BohmTrajectory **out);

/**
 * Number of stored states, 0 for a null handle.
 *
 * # Safety
 * `trajectory` must be null or a live handle.
 */
size_t bohm_trajectory_len(const struct BohmTrajectory *trajectory);

/**
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum BohmStatus bohm_trajectory_state(const struct BohmTrajectory *trajectory,
                                      size_t index,
                                      struct BohmTrajectoryState *out);

/**
 * Signed area swept in the x-y plane; positive for anticlockwise motion
 * seen from +z. NaN for a null handle.
 *
 * # Safety
 * `trajectory` must be null or a live handle.
 */
double bohm_trajectory_signed_area_xy(const struct BohmTrajectory *trajectory);

/**
 * # Safety
 * `trajectory` must be null or a handle that has not been freed.
 */
void bohm_trajectory_free(struct BohmTrajectory *trajectory);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIRAC_BOHM_H */
