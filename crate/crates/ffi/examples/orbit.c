#include <stdio.h>
#include <math.h>
#include "dirac_bohm.h"

int main(void) {
    BohmAtom *atom = bohm_atom_hydrogen();
    BohmPoint start = { bohm_atom_bohr_radius(atom), M_PI / 2.0, 0.0 };

    BohmFourCurrent j;
    if (bohm_dirac_current(atom, BOHM_SPIN_UP, &start, &j) != BOHM_STATUS_OK) {
        fprintf(stderr, "%s\n", bohm_last_error_message());
        return 1;
    }
    printf("j = (%.6e, %.6e, %.6e, %.6e)\n", j.j0, j.j1, j.j2, j.j3);

    BohmTrajectory *traj = NULL;
    BohmStatus status = bohm_dirac_trajectory(atom, BOHM_SPIN_UP, &start, 1000.0, 100, &traj);
    if (status != BOHM_STATUS_OK) {
        fprintf(stderr, "%s\n", bohm_last_error_message());
        bohm_trajectory_free(traj);
        bohm_atom_free(atom);
        return 1;
    }
    BohmTrajectoryState last;
    bohm_trajectory_state(traj, bohm_trajectory_len(traj) - 1, &last);
    printf("t = %.1f  x = (%.6e, %.6e, %.6e)  area = %.3e\n", last.t, last.position.x, last.position.y,
           last.position.z, bohm_trajectory_signed_area_xy(traj));

    BohmMeanLorentzFactor mean;
    bohm_mean_lorentz_factor(atom, BOHM_SPIN_UP, &mean);
    printf("<gamma> - 1 = %.12e\n", mean.excess);

    bohm_trajectory_free(traj);
    bohm_atom_free(atom);
    return 0;
}
