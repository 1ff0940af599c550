#ifndef GBO_GROUND_STATE_HPP
#define GBO_GROUND_STATE_HPP

#include <memory>
#include <optional>

#include "gbo/diagnostics.hpp"
#include "gbo/field.hpp"
#include "gbo/spectral.hpp"

namespace gbo {

struct PetviashviliConfig {
    double tolerance = 1e-12;
    int max_iterations = 10000;
    std::optional<Field> initial_guess; // default: exp(-x^2) sampled on the grid
};

/** Converged Petviashvili profile with its cached invariants. */
struct GroundState {
    int m = 2;
    Field profile;
    int iterations = 0;
    double final_delta = 0.0;    // sup norm of the last update (stopping metric)
    double final_delta_l2 = 0.0; // relative L2 of the last update, logged only
    double M_Q = 0.0;            // |Q|_{L2}^2
    double D_Q = 0.0;            // |D^{1/2} Q|_{L2}^2
    double E_Q = 0.0;            // energy
    double P_Q = 0.0;            // |Q|_{m+1}^{m+1} / (m(m+1))
};

/// (H d_x + 1)^{-1} f on either discretization; the Petviashvili propagator.
Field inverse_hilbert_shift(const Field& f);

/**
 * One renormalized fixed-point update
 *   (SL/SR)^{m/(m-1)} (H d_x + 1)^{-1} [Q^m / m],
 * followed by even symmetrization to pin the peak at the origin. Throws
 * DegenerateIterate when the iterate has collapsed (|SR| < 1e-300 or the
 * renormalization ratio is not positive).
 */
Field petviashvili_step(const Field& Qn, int m);

/**
 * Full iteration to the ground state of  -Q - H Q' + Q^m/m = 0; stops when
 * the sup-norm update drops below the tolerance. Populates all invariants.
 */
GroundState petviashvili_solve(const PetviashviliConfig& config, int m,
                               std::shared_ptr<const Grid> grid);

/// Pohozaev consistency errors (e1, e2) of a converged ground state.
std::pair<double, double> pohozaev_errors(const GroundState& gs);

/**
 * The rescaled traveling-wave profile c^{1/(m-1)} Q(c x) resampled on the
 * ground state's grid; for m = 2 this is the explicit family 4c/(1+c^2x^2)'s
 * scaling of the computed profile. Throws ResampleOutOfBand when the grid
 * cannot resolve or contain the rescaled profile.
 */
Field rescale_ground_state(const GroundState& gs, double c);

/// Residual of the stationary equation, |-Q - H Q' + Q^m/m|_inf.
double ground_state_residual(const GroundState& gs);

} // namespace gbo

#endif
