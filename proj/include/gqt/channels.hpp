#pragma once

#include <complex>
#include <vector>

#include "gqt/core.hpp"

namespace gqt {

/// Parameters of the Gaussian thermal bath coupled to each mode: overall
/// damping rate gamma, per-mode effective photon number N and complex bath
/// squeezing M. Positivity of the dynamics requires |M|^2 <= N (N + 1).
struct BathParams {
    double gamma = 1.0;
    std::vector<double> occupation;                // N_k, one per mode
    std::vector<std::complex<double>> squeezing;   // M_k, one per mode

    int modes() const { return static_cast<int>(occupation.size()); }

    /// Unsqueezed bath with the same occupation on every mode.
    static BathParams thermal(int modes, double occupation, double gamma = 1.0);
};

/// Throws PhysicalityError (naming the offending mode) unless gamma > 0 and
/// |M_k|^2 <= N_k (N_k + 1) for every mode.
void validate_bath(const BathParams& bath);

/// Fixed-point covariance matrix of the channel: block-diagonal with mode-k
/// block (2 N_k + 1) I + 2 [[Re M_k, Im M_k], [Im M_k, -Re M_k]].
/// Reduces to (2 N_k + 1) I for M = 0.
Eigen::MatrixXd asymptotic_cm(const BathParams& bath);

/// Exact solution of the moment equations: sigma(t) = e^{-gamma t} sigma +
/// (1 - e^{-gamma t}) sigma_inf, d(t) = e^{-gamma t / 2} d.
GaussianState evolve_closed_form(const GaussianState& state,
                                 const BathParams& bath, double t);

/// Fixed-step RK4 integration of sigma' = -gamma (sigma - sigma_inf) and
/// d' = -(gamma/2) d from 0 to t. Independent cross-check for
/// evolve_closed_form; a final partial step covers t not divisible by dt.
GaussianState evolve_ode(const GaussianState& state, const BathParams& bath,
                         double t, double dt);

} // namespace gqt
