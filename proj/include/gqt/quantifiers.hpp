#pragma once

#include "gqt/core.hpp"

namespace gqt {

/// Local symplectic invariants of a two-mode covariance matrix
/// [[alpha, gamma], [gamma^T, beta]].
struct SymplecticInvariants {
    double det_alpha; // A
    double det_beta;  // B
    double det_gamma; // C
    double det_total; // D = det sigma
};

/// Frame of the phase-like generator on mode A: the number operator
/// conjugated by the local symplectic R(chi) S(xi), with S(xi) =
/// diag(e^xi, e^-xi) and R a phase-space rotation.
struct GeneratorParams {
    double xi = 0.0;  // local squeezing, >= 0
    double chi = 0.0; // local rotation, folded into [0, pi)
};

struct GipResult {
    double value = 0.0;
    bool regularized = false; // near-pure input was flowed before evaluation
};

/// Search specification for the interferometric-power oracle: a coarse
/// (xi, chi) grid followed by `refinements` passes that shrink the cell by
/// `shrink` around the incumbent.
struct OracleGrid {
    double xi_max = 2.0;
    double xi_step = 0.1;
    double chi_step = 0.087266462599716474; // pi / 36
    int refinements = 2;
    double shrink = 10.0;
    double d_eps = 1e-3;
};

struct OracleResult {
    double value = 0.0;
    GeneratorParams minimizer;
    bool xi_at_cap = false; // minimizer landed on the xi search bound
};

/// A = det alpha, B = det beta, C = det gamma, D = det sigma. D is computed
/// through the block Schur complement so that product states give D = A * B
/// without round-off.
SymplecticInvariants invariants(const Eigen::MatrixXd& sigma);

/// Gaussian interferometric power from the invariant closed form
/// P = (X + sqrt(X^2 + Y Z)) / (2 Y) with
///   X = (A + C)(1 + B + C - D) - D^2,
///   Y = (D - 1)(1 + A + B + 2C + D),
///   Z = (A + D)(A B - D) + C (2A + C)(1 + B).
/// The form degenerates to 0/0 for pure states (D = 1); when |Y| falls under
/// 1e-9 (1 + A + B + D)^2 the state is flowed for time `regularization`
/// through the default thermal channel (N = 0.5, gamma = 1) first, and the
/// result is flagged. Clamped at 0 from below.
GipResult gip_detailed(const Eigen::MatrixXd& sigma,
                       double regularization = 1e-6);
double gip(const Eigen::MatrixXd& sigma, double regularization = 1e-6);

/// Direct minimization of qfi_phase / 4 over the generator family; the
/// independent cross-check for the gip closed form. Deterministic: value
/// ties break toward the smallest xi, then the smallest chi.
OracleResult gip_oracle_detailed(const GaussianState& state,
                                 const OracleGrid& grid = {});
double gip_oracle(const GaussianState& state, const OracleGrid& grid = {});

/// Quantum Fisher information of the phase imprinted on mode A by the
/// generator g, from the fidelity curvature: -2 (F(+e) - 2 + F(-e)) / e^2
/// with e = d_eps in [1e-4, 1e-2]. Clamped at 0.
double qfi_phase(const GaussianState& state, const GeneratorParams& g,
                 double d_eps = 1e-3);

/// Cramer-Rao bound on the phase-estimator variance: 1 / (n * qfi).
double crb(double qfi, int n_measurements);

/// Smallest symplectic eigenvalue of the partially transposed state:
/// 2 nu^2 = Delta - sqrt(Delta^2 - 4 D), Delta = A + B - 2C. Values below 1
/// witness entanglement.
double nu_tilde_minus(const Eigen::MatrixXd& sigma);

/// h(x) = ((1+x)^2 / 4x) log2((1+x)^2 / 4x) - ((1-x)^2 / 4x) log2((1-x)^2 / 4x),
/// with 0 log2 0 = 0.
double entropy_h(double x);

/// Entanglement of formation for symmetric (det alpha = det beta) two-mode
/// Gaussian states: h(nu_tilde_minus) when nu < 1, else 0. Throws
/// NotApplicableError when |A - B| > symmetry_tol * max(A, B).
double eof_symmetric(const Eigen::MatrixXd& sigma,
                     double symmetry_tol = 1e-8);

/// max{0, -log2 nu_tilde_minus}.
double log_negativity(const Eigen::MatrixXd& sigma);

} // namespace gqt
