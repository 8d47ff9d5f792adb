#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "gqt/channels.hpp"
#include "gqt/core.hpp"
#include "gqt/protocol.hpp"

namespace gqt::testing {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Two-mode squeezed vacuum with squeezing r.
inline GaussianState tmsv(double r) {
    return apply_symplectic(tensor(thermal_state(0.0), thermal_state(0.0)),
                            two_mode_squeezer(r));
}

/// Random two-mode symplectic built by composing squeezers, rotations, and
/// per-mode phase rotations.
inline SymplecticMatrix random_symplectic(std::mt19937& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> squeeze(-0.8, 0.8);
    SymplecticMatrix s = two_mode_rotation(angle(rng));
    s = two_mode_squeezer(squeeze(rng)) * s;
    s = phase_rotation(angle(rng), 0, 2) * s;
    s = phase_rotation(angle(rng), 1, 2) * s;
    s = two_mode_rotation(angle(rng)) * s;
    return s;
}

/// Random physical evolved scenario state drawn from the protocol family.
inline GaussianState random_evolved_state(std::mt19937& rng) {
    std::uniform_real_distribution<double> r_dist(0.05, 1.5);
    std::uniform_real_distribution<double> theta_dist(0.0, kPi);
    std::uniform_real_distribution<double> t_dist(0.05, 2.0);
    std::uniform_real_distribution<double> n_dist(0.0, 1.0);
    ScenarioParams p;
    p.r = r_dist(rng);
    p.theta = theta_dist(rng);
    p.t = t_dist(rng);
    p.bath = BathParams::thermal(2, n_dist(rng), 1.0);
    GaussianState state = build_input(p);
    return evolve_closed_form(state, p.bath, p.t);
}

/// Uhlmann fidelity of two single-mode thermal states evaluated directly in
/// a truncated Fock basis: both density matrices are diagonal, so
/// F = (sum_n sqrt(p_n q_n))^2.
inline double fock_thermal_fidelity(double nbar1, double nbar2, int cutoff) {
    double root_sum = 0.0;
    for (int n = 0; n <= cutoff; ++n) {
        const double p =
            std::pow(nbar1 / (nbar1 + 1.0), n) / (nbar1 + 1.0);
        const double q =
            std::pow(nbar2 / (nbar2 + 1.0), n) / (nbar2 + 1.0);
        root_sum += std::sqrt(p * q);
    }
    return root_sum * root_sum;
}

/// Von Neumann entropy (bits) of a thermal state with occupation nbar.
inline double thermal_entropy_bits(double nbar) {
    if (nbar <= 0.0) {
        return 0.0;
    }
    return (nbar + 1.0) * std::log2(nbar + 1.0) - nbar * std::log2(nbar);
}

/// Thermal-loss map acting on mode B only: beta -> e beta + (1-e) s_inf I,
/// gamma -> sqrt(e) gamma, alpha untouched. Used to probe monotonicity
/// under local operations on B.
inline Eigen::Matrix4d attenuate_mode_b(const Eigen::MatrixXd& sigma,
                                        double gamma_t, double occupation) {
    const double e = std::exp(-gamma_t);
    const double root_e = std::sqrt(e);
    Eigen::Matrix4d out = sigma;
    out.block<2, 2>(2, 2) =
        e * sigma.block<2, 2>(2, 2) +
        (1.0 - e) * (2.0 * occupation + 1.0) * Eigen::Matrix2d::Identity();
    out.block<2, 2>(0, 2) = root_e * sigma.block<2, 2>(0, 2);
    out.block<2, 2>(2, 0) = root_e * sigma.block<2, 2>(2, 0);
    return out;
}

} // namespace gqt::testing
