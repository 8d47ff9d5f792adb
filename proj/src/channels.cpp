#include "gqt/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gqt/errors.hpp"

namespace gqt {

namespace {

void require_compatible(const GaussianState& state, const BathParams& bath,
                        const char* who) {
    validate_bath(bath);
    if (state.modes() != bath.modes()) {
        throw std::invalid_argument(std::string(who) +
                                    ": state/bath mode count mismatch");
    }
    if (!is_physical(state.covariance())) {
        throw PhysicalityError(std::string(who) + ": input state is unphysical");
    }
}

} // namespace

BathParams BathParams::thermal(int modes, double occupation, double gamma) {
    BathParams bath;
    bath.gamma = gamma;
    bath.occupation.assign(static_cast<size_t>(modes), occupation);
    bath.squeezing.assign(static_cast<size_t>(modes), {0.0, 0.0});
    return bath;
}

void validate_bath(const BathParams& bath) {
    if (!(bath.gamma > 0.0) || !std::isfinite(bath.gamma)) {
        throw PhysicalityError("bath: damping rate gamma must be > 0");
    }
    if (bath.occupation.empty() ||
        bath.squeezing.size() != bath.occupation.size()) {
        throw PhysicalityError(
            "bath: occupation and squeezing must list one entry per mode");
    }
    for (size_t k = 0; k < bath.occupation.size(); ++k) {
        const double n = bath.occupation[k];
        if (!(n >= 0.0) || !std::isfinite(n)) {
            throw PhysicalityError("bath: occupation of mode " +
                                   std::to_string(k) + " must be >= 0");
        }
        const double m2 = std::norm(bath.squeezing[k]);
        if (m2 > n * (n + 1.0)) {
            throw PhysicalityError("bath: |M|^2 > N(N+1) on mode " +
                                   std::to_string(k));
        }
    }
}

Eigen::MatrixXd asymptotic_cm(const BathParams& bath) {
    validate_bath(bath);
    const int m = bath.modes();
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    for (int k = 0; k < m; ++k) {
        const double n = bath.occupation[static_cast<size_t>(k)];
        const std::complex<double> sq = bath.squeezing[static_cast<size_t>(k)];
        sigma(2 * k, 2 * k) = 2.0 * n + 1.0 + 2.0 * sq.real();
        sigma(2 * k + 1, 2 * k + 1) = 2.0 * n + 1.0 - 2.0 * sq.real();
        sigma(2 * k, 2 * k + 1) = 2.0 * sq.imag();
        sigma(2 * k + 1, 2 * k) = 2.0 * sq.imag();
    }
    return sigma;
}

GaussianState evolve_closed_form(const GaussianState& state,
                                 const BathParams& bath, double t) {
    require_compatible(state, bath, "evolve_closed_form");
    if (!(t >= 0.0)) {
        throw std::invalid_argument("evolve_closed_form: t must be >= 0");
    }
    const double decay = std::exp(-bath.gamma * t);
    Eigen::MatrixXd sigma =
        decay * state.covariance() + (1.0 - decay) * asymptotic_cm(bath);
    Eigen::VectorXd d = std::exp(-0.5 * bath.gamma * t) * state.displacement();
    return GaussianState(std::move(d), std::move(sigma));
}

GaussianState evolve_ode(const GaussianState& state, const BathParams& bath,
                         double t, double dt) {
    require_compatible(state, bath, "evolve_ode");
    if (!(t >= 0.0)) {
        throw std::invalid_argument("evolve_ode: t must be >= 0");
    }
    if (!(dt > 0.0)) {
        throw std::invalid_argument("evolve_ode: dt must be > 0");
    }
    if (t > 0.0 && dt > t) {
        throw std::invalid_argument("evolve_ode: dt must not exceed t");
    }

    const Eigen::MatrixXd sigma_inf = asymptotic_cm(bath);
    const double gamma = bath.gamma;
    Eigen::MatrixXd sigma = state.covariance();
    Eigen::VectorXd d = state.displacement();

    auto sigma_dot = [&](const Eigen::MatrixXd& s) -> Eigen::MatrixXd {
        return -gamma * (s - sigma_inf);
    };
    auto d_dot = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
        return -0.5 * gamma * v;
    };
    auto step = [&](double h) {
        const Eigen::MatrixXd k1 = sigma_dot(sigma);
        const Eigen::MatrixXd k2 = sigma_dot(sigma + 0.5 * h * k1);
        const Eigen::MatrixXd k3 = sigma_dot(sigma + 0.5 * h * k2);
        const Eigen::MatrixXd k4 = sigma_dot(sigma + h * k3);
        sigma += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const Eigen::VectorXd l1 = d_dot(d);
        const Eigen::VectorXd l2 = d_dot(d + 0.5 * h * l1);
        const Eigen::VectorXd l3 = d_dot(d + 0.5 * h * l2);
        const Eigen::VectorXd l4 = d_dot(d + h * l3);
        d += (h / 6.0) * (l1 + 2.0 * l2 + 2.0 * l3 + l4);
    };

    const auto full_steps = static_cast<long>(std::floor(t / dt + 1e-12));
    for (long i = 0; i < full_steps; ++i) {
        step(dt);
    }
    const double remainder = t - static_cast<double>(full_steps) * dt;
    if (remainder > 1e-15 * std::max(1.0, t)) {
        step(remainder);
    }
    return GaussianState(std::move(d), std::move(sigma));
}

} // namespace gqt
