#include "gqt/quantifiers.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gqt/channels.hpp"
#include "gqt/errors.hpp"

namespace gqt {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double det2(const Eigen::Matrix2d& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

Eigen::Matrix2d inv2(const Eigen::Matrix2d& m) {
    const double det = det2(m);
    Eigen::Matrix2d inv;
    inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return inv / det;
}

void require_two_mode(const Eigen::MatrixXd& sigma, const char* who) {
    if (sigma.rows() != 4 || sigma.cols() != 4) {
        throw std::invalid_argument(std::string(who) +
                                    ": expected a 4x4 covariance matrix");
    }
}

void require_physical(const Eigen::MatrixXd& sigma, const char* who) {
    require_two_mode(sigma, who);
    if (!is_physical(sigma)) {
        throw PhysicalityError(std::string(who) + ": unphysical covariance matrix");
    }
}

struct ClosedFormTerms {
    double x;
    double y;
    double z;
};

ClosedFormTerms closed_form_terms(const SymplecticInvariants& inv) {
    const double a = inv.det_alpha;
    const double b = inv.det_beta;
    const double c = inv.det_gamma;
    const double d = inv.det_total;
    ClosedFormTerms t;
    t.x = (a + c) * (1.0 + b + c - d) - d * d;
    t.y = (d - 1.0) * (1.0 + a + b + 2.0 * c + d);
    t.z = (a + d) * (a * b - d) + c * (2.0 * a + c) * (1.0 + b);
    return t;
}

bool degenerate(const SymplecticInvariants& inv, const ClosedFormTerms& t) {
    const double scale =
        1.0 + inv.det_alpha + inv.det_beta + inv.det_total;
    return std::abs(t.y) < 1e-9 * scale * scale;
}

Eigen::Matrix2d rotation2(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Eigen::Matrix2d r;
    r << c, s, -s, c;
    return r;
}

Eigen::Matrix2d squeeze2(double xi) {
    Eigen::Matrix2d s = Eigen::Matrix2d::Zero();
    s(0, 0) = std::exp(xi);
    s(1, 1) = std::exp(-xi);
    return s;
}

double wrap_chi(double chi) {
    double w = std::fmod(chi, kPi);
    if (w < 0.0) {
        w += kPi;
    }
    return w;
}

} // namespace

SymplecticInvariants invariants(const Eigen::MatrixXd& sigma) {
    require_two_mode(sigma, "invariants");
    const BlockDecomposition blocks = block_decompose(sigma);
    SymplecticInvariants inv;
    inv.det_alpha = det2(blocks.alpha);
    inv.det_beta = det2(blocks.beta);
    inv.det_gamma = det2(blocks.gamma);
    if (std::abs(inv.det_alpha) > 1e-300) {
        const Eigen::Matrix2d schur =
            blocks.beta - blocks.gamma.transpose() * inv2(blocks.alpha) * blocks.gamma;
        inv.det_total = inv.det_alpha * det2(schur);
    } else {
        inv.det_total = sigma.determinant();
    }
    return inv;
}

GipResult gip_detailed(const Eigen::MatrixXd& sigma, double regularization) {
    require_physical(sigma, "gip");
    if (!(regularization >= 0.0)) {
        throw std::invalid_argument("gip: regularization must be >= 0");
    }
    SymplecticInvariants inv = invariants(sigma);
    ClosedFormTerms terms = closed_form_terms(inv);
    GipResult result;
    if (degenerate(inv, terms) && regularization > 0.0) {
        const GaussianState flowed = evolve_closed_form(
            GaussianState(Eigen::VectorXd::Zero(4), sigma),
            BathParams::thermal(2, 0.5, 1.0), regularization);
        inv = invariants(flowed.covariance());
        terms = closed_form_terms(inv);
        result.regularized = true;
    }
    const double root =
        std::sqrt(std::max(terms.x * terms.x + terms.y * terms.z, 0.0));
    result.value = std::max(0.0, (terms.x + root) / (2.0 * terms.y));
    return result;
}

double gip(const Eigen::MatrixXd& sigma, double regularization) {
    return gip_detailed(sigma, regularization).value;
}

double qfi_phase(const GaussianState& state, const GeneratorParams& g,
                 double d_eps) {
    if (state.modes() != 2) {
        throw std::invalid_argument("qfi_phase: expected a two-mode state");
    }
    require_physical(state.covariance(), "qfi_phase");
    if (!(d_eps >= 1e-4 && d_eps <= 1e-2)) {
        throw std::invalid_argument("qfi_phase: d_eps must lie in [1e-4, 1e-2]");
    }
    if (!std::isfinite(g.xi) || g.xi < 0.0) {
        throw std::invalid_argument("qfi_phase: generator xi must be finite and >= 0");
    }
    const double chi = wrap_chi(g.chi);
    const Eigen::Matrix2d frame = rotation2(chi) * squeeze2(g.xi);
    const Eigen::Matrix2d frame_inv = squeeze2(-g.xi) * rotation2(-chi);

    auto evolved = [&](double eps) {
        Eigen::Matrix4d s = Eigen::Matrix4d::Identity();
        s.block<2, 2>(0, 0) = frame * rotation2(eps) * frame_inv;
        return apply_symplectic(state, SymplecticMatrix(2, s));
    };
    const double f_plus = gaussian_fidelity(state, evolved(d_eps));
    const double f_minus = gaussian_fidelity(state, evolved(-d_eps));
    return std::max(0.0, -2.0 * (f_plus - 2.0 + f_minus) / (d_eps * d_eps));
}

OracleResult gip_oracle_detailed(const GaussianState& state,
                                 const OracleGrid& grid) {
    if (state.modes() != 2) {
        throw std::invalid_argument("gip_oracle: expected a two-mode state");
    }
    require_physical(state.covariance(), "gip_oracle");

    OracleResult best;
    best.value = std::numeric_limits<double>::infinity();
    auto consider = [&](double xi, double chi) {
        xi = std::clamp(xi, 0.0, grid.xi_max);
        chi = wrap_chi(chi);
        const double q = qfi_phase(state, {xi, chi}, grid.d_eps);
        if (q < best.value ||
            (q == best.value &&
             (xi < best.minimizer.xi ||
              (xi == best.minimizer.xi && chi < best.minimizer.chi)))) {
            best.value = q;
            best.minimizer = {xi, chi};
        }
    };

    const auto xi_cells =
        static_cast<long>(std::floor(grid.xi_max / grid.xi_step + 1e-9));
    const auto chi_cells =
        static_cast<long>(std::floor(kPi / grid.chi_step - 1e-9));
    for (long i = 0; i <= xi_cells; ++i) {
        for (long j = 0; j <= chi_cells; ++j) {
            consider(static_cast<double>(i) * grid.xi_step,
                     static_cast<double>(j) * grid.chi_step);
        }
    }

    double xi_span = grid.xi_step;
    double chi_span = grid.chi_step;
    for (int pass = 0; pass < grid.refinements; ++pass) {
        const double xi_step = xi_span / grid.shrink;
        const double chi_step = chi_span / grid.shrink;
        const GeneratorParams center = best.minimizer;
        for (long i = -10; i <= 10; ++i) {
            for (long j = -10; j <= 10; ++j) {
                consider(center.xi + static_cast<double>(i) * xi_step,
                         center.chi + static_cast<double>(j) * chi_step);
            }
        }
        xi_span = xi_step;
        chi_span = chi_step;
    }

    best.value /= 4.0;
    best.xi_at_cap = best.minimizer.xi >= grid.xi_max - 1e-12;
    return best;
}

double gip_oracle(const GaussianState& state, const OracleGrid& grid) {
    return gip_oracle_detailed(state, grid).value;
}

double crb(double qfi, int n_measurements) {
    if (!(qfi > 0.0)) {
        throw std::invalid_argument("crb: qfi must be > 0");
    }
    if (n_measurements < 1) {
        throw std::invalid_argument("crb: n_measurements must be >= 1");
    }
    return 1.0 / (static_cast<double>(n_measurements) * qfi);
}

double nu_tilde_minus(const Eigen::MatrixXd& sigma) {
    require_physical(sigma, "nu_tilde_minus");
    const SymplecticInvariants inv = invariants(sigma);
    const double delta = inv.det_alpha + inv.det_beta - 2.0 * inv.det_gamma;
    double disc = delta * delta - 4.0 * inv.det_total;
    if (disc < -1e-10) {
        throw NumericalError("nu_tilde_minus: negative discriminant");
    }
    disc = std::max(disc, 0.0);
    // Smaller root of x^2 - delta x + D in the cancellation-free form.
    double nu_sq = 2.0 * inv.det_total / (delta + std::sqrt(disc));
    if (nu_sq < -1e-10) {
        throw NumericalError("nu_tilde_minus: negative squared eigenvalue");
    }
    nu_sq = std::max(nu_sq, 0.0);
    return std::sqrt(nu_sq);
}

double entropy_h(double x) {
    if (!(x > 0.0)) {
        throw std::invalid_argument("entropy_h: x must be > 0");
    }
    const double plus = (1.0 + x) * (1.0 + x) / (4.0 * x);
    const double minus = (1.0 - x) * (1.0 - x) / (4.0 * x);
    const double term_plus = plus > 0.0 ? plus * std::log2(plus) : 0.0;
    const double term_minus = minus > 0.0 ? minus * std::log2(minus) : 0.0;
    return term_plus - term_minus;
}

double eof_symmetric(const Eigen::MatrixXd& sigma, double symmetry_tol) {
    require_physical(sigma, "eof_symmetric");
    const SymplecticInvariants inv = invariants(sigma);
    const double scale = std::max(inv.det_alpha, inv.det_beta);
    if (std::abs(inv.det_alpha - inv.det_beta) > symmetry_tol * scale) {
        throw NotApplicableError(
            "eof_symmetric: closed form requires det alpha = det beta");
    }
    const double nu = nu_tilde_minus(sigma);
    if (nu >= 1.0) {
        return 0.0;
    }
    return std::max(0.0, entropy_h(nu));
}

double log_negativity(const Eigen::MatrixXd& sigma) {
    const double nu = nu_tilde_minus(sigma);
    return std::max(0.0, -std::log2(nu));
}

} // namespace gqt
