#include "gqt/core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "gqt/errors.hpp"

namespace gqt {

namespace {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) {
    return 0.5 * (m + m.transpose());
}

void require_covariance_shape(const Eigen::MatrixXd& sigma, const char* who) {
    if (sigma.rows() != sigma.cols() || sigma.rows() < 2 ||
        sigma.rows() % 2 != 0) {
        throw std::invalid_argument(std::string(who) +
                                    ": covariance matrix must be 2m x 2m");
    }
}

} // namespace

Eigen::MatrixXd symplectic_form(int modes) {
    if (modes < 1) {
        throw std::invalid_argument("symplectic_form: modes must be >= 1");
    }
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
    for (int k = 0; k < modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

SymplecticMatrix::SymplecticMatrix(int modes, Eigen::MatrixXd matrix)
    : modes_(modes), mat_(std::move(matrix)) {
    if (modes_ < 1) {
        throw std::invalid_argument("SymplecticMatrix: modes must be >= 1");
    }
    if (mat_.rows() != 2 * modes_ || mat_.cols() != 2 * modes_) {
        throw std::invalid_argument("SymplecticMatrix: matrix must be 2m x 2m");
    }
    const Eigen::MatrixXd omega = symplectic_form(modes_);
    const double defect =
        (mat_ * omega * mat_.transpose() - omega).cwiseAbs().maxCoeff();
    if (!(defect <= kSymplecticTol)) {
        throw std::invalid_argument(
            "SymplecticMatrix: S Omega S^T != Omega (defect " +
            std::to_string(defect) + ")");
    }
}

SymplecticMatrix operator*(const SymplecticMatrix& a,
                           const SymplecticMatrix& b) {
    if (a.modes() != b.modes()) {
        throw std::invalid_argument("SymplecticMatrix: mode count mismatch");
    }
    return SymplecticMatrix(a.modes(), a.matrix() * b.matrix());
}

GaussianState::GaussianState(Eigen::VectorXd displacement,
                             Eigen::MatrixXd covariance)
    : d_(std::move(displacement)), sigma_(std::move(covariance)) {
    require_covariance_shape(sigma_, "GaussianState");
    if (d_.size() != sigma_.rows()) {
        throw std::invalid_argument(
            "GaussianState: displacement length must match covariance size");
    }
    const double asym = (sigma_ - sigma_.transpose()).cwiseAbs().maxCoeff();
    if (!(asym <= kSymmetryTol)) {
        throw std::invalid_argument("GaussianState: covariance asymmetry " +
                                    std::to_string(asym) + " exceeds tolerance");
    }
    modes_ = static_cast<int>(sigma_.rows()) / 2;
    sigma_ = symmetrized(sigma_);
}

Eigen::Matrix4d BlockDecomposition::reassemble() const {
    Eigen::Matrix4d sigma;
    sigma.block<2, 2>(0, 0) = alpha;
    sigma.block<2, 2>(0, 2) = gamma;
    sigma.block<2, 2>(2, 0) = gamma.transpose();
    sigma.block<2, 2>(2, 2) = beta;
    return sigma;
}

GaussianState thermal_state(double nbar) {
    if (!(nbar >= 0.0)) {
        throw std::invalid_argument("thermal_state: nbar must be >= 0");
    }
    return GaussianState(Eigen::VectorXd::Zero(2),
                         (2.0 * nbar + 1.0) * Eigen::MatrixXd::Identity(2, 2));
}

SymplecticMatrix two_mode_squeezer(double r) {
    if (!std::isfinite(r)) {
        throw std::invalid_argument("two_mode_squeezer: r must be finite");
    }
    const double ch = std::cosh(r);
    const double sh = std::sinh(r);
    Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
    s(0, 0) = ch;
    s(1, 1) = ch;
    s(2, 2) = ch;
    s(3, 3) = ch;
    s(0, 2) = sh;
    s(1, 3) = -sh;
    s(2, 0) = sh;
    s(3, 1) = -sh;
    return SymplecticMatrix(2, s);
}

SymplecticMatrix two_mode_rotation(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("two_mode_rotation: theta must be finite");
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m.block<2, 2>(0, 0) = c * Eigen::Matrix2d::Identity();
    m.block<2, 2>(0, 2) = s * Eigen::Matrix2d::Identity();
    m.block<2, 2>(2, 0) = -s * Eigen::Matrix2d::Identity();
    m.block<2, 2>(2, 2) = c * Eigen::Matrix2d::Identity();
    return SymplecticMatrix(2, m);
}

SymplecticMatrix phase_rotation(double phi, int target, int modes) {
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("phase_rotation: phi must be finite");
    }
    if (modes < 1) {
        throw std::invalid_argument("phase_rotation: modes must be >= 1");
    }
    if (target < 0 || target >= modes) {
        throw std::invalid_argument("phase_rotation: target mode out of range");
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    m(2 * target, 2 * target) = c;
    m(2 * target, 2 * target + 1) = s;
    m(2 * target + 1, 2 * target) = -s;
    m(2 * target + 1, 2 * target + 1) = c;
    return SymplecticMatrix(modes, m);
}

GaussianState tensor(const GaussianState& a, const GaussianState& b) {
    const int na = 2 * a.modes();
    const int nb = 2 * b.modes();
    Eigen::VectorXd d(na + nb);
    d.head(na) = a.displacement();
    d.tail(nb) = b.displacement();
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(na + nb, na + nb);
    sigma.topLeftCorner(na, na) = a.covariance();
    sigma.bottomRightCorner(nb, nb) = b.covariance();
    return GaussianState(std::move(d), std::move(sigma));
}

GaussianState apply_symplectic(const GaussianState& state,
                               const SymplecticMatrix& s) {
    if (state.modes() != s.modes()) {
        throw std::invalid_argument("apply_symplectic: mode count mismatch");
    }
    Eigen::MatrixXd sigma = symmetrized(s.matrix() * state.covariance() *
                                        s.matrix().transpose());
    return GaussianState(s.matrix() * state.displacement(), std::move(sigma));
}

GaussianState displace(const GaussianState& state,
                       const Eigen::VectorXd& delta) {
    if (delta.size() != state.displacement().size()) {
        throw std::invalid_argument("displace: delta length mismatch");
    }
    return GaussianState(state.displacement() + delta, state.covariance());
}

BlockDecomposition block_decompose(const Eigen::MatrixXd& sigma) {
    if (sigma.rows() != 4 || sigma.cols() != 4) {
        throw std::invalid_argument("block_decompose: expected a 4x4 matrix");
    }
    BlockDecomposition b;
    b.alpha = sigma.block<2, 2>(0, 0);
    b.beta = sigma.block<2, 2>(2, 2);
    b.gamma = sigma.block<2, 2>(0, 2);
    return b;
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& sigma) {
    require_covariance_shape(sigma, "symplectic_eigenvalues");
    const Eigen::MatrixXd sym = symmetrized(sigma);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sa(sym);
    if (sa.eigenvalues().minCoeff() <= 0.0) {
        throw std::invalid_argument(
            "symplectic_eigenvalues: covariance matrix is not positive-definite");
    }
    const int m = static_cast<int>(sym.rows()) / 2;
    Eigen::EigenSolver<Eigen::MatrixXd> es(symplectic_form(m) * sym, false);
    std::vector<double> moduli(2 * m);
    for (int k = 0; k < 2 * m; ++k) {
        moduli[static_cast<size_t>(k)] = std::abs(es.eigenvalues()[k]);
    }
    std::sort(moduli.begin(), moduli.end());
    // The spectrum of Omega*sigma comes in conjugate pairs +-i nu_k; average
    // each adjacent pair of moduli.
    std::vector<double> nus(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        nus[static_cast<size_t>(k)] =
            0.5 * (moduli[static_cast<size_t>(2 * k)] +
                   moduli[static_cast<size_t>(2 * k + 1)]);
    }
    return nus;
}

bool is_physical(const Eigen::MatrixXd& sigma, double tol) {
    if (sigma.rows() != sigma.cols() || sigma.rows() < 2 ||
        sigma.rows() % 2 != 0) {
        return false;
    }
    const Eigen::MatrixXd sym = symmetrized(sigma);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sa(sym);
    if (sa.eigenvalues().minCoeff() <= 0.0) {
        return false;
    }
    const auto nus = symplectic_eigenvalues(sym);
    return nus.front() >= 1.0 - tol;
}

double purity(const Eigen::MatrixXd& sigma) {
    require_covariance_shape(sigma, "purity");
    const double det = sigma.determinant();
    if (!(det > 0.0)) {
        throw std::invalid_argument("purity: covariance determinant must be > 0");
    }
    return 1.0 / std::sqrt(det);
}

double gaussian_fidelity(const GaussianState& a, const GaussianState& b) {
    if (a.modes() != b.modes()) {
        throw std::invalid_argument("gaussian_fidelity: mode count mismatch");
    }
    if (!is_physical(a.covariance()) || !is_physical(b.covariance())) {
        throw std::invalid_argument("gaussian_fidelity: unphysical input state");
    }
    const int n = 2 * a.modes();
    const Eigen::MatrixXd sum = a.covariance() + b.covariance();
    const Eigen::LDLT<Eigen::MatrixXd> sum_ldlt(sum);
    const Eigen::VectorXd delta = b.displacement() - a.displacement();
    const double gap = std::exp(-0.5 * delta.dot(sum_ldlt.solve(delta)));
    const double det_sum = sum.determinant();

    // With at least one pure state the fidelity collapses to the exact
    // trace overlap Tr(rho_a rho_b); this path stays accurate where the
    // general closed form loses precision.
    const double pure_cut = 1.0 - 1e-9;
    if (purity(a.covariance()) >= pure_cut ||
        purity(b.covariance()) >= pure_cut) {
        const double f = std::ldexp(1.0, a.modes()) / std::sqrt(det_sum) * gap;
        return std::clamp(f, 0.0, 1.0);
    }

    const Eigen::MatrixXd omega = symplectic_form(a.modes());
    const Eigen::MatrixXd aux =
        omega.transpose() *
        sum_ldlt.solve(omega + b.covariance() * omega * a.covariance());
    const Eigen::MatrixXd w = aux * omega;
    const Eigen::MatrixXd k =
        Eigen::MatrixXd::Identity(n, n) + (w * w).inverse();
    // k can carry tiny negative eigenvalues near purity; take the square
    // root in complex arithmetic and keep the real part.
    const Eigen::MatrixXcd sqrt_k =
        Eigen::MatrixXcd(k.cast<std::complex<double>>()).sqrt();
    const double num =
        ((Eigen::MatrixXd::Identity(n, n) + sqrt_k.real()) * aux).determinant();
    const double f0_fourth = std::ldexp(num, n) / det_sum;
    const double f0_sq = std::sqrt(std::max(f0_fourth, 0.0));
    return std::clamp(f0_sq * gap, 0.0, 1.0);
}

} // namespace gqt
