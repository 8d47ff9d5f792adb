#pragma once

#include <Eigen/Dense>
#include <vector>

namespace gqt {

// Conventions used throughout: hbar = 2, quadrature ordering
// (Q1, P1, Q2, P2, ...), vacuum covariance = identity. A state is physical
// when every symplectic eigenvalue of its covariance matrix is >= 1.

inline constexpr double kSymmetryTol = 1e-12;   // max |sigma_kl - sigma_lk|
inline constexpr double kSymplecticTol = 1e-10; // max |S Omega S^T - Omega|
inline constexpr double kEigenTol = 1e-9;       // symplectic-spectrum checks

/// The 2m x 2m symplectic form Omega = diag(w, ..., w), w = [[0,1],[-1,0]].
/// Antisymmetric, orthogonal, and Omega^2 = -I. Throws for modes < 1.
Eigen::MatrixXd symplectic_form(int modes);

/// A real 2m x 2m matrix S with S Omega S^T = Omega, validated on
/// construction to within kSymplecticTol.
class SymplecticMatrix {
public:
    SymplecticMatrix(int modes, Eigen::MatrixXd matrix);

    int modes() const { return modes_; }
    const Eigen::MatrixXd& matrix() const { return mat_; }

    /// Composition: (a * b) acts as b first, then a.
    friend SymplecticMatrix operator*(const SymplecticMatrix& a,
                                      const SymplecticMatrix& b);

private:
    int modes_;
    Eigen::MatrixXd mat_;
};

/// An m-mode Gaussian state: quadrature means d (length 2m) and a symmetric
/// covariance matrix sigma (2m x 2m). Symmetry is enforced on construction
/// (within kSymmetryTol, then symmetrized); physicality is not, query it
/// with is_physical().
class GaussianState {
public:
    GaussianState(Eigen::VectorXd displacement, Eigen::MatrixXd covariance);

    int modes() const { return modes_; }
    const Eigen::VectorXd& displacement() const { return d_; }
    const Eigen::MatrixXd& covariance() const { return sigma_; }

private:
    int modes_;
    Eigen::VectorXd d_;
    Eigen::MatrixXd sigma_;
};

/// 2x2 blocks of a two-mode covariance matrix [[alpha, gamma],
/// [gamma^T, beta]]; gamma carries the cross-mode correlations.
struct BlockDecomposition {
    Eigen::Matrix2d alpha;
    Eigen::Matrix2d beta;
    Eigen::Matrix2d gamma;

    Eigen::Matrix4d reassemble() const;
};

/// Single-mode thermal state with mean photon number nbar:
/// d = 0, sigma = (2 nbar + 1) I.
GaussianState thermal_state(double nbar);

/// Two-mode squeezer S2(r): blocks [[cosh r I, sinh r Z], [sinh r Z,
/// cosh r I]] with Z = diag(1, -1).
SymplecticMatrix two_mode_squeezer(double r);

/// Two-mode rotation (beam splitter of transmissivity cos^2 theta):
/// blocks [[cos theta I, sin theta I], [-sin theta I, cos theta I]].
SymplecticMatrix two_mode_rotation(double theta);

/// Phase rotation by phi on one mode of an m-mode system; identity on the
/// rest. The target mode's block is [[cos phi, sin phi], [-sin phi, cos phi]].
SymplecticMatrix phase_rotation(double phi, int target, int modes);

/// Tensor product: displacements concatenate, covariances direct-sum.
GaussianState tensor(const GaussianState& a, const GaussianState& b);

/// sigma -> S sigma S^T, d -> S d. Preserves the symplectic spectrum.
GaussianState apply_symplectic(const GaussianState& state,
                               const SymplecticMatrix& s);

/// Shift the quadrature means by delta; the covariance is untouched.
GaussianState displace(const GaussianState& state,
                       const Eigen::VectorXd& delta);

/// Split a 4x4 covariance matrix into its mode and cross blocks.
BlockDecomposition block_decompose(const Eigen::MatrixXd& sigma);

/// The m symplectic eigenvalues of a positive-definite covariance matrix
/// (moduli of the spectrum of i Omega sigma), ascending.
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& sigma);

/// True iff sigma is a valid quantum covariance matrix: positive definite
/// with every symplectic eigenvalue >= 1 - tol.
bool is_physical(const Eigen::MatrixXd& sigma, double tol = kEigenTol);

/// mu = 1 / sqrt(det sigma); equals 1 exactly for pure states.
double purity(const Eigen::MatrixXd& sigma);

/// Uhlmann fidelity F(rho_a, rho_b) = {Tr[(sqrt(rho_a) rho_b
/// sqrt(rho_a))^(1/2)]}^2 of two Gaussian states, evaluated from the
/// (d, sigma) pairs. Uses the exact trace-overlap expression when either
/// state is pure and the general mixed-state closed form otherwise.
double gaussian_fidelity(const GaussianState& a, const GaussianState& b);

} // namespace gqt
