#include <doctest.h>

#include <random>

#include "gqt/channels.hpp"
#include "gqt/core.hpp"
#include "helpers.hpp"

using namespace gqt;
using namespace gqt::testing;

namespace {

GaussianState evolved_thermal_probe(double r, double t, std::mt19937& rng) {
    std::uniform_real_distribution<double> angle(0.0, kPi);
    GaussianState state = tmsv(r);
    state = apply_symplectic(state, two_mode_rotation(angle(rng)));
    return evolve_closed_form(state, BathParams::thermal(2, 0.5, 1.0), t);
}

} // namespace

TEST_CASE("fidelity of a state with itself is 1") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        const GaussianState s = random_evolved_state(rng);
        CHECK(gaussian_fidelity(s, s) == doctest::Approx(1.0).epsilon(1e-10));
    }
    const GaussianState pure = tmsv(0.6);
    CHECK(gaussian_fidelity(pure, pure) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("coherent states: F = exp(-|gap|^2 / 4)") {
    const GaussianState vac = tensor(thermal_state(0.0), thermal_state(0.0));
    Eigen::Vector4d gap(0.8, -0.4, 0.3, 1.1);
    const GaussianState moved = displace(vac, gap);
    const double expected = std::exp(-gap.squaredNorm() / 4.0);
    CHECK(gaussian_fidelity(vac, moved) ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("thermal states match the Fock-basis oracle") {
    const double pairs[][2] = {{0.3, 0.9}, {0.5, 0.5}, {0.1, 1.4}, {0.0, 0.7}};
    for (const auto& pair : pairs) {
        const double n1 = pair[0];
        const double n2 = pair[1];
        const double closed = gaussian_fidelity(thermal_state(n1), thermal_state(n2));
        const double oracle = fock_thermal_fidelity(n1, n2, 300);
        CHECK(closed == doctest::Approx(oracle).epsilon(1e-9));

        const double root = std::sqrt((n1 + 1.0) * (n2 + 1.0)) - std::sqrt(n1 * n2);
        CHECK(closed == doctest::Approx(1.0 / (root * root)).epsilon(1e-10));
    }
}

TEST_CASE("fidelity symmetry") {
    std::mt19937 rng(202);
    for (int trial = 0; trial < 10; ++trial) {
        const GaussianState a = random_evolved_state(rng);
        const GaussianState b = random_evolved_state(rng);
        CHECK(std::abs(gaussian_fidelity(a, b) - gaussian_fidelity(b, a)) <=
              1e-10);
    }
}

TEST_CASE("fidelity is 1 only for identical states") {
    std::mt19937 rng(303);
    const GaussianState a = random_evolved_state(rng);
    const GaussianState b = random_evolved_state(rng);
    CHECK(gaussian_fidelity(a, b) < 1.0 - 1e-6);
    const GaussianState shifted = displace(a, Eigen::Vector4d(0.1, 0, 0, 0));
    CHECK(gaussian_fidelity(a, shifted) < 1.0 - 1e-6);
}

TEST_CASE("fidelity multiplicativity over tensor products") {
    std::mt19937 rng(404);
    const GaussianState a = evolved_thermal_probe(0.4, 0.6, rng);
    const GaussianState b = evolved_thermal_probe(0.7, 0.3, rng);
    const GaussianState c = evolved_thermal_probe(0.2, 1.0, rng);
    const GaussianState d = evolved_thermal_probe((0.9), 0.8, rng);
    const double product =
        gaussian_fidelity(tensor(a, c), tensor(b, d));
    const double factors = gaussian_fidelity(a, b) * gaussian_fidelity(c, d);
    CHECK(std::abs(product - factors) <= 1e-8);
}

TEST_CASE("fidelity input validation") {
    const GaussianState one = thermal_state(0.5);
    const GaussianState two = tensor(one, one);
    CHECK_THROWS_AS(gaussian_fidelity(one, two), std::invalid_argument);

    const GaussianState bad(Eigen::Vector2d::Zero(),
                            0.5 * Eigen::Matrix2d::Identity());
    CHECK_THROWS_AS(gaussian_fidelity(bad, one), std::invalid_argument);
}
