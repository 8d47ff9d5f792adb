#include <doctest.h>

#include "gqt/channels.hpp"
#include "gqt/errors.hpp"
#include "helpers.hpp"

using namespace gqt;
using namespace gqt::testing;

TEST_CASE("bath validation") {
    CHECK_NOTHROW(validate_bath(BathParams::thermal(2, 0.5)));

    BathParams bad = BathParams::thermal(2, 1.0);
    bad.squeezing[1] = {1.5, 0.0}; // 2.25 > N(N+1) = 2
    CHECK_THROWS_AS(validate_bath(bad), PhysicalityError);
    try {
        validate_bath(bad);
    } catch (const PhysicalityError& e) {
        CHECK(std::string(e.what()).find("mode 1") != std::string::npos);
    }

    BathParams ok = BathParams::thermal(2, 1.0);
    ok.squeezing[0] = {1.2, 0.0}; // 1.44 <= 2
    CHECK_NOTHROW(validate_bath(ok));

    BathParams no_gamma = BathParams::thermal(1, 0.5, 0.0);
    CHECK_THROWS_AS(validate_bath(no_gamma), PhysicalityError);
}

TEST_CASE("asymptotic covariance matrix") {
    const Eigen::MatrixXd warm = asymptotic_cm(BathParams::thermal(2, 0.5));
    CHECK((warm - 2.0 * Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() ==
          0.0);

    const Eigen::MatrixXd vac = asymptotic_cm(BathParams::thermal(2, 0.0));
    CHECK((vac - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

    BathParams squeezed = BathParams::thermal(1, 1.0);
    squeezed.squeezing[0] = {1.2, 0.0};
    const Eigen::MatrixXd block = asymptotic_cm(squeezed);
    CHECK(block(0, 0) == doctest::Approx(5.4).epsilon(1e-12));
    CHECK(block(1, 1) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(block(0, 1) == 0.0);
    CHECK(is_physical(block));
}

TEST_CASE("closed-form evolution") {
    const BathParams bath = BathParams::thermal(2, 0.5);
    const GaussianState probe = tmsv(0.3);

    const GaussianState still = evolve_closed_form(probe, bath, 0.0);
    CHECK((still.covariance() - probe.covariance()).cwiseAbs().maxCoeff() ==
          0.0);

    const GaussianState relaxed = evolve_closed_form(probe, bath, 50.0);
    CHECK((relaxed.covariance() - asymptotic_cm(bath)).cwiseAbs().maxCoeff() <=
          1e-12);

    const double t = 1.0;
    const GaussianState evolved = evolve_closed_form(probe, bath, t);
    const double decay = std::exp(-t);
    const Eigen::MatrixXd expected =
        decay * probe.covariance() + (1.0 - decay) * asymptotic_cm(bath);
    CHECK((evolved.covariance() - expected).cwiseAbs().maxCoeff() <= 1e-14);

    CHECK_THROWS_AS(evolve_closed_form(probe, bath, -0.1),
                    std::invalid_argument);
}

TEST_CASE("RK4 matches the closed form") {
    const BathParams bath = BathParams::thermal(2, 0.5);
    const GaussianState probe = tmsv(0.3);
    const GaussianState ode = evolve_ode(probe, bath, 2.0, 1e-3);
    const GaussianState closed = evolve_closed_form(probe, bath, 2.0);
    CHECK((ode.covariance() - closed.covariance()).cwiseAbs().maxCoeff() <=
          1e-8);
    CHECK((ode.displacement() - closed.displacement()).cwiseAbs().maxCoeff() <=
          1e-8);

    const GaussianState still = evolve_ode(probe, bath, 0.0, 1e-3);
    CHECK((still.covariance() - probe.covariance()).cwiseAbs().maxCoeff() ==
          0.0);

    CHECK_THROWS_AS(evolve_ode(probe, bath, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(evolve_ode(probe, bath, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("RK4 converges at fourth order") {
    const BathParams bath = BathParams::thermal(2, 0.5);
    const GaussianState probe = tmsv(0.5);
    const Eigen::MatrixXd target =
        evolve_closed_form(probe, bath, 1.0).covariance();
    const double coarse =
        (evolve_ode(probe, bath, 1.0, 0.1).covariance() - target)
            .cwiseAbs()
            .maxCoeff();
    const double fine =
        (evolve_ode(probe, bath, 1.0, 0.05).covariance() - target)
            .cwiseAbs()
            .maxCoeff();
    const double ratio = coarse / fine;
    CHECK(ratio > 12.0);
    CHECK(ratio < 20.0);
}

TEST_CASE("semigroup property") {
    const BathParams bath = BathParams::thermal(2, 0.7, 1.3);
    const GaussianState probe = tmsv(0.8);
    const GaussianState two_steps =
        evolve_closed_form(evolve_closed_form(probe, bath, 0.4), bath, 0.9);
    const GaussianState one_step = evolve_closed_form(probe, bath, 1.3);
    CHECK((two_steps.covariance() - one_step.covariance())
              .cwiseAbs()
              .maxCoeff() <= 1e-10);
}

TEST_CASE("fixed point is invariant") {
    const BathParams bath = BathParams::thermal(2, 0.5);
    const GaussianState fixed(Eigen::VectorXd::Zero(4), asymptotic_cm(bath));
    for (const double t : {0.1, 1.0, 7.0}) {
        const GaussianState out = evolve_closed_form(fixed, bath, t);
        CHECK((out.covariance() - fixed.covariance()).cwiseAbs().maxCoeff() <=
              1e-14);
        CHECK(out.displacement().cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("entries interpolate between input and fixed point") {
    const BathParams bath = BathParams::thermal(2, 0.5);
    const GaussianState probe = tmsv(0.6);
    const Eigen::MatrixXd inf = asymptotic_cm(bath);
    for (const double t : {0.05, 0.3, 1.0, 2.5}) {
        const Eigen::MatrixXd out =
            evolve_closed_form(probe, bath, t).covariance();
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                const double lo =
                    std::min(probe.covariance()(i, j), inf(i, j)) - 1e-12;
                const double hi =
                    std::max(probe.covariance()(i, j), inf(i, j)) + 1e-12;
                CHECK(out(i, j) >= lo);
                CHECK(out(i, j) <= hi);
            }
        }
    }
}

TEST_CASE("physicality is preserved along the flow") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const GaussianState state = random_evolved_state(rng);
        CHECK(is_physical(state.covariance()));
    }
    // Squeezed bath fixed point stays physical too.
    BathParams squeezed = BathParams::thermal(2, 1.0);
    squeezed.squeezing = {{1.2, 0.3}, {0.0, -1.0}};
    const GaussianState probe = tmsv(0.4);
    for (const double t : {0.1, 0.5, 2.0}) {
        CHECK(is_physical(
            evolve_closed_form(probe, squeezed, t).covariance()));
    }
}

TEST_CASE("unphysical input is rejected") {
    const GaussianState bad(Eigen::VectorXd::Zero(4),
                            0.4 * Eigen::MatrixXd::Identity(4, 4));
    CHECK_THROWS_AS(evolve_closed_form(bad, BathParams::thermal(2, 0.5), 1.0),
                    PhysicalityError);
}
