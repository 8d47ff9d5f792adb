#include "gqt/protocol.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gqt/errors.hpp"
#include "gqt/quantifiers.hpp"

namespace gqt {

namespace {

void validate_scenario(const ScenarioParams& p) {
    if (!std::isfinite(p.r) || !std::isfinite(p.theta) || !std::isfinite(p.phi)) {
        throw std::invalid_argument("scenario: r, theta, phi must be finite");
    }
    if (!p.alpha.allFinite()) {
        throw std::invalid_argument("scenario: displacement must be finite");
    }
    if (!(p.t >= 0.0) || !std::isfinite(p.t)) {
        throw std::invalid_argument("scenario: t must be finite and >= 0");
    }
    validate_bath(p.bath);
    if (p.bath.modes() != 2) {
        throw std::invalid_argument("scenario: bath must describe two modes");
    }
}

} // namespace

const char* axis_name(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::Theta:
        return "theta";
    case SweepAxis::R:
        return "r";
    case SweepAxis::Time:
        return "t";
    }
    return "?";
}

std::vector<double> linear_grid(double min, double max, double step) {
    if (!(step > 0.0) || !(min < max)) {
        throw std::invalid_argument("linear_grid: need step > 0 and min < max");
    }
    const auto count = static_cast<long>(std::floor((max - min) / step + 1e-9));
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(count) + 1);
    for (long k = 0; k <= count; ++k) {
        grid.push_back(min + static_cast<double>(k) * step);
    }
    return grid;
}

GaussianState build_input(const ScenarioParams& params) {
    validate_scenario(params);
    GaussianState state =
        tensor(thermal_state(params.nbar_in[0]), thermal_state(params.nbar_in[1]));
    state = apply_symplectic(state, two_mode_squeezer(params.r));
    state = apply_symplectic(state, two_mode_rotation(params.theta));
    return displace(state, params.alpha);
}

PointRecord run_point(const ScenarioParams& params) {
    GaussianState state = build_input(params);
    state = apply_symplectic(state, phase_rotation(params.phi, 0, 2));
    state = evolve_closed_form(state, params.bath, params.t);

    PointRecord record;
    record.params = params;
    record.sigma_out = state.covariance();
    record.physical = is_physical(record.sigma_out);
    if (!record.physical) {
        throw PhysicalityError("run_point: evolved covariance is unphysical");
    }
    const GipResult gip_result = gip_detailed(record.sigma_out);
    record.gip_value = gip_result.value;
    record.regularized = gip_result.regularized;
    record.nu_minus = nu_tilde_minus(record.sigma_out);
    record.logneg_value = log_negativity(record.sigma_out);
    try {
        record.eof_value = eof_symmetric(record.sigma_out);
    } catch (const NotApplicableError&) {
        record.eof_value.reset();
    }
    return record;
}

SweepTable sweep(const ScenarioParams& base, SweepAxis axis,
                 const std::vector<double>& grid) {
    if (grid.empty()) {
        throw std::invalid_argument("sweep: grid must be nonempty");
    }
    for (size_t k = 1; k < grid.size(); ++k) {
        if (!(grid[k] > grid[k - 1])) {
            throw std::invalid_argument("sweep: grid must be strictly increasing");
        }
    }
    SweepTable table;
    table.axis = axis;
    table.rows.reserve(grid.size());
    for (const double value : grid) {
        ScenarioParams p = base;
        switch (axis) {
        case SweepAxis::Theta:
            p.theta = value;
            break;
        case SweepAxis::R:
            p.r = value;
            break;
        case SweepAxis::Time:
            p.t = value;
            break;
        }
        try {
            table.rows.emplace_back(value, run_point(p));
        } catch (const PhysicalityError& e) {
            throw PhysicalityError("sweep at " + std::string(axis_name(axis)) +
                                   "=" + std::to_string(value) + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("sweep at " +
                                        std::string(axis_name(axis)) + "=" +
                                        std::to_string(value) + ": " + e.what());
        }
    }
    return table;
}

} // namespace gqt
