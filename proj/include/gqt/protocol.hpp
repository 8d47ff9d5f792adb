#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "gqt/channels.hpp"
#include "gqt/core.hpp"

namespace gqt {

/// One probe-and-evolve scenario: squeeze-rotate-displace a two-mode thermal
/// input, imprint a phase on mode A, then hold it in the thermal channel for
/// time t.
struct ScenarioParams {
    double r = 0.0;                      // initial two-mode squeezing
    double theta = 0.0;                  // beam-splitter rotation angle
    double phi = 0.0;                    // black-box phase on mode A
    std::array<double, 2> nbar_in{0.0, 0.0}; // input thermal occupations
    Eigen::Vector4d alpha = Eigen::Vector4d::Zero(); // displacement
    BathParams bath = BathParams::thermal(2, 0.5, 1.0);
    double t = 0.0;                      // interaction time
};

/// Evaluated quantifiers at one scenario point. eof_value is empty when the
/// symmetric closed form does not apply.
struct PointRecord {
    ScenarioParams params;
    Eigen::Matrix4d sigma_out = Eigen::Matrix4d::Identity();
    double gip_value = 0.0;
    std::optional<double> eof_value;
    double logneg_value = 0.0;
    double nu_minus = 1.0;
    bool physical = true;
    bool regularized = false;
};

enum class SweepAxis { Theta, R, Time };

const char* axis_name(SweepAxis axis);

struct SweepTable {
    SweepAxis axis = SweepAxis::Theta;
    std::vector<std::pair<double, PointRecord>> rows;
};

/// {min, min + step, ...} up to and including max (within round-off).
std::vector<double> linear_grid(double min, double max, double step);

/// Probe state: thermal(n1) x thermal(n2), two-mode squeezed by r, rotated
/// by theta, displaced by alpha.
GaussianState build_input(const ScenarioParams& params);

/// Full pipeline for one scenario: build the probe, apply the mode-A phase,
/// evolve through the bath, evaluate all quantifiers. Throws rather than
/// returning an unphysical output.
PointRecord run_point(const ScenarioParams& params);

/// run_point once per grid value with the axis field substituted into base;
/// rows keep grid order. A failing point aborts with the axis value named.
SweepTable sweep(const ScenarioParams& base, SweepAxis axis,
                 const std::vector<double>& grid);

} // namespace gqt
