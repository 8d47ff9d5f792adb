#pragma once

#include <filesystem>
#include <vector>

#include "gqt/csv.hpp"

namespace gqt {

/// Bundled sweep presets. Each writes one CSV per curve family into out_dir
/// and returns the paths written. All presets use the default bath
/// (N = 0.5 per mode, gamma = 1) and a pure squeezed input:
///   fig2: theta in [0, pi] step pi/200, t in {0.1, 0.5, 1, 2};
///         gip panel at r = 0.3, eof panel at r = 1.2.
///   fig3: r in [0, 2] step 0.01 at theta = pi/2, one file per t.
///   fig4: t in [0, 3] step 0.01 at theta = pi/2, one file per
///         r in {0.3, 0.8, 1.2}.
struct FigureConfig {
    std::filesystem::path out_dir = ".";
    int precision = kDefaultPrecision;
};

std::vector<std::filesystem::path> write_fig2(const FigureConfig& config);
std::vector<std::filesystem::path> write_fig3(const FigureConfig& config);
std::vector<std::filesystem::path> write_fig4(const FigureConfig& config);

} // namespace gqt
