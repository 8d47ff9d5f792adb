#include "gqt/figures.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include "gqt/errors.hpp"

namespace gqt {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const std::vector<double> kFigTimes{0.1, 0.5, 1.0, 2.0};
const std::vector<double> kFig4Squeezings{0.3, 0.8, 1.2};

std::string tag(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", value);
    return buf;
}

std::filesystem::path write_table(const FigureConfig& config,
                                  const std::string& name,
                                  const SweepTable& table) {
    const std::filesystem::path path = config.out_dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    write_sweep_csv(out, table, config.precision);
    out.flush();
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
    return path;
}

} // namespace

std::vector<std::filesystem::path> write_fig2(const FigureConfig& config) {
    const std::vector<double> grid = linear_grid(0.0, kPi, kPi / 200.0);
    std::vector<std::filesystem::path> paths;
    const std::pair<const char*, double> panels[] = {{"gip", 0.3},
                                                     {"eof", 1.2}};
    for (const auto& [panel, r] : panels) {
        for (const double t : kFigTimes) {
            ScenarioParams base;
            base.r = r;
            base.t = t;
            paths.push_back(write_table(
                config, std::string("fig2_") + panel + "_t" + tag(t) + ".csv",
                sweep(base, SweepAxis::Theta, grid)));
        }
    }
    return paths;
}

std::vector<std::filesystem::path> write_fig3(const FigureConfig& config) {
    const std::vector<double> grid = linear_grid(0.0, 2.0, 0.01);
    std::vector<std::filesystem::path> paths;
    for (const double t : kFigTimes) {
        ScenarioParams base;
        base.theta = kPi / 2.0;
        base.t = t;
        paths.push_back(write_table(config,
                                    "fig3_curves_t" + tag(t) + ".csv",
                                    sweep(base, SweepAxis::R, grid)));
    }
    return paths;
}

std::vector<std::filesystem::path> write_fig4(const FigureConfig& config) {
    const std::vector<double> grid = linear_grid(0.0, 3.0, 0.01);
    std::vector<std::filesystem::path> paths;
    for (const double r : kFig4Squeezings) {
        ScenarioParams base;
        base.theta = kPi / 2.0;
        base.r = r;
        paths.push_back(write_table(config,
                                    "fig4_curves_r" + tag(r) + ".csv",
                                    sweep(base, SweepAxis::Time, grid)));
    }
    return paths;
}

} // namespace gqt
