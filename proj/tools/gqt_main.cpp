// gqt: evaluate Gaussian two-mode correlation quantifiers from the command
// line. Subcommands: point (one scenario to stdout), sweep (one axis to CSV),
// fig2/fig3/fig4 (bundled sweep presets, one CSV per curve family).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gqt/csv.hpp"
#include "gqt/errors.hpp"
#include "gqt/figures.hpp"
#include "gqt/protocol.hpp"

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kDegree = kPi / 180.0;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitPhysicality = 3;
constexpr int kExitIo = 4;

struct ScenarioFlags {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    double t = 0.0;
    double gamma = 1.0;
    std::vector<double> nbar_in{0.0, 0.0};
    std::vector<double> bath_n{0.5};
    std::vector<double> bath_m_re{0.0};
    std::vector<double> bath_m_im{0.0};
    std::vector<double> alpha{0.0, 0.0, 0.0, 0.0};
    int precision = gqt::kDefaultPrecision;
    bool degrees = false;
};

struct SweepFlags {
    std::string axis;
    double min = 0.0;
    double max = 0.0;
    double step = 0.0;
};

void add_scenario_options(CLI::App& cmd, ScenarioFlags& flags) {
    cmd.add_option("--r", flags.r, "Initial two-mode squeezing r");
    cmd.add_option("--theta", flags.theta, "Rotation angle (radians)");
    cmd.add_option("--phi", flags.phi, "Mode-A phase (radians)");
    cmd.add_option("--t", flags.t, "Interaction time")
        ->check(CLI::NonNegativeNumber);
    cmd.add_option("--gamma", flags.gamma, "Overall damping rate")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--nbar-in", flags.nbar_in,
                   "Input thermal occupations (one value or two)")
        ->expected(1, 2);
    cmd.add_option("--bath-n", flags.bath_n,
                   "Bath occupation N (one value or two)")
        ->expected(1, 2);
    cmd.add_option("--bath-m-re", flags.bath_m_re,
                   "Re of bath squeezing M (one value or two)")
        ->expected(1, 2);
    cmd.add_option("--bath-m-im", flags.bath_m_im,
                   "Im of bath squeezing M (one value or two)")
        ->expected(1, 2);
    cmd.add_option("--alpha", flags.alpha,
                   "Displacement (Q1 P1 Q2 P2)")
        ->expected(4);
    cmd.add_option("--precision", flags.precision,
                   "CSV decimal digits")
        ->check(CLI::Range(6, 17));
    cmd.add_flag("--degrees", flags.degrees,
                 "Interpret angle flags (and theta grids) in degrees");
}

double per_mode(const std::vector<double>& values, size_t mode,
                const char* flag) {
    if (values.empty() || values.size() > 2) {
        throw std::invalid_argument(std::string(flag) +
                                    ": expected one or two values");
    }
    return values.size() == 1 ? values[0] : values[mode];
}

gqt::ScenarioParams to_params(const ScenarioFlags& flags) {
    gqt::ScenarioParams p;
    const double angle_unit = flags.degrees ? kDegree : 1.0;
    p.r = flags.r;
    p.theta = flags.theta * angle_unit;
    p.phi = flags.phi * angle_unit;
    p.t = flags.t;
    p.nbar_in = {per_mode(flags.nbar_in, 0, "--nbar-in"),
                 per_mode(flags.nbar_in, 1, "--nbar-in")};
    for (int k = 0; k < 4; ++k) {
        p.alpha[k] = flags.alpha[static_cast<size_t>(k)];
    }
    p.bath.gamma = flags.gamma;
    p.bath.occupation = {per_mode(flags.bath_n, 0, "--bath-n"),
                         per_mode(flags.bath_n, 1, "--bath-n")};
    p.bath.squeezing = {{per_mode(flags.bath_m_re, 0, "--bath-m-re"),
                         per_mode(flags.bath_m_im, 0, "--bath-m-im")},
                        {per_mode(flags.bath_m_re, 1, "--bath-m-re"),
                         per_mode(flags.bath_m_im, 1, "--bath-m-im")}};
    return p;
}

int run_point(const ScenarioFlags& flags) {
    const gqt::PointRecord record = gqt::run_point(to_params(flags));
    gqt::write_point_csv(std::cout, record, flags.precision);
    return kExitOk;
}

int run_sweep(const ScenarioFlags& flags, const SweepFlags& sweep_flags,
              const std::string& out_path) {
    gqt::SweepAxis axis;
    if (sweep_flags.axis == "theta") {
        axis = gqt::SweepAxis::Theta;
    } else if (sweep_flags.axis == "r") {
        axis = gqt::SweepAxis::R;
    } else if (sweep_flags.axis == "t") {
        axis = gqt::SweepAxis::Time;
    } else {
        throw std::invalid_argument("--axis: must be one of theta, r, t");
    }
    double lo = sweep_flags.min;
    double hi = sweep_flags.max;
    double step = sweep_flags.step;
    if (flags.degrees && axis == gqt::SweepAxis::Theta) {
        lo *= kDegree;
        hi *= kDegree;
        step *= kDegree;
    }
    if (!(step > 0.0)) {
        throw std::invalid_argument("--step: must be > 0");
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("--min: must be below --max");
    }
    const gqt::SweepTable table =
        gqt::sweep(to_params(flags), axis, gqt::linear_grid(lo, hi, step));
    if (out_path.empty()) {
        gqt::write_sweep_csv(std::cout, table, flags.precision);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw gqt::IoError("cannot open " + out_path + " for writing");
        }
        gqt::write_sweep_csv(out, table, flags.precision);
        out.flush();
        if (!out) {
            throw gqt::IoError("write failed for " + out_path);
        }
    }
    return kExitOk;
}

int run_fig(int which, const std::string& out_dir, int precision) {
    gqt::FigureConfig config;
    config.out_dir = out_dir;
    config.precision = precision;
    std::vector<std::filesystem::path> paths;
    switch (which) {
    case 2:
        paths = gqt::write_fig2(config);
        break;
    case 3:
        paths = gqt::write_fig3(config);
        break;
    default:
        paths = gqt::write_fig4(config);
        break;
    }
    for (const auto& path : paths) {
        std::cout << path.string() << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-mode Gaussian correlation toolkit"};
    app.require_subcommand(1);

    ScenarioFlags flags;
    SweepFlags sweep_flags;
    std::string out_path;
    std::string fig_dir = ".";

    CLI::App* point_cmd =
        app.add_subcommand("point", "Evaluate one scenario, CSV to stdout");
    add_scenario_options(*point_cmd, flags);

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Sweep one axis, CSV to --out or stdout");
    add_scenario_options(*sweep_cmd, flags);
    sweep_cmd->add_option("--axis", sweep_flags.axis, "theta | r | t")
        ->required();
    sweep_cmd->add_option("--min", sweep_flags.min, "Axis start")->required();
    sweep_cmd->add_option("--max", sweep_flags.max, "Axis end")->required();
    sweep_cmd->add_option("--step", sweep_flags.step, "Axis step")->required();
    sweep_cmd->add_option("--out", out_path, "Output CSV path");

    CLI::App* fig_cmds[3];
    const char* fig_names[3] = {"fig2", "fig3", "fig4"};
    const char* fig_help[3] = {
        "Angle sweeps: gip panel r=0.3, eof panel r=1.2, four times each",
        "Squeezing sweeps at theta=pi/2, one CSV per time",
        "Time sweeps at theta=pi/2, one CSV per squeezing"};
    for (int k = 0; k < 3; ++k) {
        fig_cmds[k] = app.add_subcommand(fig_names[k], fig_help[k]);
        fig_cmds[k]->add_option("--out", fig_dir, "Output directory");
        fig_cmds[k]->add_option("--precision", flags.precision,
                                "CSV decimal digits")
            ->check(CLI::Range(6, 17));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (point_cmd->parsed()) {
            return run_point(flags);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep(flags, sweep_flags, out_path);
        }
        for (int k = 0; k < 3; ++k) {
            if (fig_cmds[k]->parsed()) {
                return run_fig(k + 2, fig_dir, flags.precision);
            }
        }
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const gqt::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const gqt::PhysicalityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPhysicality;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPhysicality;
    }
}
