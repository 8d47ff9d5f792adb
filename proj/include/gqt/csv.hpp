#pragma once

#include <ostream>
#include <string>

#include "gqt/protocol.hpp"

namespace gqt {

inline constexpr int kDefaultPrecision = 12;

/// Scientific notation with the given number of fractional digits,
/// e.g. format_sci(0.5, 3) == "5.000e-01".
std::string format_sci(double value, int precision);

/// Header `axis,value,gip,eof,logneg,nu_minus,physical,regularized` plus one
/// row per grid point. eof prints `na` where the closed form is inapplicable.
void write_sweep_csv(std::ostream& out, const SweepTable& table,
                     int precision = kDefaultPrecision);

/// Header `gip,eof,logneg,nu_minus,physical,regularized` plus one row.
void write_point_csv(std::ostream& out, const PointRecord& record,
                     int precision = kDefaultPrecision);

} // namespace gqt
