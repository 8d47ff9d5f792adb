#include "gqt/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace gqt {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

void write_quantifiers(std::ostream& out, const PointRecord& rec,
                       int precision) {
    out << format_sci(rec.gip_value, precision) << ',';
    if (rec.eof_value) {
        out << format_sci(*rec.eof_value, precision);
    } else {
        out << "na";
    }
    out << ',' << format_sci(rec.logneg_value, precision) << ','
        << format_sci(rec.nu_minus, precision) << ',' << bool_str(rec.physical)
        << ',' << bool_str(rec.regularized) << '\n';
}

} // namespace

std::string format_sci(double value, int precision) {
    if (precision < 0 || precision > 17) {
        throw std::invalid_argument("format_sci: precision out of range");
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*e", precision, value);
    return buf;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table,
                     int precision) {
    out << "axis,value,gip,eof,logneg,nu_minus,physical,regularized\n";
    for (const auto& [value, record] : table.rows) {
        out << axis_name(table.axis) << ',' << format_sci(value, precision)
            << ',';
        write_quantifiers(out, record, precision);
    }
}

void write_point_csv(std::ostream& out, const PointRecord& record,
                     int precision) {
    out << "gip,eof,logneg,nu_minus,physical,regularized\n";
    write_quantifiers(out, record, precision);
}

} // namespace gqt
