#include "pdeaccel/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace pdeaccel {

namespace {

[[noreturn]] void io_fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": " + what);
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void write_field_csv(const ScalarField& field, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        io_fail(path, "cannot open for writing");
    f << field.nx << ',' << field.ny << ',' << format_value(field.dx) << '\n';
    for (int i = 0; i < field.ny; ++i) {
        for (int j = 0; j < field.nx; ++j) {
            if (j)
                f << ',';
            f << format_value(field(i, j));
        }
        f << '\n';
    }
    if (!f)
        io_fail(path, "write failed");
}

ScalarField read_field_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        io_fail(path, "cannot open for reading");
    std::string line;
    if (!std::getline(f, line))
        io_fail(path, "missing header line");
    int nx = 0, ny = 0;
    double dx = 0.0;
    {
        std::istringstream hs(line);
        char c1 = 0, c2 = 0;
        if (!(hs >> nx >> c1 >> ny >> c2 >> dx) || c1 != ',' || c2 != ',')
            io_fail(path, "malformed header, expected nx,ny,dx");
    }
    ScalarField field(nx, ny, dx);
    for (int i = 0; i < ny; ++i) {
        if (!std::getline(f, line))
            io_fail(path, "truncated field data");
        std::istringstream rs(line);
        std::string cell;
        for (int j = 0; j < nx; ++j) {
            if (!std::getline(rs, cell, ','))
                io_fail(path, "short row " + std::to_string(i));
            field(i, j) = std::stod(cell);
        }
    }
    return field;
}

void write_pgm(const ScalarField& field, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        io_fail(path, "cannot open for writing");
    double lo = field.values[0], hi = field.values[0];
    for (double v : field.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi - lo;
    f << "P5\n" << field.nx << ' ' << field.ny << "\n255\n";
    std::string row(std::size_t(field.nx), '\0');
    for (int i = 0; i < field.ny; ++i) {
        for (int j = 0; j < field.nx; ++j) {
            double t = span > 0.0 ? (field(i, j) - lo) / span : 0.0;
            row[std::size_t(j)] = char((unsigned char)std::lround(t * 255.0));
        }
        f.write(row.data(), std::streamsize(row.size()));
    }
    if (!f)
        io_fail(path, "write failed");
}

void write_trace_csv(const SolveTrace& trace, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        io_fail(path, "cannot open for writing");
    f << "iter,residual,kinetic,potential,total\n";
    for (std::size_t n = 0; n < trace.residual_history.size(); ++n) {
        double k = trace.kinetic_history[n];
        double e = trace.potential_history[n];
        f << n << ',' << format_value(trace.residual_history[n]) << ','
          << format_value(k) << ',' << format_value(e) << ','
          << format_value(k + e) << '\n';
    }
    if (!f)
        io_fail(path, "write failed");
}

} // namespace pdeaccel
