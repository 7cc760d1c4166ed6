#pragma once

#include "pdeaccel/solvers.hpp"

#include <string>

namespace pdeaccel {

/// Plain-text field dump: first line `nx,ny,dx`, then ny rows of nx
/// comma-separated values (row-major, 17 significant digits — exact
/// round-trip).
void write_field_csv(const ScalarField& field, const std::string& path);
ScalarField read_field_csv(const std::string& path);

/// Binary 8-bit PGM (`P5`), min-max normalized; a constant field maps to
/// all-zero pixels. Row i = 0 is written first.
void write_pgm(const ScalarField& field, const std::string& path);

/// Header `iter,residual,kinetic,potential,total`, one row per recorded
/// iterate (initial state included).
void write_trace_csv(const SolveTrace& trace, const std::string& path);

} // namespace pdeaccel
