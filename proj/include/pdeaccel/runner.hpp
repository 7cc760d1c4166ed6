#pragma once

#include "pdeaccel/config.hpp"
#include "pdeaccel/io.hpp"

#include <string>
#include <vector>

namespace pdeaccel {

struct SummaryRow {
    std::string experiment;
    std::string solver;
    int mesh = 0;
    std::uint64_t seed = 0;
    double damping = 0.0;
    long iterations = 0;
    bool converged = false;
    double wall_seconds = 0.0;
    double final_energy = 0.0;
    double surface = 0.0; // NaN when not applicable
    double final_residual = 0.0;
};

struct RunResult {
    SummaryRow row;
    SolveTrace trace;
    ProblemSpec problem;
};

struct ExperimentResult {
    std::vector<SummaryRow> rows;
    double complexity_exponent = 0.0; // NaN unless >= 3 distinct meshes
    bool all_converged = false;
};

/// Assemble the variational problem for one (mesh, seed) cell of the run
/// matrix. The checkerboard cell count scales with the mesh so the cell
/// size in nodes stays fixed across the mesh list.
ProblemSpec make_problem(const ExperimentConfig& cfg, int mesh, std::uint64_t seed);

RunResult run_single(const ExperimentConfig& cfg, int mesh, std::uint64_t seed);

/// Run the (mesh x seed) matrix, concurrently across runs, and write
/// field/trace/preview artifacts plus summary.csv under cfg.out (skipped
/// when cfg.out is empty). Rows come back sorted by (mesh, seed).
ExperimentResult run_experiment(const ExperimentConfig& cfg);

void write_summary_csv(const std::vector<SummaryRow>& rows, double exponent,
                       const std::string& path);
std::string format_summary(const std::vector<SummaryRow>& rows, double exponent);

} // namespace pdeaccel
