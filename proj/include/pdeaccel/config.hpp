#pragma once

#include "pdeaccel/solvers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pdeaccel {

enum class ExperimentName { Dirichlet, MinimalSurface, DoubleObstacle, Homogenization };
enum class SolverName { Accel, PrimalDual, GradientDescent };
enum class ObstacleName { None, Phi1, Phi2 };
enum class ModelChoice { Nonlinear, Linear };

/// One experiment run matrix, parsed from a line-oriented `key = value`
/// document (`#` comments, comma-separated lists).
struct ExperimentConfig {
    ExperimentName experiment = ExperimentName::Dirichlet;
    SolverName solver = SolverName::Accel;
    std::vector<int> mesh = {64};
    ObstacleName obstacle = ObstacleName::Phi1; // minimal_surface / homogenization
    double scale = 50.0;                        // divisor applied to phi1
    ModelChoice model = ModelChoice::Nonlinear;
    double damping = kTwoPi;
    double wave_speed = 1.0;
    double cfl_safety = 0.8;
    double dt = 0.0;
    double penalty = 0.0;
    StoppingRule stopping;
    long max_iters = 500000;
    double r1 = 0.0, r2 = 0.0;
    int bisection_iters = 0;
    std::vector<std::uint64_t> seeds = {1};
    int cells = 16; // checkerboard cells per side at the first mesh; scales with mesh
    std::string out = "out";

    SolverConfig solver_config(std::uint64_t seed) const;
};

/// Parse and validate; throws std::invalid_argument naming the offending
/// key and line on any error.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

std::string to_string(ExperimentName e);
std::string to_string(SolverName s);

} // namespace pdeaccel
