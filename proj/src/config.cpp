#include "pdeaccel/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pdeaccel {

SolverConfig ExperimentConfig::solver_config(std::uint64_t seed) const {
    SolverConfig c;
    c.damping = damping;
    c.wave_speed = wave_speed;
    c.dt = dt;
    c.cfl_safety = cfl_safety;
    c.penalty = penalty;
    c.stopping = stopping;
    c.max_iters = max_iters;
    c.r1 = r1;
    c.r2 = r2;
    c.bisection_iters = bisection_iters;
    c.seed = seed;
    return c;
}

namespace {

[[noreturn]] void bad(int line, const std::string& key, const std::string& what) {
    throw std::invalid_argument("config line " + std::to_string(line) + ": " +
                                (key.empty() ? what : key + ": " + what));
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> items;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        items.push_back(trim(item));
    return items;
}

double parse_real(const std::string& v, int line, const std::string& key) {
    try {
        std::size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size())
            bad(line, key, "malformed number '" + v + "'");
        return x;
    } catch (const std::invalid_argument&) {
        bad(line, key, "malformed number '" + v + "'");
    } catch (const std::out_of_range&) {
        bad(line, key, "number out of range '" + v + "'");
    }
}

long parse_int(const std::string& v, int line, const std::string& key) {
    long x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size())
        bad(line, key, "malformed integer '" + v + "'");
    return x;
}

} // namespace

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool saw_experiment = false;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        if (auto hash = s.find('#'); hash != std::string::npos)
            s.erase(hash);
        s = trim(s);
        if (s.empty())
            continue;
        auto eq = s.find('=');
        if (eq == std::string::npos)
            bad(line, "", "expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty() || val.empty())
            bad(line, key, "expected 'key = value'");

        if (key == "experiment") {
            saw_experiment = true;
            if (val == "dirichlet")
                cfg.experiment = ExperimentName::Dirichlet;
            else if (val == "minimal_surface")
                cfg.experiment = ExperimentName::MinimalSurface;
            else if (val == "double_obstacle")
                cfg.experiment = ExperimentName::DoubleObstacle;
            else if (val == "homogenization")
                cfg.experiment = ExperimentName::Homogenization;
            else
                bad(line, key, "unknown experiment '" + val + "'");
        } else if (key == "solver") {
            if (val == "accel")
                cfg.solver = SolverName::Accel;
            else if (val == "primal_dual")
                cfg.solver = SolverName::PrimalDual;
            else if (val == "gradient_descent")
                cfg.solver = SolverName::GradientDescent;
            else
                bad(line, key, "unknown solver '" + val + "'");
        } else if (key == "mesh") {
            cfg.mesh.clear();
            for (const auto& m : split_list(val))
                cfg.mesh.push_back((int)parse_int(m, line, key));
            if (cfg.mesh.empty())
                bad(line, key, "needs at least one mesh size");
            for (int m : cfg.mesh)
                if (m < 8)
                    bad(line, key, "mesh sizes must be at least 8");
        } else if (key == "obstacle") {
            if (val == "none")
                cfg.obstacle = ObstacleName::None;
            else if (val == "phi1")
                cfg.obstacle = ObstacleName::Phi1;
            else if (val == "phi2")
                cfg.obstacle = ObstacleName::Phi2;
            else
                bad(line, key, "unknown obstacle '" + val + "'");
        } else if (key == "scale") {
            cfg.scale = parse_real(val, line, key);
            if (cfg.scale <= 0.0)
                bad(line, key, "must be positive");
        } else if (key == "model") {
            if (val == "nonlinear")
                cfg.model = ModelChoice::Nonlinear;
            else if (val == "linear")
                cfg.model = ModelChoice::Linear;
            else
                bad(line, key, "unknown model '" + val + "'");
        } else if (key == "damping") {
            cfg.damping = parse_real(val, line, key);
            if (cfg.damping <= 0.0)
                bad(line, key, "must be positive");
        } else if (key == "wave_speed") {
            cfg.wave_speed = parse_real(val, line, key);
            if (cfg.wave_speed <= 0.0)
                bad(line, key, "must be positive");
        } else if (key == "cfl_safety") {
            cfg.cfl_safety = parse_real(val, line, key);
            if (cfg.cfl_safety <= 0.0 || cfg.cfl_safety > 1.0)
                bad(line, key, "must lie in (0, 1]");
        } else if (key == "dt") {
            cfg.dt = parse_real(val, line, key);
            if (cfg.dt <= 0.0)
                bad(line, key, "must be positive");
        } else if (key == "penalty") {
            cfg.penalty = parse_real(val, line, key);
            if (cfg.penalty < 0.0)
                bad(line, key, "must be nonnegative");
        } else if (key == "stopping") {
            if (val == "residual")
                cfg.stopping.kind = StoppingKind::Residual;
            else if (val == "iterate_diff")
                cfg.stopping.kind = StoppingKind::IterateDiff;
            else
                bad(line, key, "unknown stopping rule '" + val + "'");
        } else if (key == "stop_constant") {
            cfg.stopping.constant = parse_real(val, line, key);
            if (cfg.stopping.constant <= 0.0)
                bad(line, key, "must be positive");
        } else if (key == "max_iters") {
            cfg.max_iters = parse_int(val, line, key);
            if (cfg.max_iters < 1)
                bad(line, key, "must be at least 1");
        } else if (key == "r1") {
            cfg.r1 = parse_real(val, line, key);
            if (cfg.r1 <= 0.0)
                bad(line, key, "must be positive");
        } else if (key == "r2") {
            cfg.r2 = parse_real(val, line, key);
            if (cfg.r2 <= 0.0)
                bad(line, key, "must be positive");
        } else if (key == "bisection_iters") {
            cfg.bisection_iters = (int)parse_int(val, line, key);
            if (cfg.bisection_iters < 1)
                bad(line, key, "must be at least 1");
        } else if (key == "seed") {
            cfg.seeds.clear();
            for (const auto& v : split_list(val))
                cfg.seeds.push_back((std::uint64_t)parse_int(v, line, key));
            if (cfg.seeds.empty())
                bad(line, key, "needs at least one seed");
        } else if (key == "cells") {
            cfg.cells = (int)parse_int(val, line, key);
            if (cfg.cells < 1)
                bad(line, key, "must be at least 1");
        } else if (key == "out") {
            cfg.out = val;
        } else {
            bad(line, key, "unknown key");
        }
    }
    if (!saw_experiment)
        throw std::invalid_argument("config: missing required key 'experiment'");
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error(path + ": cannot open config file");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

std::string to_string(ExperimentName e) {
    switch (e) {
    case ExperimentName::Dirichlet: return "dirichlet";
    case ExperimentName::MinimalSurface: return "minimal_surface";
    case ExperimentName::DoubleObstacle: return "double_obstacle";
    case ExperimentName::Homogenization: return "homogenization";
    }
    return "?";
}

std::string to_string(SolverName s) {
    switch (s) {
    case SolverName::Accel: return "accel";
    case SolverName::PrimalDual: return "primal_dual";
    case SolverName::GradientDescent: return "gradient_descent";
    }
    return "?";
}

} // namespace pdeaccel
