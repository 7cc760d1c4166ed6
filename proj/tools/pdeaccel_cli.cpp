#include "pdeaccel/runner.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>

namespace {

using namespace pdeaccel;

ExperimentConfig load(const std::string& config_path, const std::string& out_override,
                      long seed_override) {
    ExperimentConfig cfg = parse_config_file(config_path);
    if (!out_override.empty())
        cfg.out = out_override;
    if (seed_override >= 0)
        cfg.seeds = {std::uint64_t(seed_override)};
    return cfg;
}

int report(const ExperimentResult& res) {
    std::cout << format_summary(res.rows, res.complexity_exponent);
    return res.all_converged ? 0 : 1;
}

// Paper-style comparison tables at desk scale.
int run_table(const std::string& name, const std::string& out) {
    auto base = [&](ExperimentName e) {
        ExperimentConfig c;
        c.experiment = e;
        c.mesh = {64, 128, 256};
        c.out = "";
        return c;
    };
    std::vector<ExperimentConfig> runs;
    if (name == "dirichlet") {
        ExperimentConfig c = base(ExperimentName::Dirichlet);
        c.cfl_safety = 1.0; // saturate the wave CFL; the heat flow saturates too
        c.solver = SolverName::Accel;
        runs.push_back(c);
        c.solver = SolverName::PrimalDual;
        runs.push_back(c);
        c.solver = SolverName::GradientDescent;
        c.mesh = {64}; // larger meshes take > 10^5 diffusion-limited steps
        runs.push_back(c);
    } else if (name == "minimal_surface_phi1") {
        ExperimentConfig c = base(ExperimentName::MinimalSurface);
        c.obstacle = ObstacleName::Phi1;
        c.scale = 50.0;
        c.solver = SolverName::Accel;
        runs.push_back(c);
        c.solver = SolverName::PrimalDual;
        runs.push_back(c);
    } else if (name == "minimal_surface_phi2") {
        ExperimentConfig c = base(ExperimentName::MinimalSurface);
        c.obstacle = ObstacleName::Phi2;
        c.solver = SolverName::Accel;
        runs.push_back(c);
        c.solver = SolverName::PrimalDual;
        runs.push_back(c);
    } else if (name == "double_obstacle") {
        ExperimentConfig c = base(ExperimentName::DoubleObstacle);
        for (auto model : {ModelChoice::Linear, ModelChoice::Nonlinear}) {
            c.model = model;
            c.solver = SolverName::Accel;
            runs.push_back(c);
            c.solver = SolverName::PrimalDual;
            runs.push_back(c);
        }
    } else if (name == "homogenization") {
        ExperimentConfig c = base(ExperimentName::Homogenization);
        c.mesh = {64};
        c.cells = 16;
        c.obstacle = ObstacleName::Phi1;
        c.scale = 50.0;
        for (double a : {kTwoPi, 3.0 * kTwoPi, 4.5 * kTwoPi}) {
            c.damping = a;
            runs.push_back(c);
        }
    } else {
        std::cerr << "unknown table '" << name
                  << "' (expected dirichlet, minimal_surface_phi1, minimal_surface_phi2, "
                     "double_obstacle, homogenization)\n";
        return 2;
    }

    std::vector<SummaryRow> rows;
    bool ok = true;
    double exponent = std::nan("");
    for (auto& c : runs) {
        ExperimentResult res = run_experiment(c);
        rows.insert(rows.end(), res.rows.begin(), res.rows.end());
        ok = ok && res.all_converged;
        if (!std::isnan(res.complexity_exponent))
            exponent = res.complexity_exponent; // last solver's exponent shown below
    }
    std::cout << format_summary(rows, std::nan(""));
    if (!out.empty()) {
        std::filesystem::create_directories(out);
        write_summary_csv(rows, exponent, out + "/table_" + name + ".csv");
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Damped-wave, primal-dual and gradient-descent solvers for "
                 "obstacle-constrained variational problems on uniform grids"};
    app.require_subcommand(1);

    std::string config_path, out_override, table_name;
    long seed_override = -1;

    CLI::App* solve = app.add_subcommand("solve", "run the first (mesh, seed) cell of a config");
    solve->add_option("--config", config_path, "experiment config file")->required();
    solve->add_option("--out", out_override, "output directory override");
    solve->add_option("--seed", seed_override, "seed override");

    CLI::App* bench = app.add_subcommand("bench", "run the full (mesh x seed) matrix of a config");
    bench->add_option("--config", config_path, "experiment config file")->required();
    bench->add_option("--out", out_override, "output directory override");
    bench->add_option("--seed", seed_override, "seed override");

    CLI::App* table = app.add_subcommand("table", "regenerate a comparison table at desk scale");
    table->add_option("--name", table_name, "table name")->required();
    table->add_option("--out", out_override, "output directory for the table CSV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            ExperimentConfig cfg = load(config_path, out_override, seed_override);
            cfg.mesh = {cfg.mesh.front()};
            cfg.seeds = {cfg.seeds.front()};
            return report(run_experiment(cfg));
        }
        if (bench->parsed()) {
            ExperimentConfig cfg = load(config_path, out_override, seed_override);
            return report(run_experiment(cfg));
        }
        return run_table(table_name, out_override);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
