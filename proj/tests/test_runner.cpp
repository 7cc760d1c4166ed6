#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdeaccel/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

using namespace pdeaccel;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("pdeaccel_runner_test_" + std::to_string(std::random_device{}()));
    }
    ~TempDir() { fs::remove_all(dir); }
};

} // namespace

TEST_CASE("problem assembly per experiment") {
    ExperimentConfig c;
    c.experiment = ExperimentName::Dirichlet;
    ProblemSpec dir = make_problem(c, 32, 1);
    CHECK(dir.model.kind == EnergyKind::DirichletQuadratic);
    CHECK(!dir.constrained());
    CHECK(dir.boundary(0, 0) == doctest::Approx(0.0));
    // interior values carry the boundary function sample used as the start
    CHECK(linf_norm(dir.boundary) > 1.0);

    c.solver = SolverName::PrimalDual;
    CHECK(make_problem(c, 32, 1).model.kind == EnergyKind::LinearizedMinimalSurface);

    c = ExperimentConfig{};
    c.experiment = ExperimentName::DoubleObstacle;
    ProblemSpec dob = make_problem(c, 24, 1);
    CHECK(dob.lower.has_value());
    CHECK(dob.upper.has_value());
    CHECK(dob.model.f.has_value());

    c = ExperimentConfig{};
    c.experiment = ExperimentName::Homogenization;
    c.mesh = {64, 128};
    c.cells = 16;
    ProblemSpec hom64 = make_problem(c, 64, 3);
    ProblemSpec hom128 = make_problem(c, 128, 3);
    // conductivities {1,9} enter the quadratic-in-gradient model through
    // their square roots, and the cell count scales with the mesh
    for (double v : hom64.model.A->values)
        CHECK((v == 1.0 || v == 3.0));
    CHECK(hom64.model.f->values[0] == 1.0);
    int distinct_rows_64 = 0, distinct_rows_128 = 0;
    for (int i = 1; i < 64; ++i)
        distinct_rows_64 += (*hom64.model.A)(i, 5) != (*hom64.model.A)(i - 1, 5);
    for (int i = 1; i < 128; ++i)
        distinct_rows_128 += (*hom128.model.A)(i, 5) != (*hom128.model.A)(i - 1, 5);
    CHECK(distinct_rows_64 <= 15);
    CHECK(distinct_rows_128 <= 31);
    CHECK(distinct_rows_128 > distinct_rows_64); // finer medium on the finer mesh
}

TEST_CASE("run matrix writes artifacts and a re-checkable summary") {
    TempDir tmp;
    ExperimentConfig c;
    c.experiment = ExperimentName::MinimalSurface;
    c.obstacle = ObstacleName::Phi2;
    c.mesh = {16, 24, 32};
    c.out = tmp.dir.string();
    ExperimentResult res = run_experiment(c);
    REQUIRE(res.rows.size() == 3);
    CHECK(res.all_converged);
    CHECK(!std::isnan(res.complexity_exponent));

    for (const auto& row : res.rows) {
        CHECK(row.converged);
        CHECK(row.surface >= 1.0);
        std::string base = tmp.dir.string() + "/minimal_surface_accel_m" +
                           std::to_string(row.mesh) + "_s1";
        CHECK(fs::exists(base + "_u.csv"));
        CHECK(fs::exists(base + "_trace.csv"));
        CHECK(fs::exists(base + "_u.pgm"));

        // converged rows re-check against the residual rule on the dumped field
        ScalarField u = read_field_csv(base + "_u.csv");
        ProblemSpec ps = make_problem(c, row.mesh, row.seed);
        CHECK(is_converged(ps, u, StoppingRule{}));

        // trace carries the initial state plus one row per iteration
        std::ifstream trace(base + "_trace.csv");
        long rows = 0;
        std::string ln;
        while (std::getline(trace, ln))
            ++rows;
        CHECK(rows == row.iterations + 2); // header + initial + iterations
    }
    CHECK(fs::exists(tmp.dir / "summary.csv"));

    // rows sorted by mesh
    CHECK(res.rows[0].mesh == 16);
    CHECK(res.rows[1].mesh == 24);
    CHECK(res.rows[2].mesh == 32);
}

TEST_CASE("double obstacle runs dump the lower contact indicator") {
    TempDir tmp;
    ExperimentConfig c;
    c.experiment = ExperimentName::DoubleObstacle;
    c.mesh = {24};
    c.out = tmp.dir.string();
    ExperimentResult res = run_experiment(c);
    REQUIRE(res.all_converged);
    std::string path = tmp.dir.string() + "/double_obstacle_accel_m24_s1_contact.csv";
    REQUIRE(fs::exists(path));
    ScalarField contact = read_field_csv(path);
    int on = 0;
    for (double v : contact.values) {
        CHECK((v == 0.0 || v == 1.0));
        on += v == 1.0 ? 1 : 0;
    }
    CHECK(on > 0); // the torsion membrane does touch the lower obstacle
}

TEST_CASE("non-convergence is reported per row, not thrown") {
    ExperimentConfig c;
    c.experiment = ExperimentName::MinimalSurface;
    c.obstacle = ObstacleName::Phi2;
    c.mesh = {24};
    c.max_iters = 3;
    c.out.clear();
    ExperimentResult res = run_experiment(c);
    REQUIRE(res.rows.size() == 1);
    CHECK(!res.rows[0].converged);
    CHECK(!res.all_converged);
    CHECK(res.rows[0].iterations == 3);
}
