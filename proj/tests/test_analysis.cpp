#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdeaccel/analysis.hpp"
#include "pdeaccel/models.hpp"

#include <cmath>
#include <random>

using namespace pdeaccel;

TEST_CASE("rate bound values") {
    // theta = 1, mu = 0, a = 2, lambda = 1: c = 2, beta = sqrt(2) - 1
    RateBoundInputs in{2.0, 1.0, 0.0, 1.0};
    CHECK(rate_bound(in) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));

    // theta = 1, mu = 0: c = a, positive for any a, lambda
    for (double a : {0.5, 2.0, 7.0})
        for (double l : {0.25, 1.0, 4.0}) {
            RateBoundInputs p{a, 1.0, 0.0, l};
            double beta = rate_bound(p);
            double expect = (a * std::sqrt(a * a + 4.0 * l) - a * a) /
                            (2.0 * std::sqrt(l) + a);
            CHECK(beta == doctest::Approx(expect).epsilon(1e-12));
            CHECK(beta > 0.0);
        }

    // increasing in the Poincare constant
    double b1 = rate_bound({2.0, 1.0, 0.0, 0.5});
    double b2 = rate_bound({2.0, 1.0, 0.0, 1.0});
    double b3 = rate_bound({2.0, 1.0, 0.0, 2.0});
    CHECK(b1 < b2);
    CHECK(b2 < b3);
}

TEST_CASE("rate bound stays within (0, a)") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ad(0.05, 10.0), td(0.05, 1.0),
        md(0.0, 5.0), ld(0.05, 10.0);
    for (int rep = 0; rep < 500; ++rep) {
        RateBoundInputs in{ad(rng), td(rng), md(rng), ld(rng)};
        double beta = rate_bound(in);
        CHECK(beta > 0.0);
        CHECK(beta < in.a);
    }
    CHECK_THROWS_AS(rate_bound({-1.0, 1.0, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(rate_bound({1.0, 1.5, 0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("decay rate fit") {
    std::vector<double> t, e;
    for (int n = 0; n < 100; ++n) {
        t.push_back(0.05 * n);
        e.push_back(std::exp(-3.0 * 0.05 * n));
    }
    CHECK(decay_rate_fit(t, e, 0, t.size()) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(decay_rate_fit_mid(t, e) == doctest::Approx(3.0).epsilon(1e-9));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> noise(-1e-3, 1e-3);
    std::vector<double> e2;
    for (int n = 0; n < 100; ++n)
        e2.push_back(5.0 * std::exp(-2.0 * t[n]) * (1.0 + noise(rng)));
    CHECK(decay_rate_fit(t, e2, 0, t.size()) == doctest::Approx(2.0).epsilon(0.005));

    std::vector<double> flat(t.size(), 0.7);
    CHECK(decay_rate_fit(t, flat, 0, t.size()) == doctest::Approx(0.0).epsilon(1e-12));

    std::vector<double> bad = flat;
    bad[10] = -1.0;
    CHECK_THROWS_AS(decay_rate_fit(t, bad, 0, t.size()), std::invalid_argument);
    CHECK_THROWS_AS(decay_rate_fit(t, e, 0, 3), std::invalid_argument);
}

TEST_CASE("complexity fit") {
    std::vector<long> N = {4096, 16384, 65536};
    std::vector<double> q;
    for (long n : N)
        q.push_back(std::pow(double(n), 1.5));
    CHECK(complexity_fit(N, q) == doctest::Approx(1.5).epsilon(1e-9));

    std::vector<double> flat(N.size(), 42.0);
    CHECK(complexity_fit(N, flat) == doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(complexity_fit({64, 128}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(complexity_fit({64, 128, 256}, {1.0, -2.0, 3.0}),
                    std::invalid_argument);
}

TEST_CASE("monotonicity audit") {
    SolveTrace t;
    t.kinetic_history = {0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    t.potential_history = {10.0, 9.0, 8.0, 7.0, 6.5, 6.0};
    MonotonicityReport rep = monotonicity_audit(t);
    CHECK(rep.max_violation == 0.0);
    CHECK(!rep.first_violation_iter.has_value());

    t.potential_history = {10.0, 9.0, 8.0, 7.0, 7.5, 6.0};
    rep = monotonicity_audit(t);
    CHECK(rep.max_violation == doctest::Approx(0.5).epsilon(1e-14));
    REQUIRE(rep.first_violation_iter.has_value());
    CHECK(*rep.first_violation_iter == 3);
}

TEST_CASE("homogenization gap") {
    ScalarField a = ScalarField::unit_square(16, 1.0);
    ScalarField b = a;
    CHECK(homogenization_gap(a, b) == 0.0);
    b(3, 4) += 0.25;
    CHECK(homogenization_gap(a, b) == doctest::Approx(0.25).epsilon(1e-14));
    ScalarField c = ScalarField::unit_square(17);
    CHECK_THROWS_AS(homogenization_gap(a, c), std::invalid_argument);
}

TEST_CASE("constant-coefficient model solved two ways gives one solution") {
    // heterogeneous A = 3 is the quadratic model with weight b = 9
    const int n = 33;
    ProblemSpec het;
    het.boundary = ScalarField::unit_square(n);
    het.model = EnergyModel::heterogeneous(ScalarField(n, n, het.boundary.dx, 3.0));
    het.model.f = ScalarField(n, n, het.boundary.dx, 1.0);

    ProblemSpec dir;
    dir.boundary = ScalarField::unit_square(n);
    dir.model = EnergyModel::dirichlet(9.0);
    dir.model.f = ScalarField(n, n, dir.boundary.dx, 1.0);

    SolverConfig ch;
    ch.damping = optimal_damping(0.25 * kTwoPi * kTwoPi, 0.0, 9.0);
    ch.stopping.constant = 1e-6; // deep solves so both land on the same point
    SolverConfig cd = ch;
    cd.wave_speed = 9.0;

    SolveTrace th = pde_accel_solve(het, ch);
    SolveTrace td = pde_accel_solve(dir, cd);
    REQUIRE(th.converged);
    REQUIRE(td.converged);
    CHECK(homogenization_gap(th.final, td.final) <= 1e-8);
}

TEST_CASE("checkerboard solutions drift toward the effective solution") {
    // conductivities {1,9} (coefficient field sqrt of the draw), against the
    // effective conductivity 3 on the same mesh, averaged over seeds
    const int n = 128;
    const double dx = 1.0 / (n - 1);
    ProblemSpec hom;
    hom.boundary = ScalarField::unit_square(n);
    hom.model = EnergyModel::heterogeneous(ScalarField(n, n, dx, std::sqrt(3.0)));
    hom.model.f = ScalarField(n, n, dx, 1.0);
    hom.lower = obstacle_phi1(50.0, n, n, dx);
    SolverConfig cfg;
    cfg.damping = 3.0 * kTwoPi;
    SolveTrace ht = pde_accel_solve(hom, cfg);
    REQUIRE(ht.converged);

    std::vector<double> avg;
    for (int cells : {8, 16, 32}) {
        double sum = 0.0;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            ProblemSpec ps;
            ps.boundary = ScalarField::unit_square(n);
            ScalarField cond = checkerboard(cells, seed, n, n, dx);
            for (double& v : cond.values)
                v = std::sqrt(v);
            ps.model = EnergyModel::heterogeneous(std::move(cond));
            ps.model.f = ScalarField(n, n, dx, 1.0);
            ps.lower = obstacle_phi1(50.0, n, n, dx);
            SolveTrace t = pde_accel_solve(ps, cfg);
            REQUIRE(t.converged);
            sum += homogenization_gap(t.final, ht.final);
        }
        avg.push_back(sum / 5.0);
    }
    CHECK(avg[1] <= avg[0]);
    CHECK(avg[2] <= avg[1]);
}
