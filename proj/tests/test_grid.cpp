#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdeaccel/grid.hpp"

#include <cmath>
#include <random>

using namespace pdeaccel;

namespace {

ScalarField random_field(int nx, int ny, std::mt19937_64& rng, bool zero_boundary_nodes = false) {
    ScalarField u(nx, ny, 1.0 / (nx - 1));
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (auto& v : u.values)
        v = dist(rng);
    if (zero_boundary_nodes)
        zero_boundary(u);
    return u;
}

} // namespace

TEST_CASE("forward gradient of a constant field vanishes") {
    ScalarField u(9, 7, 0.125, 7.0);
    VectorField p = forward_gradient(u);
    for (std::size_t k = 0; k < u.size(); ++k) {
        CHECK(p.px.values[k] == 0.0);
        CHECK(p.py.values[k] == 0.0);
    }
}

TEST_CASE("forward gradient is exact for affine data") {
    ScalarField u = ScalarField::unit_square(8);
    for (int i = 0; i < u.ny; ++i)
        for (int j = 0; j < u.nx; ++j)
            u(i, j) = u.x(j);
    VectorField p = forward_gradient(u);
    for (int i = 0; i < u.ny; ++i) {
        for (int j = 0; j < u.nx; ++j) {
            if (j < u.nx - 1)
                CHECK(p.px(i, j) == doctest::Approx(1.0).epsilon(1e-13));
            else
                CHECK(p.px(i, j) == 0.0);
            CHECK(p.py(i, j) == doctest::Approx(0.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("forward gradient matches an index-by-index oracle") {
    std::mt19937_64 rng(42);
    ScalarField u = random_field(8, 8, rng);
    VectorField p = forward_gradient(u);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            double ex = j < 7 ? (u(i, j + 1) - u(i, j)) / u.dx : 0.0;
            double ey = i < 7 ? (u(i + 1, j) - u(i, j)) / u.dx : 0.0;
            CHECK(p.px(i, j) == doctest::Approx(ex).epsilon(1e-14));
            CHECK(p.py(i, j) == doctest::Approx(ey).epsilon(1e-14));
        }
    }
}

TEST_CASE("backward divergence of zero is zero and shapes are preserved") {
    ScalarField z(6, 5, 0.2);
    VectorField p(z);
    ScalarField d = backward_divergence(p);
    CHECK(d.same_shape(z));
    for (double v : d.values)
        CHECK(v == 0.0);
}

TEST_CASE("divergence of a constant-flux field vanishes on the interior") {
    ScalarField u = ScalarField::unit_square(9);
    for (int i = 0; i < u.ny; ++i)
        for (int j = 0; j < u.nx; ++j)
            u(i, j) = u.x(j);
    ScalarField d = backward_divergence(forward_gradient(u));
    for (int i = 1; i < u.ny - 1; ++i)
        for (int j = 1; j < u.nx - 1; ++j)
            CHECK(std::fabs(d(i, j)) <= 1e-12 / (u.dx * u.dx));
}

TEST_CASE("gradient and divergence are exact negative adjoints") {
    std::mt19937_64 rng(7);
    for (int n = 5; n <= 16; ++n) {
        ScalarField u = random_field(n, n, rng, true);
        ScalarField pX = random_field(n, n, rng);
        ScalarField pY = random_field(n, n, rng);
        VectorField p;
        p.px = pX;
        p.py = pY;
        VectorField gu = forward_gradient(u);
        ScalarField dp = backward_divergence(p);
        double lhs = 0.0, rhs = 0.0, scale = 0.0;
        for (std::size_t k = 0; k < u.size(); ++k) {
            lhs += gu.px.values[k] * pX.values[k] + gu.py.values[k] * pY.values[k];
            rhs += u.values[k] * dp.values[k];
            scale += std::fabs(gu.px.values[k] * pX.values[k]) +
                     std::fabs(u.values[k] * dp.values[k]);
        }
        CHECK(std::fabs(lhs + rhs) <= 1e-12 * std::max(1.0, scale));
    }
}

TEST_CASE("five point laplacian: constants, quadratics, composition") {
    ScalarField c(8, 8, 0.125, 3.25);
    ScalarField lc = five_point_laplacian(c);
    for (double v : lc.values)
        CHECK(v == 0.0);

    ScalarField q = ScalarField::unit_square(8);
    for (int i = 0; i < q.ny; ++i)
        for (int j = 0; j < q.nx; ++j)
            q(i, j) = q.x(j) * q.x(j);
    ScalarField lq = five_point_laplacian(q);
    for (int i = 1; i < q.ny - 1; ++i)
        for (int j = 1; j < q.nx - 1; ++j)
            CHECK(lq(i, j) == doctest::Approx(2.0).epsilon(1e-12));

    // composition identity: the stencil equals div(grad) on the interior
    // (the sign is pinned by the x1^2 -> +2 case above)
    std::mt19937_64 rng(3);
    ScalarField u = random_field(8, 8, rng);
    ScalarField lap = five_point_laplacian(u);
    ScalarField div = backward_divergence(forward_gradient(u));
    for (int i = 1; i < 7; ++i)
        for (int j = 1; j < 7; ++j)
            CHECK(lap(i, j) == doctest::Approx(div(i, j)).epsilon(1e-12));
}

TEST_CASE("differential kernels are linear") {
    std::mt19937_64 rng(11);
    ScalarField u = random_field(10, 9, rng);
    ScalarField v = random_field(10, 9, rng);
    const double al = 1.7, be = -0.3;
    ScalarField w(10, 9, u.dx);
    for (std::size_t k = 0; k < w.size(); ++k)
        w.values[k] = al * u.values[k] + be * v.values[k];

    VectorField gw = forward_gradient(w);
    VectorField gu = forward_gradient(u);
    VectorField gv = forward_gradient(v);
    for (std::size_t k = 0; k < w.size(); ++k) {
        CHECK(gw.px.values[k] ==
              doctest::Approx(al * gu.px.values[k] + be * gv.px.values[k]).epsilon(1e-12));
        CHECK(gw.py.values[k] ==
              doctest::Approx(al * gu.py.values[k] + be * gv.py.values[k]).epsilon(1e-12));
    }

    ScalarField lw = five_point_laplacian(w);
    ScalarField lu = five_point_laplacian(u);
    ScalarField lv = five_point_laplacian(v);
    for (std::size_t k = 0; k < w.size(); ++k)
        CHECK(lw.values[k] ==
              doctest::Approx(al * lu.values[k] + be * lv.values[k]).epsilon(1e-12));
}

TEST_CASE("norms") {
    ScalarField z(5, 5, 0.25);
    CHECK(linf_norm(z) == 0.0);
    CHECK(weighted_l2_norm(z) == 0.0);

    z(2, 3) = -3.0;
    CHECK(linf_norm(z) == 3.0);
    CHECK(weighted_l2_norm(z) == doctest::Approx(0.25 * 3.0).epsilon(1e-14));

    std::mt19937_64 rng(5);
    ScalarField u = random_field(9, 6, rng);
    double m = 0.0, s = 0.0;
    for (double v : u.values) {
        m = std::max(m, std::fabs(v));
        s += v * v;
    }
    CHECK(linf_norm(u) == doctest::Approx(m).epsilon(1e-12));
    CHECK(weighted_l2_norm(u) == doctest::Approx(u.dx * std::sqrt(s)).epsilon(1e-12));
}

TEST_CASE("bilinear extension matches g on the boundary and blends linearly") {
    ScalarField g = ScalarField::unit_square(7);
    for (int i = 0; i < g.ny; ++i)
        for (int j = 0; j < g.nx; ++j)
            g(i, j) = 2.0 * g.x(j) - 3.0 * g.y(i) + 1.0; // affine: blend is exact
    ScalarField u = bilinear_extension(g);
    for (int i = 0; i < g.ny; ++i)
        for (int j = 0; j < g.nx; ++j)
            CHECK(u(i, j) == doctest::Approx(g(i, j)).epsilon(1e-13));
}

TEST_CASE("field constructors validate their inputs") {
    CHECK_THROWS_AS(ScalarField(2, 5, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(ScalarField(5, 5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ScalarField(5, 5, -1.0), std::invalid_argument);
}
