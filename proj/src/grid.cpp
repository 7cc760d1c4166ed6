#include "pdeaccel/grid.hpp"

#include "pdeaccel/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace pdeaccel {

ScalarField::ScalarField(int nx_, int ny_, double dx_, double fill)
    : nx(nx_), ny(ny_), dx(dx_), values(std::size_t(nx_) * ny_, fill) {
    require(nx_ >= 3 && ny_ >= 3, "grid needs at least 3 nodes per axis");
    require(dx_ > 0.0, "grid spacing must be positive");
}

ScalarField ScalarField::unit_square(int n, double fill) {
    require(n >= 3, "grid needs at least 3 nodes per axis");
    return ScalarField(n, n, 1.0 / (n - 1), fill);
}

void require(bool cond, const std::string& msg) {
    if (!cond)
        throw std::invalid_argument(msg);
}

void require_same_shape(const ScalarField& a, const ScalarField& b, const char* what) {
    if (!a.same_shape(b))
        throw std::invalid_argument(std::string(what) + ": field shapes do not match");
}

VectorField forward_gradient(const ScalarField& u) {
    VectorField p(u);
    kernels::active().grad_forward(u.data(), p.px.data(), p.py.data(),
                                   u.nx, u.ny, 1.0 / u.dx);
    return p;
}

ScalarField backward_divergence(const VectorField& p) {
    require_same_shape(p.px, p.py, "backward_divergence");
    ScalarField out(p.px.nx, p.px.ny, p.px.dx);
    kernels::active().div_backward(p.px.data(), p.py.data(), out.data(),
                                   out.nx, out.ny, 1.0 / out.dx);
    return out;
}

ScalarField five_point_laplacian(const ScalarField& u) {
    ScalarField out(u.nx, u.ny, u.dx, 0.0);
    kernels::active().laplacian5(u.data(), out.data(), u.nx, u.ny,
                                 1.0 / (u.dx * u.dx));
    return out;
}

double linf_norm(const ScalarField& u) {
    return kernels::active().max_abs(u.data(), u.size());
}

double weighted_l2_norm(const ScalarField& u) {
    return u.dx * std::sqrt(kernels::active().sum_sq(u.data(), u.size()));
}

double max_magnitude(const VectorField& p) {
    double m = 0.0;
    for (std::size_t k = 0; k < p.px.size(); ++k)
        m = std::max(m, std::hypot(p.px.values[k], p.py.values[k]));
    return m;
}

void zero_boundary(ScalarField& u) {
    for (int j = 0; j < u.nx; ++j) {
        u(0, j) = 0.0;
        u(u.ny - 1, j) = 0.0;
    }
    for (int i = 0; i < u.ny; ++i) {
        u(i, 0) = 0.0;
        u(i, u.nx - 1) = 0.0;
    }
}

ScalarField bilinear_extension(const ScalarField& g) {
    ScalarField u(g.nx, g.ny, g.dx);
    const int nx = g.nx, ny = g.ny;
    for (int i = 0; i < ny; ++i) {
        double t = double(i) / (ny - 1);
        for (int j = 0; j < nx; ++j) {
            double s = double(j) / (nx - 1);
            double edges = (1.0 - s) * g(i, 0) + s * g(i, nx - 1) +
                           (1.0 - t) * g(0, j) + t * g(ny - 1, j);
            double corners = (1.0 - s) * (1.0 - t) * g(0, 0) +
                             s * (1.0 - t) * g(0, nx - 1) +
                             (1.0 - s) * t * g(ny - 1, 0) +
                             s * t * g(ny - 1, nx - 1);
            u(i, j) = edges - corners;
        }
    }
    return u;
}

} // namespace pdeaccel
