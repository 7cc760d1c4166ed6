#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdeaccel {

/// Node-centered uniform grid on [0,1]^2 (or any square box with spacing dx).
/// Row-major storage: index i is the slow (y) axis, j the fast (x) axis,
/// node (i,j) sits at (j*dx, i*dx). Boundary nodes are i in {0,ny-1} or
/// j in {0,nx-1}.
struct ScalarField {
    int nx = 0;
    int ny = 0;
    double dx = 0.0;
    std::vector<double> values;

    ScalarField() = default;
    ScalarField(int nx_, int ny_, double dx_, double fill = 0.0);

    /// n x n grid covering the unit square, dx = 1/(n-1).
    static ScalarField unit_square(int n, double fill = 0.0);

    double& operator()(int i, int j) { return values[std::size_t(i) * nx + j]; }
    double operator()(int i, int j) const { return values[std::size_t(i) * nx + j]; }

    double x(int j) const { return j * dx; }
    double y(int i) const { return i * dx; }

    std::size_t size() const { return values.size(); }
    bool same_shape(const ScalarField& o) const {
        return nx == o.nx && ny == o.ny && dx == o.dx;
    }
    bool is_boundary(int i, int j) const {
        return i == 0 || j == 0 || i == ny - 1 || j == nx - 1;
    }

    double* data() { return values.data(); }
    const double* data() const { return values.data(); }
};

/// Pair of same-shape scalar fields holding the components of a grid
/// vector quantity (forward-difference gradients, the dual variable p).
struct VectorField {
    ScalarField px;
    ScalarField py;

    VectorField() = default;
    explicit VectorField(const ScalarField& like)
        : px(like.nx, like.ny, like.dx), py(like.nx, like.ny, like.dx) {}

    bool same_shape(const ScalarField& o) const {
        return px.same_shape(o) && py.same_shape(o);
    }
};

void require(bool cond, const std::string& msg);
void require_same_shape(const ScalarField& a, const ScalarField& b, const char* what);

/// Forward-difference gradient, zero-closed on the last row/column
/// (px = 0 at j = nx-1, py = 0 at i = ny-1).
VectorField forward_gradient(const ScalarField& u);

/// Backward-difference divergence with out-of-range neighbors treated as
/// zero; the exact negative adjoint of forward_gradient on fields that
/// vanish on the boundary.
ScalarField backward_divergence(const VectorField& p);

/// 5-point Laplacian on interior nodes, zero on the boundary. Equals
/// -backward_divergence(forward_gradient(u)) on the interior.
ScalarField five_point_laplacian(const ScalarField& u);

double linf_norm(const ScalarField& u);

/// dx * sqrt(sum u^2)
double weighted_l2_norm(const ScalarField& u);

double max_magnitude(const VectorField& p);

void zero_boundary(ScalarField& u);

/// Transfinite bilinear blend of the four boundary edges of g into the
/// interior; agrees with g on the boundary.
ScalarField bilinear_extension(const ScalarField& g);

} // namespace pdeaccel
