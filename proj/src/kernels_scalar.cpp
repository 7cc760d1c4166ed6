#include "pdeaccel/kernels.hpp"

#include <algorithm>
#include <cmath>

// Scalar reference kernels. These define the arithmetic contract the SIMD
// variants must reproduce bitwise (element-wise ops) or to rounding
// (reductions). Compiled with -ffp-contract=off.

namespace pdeaccel::kernels {
namespace {

inline std::size_t at(int i, int j, int nx) { return std::size_t(i) * nx + j; }

void grad_forward_s(const double* u, double* px, double* py,
                    int nx, int ny, double inv_dx) {
    for (int i = 0; i < ny; ++i) {
        const double* row = u + at(i, 0, nx);
        double* prow = px + at(i, 0, nx);
        for (int j = 0; j < nx - 1; ++j)
            prow[j] = (row[j + 1] - row[j]) * inv_dx;
        prow[nx - 1] = 0.0;
    }
    for (int i = 0; i < ny - 1; ++i) {
        const double* row = u + at(i, 0, nx);
        const double* rowp = u + at(i + 1, 0, nx);
        double* prow = py + at(i, 0, nx);
        for (int j = 0; j < nx; ++j)
            prow[j] = (rowp[j] - row[j]) * inv_dx;
    }
    double* last = py + at(ny - 1, 0, nx);
    for (int j = 0; j < nx; ++j)
        last[j] = 0.0;
}

void div_backward_s(const double* px, const double* py, double* out,
                    int nx, int ny, double inv_dx) {
    for (int i = 0; i < ny; ++i) {
        const double* xrow = px + at(i, 0, nx);
        const double* yrow = py + at(i, 0, nx);
        const double* yrowm = i > 0 ? py + at(i - 1, 0, nx) : nullptr;
        double* orow = out + at(i, 0, nx);
        for (int j = 0; j < nx; ++j) {
            double dxp = xrow[j] - (j > 0 ? xrow[j - 1] : 0.0);
            double dyp = yrow[j] - (yrowm ? yrowm[j] : 0.0);
            orow[j] = dxp * inv_dx + dyp * inv_dx;
        }
    }
}

void laplacian5_s(const double* u, double* out, int nx, int ny, double inv_dx2) {
    for (int i = 1; i < ny - 1; ++i) {
        const double* rm = u + at(i - 1, 0, nx);
        const double* rc = u + at(i, 0, nx);
        const double* rp = u + at(i + 1, 0, nx);
        double* orow = out + at(i, 0, nx);
        for (int j = 1; j < nx - 1; ++j)
            orow[j] = (rc[j + 1] + rc[j - 1] + rp[j] + rm[j] - 4.0 * rc[j]) * inv_dx2;
    }
}

void ms_flux_s(const double* px, const double* py, double* qx, double* qy,
               std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        double a = px[k];
        double b = py[k];
        double s = 1.0 / std::sqrt(1.0 + (a * a + b * b));
        qx[k] = a * s;
        qy[k] = b * s;
    }
}

void scale_pair_field_s(const double* w, const double* px, const double* py,
                        double* qx, double* qy, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        qx[k] = w[k] * px[k];
        qy[k] = w[k] * py[k];
    }
}

void accel_update_s(const double* u, const double* um1, const double* ge,
                    double* v, std::size_t n, double c2, double dt2, double c1) {
    for (std::size_t k = 0; k < n; ++k)
        v[k] = (c2 * u[k] - um1[k] - dt2 * ge[k]) / c1;
}

void accel_update_penalty_s(const double* u, const double* um1, const double* ge,
                            const double* phi, double* v, std::size_t n,
                            double c2, double dt2, double c1,
                            double mu_dt2, double c1p) {
    for (std::size_t k = 0; k < n; ++k) {
        double num = c2 * u[k] - um1[k] - dt2 * ge[k];
        double vv = num / c1;
        double ww = (num + mu_dt2 * phi[k]) / c1p;
        v[k] = vv >= phi[k] ? vv : ww;
    }
}

void axpy_s(double* u, const double* x, double c, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k)
        u[k] = u[k] + c * x[k];
}

// Ternary forms (not std::max) so ties and signed zeros resolve the same
// way as the AVX2 min/max instructions: the second operand wins a tie,
// i.e. contact nodes receive the obstacle's exact bit pattern.
void clamp_lower_s(double* u, const double* lo, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k)
        u[k] = u[k] > lo[k] ? u[k] : lo[k];
}

void clamp_box_s(double* u, const double* lo, const double* hi, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        double t = u[k] < hi[k] ? u[k] : hi[k];
        u[k] = t > lo[k] ? t : lo[k];
    }
}

void overrelax_s(const double* unew, const double* uold, double* ubar,
                 std::size_t n) {
    for (std::size_t k = 0; k < n; ++k)
        ubar[k] = 2.0 * unew[k] - uold[k];
}

void dual_bisect_s(double* px, double* py, const double* gx, const double* gy,
                   std::size_t n, double r1, int k) {
    const double r1sq = r1 * r1;
    for (std::size_t m = 0; m < n; ++m)
        dual_bisect_point(px[m], py[m], gx[m], gy[m], r1, r1sq, k);
}

void dual_linear_s(double* px, double* py, const double* gx, const double* gy,
                   std::size_t n, double r1) {
    const double inv = 1.0 / (1.0 + r1);
    for (std::size_t k = 0; k < n; ++k) {
        px[k] = (px[k] + r1 * gx[k]) * inv;
        py[k] = (py[k] + r1 * gy[k]) * inv;
    }
}

void residual_none_s(const double* ge, double* r, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k)
        r[k] = -ge[k];
}

void residual_lower_s(const double* ge, const double* u, const double* phi,
                      double* r, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        double a = -ge[k];
        double b = phi[k] - u[k];
        r[k] = a > b ? a : b;
    }
}

// Active-set residual: plain -gradE on free nodes, one-sided tests at
// exact contact (projection writes obstacle values bitwise, so == is safe).
void residual_box_s(const double* ge, const double* u, const double* phi,
                    const double* psi, double* r, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        double a = -ge[k];
        double v;
        if (u[k] == phi[k])
            v = a > 0.0 ? a : 0.0;
        else if (u[k] == psi[k])
            v = a < 0.0 ? a : 0.0;
        else
            v = a;
        r[k] = v;
    }
}

double max_abs_s(const double* v, std::size_t n) {
    double m = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        m = std::max(m, std::fabs(v[k]));
    return m;
}

double max_abs_diff_s(const double* a, const double* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        m = std::max(m, std::fabs(a[k] - b[k]));
    return m;
}

double sum_sq_s(const double* v, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        s += v[k] * v[k];
    return s;
}

double sum_sq_diff_s(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

double sum_sqrt1p_cells_s(const double* px, const double* py, int nx, int ny) {
    double s = 0.0;
    for (int i = 0; i < ny - 1; ++i) {
        const double* xr = px + at(i, 0, nx);
        const double* yr = py + at(i, 0, nx);
        for (int j = 0; j < nx - 1; ++j)
            s += std::sqrt(1.0 + (xr[j] * xr[j] + yr[j] * yr[j]));
    }
    return s;
}

double sum_pair_sq_cells_s(const double* px, const double* py, int nx, int ny) {
    double s = 0.0;
    for (int i = 0; i < ny - 1; ++i) {
        const double* xr = px + at(i, 0, nx);
        const double* yr = py + at(i, 0, nx);
        for (int j = 0; j < nx - 1; ++j)
            s += xr[j] * xr[j] + yr[j] * yr[j];
    }
    return s;
}

double sum_wpair_sq_cells_s(const double* w, const double* px, const double* py,
                            int nx, int ny) {
    double s = 0.0;
    for (int i = 0; i < ny - 1; ++i) {
        const double* wr = w + at(i, 0, nx);
        const double* xr = px + at(i, 0, nx);
        const double* yr = py + at(i, 0, nx);
        for (int j = 0; j < nx - 1; ++j)
            s += wr[j] * (xr[j] * xr[j] + yr[j] * yr[j]);
    }
    return s;
}

double dot_cells_s(const double* a, const double* b, int nx, int ny) {
    double s = 0.0;
    for (int i = 0; i < ny - 1; ++i) {
        const double* ar = a + at(i, 0, nx);
        const double* br = b + at(i, 0, nx);
        for (int j = 0; j < nx - 1; ++j)
            s += ar[j] * br[j];
    }
    return s;
}

double sum_sq_cells_s(const double* a, int nx, int ny) {
    double s = 0.0;
    for (int i = 0; i < ny - 1; ++i) {
        const double* ar = a + at(i, 0, nx);
        for (int j = 0; j < nx - 1; ++j)
            s += ar[j] * ar[j];
    }
    return s;
}

} // namespace

const KernelTable& scalar_table() {
    static const KernelTable t = {
        "scalar",
        grad_forward_s,
        div_backward_s,
        laplacian5_s,
        ms_flux_s,
        scale_pair_field_s,
        accel_update_s,
        accel_update_penalty_s,
        axpy_s,
        clamp_lower_s,
        clamp_box_s,
        overrelax_s,
        dual_bisect_s,
        dual_linear_s,
        residual_none_s,
        residual_lower_s,
        residual_box_s,
        max_abs_s,
        max_abs_diff_s,
        sum_sq_s,
        sum_sq_diff_s,
        sum_sqrt1p_cells_s,
        sum_pair_sq_cells_s,
        sum_wpair_sq_cells_s,
        dot_cells_s,
        sum_sq_cells_s,
    };
    return t;
}

} // namespace pdeaccel::kernels
