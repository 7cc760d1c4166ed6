#pragma once

#include <cmath>
#include <cstddef>
#include <string_view>

// Low-level grid kernels. Every entry has a scalar reference implementation
// and (on x86-64) an AVX2 variant selected at runtime. The two paths are
// kept arithmetically identical for element-wise kernels: same operation
// order per element, no FMA contraction, so results agree bitwise.
// Reduction kernels accumulate in a different order and agree only to
// rounding; nothing that feeds back into solver iterates uses a summing
// reduction (stopping rules use max reductions, which are order-exact).

namespace pdeaccel::kernels {

struct KernelTable {
    const char* name;

    // stencils (row-major, i slow / j fast)
    void (*grad_forward)(const double* u, double* px, double* py,
                         int nx, int ny, double inv_dx);
    void (*div_backward)(const double* px, const double* py, double* out,
                         int nx, int ny, double inv_dx);
    void (*laplacian5)(const double* u, double* out,
                       int nx, int ny, double inv_dx2); // interior rows/cols only

    // element-wise solver updates
    void (*ms_flux)(const double* px, const double* py,
                    double* qx, double* qy, std::size_t n); // q = p/sqrt(1+|p|^2)
    void (*scale_pair_field)(const double* w, const double* px, const double* py,
                             double* qx, double* qy, std::size_t n); // q = w*p
    // v = (c2*u - um1 - dt2*ge) / c1
    void (*accel_update)(const double* u, const double* um1, const double* ge,
                         double* v, std::size_t n, double c2, double dt2, double c1);
    // implicit-penalty variant: v as above where v >= phi, else
    // w = (c2*u - um1 - dt2*ge + mu_dt2*phi) / c1p
    void (*accel_update_penalty)(const double* u, const double* um1, const double* ge,
                                 const double* phi, double* v, std::size_t n,
                                 double c2, double dt2, double c1,
                                 double mu_dt2, double c1p);
    void (*axpy)(double* u, const double* x, double c, std::size_t n); // u += c*x
    void (*clamp_lower)(double* u, const double* lo, std::size_t n);
    void (*clamp_box)(double* u, const double* lo, const double* hi, std::size_t n);
    void (*overrelax)(const double* unew, const double* uold, double* ubar,
                      std::size_t n); // ubar = 2*unew - uold
    // dual proximal step p <- alpha*q for the sqrt(1+|p|^2) integrand,
    // alpha from k bisection steps (in place)
    void (*dual_bisect)(double* px, double* py, const double* gx, const double* gy,
                        std::size_t n, double r1, int k);
    // closed-form dual prox for the quadratic integrand: p = (p + r1*g)/(1+r1)
    void (*dual_linear)(double* px, double* py, const double* gx, const double* gy,
                        std::size_t n, double r1);

    // residual fields (whole array; caller zeroes the boundary band)
    void (*residual_none)(const double* ge, double* r, std::size_t n); // r = -ge
    void (*residual_lower)(const double* ge, const double* u, const double* phi,
                           double* r, std::size_t n); // max(-ge, phi-u)
    void (*residual_box)(const double* ge, const double* u, const double* phi,
                         const double* psi, double* r, std::size_t n);

    // reductions
    double (*max_abs)(const double* v, std::size_t n);
    double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
    double (*sum_sq)(const double* v, std::size_t n);
    double (*sum_sq_diff)(const double* a, const double* b, std::size_t n);

    // quadrature sums over the (nx-1)*(ny-1) cells owning a full forward stencil
    double (*sum_sqrt1p_cells)(const double* px, const double* py, int nx, int ny);
    double (*sum_pair_sq_cells)(const double* px, const double* py, int nx, int ny);
    double (*sum_wpair_sq_cells)(const double* w, const double* px, const double* py,
                                 int nx, int ny);
    double (*dot_cells)(const double* a, const double* b, int nx, int ny);
    double (*sum_sq_cells)(const double* a, int nx, int ny);
};

/// Active table (auto-selected on first use: AVX2 when the CPU has it).
const KernelTable& active();

const KernelTable& scalar_table();

/// AVX2 table, or nullptr when not compiled in / not supported by the CPU.
const KernelTable* avx2_table();

/// Force a backend: "scalar", "avx2" or "auto". Returns false if the
/// request cannot be honored. The PDEACCEL_KERNELS environment variable
/// applies the same override at startup.
bool select(std::string_view name);

// Pointwise bisection core shared by the scalar kernel and the public
// dual_bisection operation. Solves g(alpha) = r1^2 a^2 - (1-a^2)(a-N)^2 = 0
// on [0, min(1,N)]; the AVX2 kernel mirrors this exact operation sequence.
inline double dual_bisect_alpha(double N, double r1sq, int k) {
    double lo = 0.0;
    double hi = N < 1.0 ? N : 1.0;
    for (int it = 0; it < k; ++it) {
        double mid = 0.5 * (lo + hi);
        double m2 = mid * mid;
        double d = mid - N;
        double g = r1sq * m2 - (1.0 - m2) * (d * d);
        if (g < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

inline void dual_bisect_point(double& px, double& py, double gx, double gy,
                              double r1, double r1sq, int k) {
    double sx = px + r1 * gx;
    double sy = py + r1 * gy;
    double N = std::sqrt(sx * sx + sy * sy);
    if (N == 0.0) {
        px = 0.0;
        py = 0.0;
        return;
    }
    double s = dual_bisect_alpha(N, r1sq, k) / N;
    px = sx * s;
    py = sy * s;
}

} // namespace pdeaccel::kernels
