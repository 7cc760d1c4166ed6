// AVX2 kernel variants. Compiled with -mavx2 and -ffp-contract=off only on
// x86-64; runtime dispatch decides whether this table is used.
//
// Element-wise kernels reproduce the scalar reference bitwise: same
// operation order per element, no FMA, and the blend/min/max tie
// conventions match the scalar ternaries. Reductions keep per-lane
// accumulators and agree with the scalar path only to rounding.

#include "pdeaccel/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace pdeaccel::kernels {
namespace {

inline std::size_t at(int i, int j, int nx) { return std::size_t(i) * nx + j; }

inline __m256d abs_pd(__m256d v) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    return _mm256_and_pd(v, mask);
}

inline double hadd_pd(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(s, s);
    return _mm_cvtsd_f64(_mm_add_sd(s, sh));
}

inline double hmax_pd(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d m = _mm_max_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(m, m);
    return _mm_cvtsd_f64(_mm_max_sd(m, sh));
}

void grad_forward_v(const double* u, double* px, double* py,
                    int nx, int ny, double inv_dx) {
    const __m256d vinv = _mm256_set1_pd(inv_dx);
    for (int i = 0; i < ny; ++i) {
        const double* row = u + at(i, 0, nx);
        double* prow = px + at(i, 0, nx);
        int j = 0;
        for (; j + 4 <= nx - 1; j += 4) {
            __m256d a = _mm256_loadu_pd(row + j + 1);
            __m256d b = _mm256_loadu_pd(row + j);
            _mm256_storeu_pd(prow + j, _mm256_mul_pd(_mm256_sub_pd(a, b), vinv));
        }
        for (; j < nx - 1; ++j)
            prow[j] = (row[j + 1] - row[j]) * inv_dx;
        prow[nx - 1] = 0.0;
    }
    for (int i = 0; i < ny - 1; ++i) {
        const double* row = u + at(i, 0, nx);
        const double* rowp = u + at(i + 1, 0, nx);
        double* prow = py + at(i, 0, nx);
        int j = 0;
        for (; j + 4 <= nx; j += 4) {
            __m256d a = _mm256_loadu_pd(rowp + j);
            __m256d b = _mm256_loadu_pd(row + j);
            _mm256_storeu_pd(prow + j, _mm256_mul_pd(_mm256_sub_pd(a, b), vinv));
        }
        for (; j < nx; ++j)
            prow[j] = (rowp[j] - row[j]) * inv_dx;
    }
    double* last = py + at(ny - 1, 0, nx);
    for (int j = 0; j < nx; ++j)
        last[j] = 0.0;
}

void div_backward_v(const double* px, const double* py, double* out,
                    int nx, int ny, double inv_dx) {
    const __m256d vinv = _mm256_set1_pd(inv_dx);
    const __m256d zero = _mm256_setzero_pd();
    for (int i = 0; i < ny; ++i) {
        const double* xrow = px + at(i, 0, nx);
        const double* yrow = py + at(i, 0, nx);
        const double* yrowm = i > 0 ? py + at(i - 1, 0, nx) : nullptr;
        double* orow = out + at(i, 0, nx);
        {
            double dxp = xrow[0];
            double dyp = yrow[0] - (yrowm ? yrowm[0] : 0.0);
            orow[0] = dxp * inv_dx + dyp * inv_dx;
        }
        int j = 1;
        for (; j + 4 <= nx; j += 4) {
            __m256d dxp = _mm256_sub_pd(_mm256_loadu_pd(xrow + j),
                                        _mm256_loadu_pd(xrow + j - 1));
            __m256d ym = yrowm ? _mm256_loadu_pd(yrowm + j) : zero;
            __m256d dyp = _mm256_sub_pd(_mm256_loadu_pd(yrow + j), ym);
            __m256d r = _mm256_add_pd(_mm256_mul_pd(dxp, vinv), _mm256_mul_pd(dyp, vinv));
            _mm256_storeu_pd(orow + j, r);
        }
        for (; j < nx; ++j) {
            double dxp = xrow[j] - xrow[j - 1];
            double dyp = yrow[j] - (yrowm ? yrowm[j] : 0.0);
            orow[j] = dxp * inv_dx + dyp * inv_dx;
        }
    }
}

void laplacian5_v(const double* u, double* out, int nx, int ny, double inv_dx2) {
    const __m256d vinv = _mm256_set1_pd(inv_dx2);
    const __m256d four = _mm256_set1_pd(4.0);
    for (int i = 1; i < ny - 1; ++i) {
        const double* rm = u + at(i - 1, 0, nx);
        const double* rc = u + at(i, 0, nx);
        const double* rp = u + at(i + 1, 0, nx);
        double* orow = out + at(i, 0, nx);
        int j = 1;
        for (; j + 4 <= nx - 1; j += 4) {
            __m256d s = _mm256_add_pd(_mm256_loadu_pd(rc + j + 1), _mm256_loadu_pd(rc + j - 1));
            s = _mm256_add_pd(s, _mm256_loadu_pd(rp + j));
            s = _mm256_add_pd(s, _mm256_loadu_pd(rm + j));
            s = _mm256_sub_pd(s, _mm256_mul_pd(four, _mm256_loadu_pd(rc + j)));
            _mm256_storeu_pd(orow + j, _mm256_mul_pd(s, vinv));
        }
        for (; j < nx - 1; ++j)
            orow[j] = (rc[j + 1] + rc[j - 1] + rp[j] + rm[j] - 4.0 * rc[j]) * inv_dx2;
    }
}

void ms_flux_v(const double* px, const double* py, double* qx, double* qy,
               std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d a = _mm256_loadu_pd(px + k);
        __m256d b = _mm256_loadu_pd(py + k);
        __m256d m = _mm256_add_pd(one, _mm256_add_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b)));
        __m256d s = _mm256_div_pd(one, _mm256_sqrt_pd(m));
        _mm256_storeu_pd(qx + k, _mm256_mul_pd(a, s));
        _mm256_storeu_pd(qy + k, _mm256_mul_pd(b, s));
    }
    for (; k < n; ++k) {
        double a = px[k];
        double b = py[k];
        double s = 1.0 / std::sqrt(1.0 + (a * a + b * b));
        qx[k] = a * s;
        qy[k] = b * s;
    }
}

void scale_pair_field_v(const double* w, const double* px, const double* py,
                        double* qx, double* qy, std::size_t n) {
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d vw = _mm256_loadu_pd(w + k);
        _mm256_storeu_pd(qx + k, _mm256_mul_pd(vw, _mm256_loadu_pd(px + k)));
        _mm256_storeu_pd(qy + k, _mm256_mul_pd(vw, _mm256_loadu_pd(py + k)));
    }
    for (; k < n; ++k) {
        qx[k] = w[k] * px[k];
        qy[k] = w[k] * py[k];
    }
}

void accel_update_v(const double* u, const double* um1, const double* ge,
                    double* v, std::size_t n, double c2, double dt2, double c1) {
    const __m256d vc2 = _mm256_set1_pd(c2);
    const __m256d vdt2 = _mm256_set1_pd(dt2);
    const __m256d vc1 = _mm256_set1_pd(c1);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d t = _mm256_sub_pd(_mm256_mul_pd(vc2, _mm256_loadu_pd(u + k)),
                                  _mm256_loadu_pd(um1 + k));
        t = _mm256_sub_pd(t, _mm256_mul_pd(vdt2, _mm256_loadu_pd(ge + k)));
        _mm256_storeu_pd(v + k, _mm256_div_pd(t, vc1));
    }
    for (; k < n; ++k)
        v[k] = (c2 * u[k] - um1[k] - dt2 * ge[k]) / c1;
}

void accel_update_penalty_v(const double* u, const double* um1, const double* ge,
                            const double* phi, double* v, std::size_t n,
                            double c2, double dt2, double c1,
                            double mu_dt2, double c1p) {
    const __m256d vc2 = _mm256_set1_pd(c2);
    const __m256d vdt2 = _mm256_set1_pd(dt2);
    const __m256d vc1 = _mm256_set1_pd(c1);
    const __m256d vmu = _mm256_set1_pd(mu_dt2);
    const __m256d vc1p = _mm256_set1_pd(c1p);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d vphi = _mm256_loadu_pd(phi + k);
        __m256d num = _mm256_sub_pd(_mm256_mul_pd(vc2, _mm256_loadu_pd(u + k)),
                                    _mm256_loadu_pd(um1 + k));
        num = _mm256_sub_pd(num, _mm256_mul_pd(vdt2, _mm256_loadu_pd(ge + k)));
        __m256d vv = _mm256_div_pd(num, vc1);
        __m256d ww = _mm256_div_pd(_mm256_add_pd(num, _mm256_mul_pd(vmu, vphi)), vc1p);
        __m256d keep = _mm256_cmp_pd(vv, vphi, _CMP_GE_OQ);
        _mm256_storeu_pd(v + k, _mm256_blendv_pd(ww, vv, keep));
    }
    for (; k < n; ++k) {
        double num = c2 * u[k] - um1[k] - dt2 * ge[k];
        double vv = num / c1;
        double ww = (num + mu_dt2 * phi[k]) / c1p;
        v[k] = vv >= phi[k] ? vv : ww;
    }
}

void axpy_v(double* u, const double* x, double c, std::size_t n) {
    const __m256d vc = _mm256_set1_pd(c);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d t = _mm256_add_pd(_mm256_loadu_pd(u + k),
                                  _mm256_mul_pd(vc, _mm256_loadu_pd(x + k)));
        _mm256_storeu_pd(u + k, t);
    }
    for (; k < n; ++k)
        u[k] = u[k] + c * x[k];
}

// Ties write the obstacle value, matching _mm256_max_pd's second-operand
// convention; the scalar reference uses the same ternary.
void clamp_lower_v(double* u, const double* lo, std::size_t n) {
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d t = _mm256_max_pd(_mm256_loadu_pd(u + k), _mm256_loadu_pd(lo + k));
        _mm256_storeu_pd(u + k, t);
    }
    for (; k < n; ++k)
        u[k] = u[k] > lo[k] ? u[k] : lo[k];
}

void clamp_box_v(double* u, const double* lo, const double* hi, std::size_t n) {
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d t = _mm256_min_pd(_mm256_loadu_pd(u + k), _mm256_loadu_pd(hi + k));
        t = _mm256_max_pd(t, _mm256_loadu_pd(lo + k));
        _mm256_storeu_pd(u + k, t);
    }
    for (; k < n; ++k) {
        double t = u[k] < hi[k] ? u[k] : hi[k];
        u[k] = t > lo[k] ? t : lo[k];
    }
}

void overrelax_v(const double* unew, const double* uold, double* ubar,
                 std::size_t n) {
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d t = _mm256_sub_pd(_mm256_mul_pd(two, _mm256_loadu_pd(unew + k)),
                                  _mm256_loadu_pd(uold + k));
        _mm256_storeu_pd(ubar + k, t);
    }
    for (; k < n; ++k)
        ubar[k] = 2.0 * unew[k] - uold[k];
}

void dual_bisect_v(double* px, double* py, const double* gx, const double* gy,
                   std::size_t n, double r1, int k) {
    const double r1sq = r1 * r1;
    const __m256d vr1 = _mm256_set1_pd(r1);
    const __m256d vr1sq = _mm256_set1_pd(r1sq);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t m = 0;
    for (; m + 4 <= n; m += 4) {
        __m256d sx = _mm256_add_pd(_mm256_loadu_pd(px + m),
                                   _mm256_mul_pd(vr1, _mm256_loadu_pd(gx + m)));
        __m256d sy = _mm256_add_pd(_mm256_loadu_pd(py + m),
                                   _mm256_mul_pd(vr1, _mm256_loadu_pd(gy + m)));
        __m256d N = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(sx, sx),
                                                 _mm256_mul_pd(sy, sy)));
        __m256d lo = zero;
        __m256d hi = _mm256_min_pd(N, one);
        for (int it = 0; it < k; ++it) {
            __m256d mid = _mm256_mul_pd(half, _mm256_add_pd(lo, hi));
            __m256d m2 = _mm256_mul_pd(mid, mid);
            __m256d d = _mm256_sub_pd(mid, N);
            __m256d g = _mm256_sub_pd(_mm256_mul_pd(vr1sq, m2),
                                      _mm256_mul_pd(_mm256_sub_pd(one, m2),
                                                    _mm256_mul_pd(d, d)));
            __m256d below = _mm256_cmp_pd(g, zero, _CMP_LT_OQ);
            lo = _mm256_blendv_pd(lo, mid, below);
            hi = _mm256_blendv_pd(mid, hi, below);
        }
        __m256d alpha = _mm256_mul_pd(half, _mm256_add_pd(lo, hi));
        __m256d s = _mm256_div_pd(alpha, N); // NaN where N == 0; blended away
        __m256d iszero = _mm256_cmp_pd(N, zero, _CMP_EQ_OQ);
        __m256d rx = _mm256_blendv_pd(_mm256_mul_pd(sx, s), zero, iszero);
        __m256d ry = _mm256_blendv_pd(_mm256_mul_pd(sy, s), zero, iszero);
        _mm256_storeu_pd(px + m, rx);
        _mm256_storeu_pd(py + m, ry);
    }
    for (; m < n; ++m)
        dual_bisect_point(px[m], py[m], gx[m], gy[m], r1, r1sq, k);
}

void dual_linear_v(double* px, double* py, const double* gx, const double* gy,
                   std::size_t n, double r1) {
    const double inv = 1.0 / (1.0 + r1);
    const __m256d vr1 = _mm256_set1_pd(r1);
    const __m256d vinv = _mm256_set1_pd(inv);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d tx = _mm256_add_pd(_mm256_loadu_pd(px + k),
                                   _mm256_mul_pd(vr1, _mm256_loadu_pd(gx + k)));
        __m256d ty = _mm256_add_pd(_mm256_loadu_pd(py + k),
                                   _mm256_mul_pd(vr1, _mm256_loadu_pd(gy + k)));
        _mm256_storeu_pd(px + k, _mm256_mul_pd(tx, vinv));
        _mm256_storeu_pd(py + k, _mm256_mul_pd(ty, vinv));
    }
    for (; k < n; ++k) {
        px[k] = (px[k] + r1 * gx[k]) * inv;
        py[k] = (py[k] + r1 * gy[k]) * inv;
    }
}

void residual_none_v(const double* ge, double* r, std::size_t n) {
    const __m256d neg = _mm256_set1_pd(-0.0);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4)
        _mm256_storeu_pd(r + k, _mm256_xor_pd(_mm256_loadu_pd(ge + k), neg));
    for (; k < n; ++k)
        r[k] = -ge[k];
}

void residual_lower_v(const double* ge, const double* u, const double* phi,
                      double* r, std::size_t n) {
    const __m256d neg = _mm256_set1_pd(-0.0);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d a = _mm256_xor_pd(_mm256_loadu_pd(ge + k), neg);
        __m256d b = _mm256_sub_pd(_mm256_loadu_pd(phi + k), _mm256_loadu_pd(u + k));
        _mm256_storeu_pd(r + k, _mm256_max_pd(a, b));
    }
    for (; k < n; ++k) {
        double a = -ge[k];
        double b = phi[k] - u[k];
        r[k] = a > b ? a : b;
    }
}

void residual_box_v(const double* ge, const double* u, const double* phi,
                    const double* psi, double* r, std::size_t n) {
    const __m256d neg = _mm256_set1_pd(-0.0);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d vu = _mm256_loadu_pd(u + k);
        __m256d a = _mm256_xor_pd(_mm256_loadu_pd(ge + k), neg);
        __m256d atlo = _mm256_cmp_pd(vu, _mm256_loadu_pd(phi + k), _CMP_EQ_OQ);
        __m256d athi = _mm256_cmp_pd(vu, _mm256_loadu_pd(psi + k), _CMP_EQ_OQ);
        __m256d v = _mm256_blendv_pd(a, _mm256_min_pd(a, zero), athi);
        v = _mm256_blendv_pd(v, _mm256_max_pd(a, zero), atlo);
        _mm256_storeu_pd(r + k, v);
    }
    for (; k < n; ++k) {
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

double max_abs_v(const double* v, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4)
        acc = _mm256_max_pd(acc, abs_pd(_mm256_loadu_pd(v + k)));
    double m = hmax_pd(acc);
    for (; k < n; ++k)
        m = std::max(m, std::fabs(v[k]));
    return m;
}

double max_abs_diff_v(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k));
        acc = _mm256_max_pd(acc, abs_pd(d));
    }
    double m = hmax_pd(acc);
    for (; k < n; ++k)
        m = std::max(m, std::fabs(a[k] - b[k]));
    return m;
}

double sum_sq_v(const double* v, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d x = _mm256_loadu_pd(v + k);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(x, x));
    }
    double s = hadd_pd(acc);
    for (; k < n; ++k)
        s += v[k] * v[k];
    return s;
}

double sum_sq_diff_v(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    double s = hadd_pd(acc);
    for (; k < n; ++k) {
        double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

double sum_sqrt1p_cells_v(const double* px, const double* py, int nx, int ny) {
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d acc = _mm256_setzero_pd();
    double tail = 0.0;
    for (int i = 0; i < ny - 1; ++i) {
        const double* xr = px + at(i, 0, nx);
        const double* yr = py + at(i, 0, nx);
        int j = 0;
        for (; j + 4 <= nx - 1; j += 4) {
            __m256d a = _mm256_loadu_pd(xr + j);
            __m256d b = _mm256_loadu_pd(yr + j);
            __m256d m = _mm256_add_pd(one, _mm256_add_pd(_mm256_mul_pd(a, a),
                                                         _mm256_mul_pd(b, b)));
            acc = _mm256_add_pd(acc, _mm256_sqrt_pd(m));
        }
        for (; j < nx - 1; ++j)
            tail += std::sqrt(1.0 + (xr[j] * xr[j] + yr[j] * yr[j]));
    }
    return hadd_pd(acc) + tail;
}

double sum_pair_sq_cells_v(const double* px, const double* py, int nx, int ny) {
    __m256d acc = _mm256_setzero_pd();
    double tail = 0.0;
    for (int i = 0; i < ny - 1; ++i) {
        const double* xr = px + at(i, 0, nx);
        const double* yr = py + at(i, 0, nx);
        int j = 0;
        for (; j + 4 <= nx - 1; j += 4) {
            __m256d a = _mm256_loadu_pd(xr + j);
            __m256d b = _mm256_loadu_pd(yr + j);
            acc = _mm256_add_pd(acc, _mm256_add_pd(_mm256_mul_pd(a, a),
                                                   _mm256_mul_pd(b, b)));
        }
        for (; j < nx - 1; ++j)
            tail += xr[j] * xr[j] + yr[j] * yr[j];
    }
    return hadd_pd(acc) + tail;
}

double sum_wpair_sq_cells_v(const double* w, const double* px, const double* py,
                            int nx, int ny) {
    __m256d acc = _mm256_setzero_pd();
    double tail = 0.0;
    for (int i = 0; i < ny - 1; ++i) {
        const double* wr = w + at(i, 0, nx);
        const double* xr = px + at(i, 0, nx);
        const double* yr = py + at(i, 0, nx);
        int j = 0;
        for (; j + 4 <= nx - 1; j += 4) {
            __m256d a = _mm256_loadu_pd(xr + j);
            __m256d b = _mm256_loadu_pd(yr + j);
            __m256d s = _mm256_add_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
            acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(wr + j), s));
        }
        for (; j < nx - 1; ++j)
            tail += wr[j] * (xr[j] * xr[j] + yr[j] * yr[j]);
    }
    return hadd_pd(acc) + tail;
}

double dot_cells_v(const double* a, const double* b, int nx, int ny) {
    __m256d acc = _mm256_setzero_pd();
    double tail = 0.0;
    for (int i = 0; i < ny - 1; ++i) {
        const double* ar = a + at(i, 0, nx);
        const double* br = b + at(i, 0, nx);
        int j = 0;
        for (; j + 4 <= nx - 1; j += 4)
            acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(ar + j),
                                                   _mm256_loadu_pd(br + j)));
        for (; j < nx - 1; ++j)
            tail += ar[j] * br[j];
    }
    return hadd_pd(acc) + tail;
}

double sum_sq_cells_v(const double* a, int nx, int ny) {
    __m256d acc = _mm256_setzero_pd();
    double tail = 0.0;
    for (int i = 0; i < ny - 1; ++i) {
        const double* ar = a + at(i, 0, nx);
        int j = 0;
        for (; j + 4 <= nx - 1; j += 4) {
            __m256d x = _mm256_loadu_pd(ar + j);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(x, x));
        }
        for (; j < nx - 1; ++j)
            tail += ar[j] * ar[j];
    }
    return hadd_pd(acc) + tail;
}

} // namespace

namespace detail {

const KernelTable& avx2_impl() {
    static const KernelTable t = {
        "avx2",
        grad_forward_v,
        div_backward_v,
        laplacian5_v,
        ms_flux_v,
        scale_pair_field_v,
        accel_update_v,
        accel_update_penalty_v,
        axpy_v,
        clamp_lower_v,
        clamp_box_v,
        overrelax_v,
        dual_bisect_v,
        dual_linear_v,
        residual_none_v,
        residual_lower_v,
        residual_box_v,
        max_abs_v,
        max_abs_diff_v,
        sum_sq_v,
        sum_sq_diff_v,
        sum_sqrt1p_cells_v,
        sum_pair_sq_cells_v,
        sum_wpair_sq_cells_v,
        dot_cells_v,
        sum_sq_cells_v,
    };
    return t;
}

} // namespace detail
} // namespace pdeaccel::kernels

#endif // __AVX2__
