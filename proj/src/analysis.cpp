#include "pdeaccel/analysis.hpp"

#include "pdeaccel/kernels.hpp"

#include <cmath>

namespace pdeaccel {

namespace {

// least-squares slope of y against x
double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= double(n);
    my /= double(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    require(sxx > 0.0, "degenerate fit: all abscissae equal");
    return sxy / sxx;
}

} // namespace

double rate_bound(const RateBoundInputs& in) {
    require(in.a > 0.0, "damping must be positive");
    require(in.theta > 0.0 && in.theta <= 1.0, "theta must lie in (0, 1]");
    require(in.mu >= 0.0, "mu must be nonnegative");
    require(in.lambda > 0.0, "Poincare constant must be positive");
    const double c = in.a + in.mu / in.a +
                     (2.0 * in.lambda / in.a) * (1.0 / in.theta - in.theta);
    const double lt = in.lambda * in.theta;
    return (in.a * std::sqrt(c * c + 4.0 * lt) - in.a * c) /
           (2.0 * std::sqrt(lt) + in.a);
}

double decay_rate_fit(const std::vector<double>& times,
                      const std::vector<double>& errors,
                      std::size_t first, std::size_t last) {
    require(times.size() == errors.size(), "times and errors must pair up");
    require(first < last && last <= times.size(), "invalid fit window");
    require(last - first >= 5, "fit window needs at least 5 samples");
    std::vector<double> t, loge;
    t.reserve(last - first);
    loge.reserve(last - first);
    for (std::size_t i = first; i < last; ++i) {
        require(errors[i] > 0.0, "errors must be positive on the fit window");
        t.push_back(times[i]);
        loge.push_back(std::log(errors[i]));
    }
    return -lsq_slope(t, loge);
}

double decay_rate_fit_mid(const std::vector<double>& times,
                          const std::vector<double>& errors) {
    const std::size_t n = times.size();
    std::size_t first = n / 5;
    std::size_t last = n - n / 5;
    return decay_rate_fit(times, errors, first, last);
}

double complexity_fit(const std::vector<long>& sizes,
                      const std::vector<double>& quantities) {
    require(sizes.size() == quantities.size(), "sizes and quantities must pair up");
    require(sizes.size() >= 3, "complexity fit needs at least 3 points");
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        require(sizes[i] > 0 && quantities[i] > 0.0,
                "complexity fit needs positive data");
        lx.push_back(std::log(double(sizes[i])));
        ly.push_back(std::log(quantities[i]));
    }
    return lsq_slope(lx, ly);
}

MonotonicityReport monotonicity_audit(const SolveTrace& trace, double tolerance) {
    const auto& K = trace.kinetic_history;
    const auto& E = trace.potential_history;
    require(K.size() == E.size() && !K.empty(), "trace needs energy histories");
    MonotonicityReport rep;
    for (std::size_t n = 0; n + 1 < K.size(); ++n) {
        double jump = (K[n + 1] + E[n + 1]) - (K[n] + E[n]);
        if (jump > rep.max_violation)
            rep.max_violation = jump;
        if (jump > tolerance && !rep.first_violation_iter)
            rep.first_violation_iter = long(n);
    }
    return rep;
}

double homogenization_gap(const ScalarField& u_eps, const ScalarField& u_hom) {
    require_same_shape(u_eps, u_hom, "homogenization_gap");
    return kernels::active().max_abs_diff(u_eps.data(), u_hom.data(), u_eps.size());
}

} // namespace pdeaccel
