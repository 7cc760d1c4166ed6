#pragma once

#include "pdeaccel/solvers.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pdeaccel {

/// Inputs of the continuum convergence-rate bound.
struct RateBoundInputs {
    double a = 0.0;      // damping
    double theta = 1.0;  // ellipticity constant in (0, 1]
    double mu = 0.0;     // zero-order curvature bound
    double lambda = 1.0; // Poincare constant of the domain
};

/// beta = (a sqrt(c^2 + 4 lambda theta) - a c) / (2 sqrt(lambda theta) + a)
/// with c = a + mu/a + (2 lambda / a)(1/theta - theta); always in (0, a).
double rate_bound(const RateBoundInputs& in);

/// Negated least-squares slope of log(error) against time over [first, last).
double decay_rate_fit(const std::vector<double>& times,
                      const std::vector<double>& errors,
                      std::size_t first, std::size_t last);

/// Same fit over the middle of the series (first and last 20% dropped).
double decay_rate_fit_mid(const std::vector<double>& times,
                          const std::vector<double>& errors);

/// Least-squares exponent p of quantity ~ c * N^p in log-log space.
double complexity_fit(const std::vector<long>& sizes,
                      const std::vector<double>& quantities);

struct MonotonicityReport {
    double max_violation = 0.0;               // largest positive jump of K+E
    std::optional<long> first_violation_iter; // first n with jump > tolerance
};

MonotonicityReport monotonicity_audit(const SolveTrace& trace, double tolerance = 0.0);

/// |u_eps - u_hom|_inf
double homogenization_gap(const ScalarField& u_eps, const ScalarField& u_hom);

} // namespace pdeaccel
