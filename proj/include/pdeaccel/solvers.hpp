#pragma once

#include "pdeaccel/models.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace pdeaccel {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

enum class StoppingKind {
    Residual,    // |max{-gradE, phi-u}|_inf <= factor * (dx*|obstacle|_inf, or dx^2 unconstrained)
    IterateDiff, // |u^{n+1} - u^n|_inf <= C * dx^2
};

struct StoppingRule {
    StoppingKind kind = StoppingKind::Residual;
    double constant = 1.0; // tolerance factor (Residual) or C (IterateDiff)
};

struct SolverConfig {
    double damping = kTwoPi;  // friction coefficient a
    double wave_speed = 1.0;  // b; must match the model's gradient-term weight
    double dt = 0.0;          // explicit time step; 0 derives it from cfl_safety
    double cfl_safety = 0.8;  // fraction of the CFL bound used when dt == 0
    double penalty = 0.0;     // mu > 0 switches to the implicit-penalty step
    StoppingRule stopping;
    long max_iters = 500000;
    double r1 = 0.0;          // primal-dual dual step; 0 saturates r1*r2 = dx^2/6
    double r2 = 0.0;          // primal-dual primal step, ratio r1/r2 = 4*pi^2
    int bisection_iters = 0;  // dual bisection count; 0 derives it from the tolerance
    std::uint64_t seed = 1;
};

struct SolveTrace {
    long iterations = 0;
    bool converged = false;
    std::vector<double> residual_history;  // |residual|_inf per iterate (initial + each step)
    std::vector<double> kinetic_history;   // (1/2) dx^2 sum ((u^n - u^{n-1})/dt)^2
    std::vector<double> potential_history; // E[u^n]
    double wall_time = 0.0;                // seconds
    ScalarField final;
};

enum class FlowKind { Wave, MinimalSurface, Heat };

/// a = 2 sqrt(b (lambda1 + c)); throws when lambda1 + c = 0 (undamped modes).
double optimal_damping(double lambda1, double c, double b);

/// Largest stable explicit step times `safety`: dx/sqrt(2b) for the wave
/// flows, dx^2/(4b) for the heat flow.
double cfl_dt(FlowKind kind, double dx, double b, double safety);

/// Variational-inequality residual: -gradE on free interior nodes,
/// max{-gradE, phi-u} against a lower obstacle, one-sided at box contact;
/// zero on the boundary.
ScalarField residual_field(const ProblemSpec& problem, const ScalarField& u);

double residual_threshold(const ProblemSpec& problem, double dx, const StoppingRule& rule);

bool is_converged(const ProblemSpec& problem, const ScalarField& u, const StoppingRule& rule);
bool is_converged(const ProblemSpec& problem, const ScalarField& u,
                  const ScalarField& u_prev, const StoppingRule& rule);

/// One explicit Euler relaxation step u <- u + dt (g - u) on boundary nodes.
ScalarField relax_boundary(const ScalarField& u, const ScalarField& g, double dt);

/// Initial iterate policy: the boundary field itself when unconstrained,
/// otherwise the bilinear blend of its edge data clipped to the obstacles.
ScalarField initial_iterate(const ProblemSpec& problem);

/// One damped-wave step: v = ((2+a dt)u^n - u^{n-1} - dt^2 gradE)/(1+a dt),
/// projected onto the obstacle interval (or the implicit-penalty variant
/// when cfg.penalty > 0), with the boundary re-pinned to g.
ScalarField pde_accel_step(const ScalarField& u_n, const ScalarField& u_nm1,
                           const ProblemSpec& problem, const SolverConfig& cfg);

SolveTrace pde_accel_solve(const ProblemSpec& problem, const SolverConfig& cfg);

/// Projected explicit gradient descent (heat-flow CFL).
SolveTrace gradient_descent_solve(const ProblemSpec& problem, const SolverConfig& cfg);

/// Pointwise dual proximal solve for the sqrt(1+|p|^2) integrand via k
/// bisection steps on g(alpha) = r1^2 a^2 - (1-a^2)(a-N)^2; returns alpha*q
/// with |result| < 1.
std::array<double, 2> dual_bisection(std::array<double, 2> p_n,
                                     std::array<double, 2> grad_ubar,
                                     double r1, int k);

struct PrimalDualState {
    ScalarField u;
    ScalarField uprev;
    ScalarField ubar;
    VectorField p;
};

PrimalDualState primal_dual_init(const ProblemSpec& problem, const SolverConfig& cfg);
void primal_dual_step(PrimalDualState& st, const ProblemSpec& problem,
                      const SolverConfig& cfg);

/// Alternating proximal updates on u and the dual field p with
/// overrelaxation; bisection dual solve for the nonlinear model,
/// closed-form prox for the linearized one.
SolveTrace primal_dual_solve(const ProblemSpec& problem, const SolverConfig& cfg);

/// Effective r1, r2: the configured values, or the saturated defaults
/// r1 r2 = dx^2/6 with r1/r2 = 4 pi^2.
std::array<double, 2> primal_dual_steps(const SolverConfig& cfg, double dx);

/// Bisection count giving dual accuracy tol*dx^2 (clamped to [8, 60]).
int bisection_count(double tol, double dx);

} // namespace pdeaccel
