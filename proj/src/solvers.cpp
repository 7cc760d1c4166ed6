#include "pdeaccel/solvers.hpp"

#include "pdeaccel/kernels.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace pdeaccel {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void pin_boundary(ScalarField& u, const ScalarField& g) {
    const int nx = u.nx, ny = u.ny;
    for (int j = 0; j < nx; ++j) {
        u(0, j) = g(0, j);
        u(ny - 1, j) = g(ny - 1, j);
    }
    for (int i = 0; i < ny; ++i) {
        u(i, 0) = g(i, 0);
        u(i, nx - 1) = g(i, nx - 1);
    }
}

void clamp_upper_only(ScalarField& u, const ScalarField& hi) {
    for (std::size_t k = 0; k < u.size(); ++k)
        u.values[k] = u.values[k] < hi.values[k] ? u.values[k] : hi.values[k];
}

void project(ScalarField& u, const ProblemSpec& ps) {
    const auto& K = kernels::active();
    if (ps.lower && ps.upper)
        K.clamp_box(u.data(), ps.lower->data(), ps.upper->data(), u.size());
    else if (ps.lower)
        K.clamp_lower(u.data(), ps.lower->data(), u.size());
    else if (ps.upper)
        clamp_upper_only(u, *ps.upper);
}

void validate_config(const ProblemSpec& ps, const SolverConfig& cfg) {
    require(cfg.damping > 0.0, "damping must be positive");
    require(cfg.wave_speed > 0.0, "wave speed must be positive");
    require(cfg.cfl_safety > 0.0 && cfg.cfl_safety <= 1.0,
            "cfl_safety must lie in (0, 1]");
    require(cfg.max_iters >= 1, "iteration cap must be at least 1");
    require(cfg.stopping.constant > 0.0, "stopping constant must be positive");
    require(cfg.penalty >= 0.0, "penalty must be nonnegative");
    require(cfg.wave_speed == ps.model.b,
            "wave_speed must equal the model's gradient-term weight b");
    if (cfg.penalty > 0.0)
        require(ps.lower && !ps.upper,
                "penalty stepping supports a single lower obstacle");
}

// dt for the damped-wave flow, validated against the CFL bound even when
// given explicitly.
double wave_dt(const ProblemSpec& ps, const SolverConfig& cfg) {
    const double beff = ps.model.wave_speed_sq_bound();
    const double bound = ps.boundary.dx / std::sqrt(2.0 * beff);
    double dt = cfg.dt > 0.0 ? cfg.dt : cfg.cfl_safety * bound;
    require(dt <= bound * (1.0 + 1e-9),
            "time step violates the wave CFL bound dx/sqrt(2b)");
    return dt;
}

double heat_dt(const ProblemSpec& ps, const SolverConfig& cfg) {
    const double beff = ps.model.wave_speed_sq_bound();
    const double dx = ps.boundary.dx;
    const double bound = dx * dx / (4.0 * beff);
    double dt = cfg.dt > 0.0 ? cfg.dt : cfg.cfl_safety * bound;
    require(dt <= bound * (1.0 + 1e-9),
            "time step violates the heat CFL bound dx^2/(4b)");
    return dt;
}

void residual_into(const ProblemSpec& ps, const ScalarField& u,
                   const ScalarField& ge, ScalarField& res) {
    const auto& K = kernels::active();
    if (!res.same_shape(u))
        res = ScalarField(u.nx, u.ny, u.dx);
    if (ps.lower && ps.upper)
        K.residual_box(ge.data(), u.data(), ps.lower->data(), ps.upper->data(),
                       res.data(), u.size());
    else if (ps.lower)
        K.residual_lower(ge.data(), u.data(), ps.lower->data(), res.data(), u.size());
    else if (ps.upper) {
        // mirror of the lower-obstacle rule: min{-gradE, u - psi}
        const double* g = ge.data();
        const double* uu = u.data();
        const double* psi = ps.upper->data();
        double* r = res.data();
        for (std::size_t k = 0; k < u.size(); ++k) {
            double a = -g[k];
            double b = uu[k] - psi[k];
            r[k] = a < b ? a : b;
        }
    } else
        K.residual_none(ge.data(), res.data(), u.size());
    zero_boundary(res);
}

// Shared per-iteration bookkeeping for the explicit flows.
struct TraceRecorder {
    SolveTrace trace;
    ModelWorkspace ws;
    ScalarField ge, res;
    double kfac = 0.0; // 0.5 dx^2 / dt^2

    // returns |residual|_inf at u
    double record(const ProblemSpec& ps, const ScalarField& u, const ScalarField& um1) {
        const auto& K = kernels::active();
        energy_gradient(ps.model, u, ge, ws);
        residual_into(ps, u, ge, res);
        double r = K.max_abs(res.data(), res.size());
        double kin = kfac * K.sum_sq_diff(u.data(), um1.data(), u.size());
        trace.residual_history.push_back(r);
        trace.kinetic_history.push_back(kin);
        trace.potential_history.push_back(energy(ps.model, u, ws));
        return r;
    }
};

} // namespace

double optimal_damping(double lambda1, double c, double b) {
    require(lambda1 >= 0.0 && c >= 0.0 && b > 0.0, "invalid damping inputs");
    require(lambda1 + c > 0.0, "undamped modes, method does not converge");
    return 2.0 * std::sqrt(b * (lambda1 + c));
}

double cfl_dt(FlowKind kind, double dx, double b, double safety) {
    require(dx > 0.0 && b > 0.0 && safety > 0.0 && safety <= 1.0, "invalid CFL inputs");
    if (kind == FlowKind::Heat)
        return safety * dx * dx / (4.0 * b);
    return safety * dx / std::sqrt(2.0 * b);
}

ScalarField residual_field(const ProblemSpec& ps, const ScalarField& u) {
    require_same_shape(u, ps.boundary, "residual_field");
    ScalarField ge = energy_gradient(ps.model, u);
    ScalarField res;
    residual_into(ps, u, ge, res);
    return res;
}

double residual_threshold(const ProblemSpec& ps, double dx, const StoppingRule& rule) {
    double sup = ps.obstacle_sup();
    double base = sup > 0.0 ? dx * sup : dx * dx;
    return rule.constant * base;
}

bool is_converged(const ProblemSpec& ps, const ScalarField& u, const StoppingRule& rule) {
    require(rule.kind == StoppingKind::Residual,
            "iterate-difference rule needs the previous iterate");
    return linf_norm(residual_field(ps, u)) <= residual_threshold(ps, u.dx, rule);
}

bool is_converged(const ProblemSpec& ps, const ScalarField& u,
                  const ScalarField& u_prev, const StoppingRule& rule) {
    if (rule.kind == StoppingKind::Residual)
        return is_converged(ps, u, rule);
    double d = kernels::active().max_abs_diff(u.data(), u_prev.data(), u.size());
    return d <= rule.constant * u.dx * u.dx;
}

ScalarField relax_boundary(const ScalarField& u, const ScalarField& g, double dt) {
    require_same_shape(u, g, "relax_boundary");
    require(dt > 0.0, "relaxation step must be positive");
    ScalarField out = u;
    const int nx = u.nx, ny = u.ny;
    auto step = [&](int i, int j) { out(i, j) = u(i, j) + dt * (g(i, j) - u(i, j)); };
    for (int j = 0; j < nx; ++j) {
        step(0, j);
        step(ny - 1, j);
    }
    for (int i = 1; i < ny - 1; ++i) {
        step(i, 0);
        step(i, nx - 1);
    }
    return out;
}

ScalarField initial_iterate(const ProblemSpec& ps) {
    if (!ps.constrained())
        return ps.boundary;
    ScalarField u = bilinear_extension(ps.boundary);
    project(u, ps);
    return u;
}

namespace {

void accel_step_into(const ScalarField& u, const ScalarField& um1,
                     const ScalarField& ge, ScalarField& out,
                     const ProblemSpec& ps, const SolverConfig& cfg, double dt) {
    const auto& K = kernels::active();
    const double a = cfg.damping;
    const double c2 = 2.0 + a * dt;
    const double c1 = 1.0 + a * dt;
    const double dt2 = dt * dt;
    if (cfg.penalty > 0.0) {
        const double mu_dt2 = cfg.penalty * dt2;
        K.accel_update_penalty(u.data(), um1.data(), ge.data(), ps.lower->data(),
                               out.data(), u.size(), c2, dt2, c1, mu_dt2, c1 + mu_dt2);
    } else {
        K.accel_update(u.data(), um1.data(), ge.data(), out.data(), u.size(),
                       c2, dt2, c1);
        project(out, ps);
    }
    pin_boundary(out, ps.boundary);
}

} // namespace

ScalarField pde_accel_step(const ScalarField& u_n, const ScalarField& u_nm1,
                           const ProblemSpec& ps, const SolverConfig& cfg) {
    ps.validate();
    validate_config(ps, cfg);
    require_same_shape(u_n, ps.boundary, "pde_accel_step");
    require_same_shape(u_nm1, ps.boundary, "pde_accel_step");
    const double dt = wave_dt(ps, cfg);
    ScalarField ge = energy_gradient(ps.model, u_n);
    ScalarField out(u_n.nx, u_n.ny, u_n.dx);
    accel_step_into(u_n, u_nm1, ge, out, ps, cfg, dt);
    return out;
}

namespace {

SolveTrace explicit_flow_solve(const ProblemSpec& ps, const SolverConfig& cfg,
                               bool accelerated) {
    ps.validate();
    validate_config(ps, cfg);
    const double dt = accelerated ? wave_dt(ps, cfg) : heat_dt(ps, cfg);
    const double dx = ps.boundary.dx;
    const double threshold = residual_threshold(ps, dx, cfg.stopping);
    const bool residual_rule = cfg.stopping.kind == StoppingKind::Residual;
    const auto& K = kernels::active();

    auto t0 = Clock::now();
    ScalarField u = initial_iterate(ps);
    ScalarField um1 = u; // zero initial velocity
    ScalarField unew(u.nx, u.ny, u.dx);

    TraceRecorder rec;
    rec.kfac = 0.5 * dx * dx / (dt * dt);
    double r0 = rec.record(ps, u, um1);
    if (residual_rule && r0 <= threshold) {
        rec.trace.converged = true;
        rec.trace.final = std::move(u);
        rec.trace.wall_time = seconds_since(t0);
        return std::move(rec.trace);
    }

    for (long iter = 1; iter <= cfg.max_iters; ++iter) {
        if (accelerated) {
            accel_step_into(u, um1, rec.ge, unew, ps, cfg, dt);
        } else {
            unew.values = u.values;
            K.axpy(unew.data(), rec.ge.data(), -dt, unew.size());
            project(unew, ps);
            pin_boundary(unew, ps.boundary);
        }
        std::swap(um1.values, u.values);
        std::swap(u.values, unew.values);
        rec.trace.iterations = iter;

        double r = rec.record(ps, u, um1);
        bool done = residual_rule
                        ? r <= threshold
                        : K.max_abs_diff(u.data(), um1.data(), u.size()) <=
                              cfg.stopping.constant * dx * dx;
        if (done) {
            rec.trace.converged = true;
            break;
        }
    }
    rec.trace.final = std::move(u);
    rec.trace.wall_time = seconds_since(t0);
    return std::move(rec.trace);
}

} // namespace

SolveTrace pde_accel_solve(const ProblemSpec& ps, const SolverConfig& cfg) {
    return explicit_flow_solve(ps, cfg, true);
}

SolveTrace gradient_descent_solve(const ProblemSpec& ps, const SolverConfig& cfg) {
    return explicit_flow_solve(ps, cfg, false);
}

std::array<double, 2> dual_bisection(std::array<double, 2> p_n,
                                     std::array<double, 2> grad_ubar,
                                     double r1, int k) {
    require(r1 > 0.0 && k >= 1, "invalid dual bisection parameters");
    double px = p_n[0], py = p_n[1];
    kernels::dual_bisect_point(px, py, grad_ubar[0], grad_ubar[1], r1, r1 * r1, k);
    return {px, py};
}

std::array<double, 2> primal_dual_steps(const SolverConfig& cfg, double dx) {
    if (cfg.r1 > 0.0 && cfg.r2 > 0.0)
        return {cfg.r1, cfg.r2};
    const double ratio = 4.0 * (0.5 * kTwoPi) * (0.5 * kTwoPi); // 4 pi^2
    double r2 = dx / std::sqrt(6.0 * ratio);
    return {ratio * r2, r2};
}

int bisection_count(double tol, double dx) {
    double target = 1.0 / (tol * dx * dx);
    int k = (int)std::ceil(std::log2(std::max(target, 2.0)));
    return std::clamp(k, 8, 60);
}

namespace {

struct PdParams {
    double r1 = 0.0, r2 = 0.0;
    int k = 0;
    bool nonlinear = false;
};

PdParams pd_params(const ProblemSpec& ps, const SolverConfig& cfg) {
    require(ps.model.kind == EnergyKind::NonlinearMinimalSurface ||
                ps.model.kind == EnergyKind::LinearizedMinimalSurface,
            "primal-dual solver requires a minimal-surface-type model");
    const double dx = ps.boundary.dx;
    PdParams p;
    auto rr = primal_dual_steps(cfg, dx);
    p.r1 = rr[0];
    p.r2 = rr[1];
    require(p.r1 > 0.0 && p.r2 > 0.0, "primal-dual steps must be positive");
    require(p.r1 * p.r2 <= dx * dx / 6.0 * (1.0 + 1e-9),
            "primal-dual steps violate r1*r2 <= dx^2/6");
    p.nonlinear = ps.model.kind == EnergyKind::NonlinearMinimalSurface;
    p.k = cfg.bisection_iters > 0
              ? cfg.bisection_iters
              : bisection_count(residual_threshold(ps, dx, cfg.stopping), dx);
    return p;
}

void pd_dual_and_primal(PrimalDualState& st, const ProblemSpec& ps,
                        const PdParams& par, VectorField& grad, ScalarField& div) {
    const auto& K = kernels::active();
    const std::size_t n = st.u.size();
    K.grad_forward(st.ubar.data(), grad.px.data(), grad.py.data(),
                   st.u.nx, st.u.ny, 1.0 / st.u.dx);
    if (par.nonlinear)
        K.dual_bisect(st.p.px.data(), st.p.py.data(), grad.px.data(), grad.py.data(),
                      n, par.r1, par.k);
    else
        K.dual_linear(st.p.px.data(), st.p.py.data(), grad.px.data(), grad.py.data(),
                      n, par.r1);
    K.div_backward(st.p.px.data(), st.p.py.data(), div.data(),
                   st.u.nx, st.u.ny, 1.0 / st.u.dx);
    st.uprev.values = st.u.values;
    K.axpy(st.u.data(), div.data(), par.r2, n);
    if (ps.model.f) // forcing enters the primal prox: u += r2 (div p + f)
        K.axpy(st.u.data(), ps.model.f->data(), par.r2, n);
    project(st.u, ps);
    pin_boundary(st.u, ps.boundary);
    K.overrelax(st.u.data(), st.uprev.data(), st.ubar.data(), n);
}

} // namespace

PrimalDualState primal_dual_init(const ProblemSpec& ps, const SolverConfig& cfg) {
    ps.validate();
    validate_config(ps, cfg);
    PrimalDualState st;
    st.u = initial_iterate(ps);
    st.uprev = st.u;
    st.ubar = st.u;
    st.p = VectorField(st.u);
    const auto& K = kernels::active();
    K.grad_forward(st.u.data(), st.p.px.data(), st.p.py.data(),
                   st.u.nx, st.u.ny, 1.0 / st.u.dx);
    if (ps.model.kind == EnergyKind::NonlinearMinimalSurface)
        K.ms_flux(st.p.px.data(), st.p.py.data(), st.p.px.data(), st.p.py.data(),
                  st.u.size());
    return st;
}

void primal_dual_step(PrimalDualState& st, const ProblemSpec& ps,
                      const SolverConfig& cfg) {
    PdParams par = pd_params(ps, cfg);
    VectorField grad(st.u);
    ScalarField div(st.u.nx, st.u.ny, st.u.dx);
    pd_dual_and_primal(st, ps, par, grad, div);
}

SolveTrace primal_dual_solve(const ProblemSpec& ps, const SolverConfig& cfg) {
    ps.validate();
    validate_config(ps, cfg);
    const PdParams par = pd_params(ps, cfg);
    const double dx = ps.boundary.dx;
    const double threshold = residual_threshold(ps, dx, cfg.stopping);
    const bool residual_rule = cfg.stopping.kind == StoppingKind::Residual;
    const auto& K = kernels::active();

    auto t0 = Clock::now();
    PrimalDualState st = primal_dual_init(ps, cfg);
    VectorField grad(st.u);
    ScalarField div(st.u.nx, st.u.ny, st.u.dx);

    TraceRecorder rec;
    rec.kfac = 0.5 * dx * dx / (par.r2 * par.r2); // r2 plays the time-step role
    double r0 = rec.record(ps, st.u, st.uprev);
    if (residual_rule && r0 <= threshold) {
        rec.trace.converged = true;
        rec.trace.final = std::move(st.u);
        rec.trace.wall_time = seconds_since(t0);
        return std::move(rec.trace);
    }

    for (long iter = 1; iter <= cfg.max_iters; ++iter) {
        pd_dual_and_primal(st, ps, par, grad, div);
        rec.trace.iterations = iter;
        double r = rec.record(ps, st.u, st.uprev);
        bool done = residual_rule
                        ? r <= threshold
                        : K.max_abs_diff(st.u.data(), st.uprev.data(), st.u.size()) <=
                              cfg.stopping.constant * dx * dx;
        if (done) {
            rec.trace.converged = true;
            break;
        }
    }
    rec.trace.final = std::move(st.u);
    rec.trace.wall_time = seconds_since(t0);
    return std::move(rec.trace);
}

} // namespace pdeaccel
