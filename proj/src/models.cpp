#include "pdeaccel/models.hpp"

#include "pdeaccel/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace pdeaccel {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

EnergyModel EnergyModel::dirichlet(double b) {
    EnergyModel m;
    m.kind = EnergyKind::DirichletQuadratic;
    m.b = b;
    return m;
}

EnergyModel EnergyModel::linear_reaction(double b, double c) {
    EnergyModel m;
    m.kind = EnergyKind::LinearReaction;
    m.b = b;
    m.c = c;
    return m;
}

EnergyModel EnergyModel::minimal_surface() {
    EnergyModel m;
    m.kind = EnergyKind::NonlinearMinimalSurface;
    return m;
}

EnergyModel EnergyModel::linearized_minimal_surface() {
    EnergyModel m;
    m.kind = EnergyKind::LinearizedMinimalSurface;
    return m;
}

EnergyModel EnergyModel::heterogeneous(ScalarField A) {
    EnergyModel m;
    m.kind = EnergyKind::HeterogeneousQuadratic;
    m.A = std::move(A);
    return m;
}

double EnergyModel::wave_speed_sq_bound() const {
    switch (kind) {
    case EnergyKind::HeterogeneousQuadratic: {
        double amax = 0.0;
        for (double a : A->values)
            amax = std::max(amax, std::fabs(a));
        return b * amax * amax;
    }
    case EnergyKind::NonlinearMinimalSurface:
        return b; // d2/dp2 sqrt(1+p^2) <= 1
    default:
        return b;
    }
}

double ProblemSpec::obstacle_sup() const {
    double s = 0.0;
    if (lower)
        s = std::max(s, linf_norm(*lower));
    if (upper)
        s = std::max(s, linf_norm(*upper));
    return s;
}

void ProblemSpec::validate() const {
    require(model.b > 0.0, "model coefficient b must be positive");
    require(model.c >= 0.0, "reaction coefficient c must be nonnegative");
    check_model_shapes(model, boundary);
    if (model.kind == EnergyKind::HeterogeneousQuadratic) {
        require(model.A.has_value(), "heterogeneous model needs a coefficient field");
        for (double a : model.A->values)
            require(a > 0.0, "coefficient field A must be positive");
    } else {
        require(!model.A.has_value(), "coefficient field only valid for the heterogeneous model");
    }
    if (model.kind != EnergyKind::LinearReaction)
        require(model.c == 0.0, "reaction coefficient only valid for the reaction model");
    if (lower)
        require_same_shape(*lower, boundary, "lower obstacle");
    if (upper)
        require_same_shape(*upper, boundary, "upper obstacle");
    if (lower && upper) {
        for (std::size_t k = 0; k < lower->size(); ++k)
            require(lower->values[k] <= upper->values[k],
                    "obstacles must satisfy phi <= psi everywhere");
    }
    const ScalarField& g = boundary;
    for (int i = 0; i < g.ny; ++i) {
        for (int j = 0; j < g.nx; ++j) {
            if (!g.is_boundary(i, j))
                continue;
            if (lower)
                require((*lower)(i, j) <= g(i, j),
                        "obstacle must satisfy phi <= g on the boundary");
            if (upper)
                require(g(i, j) <= (*upper)(i, j),
                        "obstacle must satisfy g <= psi on the boundary");
        }
    }
}

void check_model_shapes(const EnergyModel& model, const ScalarField& u) {
    if (model.f)
        require_same_shape(*model.f, u, "forcing field");
    if (model.A)
        require_same_shape(*model.A, u, "coefficient field");
}

void ModelWorkspace::prepare(const EnergyModel& model, const ScalarField& like) {
    if (!px.same_shape(like)) {
        px = ScalarField(like.nx, like.ny, like.dx);
        py = px;
        qx = px;
        qy = px;
        div = px;
        asq = ScalarField();
    }
    if (model.kind == EnergyKind::HeterogeneousQuadratic && !asq.same_shape(like)) {
        asq = ScalarField(like.nx, like.ny, like.dx);
        for (std::size_t k = 0; k < asq.size(); ++k) {
            double a = model.A->values[k];
            asq.values[k] = a * a;
        }
    }
}

double energy(const EnergyModel& model, const ScalarField& u, ModelWorkspace& ws) {
    check_model_shapes(model, u);
    ws.prepare(model, u);
    const auto& K = kernels::active();
    K.grad_forward(u.data(), ws.px.data(), ws.py.data(), u.nx, u.ny, 1.0 / u.dx);

    double grad_term = 0.0;
    double zero_order = 0.0;
    switch (model.kind) {
    case EnergyKind::DirichletQuadratic:
        grad_term = 0.5 * model.b * K.sum_pair_sq_cells(ws.px.data(), ws.py.data(), u.nx, u.ny);
        break;
    case EnergyKind::LinearReaction:
        grad_term = 0.5 * model.b * K.sum_pair_sq_cells(ws.px.data(), ws.py.data(), u.nx, u.ny);
        zero_order = 0.5 * model.b * model.c * K.sum_sq_cells(u.data(), u.nx, u.ny);
        break;
    case EnergyKind::NonlinearMinimalSurface:
        grad_term = K.sum_sqrt1p_cells(ws.px.data(), ws.py.data(), u.nx, u.ny);
        break;
    case EnergyKind::LinearizedMinimalSurface:
        grad_term = 0.5 * K.sum_pair_sq_cells(ws.px.data(), ws.py.data(), u.nx, u.ny);
        break;
    case EnergyKind::HeterogeneousQuadratic:
        grad_term = 0.5 * K.sum_wpair_sq_cells(ws.asq.data(), ws.px.data(), ws.py.data(),
                                               u.nx, u.ny);
        break;
    }
    double forcing = model.f ? K.dot_cells(model.f->data(), u.data(), u.nx, u.ny) : 0.0;
    return (grad_term + zero_order - forcing) * (u.dx * u.dx);
}

double energy(const EnergyModel& model, const ScalarField& u) {
    ModelWorkspace ws;
    return energy(model, u, ws);
}

void energy_gradient(const EnergyModel& model, const ScalarField& u,
                     ScalarField& out, ModelWorkspace& ws) {
    check_model_shapes(model, u);
    ws.prepare(model, u);
    if (!out.same_shape(u))
        out = ScalarField(u.nx, u.ny, u.dx);
    const auto& K = kernels::active();
    const std::size_t n = u.size();
    K.grad_forward(u.data(), ws.px.data(), ws.py.data(), u.nx, u.ny, 1.0 / u.dx);

    const double* fx = ws.px.data();
    const double* fy = ws.py.data();
    switch (model.kind) {
    case EnergyKind::NonlinearMinimalSurface:
        K.ms_flux(ws.px.data(), ws.py.data(), ws.qx.data(), ws.qy.data(), n);
        fx = ws.qx.data();
        fy = ws.qy.data();
        break;
    case EnergyKind::HeterogeneousQuadratic:
        K.scale_pair_field(ws.asq.data(), ws.px.data(), ws.py.data(),
                           ws.qx.data(), ws.qy.data(), n);
        fx = ws.qx.data();
        fy = ws.qy.data();
        break;
    default:
        break; // quadratic models: flux is b * grad, with b folded in below
    }
    K.div_backward(fx, fy, ws.div.data(), u.nx, u.ny, 1.0 / u.dx);

    const double* d = ws.div.data();
    const double* f = model.f ? model.f->data() : nullptr;
    double* g = out.data();
    switch (model.kind) {
    case EnergyKind::DirichletQuadratic:
    case EnergyKind::LinearizedMinimalSurface: {
        double b = model.kind == EnergyKind::DirichletQuadratic ? model.b : 1.0;
        if (f)
            for (std::size_t k = 0; k < n; ++k)
                g[k] = -b * d[k] - f[k];
        else
            for (std::size_t k = 0; k < n; ++k)
                g[k] = -b * d[k];
        break;
    }
    case EnergyKind::LinearReaction: {
        double bc = model.b * model.c;
        const double* uv = u.data();
        if (f)
            for (std::size_t k = 0; k < n; ++k)
                g[k] = -model.b * d[k] + bc * uv[k] - f[k];
        else
            for (std::size_t k = 0; k < n; ++k)
                g[k] = -model.b * d[k] + bc * uv[k];
        break;
    }
    case EnergyKind::NonlinearMinimalSurface:
    case EnergyKind::HeterogeneousQuadratic:
        if (f)
            for (std::size_t k = 0; k < n; ++k)
                g[k] = -d[k] - f[k];
        else
            for (std::size_t k = 0; k < n; ++k)
                g[k] = -d[k];
        break;
    }
    zero_boundary(out);
}

ScalarField energy_gradient(const EnergyModel& model, const ScalarField& u) {
    ModelWorkspace ws;
    ScalarField out;
    energy_gradient(model, u, out, ws);
    return out;
}

ScalarField obstacle_phi1(double scale, int nx, int ny, double dx) {
    require(scale > 0.0, "obstacle scale must be positive");
    ScalarField phi(nx, ny, dx, 0.0);
    const int segment_row = std::min<int>(ny - 1, std::max<int>(0, (int)std::lround(0.57 / dx)));
    for (int i = 0; i < ny; ++i) {
        double x2 = phi.y(i);
        for (int j = 0; j < nx; ++j) {
            double x1 = phi.x(j);
            double v = 0.0;
            if (std::fabs(x1 - 0.6) + std::fabs(x2 - 0.6) < 0.04)
                v = 5.0;
            else if ((x1 - 0.6) * (x1 - 0.6) + (x2 - 0.25) * (x2 - 0.25) < 0.001)
                v = 4.5;
            else if (i == segment_row && x1 > 0.075 && x1 < 0.13)
                v = 4.5;
            phi(i, j) = v / scale;
        }
    }
    return phi;
}

ScalarField obstacle_phi2(int nx, int ny, double dx) {
    ScalarField phi(nx, ny, dx);
    const double Px = 0.55, Py = 0.5, Qx = 0.1, Qy = 0.5;
    for (int i = 0; i < ny; ++i) {
        double x2 = phi.y(i);
        for (int j = 0; j < nx; ++j) {
            double x1 = phi.x(j);
            double dp = (x1 - Px) * (x1 - Px) + (x2 - Py) * (x2 - Py);
            double dq = (x1 - Qx) * (x1 - Qx) + (x2 - Qy) * (x2 - Qy);
            double tp = 1.0 - dp / 0.09;
            double tq = 1.0 - dq / 0.0025;
            phi(i, j) = std::sqrt(tp > 0.0 ? tp : 0.0) + std::sqrt(tq > 0.0 ? tq : 0.0);
        }
    }
    return phi;
}

namespace {

// Six-piece sawtooth helper of the torsion forcing.
double torsion_g(double x1) {
    if (x1 <= 1.0 / 6.0)
        return 6.0 * x1;
    if (x1 <= 1.0 / 3.0)
        return 2.0 * (1.0 - 3.0 * x1);
    if (x1 <= 0.5)
        return 6.0 * (x1 - 1.0 / 3.0);
    if (x1 <= 2.0 / 3.0)
        return 2.0 * (1.0 - 3.0 * (x1 - 1.0 / 3.0));
    if (x1 <= 5.0 / 6.0)
        return 6.0 * (x1 - 2.0 / 3.0);
    return 2.0 * (1.0 - 3.0 * (x1 - 2.0 / 3.0));
}

} // namespace

TorsionProblem torsion_problem(int nx, int ny, double dx) {
    TorsionProblem t{ScalarField(nx, ny, dx), ScalarField(nx, ny, dx, 0.02),
                     ScalarField(nx, ny, dx)};
    for (int i = 0; i < ny; ++i) {
        double x2 = t.phi.y(i);
        for (int j = 0; j < nx; ++j) {
            double x1 = t.phi.x(j);
            double dist = std::min(std::min(x1, 1.0 - x1), std::min(x2, 1.0 - x2));
            t.phi(i, j) = -dist / 10.0;
            double v;
            if (std::fabs(x1 - x2) <= 0.1 && x1 <= 0.3)
                v = 300.0;
            else if (x1 <= 1.0 - x2)
                v = -70.0 * std::exp(x2) * torsion_g(x1);
            else
                v = 15.0 * std::exp(x2) * torsion_g(x1);
            t.force(i, j) = v / 10.0;
        }
    }
    return t;
}

ScalarField checkerboard(int cells_per_side, std::uint64_t seed,
                         int nx, int ny, double dx) {
    require(cells_per_side >= 1, "checkerboard needs at least one cell");
    require(nx % cells_per_side == 0 && ny % cells_per_side == 0,
            "grid resolution must be an integer multiple of the cell count");
    std::vector<double> cell(std::size_t(cells_per_side) * cells_per_side);
    std::uint64_t state = seed;
    for (auto& c : cell)
        c = (splitmix64(state) >> 63) ? 9.0 : 1.0;

    ScalarField A(nx, ny, dx);
    for (int i = 0; i < ny; ++i) {
        int ci = std::min(cells_per_side - 1, (int)std::floor(A.y(i) * cells_per_side));
        for (int j = 0; j < nx; ++j) {
            int cj = std::min(cells_per_side - 1, (int)std::floor(A.x(j) * cells_per_side));
            A(i, j) = cell[std::size_t(ci) * cells_per_side + cj];
        }
    }
    return A;
}

double surface_area(const ScalarField& u) {
    VectorField p = forward_gradient(u);
    double s = kernels::active().sum_sqrt1p_cells(p.px.data(), p.py.data(), u.nx, u.ny);
    return s * (u.dx * u.dx);
}

} // namespace pdeaccel
