#pragma once

#include "pdeaccel/grid.hpp"

#include <cstdint>
#include <optional>

namespace pdeaccel {

enum class EnergyKind {
    DirichletQuadratic,      // (b/2)|grad u|^2            [- f u]
    LinearReaction,          // (b/2)|grad u|^2 + (bc/2)u^2 - f u
    NonlinearMinimalSurface, // sqrt(1 + |grad u|^2)        [- f u]
    LinearizedMinimalSurface,// (1/2)|grad u|^2             [- f u]
    HeterogeneousQuadratic,  // (1/2)A^2|grad u|^2          [- f u]
};

/// Discrete integrand description. Integrals are cell sums: weight dx^2
/// over the (nx-1)*(ny-1) nodes owning a full forward-difference stencil.
struct EnergyModel {
    EnergyKind kind = EnergyKind::DirichletQuadratic;
    double b = 1.0; // gradient-term weight (wave speed squared for the flow)
    double c = 0.0; // reaction coefficient, LinearReaction only
    std::optional<ScalarField> f; // volumetric forcing, enters as -f*u
    std::optional<ScalarField> A; // scalar coefficient, HeterogeneousQuadratic only

    static EnergyModel dirichlet(double b = 1.0);
    static EnergyModel linear_reaction(double b, double c);
    static EnergyModel minimal_surface();
    static EnergyModel linearized_minimal_surface();
    static EnergyModel heterogeneous(ScalarField A);

    /// Smallest upper bound on the coefficient of the second-order term,
    /// i.e. the squared wave speed governing the CFL condition.
    double wave_speed_sq_bound() const;
};

/// One variational problem: energy + Dirichlet data + optional obstacles.
/// `boundary` is read on boundary nodes for pinning; for unconstrained
/// problems its interior values also seed the initial iterate.
struct ProblemSpec {
    EnergyModel model;
    ScalarField boundary;
    std::optional<ScalarField> lower; // phi, u >= phi
    std::optional<ScalarField> upper; // psi, u <= psi

    bool constrained() const { return lower.has_value() || upper.has_value(); }
    /// max(|phi|_inf, |psi|_inf); 0 when unconstrained.
    double obstacle_sup() const;
    void validate() const;
};

/// Scratch buffers reused across energy/gradient evaluations of one shape.
struct ModelWorkspace {
    ScalarField px, py, qx, qy, div, asq;
    void prepare(const EnergyModel& model, const ScalarField& like);
};

void check_model_shapes(const EnergyModel& model, const ScalarField& u);

double energy(const EnergyModel& model, const ScalarField& u, ModelWorkspace& ws);
double energy(const EnergyModel& model, const ScalarField& u);

/// Exact gradient of the discrete energy on interior nodes, zero on the
/// boundary: -div(dPhi/dp(grad u)) + dPsi/dz(u).
void energy_gradient(const EnergyModel& model, const ScalarField& u,
                     ScalarField& out, ModelWorkspace& ws);
ScalarField energy_gradient(const EnergyModel& model, const ScalarField& u);

/// Square / circle / line-segment obstacle, values {5, 4.5, 4.5, 0}/scale.
/// The measure-zero segment at x2 = 0.57 lands on the nearest node row.
ScalarField obstacle_phi1(double scale, int nx, int ny, double dx);

/// Two spherical-cap bumps centered at (0.55,0.5) and (0.1,0.5).
ScalarField obstacle_phi2(int nx, int ny, double dx);

struct TorsionProblem {
    ScalarField phi; // -dist(x, boundary)/10
    ScalarField psi; // 0.02
    ScalarField force;
};

/// Elasto-plastic torsion benchmark (already /10-scaled).
TorsionProblem torsion_problem(int nx, int ny, double dx);

/// Piecewise-constant random field on cells_per_side^2 unit cells, values
/// i.i.d. {1, 9} with probability 1/2, one SplitMix64 draw per cell in
/// row-major cell order. Grid resolution must be divisible by the cell count.
ScalarField checkerboard(int cells_per_side, std::uint64_t seed,
                         int nx, int ny, double dx);

/// Discrete area of the graph of u: dx^2 * sum over cells of sqrt(1+|grad u|^2).
double surface_area(const ScalarField& u);

} // namespace pdeaccel
