#pragma once

#include <span>
#include <vector>

#include "asph/constitutive.hpp"
#include "asph/neighbors.hpp"
#include "asph/particles.hpp"

namespace asph {

enum class InteractionMode { averaged, per_particle };
enum class StrainMode { viscous, inviscid };
enum class KernelMode { standard, adaptive };

struct SolverParams {
    MaterialParams mat;
    double h{0.0};
    double dt{0.0};
    double knot_multiplier{1.05};  ///< A in r* = A r_i
    bool allow_extension{true};
    KernelMode kernel_mode{KernelMode::adaptive};
    InteractionMode interaction{InteractionMode::averaged};
    StrainMode strain_mode{StrainMode::viscous};
    bool gradient_correction{false};
    double av_eps{0.01};
    int reinit_every{0};  ///< MLS density reinitialization cadence in steps, 0 = off
};

/// Kernel used for an i-j interaction: averaged knots or particle i's own.
KernelSpec pair_kernel(const Particle& pi, const Particle& pj,
                       InteractionMode mode, double h);

/// Monaghan-type pair viscosity; zero for receding pairs (x_ij . v_ij >= 0).
double artificial_viscosity(const Vec2& x_ij, const Vec2& v_ij, double cbar,
                            double rhobar, double gamma1, double gamma2,
                            double eps, double h);

/// Per-particle gradient renormalization matrices; identity where the moment
/// matrix is singular or badly conditioned (events counted in state).
std::vector<Mat2> gradient_correction_matrices(std::span<const Particle> parts,
                                               const NeighborList& nl,
                                               const SolverParams& params,
                                               long* fallback_count);

struct Rates {
    std::vector<double> drho;
    std::vector<Vec2> dv;
    std::vector<SymTensor2> dtau;
    std::vector<Mat2> gradv;  ///< fluid velocity gradients (corrected form if enabled)
};

/// Fluid pressures from the EOS, wall pressures by Shepard interpolation of
/// fluid neighbors, dummy pressures copied from the mapped wall particle.
void assemble_pressures(std::span<Particle> parts, const NeighborList& nl,
                        const SolverParams& params);

/// All SPH rates from an immutable snapshot: continuity for every particle,
/// momentum and polymer stress rate for fluid particles.
void compute_rates(std::span<const Particle> parts, const NeighborList& nl,
                   const SolverParams& params, Rates& out, long* correction_fallbacks);

/// Advance the per-particle edge-length and shear accumulators by one step.
void accumulate_strain(Particle& p, const Mat2& gradv, double dt);

/// Farthest-immediate-neighbour distance from the strain accumulators.
double farthest_neighbor_distance(const Particle& p, StrainMode mode);

/// Adapt fluid knots from the accumulators (no-op in standard kernel mode;
/// wall/dummy knots stay frozen at (1, 2)).
void update_knots(std::span<Particle> parts, const SolverParams& params);

/// MLS (linear basis) density reinitialization of fluid particles; falls back
/// to plain summation density where the moment matrix is singular.
void mls_density_reinit(std::span<Particle> parts, const NeighborList& nl,
                        const SolverParams& params, long* fallback_count);

/// Kinetic + gravitational (relative to initial positions) + compressive
/// internal energy of the fluid particles.
double total_energy(std::span<const Particle> parts, const MaterialParams& mat);

/// One predictor-corrector (modified Euler) step. Knots are updated once
/// before rate evaluation; MLS reinitialization runs on its cadence.
/// Throws with a particle diagnostic if the state leaves the finite range.
void step(SimulationState& state, const SolverParams& params);

}  // namespace asph
