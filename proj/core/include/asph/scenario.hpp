#pragma once

#include "asph/config.hpp"

namespace asph {

/// Disc of fluid above a no-slip wall, moving down at the impact speed.
/// Periphery particle volumes are scaled uniformly so the disc area is
/// exactly pi R^2.
SimulationState build_drop(const SimulationConfig& cfg);

/// Square patch in rigid rotation with the consistent initial pressure
/// field; densities invert the EOS, no walls, no gravity.
SimulationState build_patch(const SimulationConfig& cfg);

SimulationState build_scenario(const SimulationConfig& cfg);

/// Truncated series for the patch initial pressure at a point
/// (odd m, n up to n_series).
double patch_pressure(double x, double y, double L, double omega, double rho,
                      int n_series);

/// (gamma1, gamma2) from the particle pressure: compressive -> min pair,
/// maximum tension -> max pair, linear in between, clamped.
std::pair<double, double> viscosity_schedule(double P, double P_max_tension,
                                             const SimulationConfig& cfg);

/// max x - min x over fluid particles
double measure_drop_width(const SimulationState& state);

struct ClusteringMetric {
    double min_ratio;  ///< min fluid pair distance / dp
    long close_pairs;  ///< fluid pairs closer than 0.3 dp
};

ClusteringMetric measure_clustering(const SimulationState& state, double dp,
                                    double cutoff);

/// Shepard-normalized kernel interpolation of fluid pressure at a point
/// (standard knots), 0 where no fluid is in range.
double pressure_probe(const SimulationState& state, const Vec2& at, double h);

/// Number of connected components of the fluid cloud with the given
/// linking radius.
int connected_components(const SimulationState& state, double radius);

}  // namespace asph
