#pragma once

#include <span>

#include "asph/neighbors.hpp"
#include "asph/particles.hpp"

namespace asph {

enum class InteractionMode;

/// Horizontal no-slip wall: one row of wall particles on the segment plus a
/// dummy grid below it to a depth of at least 2h.
struct WallSpec {
    double y{0.0};
    double x_min{0.0};
    double x_max{0.0};
};

/// Appends wall and dummy particles (spacing dp, knots frozen at (1,2),
/// dummy depth ceil(2h/dp) rows) and builds the nearest-wall mapping for the
/// dummies (ties resolved toward the lowest wall id).
void append_wall_layers(std::vector<Particle>& parts, const WallSpec& spec,
                        double dp, double h, double rho0);

/// Shepard-weighted fluid pressure at a wall particle; 0 when no fluid is in
/// support (denominator below 1e-12).
double wall_pressure(std::size_t i, std::span<const Particle> parts,
                     const NeighborList& nl, InteractionMode mode, double h);

}  // namespace asph
