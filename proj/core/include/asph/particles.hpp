#pragma once

#include <cstdint>
#include <vector>

#include "asph/kernel.hpp"
#include "asph/math2d.hpp"

namespace asph {

enum class Kind : std::uint8_t { fluid = 0, wall = 1, dummy = 2 };

struct Particle {
    int id{0};
    Kind kind{Kind::fluid};
    Vec2 x{};        ///< position, m
    Vec2 v{};        ///< velocity, m/s
    double rho{0.0};
    double m{0.0};
    double P{0.0};
    SymTensor2 tau_p{};
    KnotPair knots{};
    // strain accumulators for the farthest-immediate-neighbour estimate;
    // dx/dy start at the grid spacings, shear accumulators at zero
    double dx_acc{0.0};
    double dy_acc{0.0};
    double sxy_acc{0.0};
    double syx_acc{0.0};
    Vec2 x0{};           ///< initial position (potential-energy datum)
    int wall_ref{-1};    ///< for dummies: index of nearest wall particle
    // artificial-viscosity intensities, assigned once at scenario setup
    double av_g1{0.0};
    double av_g2{0.0};
};

struct SimulationState {
    std::vector<Particle> parts;
    double time{0.0};
    long step_count{0};
    double dp{0.0};             ///< initial grid spacing
    double p_max_tension{0.0};  ///< most-negative initial pressure (schedule anchor)
    // degenerate-neighborhood event counters
    long correction_fallbacks{0};
    long mls_fallbacks{0};
};

}  // namespace asph
