#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "asph/particles.hpp"

namespace asph {

/// Flattened neighbor list with cached pair geometry. The entry order for a
/// given particle is ascending in neighbor index, so pair sums are
/// deterministic regardless of how the cell bins were filled.
struct NeighborList {
    struct Entry {
        std::uint32_t j;
        double r;   ///< |x_i - x_j|
        Vec2 e;     ///< (x_i - x_j)/r
    };
    std::vector<std::uint32_t> offsets;  // size n+1
    std::vector<Entry> entries;

    std::span<const Entry> of(std::size_t i) const {
        return {entries.data() + offsets[i], entries.data() + offsets[i + 1]};
    }
};

/// Uniform-grid cell binning with exact cutoff: pairs satisfy |x_i-x_j| < cutoff.
/// Throws on non-finite positions.
NeighborList build_neighbors(std::span<const Particle> parts, double cutoff);

}  // namespace asph
