#include "asph/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace asph {

NeighborList build_neighbors(std::span<const Particle> parts, double cutoff) {
    const std::size_t n = parts.size();
    NeighborList nl;
    nl.offsets.assign(n + 1, 0);
    if (n == 0) return nl;

    double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
    double xmax = -xmin, ymax = -xmin;
    for (const auto& p : parts) {
        if (!std::isfinite(p.x.x) || !std::isfinite(p.x.y))
            throw std::runtime_error("build_neighbors: non-finite particle position (id " +
                                     std::to_string(p.id) + ")");
        xmin = std::min(xmin, p.x.x);
        xmax = std::max(xmax, p.x.x);
        ymin = std::min(ymin, p.x.y);
        ymax = std::max(ymax, p.x.y);
    }

    const double cell = cutoff;
    const int nx = std::max(1, static_cast<int>((xmax - xmin) / cell) + 1);
    const int ny = std::max(1, static_cast<int>((ymax - ymin) / cell) + 1);
    auto cell_of = [&](const Vec2& x) {
        int cx = std::min(nx - 1, static_cast<int>((x.x - xmin) / cell));
        int cy = std::min(ny - 1, static_cast<int>((x.y - ymin) / cell));
        return cy * nx + cx;
    };

    // counting sort of particle indices into cells
    std::vector<std::uint32_t> cell_count(static_cast<std::size_t>(nx) * ny + 1, 0);
    std::vector<int> pcell(n);
    for (std::size_t i = 0; i < n; ++i) {
        pcell[i] = cell_of(parts[i].x);
        ++cell_count[pcell[i] + 1];
    }
    for (std::size_t c = 1; c < cell_count.size(); ++c) cell_count[c] += cell_count[c - 1];
    std::vector<std::uint32_t> cell_start = cell_count;
    std::vector<std::uint32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[cell_start[pcell[i]]++] = static_cast<std::uint32_t>(i);

    const double cut2 = cutoff * cutoff;
    std::vector<NeighborList::Entry> scratch;
    nl.entries.reserve(n * 16);
    for (std::size_t i = 0; i < n; ++i) {
        scratch.clear();
        const int cx = pcell[i] % nx;
        const int cy = pcell[i] / nx;
        for (int dy = -1; dy <= 1; ++dy) {
            const int yy = cy + dy;
            if (yy < 0 || yy >= ny) continue;
            for (int dx = -1; dx <= 1; ++dx) {
                const int xx = cx + dx;
                if (xx < 0 || xx >= nx) continue;
                const int c = yy * nx + xx;
                for (std::uint32_t s = cell_count[c]; s < cell_count[c + 1]; ++s) {
                    const std::uint32_t j = order[s];
                    if (j == i) continue;
                    const Vec2 d = parts[i].x - parts[j].x;
                    const double r2 = dot(d, d);
                    if (r2 >= cut2) continue;
                    const double r = std::sqrt(r2);
                    Vec2 e = (r > 0.0) ? Vec2{d.x / r, d.y / r} : Vec2{0.0, 0.0};
                    scratch.push_back({j, r, e});
                }
            }
        }
        std::sort(scratch.begin(), scratch.end(),
                  [](const auto& a, const auto& b) { return a.j < b.j; });
        nl.entries.insert(nl.entries.end(), scratch.begin(), scratch.end());
        nl.offsets[i + 1] = static_cast<std::uint32_t>(nl.entries.size());
    }
    return nl;
}

}  // namespace asph
