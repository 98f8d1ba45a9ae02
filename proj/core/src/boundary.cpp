#include "asph/boundary.hpp"

#include <cmath>
#include <limits>

#include "asph/sph_core.hpp"

namespace asph {

void append_wall_layers(std::vector<Particle>& parts, const WallSpec& spec,
                        double dp, double h, double rho0) {
    const int n_along = static_cast<int>(std::round((spec.x_max - spec.x_min) / dp)) + 1;
    const int n_rows = static_cast<int>(std::ceil(2.0 * h / dp));

    auto make = [&](Kind kind, double x, double y) {
        Particle p;
        p.id = static_cast<int>(parts.size());
        p.kind = kind;
        p.x = {x, y};
        p.x0 = p.x;
        p.rho = rho0;
        p.m = rho0 * dp * dp;
        p.knots = {1.0, 2.0, false};
        p.dx_acc = dp;
        p.dy_acc = dp;
        parts.push_back(p);
    };

    const std::size_t wall_begin = parts.size();
    for (int i = 0; i < n_along; ++i) make(Kind::wall, spec.x_min + i * dp, spec.y);
    const std::size_t wall_end = parts.size();

    for (int row = 1; row <= n_rows; ++row)
        for (int i = 0; i < n_along; ++i)
            make(Kind::dummy, spec.x_min + i * dp, spec.y - row * dp);

    // nearest-wall mapping for the dummies; ties go to the lowest wall id
    for (std::size_t d = wall_end; d < parts.size(); ++d) {
        double best = std::numeric_limits<double>::infinity();
        int best_idx = -1;
        for (std::size_t w = wall_begin; w < wall_end; ++w) {
            const Vec2 dxy = parts[d].x - parts[w].x;
            const double r2 = dot(dxy, dxy);
            if (r2 < best) {
                best = r2;
                best_idx = static_cast<int>(w);
            }
        }
        parts[d].wall_ref = best_idx;
    }
}

double wall_pressure(std::size_t i, std::span<const Particle> parts,
                     const NeighborList& nl, InteractionMode mode, double h) {
    double num = 0.0, den = 0.0;
    for (const auto& nb : nl.of(i)) {
        const Particle& pj = parts[nb.j];
        if (pj.kind != Kind::fluid) continue;
        const double w = pair_kernel(parts[i], pj, mode, h).eval(nb.r / h).w;
        const double vw = (pj.m / pj.rho) * w;
        num += vw * pj.P;
        den += vw;
    }
    return (den > 1e-12) ? num / den : 0.0;
}

}  // namespace asph
