#include "asph/scenario.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "asph/boundary.hpp"

namespace asph {

namespace {

constexpr double kPi = 3.14159265358979323846;

Particle fluid_particle(int id, Vec2 x, Vec2 v, double rho, double m, double dp) {
    Particle p;
    p.id = id;
    p.kind = Kind::fluid;
    p.x = x;
    p.x0 = x;
    p.v = v;
    p.rho = rho;
    p.m = m;
    p.knots = KnotPair{1.0, 2.0, false};
    p.dx_acc = dp;
    p.dy_acc = dp;
    return p;
}

}  // namespace

std::pair<double, double> viscosity_schedule(double P, double P_max_tension,
                                             const SimulationConfig& cfg) {
    if (cfg.visc_mode == ViscMode::constant) return {cfg.gamma1, cfg.gamma2};
    double t = 0.0;
    if (P < 0.0 && P_max_tension < 0.0) t = std::min(1.0, P / P_max_tension);
    return {cfg.gamma1_min + t * (cfg.gamma1_max - cfg.gamma1_min),
            cfg.gamma2_min + t * (cfg.gamma2_max - cfg.gamma2_min)};
}

SimulationState build_drop(const SimulationConfig& cfg) {
    const double dp = cfg.dp;
    const double R = cfg.drop_radius;
    const double h = cfg.h_factor * dp;
    const Vec2 center{0.0, cfg.drop_height};
    // lattice nodes at integer multiples of dp; the cutoff keeps the
    // periphery row that straddles the circle
    const double cutoff = R + 0.25 * dp;
    const int k = static_cast<int>(cutoff / dp) + 1;

    SimulationState state;
    state.dp = dp;
    std::vector<std::size_t> periphery;
    int id = 0;
    for (int j = -k; j <= k; ++j) {
        for (int i = -k; i <= k; ++i) {
            const double r = std::hypot(i * dp, j * dp);
            if (r > cutoff) continue;
            const Vec2 x = center + Vec2{i * dp, j * dp};
            Particle p = fluid_particle(id++, x, Vec2{0.0, -cfg.impact_speed},
                                        cfg.mat.rho0, 0.0, dp);
            if (r > R - dp) periphery.push_back(state.parts.size());
            state.parts.push_back(p);
        }
    }

    // volumes: dp^2 inside, periphery scaled so the disc area is exact
    const double area = kPi * R * R;
    const std::size_t n_fluid = state.parts.size();
    const double interior_area =
        static_cast<double>(n_fluid - periphery.size()) * dp * dp;
    const double scale =
        periphery.empty()
            ? 1.0
            : (area - interior_area) / (static_cast<double>(periphery.size()) * dp * dp);
    if (!(scale > 0.0)) throw ConfigError("drop: periphery volume scale non-positive");
    for (auto& p : state.parts) p.m = cfg.mat.rho0 * dp * dp;
    for (std::size_t idx : periphery) state.parts[idx].m = cfg.mat.rho0 * dp * dp * scale;

    for (auto& p : state.parts) {
        const auto [g1, g2] = viscosity_schedule(p.P, 0.0, cfg);
        p.av_g1 = g1;
        p.av_g2 = g2;
    }

    append_wall_layers(state.parts,
                       WallSpec{0.0, -cfg.wall_half_width, cfg.wall_half_width}, dp, h,
                       cfg.mat.rho0);
    for (std::size_t i = n_fluid; i < state.parts.size(); ++i) {
        state.parts[i].av_g1 = cfg.gamma1;
        state.parts[i].av_g2 = cfg.gamma2;
    }
    return state;
}

double patch_pressure(double x, double y, double L, double omega, double rho,
                      int n_series) {
    const double xs = x + 0.5 * L;
    const double ys = y + 0.5 * L;
    double sum = 0.0;
    for (int m = 1; m <= n_series; m += 2) {
        for (int n = 1; n <= n_series; n += 2) {
            const double denom =
                (n * kPi / L) * (n * kPi / L) + (m * kPi / L) * (m * kPi / L);
            sum += -(32.0 * omega * omega / (m * n * kPi * kPi)) / denom *
                   std::sin(m * kPi * xs / L) * std::sin(n * kPi * ys / L);
        }
    }
    return rho * sum;
}

SimulationState build_patch(const SimulationConfig& cfg) {
    const double dp = cfg.dp;
    const double L = cfg.patch_L;
    const double omega = cfg.patch_omega;
    const int n = static_cast<int>(std::llround(L / dp));
    if (n < 1) throw ConfigError("patch: dp larger than L");

    SimulationState state;
    state.dp = dp;
    state.parts.reserve(static_cast<std::size_t>(n) * n);
    int id = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const Vec2 x{-0.5 * L + (i + 0.5) * dp, -0.5 * L + (j + 0.5) * dp};
            const Vec2 v{omega * x.y, -omega * x.x};
            const double P =
                patch_pressure(x.x, x.y, L, omega, cfg.mat.rho0, cfg.n_series);
            const double rho = density_from_pressure(P, cfg.mat);
            Particle p = fluid_particle(id++, x, v, rho, rho * dp * dp, dp);
            p.P = P;
            state.parts.push_back(p);
        }
    }

    double pmin = 0.0;
    for (const auto& p : state.parts) pmin = std::min(pmin, p.P);
    state.p_max_tension = pmin;
    for (auto& p : state.parts) {
        const auto [g1, g2] = viscosity_schedule(p.P, pmin, cfg);
        p.av_g1 = g1;
        p.av_g2 = g2;
    }
    return state;
}

SimulationState build_scenario(const SimulationConfig& cfg) {
    return cfg.scenario == ScenarioKind::drop ? build_drop(cfg) : build_patch(cfg);
}

double measure_drop_width(const SimulationState& state) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& p : state.parts) {
        if (p.kind != Kind::fluid) continue;
        lo = std::min(lo, p.x.x);
        hi = std::max(hi, p.x.x);
    }
    return hi > lo ? hi - lo : 0.0;
}

ClusteringMetric measure_clustering(const SimulationState& state, double dp,
                                    double cutoff) {
    const NeighborList nl = build_neighbors(state.parts, cutoff);
    double rmin = cutoff;
    long close = 0;
    for (std::size_t i = 0; i < state.parts.size(); ++i) {
        if (state.parts[i].kind != Kind::fluid) continue;
        for (const auto& nb : nl.of(i)) {
            if (state.parts[nb.j].kind != Kind::fluid) continue;
            if (nb.j <= i) continue;  // count each pair once
            rmin = std::min(rmin, nb.r);
            if (nb.r < 0.3 * dp) ++close;
        }
    }
    return {rmin / dp, close};
}

double pressure_probe(const SimulationState& state, const Vec2& at, double h) {
    const KernelSpec kern(KnotPair{1.0, 2.0, false}, h, 2);
    const double support = kern.support_radius();
    double num = 0.0, den = 0.0;
    for (const auto& p : state.parts) {
        if (p.kind != Kind::fluid) continue;
        const double r = norm(p.x - at);
        if (r >= support) continue;
        const double vw = (p.m / p.rho) * kern.eval(r / h).w;
        num += vw * p.P;
        den += vw;
    }
    return den > 1e-12 ? num / den : 0.0;
}

int connected_components(const SimulationState& state, double radius) {
    const std::size_t n = state.parts.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    const NeighborList nl = build_neighbors(state.parts, radius);
    for (std::size_t i = 0; i < n; ++i) {
        if (state.parts[i].kind != Kind::fluid) continue;
        for (const auto& nb : nl.of(i)) {
            if (state.parts[nb.j].kind != Kind::fluid) continue;
            parent[find(i)] = find(nb.j);
        }
    }
    int comps = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (state.parts[i].kind == Kind::fluid && find(i) == i) ++comps;
    return comps;
}

}  // namespace asph
