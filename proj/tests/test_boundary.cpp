#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "asph/boundary.hpp"
#include "asph/sph_core.hpp"

using namespace asph;

namespace {

Particle fluid_at(int id, double x, double y, double dp, double rho = 1000.0) {
    Particle p;
    p.id = id;
    p.kind = Kind::fluid;
    p.x = {x, y};
    p.x0 = p.x;
    p.rho = rho;
    p.m = rho * dp * dp;
    p.dx_acc = p.dy_acc = dp;
    return p;
}

// fluid slab sitting on a wall at y = 0
SimulationState make_slab(double dp, double h, int rows, int cols) {
    SimulationState s;
    s.dp = dp;
    int id = 0;
    for (int j = 1; j <= rows; ++j)
        for (int i = 0; i < cols; ++i)
            s.parts.push_back(fluid_at(id++, (i - 0.5 * (cols - 1)) * dp, j * dp, dp));
    append_wall_layers(s.parts, WallSpec{0.0, -0.5 * cols * dp, 0.5 * cols * dp}, dp,
                       h, 1000.0);
    return s;
}

}  // namespace

TEST_CASE("wall layer geometry") {
    const double dp = 0.1, h = 0.2;
    std::vector<Particle> parts;
    append_wall_layers(parts, WallSpec{0.0, -1.0, 1.0}, dp, h, 1000.0);
    int walls = 0, dummies = 0;
    double deepest = 0.0;
    for (const auto& p : parts) {
        if (p.kind == Kind::wall) {
            ++walls;
            CHECK(p.x.y == 0.0);
        } else {
            REQUIRE(p.kind == Kind::dummy);
            ++dummies;
            deepest = std::min(deepest, p.x.y);
            REQUIRE(p.wall_ref >= 0);
            REQUIRE(parts[p.wall_ref].kind == Kind::wall);
            // nearest wall particle shares the dummy's x position
            CHECK(parts[p.wall_ref].x.x == doctest::Approx(p.x.x));
        }
        CHECK(p.v.x == 0.0);
        CHECK(p.v.y == 0.0);
        CHECK(p.knots.a == 1.0);
        CHECK(p.knots.b == 2.0);
    }
    CHECK(walls > 0);
    CHECK(dummies >= walls);  // at least one full row
    CHECK(-deepest >= 2.0 * h - 1e-12);  // depth covers the kernel support
}

TEST_CASE("wall Shepard pressure") {
    const double dp = 0.1, h = 0.2;
    SimulationState s = make_slab(dp, h, 4, 9);
    SolverParams params;
    params.h = h;
    params.mat.rho0 = 1000.0;
    params.mat.c0 = 12.5;

    SUBCASE("uniform fluid pressure is reproduced") {
        NeighborList nl = build_neighbors(s.parts, 2.0 * h);
        for (auto& p : s.parts)
            if (p.kind == Kind::fluid) p.P = 321.5;
        for (std::size_t i = 0; i < s.parts.size(); ++i)
            if (s.parts[i].kind == Kind::wall) {
                const double P =
                    wall_pressure(i, s.parts, nl, InteractionMode::averaged, h);
                REQUIRE(P == doctest::Approx(321.5).epsilon(1e-12));
            }
    }
    SUBCASE("linear fluid pressure: convex combination of neighbors") {
        NeighborList nl = build_neighbors(s.parts, 2.0 * h);
        for (auto& p : s.parts)
            if (p.kind == Kind::fluid) p.P = 100.0 + 50.0 * p.x.x + 20.0 * p.x.y;
        for (std::size_t i = 0; i < s.parts.size(); ++i) {
            if (s.parts[i].kind != Kind::wall) continue;
            double lo = 1e300, hi = -1e300;
            bool any = false;
            for (const auto& nb : nl.of(i)) {
                if (s.parts[nb.j].kind != Kind::fluid) continue;
                lo = std::min(lo, s.parts[nb.j].P);
                hi = std::max(hi, s.parts[nb.j].P);
                any = true;
            }
            if (!any) continue;
            const double P = wall_pressure(i, s.parts, nl, InteractionMode::averaged, h);
            REQUIRE(P >= lo - 1e-12);
            REQUIRE(P <= hi + 1e-12);
        }
    }
    SUBCASE("no fluid in range gives zero") {
        std::vector<Particle> parts;
        append_wall_layers(parts, WallSpec{0.0, -1.0, 1.0}, dp, h, 1000.0);
        NeighborList nl = build_neighbors(parts, 2.0 * h);
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (parts[i].kind == Kind::wall)
                REQUIRE(wall_pressure(i, parts, nl, InteractionMode::averaged, h) ==
                        0.0);
    }
}

TEST_CASE("dummy particles copy their wall's pressure") {
    const double dp = 0.1, h = 0.2;
    SimulationState s = make_slab(dp, h, 3, 7);
    SolverParams params;
    params.h = h;
    params.mat.rho0 = 1000.0;
    params.mat.c0 = 12.5;
    for (auto& p : s.parts)
        if (p.kind == Kind::fluid) p.rho = 1003.0;  // compressed: positive P
    NeighborList nl = build_neighbors(s.parts, 2.0 * h);
    assemble_pressures(s.parts, nl, params);
    for (const auto& p : s.parts)
        if (p.kind == Kind::dummy) REQUIRE(p.P == s.parts[p.wall_ref].P);
}

TEST_CASE("boundary stays put while densities evolve") {
    const double dp = 0.1, h = 0.2;
    SimulationState s = make_slab(dp, h, 4, 9);
    SolverParams params;
    params.h = h;
    params.dt = 1e-5;
    params.mat.rho0 = 1000.0;
    params.mat.c0 = 12.5;
    params.kernel_mode = KernelMode::standard;

    // fluid moving toward the wall compresses it
    for (auto& p : s.parts)
        if (p.kind == Kind::fluid) p.v = {0.0, -0.5};

    NeighborList nl = build_neighbors(s.parts, 2.0 * h);
    assemble_pressures(s.parts, nl, params);
    Rates r;
    compute_rates(s.parts, nl, params, r, nullptr);
    bool wall_compressing = false;
    for (std::size_t i = 0; i < s.parts.size(); ++i)
        if (s.parts[i].kind == Kind::wall && r.drho[i] > 0.0) wall_compressing = true;
    CHECK(wall_compressing);

    std::vector<Vec2> pos0;
    for (const auto& p : s.parts) pos0.push_back(p.x);
    for (int i = 0; i < 20; ++i) step(s, params);
    for (std::size_t i = 0; i < s.parts.size(); ++i) {
        if (s.parts[i].kind == Kind::fluid) continue;
        REQUIRE(s.parts[i].x.x == pos0[i].x);  // bitwise constant
        REQUIRE(s.parts[i].x.y == pos0[i].y);
        REQUIRE(s.parts[i].v.x == 0.0);
        REQUIRE(s.parts[i].v.y == 0.0);
    }
}

TEST_CASE("Shepard pressure is mass-scale invariant") {
    const double dp = 0.1, h = 0.2;
    SimulationState s = make_slab(dp, h, 4, 9);
    for (auto& p : s.parts)
        if (p.kind == Kind::fluid) p.P = 10.0 + 3.0 * p.x.x;
    NeighborList nl = build_neighbors(s.parts, 2.0 * h);
    std::size_t wi = 0;
    for (std::size_t i = 0; i < s.parts.size(); ++i)
        if (s.parts[i].kind == Kind::wall) wi = i;
    const double before = wall_pressure(wi, s.parts, nl, InteractionMode::averaged, h);
    for (auto& p : s.parts) p.m *= 7.0;
    const double after = wall_pressure(wi, s.parts, nl, InteractionMode::averaged, h);
    CHECK(before == doctest::Approx(after).epsilon(1e-14));
}

TEST_CASE("no particle deficiency near the wall") {
    const double dp = 0.1, h = 0.2;
    SimulationState s = make_slab(dp, h, 6, 21);
    NeighborList nl = build_neighbors(s.parts, 2.0 * h);
    // interior fluid particle right above the wall center: support reaches
    // below y=0 and must be filled by wall/dummy particles
    for (std::size_t i = 0; i < s.parts.size(); ++i) {
        const Particle& p = s.parts[i];
        if (p.kind != Kind::fluid) continue;
        if (std::abs(p.x.x) > 2 * dp || p.x.y > dp * 1.5) continue;
        int below = 0;
        for (const auto& nb : nl.of(i))
            if (s.parts[nb.j].kind != Kind::fluid) ++below;
        REQUIRE(below > 0);
        // a full disc of radius 2h at spacing dp holds ~pi*(2h/dp)^2 particles
        REQUIRE(nl.of(i).size() >= 40);
    }
}
