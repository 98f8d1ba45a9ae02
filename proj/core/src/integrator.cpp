#include <cmath>
#include <sstream>
#include <stdexcept>

#include "asph/sph_core.hpp"

namespace asph {

namespace {

void check_finite(const SimulationState& state) {
    for (const auto& p : state.parts) {
        const bool ok = std::isfinite(p.x.x) && std::isfinite(p.x.y) &&
                        std::isfinite(p.v.x) && std::isfinite(p.v.y) &&
                        std::isfinite(p.rho) && p.rho > 0.0 &&
                        std::isfinite(p.tau_p.xx) && std::isfinite(p.tau_p.yy) &&
                        std::isfinite(p.tau_p.xy);
        if (!ok) {
            std::ostringstream os;
            os << "non-finite state at t=" << state.time << " step=" << state.step_count
               << " particle id=" << p.id << " kind=" << static_cast<int>(p.kind)
               << " x=(" << p.x.x << "," << p.x.y << ") v=(" << p.v.x << "," << p.v.y
               << ") rho=" << p.rho << " tau_p=(" << p.tau_p.xx << "," << p.tau_p.yy
               << "," << p.tau_p.xy << ")";
            throw std::runtime_error(os.str());
        }
    }
}

void apply_update(SimulationState& state, const std::vector<Particle>& base,
                  const Rates& ra, const Rates& rb, double w_a, double w_b,
                  double dt) {
    for (std::size_t i = 0; i < state.parts.size(); ++i) {
        Particle& p = state.parts[i];
        const Particle& b = base[i];
        const double drho = w_a * ra.drho[i] + w_b * rb.drho[i];
        p.rho = b.rho + dt * drho;
        if (p.kind != Kind::fluid) continue;  // boundary stays put, density only
        const Vec2 dv = w_a * ra.dv[i] + w_b * rb.dv[i];
        const Vec2 dx = w_a * b.v + w_b * state.parts[i].v;  // corrector: mean velocity
        p.v = b.v + dt * dv;
        p.x = b.x + dt * dx;
        p.tau_p = b.tau_p + dt * (w_a * ra.dtau[i] + w_b * rb.dtau[i]);
    }
}

}  // namespace

void step(SimulationState& state, const SolverParams& params) {
    const double dt = params.dt;
    const double cutoff = 2.0 * params.h;

    update_knots(state.parts, params);

    const std::vector<Particle> base = state.parts;

    // predictor rates at t
    NeighborList nl = build_neighbors(state.parts, cutoff);
    assemble_pressures(state.parts, nl, params);
    Rates ra;
    compute_rates(state.parts, nl, params, ra, &state.correction_fallbacks);

    // predictor: full Euler step
    for (std::size_t i = 0; i < state.parts.size(); ++i) {
        Particle& p = state.parts[i];
        const Particle& b = base[i];
        p.rho = b.rho + dt * ra.drho[i];
        if (p.kind != Kind::fluid) continue;
        p.v = b.v + dt * ra.dv[i];
        p.x = b.x + dt * b.v;
        p.tau_p = b.tau_p + dt * ra.dtau[i];
    }

    // corrector rates at the predicted state
    nl = build_neighbors(state.parts, cutoff);
    assemble_pressures(state.parts, nl, params);
    Rates rb;
    compute_rates(state.parts, nl, params, rb, &state.correction_fallbacks);

    apply_update(state, base, ra, rb, 0.5, 0.5, dt);

    // strain accumulators advance with the beginning-of-step strain rates
    for (std::size_t i = 0; i < state.parts.size(); ++i)
        if (state.parts[i].kind == Kind::fluid)
            accumulate_strain(state.parts[i], ra.gradv[i], dt);

    state.time += dt;
    ++state.step_count;

    const bool reinit =
        params.reinit_every > 0 && state.step_count % params.reinit_every == 0;
    bool has_boundary = false;
    for (const auto& p : state.parts)
        if (p.kind != Kind::fluid) {
            has_boundary = true;
            break;
        }

    // refresh pressures so observers see the updated state; wall Shepard
    // interpolation (and MLS, if due) need a rebuilt neighbor list
    if (reinit || has_boundary) {
        nl = build_neighbors(state.parts, cutoff);
        if (reinit) mls_density_reinit(state.parts, nl, params, &state.mls_fallbacks);
        assemble_pressures(state.parts, nl, params);
    } else {
        for (auto& p : state.parts) p.P = pressure_eos(p.rho, params.mat);
    }

    check_finite(state);
}

}  // namespace asph
