#include <cmath>

#include "asph/boundary.hpp"
#include "asph/sph_core.hpp"

namespace asph {

KernelSpec pair_kernel(const Particle& pi, const Particle& pj,
                       InteractionMode mode, double h) {
    if (mode == InteractionMode::averaged) {
        KnotPair k{0.5 * (pi.knots.a + pj.knots.a), 0.5 * (pi.knots.b + pj.knots.b),
                   false};
        k.extended = k.b > 2.0;
        return KernelSpec(k, h, 2);
    }
    return KernelSpec(pi.knots, h, 2);
}

double artificial_viscosity(const Vec2& x_ij, const Vec2& v_ij, double cbar,
                            double rhobar, double gamma1, double gamma2,
                            double eps, double h) {
    const double vx = dot(v_ij, x_ij);
    if (vx >= 0.0) return 0.0;
    const double mu = h * vx / (dot(x_ij, x_ij) + eps * h * h);
    return (-gamma1 * cbar * mu + gamma2 * mu * mu) / rhobar;
}

void assemble_pressures(std::span<Particle> parts, const NeighborList& nl,
                        const SolverParams& params) {
    for (auto& p : parts)
        if (p.kind == Kind::fluid) p.P = pressure_eos(p.rho, params.mat);
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].kind == Kind::wall)
            parts[i].P = wall_pressure(i, parts, nl, params.interaction, params.h);
    for (auto& p : parts)
        if (p.kind == Kind::dummy && p.wall_ref >= 0) p.P = parts[p.wall_ref].P;
}

namespace {

// dW/dr for every neighbor-list entry, one kernel evaluation per pair slot
std::vector<double> pair_dw(std::span<const Particle> parts, const NeighborList& nl,
                            const SolverParams& params) {
    std::vector<double> dws(nl.entries.size());
    const double inv_h = 1.0 / params.h;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::uint32_t e = nl.offsets[i]; e < nl.offsets[i + 1]; ++e) {
            const auto& nb = nl.entries[e];
            dws[e] = pair_kernel(parts[i], parts[nb.j], params.interaction, params.h)
                         .eval(nb.r * inv_h)
                         .dw;
        }
    }
    return dws;
}

std::vector<Mat2> correction_from_dw(std::span<const Particle> parts,
                                     const NeighborList& nl,
                                     std::span<const double> dws,
                                     long* fallback_count) {
    const std::size_t n = parts.size();
    std::vector<Mat2> out(n, Mat2{1, 0, 0, 1});
    for (std::size_t i = 0; i < n; ++i) {
        if (parts[i].kind != Kind::fluid) continue;
        double lxx = 0, lxy = 0, lyy = 0;
        for (std::uint32_t e = nl.offsets[i]; e < nl.offsets[i + 1]; ++e) {
            const auto& nb = nl.entries[e];
            const Particle& pj = parts[nb.j];
            const double s = -(pj.m / pj.rho) * nb.r * dws[e];
            lxx += s * nb.e.x * nb.e.x;
            lxy += s * nb.e.x * nb.e.y;
            lyy += s * nb.e.y * nb.e.y;
        }
        const double tr = lxx + lyy;
        const double det = lxx * lyy - lxy * lxy;
        const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
        const double lmin = 0.5 * tr - disc;
        const double lmax = 0.5 * tr + disc;
        if (!(lmin > 0.0) || lmax > 1e8 * lmin) {
            if (fallback_count) ++(*fallback_count);
            continue;  // identity
        }
        out[i] = Mat2{lyy / det, -lxy / det, -lxy / det, lxx / det};
    }
    return out;
}

}  // namespace

std::vector<Mat2> gradient_correction_matrices(std::span<const Particle> parts,
                                               const NeighborList& nl,
                                               const SolverParams& params,
                                               long* fallback_count) {
    return correction_from_dw(parts, nl, pair_dw(parts, nl, params), fallback_count);
}

void compute_rates(std::span<const Particle> parts, const NeighborList& nl,
                   const SolverParams& params, Rates& out, long* correction_fallbacks) {
    const std::size_t n = parts.size();
    const MaterialParams& mat = params.mat;
    out.drho.assign(n, 0.0);
    out.dv.assign(n, Vec2{});
    out.dtau.assign(n, SymTensor2{});
    out.gradv.assign(n, Mat2{});

    const std::vector<double> dws = pair_dw(parts, nl, params);

    std::vector<Mat2> corr;
    if (params.gradient_correction)
        corr = correction_from_dw(parts, nl, dws, correction_fallbacks);

    std::vector<double> cs(n);
    for (std::size_t i = 0; i < n; ++i) cs[i] = sound_speed(parts[i].rho, mat);

    // velocity gradients first (stress assembly needs them everywhere)
    for (std::size_t i = 0; i < n; ++i) {
        if (parts[i].kind != Kind::fluid) continue;
        Mat2 k{};
        for (std::uint32_t e = nl.offsets[i]; e < nl.offsets[i + 1]; ++e) {
            const auto& nb = nl.entries[e];
            const Particle& pj = parts[nb.j];
            Vec2 grad{dws[e] * nb.e.x, dws[e] * nb.e.y};
            if (params.gradient_correction) grad = corr[i] * grad;
            const double vol = pj.m / pj.rho;
            const Vec2 dvj = pj.v - parts[i].v;
            k.xx += vol * dvj.x * grad.x;
            k.xy += vol * dvj.x * grad.y;
            k.yx += vol * dvj.y * grad.x;
            k.yy += vol * dvj.y * grad.y;
        }
        out.gradv[i] = k;
    }

    // total stress per particle: fluid -P I + tau_s + theta tau_p, boundary -P I
    std::vector<SymTensor2> sigma(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (parts[i].kind == Kind::fluid) {
            StressState st;
            st.pressure = parts[i].P;
            st.tau_s = solvent_stress(out.gradv[i], mat);
            st.tau_p = parts[i].tau_p;
            sigma[i] = st.total(mat.theta);
        } else {
            sigma[i] = {-parts[i].P, -parts[i].P, 0.0};
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        const Particle& pi = parts[i];
        const bool fluid = pi.kind == Kind::fluid;
        const double inv_rho2_i = 1.0 / (pi.rho * pi.rho);
        double drho = 0.0;
        Vec2 acc{};
        for (std::uint32_t e = nl.offsets[i]; e < nl.offsets[i + 1]; ++e) {
            const auto& nb = nl.entries[e];
            const Particle& pj = parts[nb.j];
            Vec2 grad{dws[e] * nb.e.x, dws[e] * nb.e.y};
            if (params.gradient_correction) grad = corr[i] * grad;
            const Vec2 vij = pi.v - pj.v;
            drho += pj.m * dot(vij, grad);
            if (!fluid) continue;
            const Vec2 xij{nb.r * nb.e.x, nb.r * nb.e.y};
            const double pi_visc = artificial_viscosity(
                xij, vij, 0.5 * (cs[i] + cs[nb.j]), 0.5 * (pi.rho + pj.rho),
                0.5 * (pi.av_g1 + pj.av_g1), 0.5 * (pi.av_g2 + pj.av_g2),
                params.av_eps, params.h);
            SymTensor2 s = inv_rho2_i * sigma[i] + (1.0 / (pj.rho * pj.rho)) * sigma[nb.j];
            s.xx -= pi_visc;
            s.yy -= pi_visc;
            acc += pj.m * (s * grad);
        }
        out.drho[i] = drho;
        if (fluid) {
            out.dv[i] = acc + mat.gravity;
            if (mat.theta != 0.0)
                out.dtau[i] = polymer_stress_rate(pi.tau_p, out.gradv[i], mat);
        }
    }
}

void accumulate_strain(Particle& p, const Mat2& gradv, double dt) {
    const double exx = gradv.xx;
    const double eyy = gradv.yy;
    const double exy = 0.5 * (gradv.xy + gradv.yx);
    const double dx_prev = p.dx_acc;
    const double dy_prev = p.dy_acc;
    p.dx_acc = dx_prev * (1.0 + exx * dt);
    p.dy_acc = dy_prev * (1.0 + eyy * dt);
    p.sxy_acc += exy * dy_prev * dt;
    p.syx_acc += exy * dx_prev * dt;
}

double farthest_neighbor_distance(const Particle& p, StrainMode mode) {
    if (mode == StrainMode::inviscid)
        return std::sqrt(p.dx_acc * p.dx_acc + p.dy_acc * p.dy_acc);
    const double s1 = std::hypot(p.dx_acc + p.sxy_acc, p.dy_acc + p.syx_acc);
    const double s2 = std::hypot(p.dx_acc - p.sxy_acc, p.dy_acc - p.syx_acc);
    return std::max(s1, s2);
}

void update_knots(std::span<Particle> parts, const SolverParams& params) {
    if (params.kernel_mode != KernelMode::adaptive) return;
    for (auto& p : parts) {
        if (p.kind != Kind::fluid) continue;
        const double r_i = farthest_neighbor_distance(p, params.strain_mode);
        p.knots = adapt_knots(r_i, params.h, params.knot_multiplier,
                              params.allow_extension)
                      .knots;
    }
}

void mls_density_reinit(std::span<Particle> parts, const NeighborList& nl,
                        const SolverParams& params, long* fallback_count) {
    const std::size_t n = parts.size();
    std::vector<double> rho_new(n, 0.0);
    std::vector<bool> touched(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const Particle& pi = parts[i];
        if (pi.kind != Kind::fluid) continue;
        const KernelSpec self = pair_kernel(pi, pi, params.interaction, params.h);
        const double w0 = self.eval(0.0).w;
        // moment matrix A = sum_j V_j W_ij [1, dx, dy]^T [1, dx, dy], self included
        double A00 = (pi.m / pi.rho) * w0;
        double A01 = 0, A02 = 0, A11 = 0, A12 = 0, A22 = 0;
        for (const auto& nb : nl.of(i)) {
            const Particle& pj = parts[nb.j];
            const double w = pair_kernel(pi, pj, params.interaction, params.h)
                                 .eval(nb.r / params.h)
                                 .w;
            const double vw = (pj.m / pj.rho) * w;
            const double dx = nb.r * nb.e.x;
            const double dy = nb.r * nb.e.y;
            A00 += vw;
            A01 += vw * dx;
            A02 += vw * dy;
            A11 += vw * dx * dx;
            A12 += vw * dx * dy;
            A22 += vw * dy * dy;
        }
        // solve A beta = e1 (symmetric 3x3, Cramer)
        const double det = A00 * (A11 * A22 - A12 * A12) -
                           A01 * (A01 * A22 - A12 * A02) +
                           A02 * (A01 * A12 - A11 * A02);
        const double scale = std::max({std::abs(A00), std::abs(A11), std::abs(A22)});
        double rho = 0.0;
        if (scale > 0.0 && std::abs(det) > 1e-12 * scale * scale * scale) {
            const double b0 = (A11 * A22 - A12 * A12) / det;
            const double b1 = -(A01 * A22 - A02 * A12) / det;
            const double b2 = (A01 * A12 - A02 * A11) / det;
            rho = pi.m * b0 * w0;  // self term, dx = dy = 0
            for (const auto& nb : nl.of(i)) {
                const Particle& pj = parts[nb.j];
                const double w = pair_kernel(pi, pj, params.interaction, params.h)
                                     .eval(nb.r / params.h)
                                     .w;
                const double dx = nb.r * nb.e.x;
                const double dy = nb.r * nb.e.y;
                rho += pj.m * (b0 + b1 * dx + b2 * dy) * w;
            }
        } else {
            if (fallback_count) ++(*fallback_count);
            rho = pi.m * w0;  // summation density
            for (const auto& nb : nl.of(i)) {
                const Particle& pj = parts[nb.j];
                rho += pj.m * pair_kernel(pi, pj, params.interaction, params.h)
                                  .eval(nb.r / params.h)
                                  .w;
            }
        }
        rho_new[i] = rho;
        touched[i] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (touched[i]) parts[i].rho = rho_new[i];
}

double total_energy(std::span<const Particle> parts, const MaterialParams& mat) {
    double e = 0.0;
    for (const auto& p : parts) {
        if (p.kind != Kind::fluid) continue;
        e += 0.5 * p.m * dot(p.v, p.v);
        e -= p.m * dot(mat.gravity, p.x - p.x0);
        e += p.m * internal_energy_density(p.rho, mat);
    }
    return e;
}

}  // namespace asph
