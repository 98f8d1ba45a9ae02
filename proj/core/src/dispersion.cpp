#include "asph/dispersion.hpp"

#include <cmath>

namespace asph {

namespace {

void validate(const DispersionSpec& spec) {
    if (!(spec.rho_bar > 0.0) || !(spec.rho0 > 0.0))
        throw ConfigError("dispersion: densities must be positive");
    if (!(spec.dp > 0.0) || !(spec.h > 0.0))
        throw ConfigError("dispersion: dp and h must be positive");
    if (spec.theta != 0.0 && !(spec.lambda1 > 0.0))
        throw ConfigError("dispersion: lambda1 must be positive when theta != 0");
}

}  // namespace

double dispersion_modulus(const DispersionSpec& spec) {
    return spec.c0 * spec.c0 *
           std::pow(spec.rho_bar / spec.rho0, spec.gamma_eos - 1.0);
}

double dispersion_damping(const DispersionSpec& spec) {
    if (spec.theta == 0.0) return spec.eta_s;
    return spec.eta_s +
           spec.theta * (spec.tau_p_bar + spec.eta_p / spec.lambda1) * spec.lambda1;
}

std::complex<double> exact_omega(double k, const DispersionSpec& spec) {
    validate(spec);
    const double M = dispersion_modulus(spec);
    const double Z = dispersion_damping(spec);
    const std::complex<double> rad(M * k * k - std::pow(k * k * Z / spec.rho_bar, 2),
                                   0.0);
    return std::complex<double>(0.0, -k * k * Z / spec.rho_bar) + std::sqrt(rad);
}

double exact_wave_speed(double k, const DispersionSpec& spec) {
    validate(spec);
    if (k == 0.0) return std::sqrt(dispersion_modulus(spec));
    return exact_omega(k, spec).real() / k;
}

std::pair<double, double> lattice_sums(double k, const DispersionSpec& spec) {
    validate(spec);
    const KernelSpec kern(spec.knots, spec.h, 1);
    const double support = kern.support_radius();
    double A = 0.0, B = 0.0;
    for (int n = 1; n * spec.dp < support; ++n) {
        const double xi = n * spec.dp;
        const KernelEval ev = kern.eval(xi / spec.h);
        A += 2.0 * std::sin(k * xi) * ev.dw;
        B += 2.0 * (1.0 - std::cos(k * xi)) * ev.d2w;
    }
    return {A, B};
}

std::pair<std::complex<double>, std::complex<double>> sph_omega(
    double k, const DispersionSpec& spec) {
    const auto [A, B] = lattice_sums(k, spec);
    const double M = dispersion_modulus(spec);
    const double Z = dispersion_damping(spec);
    const double dp = spec.dp;
    const double rho = spec.rho_bar;
    const double damp = A * A * dp * dp * Z / rho;
    // constant coefficient / rho_bar
    const double c = (-M * rho * dp * dp * A * A - 2.0 * spec.sigma_bar * dp * dp * A * A +
                      2.0 * spec.sigma_bar * dp * B) /
                     rho;
    const std::complex<double> rad = std::sqrt(std::complex<double>(-damp * damp - c, 0.0));
    const std::complex<double> shift(0.0, -damp);
    return {shift + rad, shift - rad};
}

std::vector<double> default_k_grid(const DispersionSpec& spec) {
    constexpr int n = 512;
    const double kmax = M_PI / spec.dp;
    std::vector<double> ks(n);
    for (int i = 0; i < n; ++i) ks[i] = kmax * (i + 1) / n;
    return ks;
}

std::vector<KInterval> zero_energy_scan(const DispersionSpec& spec) {
    validate(spec);
    const std::vector<double> ks =
        spec.k_grid.empty() ? default_k_grid(spec) : spec.k_grid;
    const double tol =
        1e-9 * std::sqrt(dispersion_modulus(spec)) * M_PI / spec.dp;
    std::vector<KInterval> out;
    bool open = false;
    for (double k : ks) {
        const auto [wp, wm] = sph_omega(k, spec);
        const bool dead = std::max(wp.real(), wm.real()) < tol;
        if (dead) {
            if (!open) {
                out.push_back({k, k});
                open = true;
            } else {
                out.back().k_hi = k;
            }
        } else {
            open = false;
        }
    }
    return out;
}

}  // namespace asph
