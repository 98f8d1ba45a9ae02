#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "asph/kernel.hpp"

namespace asph {

/// 1D lattice + material description for dispersion curves.
struct DispersionSpec {
    double rho_bar{1000.0};  ///< base density around which the lattice is perturbed
    double rho0{1000.0};
    double c0{12.5};
    double gamma_eos{7.0};
    double eta_s{0.0};
    double eta_p{0.0};
    double lambda1{1.0};
    double theta{0.0};
    double tau_p_bar{0.0};  ///< base polymer stress
    double sigma_bar{0.0};  ///< base total stress (negative in tension... sign per EOS)
    double dp{0.0};
    double h{0.0};
    KnotPair knots{};
    std::vector<double> k_grid;  ///< empty -> 512 uniform samples on (0, pi/dp]
};

/// M = c0^2 (rho_bar/rho0)^(gamma-1)
double dispersion_modulus(const DispersionSpec& spec);

/// Z = eta_s + theta (tau_p_bar + eta_p/lambda1) lambda1
double dispersion_damping(const DispersionSpec& spec);

/// Continuum root with positive real part:
/// omega = -(k^2 Z / rho_bar) i + sqrt(M k^2 - k^4 Z^2 / rho_bar^2)
std::complex<double> exact_omega(double k, const DispersionSpec& spec);

/// c = Re(omega)/k; sqrt(M) at k = 0.
double exact_wave_speed(double k, const DispersionSpec& spec);

/// A = sum_b sin(k xi) dW/dx, B = sum_b (1 - cos k xi) d2W/dx2 over the
/// lattice xi = n dp, n != 0, within the kernel support.
std::pair<double, double> lattice_sums(double k, const DispersionSpec& spec);

/// Both roots of rho_bar w^2 + 2i A^2 dp^2 Z w - M rho_bar dp^2 A^2
/// - 2 sigma_bar dp^2 A^2 + 2 sigma_bar dp B = 0; first root carries
/// the non-negative real part.
std::pair<std::complex<double>, std::complex<double>> sph_omega(
    double k, const DispersionSpec& spec);

struct KInterval {
    double k_lo;
    double k_hi;
};

std::vector<double> default_k_grid(const DispersionSpec& spec);

/// Contiguous k-grid intervals where the propagating branch has
/// Re(omega) < 1e-9 sqrt(M) pi/dp (zero-energy modes).
std::vector<KInterval> zero_energy_scan(const DispersionSpec& spec);

}  // namespace asph
