#pragma once

#include "asph/kernel.hpp"
#include "asph/math2d.hpp"

namespace asph {

/// Weakly-compressible EOS and Oldroyd-B material constants.
/// theta = 1 selects the Oldroyd-B model, theta = 0 a Newtonian one.
struct MaterialParams {
    double rho0{1000.0};    ///< reference density, kg/m^3
    double c0{12.5};        ///< sound speed at rho0, m/s
    double gamma_eos{7.0};  ///< EOS exponent
    double eta_s{0.0};      ///< solvent viscosity, Pa s
    double eta_p{0.0};      ///< polymer viscosity, Pa s
    double lambda1{1.0};    ///< relaxation time, s
    double theta{0.0};      ///< model switch, 0 or 1
    Vec2 gravity{0.0, 0.0};
};

/// P = (rho0 c0^2 / gamma) ((rho/rho0)^gamma - 1)
double pressure_eos(double rho, const MaterialParams& p);

/// Inverse of pressure_eos (exact power-law root).
double density_from_pressure(double P, const MaterialParams& p);

/// Local wave speed sqrt(dP/drho) = c0 (rho/rho0)^((gamma-1)/2).
double sound_speed(double rho, const MaterialParams& p);

/// Compressive internal energy per unit mass: e(rho) = int_{rho0}^{rho} P(s)/s^2 ds,
/// in closed form.
double internal_energy_density(double rho, const MaterialParams& p);

/// tau_s = eta_s (k + k^T)
SymTensor2 solvent_stress(const Mat2& k, const MaterialParams& p);

/// Upper-convected polymer stress rate:
/// d(tau_p)/dt = k tau_p + (k tau_p)^T - tau_p/lambda1 + (eta_p/lambda1)(k + k^T)
SymTensor2 polymer_stress_rate(const SymTensor2& tau_p, const Mat2& k,
                               const MaterialParams& p);

/// Full stress decomposition at a particle.
struct StressState {
    double pressure{0.0};
    SymTensor2 tau_s{};
    SymTensor2 tau_p{};

    /// sigma = -P I + tau_s + theta tau_p
    SymTensor2 total(double theta) const {
        return {-pressure + tau_s.xx + theta * tau_p.xx,
                -pressure + tau_s.yy + theta * tau_p.yy,
                tau_s.xy + theta * tau_p.xy};
    }
};

}  // namespace asph
