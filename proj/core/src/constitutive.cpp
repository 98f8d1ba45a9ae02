#include "asph/constitutive.hpp"

#include <cmath>

namespace asph {

double pressure_eos(double rho, const MaterialParams& p) {
    double K = p.rho0 * p.c0 * p.c0 / p.gamma_eos;
    return K * (std::pow(rho / p.rho0, p.gamma_eos) - 1.0);
}

double density_from_pressure(double P, const MaterialParams& p) {
    double K = p.rho0 * p.c0 * p.c0 / p.gamma_eos;
    return p.rho0 * std::pow(P / K + 1.0, 1.0 / p.gamma_eos);
}

double sound_speed(double rho, const MaterialParams& p) {
    return p.c0 * std::pow(rho / p.rho0, 0.5 * (p.gamma_eos - 1.0));
}

double internal_energy_density(double rho, const MaterialParams& p) {
    // int P(s)/s^2 ds with P(s) = K((s/rho0)^g - 1):
    //   K [ s^(g-1) / ((g-1) rho0^g) + 1/s ] evaluated from rho0 to rho
    double K = p.rho0 * p.c0 * p.c0 / p.gamma_eos;
    double g = p.gamma_eos;
    double term = (std::pow(rho / p.rho0, g - 1.0) - 1.0) / ((g - 1.0) * p.rho0);
    return K * (term + 1.0 / rho - 1.0 / p.rho0);
}

SymTensor2 solvent_stress(const Mat2& k, const MaterialParams& p) {
    return {2.0 * p.eta_s * k.xx, 2.0 * p.eta_s * k.yy, p.eta_s * (k.xy + k.yx)};
}

SymTensor2 polymer_stress_rate(const SymTensor2& tau_p, const Mat2& k,
                               const MaterialParams& p) {
    if (!(p.lambda1 > 0.0)) throw ConfigError("polymer_stress_rate: lambda1 must be positive");
    double inv_l = 1.0 / p.lambda1;
    double c = p.eta_p * inv_l;
    // (k tau_p) components; tau_p symmetric
    double kt_xx = k.xx * tau_p.xx + k.xy * tau_p.xy;
    double kt_xy = k.xx * tau_p.xy + k.xy * tau_p.yy;
    double kt_yx = k.yx * tau_p.xx + k.yy * tau_p.xy;
    double kt_yy = k.yx * tau_p.xy + k.yy * tau_p.yy;
    return {2.0 * kt_xx - tau_p.xx * inv_l + 2.0 * c * k.xx,
            2.0 * kt_yy - tau_p.yy * inv_l + 2.0 * c * k.yy,
            kt_xy + kt_yx - tau_p.xy * inv_l + c * (k.xy + k.yx)};
}

}  // namespace asph
