#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "asph/dispersion.hpp"
#include "asph/sph_core.hpp"

namespace asph {

enum class ScenarioKind { drop, patch };
enum class ViscMode { constant, pressure_scheduled };

struct SimulationConfig {
    ScenarioKind scenario{ScenarioKind::drop};
    double dp{5e-4};
    double h_factor{2.0};
    double dt{1e-5};
    double t_end{0.0};
    double knot_multiplier{1.05};
    bool allow_extension{true};
    InteractionMode interaction{InteractionMode::averaged};
    KernelMode kernel_mode{KernelMode::adaptive};
    StrainMode strain_mode{StrainMode::viscous};
    bool gradient_correction{false};
    int reinit_every{0};
    ViscMode visc_mode{ViscMode::constant};
    double gamma1{0.5};
    double gamma2{0.5};
    double gamma1_min{0.1}, gamma2_min{0.1};
    double gamma1_max{0.8}, gamma2_max{0.8};
    double av_eps{0.01};
    int snapshot_every{0};  ///< steps; 0 = initial and final only
    int series_every{10};
    MaterialParams mat;

    // drop scenario
    double drop_radius{0.01};
    double drop_height{0.04};  ///< drop center above the wall
    double impact_speed{1.0};
    double wall_half_width{0.06};

    // patch scenario
    double patch_L{1.0};
    double patch_omega{1.0};
    int n_series{25};  ///< odd m,n up to this index in the pressure series

    /// key = value echo in a fixed key order (hash/manifest input)
    std::string canonical_text() const;

    SolverParams solver_params() const;
};

/// Flat `key = value` file with `#` comments. Unknown keys are errors.
SimulationConfig load_simulation_config(const std::filesystem::path& path);
SimulationConfig parse_simulation_config(const std::string& text,
                                         const std::string& origin);

struct DispersionConfig {
    DispersionSpec spec;
    double rho_ratio{1.0};  ///< rho_bar / rho0; sets sigma_bar from the EOS
    int k_samples{512};
};

DispersionConfig load_dispersion_config(const std::filesystem::path& path);
DispersionConfig parse_dispersion_config(const std::string& text,
                                         const std::string& origin);

/// FNV-1a 64-bit, hex string.
std::string fnv1a_hex(const std::string& text);

}  // namespace asph
