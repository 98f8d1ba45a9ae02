#pragma once

#include <filesystem>

#include "asph/scenario.hpp"

namespace asph {

struct RunOptions {
    std::filesystem::path config_path;
    std::filesystem::path out_dir;
    double particles_scale{1.0};  ///< particle-count multiplier (rescales dp)
    bool deterministic{false};
};

struct RunResult {
    int exit_code{0};
    std::string error;  ///< empty on success
    long steps{0};
    double t_final{0.0};
};

/// build -> loop(step, measure, write) -> final snapshot. Writes series CSVs,
/// snapshots and a manifest into out_dir; aborts with partial outputs and a
/// diagnostic file when the state turns non-finite.
RunResult run_simulation(const RunOptions& opts);

/// Snapshot CSV: id,kind,x,y,u,v,rho,P,txx,tyy,txy,a,b
void write_snapshot(const SimulationState& state, const std::filesystem::path& path);

}  // namespace asph
