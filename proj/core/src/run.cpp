#include "asph/run.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace asph {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    out << std::setprecision(17);
    return out;
}

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::fluid: return "fluid";
        case Kind::wall: return "wall";
        default: return "dummy";
    }
}

class SeriesWriters {
public:
    SeriesWriters(const std::filesystem::path& dir, const SimulationConfig& cfg)
        : cfg_(cfg) {
        energy_ = open_out(dir / "energy.csv");
        energy_ << "t,e_total_j,rel_dev\n";
        clustering_ = open_out(dir / "clustering.csv");
        clustering_ << "t,min_ratio,close_pairs\n";
        if (cfg.scenario == ScenarioKind::drop) {
            width_ = open_out(dir / "width.csv");
            width_ << "t,T,width_m\n";
        } else {
            pressure_ = open_out(dir / "center_pressure.csv");
            pressure_ << "t,t_omega,p_center_pa\n";
        }
    }

    void record(const SimulationState& state) {
        const double t = state.time;
        const double e = total_energy(state.parts, cfg_.mat);
        if (!have_e0_) {
            e0_ = e;
            have_e0_ = true;
        }
        const double dev = e0_ != 0.0 ? (e - e0_) / std::abs(e0_) : 0.0;
        energy_ << t << ',' << e << ',' << dev << '\n';
        const auto cl =
            measure_clustering(state, cfg_.dp, 2.0 * cfg_.h_factor * cfg_.dp);
        clustering_ << t << ',' << cl.min_ratio << ',' << cl.close_pairs << '\n';
        if (cfg_.scenario == ScenarioKind::drop) {
            const double T =
                t * cfg_.impact_speed / (2.0 * cfg_.drop_radius);
            width_ << t << ',' << T << ',' << measure_drop_width(state) << '\n';
        } else {
            const double p =
                pressure_probe(state, Vec2{0.0, 0.0}, cfg_.h_factor * cfg_.dp);
            pressure_ << t << ',' << t * cfg_.patch_omega << ',' << p << '\n';
        }
    }

private:
    const SimulationConfig& cfg_;
    std::ofstream energy_, clustering_, width_, pressure_;
    double e0_{0.0};
    bool have_e0_{false};
};

}  // namespace

void write_snapshot(const SimulationState& state, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "id,kind,x,y,u,v,rho,P,txx,tyy,txy,a,b\n";
    for (const auto& p : state.parts) {
        out << p.id << ',' << kind_name(p.kind) << ',' << p.x.x << ',' << p.x.y << ','
            << p.v.x << ',' << p.v.y << ',' << p.rho << ',' << p.P << ','
            << p.tau_p.xx << ',' << p.tau_p.yy << ',' << p.tau_p.xy << ','
            << p.knots.a << ',' << p.knots.b << '\n';
    }
}

RunResult run_simulation(const RunOptions& opts) try {
    RunResult res;
    SimulationConfig cfg = load_simulation_config(opts.config_path);
    if (opts.particles_scale != 1.0) {
        if (!(opts.particles_scale > 0.0))
            throw ConfigError("particles-scale must be positive");
        cfg.dp /= std::sqrt(opts.particles_scale);
    }

    std::filesystem::create_directories(opts.out_dir);

    const std::string echo = cfg.canonical_text();
    {
        std::ofstream manifest = open_out(opts.out_dir / "manifest.txt");
        manifest << "# run manifest\n"
                 << "config_file = " << opts.config_path.string() << '\n'
                 << "config_hash = " << fnv1a_hex(echo) << '\n'
                 << "particles_scale = " << opts.particles_scale << '\n'
                 << "deterministic = " << (opts.deterministic ? "true" : "false")
                 << '\n'
                 << "# effective configuration\n"
                 << echo;
    }

    SimulationState state = build_scenario(cfg);
    const SolverParams params = cfg.solver_params();

    auto snapshot_name = [&](long step) {
        std::ostringstream os;
        os << "snapshot_" << std::setw(6) << std::setfill('0') << step << ".csv";
        return opts.out_dir / os.str();
    };

    SeriesWriters series(opts.out_dir, cfg);

    // initial state goes through one pressure assembly so snapshots are
    // consistent with what the first step will see
    {
        NeighborList nl = build_neighbors(state.parts, 2.0 * params.h);
        assemble_pressures(state.parts, nl, params);
    }
    write_snapshot(state, snapshot_name(0));
    series.record(state);

    const long n_steps =
        cfg.dt > 0.0 ? static_cast<long>(std::llround(cfg.t_end / cfg.dt)) : 0;
    try {
        for (long s = 1; s <= n_steps; ++s) {
            step(state, params);
            if (cfg.series_every > 0 && s % cfg.series_every == 0)
                series.record(state);
            if (cfg.snapshot_every > 0 && s % cfg.snapshot_every == 0)
                write_snapshot(state, snapshot_name(s));
        }
    } catch (const std::exception& ex) {
        write_snapshot(state, opts.out_dir / "snapshot_abort.csv");
        std::ofstream diag = open_out(opts.out_dir / "diagnostic.txt");
        diag << "aborted at t=" << state.time << " step=" << state.step_count << '\n'
             << ex.what() << '\n';
        res.exit_code = 1;
        res.error = ex.what();
        res.steps = state.step_count;
        res.t_final = state.time;
        return res;
    }

    if (n_steps > 0 &&
        !(cfg.snapshot_every > 0 && n_steps % cfg.snapshot_every == 0))
        write_snapshot(state, snapshot_name(n_steps));
    res.steps = state.step_count;
    res.t_final = state.time;
    return res;
} catch (const std::exception& ex) {
    // configuration and I/O failures before the time loop starts
    RunResult res;
    res.exit_code = 1;
    res.error = ex.what();
    return res;
}

}  // namespace asph
