#include "asph/config.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace asph {

namespace {

std::map<std::string, std::string> parse_kv(const std::string& text,
                                            const std::string& origin) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected `key = value`, got `" + line + "`");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": empty key or value");
        if (kv.count(key))
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": duplicate key `" + key + "`");
        kv[key] = val;
    }
    return kv;
}

class KvReader {
public:
    KvReader(std::map<std::string, std::string> kv, std::string origin)
        : kv_(std::move(kv)), origin_(std::move(origin)) {}

    bool has(const std::string& key) {
        used_.insert({key, true});
        return kv_.count(key) > 0;
    }
    double number(const std::string& key, double dflt) {
        used_[key] = true;
        auto it = kv_.find(key);
        if (it == kv_.end()) return dflt;
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(it->second, &pos);
        } catch (const std::exception&) {
            fail(key, "not a number");
        }
        if (pos != it->second.size()) fail(key, "trailing characters after number");
        return v;
    }
    int integer(const std::string& key, int dflt) {
        const double v = number(key, dflt);
        const int i = static_cast<int>(v);
        if (static_cast<double>(i) != v) fail(key, "not an integer");
        return i;
    }
    bool boolean(const std::string& key, bool dflt) {
        used_[key] = true;
        auto it = kv_.find(key);
        if (it == kv_.end()) return dflt;
        if (it->second == "true" || it->second == "1") return true;
        if (it->second == "false" || it->second == "0") return false;
        fail(key, "expected true/false");
        return dflt;
    }
    std::string word(const std::string& key, const std::string& dflt) {
        used_[key] = true;
        auto it = kv_.find(key);
        return it == kv_.end() ? dflt : it->second;
    }
    [[noreturn]] void fail(const std::string& key, const std::string& why) {
        throw ConfigError(origin_ + ": key `" + key + "`: " + why);
    }
    void finish() {
        for (const auto& [k, v] : kv_)
            if (!used_.count(k))
                throw ConfigError(origin_ + ": unknown key `" + k + "`");
    }

private:
    std::map<std::string, std::string> kv_;
    std::map<std::string, bool> used_;
    std::string origin_;
};

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

SimulationConfig parse_simulation_config(const std::string& text,
                                         const std::string& origin) {
    KvReader r(parse_kv(text, origin), origin);
    SimulationConfig c;

    const std::string scen = r.word("scenario", "drop");
    if (scen == "drop")
        c.scenario = ScenarioKind::drop;
    else if (scen == "patch")
        c.scenario = ScenarioKind::patch;
    else
        r.fail("scenario", "expected drop or patch");

    c.dp = r.number("dp", c.dp);
    c.h_factor = r.number("h_factor", c.h_factor);
    c.dt = r.number("dt", c.dt);
    c.t_end = r.number("t_end", c.t_end);
    c.knot_multiplier = r.number("knot_multiplier", c.knot_multiplier);
    c.allow_extension = r.boolean("allow_extension", c.allow_extension);

    const std::string im = r.word("interaction_mode", "averaged");
    if (im == "averaged")
        c.interaction = InteractionMode::averaged;
    else if (im == "per_particle")
        c.interaction = InteractionMode::per_particle;
    else
        r.fail("interaction_mode", "expected averaged or per_particle");

    const std::string km = r.word("kernel_mode", "adaptive");
    if (km == "standard")
        c.kernel_mode = KernelMode::standard;
    else if (km == "adaptive")
        c.kernel_mode = KernelMode::adaptive;
    else
        r.fail("kernel_mode", "expected standard or adaptive");

    const std::string sm =
        r.word("strain_mode", c.scenario == ScenarioKind::patch ? "inviscid" : "viscous");
    if (sm == "viscous")
        c.strain_mode = StrainMode::viscous;
    else if (sm == "inviscid")
        c.strain_mode = StrainMode::inviscid;
    else
        r.fail("strain_mode", "expected viscous or inviscid");

    c.gradient_correction = r.boolean("gradient_correction", c.gradient_correction);
    c.reinit_every = r.integer("reinit_every", c.reinit_every);

    const std::string vm = r.word("visc_mode", "constant");
    if (vm == "constant")
        c.visc_mode = ViscMode::constant;
    else if (vm == "pressure_scheduled")
        c.visc_mode = ViscMode::pressure_scheduled;
    else
        r.fail("visc_mode", "expected constant or pressure_scheduled");

    c.gamma1 = r.number("gamma1", c.gamma1);
    c.gamma2 = r.number("gamma2", c.gamma2);
    c.gamma1_min = r.number("gamma1_min", c.gamma1_min);
    c.gamma2_min = r.number("gamma2_min", c.gamma2_min);
    c.gamma1_max = r.number("gamma1_max", c.gamma1_max);
    c.gamma2_max = r.number("gamma2_max", c.gamma2_max);
    c.av_eps = r.number("av_eps", c.av_eps);
    c.snapshot_every = r.integer("snapshot_every", c.snapshot_every);
    c.series_every = r.integer("series_every", c.series_every);

    c.mat.rho0 = r.number("rho0", c.mat.rho0);
    c.mat.c0 = r.number("c0", c.mat.c0);
    c.mat.gamma_eos = r.number("gamma_eos", c.mat.gamma_eos);
    c.mat.eta_s = r.number("eta_s", c.mat.eta_s);
    c.mat.eta_p = r.number("eta_p", c.mat.eta_p);
    c.mat.lambda1 = r.number("lambda1", c.mat.lambda1);
    c.mat.theta = r.number("theta", c.mat.theta);
    c.mat.gravity.x = r.number("gravity_x", 0.0);
    c.mat.gravity.y = r.number("gravity_y", 0.0);

    c.drop_radius = r.number("drop_radius", c.drop_radius);
    c.drop_height = r.number("drop_height", c.drop_height);
    c.impact_speed = r.number("impact_speed", c.impact_speed);
    c.wall_half_width = r.number("wall_half_width", c.wall_half_width);

    c.patch_L = r.number("patch_L", c.patch_L);
    c.patch_omega = r.number("patch_omega", c.patch_omega);
    c.n_series = r.integer("n_series", c.n_series);

    r.finish();

    if (!(c.dp > 0.0)) throw ConfigError(origin + ": dp must be positive");
    if (!(c.dt > 0.0)) throw ConfigError(origin + ": dt must be positive");
    if (c.t_end < 0.0) throw ConfigError(origin + ": t_end must be >= 0");
    if (c.reinit_every < 0) throw ConfigError(origin + ": reinit_every must be >= 0");
    for (double g : {c.gamma1, c.gamma2, c.gamma1_min, c.gamma2_min, c.gamma1_max,
                     c.gamma2_max})
        if (g < 0.0) throw ConfigError(origin + ": gamma values must be >= 0");

    return c;
}

SimulationConfig load_simulation_config(const std::filesystem::path& path) {
    return parse_simulation_config(read_file(path), path.string());
}

std::string SimulationConfig::canonical_text() const {
    std::ostringstream os;
    os.precision(17);
    os << "scenario = " << (scenario == ScenarioKind::drop ? "drop" : "patch") << '\n'
       << "dp = " << dp << '\n'
       << "h_factor = " << h_factor << '\n'
       << "dt = " << dt << '\n'
       << "t_end = " << t_end << '\n'
       << "knot_multiplier = " << knot_multiplier << '\n'
       << "allow_extension = " << (allow_extension ? "true" : "false") << '\n'
       << "interaction_mode = "
       << (interaction == InteractionMode::averaged ? "averaged" : "per_particle")
       << '\n'
       << "kernel_mode = "
       << (kernel_mode == KernelMode::standard ? "standard" : "adaptive") << '\n'
       << "strain_mode = "
       << (strain_mode == StrainMode::viscous ? "viscous" : "inviscid") << '\n'
       << "gradient_correction = " << (gradient_correction ? "true" : "false") << '\n'
       << "reinit_every = " << reinit_every << '\n'
       << "visc_mode = "
       << (visc_mode == ViscMode::constant ? "constant" : "pressure_scheduled") << '\n'
       << "gamma1 = " << gamma1 << '\n'
       << "gamma2 = " << gamma2 << '\n'
       << "gamma1_min = " << gamma1_min << '\n'
       << "gamma2_min = " << gamma2_min << '\n'
       << "gamma1_max = " << gamma1_max << '\n'
       << "gamma2_max = " << gamma2_max << '\n'
       << "av_eps = " << av_eps << '\n'
       << "snapshot_every = " << snapshot_every << '\n'
       << "series_every = " << series_every << '\n'
       << "rho0 = " << mat.rho0 << '\n'
       << "c0 = " << mat.c0 << '\n'
       << "gamma_eos = " << mat.gamma_eos << '\n'
       << "eta_s = " << mat.eta_s << '\n'
       << "eta_p = " << mat.eta_p << '\n'
       << "lambda1 = " << mat.lambda1 << '\n'
       << "theta = " << mat.theta << '\n'
       << "gravity_x = " << mat.gravity.x << '\n'
       << "gravity_y = " << mat.gravity.y << '\n'
       << "drop_radius = " << drop_radius << '\n'
       << "drop_height = " << drop_height << '\n'
       << "impact_speed = " << impact_speed << '\n'
       << "wall_half_width = " << wall_half_width << '\n'
       << "patch_L = " << patch_L << '\n'
       << "patch_omega = " << patch_omega << '\n'
       << "n_series = " << n_series << '\n';
    return os.str();
}

SolverParams SimulationConfig::solver_params() const {
    SolverParams p;
    p.mat = mat;
    p.h = h_factor * dp;
    p.dt = dt;
    p.knot_multiplier = knot_multiplier;
    p.allow_extension = allow_extension;
    p.kernel_mode = kernel_mode;
    p.interaction = interaction;
    p.strain_mode = strain_mode;
    p.gradient_correction = gradient_correction;
    p.av_eps = av_eps;
    p.reinit_every = reinit_every;
    return p;
}

DispersionConfig parse_dispersion_config(const std::string& text,
                                         const std::string& origin) {
    KvReader r(parse_kv(text, origin), origin);
    DispersionConfig c;
    DispersionSpec& s = c.spec;

    s.rho0 = r.number("rho0", s.rho0);
    s.c0 = r.number("c0", s.c0);
    s.gamma_eos = r.number("gamma_eos", s.gamma_eos);
    s.eta_s = r.number("eta_s", s.eta_s);
    s.eta_p = r.number("eta_p", s.eta_p);
    s.lambda1 = r.number("lambda1", s.lambda1);
    s.theta = r.number("theta", s.theta);
    s.tau_p_bar = r.number("tau_p_bar", s.tau_p_bar);
    s.dp = r.number("dp", s.dp);
    s.h = r.number("h", s.h);
    s.knots.a = r.number("a", s.knots.a);
    s.knots.b = r.number("b", s.knots.b);
    s.knots.extended = s.knots.b > 2.0;
    c.k_samples = r.integer("k_samples", c.k_samples);
    c.rho_ratio = r.number("rho_ratio", c.rho_ratio);
    s.rho_bar = c.rho_ratio * s.rho0;

    // sigma = -P(rho_bar) + theta tau_p_bar unless given explicitly
    MaterialParams mat;
    mat.rho0 = s.rho0;
    mat.c0 = s.c0;
    mat.gamma_eos = s.gamma_eos;
    const double sigma_default =
        -pressure_eos(s.rho_bar, mat) + s.theta * s.tau_p_bar;
    s.sigma_bar = r.number("sigma_bar", sigma_default);

    r.finish();

    if (c.k_samples < 1) throw ConfigError(origin + ": k_samples must be >= 1");
    if (!(s.dp > 0.0) || !(s.h > 0.0))
        throw ConfigError(origin + ": dp and h must be positive");
    s.k_grid.resize(c.k_samples);
    const double kmax = 3.14159265358979323846 / s.dp;
    for (int i = 0; i < c.k_samples; ++i)
        s.k_grid[i] = kmax * (i + 1) / c.k_samples;
    return c;
}

DispersionConfig load_dispersion_config(const std::filesystem::path& path) {
    return parse_dispersion_config(read_file(path), path.string());
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

}  // namespace asph
