#include "cgg/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "cgg/errors.hpp"

namespace cgg {

using nlohmann::json;

namespace {

template <class T>
void read_opt(const json& j, const char* key, T& dst) {
    if (j.contains(key) && !j.at(key).is_null()) dst = j.at(key).get<T>();
}

template <class T>
void read_opt(const json& j, const char* key, std::optional<T>& dst) {
    if (j.contains(key) && !j.at(key).is_null()) dst = j.at(key).get<T>();
}

const std::vector<std::string> kTopLevelKeys = {
    "n", "density", "m", "diam_targets", "cc_targets", "cc_half_width", "diam_half_width", "constraints",
    "trials", "aco", "mcmc", "ensemble_size", "seeds", "master_seed", "threads", "exact_diameter", "out"};

}  // namespace

std::size_t ExperimentConfig::edge_count() const {
    if (m) return *m;
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    return static_cast<std::size_t>(std::llround(density.value_or(0.0) * pairs));
}

double ExperimentConfig::edge_density() const {
    if (density) return *density;
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    return pairs > 0 ? static_cast<double>(edge_count()) / pairs : 0.0;
}

void ExperimentConfig::validate() const {
    if (n < 2) throw ConfigError("config: n must be at least 2");
    if (density.has_value() == m.has_value()) throw ConfigError("config: give exactly one of 'density' and 'm'");
    if (density && !(*density > 0.0 && *density < 1.0)) throw ConfigError("config: density must lie in (0, 1)");
    if (!constraints && (diam_targets.empty() || cc_targets.empty()))
        throw ConfigError("config: give 'constraints' or non-empty 'diam_targets' and 'cc_targets'");
    for (auto d : diam_targets)
        if (d < 1 || d > n - 1) throw ConfigError("config: diameter target out of [1, n-1]");
    for (auto c : cc_targets)
        if (!(c >= 0.0 && c <= 1.0)) throw ConfigError("config: cc target out of [0, 1]");
    if (!(cc_half_width >= 0.0)) throw ConfigError("config: cc_half_width must be >= 0");
    if (trials == 0) throw ConfigError("config: trials must be >= 1");
    if (ensemble_size == 0) throw ConfigError("config: ensemble_size must be >= 1");
    if (seeds == 0) throw ConfigError("config: seeds must be >= 1");
    if (mcmc.thinning && *mcmc.thinning == 0) throw ConfigError("config: mcmc.thinning must be >= 1");
    aco.validate();
    primary_constraints().validate();
}

Constraints ExperimentConfig::constraints_for(std::uint32_t diam, double cc) const {
    Constraints c;
    c.n = n;
    c.m = edge_count();
    c.cc_min = std::max(0.0, cc - cc_half_width);
    c.cc_max = std::min(1.0, cc + cc_half_width);
    c.diam_min = diam > diam_half_width ? std::max<std::uint32_t>(1, diam - diam_half_width) : 1;
    c.diam_max = std::min<std::uint32_t>(static_cast<std::uint32_t>(n - 1), diam + diam_half_width);
    return c;
}

Constraints ExperimentConfig::primary_constraints() const {
    if (constraints) {
        Constraints c = *constraints;
        c.n = n;
        c.m = edge_count();
        return c;
    }
    if (diam_targets.empty() || cc_targets.empty()) throw ConfigError("config: no target constraints");
    return constraints_for(diam_targets.front(), cc_targets.front());
}

ChainOptions ExperimentConfig::chain_options(std::size_t samples) const {
    ChainOptions o = ChainOptions::defaults_for(edge_count(), samples);
    if (mcmc.burn_in) o.burn_in = *mcmc.burn_in;
    if (mcmc.thinning) o.thinning = *mcmc.thinning;
    o.steps = o.burn_in + (samples > 0 ? (samples - 1) * o.thinning : 0);
    o.exact_diameter_audit = exact_diameter;
    return o;
}

json constraints_to_json(const Constraints& c) {
    return json{{"n", c.n},           {"m", c.m},
                {"cc_min", c.cc_min}, {"cc_max", c.cc_max},
                {"diam_min", c.diam_min}, {"diam_max", c.diam_max}};
}

Constraints constraints_from_json(const json& j) {
    Constraints c;
    try {
        read_opt(j, "n", c.n);
        read_opt(j, "m", c.m);
        c.cc_min = j.at("cc_min").get<double>();
        c.cc_max = j.at("cc_max").get<double>();
        c.diam_min = j.at("diam_min").get<std::uint32_t>();
        c.diam_max = j.at("diam_max").get<std::uint32_t>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("constraints: ") + e.what());
    }
    return c;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (std::find(kTopLevelKeys.begin(), kTopLevelKeys.end(), key) == kTopLevelKeys.end())
            throw ConfigError("config: unknown key '" + key + "'");
    }
    ExperimentConfig cfg;
    try {
        read_opt(j, "n", cfg.n);
        read_opt(j, "density", cfg.density);
        read_opt(j, "m", cfg.m);
        read_opt(j, "diam_targets", cfg.diam_targets);
        read_opt(j, "cc_targets", cfg.cc_targets);
        read_opt(j, "cc_half_width", cfg.cc_half_width);
        read_opt(j, "diam_half_width", cfg.diam_half_width);
        if (j.contains("constraints")) {
            Constraints c = constraints_from_json(j.at("constraints"));
            cfg.constraints = c;
        }
        read_opt(j, "trials", cfg.trials);
        if (j.contains("aco")) {
            const json& a = j.at("aco");
            read_opt(a, "ants", cfg.aco.ants);
            read_opt(a, "iterations", cfg.aco.iterations);
            read_opt(a, "rho", cfg.aco.rho);
            read_opt(a, "boost", cfg.aco.boost);
            read_opt(a, "hinder", cfg.aco.hinder);
            read_opt(a, "reward_valid", cfg.aco.reward_valid);
            read_opt(a, "reward_invalid", cfg.aco.reward_invalid);
            read_opt(a, "epsilon", cfg.aco.epsilon);
            read_opt(a, "elite_fraction", cfg.aco.elite_fraction);
            read_opt(a, "tau_initial", cfg.aco.tau_initial);
            read_opt(a, "tau_floor", cfg.aco.tau_floor);
        }
        if (j.contains("mcmc")) {
            const json& mc = j.at("mcmc");
            read_opt(mc, "burn_in", cfg.mcmc.burn_in);
            read_opt(mc, "thinning", cfg.mcmc.thinning);
        }
        read_opt(j, "ensemble_size", cfg.ensemble_size);
        read_opt(j, "seeds", cfg.seeds);
        read_opt(j, "master_seed", cfg.master_seed);
        read_opt(j, "threads", cfg.threads);
        read_opt(j, "exact_diameter", cfg.exact_diameter);
        if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config: " + path.string() + ": " + e.what());
    }
    return from_json(j);
}

json ExperimentConfig::to_json() const {
    json j;
    j["n"] = n;
    if (density) j["density"] = *density;
    if (m) j["m"] = *m;
    j["diam_targets"] = diam_targets;
    j["cc_targets"] = cc_targets;
    j["cc_half_width"] = cc_half_width;
    j["diam_half_width"] = diam_half_width;
    if (constraints) j["constraints"] = constraints_to_json(*constraints);
    j["trials"] = trials;
    j["aco"] = {{"ants", aco.ants},
                {"iterations", aco.iterations},
                {"rho", aco.rho},
                {"boost", aco.boost},
                {"hinder", aco.hinder},
                {"reward_valid", aco.reward_valid},
                {"reward_invalid", aco.reward_invalid},
                {"epsilon", aco.epsilon},
                {"elite_fraction", aco.elite_fraction},
                {"tau_initial", aco.tau_initial},
                {"tau_floor", aco.tau_floor}};
    json mc = json::object();
    if (mcmc.burn_in) mc["burn_in"] = *mcmc.burn_in;
    if (mcmc.thinning) mc["thinning"] = *mcmc.thinning;
    j["mcmc"] = mc;
    j["ensemble_size"] = ensemble_size;
    j["seeds"] = seeds;
    j["master_seed"] = master_seed;
    j["threads"] = threads;
    j["exact_diameter"] = exact_diameter;
    j["out"] = out.string();
    return j;
}

}  // namespace cgg
