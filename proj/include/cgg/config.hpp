#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "cgg/aco.hpp"
#include "cgg/sampler.hpp"

namespace cgg {

struct McmcSettings {
    std::optional<std::uint64_t> burn_in;   // default 10 * m
    std::optional<std::uint64_t> thinning;  // default m
};

// Experiment description, read from a JSON file. See README for the schema.
struct ExperimentConfig {
    std::size_t n = 40;
    std::optional<double> density;
    std::optional<std::size_t> m;

    std::vector<std::uint32_t> diam_targets;
    std::vector<double> cc_targets;
    double cc_half_width = 0.05;
    std::uint32_t diam_half_width = 0;

    // Explicit interval for generate/compare; otherwise the first grid target.
    std::optional<Constraints> constraints;

    std::size_t trials = 100;
    AcoParams aco;
    McmcSettings mcmc;
    std::size_t ensemble_size = 50;  // L
    std::size_t seeds = 5;           // ACO seeds for generate / hybrid compare

    std::uint64_t master_seed = 1;
    std::size_t threads = 1;
    bool exact_diameter = false;
    std::filesystem::path out = "out";

    // round(density * C(n,2)) or the explicit m.
    std::size_t edge_count() const;
    double edge_density() const;
    // Throws ConfigError.
    void validate() const;

    // Interval around a grid target, clipped to [0,1] and [1, n-1].
    Constraints constraints_for(std::uint32_t diam, double cc) const;
    Constraints primary_constraints() const;
    ChainOptions chain_options(std::size_t samples) const;

    static ExperimentConfig from_json(const nlohmann::json& j);
    static ExperimentConfig load(const std::filesystem::path& path);
    nlohmann::json to_json() const;
};

nlohmann::json constraints_to_json(const Constraints& c);
Constraints constraints_from_json(const nlohmann::json& j);

}  // namespace cgg
