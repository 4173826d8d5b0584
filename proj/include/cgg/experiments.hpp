#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgg/config.hpp"
#include "cgg/graph.hpp"
#include "cgg/spectral.hpp"

namespace cgg {

// ---------------------------------------------------------------------------
// Manifests

// One generated graph plus provenance. Stored as a JSON-lines entry; the graph
// itself lives in `file`, relative to the manifest directory.
struct EnsembleRecord {
    std::size_t id = 0;
    std::string file;
    std::string method;  // aco | mcmc | hybrid
    std::size_t seed_id = 0;
    std::uint64_t step = 0;
    double cc = 0.0;
    std::uint32_t d_hat = 0;
    std::optional<std::uint32_t> exact_diameter;
    std::uint64_t rng_stream = 0;

    nlohmann::ordered_json to_json() const;
    static EnsembleRecord from_json(const nlohmann::json& j);
};

inline constexpr const char* kManifestName = "manifest.jsonl";
inline constexpr const char* kConstraintsName = "constraints.json";

void write_manifest(const std::filesystem::path& path, const std::vector<EnsembleRecord>& records);
std::vector<EnsembleRecord> read_manifest(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Success-ratio grid

struct GridCell {
    std::uint32_t diam = 0;
    double cc = 0.0;
    double density = 0.0;
    std::size_t m = 0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    double success_ratio = 0.0;
    std::optional<double> diversity;  // absent with fewer than two successes
    std::string reason = "ok";        // ok | infeasible_edge_count | too_few_nodes

    nlohmann::json to_json() const;
    static GridCell from_json(const nlohmann::json& j);
};

// One ACO instance per trial and cell; a trial succeeds if it returns a
// verified graph. With `out_dir`, finished cells are cached under
// out_dir/cells and reused on the next call, and out_dir/grid.csv is written.
std::vector<GridCell> run_success_grid(const ExperimentConfig& cfg,
                                       const std::optional<std::filesystem::path>& out_dir = std::nullopt);

void write_grid_csv(const std::filesystem::path& path, const std::vector<GridCell>& cells);

// ---------------------------------------------------------------------------
// Pure MCMC vs hybrid

struct DriftSample {
    std::size_t sample = 0;
    std::size_t seed_id = 0;
    std::uint64_t step = 0;
    double drift = 0.0;
    std::optional<std::uint32_t> exact_diameter;
};

struct SummaryStats {
    std::size_t count = 0;
    double mean = 0.0;
    double variance = 0.0;  // unbiased
};

SummaryStats summarize(const std::vector<double>& values);

struct ComparisonResult {
    Constraints constraints;
    std::size_t seeds_found = 0;
    std::vector<DriftSample> mcmc;
    std::vector<DriftSample> hybrid;
    SummaryStats mcmc_stats;
    SummaryStats hybrid_stats;
    double mcmc_diversity = 0.0;
    double hybrid_diversity = 0.0;
};

// Seeds come from independent ACO instances. The pure arm runs one chain of L
// samples from seed 0; the hybrid arm splits L across all seeds. Drift is the
// spectral distance to seed 0 in both arms. Throws NoSeedFound.
ComparisonResult run_method_comparison(const ExperimentConfig& cfg);

void write_drift_csv(const std::filesystem::path& path, const std::vector<DriftSample>& drift);
void write_comparison(const std::filesystem::path& out_dir, const ComparisonResult& result);

// ---------------------------------------------------------------------------
// Ensemble generation

struct GenerateResult {
    Constraints constraints;
    std::vector<EnsembleRecord> records;
    std::size_t seeds_found = 0;
    std::size_t snapshots_rejected = 0;  // failed the exact diameter re-check
};

// ACO seeds -> validate_seed -> one chain per seed -> merged manifest in
// cfg.out. L records are split across the seeds as evenly as possible. Each
// snapshot is re-verified exactly before it is written.
GenerateResult generate(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------
// Verification and spectra

struct Violation {
    std::size_t record_id = 0;
    std::string reason;
};

// Recomputes every record of a manifest from its graph file.
std::vector<Violation> verify_manifest(const std::filesystem::path& dir, const Constraints& c);

// Writes distances.csv and spectra.json for the manifest in `dir` to `out_dir`.
void export_spectra(const std::filesystem::path& dir, const std::filesystem::path& out_dir,
                    std::size_t threads = 1);

}  // namespace cgg
