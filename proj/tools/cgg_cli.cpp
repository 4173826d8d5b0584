// cgg: generate, grid, compare, verify, spectra.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgg/config.hpp"
#include "cgg/errors.hpp"
#include "cgg/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerifyFailed = 2;

struct CommonFlags {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> threads;
    bool exact_diameter = false;
    std::optional<std::string> out;

    void attach(CLI::App* app, bool needs_config) {
        auto* opt = app->add_option("--config", config, "experiment JSON file");
        if (needs_config) opt->required()->check(CLI::ExistingFile);
        app->add_option("--seed", seed, "master seed (overrides config)");
        app->add_option("--threads", threads, "worker threads (overrides config)")->check(CLI::PositiveNumber);
        app->add_flag("--exact-diameter", exact_diameter, "re-check every snapshot with the exact diameter");
        app->add_option("--out", out, "output directory (overrides config)");
    }

    cgg::ExperimentConfig load() const {
        cgg::ExperimentConfig cfg = cgg::ExperimentConfig::load(config);
        if (seed) cfg.master_seed = *seed;
        if (threads) cfg.threads = *threads;
        if (exact_diameter) cfg.exact_diameter = true;
        if (out) cfg.out = *out;
        return cfg;
    }
};

void save_config(const cgg::ExperimentConfig& cfg) {
    std::filesystem::create_directories(cfg.out);
    std::ofstream(cfg.out / "config.json") << cfg.to_json().dump(2) << '\n';
}

int cmd_generate(const CommonFlags& flags) {
    const auto cfg = flags.load();
    save_config(cfg);
    const auto res = cgg::generate(cfg);
    std::cout << "wrote " << res.records.size() << " graphs from " << res.seeds_found << " seeds to "
              << cfg.out.string() << " (" << res.snapshots_rejected << " snapshots failed the exact check)\n";
    return kExitOk;
}

int cmd_grid(const CommonFlags& flags) {
    const auto cfg = flags.load();
    save_config(cfg);
    const auto cells = cgg::run_success_grid(cfg, cfg.out);
    for (const auto& c : cells)
        std::cout << "diam=" << c.diam << " cc=" << c.cc << " ratio=" << c.success_ratio << " (" << c.reason << ")\n";
    return kExitOk;
}

int cmd_compare(const CommonFlags& flags) {
    const auto cfg = flags.load();
    save_config(cfg);
    const auto res = cgg::run_method_comparison(cfg);
    cgg::write_comparison(cfg.out, res);
    std::cout << "mcmc drift mean " << res.mcmc_stats.mean << ", diversity " << res.mcmc_diversity << "\n"
              << "hybrid drift mean " << res.hybrid_stats.mean << ", diversity " << res.hybrid_diversity << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& dir, const std::string& constraints_path) {
    const std::filesystem::path base(dir);
    const std::filesystem::path cpath =
        constraints_path.empty() ? base / cgg::kConstraintsName : std::filesystem::path(constraints_path);
    std::ifstream in(cpath);
    if (!in) throw cgg::ConfigError("cannot read " + cpath.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw cgg::ConfigError(cpath.string() + ": " + e.what());
    }
    const auto violations = cgg::verify_manifest(base, cgg::constraints_from_json(j));
    for (const auto& v : violations) std::cout << "record " << v.record_id << ": " << v.reason << "\n";
    if (!violations.empty()) return kExitVerifyFailed;
    std::cout << "ok\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generate and inspect graph ensembles with prescribed clustering and diameter"};
    app.require_subcommand(1);

    CommonFlags gen_flags, grid_flags, cmp_flags;
    gen_flags.attach(app.add_subcommand("generate", "ACO seeds followed by MCMC chains"), true);
    grid_flags.attach(app.add_subcommand("grid", "ACO success ratio over a (diameter, cc) grid"), true);
    cmp_flags.attach(app.add_subcommand("compare", "pure MCMC vs hybrid drift and diversity"), true);

    std::string verify_dir, verify_constraints;
    auto* verify = app.add_subcommand("verify", "recheck every graph in a manifest");
    verify->add_option("dir", verify_dir, "ensemble directory")->required()->check(CLI::ExistingDirectory);
    verify->add_option("--constraints", verify_constraints, "constraints JSON (default: dir/constraints.json)");

    std::string spectra_dir, spectra_out;
    std::size_t spectra_threads = 1;
    auto* spectra = app.add_subcommand("spectra", "export spectra and pairwise distances");
    spectra->add_option("dir", spectra_dir, "ensemble directory")->required()->check(CLI::ExistingDirectory);
    spectra->add_option("--out", spectra_out, "output directory (default: dir)");
    spectra->add_option("--threads", spectra_threads, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (app.got_subcommand("generate")) return cmd_generate(gen_flags);
        if (app.got_subcommand("grid")) return cmd_grid(grid_flags);
        if (app.got_subcommand("compare")) return cmd_compare(cmp_flags);
        if (app.got_subcommand("verify")) return cmd_verify(verify_dir, verify_constraints);
        if (app.got_subcommand("spectra")) {
            cgg::export_spectra(spectra_dir, spectra_out.empty() ? spectra_dir : spectra_out, spectra_threads);
            return kExitOk;
        }
    } catch (const cgg::SeedViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const auto& r : e.reasons()) std::cerr << "  " << r << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
