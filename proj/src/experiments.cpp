#include "cgg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>

#include "cgg/aco.hpp"
#include "cgg/diameter.hpp"
#include "cgg/edge_list.hpp"
#include "cgg/errors.hpp"
#include "cgg/parallel.hpp"
#include "cgg/sampler.hpp"

namespace cgg {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// RNG stream tags; one namespace of sub-streams per experiment kind.
enum StreamTag : std::uint64_t {
    kGridStream = 1,
    kCompareSeedStream = 2,
    kCompareChainStream = 3,
    kGenerateStream = 4,
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::ofstream open_out(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    return out;
}

// Per-chain sample counts: L split across `parts` as evenly as possible.
std::vector<std::size_t> partition(std::size_t total, std::size_t parts) {
    std::vector<std::size_t> out(parts, total / parts);
    for (std::size_t i = 0; i < total % parts; ++i) ++out[i];
    return out;
}

json cell_key(const ExperimentConfig& cfg) {
    return json{{"m", cfg.edge_count()},
                {"trials", cfg.trials},
                {"cc_half_width", cfg.cc_half_width},
                {"diam_half_width", cfg.diam_half_width},
                {"master_seed", cfg.master_seed},
                {"ants", cfg.aco.ants},
                {"iterations", cfg.aco.iterations}};
}

fs::path cell_path(const fs::path& dir, std::uint32_t diam, double cc) {
    return dir / "cells" / ("cell_d" + std::to_string(diam) + "_cc" + fmt(cc) + ".json");
}

}  // namespace

// ---------------------------------------------------------------------------

ordered_json EnsembleRecord::to_json() const {
    ordered_json j;
    j["id"] = id;
    j["file"] = file;
    j["method"] = method;
    j["seed_id"] = seed_id;
    j["step"] = step;
    j["cc"] = cc;
    j["d_hat"] = d_hat;
    j["exact_diameter"] = exact_diameter ? ordered_json(*exact_diameter) : ordered_json(nullptr);
    j["rng_stream"] = rng_stream;
    return j;
}

EnsembleRecord EnsembleRecord::from_json(const json& j) {
    EnsembleRecord r;
    r.id = j.at("id").get<std::size_t>();
    r.file = j.at("file").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.seed_id = j.at("seed_id").get<std::size_t>();
    r.step = j.at("step").get<std::uint64_t>();
    r.cc = j.at("cc").get<double>();
    r.d_hat = j.at("d_hat").get<std::uint32_t>();
    if (j.contains("exact_diameter") && !j.at("exact_diameter").is_null())
        r.exact_diameter = j.at("exact_diameter").get<std::uint32_t>();
    r.rng_stream = j.value("rng_stream", std::uint64_t{0});
    return r;
}

void write_manifest(const fs::path& path, const std::vector<EnsembleRecord>& records) {
    auto out = open_out(path);
    for (const auto& r : records) out << r.to_json().dump() << '\n';
}

std::vector<EnsembleRecord> read_manifest(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read manifest " + path.string());
    std::vector<EnsembleRecord> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(EnsembleRecord::from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw Error("manifest line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

json GridCell::to_json() const {
    return json{{"diam", diam},
                {"cc", cc},
                {"density", density},
                {"m", m},
                {"trials", trials},
                {"successes", successes},
                {"success_ratio", success_ratio},
                {"diversity", diversity ? json(*diversity) : json(nullptr)},
                {"reason", reason}};
}

GridCell GridCell::from_json(const json& j) {
    GridCell c;
    c.diam = j.at("diam").get<std::uint32_t>();
    c.cc = j.at("cc").get<double>();
    c.density = j.at("density").get<double>();
    c.m = j.at("m").get<std::size_t>();
    c.trials = j.at("trials").get<std::size_t>();
    c.successes = j.at("successes").get<std::size_t>();
    c.success_ratio = j.at("success_ratio").get<double>();
    if (!j.at("diversity").is_null()) c.diversity = j.at("diversity").get<double>();
    c.reason = j.at("reason").get<std::string>();
    return c;
}

void write_grid_csv(const fs::path& path, const std::vector<GridCell>& cells) {
    auto out = open_out(path);
    out << "# cgg-grid v1\n";
    out << "diam,cc,density,success_ratio,diversity,trials,m,successes,reason\n";
    for (const auto& c : cells) {
        out << c.diam << ',' << fmt(c.cc) << ',' << fmt(c.density) << ',' << fmt(c.success_ratio) << ','
            << (c.diversity ? fmt(*c.diversity) : std::string{}) << ',' << c.trials << ',' << c.m << ','
            << c.successes << ',' << c.reason << '\n';
    }
}

namespace {

GridCell run_cell(const ExperimentConfig& cfg, std::size_t di, std::size_t ci) {
    GridCell cell;
    cell.diam = cfg.diam_targets[di];
    cell.cc = cfg.cc_targets[ci];
    cell.density = cfg.edge_density();
    cell.m = cfg.edge_count();
    cell.trials = cfg.trials;

    const Constraints c = cfg.constraints_for(cell.diam, cell.cc);
    if (c.n < static_cast<std::size_t>(c.diam_min) + 1) {
        cell.reason = "too_few_nodes";
        return cell;
    }
    if (c.m > available_edge_count(balanced_layer_sizes(c.n, c.diam_min))) {
        cell.reason = "infeasible_edge_count";
        return cell;
    }

    std::vector<std::optional<Spectrum>> found(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
        Rng rng = make_rng(cfg.master_seed, {kGridStream, di, ci, t});
        const AcoResult res = run_aco(c, cfg.aco, 1, rng);
        if (!res.solutions.empty()) found[t] = spectrum(res.solutions.front().graph);
    });

    std::vector<Spectrum> spectra;
    for (auto& s : found)
        if (s) spectra.push_back(std::move(*s));
    cell.successes = spectra.size();
    cell.success_ratio = static_cast<double>(cell.successes) / static_cast<double>(cfg.trials);
    if (spectra.size() >= 2) cell.diversity = ensemble_diversity(spectra);
    return cell;
}

}  // namespace

std::vector<GridCell> run_success_grid(const ExperimentConfig& cfg, const std::optional<fs::path>& out_dir) {
    cfg.validate();
    if (cfg.diam_targets.empty() || cfg.cc_targets.empty())
        throw ConfigError("grid: 'diam_targets' and 'cc_targets' must be non-empty");
    const json key = cell_key(cfg);
    std::vector<GridCell> cells;
    for (std::size_t di = 0; di < cfg.diam_targets.size(); ++di) {
        for (std::size_t ci = 0; ci < cfg.cc_targets.size(); ++ci) {
            const auto diam = cfg.diam_targets[di];
            const double cc = cfg.cc_targets[ci];
            if (out_dir) {
                const fs::path cached = cell_path(*out_dir, diam, cc);
                std::ifstream in(cached);
                if (in) {
                    json j;
                    try {
                        in >> j;
                        if (j.at("key") == key) {
                            cells.push_back(GridCell::from_json(j.at("cell")));
                            continue;
                        }
                    } catch (const json::exception&) {
                        // unreadable cache entry: recompute
                    }
                }
            }
            GridCell cell = run_cell(cfg, di, ci);
            if (out_dir) {
                auto out = open_out(cell_path(*out_dir, diam, cc));
                out << json{{"key", key}, {"cell", cell.to_json()}}.dump(2) << '\n';
            }
            cells.push_back(std::move(cell));
        }
    }
    if (out_dir) write_grid_csv(*out_dir / "grid.csv", cells);
    return cells;
}

// ---------------------------------------------------------------------------

SummaryStats summarize(const std::vector<double>& values) {
    SummaryStats s;
    s.count = values.size();
    if (values.empty()) return s;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double sq = 0.0;
        for (double v : values) sq += (v - s.mean) * (v - s.mean);
        s.variance = sq / static_cast<double>(values.size() - 1);
    }
    return s;
}

namespace {

std::vector<Graph> find_independent_seeds(const ExperimentConfig& cfg, const Constraints& c, std::size_t wanted) {
    // Up to 4x as many ACO instances as seeds wanted, first successes kept.
    const std::size_t attempts = 4 * wanted;
    std::vector<std::optional<Graph>> found(attempts);
    std::size_t done = 0;
    std::vector<Graph> seeds;
    while (seeds.size() < wanted && done < attempts) {
        const std::size_t batch = std::min(attempts - done, wanted - seeds.size());
        parallel_for(batch, cfg.threads, [&](std::size_t i) {
            Rng rng = make_rng(cfg.master_seed, {kCompareSeedStream, done + i});
            AcoResult res = run_aco(c, cfg.aco, 1, rng);
            if (!res.solutions.empty()) found[done + i] = std::move(res.solutions.front().graph);
        });
        for (std::size_t i = done; i < done + batch; ++i)
            if (found[i] && seeds.size() < wanted) seeds.push_back(std::move(*found[i]));
        done += batch;
    }
    return seeds;
}

}  // namespace

ComparisonResult run_method_comparison(const ExperimentConfig& cfg) {
    cfg.validate();
    ComparisonResult result;
    const Constraints c = cfg.primary_constraints();
    result.constraints = c;

    const std::vector<Graph> seeds = find_independent_seeds(cfg, c, cfg.seeds);
    if (seeds.empty()) throw NoSeedFound("ACO found no valid seed graph for the comparison constraints");
    result.seeds_found = seeds.size();
    const Spectrum reference = spectrum(seeds.front());

    // Task 0 is the pure chain; task 1+i is hybrid chain i.
    const std::vector<std::size_t> quota = partition(cfg.ensemble_size, seeds.size());
    std::vector<std::vector<ChainSample>> runs(seeds.size() + 1);
    parallel_for(seeds.size() + 1, cfg.threads, [&](std::size_t task) {
        const std::size_t count = task == 0 ? cfg.ensemble_size : quota[task - 1];
        if (count == 0) return;
        const Graph& seed = task == 0 ? seeds.front() : seeds[task - 1];
        Rng rng = make_rng(cfg.master_seed, {kCompareChainStream, task});
        runs[task] = run_chain(seed, c, cfg.chain_options(count), rng).samples;
    });

    auto collect = [&](std::size_t first, std::size_t last, std::vector<DriftSample>& drift) {
        std::vector<Spectrum> spectra;
        for (std::size_t task = first; task < last; ++task) {
            for (const ChainSample& s : runs[task]) {
                if (s.step == 0) continue;  // the seed itself
                Spectrum sp = spectrum(s.graph);
                DriftSample d;
                d.sample = drift.size();
                d.seed_id = task == 0 ? 0 : task - 1;
                d.step = s.step;
                d.drift = spectral_distance(sp, reference);
                d.exact_diameter = s.exact_diameter;
                drift.push_back(d);
                spectra.push_back(std::move(sp));
            }
        }
        return spectra;
    };
    const auto mcmc_spectra = collect(0, 1, result.mcmc);
    const auto hybrid_spectra = collect(1, runs.size(), result.hybrid);
    if (result.mcmc.empty() || result.hybrid.empty())
        throw ConfigError("compare: no post-burn-in samples; increase ensemble_size or burn_in");

    auto values = [](const std::vector<DriftSample>& d) {
        std::vector<double> v;
        for (const auto& s : d) v.push_back(s.drift);
        return v;
    };
    result.mcmc_stats = summarize(values(result.mcmc));
    result.hybrid_stats = summarize(values(result.hybrid));
    if (mcmc_spectra.size() >= 2) result.mcmc_diversity = ensemble_diversity(mcmc_spectra);
    if (hybrid_spectra.size() >= 2) result.hybrid_diversity = ensemble_diversity(hybrid_spectra);
    return result;
}

void write_drift_csv(const fs::path& path, const std::vector<DriftSample>& drift) {
    auto out = open_out(path);
    out << "# cgg-drift v1\n";
    out << "sample,seed_id,step,drift,exact_diameter\n";
    for (const auto& d : drift) {
        out << d.sample << ',' << d.seed_id << ',' << d.step << ',' << fmt(d.drift) << ','
            << (d.exact_diameter ? std::to_string(*d.exact_diameter) : std::string{}) << '\n';
    }
}

void write_comparison(const fs::path& out_dir, const ComparisonResult& result) {
    write_drift_csv(out_dir / "drift_mcmc.csv", result.mcmc);
    write_drift_csv(out_dir / "drift_hybrid.csv", result.hybrid);
    auto stats = [](const SummaryStats& s) {
        return ordered_json{{"count", s.count}, {"mean", s.mean}, {"variance", s.variance}};
    };
    ordered_json j;
    j["constraints"] = constraints_to_json(result.constraints);
    j["seeds_found"] = result.seeds_found;
    j["mcmc"] = stats(result.mcmc_stats);
    j["hybrid"] = stats(result.hybrid_stats);
    j["mcmc_diversity"] = result.mcmc_diversity;
    j["hybrid_diversity"] = result.hybrid_diversity;
    auto out = open_out(out_dir / "compare_summary.json");
    out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

namespace {

struct SeedChainOutput {
    std::vector<ChainSample> samples;
    std::size_t rejected = 0;
};

// Runs a chain from `state` and keeps snapshots whose exact diameter is in
// bounds until `quota` are collected or the step budget runs out.
SeedChainOutput sample_verified(ChainState state, const Constraints& c, const ChainOptions& opts,
                                std::size_t quota, Rng& rng) {
    SeedChainOutput out;
    const std::uint64_t budget = opts.burn_in + opts.thinning * (4 * static_cast<std::uint64_t>(quota) + 10);
    for (std::uint64_t t = 0; out.samples.size() < quota && t <= budget; ++t) {
        if (t > 0) mh_step(state, c, rng);
        if (t < opts.burn_in || (t - opts.burn_in) % opts.thinning != 0) continue;
        const DiameterEstimate exact = exact_diameter(state.graph);
        if (!exact.connected || !c.diam_ok(*exact.exact)) {
            ++out.rejected;
            continue;
        }
        ChainSample s;
        s.graph = state.graph;
        s.step = t;
        s.cc = state.cc();
        s.d_hat = state.d_hat;
        s.exact_diameter = exact.exact;
        out.samples.push_back(std::move(s));
    }
    return out;
}

}  // namespace

GenerateResult generate(const ExperimentConfig& cfg) {
    cfg.validate();
    GenerateResult result;
    const Constraints c = cfg.primary_constraints();
    result.constraints = c;

    Rng aco_rng = make_rng(cfg.master_seed, {kGenerateStream, 0});
    AcoResult aco = run_aco(c, cfg.aco, cfg.seeds, aco_rng);
    if (aco.solutions.empty()) throw NoSeedFound("ACO found no valid seed graph within the iteration budget");
    result.seeds_found = aco.solutions.size();

    std::vector<ChainState> states;
    for (const auto& sol : aco.solutions) states.push_back(validate_seed(sol.graph, c));

    const std::vector<std::size_t> quota = partition(cfg.ensemble_size, states.size());
    const ChainOptions opts = cfg.chain_options(1);
    std::vector<SeedChainOutput> outputs(states.size());
    parallel_for(states.size(), cfg.threads, [&](std::size_t i) {
        Rng rng = make_rng(cfg.master_seed, {kGenerateStream, 1, i});
        outputs[i] = sample_verified(states[i], c, opts, quota[i], rng);
    });

    const fs::path graphs_dir = cfg.out / "graphs";
    fs::create_directories(graphs_dir);
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        result.snapshots_rejected += outputs[i].rejected;
        for (const ChainSample& s : outputs[i].samples) {
            EnsembleRecord r;
            r.id = result.records.size();
            char name[32];
            std::snprintf(name, sizeof name, "rec_%06zu.edges", r.id);
            r.file = (fs::path("graphs") / name).generic_string();
            r.method = "hybrid";
            r.seed_id = i;
            r.step = s.step;
            r.cc = s.cc;
            r.d_hat = s.d_hat;
            r.exact_diameter = s.exact_diameter;
            r.rng_stream = derive_seed(cfg.master_seed, {kGenerateStream, 1, i});
            save_edge_list(cfg.out / r.file, s.graph);
            result.records.push_back(std::move(r));
        }
    }
    write_manifest(cfg.out / kManifestName, result.records);
    auto out = open_out(cfg.out / kConstraintsName);
    out << constraints_to_json(c).dump(2) << '\n';
    return result;
}

// ---------------------------------------------------------------------------

std::vector<Violation> verify_manifest(const fs::path& dir, const Constraints& c) {
    std::vector<Violation> out;
    for (const EnsembleRecord& r : read_manifest(dir / kManifestName)) {
        auto fail = [&](std::string why) { out.push_back({r.id, std::move(why)}); };
        Graph g;
        try {
            g = load_edge_list(dir / r.file);
        } catch (const Error& e) {
            fail(e.what());
            continue;
        }
        if (g.num_nodes() != c.n) fail("node count " + std::to_string(g.num_nodes()));
        if (g.num_edges() != c.m) fail("edge count " + std::to_string(g.num_edges()));
        const double cc = clustering_coefficient(recount_triangles_triplets(g));
        if (!c.cc_ok(cc)) fail("clustering coefficient " + fmt(cc) + " out of bounds");
        if (std::abs(cc - r.cc) > 1e-12) fail("recorded cc " + fmt(r.cc) + " != recomputed " + fmt(cc));
        const DiameterEstimate d = exact_diameter(g);
        if (!d.connected) {
            fail("graph is disconnected");
        } else {
            if (!c.diam_ok(*d.exact)) fail("diameter " + std::to_string(*d.exact) + " out of bounds");
            if (r.exact_diameter && *r.exact_diameter != *d.exact)
                fail("recorded diameter " + std::to_string(*r.exact_diameter) + " != recomputed " +
                     std::to_string(*d.exact));
        }
    }
    return out;
}

void export_spectra(const fs::path& dir, const fs::path& out_dir, std::size_t threads) {
    const auto records = read_manifest(dir / kManifestName);
    std::vector<Spectrum> spectra(records.size());
    parallel_for(records.size(), threads,
                 [&](std::size_t i) { spectra[i] = spectrum(load_edge_list(dir / records[i].file)); });

    const auto dist = distance_matrix(spectra);
    auto csv = open_out(out_dir / "distances.csv");
    csv << "# cgg-distances v1\n";
    csv << "id";
    for (const auto& r : records) csv << ',' << r.id;
    csv << '\n';
    for (std::size_t i = 0; i < records.size(); ++i) {
        csv << records[i].id;
        for (std::size_t j = 0; j < records.size(); ++j) csv << ',' << fmt(dist[i][j]);
        csv << '\n';
    }

    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < records.size(); ++i)
        arr.push_back(ordered_json{{"id", records[i].id}, {"eigenvalues", spectra[i].eigenvalues}});
    auto js = open_out(out_dir / "spectra.json");
    js << arr.dump() << '\n';
}

}  // namespace cgg
