#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const fs::path kCli = CGG_CLI_PATH;

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const fs::path& work) {
    const fs::path log = work / "stdout.txt";
    const std::string cmd = kCli.string() + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("cgg_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kEnsembleConfig = R"({
  "n": 20, "m": 40,
  "constraints": {"cc_min": 0.15, "cc_max": 0.35, "diam_min": 3, "diam_max": 6},
  "ensemble_size": 8, "seeds": 2, "aco": {"iterations": 30}, "master_seed": 3
})";

}  // namespace

TEST_CASE("generate, verify, spectra; corruption gives exit code 2") {
    const fs::path work = scratch("gen");
    write(work / "cfg.json", kEnsembleConfig);
    const fs::path out = work / "ens";
    Run r = run("generate --config " + (work / "cfg.json").string() + " --out " + out.string(), work);
    REQUIRE(r.code == 0);
    CHECK(fs::exists(out / "manifest.jsonl"));
    CHECK(fs::exists(out / "constraints.json"));

    r = run("verify " + out.string(), work);
    CHECK(r.code == 0);

    r = run("spectra " + out.string() + " --out " + (work / "spec").string(), work);
    CHECK(r.code == 0);
    CHECK(fs::exists(work / "spec" / "distances.csv"));
    CHECK(fs::exists(work / "spec" / "spectra.json"));

    // drop the last edge of record 2
    const fs::path g2 = out / "graphs" / "rec_000002.edges";
    std::string text = slurp(g2);
    text.pop_back();
    text.erase(text.rfind('\n') + 1);
    write(g2, text);
    r = run("verify " + out.string(), work);
    CHECK(r.code == 2);
    CHECK(r.out.find("record 2") != std::string::npos);
    fs::remove_all(work);
}

TEST_CASE("generate output does not depend on --threads") {
    const fs::path work = scratch("threads");
    write(work / "cfg.json", kEnsembleConfig);
    REQUIRE(run("generate --config " + (work / "cfg.json").string() + " --threads 1 --out " + (work / "a").string(),
                work)
                .code == 0);
    REQUIRE(run("generate --config " + (work / "cfg.json").string() + " --threads 3 --out " + (work / "b").string(),
                work)
                .code == 0);
    CHECK(slurp(work / "a" / "manifest.jsonl") == slurp(work / "b" / "manifest.jsonl"));
    fs::remove_all(work);
}

TEST_CASE("--seed changes the ensemble") {
    const fs::path work = scratch("seed");
    write(work / "cfg.json", kEnsembleConfig);
    REQUIRE(run("generate --config " + (work / "cfg.json").string() + " --seed 1 --out " + (work / "a").string(), work)
                .code == 0);
    REQUIRE(run("generate --config " + (work / "cfg.json").string() + " --seed 2 --out " + (work / "b").string(), work)
                .code == 0);
    CHECK(slurp(work / "a" / "manifest.jsonl") != slurp(work / "b" / "manifest.jsonl"));
    fs::remove_all(work);
}

TEST_CASE("grid resumes from cached cells") {
    const fs::path work = scratch("grid");
    write(work / "cfg.json", R"({"n": 20, "density": 0.2, "diam_targets": [3, 5], "cc_targets": [0.3],
                                 "trials": 3, "aco": {"iterations": 8}})");
    const std::string args = "grid --config " + (work / "cfg.json").string() + " --out " + (work / "g").string();
    REQUIRE(run(args, work).code == 0);
    const std::string first = slurp(work / "g" / "grid.csv");
    CHECK(first.rfind("# cgg-grid v1\n", 0) == 0);
    CHECK(fs::exists(work / "g" / "cells" / "cell_d3_cc0.3.json"));
    REQUIRE(run(args, work).code == 0);
    CHECK(slurp(work / "g" / "grid.csv") == first);
    fs::remove_all(work);
}

TEST_CASE("compare writes both drift tables") {
    const fs::path work = scratch("compare");
    write(work / "cfg.json", kEnsembleConfig);
    REQUIRE(run("compare --config " + (work / "cfg.json").string() + " --out " + (work / "c").string(), work).code ==
            0);
    const std::string m = slurp(work / "c" / "drift_mcmc.csv");
    const std::string h = slurp(work / "c" / "drift_hybrid.csv");
    CHECK(m.substr(0, m.find('\n', m.find('\n') + 1)) == h.substr(0, h.find('\n', h.find('\n') + 1)));
    CHECK(fs::exists(work / "c" / "compare_summary.json"));
    fs::remove_all(work);
}

TEST_CASE("bad input exits with 1") {
    const fs::path work = scratch("bad");
    write(work / "cfg.json", R"({"n": 20, "unknown_key": true})");
    CHECK(run("generate --config " + (work / "cfg.json").string(), work).code == 1);
    write(work / "cfg.json", "{ not json");
    CHECK(run("grid --config " + (work / "cfg.json").string(), work).code == 1);
    CHECK(run("", work).code == 1);
    CHECK(run("generate", work).code == 1);
    fs::remove_all(work);
}
