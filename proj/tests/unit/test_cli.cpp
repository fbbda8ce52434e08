#include "cpcc/manifest.hpp"
#include "cpcc/storage.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace cpcc;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

RunResult run(const fs::path& dir, const std::string& args, const std::string& env = "") {
    const auto out = dir / "stdout.txt", err = dir / "stderr.txt";
    const std::string cmd = env + " '" + std::string(CPCC_CLI_PATH) + "' " + args + " >'" + out.string() + "' 2>'" +
                            err.string() + "'";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

} // namespace

TEST(Cli, HelpListsInterfaceFlags) {
    const auto dir = test::scratch_dir();
    const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
        {"ingest", {"--input", "--output", "--max-missing", "--min-mentions"}},
        {"aggregate", {"--events", "--out", "--min-weeks", "--window"}},
        {"build-proxies",
         {"--panel", "--embeddings", "--k", "--dtw-m", "--dtw-band", "--gazetteer", "--train-end", "--out"}},
        {"featurize", {"--panel", "--proxies", "--families", "--geo-res", "--out"}},
        {"train", {"--model", "--features", "--graph", "--horizons", "--seed", "--out"}},
        {"forecast", {"--model-dir", "--origins", "--out"}},
        {"evaluate", {"--forecasts", "--panel", "--out"}},
        {"frontier", {"--panel", "--out"}},
        {"ablate", {"--grid", "--out"}},
        {"synth", {"--seed", "--out", "--keywords", "--weeks"}},
        {"demo", {"--seed", "--out"}},
    };
    for (const auto& [cmd, flags] : cases) {
        const auto r = run(dir, cmd + " --help");
        EXPECT_EQ(r.code, 0) << cmd;
        for (const auto& f : flags) EXPECT_NE(r.out.find(f), std::string::npos) << cmd << " " << f;
        EXPECT_NE(r.out.find("--threads"), std::string::npos) << cmd;
        EXPECT_NE(r.out.find("--config"), std::string::npos) << cmd;
    }
    const auto top = run(dir, "--help");
    EXPECT_EQ(top.code, 0);
    for (const auto& [cmd, _] : cases) EXPECT_NE(top.out.find(cmd), std::string::npos) << cmd;
    const auto version = run(dir, "--version");
    EXPECT_EQ(version.code, 0);
    EXPECT_NE(version.out.find(manifest::kToolVersion), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
    const auto dir = test::scratch_dir();
    EXPECT_EQ(run(dir, "frobnicate").code, 2);
    EXPECT_EQ(run(dir, "evaluate --no-such-flag 1").code, 2);
    EXPECT_EQ(run(dir, "evaluate").code, 2);
    EXPECT_EQ(run(dir, "").code, 2);
    std::ofstream(dir / "bad.cfg") << "unknown_key = 3\n";
    EXPECT_EQ(run(dir, "frontier --config " + q(dir / "bad.cfg") + " --panel x --out y").code, 2);
}

TEST(Cli, MissingInputIsIoError) {
    const auto dir = test::scratch_dir();
    const auto r = run(dir, "evaluate --forecasts " + q(dir / "none.csv") + " --panel " + q(dir / "nopanel") +
                                " --out " + q(dir / "eval"));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.err.rfind("error: E_IO: ", 0), 0u) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, BadConfigValueIsConfigError) {
    const auto dir = test::scratch_dir();
    const auto r = run(dir, "synth --keywords 10 --weeks 5 --out " + q(dir / "s"));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.err.rfind("error: E_CONFIG: ", 0), 0u) << r.err;
}

TEST(Cli, StagePipelineWithManifests) {
    const auto dir = test::scratch_dir();
    const auto s = dir / "synth";
    auto r = run(dir, "synth --seed 3 --keywords 40 --weeks 60 --clusters 4 --embedding-dim 32 --out " + q(s));
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_TRUE(fs::exists(s / "events.jsonl"));
    ASSERT_TRUE(fs::exists(s / "embeddings.jsonl"));

    r = run(dir, "ingest --input " + q(s / "events.jsonl") + " --output " + q(dir / "clean.jsonl"));
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(manifest::verify(dir / "clean.jsonl").empty());
    r = run(dir, "aggregate --events " + q(dir / "clean.jsonl") + " --min-weeks 40 --window 60 --out " + q(dir / "panel"));
    ASSERT_EQ(r.code, 0) << r.err;
    const auto panel = storage::read_panel(dir / "panel");
    EXPECT_EQ(panel.n_weeks(), 60u);
    EXPECT_GE(panel.n_keywords(), 10u);
    EXPECT_LE(panel.n_keywords(), 40u);

    r = run(dir, "build-proxies --panel " + q(dir / "panel") + " --embeddings " + q(s / "embeddings.jsonl") +
                     " --k 5 --dtw-m 5 --train-end " + format_iso_week(panel.weeks[47]) + " --out " + q(dir / "proxies"));
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(storage::read_proxies(dir / "proxies", panel).config.train.end, 48u);

    r = run(dir, "featurize --panel " + q(dir / "panel") + " --proxies " + q(dir / "proxies") +
                     " --families core,geo,sem_cpc --geo-res country --out " + q(dir / "features"));
    ASSERT_EQ(r.code, 0) << r.err;
    r = run(dir, "train --model ridge --name r1 --features " + q(dir / "features") + " --horizons 1,6 --seed 1 --out " +
                     q(dir / "model"));
    ASSERT_EQ(r.code, 0) << r.err;
    r = run(dir, "forecast --model-dir " + q(dir / "model") + " --origins test --out " + q(dir / "f.csv"));
    ASSERT_EQ(r.code, 0) << r.err;
    r = run(dir, "train --model snaive --features " + q(dir / "features") + " --horizons 1,6 --out " + q(dir / "sn"));
    ASSERT_EQ(r.code, 0) << r.err;
    r = run(dir, "forecast --model-dir " + q(dir / "sn") + " --out " + q(dir / "sn.csv"));
    ASSERT_EQ(r.code, 0) << r.err;
    r = run(dir, "evaluate --forecasts " + q(dir / "f.csv") + " --forecasts " + q(dir / "sn.csv") + " --panel " +
                     q(dir / "panel") + " --out " + q(dir / "eval"));
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("r1"), std::string::npos);
    EXPECT_NE(r.out.find("snaive"), std::string::npos);
    for (const char* f : {"summary.csv", "per_keyword.csv", "long.csv"}) EXPECT_TRUE(fs::exists(dir / "eval" / f)) << f;
    r = run(dir, "frontier --panel " + q(dir / "panel") + " --out " + q(dir / "frontier.csv"));
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(slurp(dir / "frontier.csv").rfind("keyword,mean_cpc,cv,quadrant\n", 0), 0u);

    for (const auto& art : {dir / "panel", dir / "proxies", dir / "features", dir / "model", dir / "eval"}) {
        EXPECT_TRUE(fs::exists(art / "manifest.json")) << art;
        EXPECT_TRUE(manifest::verify(art).empty()) << art;
    }
    EXPECT_TRUE(manifest::verify(dir / "f.csv").empty());
    const auto m = manifest::read_manifest(dir / "features");
    EXPECT_EQ(m.command, "featurize");
    EXPECT_EQ(m.config.at("families"), "core,geo,sem_cpc");
    EXPECT_EQ(m.config.at("geo-res"), "country");
    EXPECT_FALSE(m.inputs.empty());

    // Re-running the recorded command reproduces the artifact hashes.
    const auto before = manifest::digest(dir / "features");
    r = run(dir, "featurize --panel " + q(dir / "panel") + " --proxies " + q(dir / "proxies") +
                     " --families core,geo,sem_cpc --geo-res country --out " + q(dir / "features"));
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(manifest::digest(dir / "features"), before);

    // Thread count does not change results.
    r = run(dir, "featurize --threads 3 --panel " + q(dir / "panel") + " --proxies " + q(dir / "proxies") +
                     " --families core,geo,sem_cpc --geo-res country --out " + q(dir / "features3"));
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(slurp(dir / "features3" / "features.bin"), slurp(dir / "features" / "features.bin"));
    EXPECT_EQ(manifest::read_manifest(dir / "features3").threads, 3u);
}

TEST(Cli, ConfigFilePrecedence) {
    const auto dir = test::scratch_dir();
    std::ofstream(dir / "synth.cfg") << "# tiny run\nkeywords = 30\nweeks = 40\nclusters = 3\nembedding-dim = 16\n"
                                        "seed = 5\n";
    auto r = run(dir, "synth --config " + q(dir / "synth.cfg") + " --weeks 45 --out " + q(dir / "s"));
    ASSERT_EQ(r.code, 0) << r.err;
    const auto p = storage::read_panel(dir / "s" / "panel");
    EXPECT_EQ(p.n_weeks(), 45u);
    const auto m = manifest::read_manifest(dir / "s" / "panel");
    EXPECT_EQ(m.config.at("keywords"), "30");
    EXPECT_EQ(m.config.at("weeks"), "45");
    EXPECT_EQ(m.seed, 5u);
    r = run(dir, "synth --out " + q(dir / "t") + " --keywords 30 --weeks 40 --clusters 3 --embedding-dim 16",
            "CPCC_THREADS=2");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(manifest::read_manifest(dir / "t" / "panel").threads, 2u);
}

TEST(Cli, AblateGrid) {
    const auto dir = test::scratch_dir();
    auto r = run(dir, "synth --seed 4 --keywords 40 --weeks 60 --clusters 4 --embedding-dim 32 --out " + q(dir / "s"));
    ASSERT_EQ(r.code, 0) << r.err;
    r = run(dir, "build-proxies --panel " + q(dir / "s" / "panel") + " --embeddings " + q(dir / "s" / "embeddings.jsonl") +
                     " --k 5 --dtw-m 5 --out " + q(dir / "proxies"));
    ASSERT_EQ(r.code, 0) << r.err;
    std::ofstream(dir / "grid.cfg") << "panel = s/panel\nproxies = proxies\nhorizons = 1,6\nmodel = ridge\n"
                                       "config.core = core\nconfig.sem = core,sem_cpc\nconfig.geo = core,geo@city\n";
    r = run(dir, "ablate --grid " + q(dir / "grid.cfg") + " --out " + q(dir / "abl"));
    ASSERT_EQ(r.code, 0) << r.err;
    const auto csv = slurp(dir / "abl" / "ablation.csv");
    std::size_t lines = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
    EXPECT_EQ(lines, 1u + 3u * 2u);
    EXPECT_TRUE(manifest::verify(dir / "abl").empty());
}
