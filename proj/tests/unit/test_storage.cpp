#include "cpcc/manifest.hpp"
#include "cpcc/storage.hpp"
#include "cpcc/synth.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cstring>
#include <fstream>

using namespace cpcc;
namespace fs = std::filesystem;

namespace {

synth::SynthConfig tiny_synth() {
    synth::SynthConfig c;
    c.keywords = 24;
    c.weeks = 40;
    c.clusters = 3;
    c.embedding_dim = 16;
    return c;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

} // namespace

TEST(Storage, Float32LittleEndian) {
    const auto dir = test::scratch_dir();
    const std::vector<float> v{1.0f, -2.5f, 3.4028235e38f, 1e-45f};
    storage::write_f32(dir / "a.bin", v);
    EXPECT_EQ(storage::read_f32(dir / "a.bin"), v);
    std::ifstream in(dir / "a.bin", std::ios::binary);
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    // 1.0f = 0x3f800000, least significant byte first.
    EXPECT_EQ(b[0], 0x00);
    EXPECT_EQ(b[3], 0x3f);
    EXPECT_EQ(fs::file_size(dir / "a.bin"), 16u);
    EXPECT_THROW(storage::read_f32(dir / "missing.bin"), Error);
}

TEST(Storage, PanelRoundTrip) {
    const auto dir = test::scratch_dir();
    auto out = synth::generate(tiny_synth());
    auto p = panel::impute_gaps(out.panel).panel;
    storage::write_panel(dir, p);
    const auto back = storage::read_panel(dir);
    EXPECT_EQ(back.keywords, p.keywords);
    EXPECT_EQ(back.weeks, p.weeks);
    EXPECT_EQ(back.impressions, p.impressions);
    EXPECT_EQ(back.clicks, p.clicks);
    EXPECT_EQ(back.observed, p.observed);
    EXPECT_EQ(back.imputed, p.imputed);
    EXPECT_EQ(back.device_counts, p.device_counts);
    EXPECT_EQ(back.searchtype_counts, p.searchtype_counts);
    for (std::size_t i = 0; i < p.cpc.data().size(); ++i) {
        ASSERT_TRUE(same_bits(back.cpc.data()[i], p.cpc.data()[i]));
        ASSERT_TRUE(same_bits(back.cost.data()[i], p.cost.data()[i]));
    }
    // Undefined CPC survives as undefined.
    auto gappy = out.panel;
    gappy.cpc(0, 0) = panel::kUndefined;
    storage::write_panel(dir, gappy);
    EXPECT_FALSE(storage::read_panel(dir).has_cpc(0, 0));
}

TEST(Storage, ProxiesAndFeaturesRoundTrip) {
    const auto dir = test::scratch_dir();
    const auto out = synth::generate(tiny_synth());
    const auto p = panel::impute_gaps(out.panel).panel;
    proxies::ProxyConfig cfg;
    cfg.k = 3;
    cfg.dtw_m = 4;
    cfg.dtw_band = 2;
    cfg.train = {0, 32};
    const auto set = proxies::build_proxies(p, out.embeddings, proxies::Gazetteer::builtin(), cfg);
    storage::write_proxies(dir / "proxies", set, cfg, p.keywords);
    const auto back = storage::read_proxies(dir / "proxies", p);
    EXPECT_EQ(back.set.graph.edges, set.graph.edges);
    EXPECT_EQ(back.set.dtw.lists, set.dtw.lists);
    EXPECT_EQ(back.set.geo, set.geo);
    EXPECT_EQ(back.config.train.end, 32u);
    EXPECT_EQ(back.config.dtw_band, 2u);
    EXPECT_EQ(back.set.embeddings.source, proxies::EmbeddingSource::exported);
    ASSERT_EQ(back.set.embeddings.values.size(), set.embeddings.values.size());
    for (std::size_t i = 0; i < set.embeddings.values.size(); ++i) {
        EXPECT_NEAR(back.set.embeddings.values[i], set.embeddings.values[i], 1e-15);
    }

    features::FeatureConfig fc;
    fc.families = {features::Family::core, features::Family::geo, features::Family::sem_cpc};
    fc.train_end = 32;
    const auto x = features::build_features(p, set, fc);
    storage::write_features(dir / "features", x, fc, {{"panel", "somewhere"}});
    const auto fx = storage::read_features(dir / "features");
    EXPECT_EQ(fx.tensor.catalog, x.catalog);
    EXPECT_EQ(fx.tensor.origin_weeks, x.origin_weeks);
    EXPECT_EQ(fx.tensor.config_hash, x.config_hash);
    EXPECT_EQ(fx.description, fc.describe());
    EXPECT_EQ(fx.sources.at("panel"), "somewhere");
    ASSERT_EQ(fx.tensor.values.size(), x.values.size());
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        ASSERT_EQ(fx.tensor.values[i], static_cast<double>(static_cast<float>(x.values[i])));
    }
    EXPECT_EQ(fs::file_size(dir / "features" / "features.bin"), x.values.size() * 4);
}

TEST(Storage, RidgeCheckpointPredictsIdentically) {
    const auto dir = test::scratch_dir();
    const auto p = test::random_panel(3, 6, 40);
    features::FeatureConfig fc;
    const auto x = features::build_features(p, {}, {}, {}, proxies::Gazetteer::builtin(), fc);
    const auto m = models::fit_ridge(x, p, {{1, 6}, 12}, 1.0, {0, 32}, models::RidgeScaling::keyword);
    storage::Checkpoint c;
    c.model = "ridge";
    c.name = "ridge_core";
    c.horizons = {1, 6};
    c.ridge = m;
    c.config_hash = m.config_hash();
    c.train = {0, 32};
    storage::write_checkpoint(dir, c);
    const auto back = storage::read_checkpoint(dir);
    EXPECT_EQ(back.name, "ridge_core");
    EXPECT_EQ(back.horizons, c.horizons);
    ASSERT_TRUE(back.ridge);
    EXPECT_EQ(back.ridge->scaling, models::RidgeScaling::keyword);
    const std::vector<models::OriginRequest> req{{1, {32, 33}}, {6, {32}}};
    const auto a = models::predict(m, x, req), b = models::predict(*back.ridge, x, req);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    // Parameters are stored as float32.
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        EXPECT_NEAR(a.entries[i].value, b.entries[i].value, 1e-4 * std::max(1.0, a.entries[i].value));
    }
    EXPECT_THROW(storage::read_checkpoint(dir / "nope"), Error);
}

TEST(Manifest, Sha256KnownVectors) {
    EXPECT_EQ(manifest::sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    EXPECT_EQ(manifest::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Manifest, DirectoryWriteReadVerify) {
    const auto dir = test::scratch_dir() / "art";
    fs::create_directories(dir / "sub");
    std::ofstream(dir / "a.txt") << "alpha\n";
    std::ofstream(dir / "sub" / "b.txt") << "beta\n";
    manifest::RunManifest m;
    m.command = "featurize";
    m.argv = {"cpcc", "featurize"};
    m.config = {{"families", "core"}};
    m.seed = 7;
    m.version = manifest::kToolVersion;
    m.threads = 1;
    manifest::write_manifest(dir, m);
    EXPECT_TRUE(fs::exists(dir / "manifest.json"));
    const auto back = manifest::read_manifest(dir);
    EXPECT_EQ(back.command, "featurize");
    EXPECT_EQ(back.seed, 7u);
    EXPECT_EQ(back.config.at("families"), "core");
    ASSERT_EQ(back.outputs.size(), 2u);
    EXPECT_EQ(back.outputs[0].path, "a.txt");
    EXPECT_EQ(back.outputs[1].path, "sub/b.txt");
    EXPECT_EQ(back.outputs[0].sha256, manifest::sha256_hex("alpha\n"));
    EXPECT_TRUE(manifest::verify(dir).empty());

    std::ofstream(dir / "sub" / "b.txt") << "changed\n";
    std::ofstream(dir / "c.txt") << "new\n";
    fs::remove(dir / "a.txt");
    const auto problems = manifest::verify(dir);
    EXPECT_EQ(problems.size(), 3u);
}

TEST(Manifest, FileArtifactWithSideOutputs) {
    const auto dir = test::scratch_dir();
    std::ofstream(dir / "events.jsonl") << "{}\n";
    std::ofstream(dir / "events.jsonl.rejections.jsonl") << "";
    manifest::RunManifest m;
    m.command = "ingest";
    manifest::write_manifest(dir / "events.jsonl", m, {dir / "events.jsonl.rejections.jsonl"});
    EXPECT_TRUE(fs::exists(dir / "events.jsonl.manifest.json"));
    EXPECT_EQ(manifest::read_manifest(dir / "events.jsonl").outputs.size(), 2u);
    EXPECT_TRUE(manifest::verify(dir / "events.jsonl").empty());
    std::ofstream(dir / "events.jsonl.rejections.jsonl") << "x";
    EXPECT_EQ(manifest::verify(dir / "events.jsonl").size(), 1u);
    EXPECT_THROW(manifest::write_manifest(dir / "events.jsonl", m, {dir / "other" / "x"}), Error);
    EXPECT_TRUE(manifest::is_manifest_file("a/manifest.json"));
    EXPECT_TRUE(manifest::is_manifest_file("x.csv.manifest.json"));
    EXPECT_FALSE(manifest::is_manifest_file("x.json"));
}

TEST(Manifest, DigestIgnoresManifestFiles) {
    const auto dir = test::scratch_dir();
    std::ofstream(dir / "a.txt") << "alpha\n";
    const auto before = manifest::digest(dir);
    manifest::write_manifest(dir, manifest::RunManifest{});
    EXPECT_EQ(manifest::digest(dir), before);
    EXPECT_EQ(before, manifest::sha256_hex("a.txt\t" + manifest::sha256_hex("alpha\n") + "\n"));
}
