#include "cpcc/error.hpp"
#include "cpcc/embeddings.hpp"
#include "cpcc/semantic_graph.hpp"
#include "cpcc/rng.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace cpcc;
using namespace cpcc::proxies;

namespace {

double norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

EmbeddingMatrix matrix_from(const std::vector<std::vector<double>>& rows) {
    EmbeddingMatrix e;
    e.rows = rows.size();
    e.dim = rows[0].size();
    for (const auto& r : rows) {
        const double n = norm(r);
        for (double x : r) e.values.push_back(x / n);
    }
    return e;
}

EmbeddingMatrix random_matrix(Rng& rng, std::size_t n, std::size_t d) {
    std::vector<std::vector<double>> rows(n, std::vector<double>(d));
    for (auto& r : rows) {
        for (auto& x : r) x = rng.normal();
    }
    return matrix_from(rows);
}

std::string jsonl_record(const std::string& kw, const std::vector<double>& v) {
    std::ostringstream s;
    s << "{\"keyword\":\"" << kw << "\",\"vector\":[";
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << "]}\n";
    return s.str();
}

} // namespace

TEST(HashEmbed, DeterministicUnitVectors) {
    const auto a = hash_embed("car rental", 384);
    EXPECT_EQ(a, hash_embed("car rental", 384));
    EXPECT_EQ(a.size(), 384u);
    EXPECT_NEAR(norm(a), 1.0, 1e-9);
    for (const char* kw : {"a", "zzz", "car rental lisbon airport", "x y z"}) {
        EXPECT_NEAR(norm(hash_embed(kw, 64)), 1.0, 1e-9) << kw;
    }
    EXPECT_THROW(hash_embed("", 384), Error);
}

TEST(HashEmbed, SharedTrigramsRaiseSimilarity) {
    const auto porto = hash_embed("car rental porto");
    const auto lisbon = hash_embed("car rental lisbon");
    const auto junk = hash_embed("zzz qqq");
    EXPECT_GT(dot(porto, lisbon), dot(porto, junk));
}

TEST(LoadEmbeddings, AllExported) {
    Rng rng(1);
    std::vector<std::string> kws;
    std::string file;
    for (int i = 0; i < 20; ++i) {
        kws.push_back("keyword " + std::to_string(i));
        std::vector<double> v(384);
        for (auto& x : v) x = rng.normal();
        file += jsonl_record(kws.back(), v);
    }
    std::istringstream in(file);
    const auto e = load_embeddings(in, kws);
    EXPECT_EQ(e.rows, 20u);
    EXPECT_EQ(e.dim, 384u);
    EXPECT_EQ(e.source, EmbeddingSource::exported);
    EXPECT_EQ(e.fallback_rows, 0u);
    for (std::size_t i = 0; i < e.rows; ++i) EXPECT_NEAR(norm(e.row(i)), 1.0, 1e-9);
}

TEST(LoadEmbeddings, MissingAndZeroRowsFallBack) {
    std::vector<std::string> kws{"a b", "c d", "e f", "g h", "i j", "k l"};
    std::string file;
    // Records written out of order; "e f", "g h", "i j" omitted; "k l" is zero.
    file += jsonl_record("c d", {0, 3, 4, 0, 0, 0, 0, 0});
    file += jsonl_record("a b", {2, 0, 0, 0, 0, 0, 0, 0});
    file += jsonl_record("k l", {0, 0, 0, 0, 0, 0, 0, 0});
    file += jsonl_record("unused", {1, 1, 1, 1, 1, 1, 1, 1});
    std::istringstream in(file);
    const auto e = load_embeddings(in, kws);
    EXPECT_EQ(e.fallback_rows, 4u);
    EXPECT_EQ(e.dim, 8u);
    EXPECT_EQ(std::vector<double>(e.row(0).begin(), e.row(0).end()), (std::vector<double>{1, 0, 0, 0, 0, 0, 0, 0}));
    EXPECT_NEAR(e.row(1)[1], 0.6, 1e-12);
    EXPECT_NEAR(e.row(1)[2], 0.8, 1e-12);
    for (std::size_t k : {2u, 3u, 4u, 5u}) {
        const auto fb = hash_embed(kws[k], 8);
        for (std::size_t j = 0; j < 8; ++j) EXPECT_NEAR(e.row(k)[j], fb[j], 1e-12) << kws[k];
    }
    for (std::size_t i = 0; i < e.rows; ++i) EXPECT_NEAR(norm(e.row(i)), 1.0, 1e-9);
}

TEST(LoadEmbeddings, Errors) {
    std::vector<std::string> kws{"a b"};
    std::istringstream empty("");
    EXPECT_THROW(load_embeddings(empty, kws), Error);
    std::istringstream mixed(jsonl_record("a b", {1, 2, 3}) + jsonl_record("c d", {1, 2}));
    EXPECT_THROW(load_embeddings(mixed, kws), Error);
}

TEST(LoadEmbeddings, WriteReadRoundTrip) {
    Rng rng(2);
    const auto e = random_matrix(rng, 7, 16);
    std::vector<std::string> kws;
    for (int i = 0; i < 7; ++i) kws.push_back("kw " + std::to_string(i));
    std::ostringstream out;
    write_embeddings(out, e, kws);
    std::istringstream in(out.str());
    const auto back = load_embeddings(in, kws);
    ASSERT_EQ(back.values.size(), e.values.size());
    for (std::size_t i = 0; i < e.values.size(); ++i) EXPECT_NEAR(back.values[i], e.values[i], 1e-15);
}

TEST(SemanticGraph, TieBrokenByLowerId) {
    const auto e = matrix_from({{1, 0}, {1, 0}, {0, 1}});
    const auto g = build_semantic_graph(e, 1);
    ASSERT_EQ(g.edges.size(), 3u);
    EXPECT_EQ(g.edges[0][0].target, 1u);
    EXPECT_EQ(g.edges[1][0].target, 0u);
    EXPECT_EQ(g.edges[2][0].target, 0u);
    // Node 2 is orthogonal to everything: uniform weight.
    EXPECT_EQ(g.edges[2][0].weight, 1.0);
}

TEST(SemanticGraph, MatchesBruteForceKnn) {
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 3 + rng.index(25), k = 1 + rng.index(n - 1);
        const auto e = random_matrix(rng, n, 2 + rng.index(6));
        const auto g = build_semantic_graph(e, k);
        validate_graph(g, 1e-9);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::pair<double, std::size_t>> cand;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                double c = 0.0;
                for (std::size_t d = 0; d < e.dim; ++d) c += e.row(i)[d] * e.row(j)[d];
                cand.push_back({-c, j});
            }
            std::sort(cand.begin(), cand.end());
            double total = 0.0;
            for (std::size_t r = 0; r < k; ++r) total += std::max(-cand[r].first, 0.0);
            ASSERT_EQ(g.edges[i].size(), k);
            for (std::size_t r = 0; r < k; ++r) {
                EXPECT_EQ(g.edges[i][r].target, cand[r].second);
                const double w = total > 0.0 ? std::max(-cand[r].first, 0.0) / total : 1.0 / static_cast<double>(k);
                EXPECT_NEAR(g.edges[i][r].weight, w, 1e-12);
            }
            EXPECT_NEAR(g.row_sum(i), 1.0, 1e-9);
        }
    }
}

TEST(SemanticGraph, RejectsBadDegree) {
    Rng rng(4);
    const auto e = random_matrix(rng, 5, 3);
    EXPECT_THROW(build_semantic_graph(e, 0), Error);
    EXPECT_THROW(build_semantic_graph(e, 5), Error);
}

TEST(SemanticGraph, RandomGraphInvariants) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = random_graph(30, 5, seed);
        validate_graph(g, 1e-12);
        for (std::size_t i = 0; i < g.nodes; ++i) {
            std::vector<std::size_t> t;
            for (const auto& e : g.edges[i]) t.push_back(e.target);
            std::sort(t.begin(), t.end());
            EXPECT_EQ(std::adjacent_find(t.begin(), t.end()), t.end());
        }
    }
    EXPECT_EQ(random_graph(30, 5, 9).edges, random_graph(30, 5, 9).edges);
}

TEST(SemanticGraph, ValidateCatchesViolations) {
    auto g = graph_from_neighbors({{1}, {0}, {0}}, "uniform");
    EXPECT_NO_THROW(validate_graph(g, 1e-9));
    auto self = g;
    self.edges[2][0].target = 2;
    EXPECT_THROW(validate_graph(self, 1e-9), Error);
    auto heavy = g;
    heavy.edges[1][0].weight = 1.1;
    EXPECT_THROW(validate_graph(heavy, 1e-9), Error);
}

TEST(SemanticGraph, EdgeListRoundTrip) {
    Rng rng(5);
    const auto g = build_semantic_graph(random_matrix(rng, 12, 5), 3);
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    const auto back = read_edge_list(in, 12);
    EXPECT_EQ(back.k, 3u);
    EXPECT_EQ(back.edges, g.edges);
    std::istringstream bad("a,b,c\n");
    EXPECT_THROW(read_edge_list(bad, 12), Error);
}
