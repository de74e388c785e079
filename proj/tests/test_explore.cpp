#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "whisk/explore.hpp"
#include "whisk/gen.hpp"
#include "whisk/graphs.hpp"

using namespace whisk;

TEST_CASE("graph counts up to isomorphism match the classical sequence") {
    // Number of simple graphs on n unlabelled vertices: 1, 2, 4, 11, 34, 156.
    const long long expect[] = {1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        auto all = all_graphs_up_to_iso(n);
        CHECK(static_cast<long long>(all.size()) == expect[n - 1]);
        // The list is deduplicated by canonical code.
        std::set<uint64_t> codes;
        for (const auto& g : all) codes.insert(graph_canonical_code(g));
        CHECK(codes.size() == all.size());
    }
    CHECK_THROWS_AS(all_graphs_up_to_iso(8), std::invalid_argument);
}

TEST_CASE("canonical code is a relabelling invariant") {
    Rng rng(103);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + rng.below(7);
        auto g = random_graph(rng, n);

        // Apply a random permutation to the vertex labels.
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);

        std::vector<std::string> labels(n);
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < n; ++v) labels[perm[v]] = "w" + std::to_string(perm[v]);
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v).vertices())
                if (u > v) edges.emplace_back(perm[v], perm[u]);
        auto h = Graph::build(labels, edges);

        CHECK(graph_canonical_code(g) == graph_canonical_code(h));
    }

    // Distinct graphs get distinct codes (path vs triangle).
    auto path = Graph::build({"a", "b", "c"}, {{0, 1}, {1, 2}});
    auto tri = Graph::build({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(graph_canonical_code(path) != graph_canonical_code(tri));
}

TEST_CASE("random chordal graphs are chordal for many seeds") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Rng rng(seed);
        for (int trial = 0; trial < 5; ++trial) {
            auto g = random_chordal_graph(rng, 1 + rng.below(10));
            CHECK(is_chordal(g).chordal);
        }
    }
}

TEST_CASE("exhaustive exploration at small sizes is clean with exact counts") {
    auto report = explore_chordal(5, std::nullopt);
    CHECK(report.clean());
    REQUIRE(report.sizes.size() == 5);

    const long long graphs[] = {1, 2, 4, 11, 34};
    const long long chordal[] = {1, 2, 4, 10, 27};
    const long long unmixed[] = {1, 2, 3, 6, 10};
    for (int i = 0; i < 5; ++i) {
        const auto& s = report.sizes[i];
        CHECK(s.n == i + 1);
        CHECK(s.exhaustive);
        CHECK(s.graphs == graphs[i]);
        CHECK(s.chordal == chordal[i]);
        CHECK(s.unmixed_chordal == unmixed[i]);
        // Every chordal graph gets a forward check; every unmixed chordal
        // graph gets a reverse check.
        CHECK(s.forward_checked == chordal[i]);
        CHECK(s.reverse_checked == unmixed[i]);
    }
}

TEST_CASE("seeded sampling past the exhaustive range is deterministic") {
    auto a = explore_chordal(8, 12345, 3);
    auto b = explore_chordal(8, 12345, 3);
    CHECK(a.clean());
    CHECK(a.to_text() == b.to_text());
    REQUIRE(a.sizes.size() == 8);
    CHECK_FALSE(a.sizes.back().exhaustive);
    CHECK(a.sizes.back().graphs == 3);

    // A different seed may sample different graphs, but stays clean.
    auto c = explore_chordal(8, 54321, 3);
    CHECK(c.clean());

    // Sampling past n = 7 without a seed is refused.
    CHECK_THROWS_AS(explore_chordal(8, std::nullopt), std::invalid_argument);
}
