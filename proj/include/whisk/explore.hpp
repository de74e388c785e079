#ifndef WHISK_EXPLORE_HPP
#define WHISK_EXPLORE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "whisk/graphs.hpp"

namespace whisk {

/// All simple graphs on exactly n vertices up to isomorphism (n <= 7),
/// produced in a deterministic order via canonical-code deduplication.
/// Vertices are labelled v1..vn.
std::vector<Graph> all_graphs_up_to_iso(int n);

/// Canonical code of a graph on <= 7 vertices: minimum upper-triangle
/// adjacency bitstring over all vertex permutations.
uint64_t graph_canonical_code(const Graph& g);

/// Desk-scale explorer for the chordal-graph case of the f = h conjecture.
/// For every chordal graph G (exhaustive up to isomorphism for n <= 7;
/// seeded samples for larger n):
///   forward  — whisker Ind(G) by a minimal proper colouring and check that
///              the result is pure, balanced, vertex decomposable, and has
///              h = f(Ind(G));
///   reverse  — when G is unmixed, build the free-vertex facet restriction,
///              reverse the whiskering, and check that the recovered source
///              is the independence complex of a chordal induced subgraph
///              with f = h(Ind(G)).
/// Violations are collected, never suppressed; the report text is
/// deterministic for a fixed (max_n, seed, samples_per_n).
struct ExploreReport {
    struct PerSize {
        int n = 0;
        bool exhaustive = true;
        long long graphs = 0;        // graphs examined (up to iso / sampled)
        long long chordal = 0;
        long long unmixed_chordal = 0;
        long long forward_checked = 0;
        long long reverse_checked = 0;
    };
    std::vector<PerSize> sizes;
    std::vector<std::string> violations;

    bool clean() const { return violations.empty(); }
    std::string to_text() const;
};

ExploreReport explore_chordal(int max_n, std::optional<uint64_t> seed,
                              int samples_per_n = 25, int workers = 0);

} // namespace whisk

#endif
