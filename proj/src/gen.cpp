#include "whisk/gen.hpp"

#include <algorithm>
#include <numeric>

namespace whisk {

int Rng::below(int n) {
    if (n <= 0) throw std::invalid_argument("empty range");
    return static_cast<int>(engine_() % static_cast<uint64_t>(n));
}

bool Rng::chance(int num, int den) { return below(den) < num; }

namespace {

std::vector<std::string> numbered_labels(const char* stem, int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back(stem + std::to_string(i));
    return labels;
}

} // namespace

SimplicialComplex random_complex(Rng& rng, int max_vertices) {
    int n = 1 + rng.below(max_vertices);
    std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    int generators = 1 + rng.below(2 * n);
    std::vector<Face> faces;
    faces.reserve(static_cast<size_t>(generators));
    for (int i = 0; i < generators; ++i) faces.push_back(Face{rng.next() & mask});
    return SimplicialComplex::build(numbered_labels("x", n), faces);
}

Coloring random_coloring(Rng& rng, const SimplicialComplex& complex, int max_classes) {
    int n = complex.vertex_count();

    std::vector<Face> conflict(static_cast<size_t>(n));
    for (Face f : complex.facets())
        for (int v : f.vertices())
            conflict[static_cast<size_t>(v)] =
                conflict[static_cast<size_t>(v)].unite(f.without(v));

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(order[static_cast<size_t>(i)],
                                              order[static_cast<size_t>(rng.below(i + 1))]);

    int target = std::min(max_classes, std::max(1, n));
    std::vector<Face> classes;
    for (int v : order) {
        // random starting class makes the partition shape vary
        int start = classes.empty() ? 0 : rng.below(static_cast<int>(classes.size()));
        int chosen = -1;
        for (size_t step = 0; step < classes.size(); ++step) {
            size_t j = (static_cast<size_t>(start) + step) % classes.size();
            if (classes[j].intersect(conflict[static_cast<size_t>(v)]).is_empty()) {
                chosen = static_cast<int>(j);
                break;
            }
        }
        if (chosen >= 0 && (static_cast<int>(classes.size()) >= target || rng.chance(2, 3))) {
            classes[static_cast<size_t>(chosen)] =
                classes[static_cast<size_t>(chosen)].with(v);
        } else if (static_cast<int>(classes.size()) < target) {
            classes.push_back(Face::singleton(v));
        } else {
            // target reached but v conflicts everywhere: widen the palette
            classes.push_back(Face::singleton(v));
        }
    }
    return Coloring{std::move(classes)};
}

Graph random_graph(Rng& rng, int n, int num, int den) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(num, den)) edges.emplace_back(u, v);
    return Graph::build(numbered_labels("v", n), edges);
}

Graph random_chordal_graph(Rng& rng, int n) {
    // grow one simplicial vertex at a time: each new vertex's neighbourhood
    // is a subset of a clique of the current graph, which keeps every
    // elimination step perfect
    std::vector<std::pair<int, int>> edges;
    std::vector<Face> cliques{Face::singleton(0)};  // cliques seen so far (not pruned)
    for (int v = 1; v < n; ++v) {
        const Face base = cliques[static_cast<size_t>(rng.below(static_cast<int>(cliques.size())))];
        Face nbhd;
        for (int u : base.vertices())
            if (rng.chance(2, 3)) nbhd = nbhd.with(u);
        for (int u : nbhd.vertices()) edges.emplace_back(u, v);
        cliques.push_back(nbhd.with(v));
    }
    return Graph::build(numbered_labels("v", n), edges);
}

} // namespace whisk
