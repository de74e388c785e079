#ifndef WHISK_GEN_HPP
#define WHISK_GEN_HPP

#include <cstdint>
#include <random>

#include "whisk/coloring.hpp"
#include "whisk/complex.hpp"
#include "whisk/graphs.hpp"

namespace whisk {

/// Deterministic RNG for property tests and sampled exploration.  Thin
/// wrapper over mt19937_64 drawing via modulo so sequences are identical
/// across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }
    int below(int n);                 // uniform-ish in [0, n)
    bool chance(int num, int den);    // true with probability num/den

private:
    std::mt19937_64 engine_;
};

/// Random nonvoid complex on at most max_vertices vertices, labelled
/// x1..xn: random generating sets pruned to facets.
SimplicialComplex random_complex(Rng& rng, int max_vertices);

/// Random valid colouring of the complex with at most max_classes classes:
/// random proper refinement via greedy assignment with random order, or
/// the singleton colouring as fallback (always valid).
Coloring random_coloring(Rng& rng, const SimplicialComplex& complex, int max_classes);

/// Random graph on exactly n vertices with edge probability num/den.
Graph random_graph(Rng& rng, int n, int num = 1, int den = 2);

/// Random chordal graph on exactly n vertices: grown vertex by vertex, each
/// new vertex made adjacent to a random subset of a random clique of the
/// existing graph (every such graph is chordal by construction).
Graph random_chordal_graph(Rng& rng, int n);

} // namespace whisk

#endif
