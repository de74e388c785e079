#ifndef WHISK_GRAPHS_HPP
#define WHISK_GRAPHS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whisk/coloring.hpp"
#include "whisk/complex.hpp"

namespace whisk {

/// Finite simple graph on ordered, labelled vertices; adjacency kept as one
/// bitmask row per vertex (same 64-vertex universe as complexes).
class Graph {
public:
    static Graph build(std::vector<std::string> labels,
                       const std::vector<std::pair<int, int>>& edges);
    static Graph build_from_labels(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::string, std::string>>& edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    int index_of(const std::string& label) const;

    bool adjacent(int u, int v) const { return adjacency_[u].contains(v); }
    Face neighbors(int v) const { return adjacency_[v]; }
    Face closed_neighborhood(int v) const { return adjacency_[v].with(v); }
    std::vector<std::pair<int, int>> edges() const;  // sorted pairs, u < v
    int edge_count() const;

    Graph induced_subgraph(Face keep) const;  // compacts, keeps labels
    Graph complement() const;
    bool is_clique(Face c) const;

private:
    std::vector<std::string> labels_;
    std::vector<Face> adjacency_;
};

/// Partition of a graph's vertices into classes each inducing a clique.
struct CliquePartition {
    std::vector<Face> classes;

    int class_count() const { return static_cast<int>(classes.size()); }
};

/// Throws std::invalid_argument unless the classes partition the vertex set
/// and each induces a clique.
void validate_clique_partition(const Graph& g, const CliquePartition& pi);

/// Ind(G): faces are the independent sets of G.
SimplicialComplex independence_complex(const Graph& g);

/// Cl(G): faces are the cliques of G (the empty set and singletons count).
SimplicialComplex clique_complex(const Graph& g);

/// Chordality via maximum-cardinality search: either a perfect elimination
/// ordering, or an induced chordless cycle of length >= 4 as obstruction.
struct ChordalityResult {
    bool chordal = false;
    std::vector<int> elimination_order;  // filled when chordal
    std::vector<int> witness_cycle;      // filled otherwise, in cycle order
};

ChordalityResult is_chordal(const Graph& g);

/// Whisker a graph along a clique partition: one new vertex y_i joined to
/// everything in class i.  New labels "y1".."ys" are appended; collisions
/// with existing labels are an error.
Graph clique_whisker(const Graph& g, const CliquePartition& pi);

/// Read a clique partition as a colouring of Ind(G); always valid because
/// an independent set meets a clique at most once (validated anyway).
Coloring coloring_from_clique_partition(const Graph& g, const CliquePartition& pi);

/// For each facet, the set of its free vertices (vertices in no other
/// facet); aligned with the canonical facet list.
std::vector<Face> free_vertices(const SimplicialComplex& complex);

/// All maximal independent sets of G have the same cardinality.
bool is_unmixed(const Graph& g);

/// The two combinatorial clauses of the Herzog-Hibi-Zheng criterion for a
/// chordal graph, computed independently: unmixedness of G, and whether the
/// clique-complex facets containing a free vertex partition the vertex set.
/// The clauses are provably equivalent; disagreement throws
/// TheoremViolation.
struct HHZReport {
    bool unmixed = false;
    bool partition_holds = false;
    std::vector<Face> free_facets;  // facets of Cl(G) containing a free vertex
};

HHZReport hhz_check(const Graph& g);

/// A facet F is a facet restriction when the faces of the restriction of
/// the complex to V \ F are exactly { F_i \ F : F_i facet }.  (The
/// containment "⊇" holds for every facet; only "⊆" needs checking.)
bool is_facet_restriction(const SimplicialComplex& complex, Face f);
std::optional<Face> find_facet_restriction(const SimplicialComplex& complex);
std::vector<Face> find_facet_restrictions(const SimplicialComplex& complex);

/// For a chordal unmixed graph: one free vertex (smallest index) from each
/// free-vertex facet of Cl(G).  The result is a maximal independent set and
/// a facet restriction of Ind(G); both are re-verified, and failure throws
/// TheoremViolation.
Face chordal_free_vertex_facet(const Graph& g);

/// Undo a whiskering at a facet-restriction witness F: the source complex
/// is the restriction to V \ F compacted, the source colouring is the
/// classes with F removed, and the whisker of that pair must reproduce the
/// input complex under the relabeling y_j <-> the unique vertex of F in
/// class j.  The isomorphism and the vector identity
/// h(complex) = f(source) are asserted; failures throw TheoremViolation.
struct ReverseWhiskerResult {
    SimplicialComplex source;
    Coloring source_coloring;  // classes in source vertex indices
    Face witness;              // the facet reversed at
    IntVector h_input;         // h-vector of the input complex
    IntVector f_source;        // f-vector of the recovered source
};

ReverseWhiskerResult reverse_whisker(const SimplicialComplex& complex,
                                     const Coloring& chi, Face witness);

/// Convenience: verify/locate the witness first (any supplied witness is
/// checked; otherwise the first facet restriction in canonical order is
/// used).  Errors if none exists or the colouring is not balanced.
ReverseWhiskerResult reverse_whisker(const SimplicialComplex& complex, const Coloring& chi);

} // namespace whisk

#endif
