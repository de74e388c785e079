#ifndef WHISK_COLORING_HPP
#define WHISK_COLORING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whisk/complex.hpp"

namespace whisk {

/// An ordered partition of a vertex universe into s classes (empty classes
/// permitted).  Class masks are pairwise disjoint and cover the universe.
struct Coloring {
    std::vector<Face> classes;

    int class_count() const { return static_cast<int>(classes.size()); }

    /// Index of the class containing vertex v, or -1.
    int class_of(int v) const;

    /// Check the partition property against a universe mask.
    bool is_partition_of(Face universe) const;
};

/// True iff chi partitions the universe and every facet meets every class
/// in at most one vertex.  Throws std::invalid_argument when chi is not a
/// partition of the universe at all.
bool validate_coloring(const SimplicialComplex& complex, const Coloring& chi);

/// One singleton class per universe vertex, in universe order.
Coloring singleton_coloring(const SimplicialComplex& complex);

/// Exact backtracking search for a valid s-colouring: vertices are
/// processed in canonical order and colours tried in class-index order, so
/// the first solution found is deterministic.  Returns nullopt when no
/// valid s-colouring exists.
std::optional<Coloring> min_coloring(const SimplicialComplex& complex, int s);

/// A d-dimensional complex is balanced when it is (d+1)-colourable.
bool is_balanced(const SimplicialComplex& complex);

/// The whiskering of a complex by a colouring: one fresh vertex y_j per
/// class, and one facet g U { y_j : class j misses g } per face g of the
/// source.  Carries the face-to-facet correspondence and the induced
/// colouring with classes V_j U {y_j}.
struct WhiskerComplex {
    SimplicialComplex complex;
    /// (source face g, facet of the whisker) pairs in canonical face order.
    std::vector<std::pair<Face, Face>> correspondence;
    Coloring source_coloring;
    Coloring induced_coloring;
    int source_vertex_count = 0;
    int class_count = 0;
};

/// Construct the whisker complex.  The source must be nonvoid and the
/// colouring valid; fresh labels "y1".."ys" must not collide with existing
/// vertex labels.
WhiskerComplex whisker(const SimplicialComplex& complex, const Coloring& chi);

/// f(source), h(whisker), and whether they agree up to trailing zeros.
struct HEqualsFReport {
    IntVector f_source;
    IntVector h_whisker;
    bool equal = false;
};

HEqualsFReport h_equals_f_report(const SimplicialComplex& complex, const Coloring& chi);

} // namespace whisk

#endif
