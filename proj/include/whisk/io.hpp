#ifndef WHISK_IO_HPP
#define WHISK_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "whisk/algebra.hpp"
#include "whisk/coloring.hpp"
#include "whisk/complex.hpp"
#include "whisk/graphs.hpp"

namespace whisk {

/// Parse failure carrying the source name and 1-based line number.
struct ParseError : std::runtime_error {
    ParseError(const std::string& source, int line, const std::string& what);
    std::string source;
    int line;
};

// All formats are UTF-8 and line-oriented; '#' starts a comment and blank
// lines are ignored.
//
// Complex:   first content line "vertices: <label> ...", whose order fixes
//            the vertex indices; then "facet: <label> ..." lines, where a
//            bare "facet:" denotes the empty face.  No facet lines at all
//            gives the void complex.
// Colouring: "class: <label> ..." lines against a known complex/graph; a
//            bare "class:" is an empty class; file order = class index.
// Graph:     "vertex: <label>" lines, then "edge: <a> <b>" lines.
//
// Serialization is deterministic: complexes emit facets in canonical
// order, so parse -> serialize -> parse is the identity.

SimplicialComplex parse_complex(std::istream& in, const std::string& source_name);
SimplicialComplex parse_complex_file(const std::string& path);

Coloring parse_coloring(std::istream& in, const std::string& source_name,
                        const std::vector<std::string>& labels);
Coloring parse_coloring_file(const std::string& path, const std::vector<std::string>& labels);

Graph parse_graph(std::istream& in, const std::string& source_name);
Graph parse_graph_file(const std::string& path);

CliquePartition parse_clique_partition(std::istream& in, const std::string& source_name,
                                       const Graph& g);
CliquePartition parse_clique_partition_file(const std::string& path, const Graph& g);

std::string serialize_complex(const SimplicialComplex& complex);
std::string serialize_coloring(const SimplicialComplex& complex, const Coloring& chi);
std::string serialize_graph(const Graph& g);

std::string face_to_string(const SimplicialComplex& complex, Face f);

} // namespace whisk

#endif
