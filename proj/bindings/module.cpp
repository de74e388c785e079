// Python bindings: a thin string-oriented facade over the C++ core.  All
// inputs use the same line formats as the command-line tool; exact integers
// cross into Python as arbitrary-precision ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "whisk/algebra.hpp"
#include "whisk/coloring.hpp"
#include "whisk/complex.hpp"
#include "whisk/decompose.hpp"
#include "whisk/explore.hpp"
#include "whisk/graphs.hpp"
#include "whisk/io.hpp"
#include "whisk/vectors.hpp"

namespace py = pybind11;
using namespace whisk;

namespace {

SimplicialComplex cx(const std::string& text) {
    std::istringstream in(text);
    return parse_complex(in, "<python>");
}

Coloring col(const std::string& text, const SimplicialComplex& c) {
    std::istringstream in(text);
    return parse_coloring(in, "<python>", c.labels());
}

Graph gr(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in, "<python>");
}

CliquePartition part(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    return parse_clique_partition(in, "<python>", g);
}

py::int_ big(const Int& value) {
    std::ostringstream s;
    s << value;
    PyObject* obj = PyLong_FromString(s.str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list int_vector(const IntVector& v) {
    py::list out;
    for (const Int& e : v.entries) out.append(big(e));
    return out;
}

py::list betti_rows(const BettiTable& t) {
    py::list rows;  // entries is an ordered map, so rows come out sorted
    for (const auto& [ij, beta] : t.entries)
        rows.append(py::make_tuple(ij.first, ij.second, big(beta)));
    return rows;
}

std::vector<std::string> face_labels(const std::vector<std::string>& labels, Face f) {
    std::vector<std::string> out;
    for (int v : f.vertices()) out.push_back(labels[static_cast<size_t>(v)]);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "balanced-whiskering toolkit: simplicial complexes, colourings, "
        "whiskers, Stanley-Reisner algebra, and chordal-graph checks";

    m.def(
        "f_vector", [](const std::string& c) { return int_vector(cx(c).f_vector()); },
        py::arg("complex"),
        "f-vector of a complex, starting with the empty-face count f_{-1} = 1");

    m.def(
        "h_vector", [](const std::string& c) { return int_vector(cx(c).h_vector()); },
        py::arg("complex"), "h-vector of a complex, starting with h_0");

    m.def(
        "is_pure", [](const std::string& c) { return cx(c).is_pure(); },
        py::arg("complex"), "do all facets share one dimension?");

    m.def(
        "is_balanced", [](const std::string& c) { return is_balanced(cx(c)); },
        py::arg("complex"), "does a proper (dim+1)-colouring exist?");

    m.def(
        "min_coloring",
        [](const std::string& c, int s) -> py::object {
            auto parsed = cx(c);
            auto chi = min_coloring(parsed, s);
            if (!chi) return py::none();
            return py::str(serialize_coloring(parsed, *chi));
        },
        py::arg("complex"), py::arg("max_classes"),
        "lexicographically least proper colouring with at most the given "
        "number of classes, or None");

    m.def(
        "whisker",
        [](const std::string& c, const std::string& coloring) {
            auto parsed = cx(c);
            auto w = whisker(parsed, col(coloring, parsed));
            py::dict out;
            out["complex"] = serialize_complex(w.complex);
            out["induced_coloring"] = serialize_coloring(w.complex, w.induced_coloring);
            out["source_vertex_count"] = w.source_vertex_count;
            out["class_count"] = w.class_count;
            out["h"] = int_vector(w.complex.h_vector());
            out["f_source"] = int_vector(parsed.f_vector());
            return out;
        },
        py::arg("complex"), py::arg("coloring"),
        "whisker a complex by a colouring; returns the result with its "
        "induced colouring and the h = f pair");

    m.def(
        "is_vertex_decomposable",
        [](const std::string& c) {
            auto parsed = cx(c);
            auto r = is_vertex_decomposable(parsed);
            return r.decomposable && verify_certificate(parsed, r.certificate);
        },
        py::arg("complex"),
        "decide vertex decomposability (pure complexes); the certificate is "
        "replayed before reporting true");

    m.def(
        "decomposition_certificate",
        [](const std::string& c) -> py::object {
            auto parsed = cx(c);
            auto r = is_vertex_decomposable(parsed);
            if (!r.decomposable) return py::none();
            return py::str(certificate_to_text(parsed, r.certificate));
        },
        py::arg("complex"),
        "indented shedding-certificate text, or None when not decomposable");

    m.def(
        "find_shelling",
        [](const std::string& c) -> py::object {
            auto found = find_shelling(cx(c));
            if (!found.order) return py::none();
            return py::cast(found.order->order);
        },
        py::arg("complex"),
        "a shelling order as 0-based indices into the canonical facet list, "
        "or None (unshellable or search budget exhausted)");

    m.def(
        "verify_shelling",
        [](const std::string& c, const std::vector<int>& order) {
            return verify_shelling(cx(c), order);
        },
        py::arg("complex"), py::arg("order"),
        "check the shelling condition for a facet order (0-based indices)");

    m.def(
        "stanley_reisner",
        [](const std::string& c) {
            auto gens = stanley_reisner_ideal(cx(c));
            return py::str(gens.to_string());
        },
        py::arg("complex"),
        "generators of the Stanley-Reisner ideal, one minimal non-face per line");

    m.def(
        "alexander_dual",
        [](const std::string& c) { return serialize_complex(alexander_dual(cx(c))); },
        py::arg("complex"), "the Alexander dual complex");

    m.def(
        "betti_table",
        [](const std::string& c, const std::string& coloring) {
            auto parsed = cx(c);
            auto rep = whisker_dual_betti(whisker(parsed, col(coloring, parsed)));
            py::dict out;
            out["rows"] = betti_rows(rep.table);
            out["projective_dimension"] = rep.projective_dimension;
            out["regularity"] = rep.regularity;
            return out;
        },
        py::arg("complex"), py::arg("coloring"),
        "closed-form graded Betti table of the Stanley-Reisner ideal of the "
        "Alexander dual of the whisker of (complex, coloring)");

    m.def(
        "hochster_betti",
        [](const std::string& c) { return betti_rows(hochster_betti_oracle(cx(c))); },
        py::arg("complex"),
        "graded Betti numbers of the complex's Stanley-Reisner ideal via "
        "Hochster's formula (at most 12 vertices)");

    m.def(
        "homology_ranks",
        [](const std::string& c) { return int_vector(reduced_homology_ranks(cx(c))); },
        py::arg("complex"),
        "reduced rational homology ranks in dimensions -1 .. dim");

    m.def(
        "facet_restrictions",
        [](const std::string& c) {
            auto parsed = cx(c);
            std::vector<std::vector<std::string>> out;
            for (Face f : find_facet_restrictions(parsed))
                out.push_back(face_labels(parsed.labels(), f));
            return out;
        },
        py::arg("complex"),
        "all facets F with faces(restriction to V minus F) = {F_i minus F}");

    m.def(
        "reverse_whisker",
        [](const std::string& c, const py::object& coloring) {
            auto parsed = cx(c);
            Coloring chi;
            if (coloring.is_none()) {
                auto found = min_coloring(parsed, parsed.dimension() + 1);
                if (!found)
                    throw std::runtime_error(
                        "not balanced: no valid (dim+1)-colouring exists");
                chi = *found;
            } else {
                chi = col(coloring.cast<std::string>(), parsed);
            }
            auto rev = reverse_whisker(parsed, chi);
            py::dict out;
            out["witness"] = face_labels(parsed.labels(), rev.witness);
            out["source"] = serialize_complex(rev.source);
            out["source_coloring"] = serialize_coloring(rev.source, rev.source_coloring);
            out["h_input"] = int_vector(rev.h_input);
            out["f_source"] = int_vector(rev.f_source);
            return out;
        },
        py::arg("complex"), py::arg("coloring") = py::none(),
        "undo a whiskering at a facet-restriction witness; colouring defaults "
        "to the least proper (dim+1)-colouring");

    m.def(
        "independence_complex",
        [](const std::string& g) { return serialize_complex(independence_complex(gr(g))); },
        py::arg("graph"), "faces are the independent sets of the graph");

    m.def(
        "clique_complex",
        [](const std::string& g) { return serialize_complex(clique_complex(gr(g))); },
        py::arg("graph"), "faces are the cliques of the graph");

    m.def(
        "clique_whisker",
        [](const std::string& g, const std::string& partition) {
            auto parsed = gr(g);
            return serialize_graph(clique_whisker(parsed, part(partition, parsed)));
        },
        py::arg("graph"), py::arg("partition"),
        "add one vertex per clique-partition class, joined to that class");

    m.def(
        "is_chordal",
        [](const std::string& g) {
            auto parsed = gr(g);
            auto r = is_chordal(parsed);
            py::dict out;
            out["chordal"] = r.chordal;
            std::vector<std::string> order, cycle;
            for (int v : r.elimination_order) order.push_back(parsed.label(v));
            for (int v : r.witness_cycle) cycle.push_back(parsed.label(v));
            out["elimination_order"] = order;
            out["witness_cycle"] = cycle;
            return out;
        },
        py::arg("graph"),
        "chordality, with a perfect elimination order or a chordless-cycle witness");

    m.def(
        "hhz",
        [](const std::string& g) {
            auto parsed = gr(g);
            auto r = hhz_check(parsed);
            py::dict out;
            out["unmixed"] = r.unmixed;
            out["partition_holds"] = r.partition_holds;
            std::vector<std::vector<std::string>> facets;
            for (Face f : r.free_facets) facets.push_back(face_labels(parsed.labels(), f));
            out["free_facets"] = facets;
            return out;
        },
        py::arg("graph"),
        "the two Herzog-Hibi-Zheng clauses for a chordal graph, computed "
        "independently");

    m.def(
        "explore",
        [](int max_n, std::optional<uint64_t> seed, int samples_per_n) {
            auto rep = explore_chordal(max_n, seed, samples_per_n);
            py::dict out;
            out["clean"] = rep.clean();
            out["violations"] = rep.violations;
            out["text"] = rep.to_text();
            return out;
        },
        py::arg("max_n"), py::arg("seed") = py::none(), py::arg("samples_per_n") = 25,
        "chordal conjecture explorer: exhaustive to n = 7, seeded sampling beyond");
}
