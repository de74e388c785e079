#include "whisk/coloring.hpp"

#include <algorithm>

namespace whisk {

int Coloring::class_of(int v) const {
    for (size_t j = 0; j < classes.size(); ++j)
        if (classes[j].contains(v)) return static_cast<int>(j);
    return -1;
}

bool Coloring::is_partition_of(Face universe) const {
    Face seen;
    for (Face c : classes) {
        if (!c.intersect(seen).is_empty()) return false;
        seen = seen.unite(c);
    }
    return seen == universe;
}

namespace {

/// First (facet, class index) pair violating |facet ∩ class| ≤ 1, if any.
std::optional<std::pair<Face, int>> coloring_violation(const SimplicialComplex& complex,
                                                       const Coloring& chi) {
    for (Face f : complex.facets())
        for (int j = 0; j < chi.class_count(); ++j)
            if (f.intersect(chi.classes[static_cast<size_t>(j)]).size() > 1)
                return std::make_pair(f, j);
    return std::nullopt;
}

} // namespace

bool validate_coloring(const SimplicialComplex& complex, const Coloring& chi) {
    if (!chi.is_partition_of(complex.universe_face()))
        throw std::invalid_argument("classes do not partition the vertex set");
    return !coloring_violation(complex, chi).has_value();
}

Coloring singleton_coloring(const SimplicialComplex& complex) {
    Coloring chi;
    for (int v = 0; v < complex.vertex_count(); ++v)
        chi.classes.push_back(Face::singleton(v));
    return chi;
}

std::optional<Coloring> min_coloring(const SimplicialComplex& complex, int s) {
    if (s < 0) throw std::invalid_argument("negative class count");
    int n = complex.vertex_count();

    // conflict graph: u ~ v when some facet contains both
    std::vector<Face> conflict(static_cast<size_t>(n));
    for (Face f : complex.facets())
        for (int v : f.vertices())
            conflict[static_cast<size_t>(v)] =
                conflict[static_cast<size_t>(v)].unite(f.without(v));

    std::vector<int> color(static_cast<size_t>(n), -1);
    // plain backtracking in vertex order, colours tried in index order: the
    // first solution found is a deterministic function of the complex
    int v = 0;
    while (v < n) {
        int c = color[static_cast<size_t>(v)] + 1;
        color[static_cast<size_t>(v)] = -1;
        for (; c < s; ++c) {
            bool ok = true;
            for (int u : conflict[static_cast<size_t>(v)].vertices()) {
                if (u < v && color[static_cast<size_t>(u)] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) break;
        }
        if (c < s) {
            color[static_cast<size_t>(v)] = c;
            ++v;
        } else {
            if (v == 0) return std::nullopt;
            --v;  // backtrack
        }
    }

    Coloring chi;
    chi.classes.assign(static_cast<size_t>(s), Face{});
    for (int u = 0; u < n; ++u)
        chi.classes[static_cast<size_t>(color[static_cast<size_t>(u)])] =
            chi.classes[static_cast<size_t>(color[static_cast<size_t>(u)])].with(u);
    return chi;
}

bool is_balanced(const SimplicialComplex& complex) {
    return min_coloring(complex, complex.dimension() + 1).has_value();
}

WhiskerComplex whisker(const SimplicialComplex& complex, const Coloring& chi) {
    if (complex.is_void()) throw std::invalid_argument("cannot whisker the void complex");
    if (!chi.is_partition_of(complex.universe_face()))
        throw std::invalid_argument("classes do not partition the vertex set");
    if (auto bad = coloring_violation(complex, chi)) {
        std::string facet_desc;
        for (int v : bad->first.vertices()) {
            if (!facet_desc.empty()) facet_desc += ' ';
            facet_desc += complex.label(v);
        }
        throw std::invalid_argument("invalid colouring: facet {" + facet_desc +
                                    "} meets class " + std::to_string(bad->second + 1) +
                                    " more than once");
    }

    int n = complex.vertex_count();
    int s = chi.class_count();

    std::vector<std::string> labels = complex.labels();
    for (int j = 0; j < s; ++j) {
        std::string fresh = "y" + std::to_string(j + 1);
        if (std::find(labels.begin(), labels.end(), fresh) != labels.end())
            throw std::invalid_argument("fresh vertex label '" + fresh +
                                        "' collides with an existing vertex");
        labels.push_back(std::move(fresh));
    }

    std::vector<Face> sources = complex.faces();
    std::sort(sources.begin(), sources.end(), face_less);

    std::vector<Face> facets;
    std::vector<std::pair<Face, Face>> correspondence;
    facets.reserve(sources.size());
    for (Face g : sources) {
        Face big = g;
        for (int j = 0; j < s; ++j)
            if (g.intersect(chi.classes[static_cast<size_t>(j)]).is_empty())
                big = big.with(n + j);
        facets.push_back(big);
        correspondence.emplace_back(g, big);
    }

    WhiskerComplex w;
    w.complex = canonicalize(std::move(labels), facets);
    if (Int(w.complex.facets().size()) != complex.face_count())
        throw TheoremViolation("whisker facet count differs from the source face count");
    w.correspondence = std::move(correspondence);
    w.source_coloring = chi;
    for (int j = 0; j < s; ++j)
        w.induced_coloring.classes.push_back(chi.classes[static_cast<size_t>(j)].with(n + j));
    w.source_vertex_count = n;
    w.class_count = s;
    return w;
}

HEqualsFReport h_equals_f_report(const SimplicialComplex& complex, const Coloring& chi) {
    HEqualsFReport r;
    r.f_source = complex.f_vector();
    r.h_whisker = whisker(complex, chi).complex.h_vector();
    r.equal = sequences_equal_up_to_trailing_zeros(r.f_source, r.h_whisker);
    return r;
}

} // namespace whisk
