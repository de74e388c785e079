#include "whisk/graphs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace whisk {

Graph Graph::build(std::vector<std::string> labels,
                   const std::vector<std::pair<int, int>>& edges) {
    validate_labels(labels);
    Graph g;
    int n = static_cast<int>(labels.size());
    g.labels_ = std::move(labels);
    g.adjacency_.assign(static_cast<size_t>(n), Face{});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        g.adjacency_[static_cast<size_t>(u)] = g.adjacency_[static_cast<size_t>(u)].with(v);
        g.adjacency_[static_cast<size_t>(v)] = g.adjacency_[static_cast<size_t>(v)].with(u);
    }
    return g;
}

Graph Graph::build_from_labels(std::vector<std::string> labels,
                               const std::vector<std::pair<std::string, std::string>>& edges) {
    validate_labels(labels);
    auto index = [&](const std::string& l) {
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end()) throw std::invalid_argument("unknown vertex label '" + l + "'");
        return static_cast<int>(it - labels.begin());
    };
    std::vector<std::pair<int, int>> idx_edges;
    idx_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) idx_edges.emplace_back(index(a), index(b));
    return build(std::move(labels), idx_edges);
}

int Graph::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown vertex label '" + label + "'");
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adjacency_[static_cast<size_t>(u)].vertices())
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::edge_count() const { return static_cast<int>(edges().size()); }

Graph Graph::induced_subgraph(Face keep) const {
    std::vector<int> verts = keep.vertices();
    std::vector<int> newpos(kMaxVertices, -1);
    std::vector<std::string> labels;
    for (int v : verts) {
        newpos[v] = static_cast<int>(labels.size());
        labels.push_back(labels_[static_cast<size_t>(v)]);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
        for (int v : adjacency_[static_cast<size_t>(u)].intersect(keep).vertices())
            if (u < v) edges.emplace_back(newpos[u], newpos[v]);
    return build(std::move(labels), edges);
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v = u + 1; v < vertex_count(); ++v)
            if (!adjacent(u, v)) edges.emplace_back(u, v);
    return build(labels_, edges);
}

bool Graph::is_clique(Face c) const {
    for (int v : c.vertices())
        if (!c.without(v).subset_of(adjacency_[static_cast<size_t>(v)])) return false;
    return true;
}

void validate_clique_partition(const Graph& g, const CliquePartition& pi) {
    Face seen;
    Face universe = g.vertex_count() >= kMaxVertices
                        ? Face{~std::uint64_t{0}}
                        : Face{(std::uint64_t{1} << g.vertex_count()) - 1};
    for (Face c : pi.classes) {
        if (!c.intersect(seen).is_empty())
            throw std::invalid_argument("clique partition classes overlap");
        seen = seen.unite(c);
        if (!g.is_clique(c))
            throw std::invalid_argument("a partition class does not induce a clique");
    }
    if (!(seen == universe))
        throw std::invalid_argument("clique partition does not cover the vertex set");
}

namespace {

/// Bron-Kerbosch without pivoting (deterministic order, desk-scale inputs).
void maximal_cliques_rec(const Graph& g, Face r, Face p, Face x, std::vector<Face>& out) {
    if (p.is_empty() && x.is_empty()) {
        out.push_back(r);
        return;
    }
    for (int v : p.vertices()) {
        maximal_cliques_rec(g, r.with(v), p.intersect(g.neighbors(v)),
                            x.intersect(g.neighbors(v)), out);
        p = p.without(v);
        x = x.with(v);
    }
}

std::vector<Face> maximal_cliques(const Graph& g) {
    Face universe = g.vertex_count() >= kMaxVertices
                        ? Face{~std::uint64_t{0}}
                        : Face{(std::uint64_t{1} << g.vertex_count()) - 1};
    std::vector<Face> out;
    maximal_cliques_rec(g, Face::empty(), universe, Face::empty(), out);
    return out;
}

} // namespace

SimplicialComplex independence_complex(const Graph& g) {
    return canonicalize(g.labels(), maximal_cliques(g.complement()));
}

SimplicialComplex clique_complex(const Graph& g) {
    return canonicalize(g.labels(), maximal_cliques(g));
}

ChordalityResult is_chordal(const Graph& g) {
    int n = g.vertex_count();
    ChordalityResult result;

    // maximum cardinality search, visiting in reverse elimination order
    std::vector<int> weight(static_cast<size_t>(n), 0);
    std::vector<bool> numbered(static_cast<size_t>(n), false);
    std::vector<int> visit_order;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[static_cast<size_t>(v)] &&
                (best < 0 || weight[static_cast<size_t>(v)] > weight[static_cast<size_t>(best)]))
                best = v;
        numbered[static_cast<size_t>(best)] = true;
        visit_order.push_back(best);
        for (int u : g.neighbors(best).vertices())
            if (!numbered[static_cast<size_t>(u)]) ++weight[static_cast<size_t>(u)];
    }
    std::vector<int> elim(visit_order.rbegin(), visit_order.rend());

    // perfect elimination check: later neighbours of each vertex must form
    // a clique, which reduces to checking them against the earliest one
    std::vector<int> pos(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(elim[static_cast<size_t>(i)])] = i;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
        int v = elim[static_cast<size_t>(i)];
        Face later;
        for (int u : g.neighbors(v).vertices())
            if (pos[static_cast<size_t>(u)] > i) later = later.with(u);
        if (later.is_empty()) continue;
        int first = -1;
        for (int u : later.vertices())
            if (first < 0 || pos[static_cast<size_t>(u)] < pos[static_cast<size_t>(first)])
                first = u;
        if (!later.without(first).subset_of(g.neighbors(first))) ok = false;
    }
    if (ok) {
        result.chordal = true;
        result.elimination_order = std::move(elim);
        return result;
    }

    // not chordal: exhibit an induced chordless cycle of length >= 4.  For
    // some v with nonadjacent neighbours u, w, a shortest u-w path avoiding
    // N[v] \ {u, w} closes up with v into such a cycle; scanning all
    // triples is guaranteed to find one.
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb = g.neighbors(v).vertices();
        for (size_t a = 0; a < nb.size(); ++a) {
            for (size_t b = a + 1; b < nb.size(); ++b) {
                int u = nb[a], w = nb[b];
                if (g.adjacent(u, w)) continue;
                // BFS from u to w through vertices outside N[v]
                Face blocked = g.closed_neighborhood(v).without(u).without(w);
                std::vector<int> parent(static_cast<size_t>(n), -2);
                std::deque<int> queue{u};
                parent[static_cast<size_t>(u)] = -1;
                while (!queue.empty()) {
                    int cur = queue.front();
                    queue.pop_front();
                    if (cur == w) break;
                    for (int nx : g.neighbors(cur).vertices()) {
                        if (blocked.contains(nx) || parent[static_cast<size_t>(nx)] != -2)
                            continue;
                        parent[static_cast<size_t>(nx)] = cur;
                        queue.push_back(nx);
                    }
                }
                if (parent[static_cast<size_t>(w)] == -2) continue;
                std::vector<int> path;  // w back to u
                for (int cur = w; cur != -1; cur = parent[static_cast<size_t>(cur)])
                    path.push_back(cur);
                std::reverse(path.begin(), path.end());  // u ... w
                result.witness_cycle.push_back(v);
                result.witness_cycle.insert(result.witness_cycle.end(), path.begin(), path.end());
                return result;
            }
        }
    }
    throw TheoremViolation("elimination check failed but no chordless cycle was found");
}

Graph clique_whisker(const Graph& g, const CliquePartition& pi) {
    validate_clique_partition(g, pi);
    int n = g.vertex_count();
    int s = pi.class_count();
    std::vector<std::string> labels = g.labels();
    for (int j = 0; j < s; ++j) {
        std::string fresh = "y" + std::to_string(j + 1);
        if (std::find(labels.begin(), labels.end(), fresh) != labels.end())
            throw std::invalid_argument("fresh vertex label '" + fresh +
                                        "' collides with an existing vertex");
        labels.push_back(std::move(fresh));
    }
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int j = 0; j < s; ++j)
        for (int x : pi.classes[static_cast<size_t>(j)].vertices())
            edges.emplace_back(x, n + j);
    return Graph::build(std::move(labels), edges);
}

Coloring coloring_from_clique_partition(const Graph& g, const CliquePartition& pi) {
    validate_clique_partition(g, pi);
    Coloring chi;
    chi.classes = pi.classes;
    if (!validate_coloring(independence_complex(g), chi))
        throw TheoremViolation("a clique partition failed to colour the independence complex");
    return chi;
}

std::vector<Face> free_vertices(const SimplicialComplex& complex) {
    if (complex.is_void())
        throw std::invalid_argument("free vertices are undefined for the void complex");
    std::vector<int> count(kMaxVertices, 0);
    for (Face f : complex.facets())
        for (int v : f.vertices()) ++count[static_cast<size_t>(v)];
    std::vector<Face> out;
    out.reserve(complex.facets().size());
    for (Face f : complex.facets()) {
        Face free;
        for (int v : f.vertices())
            if (count[static_cast<size_t>(v)] == 1) free = free.with(v);
        out.push_back(free);
    }
    return out;
}

bool is_unmixed(const Graph& g) { return independence_complex(g).is_pure(); }

HHZReport hhz_check(const Graph& g) {
    if (!is_chordal(g).chordal)
        throw std::invalid_argument("the criterion applies to chordal graphs only");

    HHZReport report;
    report.unmixed = is_unmixed(g);

    SimplicialComplex cl = clique_complex(g);
    std::vector<Face> free = free_vertices(cl);
    Face covered;
    bool disjoint = true;
    for (size_t i = 0; i < cl.facets().size(); ++i) {
        if (free[i].is_empty()) continue;
        Face c = cl.facets()[i];
        report.free_facets.push_back(c);
        if (!covered.intersect(c).is_empty()) disjoint = false;
        covered = covered.unite(c);
    }
    report.partition_holds = disjoint && covered == cl.universe_face();

    if (report.unmixed != report.partition_holds)
        throw TheoremViolation("unmixedness disagrees with the free-vertex facet partition");
    return report;
}

bool is_facet_restriction(const SimplicialComplex& complex, Face f) {
    if (complex.is_void()) throw std::invalid_argument("void complex");
    const auto& facets = complex.facets();
    if (std::find(facets.begin(), facets.end(), f) == facets.end())
        throw std::invalid_argument("the candidate is not a facet");
    std::set<std::uint64_t> differences;
    for (Face fi : facets) differences.insert(fi.minus(f).bits);
    // faces of the restriction to V \ f must all be facet differences;
    // the reverse containment holds automatically
    for (Face face : complex.restriction(complex.universe_face().minus(f)).faces())
        if (!differences.count(face.bits)) return false;
    return true;
}

std::optional<Face> find_facet_restriction(const SimplicialComplex& complex) {
    for (Face f : complex.facets())
        if (is_facet_restriction(complex, f)) return f;
    return std::nullopt;
}

std::vector<Face> find_facet_restrictions(const SimplicialComplex& complex) {
    std::vector<Face> out;
    for (Face f : complex.facets())
        if (is_facet_restriction(complex, f)) out.push_back(f);
    return out;
}

Face chordal_free_vertex_facet(const Graph& g) {
    HHZReport report = hhz_check(g);  // also throws on non-chordal input
    if (!report.unmixed)
        throw std::invalid_argument("the free-vertex construction needs an unmixed graph");
    if (!report.partition_holds || report.free_facets.empty())
        throw TheoremViolation("unmixed chordal graph without a free-vertex facet partition");

    SimplicialComplex cl = clique_complex(g);
    std::vector<Face> free = free_vertices(cl);
    Face witness;
    for (size_t i = 0; i < cl.facets().size(); ++i) {
        if (free[i].is_empty()) continue;
        witness = witness.with(free[i].vertices().front());  // smallest index
    }

    SimplicialComplex ind = independence_complex(g);
    const auto& facets = ind.facets();
    if (std::find(facets.begin(), facets.end(), witness) == facets.end())
        throw TheoremViolation("free-vertex selection is not a maximal independent set");
    if (!is_facet_restriction(ind, witness))
        throw TheoremViolation("free-vertex facet is not a facet restriction");
    return witness;
}

ReverseWhiskerResult reverse_whisker(const SimplicialComplex& complex, const Coloring& chi,
                                     Face witness) {
    if (complex.is_void()) throw std::invalid_argument("cannot reverse the void complex");
    if (!complex.is_pure()) throw std::invalid_argument("not pure");
    int s = complex.dimension() + 1;
    if (chi.class_count() != s || !validate_coloring(complex, chi))
        throw std::runtime_error("not balanced: no valid (dim+1)-colouring supplied");
    if (!is_facet_restriction(complex, witness))
        throw std::runtime_error("the chosen facet is not a facet restriction");

    // each class meets the witness facet exactly once (|F| = s forces it)
    std::vector<int> class_rep(static_cast<size_t>(s), -1);
    for (int j = 0; j < s; ++j) {
        Face hit = witness.intersect(chi.classes[static_cast<size_t>(j)]);
        if (hit.size() != 1)
            throw TheoremViolation("a colour class misses the witness facet");
        class_rep[static_cast<size_t>(j)] = hit.vertices().front();
    }

    Face rest = complex.universe_face().minus(witness);
    SimplicialComplex restricted = complex.restriction(rest);

    // rebuild the whisker in the original universe, with the witness vertex
    // of class j standing in for y_j, and demand the input back exactly
    std::vector<Face> rebuilt;
    for (Face gface : restricted.faces()) {
        Face big = gface;
        for (int j = 0; j < s; ++j)
            if (gface.intersect(chi.classes[static_cast<size_t>(j)]).is_empty())
                big = big.with(class_rep[static_cast<size_t>(j)]);
        rebuilt.push_back(big);
    }
    std::sort(rebuilt.begin(), rebuilt.end(), face_less);
    if (!(rebuilt == complex.facets()))
        throw TheoremViolation(
            "the complex is not the whisker of its restriction at this facet");

    ReverseWhiskerResult result;
    result.source = restricted.compact_to(rest);
    for (int j = 0; j < s; ++j) {
        Face cls = chi.classes[static_cast<size_t>(j)].minus(witness);
        Face remapped;
        int pos = 0;
        for (int v : rest.vertices()) {
            if (cls.contains(v)) remapped = remapped.with(pos);
            ++pos;
        }
        result.source_coloring.classes.push_back(remapped);
    }
    result.witness = witness;
    result.h_input = complex.h_vector();
    result.f_source = result.source.f_vector();
    if (!sequences_equal_up_to_trailing_zeros(result.h_input, result.f_source))
        throw TheoremViolation("h-vector differs from the source f-vector after reversal");
    return result;
}

ReverseWhiskerResult reverse_whisker(const SimplicialComplex& complex, const Coloring& chi) {
    auto witness = find_facet_restriction(complex);
    if (!witness) throw std::runtime_error("no facet restriction");
    return reverse_whisker(complex, chi, *witness);
}

} // namespace whisk
