#include "whisk/decompose.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <sstream>

namespace whisk {

namespace {

/// Memoization key: the facet masks re-indexed onto the support, packed as
/// bytes.  Two sub-complexes with the same key are isomorphic via the
/// order-preserving support relabeling, so they share both the verdict and
/// the certificate (whose shed vertices are support positions).
std::string support_key(const std::vector<Face>& facets, Face support) {
    int pos[kMaxVertices];
    int k = 0;
    for (int v : support.vertices()) pos[v] = k++;
    std::string key;
    key.reserve(facets.size() * sizeof(std::uint64_t));
    for (Face f : facets) {
        std::uint64_t m = 0;
        for (int v : f.vertices()) m |= std::uint64_t{1} << pos[v];
        char buf[sizeof m];
        std::memcpy(buf, &m, sizeof m);
        key.append(buf, sizeof m);
    }
    return key;
}

struct VDSearcher {
    SheddingCertificate cert;
    std::map<std::string, int> memo;  // support key -> node index, or -1 for "not VD"

    int leaf() {
        cert.nodes.push_back(SheddingCertificate::Node{});
        return static_cast<int>(cert.nodes.size()) - 1;
    }

    /// Returns the certificate node index, or -1 when not decomposable.
    /// The input is pure and nonvoid.
    int run(const SimplicialComplex& complex) {
        const auto& facets = complex.facets();
        if (facets.size() == 1) return leaf();

        Face supp = complex.support();
        std::string key = support_key(facets, supp);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        int result = -1;
        for (int v : supp.vertices()) {
            SimplicialComplex del = complex.deletion(Face::singleton(v));
            // v in the support of a non-simplex complex: the deletion is
            // nonvoid; it must stay pure for v to be a shedding candidate
            if (!del.is_pure()) continue;
            int del_node = run(del);
            if (del_node < 0) continue;
            int link_node = run(complex.link(Face::singleton(v)));
            if (link_node < 0) continue;

            SheddingCertificate::Node node;
            // record v as its position in the sorted support
            node.shed = supp.intersect(Face{(std::uint64_t{1} << v) - 1}).size();
            node.del = del_node;
            node.link = link_node;
            cert.nodes.push_back(node);
            result = static_cast<int>(cert.nodes.size()) - 1;
            break;
        }
        memo.emplace(std::move(key), result);
        return result;
    }
};

bool replay(const SimplicialComplex& complex, const SheddingCertificate& cert, int node_idx,
            int depth) {
    // support shrinks at every internal node, so any valid replay is shallow
    if (depth > kMaxVertices + 1) return false;
    if (node_idx < 0 || node_idx >= static_cast<int>(cert.nodes.size())) return false;
    const auto& node = cert.nodes[static_cast<size_t>(node_idx)];

    if (complex.is_void() || !complex.is_pure()) return false;
    if (node.shed < 0) return complex.facets().size() == 1;

    std::vector<int> supp = complex.support().vertices();
    if (node.shed >= static_cast<int>(supp.size())) return false;
    int v = supp[static_cast<size_t>(node.shed)];

    SimplicialComplex del = complex.deletion(Face::singleton(v));
    if (del.is_void() || !del.is_pure()) return false;
    return replay(del, cert, node.del, depth + 1) &&
           replay(complex.link(Face::singleton(v)), cert, node.link, depth + 1);
}

void print_certificate(const SimplicialComplex& complex, const SheddingCertificate& cert,
                       int node_idx, int indent, std::ostringstream& out) {
    const auto& node = cert.nodes[static_cast<size_t>(node_idx)];
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (node.shed < 0) {
        out << pad << "simplex {";
        Face f = complex.facets().front();
        bool first = true;
        for (int v : f.vertices()) {
            if (!first) out << ' ';
            out << complex.label(v);
            first = false;
        }
        out << "}\n";
        return;
    }
    std::vector<int> supp = complex.support().vertices();
    int v = supp[static_cast<size_t>(node.shed)];
    out << pad << "shed " << complex.label(v) << "\n";
    out << pad << "deletion:\n";
    print_certificate(complex.deletion(Face::singleton(v)), cert, node.del, indent + 1, out);
    out << pad << "link:\n";
    print_certificate(complex.link(Face::singleton(v)), cert, node.link, indent + 1, out);
}

} // namespace

VDResult is_vertex_decomposable(const SimplicialComplex& complex) {
    if (complex.is_void())
        throw std::invalid_argument("vertex decomposability is undefined for the void complex");
    if (!complex.is_pure())
        throw std::invalid_argument("vertex decomposability requires a pure complex");

    VDSearcher searcher;
    int root = searcher.run(complex);
    VDResult r;
    r.decomposable = root >= 0;
    if (r.decomposable) {
        r.certificate = std::move(searcher.cert);
        r.certificate.root = root;
    }
    return r;
}

bool verify_certificate(const SimplicialComplex& complex, const SheddingCertificate& cert) {
    if (cert.empty()) return false;
    return replay(complex, cert, cert.root, 0);
}

std::string certificate_to_text(const SimplicialComplex& complex,
                                const SheddingCertificate& cert) {
    if (cert.empty()) return "";
    std::ostringstream out;
    print_certificate(complex, cert, cert.root, 0, out);
    return out.str();
}

std::string ShellingOrder::to_text(const SimplicialComplex& complex) const {
    std::ostringstream out;
    auto emit_face = [&](Face f) {
        out << '{';
        bool first = true;
        for (int v : f.vertices()) {
            if (!first) out << ' ';
            out << complex.label(v);
            first = false;
        }
        out << '}';
    };
    for (size_t j = 0; j < order.size(); ++j) {
        out << (j + 1) << ": facet " << (order[j] + 1) << ' ';
        emit_face(complex.facets()[static_cast<size_t>(order[j])]);
        out << " R ";
        emit_face(restriction_sets[j]);
        out << "\n";
    }
    return out.str();
}

namespace {

void check_permutation(const SimplicialComplex& complex, const std::vector<int>& order) {
    if (!complex.is_pure()) throw std::invalid_argument("shellability requires a pure complex");
    size_t t = complex.facets().size();
    std::vector<bool> seen(t, false);
    if (order.size() != t) throw std::invalid_argument("order is not a permutation of the facets");
    for (int idx : order) {
        if (idx < 0 || static_cast<size_t>(idx) >= t || seen[static_cast<size_t>(idx)])
            throw std::invalid_argument("order is not a permutation of the facets");
        seen[static_cast<size_t>(idx)] = true;
    }
}

/// The vertices v for which some earlier facet F_l has F_j \ F_l = {v}.
Face singleton_difference_set(const std::vector<Face>& facets, const std::vector<int>& order,
                              size_t j) {
    Face s;
    Face fj = facets[static_cast<size_t>(order[j])];
    for (size_t l = 0; l < j; ++l) {
        Face diff = fj.minus(facets[static_cast<size_t>(order[l])]);
        if (diff.size() == 1) s = s.unite(diff);
    }
    return s;
}

Face restriction_set(const std::vector<Face>& facets, const std::vector<int>& order, size_t j) {
    Face fj = facets[static_cast<size_t>(order[j])];
    Face r;
    for (int z : fj.vertices()) {
        Face sub = fj.without(z);
        for (size_t l = 0; l < j; ++l) {
            if (sub.subset_of(facets[static_cast<size_t>(order[l])])) {
                r = r.with(z);
                break;
            }
        }
    }
    return r;
}

} // namespace

bool verify_shelling(const SimplicialComplex& complex, const std::vector<int>& order) {
    check_permutation(complex, order);
    const auto& facets = complex.facets();
    for (size_t j = 1; j < order.size(); ++j) {
        Face s = singleton_difference_set(facets, order, j);
        Face fj = facets[static_cast<size_t>(order[j])];
        for (size_t i = 0; i < j; ++i) {
            Face diff = fj.minus(facets[static_cast<size_t>(order[i])]);
            if (diff.intersect(s).is_empty()) return false;
        }
    }
    return true;
}

ShellingOrder whisker_shelling_order(const WhiskerComplex& w) {
    const auto& facets = w.complex.facets();

    // facet -> source face, from the stored correspondence
    std::map<std::uint64_t, Face> source_of;
    for (const auto& [g, f] : w.correspondence) source_of[f.bits] = g;

    std::vector<int> order(facets.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return source_of.at(facets[static_cast<size_t>(a)].bits).size() <
               source_of.at(facets[static_cast<size_t>(b)].bits).size();
    });

    ShellingOrder so;
    so.order = order;
    for (size_t j = 0; j < order.size(); ++j) {
        Face r = restriction_set(facets, order, j);
        Face g = source_of.at(facets[static_cast<size_t>(order[j])].bits);
        if (!(r == g))
            throw TheoremViolation(
                "restriction set of a whisker facet differs from its source face");
        so.restriction_sets.push_back(r);
    }
    if (!verify_shelling(w.complex, so.order))
        throw TheoremViolation("dimension-refining facet order failed the shelling condition");
    return so;
}

IntVector h_vector_from_shelling(const SimplicialComplex& complex, const ShellingOrder& order) {
    if (!verify_shelling(complex, order.order))
        throw std::invalid_argument("invalid shelling order");
    const auto& facets = complex.facets();
    if (order.restriction_sets.size() != order.order.size())
        throw std::invalid_argument("restriction sets out of step with the order");
    int d = complex.dimension();
    std::vector<Int> h(static_cast<size_t>(d) + 2);
    for (size_t j = 0; j < order.order.size(); ++j) {
        Face expect = restriction_set(facets, order.order, j);
        if (!(expect == order.restriction_sets[j]))
            throw std::invalid_argument("restriction sets do not match the order");
        h[static_cast<size_t>(expect.size())] += 1;
    }
    return IntVector{std::move(h), 0};
}

ShellingSearchResult find_shelling(const SimplicialComplex& complex) {
    if (!complex.is_pure()) throw std::invalid_argument("shellability requires a pure complex");
    const auto& facets = complex.facets();
    size_t t = facets.size();

    constexpr long kExhaustiveFacets = 9;
    constexpr long kNodeBudget = 2'000'000;

    std::vector<int> order;
    std::vector<bool> used(t, false);
    long nodes = 0;
    bool budget_hit = false;

    // depth-first over prefixes; a prefix is viable iff it satisfies the
    // shelling condition, which only ever references earlier facets, so
    // pruning loses no solutions
    std::vector<int> next_try(t + 1, 0);
    size_t depth = 0;
    while (true) {
        if (depth == t) break;  // complete order found
        bool advanced = false;
        for (int k = next_try[depth]; k < static_cast<int>(t); ++k) {
            if (used[static_cast<size_t>(k)]) continue;
            if (static_cast<long>(t) > kExhaustiveFacets && ++nodes > kNodeBudget) {
                budget_hit = true;
                break;
            }
            order.push_back(k);
            bool ok = true;
            if (depth > 0) {
                Face s = singleton_difference_set(facets, order, depth);
                Face fj = facets[static_cast<size_t>(k)];
                for (size_t i = 0; i < depth && ok; ++i)
                    if (fj.minus(facets[static_cast<size_t>(order[i])]).intersect(s).is_empty())
                        ok = false;
            }
            if (ok) {
                used[static_cast<size_t>(k)] = true;
                next_try[depth] = k + 1;
                ++depth;
                next_try[depth] = 0;
                advanced = true;
                break;
            }
            order.pop_back();
        }
        if (budget_hit) break;
        if (!advanced) {
            if (depth == 0) {
                return {ShellingSearch::None, std::nullopt};  // exhausted all roots
            }
            --depth;
            int prev = order.back();
            order.pop_back();
            used[static_cast<size_t>(prev)] = false;
            next_try[depth] = prev + 1;
        }
    }

    if (budget_hit) return {ShellingSearch::Unknown, std::nullopt};

    ShellingOrder so;
    so.order = order;
    for (size_t j = 0; j < t; ++j)
        so.restriction_sets.push_back(restriction_set(facets, order, j));
    if (!verify_shelling(complex, so.order))
        throw TheoremViolation("search produced an order that fails verification");
    return {ShellingSearch::Found, std::move(so)};
}

} // namespace whisk
