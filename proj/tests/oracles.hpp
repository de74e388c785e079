// Brute-force reference implementations used to cross-check the library.
// Everything here is deliberately simple, slow, and independent of the
// algorithms under test: subsets are enumerated exhaustively, polynomials
// are multiplied term by term, and no result from the library is reused.
#ifndef WHISK_TESTS_ORACLES_HPP
#define WHISK_TESTS_ORACLES_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "whisk/complex.hpp"
#include "whisk/coloring.hpp"
#include "whisk/graphs.hpp"
#include "whisk/vectors.hpp"

namespace oracles {

/// Every subset of the vertex universe that lies under some facet.
inline std::set<uint64_t> all_faces(const whisk::SimplicialComplex& c) {
    std::set<uint64_t> faces;
    if (c.is_void()) return faces;
    int n = c.vertex_count();
    uint64_t full = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    for (uint64_t mask = 0;; ++mask) {
        for (const whisk::Face& f : c.facets())
            if ((mask & f.bits) == mask) {
                faces.insert(mask);
                break;
            }
        if (mask == full) break;
    }
    return faces;
}

/// f-vector by counting the enumerated faces dimension by dimension.
inline whisk::IntVector f_vector(const whisk::SimplicialComplex& c) {
    whisk::IntVector result;
    result.offset = -1;
    if (c.is_void()) return result;
    result.entries.assign(static_cast<size_t>(c.dimension()) + 2, 0);
    for (uint64_t mask : all_faces(c)) {
        int k = whisk::Face{mask}.size();  // dimension + 1
        result.entries[static_cast<size_t>(k)] += 1;
    }
    return result;
}

/// Coefficients of p * q with exact integers.
inline std::vector<whisk::Int> poly_mul(const std::vector<whisk::Int>& p,
                                        const std::vector<whisk::Int>& q) {
    if (p.empty() || q.empty()) return {};
    std::vector<whisk::Int> out(p.size() + q.size() - 1, 0);
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

/// h-vector via the generating polynomial
///   sum_k h_k t^k = sum_i f_{i-1} t^i (1 - t)^{d+1-i},
/// computed with explicit polynomial arithmetic (no binomial formula).
inline whisk::IntVector h_from_f(const whisk::IntVector& f) {
    int d1 = f.max_index() + 1;  // d + 1
    std::vector<whisk::Int> total(static_cast<size_t>(d1) + 1, 0);
    for (int i = 0; i <= d1; ++i) {
        std::vector<whisk::Int> term = {f.at(i - 1)};
        std::vector<whisk::Int> t_pow(static_cast<size_t>(i) + 1, 0);
        t_pow.back() = 1;
        term = poly_mul(term, t_pow);
        for (int k = 0; k < d1 - i; ++k) term = poly_mul(term, {1, -1});
        for (size_t k = 0; k < term.size() && k < total.size(); ++k) total[k] += term[k];
    }
    whisk::IntVector h;
    h.offset = 0;
    h.entries = total;
    return h;
}

/// All independent vertex subsets of a graph, by exhaustive scan.
inline std::set<uint64_t> independent_sets(const whisk::Graph& g) {
    std::set<uint64_t> out;
    int n = g.vertex_count();
    uint64_t full = (uint64_t{1} << n) - 1;
    for (uint64_t mask = 0;; ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) ok = false;
        if (ok) out.insert(mask);
        if (mask == full) break;
    }
    return out;
}

/// Is chi a valid colouring: classes partition the universe and every
/// facet meets each class at most once.  Checked from first principles.
inline bool coloring_valid(const whisk::SimplicialComplex& c, const whisk::Coloring& chi) {
    uint64_t seen = 0;
    for (const whisk::Face& cls : chi.classes) {
        if (cls.bits & seen) return false;
        seen |= cls.bits;
    }
    uint64_t universe =
        (c.vertex_count() == 64) ? ~uint64_t{0} : ((uint64_t{1} << c.vertex_count()) - 1);
    if (seen != universe) return false;
    for (const whisk::Face& f : c.facets())
        for (const whisk::Face& cls : chi.classes)
            if (whisk::Face{f.bits & cls.bits}.size() > 1) return false;
    return true;
}

/// Shelling validity straight from the definition: the intersection of
/// facet F_j with the union of the earlier facets must be a nonempty union
/// of codimension-one faces of F_j (checked by enumerating the subsets of
/// F_j lying in earlier facets and taking maximal ones).
inline bool shelling_valid(const whisk::SimplicialComplex& c, const std::vector<int>& order) {
    const auto& facets = c.facets();
    if (order.size() != facets.size()) return false;
    for (size_t j = 1; j < order.size(); ++j) {
        whisk::Face fj = facets[static_cast<size_t>(order[j])];
        // Subsets of F_j contained in an earlier facet.
        std::set<uint64_t> meets;
        for (size_t i = 0; i < j; ++i) {
            uint64_t cap = fj.bits & facets[static_cast<size_t>(order[i])].bits;
            for (uint64_t s = cap;; s = (s - 1) & cap) {
                meets.insert(s);
                if (s == 0) break;
            }
        }
        // Maximal elements of `meets` must all have size |F_j| - 1.  (For
        // 0-dimensional facets the intersection is {emptyset}, whose single
        // maximal element has size 0 = |F_j| - 1, so point sets shell in
        // any order, matching the usual convention.)
        for (uint64_t m : meets) {
            bool maximal = true;
            for (uint64_t other : meets)
                if (other != m && (m & other) == m) {
                    maximal = false;
                    break;
                }
            if (maximal && whisk::Face{m}.size() != fj.size() - 1) return false;
        }
    }
    return true;
}

}  // namespace oracles

#endif
