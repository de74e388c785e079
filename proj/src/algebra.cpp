#include "whisk/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace whisk {

namespace {

/// Minimal non-faces by breadth-first growth: a minimal non-face of size
/// k+1 has all k-subsets faces, so it extends a face of size k.
std::vector<Face> minimal_non_faces(const SimplicialComplex& complex) {
    Face universe = complex.universe_face();
    std::set<std::uint64_t> result;
    std::vector<Face> frontier{Face::empty()};  // faces of the current size
    std::set<std::uint64_t> next_faces, considered;
    while (!frontier.empty()) {
        next_faces.clear();
        considered.clear();
        for (Face f : frontier) {
            for (int v : universe.minus(f).vertices()) {
                Face cand = f.with(v);
                if (!considered.insert(cand.bits).second) continue;
                if (complex.contains(cand)) {
                    next_faces.insert(cand.bits);
                    continue;
                }
                bool minimal = true;
                for (int u : cand.vertices()) {
                    if (!complex.contains(cand.without(u))) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) result.insert(cand.bits);
            }
        }
        frontier.clear();
        for (auto b : next_faces) frontier.push_back(Face{b});
    }
    std::vector<Face> out;
    out.reserve(result.size());
    for (auto b : result) out.push_back(Face{b});
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

} // namespace

std::string MonomialIdeal::to_string() const {
    std::ostringstream out;
    for (Face g : generators) {
        bool first = true;
        for (int v : g.vertices()) {
            if (!first) out << ' ';
            out << variables[static_cast<size_t>(v)];
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    if (complex.is_void())
        throw std::invalid_argument("the void complex has no Stanley-Reisner ideal here");
    MonomialIdeal ideal;
    ideal.variables = complex.labels();
    ideal.generators = minimal_non_faces(complex);
    return ideal;
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
    if (complex.is_void())
        throw std::invalid_argument("the void complex has no Alexander dual here");
    std::vector<Face> mnf = minimal_non_faces(complex);
    if (mnf.empty())
        throw std::invalid_argument("the full simplex has a void Alexander dual");
    Face universe = complex.universe_face();
    std::vector<Face> gens;
    gens.reserve(mnf.size());
    for (Face f : mnf) gens.push_back(universe.minus(f));
    return canonicalize(complex.labels(), std::move(gens));
}

Int BettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? Int(0) : it->second;
}

Int BettiTable::total(int i) const {
    Int sum = 0;
    for (const auto& [key, val] : entries)
        if (key.first == i) sum += val;
    return sum;
}

int BettiTable::max_homological_index() const {
    int m = -1;
    for (const auto& [key, val] : entries)
        if (val != 0) m = std::max(m, key.first);
    return m;
}

bool BettiTable::linear_in_degree(int c) const {
    for (const auto& [key, val] : entries)
        if (val != 0 && key.second - key.first != c) return false;
    return true;
}

std::string BettiTable::to_tsv() const {
    std::ostringstream out;
    out << "i\tj\tbeta\n";
    for (const auto& [key, val] : entries)
        if (val != 0) out << key.first << '\t' << key.second << '\t' << val << "\n";
    return out.str();
}

WhiskerDualBettiReport whisker_dual_betti(const IntVector& f_source, int n, int s) {
    if (f_source.offset != -1 || f_source.entries.empty() || f_source.entries.front() != 1)
        throw std::invalid_argument("malformed f-vector: must start at f_{-1} = 1");
    for (const Int& e : f_source.entries)
        if (e <= 0) throw std::invalid_argument("malformed f-vector: entries must be positive");
    int d = f_source.max_index();
    if (d + 1 > s)
        throw std::invalid_argument("f-vector dimension exceeds the class count");
    if (d >= 0 && f_source.at(0) > n)
        throw std::invalid_argument("f-vector has more vertices than the source complex");

    WhiskerDualBettiReport report;
    for (int i = 0; i <= d + 1; ++i) {
        Int beta = 0;
        for (int j = i; j <= d + 1; ++j) beta += binomial(j, i) * f_source.at(j - 1);
        report.table.entries[{i, i + n}] = beta;
    }
    report.projective_dimension = d + 1;
    report.regularity = d + 1;
    return report;
}

WhiskerDualBettiReport whisker_dual_betti(const WhiskerComplex& w) {
    // f-vector of the source, recovered from the face/facet correspondence
    int d = -1;
    for (const auto& [g, f] : w.correspondence) d = std::max(d, g.dimension());
    std::vector<Int> f(static_cast<size_t>(d) + 2);
    for (const auto& [g, facet] : w.correspondence) f[static_cast<size_t>(g.size())] += 1;
    return whisker_dual_betti(IntVector{std::move(f), -1}, w.source_vertex_count, w.class_count);
}

EagonReinerCheck eagon_reiner_poly_check(const IntVector& h, const BettiTable& table) {
    EagonReinerCheck check;
    int top = std::max(h.max_index(), 0);
    check.h_side.assign(static_cast<size_t>(top) + 1, 0);
    for (int i = 0; i <= h.max_index(); ++i)
        for (int k = 0; k <= i; ++k)
            check.h_side[static_cast<size_t>(k)] += h.at(i) * binomial(i, k);
    int maxi = table.max_homological_index();
    for (int i = 0; i <= maxi; ++i) check.betti_side.push_back(table.total(i));
    check.equal = sequences_equal_up_to_trailing_zeros(IntVector{check.h_side, 0},
                                                       IntVector{check.betti_side, 0});
    return check;
}

namespace {

/// Rank of a sparse {0,±1}-seeded matrix by fraction-free rational
/// elimination.  Rows and columns are indexed by faces of adjacent sizes.
int matrix_rank(std::vector<std::vector<Rational>>& m) {
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(pivot)]);
        const Rational p = m[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (int r = rank + 1; r < rows; ++r) {
            Rational& lead = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (lead == 0) continue;
            Rational factor = lead / p;
            for (int c = col; c < cols; ++c)
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    factor * m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        }
        ++rank;
    }
    return rank;
}

} // namespace

IntVector reduced_homology_ranks(const SimplicialComplex& complex) {
    if (complex.vertex_count() > 16)
        throw std::invalid_argument("homology oracle limited to 16 vertices");
    if (complex.is_void()) return IntVector{{}, -1};

    int d = complex.dimension();
    // faces grouped by dimension, with positions for column indexing
    std::vector<std::vector<Face>> by_dim(static_cast<size_t>(d) + 2);
    std::map<std::uint64_t, int> position;
    for (Face f : complex.faces()) by_dim[static_cast<size_t>(f.size())].push_back(f);
    // boundary ranks: rank[k] = rank of d_k : C_k -> C_{k-1}, k = 0..d
    std::vector<int> bd_rank(static_cast<size_t>(d) + 2, 0);
    for (int k = 0; k <= d; ++k) {
        const auto& domain = by_dim[static_cast<size_t>(k) + 1];  // k-faces (size k+1)
        const auto& codomain = by_dim[static_cast<size_t>(k)];
        position.clear();
        for (size_t r = 0; r < codomain.size(); ++r) position[codomain[r].bits] = static_cast<int>(r);
        std::vector<std::vector<Rational>> m(
            codomain.size(), std::vector<Rational>(domain.size(), Rational(0)));
        for (size_t c = 0; c < domain.size(); ++c) {
            int sign = 1;
            for (int v : domain[c].vertices()) {
                m[static_cast<size_t>(position.at(domain[c].without(v).bits))][c] = sign;
                sign = -sign;
            }
        }
        bd_rank[static_cast<size_t>(k) + 1] = matrix_rank(m);
    }

    std::vector<Int> ranks(static_cast<size_t>(d) + 2);
    for (int k = -1; k <= d; ++k) {
        int faces_k = static_cast<int>(by_dim[static_cast<size_t>(k) + 1].size());
        int boundary_in = k + 1 <= d ? bd_rank[static_cast<size_t>(k) + 2] : 0;
        int boundary_out = bd_rank[static_cast<size_t>(k) + 1];  // zero map for k = -1
        ranks[static_cast<size_t>(k) + 1] = faces_k - boundary_in - boundary_out;
    }
    return IntVector{std::move(ranks), -1};
}

BettiTable hochster_betti_oracle(const SimplicialComplex& complex) {
    int n = complex.vertex_count();
    if (n > 12) throw std::invalid_argument("Hochster oracle limited to 12 vertices");
    if (complex.is_void())
        throw std::invalid_argument("the void complex has no Stanley-Reisner ideal here");

    BettiTable table;
    // restrictions with equal facet lists share their homology
    std::map<std::vector<std::uint64_t>, IntVector> homology_memo;

    std::uint64_t full = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (std::uint64_t bits = 1; bits <= full; ++bits) {
        Face sigma{bits};
        int j = sigma.size();
        SimplicialComplex restricted = complex.restriction(sigma);
        std::vector<std::uint64_t> key;
        key.reserve(restricted.facets().size());
        for (Face f : restricted.facets()) key.push_back(f.bits);
        auto it = homology_memo.find(key);
        if (it == homology_memo.end())
            it = homology_memo.emplace(std::move(key), reduced_homology_ranks(restricted)).first;
        const IntVector& ranks = it->second;
        for (int k = ranks.offset; k <= ranks.max_index(); ++k) {
            if (ranks.at(k) == 0) continue;
            int i = j - k - 2;
            if (i < 0) continue;  // cannot occur for genuine complexes
            table.entries[{i, j}] += ranks.at(k);
        }
    }
    return table;
}

} // namespace whisk
