#include "whisk/complex.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace whisk {

std::vector<int> Face::vertices() const {
    std::vector<int> out;
    std::uint64_t b = bits;
    while (b) {
        out.push_back(std::countr_zero(b));
        b &= b - 1;
    }
    return out;
}

void validate_labels(const std::vector<std::string>& labels) {
    if (static_cast<int>(labels.size()) > kMaxVertices)
        throw std::invalid_argument("at most 64 vertices are supported");
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty()) throw std::invalid_argument("empty vertex label");
        for (char c : l)
            if (std::isspace(static_cast<unsigned char>(c)) || c == '#')
                throw std::invalid_argument("label '" + l + "' contains whitespace or '#'");
        if (!seen.insert(l).second)
            throw std::invalid_argument("duplicate vertex label '" + l + "'");
    }
}

namespace {

std::uint64_t universe_mask(int n) {
    return n >= kMaxVertices ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

} // namespace

SimplicialComplex SimplicialComplex::make_unchecked(std::vector<std::string> labels,
                                                    std::vector<Face> facets) {
    SimplicialComplex c;
    c.labels_ = std::move(labels);
    c.facets_ = std::move(facets);
    return c;
}

SimplicialComplex canonicalize(std::vector<std::string> labels, std::vector<Face> generators) {
    validate_labels(labels);
    std::uint64_t mask = universe_mask(static_cast<int>(labels.size()));
    for (Face g : generators)
        if ((g.bits & ~mask) != 0)
            throw std::invalid_argument("facet uses a vertex outside the declared universe");

    // Large faces first so each generator only needs comparing against
    // already-kept ones; equal-size faces can never contain one another.
    std::sort(generators.begin(), generators.end(), [](Face a, Face b) {
        int ca = a.size(), cb = b.size();
        return ca != cb ? ca > cb : a.bits < b.bits;
    });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    std::vector<Face> facets;
    for (Face g : generators) {
        bool maximal = true;
        for (Face f : facets)
            if (g.subset_of(f)) {
                maximal = false;
                break;
            }
        if (maximal) facets.push_back(g);
    }
    std::sort(facets.begin(), facets.end(), face_less);
    return SimplicialComplex::make_unchecked(std::move(labels), std::move(facets));
}

SimplicialComplex SimplicialComplex::build(std::vector<std::string> labels,
                                           const std::vector<Face>& generators) {
    return canonicalize(std::move(labels), generators);
}

SimplicialComplex SimplicialComplex::build_from_labels(
    std::vector<std::string> labels,
    const std::vector<std::vector<std::string>>& generators) {
    validate_labels(labels);
    std::vector<Face> faces;
    faces.reserve(generators.size());
    for (const auto& gen : generators) {
        Face f;
        for (const auto& lab : gen) {
            auto it = std::find(labels.begin(), labels.end(), lab);
            if (it == labels.end())
                throw std::invalid_argument("unknown vertex label '" + lab + "'");
            f = f.with(static_cast<int>(it - labels.begin()));
        }
        faces.push_back(f);
    }
    return canonicalize(std::move(labels), std::move(faces));
}

int SimplicialComplex::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown vertex label '" + label + "'");
}

Face SimplicialComplex::universe_face() const { return Face{universe_mask(vertex_count())}; }

Face SimplicialComplex::support() const {
    Face s;
    for (Face f : facets_) s = s.unite(f);
    return s;
}

bool SimplicialComplex::contains(Face f) const {
    for (Face facet : facets_)
        if (f.subset_of(facet)) return true;
    return false;
}

int SimplicialComplex::dimension() const {
    if (is_void()) throw std::invalid_argument("the void complex has no dimension");
    return facets_.back().dimension();  // canonical order puts largest last
}

bool SimplicialComplex::is_pure() const {
    if (is_void()) throw std::invalid_argument("purity is undefined for the void complex");
    return facets_.front().size() == facets_.back().size();
}

std::vector<Face> SimplicialComplex::faces() const {
    std::set<std::uint64_t> seen;
    for (Face f : facets_) {
        std::uint64_t s = f.bits;
        while (true) {
            seen.insert(s);
            if (s == 0) break;
            s = (s - 1) & f.bits;
        }
    }
    std::vector<Face> out;
    out.reserve(seen.size());
    for (auto b : seen) out.push_back(Face{b});
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

Int SimplicialComplex::face_count() const {
    std::set<std::uint64_t> seen;
    for (Face f : facets_) {
        std::uint64_t s = f.bits;
        while (true) {
            seen.insert(s);
            if (s == 0) break;
            s = (s - 1) & f.bits;
        }
    }
    return Int(seen.size());
}

IntVector SimplicialComplex::f_vector() const {
    if (is_void()) throw std::invalid_argument("the void complex has no f-vector");
    int d = dimension();
    std::vector<Int> f(static_cast<size_t>(d) + 2);
    for (Face face : faces()) f[static_cast<size_t>(face.size())] += 1;
    return IntVector{std::move(f), -1};
}

IntVector SimplicialComplex::h_vector() const { return f_to_h(f_vector()); }

SimplicialComplex SimplicialComplex::link(Face sigma) const {
    if (!contains(sigma)) throw std::invalid_argument("link of a non-face");
    std::vector<Face> gens;
    for (Face f : facets_)
        if (sigma.subset_of(f)) gens.push_back(f.minus(sigma));
    return canonicalize(labels_, std::move(gens));
}

SimplicialComplex SimplicialComplex::deletion(Face sigma) const {
    std::vector<Face> gens;
    for (Face f : facets_) {
        if (!sigma.subset_of(f)) {
            gens.push_back(f);
            continue;
        }
        // the maximal subsets of f avoiding sigma drop one sigma-vertex each
        for (int v : sigma.vertices()) gens.push_back(f.without(v));
    }
    return canonicalize(labels_, std::move(gens));
}

SimplicialComplex SimplicialComplex::restriction(Face w) const {
    if ((w.bits & ~universe_face().bits) != 0)
        throw std::invalid_argument("restriction target is not a subset of the universe");
    std::vector<Face> gens;
    for (Face f : facets_) gens.push_back(f.intersect(w));
    return canonicalize(labels_, std::move(gens));
}

SimplicialComplex SimplicialComplex::compact_to(Face w) const {
    if ((w.bits & ~universe_face().bits) != 0)
        throw std::invalid_argument("sub-universe is not a subset of the universe");
    std::vector<int> newpos(kMaxVertices, -1);
    std::vector<std::string> labels;
    for (int v : w.vertices()) {
        newpos[v] = static_cast<int>(labels.size());
        labels.push_back(labels_[static_cast<size_t>(v)]);
    }
    std::vector<Face> gens;
    for (Face f : facets_) {
        if (!f.subset_of(w)) throw std::invalid_argument("facet outside the target sub-universe");
        Face g;
        for (int v : f.vertices()) g = g.with(newpos[v]);
        gens.push_back(g);
    }
    return canonicalize(std::move(labels), std::move(gens));
}

} // namespace whisk
