#ifndef WHISK_COMPLEX_HPP
#define WHISK_COMPLEX_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "whisk/vectors.hpp"

namespace whisk {

/// Raised when a verified mathematical identity fails at runtime.  This is
/// never silenced: it indicates either corrupted input or a genuine bug.
struct TheoremViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Largest supported vertex universe: one machine word per face keeps every
/// face operation O(1).
inline constexpr int kMaxVertices = 64;

/// A face of a simplicial complex, encoded as a bitmask over the universe.
/// Bit i set means the vertex with index i is a member.
struct Face {
    std::uint64_t bits = 0;

    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t b) : bits(b) {}

    static constexpr Face empty() { return Face{0}; }
    static constexpr Face singleton(int v) { return Face{std::uint64_t{1} << v}; }

    bool contains(int v) const { return (bits >> v) & 1u; }
    int size() const { return std::popcount(bits); }
    int dimension() const { return size() - 1; }
    bool is_empty() const { return bits == 0; }

    bool subset_of(Face o) const { return (bits & ~o.bits) == 0; }
    Face unite(Face o) const { return Face{bits | o.bits}; }
    Face intersect(Face o) const { return Face{bits & o.bits}; }
    Face minus(Face o) const { return Face{bits & ~o.bits}; }
    Face with(int v) const { return Face{bits | (std::uint64_t{1} << v)}; }
    Face without(int v) const { return Face{bits & ~(std::uint64_t{1} << v)}; }

    bool operator==(const Face&) const = default;

    /// Member vertex indices in increasing order.
    std::vector<int> vertices() const;
};

/// Canonical face order: by cardinality, then lexicographically by the
/// sorted vertex-index sequence (the set containing the smallest
/// differing vertex comes first).  Fixed so serialized output is unique.
inline bool face_less(Face a, Face b) {
    int ca = a.size(), cb = b.size();
    if (ca != cb) return ca < cb;
    std::uint64_t d = a.bits ^ b.bits;
    if (d == 0) return false;
    std::uint64_t low = d & (~d + 1);
    return (a.bits & low) != 0;
}

/// A finite simplicial complex in canonical form: an ordered, labelled
/// vertex universe plus the inclusion-maximal faces (facets), stored sorted
/// by face_less.  An empty facet list is the void complex; the facet list
/// [empty face] is the irrelevant complex { {} }, which is distinct.
///
/// All instances are immutable after construction; every operation below is
/// a pure function returning a fresh value, so complexes can be shared
/// freely between threads.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Canonicalize: deduplicate generators, drop non-maximal ones, sort.
    /// Throws std::invalid_argument on bad labels or out-of-range vertices.
    static SimplicialComplex build(std::vector<std::string> labels,
                                   const std::vector<Face>& generators);

    /// Convenience: generators given as lists of vertex labels.
    static SimplicialComplex build_from_labels(
        std::vector<std::string> labels,
        const std::vector<std::vector<std::string>>& generators);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }

    /// Index of a label; throws std::invalid_argument if unknown.
    int index_of(const std::string& label) const;

    const std::vector<Face>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }

    /// Bitmask of all vertices for this universe.
    Face universe_face() const;
    /// Bitmask of vertices that appear in at least one facet.
    Face support() const;

    /// Face membership test: contained in some facet.
    bool contains(Face f) const;

    /// max over facets of |F|-1; -1 for the irrelevant complex.
    /// Throws std::invalid_argument on the void complex.
    int dimension() const;

    /// All facets share one cardinality.  Throws on the void complex.
    bool is_pure() const;

    /// Every subset of every facet, deduplicated, in canonical order.
    /// Includes the empty face whenever the complex is nonvoid.
    std::vector<Face> faces() const;

    /// Number of faces, without materializing them.
    Int face_count() const;

    /// (f_{-1}, ..., f_d) with f_{-1} = 1.  Throws on the void complex.
    IntVector f_vector() const;

    /// (h_0, ..., h_{d+1}); exact integer transform of the f-vector.
    IntVector h_vector() const;

    /// link(sigma) = { tau : tau disjoint from sigma, tau U sigma a face }.
    /// Throws std::invalid_argument if sigma is not a face.
    SimplicialComplex link(Face sigma) const;

    /// deletion(sigma) = { tau : sigma not a subset of tau }.
    SimplicialComplex deletion(Face sigma) const;

    /// restriction to W = { F : F subset of W }.  The universe is retained,
    /// so bitmask encodings stay stable; use compact_to() to shrink it.
    SimplicialComplex restriction(Face w) const;

    /// Re-index onto the sub-universe W (labels kept, in index order).
    /// Every facet must lie inside W.
    SimplicialComplex compact_to(Face w) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<Face> facets_;

    static SimplicialComplex make_unchecked(std::vector<std::string> labels,
                                            std::vector<Face> facets);
    friend SimplicialComplex canonicalize(std::vector<std::string> labels,
                                          std::vector<Face> generators);
};

/// Validate labels (nonempty, distinct, no whitespace or '#', at most 64)
/// and throw std::invalid_argument with a message on violation.
void validate_labels(const std::vector<std::string>& labels);

/// Canonicalization used by build(); exposed for modules that construct
/// facet lists directly.
SimplicialComplex canonicalize(std::vector<std::string> labels,
                               std::vector<Face> generators);

} // namespace whisk

#endif
