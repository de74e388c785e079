#ifndef WHISK_DECOMPOSE_HPP
#define WHISK_DECOMPOSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "whisk/coloring.hpp"
#include "whisk/complex.hpp"

namespace whisk {

/// Certificate of vertex decomposability: a binary tree whose leaves are
/// simplices and whose internal nodes name a shedding vertex together with
/// certificates for the deletion and the link.  Shed vertices are recorded
/// as positions into the sorted support of the sub-complex at that node, so
/// a certificate replays against any complex with the same structure.
struct SheddingCertificate {
    struct Node {
        int shed = -1;  // support position of the shedding vertex; -1 = simplex leaf
        int del = -1;   // child index for the deletion branch
        int link = -1;  // child index for the link branch
    };
    std::vector<Node> nodes;
    int root = -1;

    bool empty() const { return root < 0; }
};

/// Decide vertex decomposability of a pure, nonvoid complex by exhaustive
/// shedding-vertex search with memoization on the support-compacted facet
/// structure.  A candidate whose deletion is non-pure is skipped.  Returns
/// a replayable certificate on success.
struct VDResult {
    bool decomposable = false;
    SheddingCertificate certificate;  // populated iff decomposable
};

VDResult is_vertex_decomposable(const SimplicialComplex& complex);

/// Replay a certificate against a complex, checking each leaf is a simplex
/// and each internal node's deletion stays pure; linear in tree size.
bool verify_certificate(const SimplicialComplex& complex, const SheddingCertificate& cert);

/// Deterministic indented text form; vertices printed as labels of the
/// complex the certificate belongs to.
std::string certificate_to_text(const SimplicialComplex& complex,
                                const SheddingCertificate& cert);

/// A shelling order of a pure complex: facet indices into the canonical
/// facet list plus the per-facet restriction sets
/// R(F_j) = { z in F_j : F_j \ {z} lies in <F_1, ..., F_{j-1}> }.
struct ShellingOrder {
    std::vector<int> order;
    std::vector<Face> restriction_sets;

    std::string to_text(const SimplicialComplex& complex) const;
};

/// Check the shelling condition: for all i < j there are v in F_j \ F_i and
/// l < j with F_j \ F_l = {v}.  The order must be a permutation of the
/// facets and the complex pure; violations of those preconditions throw.
bool verify_shelling(const SimplicialComplex& complex, const std::vector<int>& order);

/// The dimension-refining shelling of a whisker complex: facets sorted by
/// the dimension of their source face (ties broken canonically), with
/// restriction sets computed from the definition and cross-checked against
/// the identity R(F_j) = g_j.  Throws TheoremViolation if either the
/// shelling condition or the identity fails.
ShellingOrder whisker_shelling_order(const WhiskerComplex& w);

/// Histogram of restriction-set sizes, h_i = #{ j : |R(F_j)| = i }.
/// The order is re-verified first.
IntVector h_vector_from_shelling(const SimplicialComplex& complex, const ShellingOrder& order);

/// Backtracking search for a shelling order.  Exhaustive (and therefore
/// conclusive) up to 9 facets; beyond that the search runs under a node
/// budget and reports Unknown when the budget is exhausted.
enum class ShellingSearch { Found, None, Unknown };

struct ShellingSearchResult {
    ShellingSearch status = ShellingSearch::None;
    std::optional<ShellingOrder> order;
};

ShellingSearchResult find_shelling(const SimplicialComplex& complex);

} // namespace whisk

#endif
