#ifndef WHISK_ALGEBRA_HPP
#define WHISK_ALGEBRA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "whisk/coloring.hpp"
#include "whisk/complex.hpp"

namespace whisk {

/// A square-free monomial ideal in the polynomial ring on the given
/// variables, stored by its minimal generators (an antichain of supports).
struct MonomialIdeal {
    std::vector<std::string> variables;
    std::vector<Face> generators;  // canonical face order

    std::string to_string() const;
};

/// Stanley-Reisner ideal: generated by the minimal non-faces.  The full
/// simplex yields the zero ideal; the void complex is rejected.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

/// Alexander dual: the complex whose faces are complements of non-faces;
/// its facets are the complements of the minimal non-faces of the input.
/// Errors on the void complex and on the full simplex (dual would be void).
SimplicialComplex alexander_dual(const SimplicialComplex& complex);

/// Graded Betti numbers beta_{i,j}, stored sparsely with exact integers.
struct BettiTable {
    std::map<std::pair<int, int>, Int> entries;  // (i, j) -> beta_{i,j}, zeros omitted

    Int at(int i, int j) const;
    Int total(int i) const;  // beta_i = sum_j beta_{i,j}
    int max_homological_index() const;
    bool linear_in_degree(int c) const;  // support only on j = i + c
    bool operator==(const BettiTable&) const = default;

    std::string to_tsv() const;  // "i\tj\tbeta" header + rows sorted by (i, j)
};

/// Closed-form Betti table of the Stanley-Reisner ideal of the Alexander
/// dual of a whisker complex.  Takes the f-vector of the source complex
/// (offset -1, f_{-1} = 1), the source vertex count n, and the class count
/// s.  The ideal has a linear resolution concentrated on degrees j = i + n:
///   beta_{i, i+n} = sum_{j=i}^{d+1} C(j, i) * f_{j-1},   i = 0 .. d+1,
/// where d is the source dimension; the projective dimension of the ideal
/// and the regularity of the whisker complex's Stanley-Reisner quotient
/// both equal d+1 and are reported alongside.
struct WhiskerDualBettiReport {
    BettiTable table;
    int projective_dimension = 0;
    int regularity = 0;
};

WhiskerDualBettiReport whisker_dual_betti(const IntVector& f_source, int n, int s);
WhiskerDualBettiReport whisker_dual_betti(const WhiskerComplex& w);

/// The polynomial identity behind the linear-resolution Betti formula:
/// expand sum_i h_i (t+1)^i exactly and compare coefficient-wise with the
/// total Betti numbers (beta_0, beta_1, ...) of the ideal.  Returns both
/// coefficient sequences for reporting.
struct EagonReinerCheck {
    std::vector<Int> h_side;      // coefficients of sum h_i (t+1)^i
    std::vector<Int> betti_side;  // total Betti numbers of the ideal
    bool equal = false;
};

EagonReinerCheck eagon_reiner_poly_check(const IntVector& h, const BettiTable& table);

/// Ranks of reduced simplicial homology over Q, returned as a vector with
/// offset -1 (entries for dimensions -1 .. dim).  Computed from boundary
/// matrix ranks with exact rational arithmetic.  The void complex has no
/// homology at all; {emptyset} has rank 1 in dimension -1.  Guarded to
/// complexes on at most 16 vertices.
IntVector reduced_homology_ranks(const SimplicialComplex& complex);

/// Independent Betti-number oracle via Hochster's formula: for the
/// Stanley-Reisner ideal of the given complex,
///   beta_{i,j}(I) = sum over size-j vertex subsets sigma of
///                   rank H~_{j-i-2}(complex restricted to sigma; Q).
/// Exponential in the vertex count; guarded to at most 12 vertices.
BettiTable hochster_betti_oracle(const SimplicialComplex& complex);

} // namespace whisk

#endif
