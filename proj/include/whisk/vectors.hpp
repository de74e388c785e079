#ifndef WHISK_VECTORS_HPP
#define WHISK_VECTORS_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace whisk {

/// Exact arbitrary-precision integer used for all counting throughout the
/// library.  No floating point appears anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; zero for k < 0 or k > n.
Int binomial(long n, long k);

/// A vector of exact integers with an explicit starting index.  f-vectors
/// start at -1 (the empty face), h-vectors at 0.
struct IntVector {
    std::vector<Int> entries;
    int offset = 0;

    IntVector() = default;
    IntVector(std::vector<Int> e, int off) : entries(std::move(e)), offset(off) {}

    /// Entry at logical index i; zero outside the stored range.
    Int at(int i) const {
        int k = i - offset;
        if (k < 0 || k >= static_cast<int>(entries.size())) return 0;
        return entries[static_cast<size_t>(k)];
    }

    int size() const { return static_cast<int>(entries.size()); }
    int max_index() const { return offset + size() - 1; }

    bool operator==(const IntVector&) const = default;

    /// "(1, 4, 5, 1)"
    std::string to_string() const;
};

/// Compare the entry sequences (ignoring offsets) after stripping trailing
/// zeros from both.  This is the vector-equality convention used for the
/// identity h(whisker) = f(source).
bool sequences_equal_up_to_trailing_zeros(const IntVector& a, const IntVector& b);

/// h_k = sum_{i=0}^{k} (-1)^{k-i} C(d+1-i, k-i) f_{i-1} for a d-dimensional
/// complex; result has offset 0 and length d+2.
IntVector f_to_h(const IntVector& f);

/// Inverse transform: f_{k-1} = sum_{i=0}^{k} C(d+1-i, k-i) h_i.
IntVector h_to_f(const IntVector& h);

} // namespace whisk

#endif
