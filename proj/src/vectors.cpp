#include "whisk/vectors.hpp"

#include <sstream>
#include <stdexcept>

namespace whisk {

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    // prefix products are themselves binomials, so every division is exact
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

std::string IntVector::to_string() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out << ", ";
        out << entries[i];
    }
    out << ')';
    return out.str();
}

bool sequences_equal_up_to_trailing_zeros(const IntVector& a, const IntVector& b) {
    size_t na = a.entries.size(), nb = b.entries.size();
    while (na > 0 && a.entries[na - 1] == 0) --na;
    while (nb > 0 && b.entries[nb - 1] == 0) --nb;
    if (na != nb) return false;
    for (size_t i = 0; i < na; ++i)
        if (a.entries[i] != b.entries[i]) return false;
    return true;
}

IntVector f_to_h(const IntVector& f) {
    if (f.offset != -1 || f.entries.empty() || f.entries.front() != 1)
        throw std::invalid_argument("f-vector must start at f_{-1} = 1");
    int d = f.max_index();
    std::vector<Int> h(static_cast<size_t>(d) + 2);
    for (int k = 0; k <= d + 1; ++k) {
        Int sum = 0;
        for (int i = 0; i <= k; ++i) {
            Int term = binomial(d + 1 - i, k - i) * f.at(i - 1);
            if ((k - i) % 2 == 0)
                sum += term;
            else
                sum -= term;
        }
        h[static_cast<size_t>(k)] = sum;
    }
    return IntVector{std::move(h), 0};
}

IntVector h_to_f(const IntVector& h) {
    if (h.offset != 0 || h.entries.empty())
        throw std::invalid_argument("h-vector must start at h_0");
    int d = h.max_index() - 1;
    std::vector<Int> f(static_cast<size_t>(d) + 2);
    for (int k = 0; k <= d + 1; ++k) {
        Int sum = 0;
        for (int i = 0; i <= k; ++i) sum += binomial(d + 1 - i, k - i) * h.at(i);
        f[static_cast<size_t>(k)] = sum;  // this is f_{k-1}
    }
    return IntVector{std::move(f), -1};
}

} // namespace whisk
