#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace chiral {

// Number of ones in the binary expansion of m.
inline int nu(long long m) {
    if (m < 0) throw std::invalid_argument("nu: argument must be non-negative");
    return std::popcount(static_cast<std::uint64_t>(m));
}

// Largest v such that 2^v divides m.  Two's complement keeps trailing zeros,
// so negative arguments give the valuation of |m|.
inline int v2(long long m) {
    if (m == 0) throw std::invalid_argument("v2: argument must be non-zero");
    return std::countr_zero(static_cast<std::uint64_t>(m));
}

// binom(n, k) is odd exactly when adding k and n-k in binary has no carries.
inline bool binomial_is_odd(long long n, long long k) {
    if (k < 0 || k > n) return false;
    return (k & (n - k)) == 0;
}

// n = epsilon + 2^{k_1} + ... + 2^{k_r} with 0 < k_1 < ... < k_r.
// n = 1 is the degenerate case with no exponents.
struct BinaryDecomposition {
    int epsilon = 0;
    std::vector<int> exponents;

    bool degenerate() const { return exponents.empty(); }
    int k1() const { return exponents.front(); }

    long long value() const {
        long long n = epsilon;
        for (int k : exponents) n += 1LL << k;
        return n;
    }
};

inline BinaryDecomposition binary_decomposition(long long n) {
    if (n < 1) throw std::invalid_argument("binary_decomposition: argument must be positive");
    BinaryDecomposition d;
    d.epsilon = static_cast<int>(n & 1);
    for (int k = 1; k < 63; ++k)
        if ((n >> k) & 1) d.exponents.push_back(k);
    return d;
}

// Set of positions of the ones in a binary expansion.
struct BinSet {
    std::uint64_t mask = 0;

    long long value() const { return static_cast<long long>(mask); }
    int cardinality() const { return std::popcount(mask); }
    bool disjoint_from(BinSet other) const { return (mask & other.mask) == 0; }
    bool subset_of(BinSet other) const { return (mask & ~other.mask) == 0; }

    std::vector<int> positions() const {
        std::vector<int> out;
        for (int i = 0; i < 64; ++i)
            if ((mask >> i) & 1) out.push_back(i);
        return out;
    }
};

inline BinSet bin_set(long long m) {
    if (m < 0) throw std::invalid_argument("bin_set: argument must be non-negative");
    return BinSet{static_cast<std::uint64_t>(m)};
}

}  // namespace chiral
