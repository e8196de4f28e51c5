#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "chiral/bigint.hpp"
#include "chiral/binary.hpp"
#include "chiral/partition.hpp"

namespace chiral {

// Chirality of the permutation representation on set-partitions of shape
// lambda.  The transposition (1,2) has an orbit of size 2 for each element
// separating 1 and 2, so the determinant is controlled by the parity of a sum
// of multinomial coefficients, which neatness resolves bit by bit.

// A partition is neat when the binary expansions of its parts are pairwise
// disjoint (equivalently their union is the expansion of n, equivalently the
// multinomial coefficient binom(n; parts) is odd).
inline bool is_neat(const Partition& la) {
    long long s = 0;
    for (long long p : la) s += nu(p);
    return s == nu(la.size());
}

inline bool multinomial_is_odd(const Partition& la) { return is_neat(la); }

inline bool perm_is_chiral(const Partition& la) {
    const long long n = la.size();
    std::vector<long long> odd, even;
    for (long long p : la) (p % 2 ? odd : even).push_back(p);

    if (odd.size() == 1) {
        // one odd part a: need binom(n-2, a-1) odd and the rest neat
        if (n < 3) return false;
        if (!bin_set(odd[0]).subset_of(bin_set(n - 2))) return false;
        return is_neat(Partition(std::move(even)));
    }
    if (odd.size() == 2 || odd.size() == 3) {
        // shrink each odd part by one box; the result of size n-2 or n-3
        // carries the single surviving multinomial parity
        std::vector<long long> reduced = even;
        for (long long p : odd)
            if (p > 1) reduced.push_back(p - 1);
        std::sort(reduced.begin(), reduced.end(), std::greater<>());
        return is_neat(Partition(std::move(reduced)));
    }
    return false;  // zero or four-plus odd parts
}

// Independent check: parity of
//   sum_{i<j} binom(n-2; parts with the i-th and j-th each reduced by one),
// each term's parity read off from popcounts.
inline bool perm_is_chiral_oracle(const Partition& la) {
    if (la.rows() < 2) return false;
    const auto& ps = la.parts();
    const long long n = la.size();
    const int target = nu(n - 2);
    int parity = 0;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            long long s = 0;
            for (std::size_t t = 0; t < ps.size(); ++t)
                s += nu(ps[t] - (t == i ? 1 : 0) - (t == j ? 1 : 0));
            parity ^= (s == target) ? 1 : 0;
        }
    return parity == 1;
}

// B_0..B_k via the Bell triangle.
inline std::vector<BigInt> bell_table(int k_max) {
    if (k_max < 0) throw std::invalid_argument("bell_table: negative bound");
    std::vector<BigInt> bell;
    bell.reserve(static_cast<std::size_t>(k_max) + 1);
    bell.push_back(1);
    std::vector<BigInt> row = {1};
    for (int k = 1; k <= k_max; ++k) {
        std::vector<BigInt> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const BigInt& x : row) next.push_back(next.back() + x);
        bell.push_back(next.front());
        row = std::move(next);
    }
    return bell;
}

inline BigInt bell(int k) { return bell_table(k).back(); }

// c(n), the number of chiral permutation representations:
//   n even:  (B_{nu(n-2)+2} - B_{nu(n-2)+1} + B_{nu(n-2)}) / 2
//   n odd:   (B_{nu(n-3)+3} - 3 B_{nu(n-3)+2} + 5 B_{nu(n-3)+1} + 2 B_{nu(n-3)}) / 6
//            + B_{nu(n)+k-2} + B_{nu(n)} - 2 B_{nu(n)-1},  k = v2(n-1).
// The three-odd-parts coefficient is -3 B_{nu(n-3)+2}; the variant with
// -3 B_{nu(n-3)+3} fails the exhaustive cross-check already at n = 5.
inline BigInt count_perm_chiral(long long n) {
    if (n < 3) throw std::invalid_argument("count_perm_chiral: n must be at least 3");
    if (n % 2 == 0) {
        const int m = nu(n - 2);
        const auto B = bell_table(m + 2);
        const BigInt num = B[static_cast<std::size_t>(m) + 2] - B[static_cast<std::size_t>(m) + 1] +
                           B[static_cast<std::size_t>(m)];
        if (num % 2 != 0) throw std::logic_error("count_perm_chiral: inexact halving");
        return num / 2;
    }
    const int m = nu(n - 3);
    const int k = v2(n - 1);
    const int top = std::max({m + 3, nu(n) + k - 2, nu(n)});
    const auto B = bell_table(top);
    auto at = [&](int i) -> const BigInt& { return B[static_cast<std::size_t>(i)]; };
    const BigInt three = at(m + 3) - 3 * at(m + 2) + 5 * at(m + 1) + 2 * at(m);
    if (three < 0 || three % 6 != 0) throw std::logic_error("count_perm_chiral: inexact sixth");
    return three / 6 + at(nu(n) + k - 2) + at(nu(n)) - 2 * at(nu(n) - 1);
}

// Permutation representations of odd dimension: the neat partitions,
// B_{nu(n)} of them.
inline BigInt count_perm_odd_dimension(long long n) {
    if (n < 1) throw std::invalid_argument("count_perm_odd_dimension: n must be positive");
    return bell(nu(n));
}

}  // namespace chiral
