#pragma once

#include <stdexcept>
#include <vector>

#include "chiral/bigint.hpp"

namespace chiral {

// p(0..n_max) by Euler's pentagonal number recurrence,
// p(n) = sum_{k>=1} (-1)^{k+1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ].
inline std::vector<BigInt> partition_count_table(long long n_max) {
    if (n_max < 0) throw std::invalid_argument("partition_count_table: negative bound");
    std::vector<BigInt> p(static_cast<std::size_t>(n_max) + 1);
    p[0] = 1;
    for (long long n = 1; n <= n_max; ++n) {
        BigInt acc = 0;
        for (long long k = 1;; ++k) {
            const long long g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            const long long g2 = k * (3 * k + 1) / 2;
            if (k & 1) {
                acc += p[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) acc += p[static_cast<std::size_t>(n - g2)];
            } else {
                acc -= p[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) acc -= p[static_cast<std::size_t>(n - g2)];
            }
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

inline BigInt partition_count(long long n) {
    if (n < 0) throw std::invalid_argument("partition_count: negative argument");
    return partition_count_table(n).back();
}

}  // namespace chiral
