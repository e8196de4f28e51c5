#pragma once

#include <functional>
#include <vector>

#include "chiral/partition.hpp"

namespace chiral::testing {

// Visits every partition of n in descending-lexicographic order.
inline void for_each_partition(long long n, const std::function<void(const Partition&)>& visit) {
    std::vector<long long> parts;
    std::function<void(long long, long long)> rec = [&](long long rem, long long cap) {
        if (rem == 0) {
            visit(Partition(parts));
            return;
        }
        for (long long next = std::min(rem, cap); next >= 1; --next) {
            parts.push_back(next);
            rec(rem - next, next);
            parts.pop_back();
        }
    };
    rec(n, n);
}

inline std::vector<Partition> all_partitions(long long n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& la) { out.push_back(la); });
    return out;
}

}  // namespace chiral::testing
