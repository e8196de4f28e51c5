#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "chiral/partition.hpp"

namespace chiral {

// Beta-set (abacus) engine for p-cores and p-quotients.  The bead count is
// normalized to a multiple of p, which pins the quotient component indexing:
// component k collects the beads on runner k.  Adding p beads shifts every
// runner's values by one and leaves both core and quotient unchanged, so the
// normalization is well defined.

namespace detail {

inline std::vector<long long> beta_set(const Partition& la, long long length) {
    std::vector<long long> beta(static_cast<std::size_t>(length));
    for (long long i = 0; i < length; ++i) {
        const long long part = i < static_cast<long long>(la.rows()) ? la[static_cast<std::size_t>(i)] : 0;
        beta[static_cast<std::size_t>(i)] = part + (length - 1 - i);
    }
    return beta;
}

inline Partition partition_from_beta(std::vector<long long> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const long long length = static_cast<long long>(beta.size());
    std::vector<long long> parts;
    for (long long i = 0; i < length; ++i) {
        const long long part = beta[static_cast<std::size_t>(i)] - (length - 1 - i);
        if (part > 0)
            parts.push_back(part);
        else if (part < 0)
            throw std::invalid_argument("partition_from_beta: repeated beta value");
    }
    return Partition(std::move(parts));
}

inline long long normalized_length(const Partition& la, long long p) {
    const long long rows = std::max<long long>(static_cast<long long>(la.rows()), 1);
    return (rows + p - 1) / p * p;
}

}  // namespace detail

inline std::vector<Partition> p_quotient(const Partition& la, long long p) {
    if (p < 2) throw std::invalid_argument("p_quotient: p must be at least 2");
    const long long length = detail::normalized_length(la, p);
    std::vector<std::vector<long long>> runner(static_cast<std::size_t>(p));
    for (long long b : detail::beta_set(la, length))
        runner[static_cast<std::size_t>(b % p)].push_back(b / p);
    std::vector<Partition> quo;
    quo.reserve(static_cast<std::size_t>(p));
    for (auto& r : runner) quo.push_back(detail::partition_from_beta(std::move(r)));
    return quo;
}

inline Partition p_core(const Partition& la, long long p) {
    if (p < 2) throw std::invalid_argument("p_core: p must be at least 2");
    const long long length = detail::normalized_length(la, p);
    std::vector<long long> count(static_cast<std::size_t>(p), 0);
    for (long long b : detail::beta_set(la, length)) ++count[static_cast<std::size_t>(b % p)];
    // push every bead down its runner
    std::vector<long long> beta;
    beta.reserve(static_cast<std::size_t>(length));
    for (long long r = 0; r < p; ++r)
        for (long long j = 0; j < count[static_cast<std::size_t>(r)]; ++j)
            beta.push_back(p * j + r);
    return detail::partition_from_beta(std::move(beta));
}

inline bool is_p_core(const Partition& la, long long p) { return p_core(la, p) == la; }

// Exact inverse of (p_core, p_quotient).
inline Partition from_core_and_quotient(const Partition& core,
                                        const std::vector<Partition>& quotient,
                                        long long p) {
    if (p < 2) throw std::invalid_argument("from_core_and_quotient: p must be at least 2");
    if (static_cast<long long>(quotient.size()) != p)
        throw std::invalid_argument("from_core_and_quotient: quotient must have exactly p components");
    if (!is_p_core(core, p))
        throw std::invalid_argument("from_core_and_quotient: core argument is not a p-core");

    long long need = 0;
    for (const Partition& q : quotient)
        need = std::max(need, static_cast<long long>(q.rows()));

    long long length = detail::normalized_length(core, p);
    std::vector<long long> count(static_cast<std::size_t>(p), 0);
    auto recount = [&] {
        std::fill(count.begin(), count.end(), 0);
        for (long long b : detail::beta_set(core, length)) ++count[static_cast<std::size_t>(b % p)];
    };
    recount();
    const long long low = *std::min_element(count.begin(), count.end());
    if (low < need) {
        length += p * (need - low);
        recount();
    }

    std::vector<long long> beta;
    beta.reserve(static_cast<std::size_t>(length));
    for (long long r = 0; r < p; ++r) {
        const Partition& q = quotient[static_cast<std::size_t>(r)];
        const long long c = count[static_cast<std::size_t>(r)];
        for (long long j = 0; j < c; ++j) {
            const long long part = j < static_cast<long long>(q.rows()) ? q[static_cast<std::size_t>(j)] : 0;
            beta.push_back(p * (part + (c - 1 - j)) + r);
        }
    }
    return detail::partition_from_beta(std::move(beta));
}

}  // namespace chiral
