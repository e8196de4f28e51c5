#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include "chiral/bigint.hpp"
#include "chiral/binary.hpp"
#include "chiral/core_tower.hpp"
#include "chiral/partition.hpp"

namespace chiral {

// ---------------------------------------------------------------------------
// Direct predicate.  g = f * (binom(n,2) - C) / (2 binom(n,2)) is odd exactly
// when v2(f) + v2(binom(n,2) - C) - 1 - v2(binom(n,2)) vanishes, so chirality
// needs only 2-adic valuations, never the full dimension.
// ---------------------------------------------------------------------------

inline bool is_chiral(const Partition& la) {
    const long long n = la.size();
    if (n < 2) return false;
    const long long choose2 = n * (n - 1) / 2;
    const long long diff = choose2 - content_sum(la);
    if (diff == 0) return false;  // g = 0
    return deviation(la) + v2(diff) - 1 - v2(choose2) == 0;
}

// Number of standard tableaux with 2 in the first column, as an exact integer.
// Slow path for tests and small n; the division is always exact.
inline BigInt g_exact(const Partition& la) {
    const long long n = la.size();
    if (n < 2) throw std::invalid_argument("g_exact: partition must have size >= 2");
    const BigInt num = dimension(la) * (BigInt(n) * (n - 1) / 2 - content_sum(la));
    const BigInt den = BigInt(n) * (n - 1);
    if (num % den != 0) throw std::logic_error("g_exact: inexact division");
    return num / den;
}

// ---------------------------------------------------------------------------
// Tower characterization.  With n = epsilon + 2^{k_1} + ... + 2^{k_r}, a
// partition of n is chiral exactly when its 2-core tower matches one of:
//   case 1: single (1) in each of rows k_1..k_r, the row-k_1 entry on a path
//           starting with epsilon; root is (1) iff epsilon = 1.  v2(f) = 0.
//   case 2: two (1)s in row k_1-v on paths starting 0 and 1, single (1)s in
//           rows k_1-v+1..k_1-1 and k_2..k_r, root as above.  v2(f) = v.
//   case 3: epsilon = 1, root (2,1), single (1)s in rows 1..k_1-1 and
//           k_2..k_r.  v2(f) = k_1.
// ---------------------------------------------------------------------------

struct TowerClass {
    int case_id = 0;
    long long valuation = 0;

    friend bool operator==(const TowerClass&, const TowerClass&) = default;
};

inline std::optional<TowerClass> classify_chiral_tower(const Partition& la) {
    const long long n = la.size();
    if (n < 2) return std::nullopt;
    const auto d = binary_decomposition(n);
    const int k1 = d.k1();
    const CoreTower t = tower_of(la);
    const auto w = row_weights(t);

    auto weight = [&](int i) -> long long {
        return 0 <= i && i < static_cast<int>(w.size()) ? w[static_cast<std::size_t>(i)] : 0;
    };
    auto in_high = [&](int i) {
        for (std::size_t j = 1; j < d.exponents.size(); ++j)
            if (d.exponents[j] == i) return true;
        return false;
    };
    const int row_bound = std::max(static_cast<int>(w.size()), d.exponents.back() + 1);
    auto matches = [&](auto&& expected) {
        for (int i = 0; i < row_bound; ++i)
            if (weight(i) != expected(i)) return false;
        return true;
    };

    // case 1
    if (matches([&](int i) -> long long {
            if (i == 0) return d.epsilon;
            return (i == k1 || in_high(i)) ? 1 : 0;
        })) {
        const auto paths = t.paths_in_row(k1);
        if (paths.size() == 1 && paths[0].first_bit() == d.epsilon) return TowerClass{1, 0};
        return std::nullopt;
    }

    // case 2
    for (int v = 1; v < k1; ++v) {
        if (!matches([&](int i) -> long long {
                if (i == 0) return d.epsilon;
                if (i == k1 - v) return 2;
                return ((i > k1 - v && i < k1) || in_high(i)) ? 1 : 0;
            }))
            continue;
        const auto paths = t.paths_in_row(k1 - v);
        if (paths.size() == 2 && paths[0].first_bit() == 0 && paths[1].first_bit() == 1)
            return TowerClass{2, v};
        return std::nullopt;
    }

    // case 3
    if (d.epsilon == 1 && matches([&](int i) -> long long {
            if (i == 0) return 3;
            return ((i >= 1 && i < k1) || in_high(i)) ? 1 : 0;
        }))
        return TowerClass{3, k1};

    return std::nullopt;
}

inline bool is_chiral_by_tower(const Partition& la) {
    return classify_chiral_tower(la).has_value();
}

// ---------------------------------------------------------------------------
// Closed-form counts.
// ---------------------------------------------------------------------------

// b(n) = 2^{k_2+...+k_r} ( 2^{k_1-1}
//        + sum_{v=1}^{k_1-1} 2^{(v+1)(k_1-2) - binom(v,2)}
//        + epsilon 2^{binom(k_1,2)} ),  with b(1) = 0.
inline BigInt count_chiral(long long n) {
    if (n < 1) throw std::invalid_argument("count_chiral: n must be positive");
    if (n < 2) return 0;
    const auto d = binary_decomposition(n);
    const long long k1 = d.k1();
    long long high = 0;
    for (std::size_t j = 1; j < d.exponents.size(); ++j) high += d.exponents[j];
    BigInt inner = pow2(k1 - 1);
    for (long long v = 1; v < k1; ++v)
        inner += pow2((v + 1) * (k1 - 2) - v * (v - 1) / 2);
    if (d.epsilon) inner += pow2(k1 * (k1 - 1) / 2);
    return pow2(high) * inner;
}

inline BigInt count_chiral_by_valuation(long long n, long long v) {
    if (n < 1) throw std::invalid_argument("count_chiral_by_valuation: n must be positive");
    if (n < 2 || v < 0) return 0;
    const auto d = binary_decomposition(n);
    const long long k1 = d.k1();
    if (v > k1) return 0;
    long long high = 0;
    for (std::size_t j = 1; j < d.exponents.size(); ++j) high += d.exponents[j];
    if (v == 0) return pow2(high) * pow2(k1 - 1);
    if (v < k1) return pow2(high) * pow2((v + 1) * (k1 - 2) - v * (v - 1) / 2);
    return d.epsilon ? pow2(high) * pow2(k1 * (k1 - 1) / 2) : BigInt(0);
}

// a(n) = 2^{k_1+...+k_r}: partitions with odd dimension.
inline BigInt count_odd(long long n) {
    if (n < 1) throw std::invalid_argument("count_odd: n must be positive");
    const auto d = binary_decomposition(n);
    long long e = 0;
    for (int k : d.exponents) e += k;
    return pow2(e);
}

// One self-conjugate chiral partition of 3; 2^{k-2} of n = 2^k + epsilon for
// k >= 2; none otherwise.
inline BigInt count_self_conjugate_chiral(long long n) {
    if (n < 1) throw std::invalid_argument("count_self_conjugate_chiral: n must be positive");
    if (n == 3) return 1;
    if (n < 4) return 0;
    const auto d = binary_decomposition(n);
    if (d.exponents.size() == 1 && d.k1() >= 2) return pow2(d.k1() - 2);
    return 0;
}

inline bool is_chiral_hook(long long a, long long b) {
    if (a < 0 || b < 0) throw std::invalid_argument("is_chiral_hook: negative coordinates");
    return b > 0 && binomial_is_odd(a + b - 1, a);
}

// The chiral hooks of size n are the h(a,b) with a+b = n-1, b > 0 and
// binom(n-2, a) odd, one per odd entry of row n-2 of Pascal's triangle,
// hence 2^{nu(n-2)} of them.
inline BigInt chiral_hook_count(long long n) {
    if (n < 1) throw std::invalid_argument("chiral_hook_count: n must be positive");
    return n >= 2 ? pow2(nu(n - 2)) : BigInt(0);
}

struct RatioReport {
    bool lower_ok = false;  // 2 b(n+2) <= 5 a(n)
    bool upper_ok = false;  // a(n) <= b(n+2)
    bool equality = false;  // a(n) == b(n+2)
};

inline RatioReport ratio_inequality_holds(long long n) {
    if (n < 1) throw std::invalid_argument("ratio_inequality_holds: n must be positive");
    const BigInt a = count_odd(n);
    const BigInt b = count_chiral(n + 2);
    return RatioReport{2 * b <= 5 * a, a <= b, a == b};
}

// ---------------------------------------------------------------------------
// Configurations.  Each chiral tower is a choice of entry positions, one free
// binary path per occupied row (two in the doubled row of case 2, where the
// leading bits are pinned).  Enumeration and sampling index these choices in
// mixed radix, so both run in time polynomial in log n per partition.
// ---------------------------------------------------------------------------

struct CaseOneConfig {
    BinaryPath hook_path;                // length k_1, first bit = epsilon
    std::vector<BinaryPath> high_paths;  // rows k_2..k_r
};

struct CaseTwoConfig {
    long long valuation = 0;              // 0 < v < k_1
    BinaryPath path0;                     // length k_1-v, first bit 0
    BinaryPath path1;                     // length k_1-v, first bit 1
    std::vector<BinaryPath> upper_paths;  // rows k_1-v+1..k_1-1
    std::vector<BinaryPath> high_paths;   // rows k_2..k_r
};

struct CaseThreeConfig {
    std::vector<BinaryPath> upper_paths;  // rows 1..k_1-1
    std::vector<BinaryPath> high_paths;   // rows k_2..k_r
};

using ChiralConfig = std::variant<CaseOneConfig, CaseTwoConfig, CaseThreeConfig>;

struct PathSlot {
    int row = 0;          // path length
    int fixed_first = -1;  // -1 free, else the pinned leading bit
};

inline BigInt slot_count(const PathSlot& s) {
    return pow2(s.row - (s.fixed_first >= 0 ? 1 : 0));
}

inline std::uint64_t slot_limit(const PathSlot& s) {
    return std::uint64_t{1} << (s.row - (s.fixed_first >= 0 ? 1 : 0));
}

inline BinaryPath slot_path(const PathSlot& s, std::uint64_t digit) {
    if (s.fixed_first >= 0)
        return BinaryPath{s.row, (static_cast<std::uint64_t>(s.fixed_first) << (s.row - 1)) | digit};
    return BinaryPath{s.row, digit};
}

struct Stratum {
    int case_id = 0;
    long long valuation = 0;
    std::size_t upper_count = 0;  // slots for the single rows below k_1
    std::vector<PathSlot> slots;
    BigInt count;
};

inline Stratum make_stratum(const BinaryDecomposition& d, int case_id, long long v) {
    Stratum st;
    st.case_id = case_id;
    st.valuation = v;
    st.count = 1;
    const int k1 = d.k1();
    if (case_id == 1) {
        st.slots.push_back(PathSlot{k1, d.epsilon});
    } else if (case_id == 2) {
        st.slots.push_back(PathSlot{k1 - static_cast<int>(v), 0});
        st.slots.push_back(PathSlot{k1 - static_cast<int>(v), 1});
        for (int i = k1 - static_cast<int>(v) + 1; i < k1; ++i) {
            st.slots.push_back(PathSlot{i, -1});
            ++st.upper_count;
        }
    } else {
        for (int i = 1; i < k1; ++i) {
            st.slots.push_back(PathSlot{i, -1});
            ++st.upper_count;
        }
    }
    for (std::size_t j = 1; j < d.exponents.size(); ++j)
        st.slots.push_back(PathSlot{d.exponents[j], -1});
    for (const auto& s : st.slots) st.count *= slot_count(s);
    return st;
}

// Canonical stratum order: case 1, case 2 with v descending, case 3.
inline std::vector<Stratum> chiral_strata(long long n,
                                          std::optional<long long> valuation = std::nullopt) {
    std::vector<Stratum> out;
    if (n < 2) return out;
    const auto d = binary_decomposition(n);
    const int k1 = d.k1();
    auto want = [&](long long v) { return !valuation.has_value() || *valuation == v; };
    if (want(0)) out.push_back(make_stratum(d, 1, 0));
    for (int v = k1 - 1; v >= 1; --v)
        if (want(v)) out.push_back(make_stratum(d, 2, v));
    if (d.epsilon == 1 && want(k1)) out.push_back(make_stratum(d, 3, k1));
    return out;
}

inline ChiralConfig config_from_digits(const Stratum& st, const std::vector<std::uint64_t>& digits) {
    std::vector<BinaryPath> paths;
    paths.reserve(st.slots.size());
    for (std::size_t i = 0; i < st.slots.size(); ++i)
        paths.push_back(slot_path(st.slots[i], digits[i]));

    if (st.case_id == 1)
        return CaseOneConfig{paths[0], std::vector<BinaryPath>(paths.begin() + 1, paths.end())};
    if (st.case_id == 2) {
        const auto upper_end = paths.begin() + 2 + static_cast<std::ptrdiff_t>(st.upper_count);
        return CaseTwoConfig{st.valuation, paths[0], paths[1],
                             std::vector<BinaryPath>(paths.begin() + 2, upper_end),
                             std::vector<BinaryPath>(upper_end, paths.end())};
    }
    const auto upper_end = paths.begin() + static_cast<std::ptrdiff_t>(st.upper_count);
    return CaseThreeConfig{std::vector<BinaryPath>(paths.begin(), upper_end),
                           std::vector<BinaryPath>(upper_end, paths.end())};
}

inline CoreTower config_tower(const ChiralConfig& cfg, int epsilon) {
    CoreTower t;
    auto add_units = [&t](const std::vector<BinaryPath>& ps) {
        for (const auto& p : ps) t.set(p, 1);
    };
    if (const auto* c1 = std::get_if<CaseOneConfig>(&cfg)) {
        if (epsilon) t.set(BinaryPath{}, 1);
        t.set(c1->hook_path, 1);
        add_units(c1->high_paths);
    } else if (const auto* c2 = std::get_if<CaseTwoConfig>(&cfg)) {
        if (epsilon) t.set(BinaryPath{}, 1);
        t.set(c2->path0, 1);
        t.set(c2->path1, 1);
        add_units(c2->upper_paths);
        add_units(c2->high_paths);
    } else {
        const auto& c3 = std::get<CaseThreeConfig>(cfg);
        t.set(BinaryPath{}, 2);
        add_units(c3.upper_paths);
        add_units(c3.high_paths);
    }
    return t;
}

inline Partition config_partition(const ChiralConfig& cfg, int epsilon) {
    return partition_of(config_tower(cfg, epsilon));
}

inline ChiralConfig unrank_in_stratum(const Stratum& st, BigInt index) {
    std::vector<std::uint64_t> digits(st.slots.size(), 0);
    for (std::size_t i = st.slots.size(); i-- > 0;) {
        const std::uint64_t limit = slot_limit(st.slots[i]);
        digits[i] = static_cast<std::uint64_t>(index % limit);
        index /= limit;
    }
    if (index != 0) throw std::out_of_range("unrank_in_stratum: index exceeds stratum size");
    return config_from_digits(st, digits);
}

// index runs over the canonical enumeration order.
inline Partition unrank_chiral(long long n, std::optional<long long> valuation, BigInt index) {
    for (const auto& st : chiral_strata(n, valuation)) {
        if (index < st.count)
            return config_partition(unrank_in_stratum(st, index), static_cast<int>(n & 1));
        index -= st.count;
    }
    throw std::out_of_range("unrank_chiral: index out of range");
}

// Streams the chiral partitions of n (optionally of fixed v2(f)) in the
// canonical order: case, then v descending, then path tuples lexicographic.
class ChiralEnumerator {
public:
    explicit ChiralEnumerator(long long n, std::optional<long long> valuation = std::nullopt)
        : epsilon_(static_cast<int>(n & 1)), strata_(chiral_strata(n, valuation)) {
        for (const auto& st : strata_) total_ += st.count;
        if (!done()) digits_.assign(strata_[index_].slots.size(), 0);
    }

    bool done() const { return index_ >= strata_.size(); }
    const BigInt& total() const { return total_; }

    Partition next() {
        if (done()) throw std::out_of_range("ChiralEnumerator: exhausted");
        Partition out = config_partition(config_from_digits(strata_[index_], digits_), epsilon_);
        advance();
        return out;
    }

private:
    void advance() {
        const auto& st = strata_[index_];
        std::size_t i = digits_.size();
        while (i-- > 0) {
            if (++digits_[i] < slot_limit(st.slots[i])) return;
            digits_[i] = 0;
        }
        ++index_;
        if (!done()) digits_.assign(strata_[index_].slots.size(), 0);
    }

    int epsilon_ = 0;
    std::vector<Stratum> strata_;
    std::size_t index_ = 0;
    std::vector<std::uint64_t> digits_;
    BigInt total_ = 0;
};

inline std::vector<Partition> enumerate_chiral(long long n,
                                               std::optional<long long> valuation = std::nullopt) {
    std::vector<Partition> out;
    ChiralEnumerator e(n, valuation);
    while (!e.done()) out.push_back(e.next());
    return out;
}

// ---------------------------------------------------------------------------
// Sampling: draw a uniform index below the exact count and unrank it.
// Rejection against the partition lattice would be hopeless at these
// densities.  The generator is injected; nothing reads ambient randomness.
// ---------------------------------------------------------------------------

template <std::uniform_random_bit_generator URBG>
BigInt uniform_bigint_below(const BigInt& bound, URBG& rng) {
    static_assert(URBG::min() == 0 && URBG::max() == ~std::uint64_t{0},
                  "uniform_bigint_below needs a full-width 64-bit generator");
    if (bound <= 0) throw std::invalid_argument("uniform_bigint_below: bound must be positive");
    if (bound == 1) return 0;
    const unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
    const unsigned words = (bits + 63) / 64;
    for (;;) {
        BigInt x = 0;
        for (unsigned i = 0; i < words; ++i) {
            x <<= 64;
            x |= BigInt(static_cast<std::uint64_t>(rng()));
        }
        x >>= words * 64 - bits;
        if (x < bound) return x;
    }
}

template <std::uniform_random_bit_generator URBG>
Partition sample_chiral(long long n, std::optional<long long> valuation, URBG& rng) {
    const auto strata = chiral_strata(n, valuation);
    BigInt total = 0;
    for (const auto& st : strata) total += st.count;
    if (total == 0)
        throw std::domain_error("sample_chiral: no chiral partitions in the requested stratum");
    BigInt index = uniform_bigint_below(total, rng);
    for (const auto& st : strata) {
        if (index < st.count)
            return config_partition(unrank_in_stratum(st, index), static_cast<int>(n & 1));
        index -= st.count;
    }
    throw std::logic_error("sample_chiral: unreachable");
}

inline Partition sample_chiral(long long n, std::optional<long long> valuation, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_chiral(n, valuation, rng);
}

// ---------------------------------------------------------------------------
// Self-conjugate chiral partitions: case 2 with v = 1 and mirror-symmetric
// paths, so the two entries sit at complementary addresses; plus (2,1) at
// n = 3.
// ---------------------------------------------------------------------------

inline Partition self_conjugate_chiral_at(long long n, const BigInt& index) {
    if (index < 0 || index >= count_self_conjugate_chiral(n))
        throw std::out_of_range("self_conjugate_chiral_at: index out of range");
    if (n == 3) return Partition{2, 1};
    const auto d = binary_decomposition(n);
    const int k1 = d.k1();
    const BinaryPath x{k1 - 1, index.convert_to<std::uint64_t>()};  // first bit 0
    CoreTower t;
    if (d.epsilon) t.set(BinaryPath{}, 1);
    t.set(x, 1);
    t.set(x.complemented(), 1);
    return partition_of(t);
}

inline std::vector<Partition> enumerate_self_conjugate_chiral(long long n) {
    std::vector<Partition> out;
    const BigInt total = count_self_conjugate_chiral(n);
    for (BigInt i = 0; i < total; ++i) out.push_back(self_conjugate_chiral_at(n, i));
    return out;
}

// ---------------------------------------------------------------------------

// Exact counts bundled for structured output.
struct CountReport {
    long long n = 0;
    std::optional<BigInt> b;
    std::map<long long, BigInt> b_by_valuation;
    std::optional<BigInt> a;
    std::optional<BigInt> self_conjugate;
    std::optional<BigInt> hooks;
    std::optional<BigInt> perm;
    std::optional<BigInt> partition_function;
};

}  // namespace chiral
