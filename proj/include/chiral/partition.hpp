#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chiral/bigint.hpp"

namespace chiral {

// Weakly decreasing positive parts; the empty list is the unique partition of 0.
// Value type, immutable after construction.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<long long> parts)
        : Partition(std::vector<long long>(parts)) {}

    bool empty() const { return parts_.empty(); }
    std::size_t rows() const { return parts_.size(); }
    long long size() const { return std::accumulate(parts_.begin(), parts_.end(), 0LL); }
    long long operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<long long>& parts() const { return parts_; }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<long long> parts_;
};

inline Partition conjugate(const Partition& la) {
    if (la.empty()) return {};
    std::vector<long long> cols;
    cols.reserve(static_cast<std::size_t>(la[0]));
    std::size_t i = la.rows();
    for (long long j = 0; j < la[0]; ++j) {
        while (i > 0 && la[i - 1] <= j) --i;  // rows with part > j form a prefix
        cols.push_back(static_cast<long long>(i));
    }
    return Partition(std::move(cols));
}

// C(lambda) = sum over cells (i,j) of the content j - i.
inline long long content_sum(const Partition& la) {
    long long c = 0;
    for (std::size_t i = 0; i < la.rows(); ++i) {
        long long p = la[i];
        c += p * (p - 1) / 2 - static_cast<long long>(i) * p;
    }
    return c;
}

// All hook lengths of the diagram, row by row.
inline std::vector<long long> hook_lengths(const Partition& la) {
    std::vector<long long> hooks;
    hooks.reserve(static_cast<std::size_t>(la.size()));
    const Partition conj = conjugate(la);
    for (std::size_t i = 0; i < la.rows(); ++i)
        for (long long j = 0; j < la[i]; ++j)
            hooks.push_back(la[i] - j + conj[static_cast<std::size_t>(j)] -
                            static_cast<long long>(i) - 1);
    return hooks;
}

// Number of standard Young tableaux of shape lambda, by the hook length
// formula.  Computed cancellation-free through prime valuations:
// v_p(f) = v_p(n!) - sum of v_p over hook lengths.
inline BigInt dimension(const Partition& la) {
    const long long n = la.size();
    if (n == 0) return 1;

    std::vector<long long> spf(static_cast<std::size_t>(n) + 1, 0);
    for (long long i = 2; i <= n; ++i)
        if (spf[static_cast<std::size_t>(i)] == 0)
            for (long long j = i; j <= n; j += i)
                if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = i;

    std::vector<long long> exponent(static_cast<std::size_t>(n) + 1, 0);
    for (long long p = 2; p <= n; ++p) {
        if (spf[static_cast<std::size_t>(p)] != p) continue;
        long long e = 0;
        for (long long q = p; q <= n;) {  // Legendre
            e += n / q;
            if (q > n / p) break;
            q *= p;
        }
        exponent[static_cast<std::size_t>(p)] = e;
    }
    for (long long h : hook_lengths(la))
        while (h > 1) {
            exponent[static_cast<std::size_t>(spf[static_cast<std::size_t>(h)])] -= 1;
            h /= spf[static_cast<std::size_t>(h)];
        }

    BigInt f = 1;
    for (long long p = 2; p <= n; ++p) {
        const long long e = exponent[static_cast<std::size_t>(p)];
        if (e < 0) throw std::logic_error("dimension: hook product does not divide n!");
        if (e > 0) f *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
    }
    return f;
}

// Arm and leg lengths along the main diagonal.
struct FrobeniusCoords {
    std::vector<long long> arms;
    std::vector<long long> legs;

    friend bool operator==(const FrobeniusCoords&, const FrobeniusCoords&) = default;
};

inline FrobeniusCoords frobenius(const Partition& la) {
    if (la.empty())
        throw std::invalid_argument("frobenius: the empty partition has no diagonal");
    const Partition conj = conjugate(la);
    FrobeniusCoords fc;
    for (std::size_t i = 0; i < la.rows() && la[i] > static_cast<long long>(i); ++i) {
        fc.arms.push_back(la[i] - static_cast<long long>(i) - 1);
        fc.legs.push_back(conj[i] - static_cast<long long>(i) - 1);
    }
    return fc;
}

inline Partition from_frobenius(const FrobeniusCoords& fc) {
    const std::size_t d = fc.arms.size();
    if (d == 0 || fc.legs.size() != d)
        throw std::invalid_argument("from_frobenius: arm and leg lists must be non-empty and equal length");
    for (std::size_t i = 0; i < d; ++i) {
        if (fc.arms[i] < 0 || fc.legs[i] < 0)
            throw std::invalid_argument("from_frobenius: coordinates must be non-negative");
        if (i > 0 && (fc.arms[i - 1] <= fc.arms[i] || fc.legs[i - 1] <= fc.legs[i]))
            throw std::invalid_argument("from_frobenius: coordinates must be strictly decreasing");
    }

    std::vector<long long> parts;
    for (std::size_t i = 0; i < d; ++i)
        parts.push_back(fc.arms[i] + static_cast<long long>(i) + 1);
    // Below the diagonal the row lengths are the column counts given by the legs.
    const long long max_row = fc.legs[0] + 1;
    std::size_t cols = d;  // columns j with leg length legs[j] + j + 1 >= current row
    for (long long i = static_cast<long long>(d) + 1; i <= max_row; ++i) {
        while (cols > 0 && fc.legs[cols - 1] + static_cast<long long>(cols) < i) --cols;
        parts.push_back(static_cast<long long>(cols));
    }
    return Partition(std::move(parts));
}

inline std::string to_string(const Partition& la) {
    std::string s = "[";
    for (std::size_t i = 0; i < la.rows(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(la[i]);
    }
    s += ']';
    return s;
}

inline std::string to_string(const FrobeniusCoords& fc) {
    auto list = [](const std::vector<long long>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) s += ',';
            s += std::to_string(v[i]);
        }
        return s + "]";
    };
    return "(" + list(fc.arms) + "," + list(fc.legs) + ")";
}

// Literal grammar: '[' p1 ',' p2 ',' ... ']' with weakly decreasing positive
// integers; '[]' is the empty partition.  Whitespace around tokens is allowed.
inline Partition parse_partition(std::string_view s) {
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; };
    auto fail = [] { throw std::invalid_argument("parse_partition: malformed partition literal"); };

    skip_ws();
    if (pos >= s.size() || s[pos] != '[') fail();
    ++pos;
    std::vector<long long> parts;
    skip_ws();
    if (pos < s.size() && s[pos] == ']') {
        ++pos;
    } else {
        for (;;) {
            skip_ws();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start || pos - start > 18) fail();
            parts.push_back(std::stoll(std::string(s.substr(start, pos - start))));
            skip_ws();
            if (pos >= s.size()) fail();
            if (s[pos] == ']') { ++pos; break; }
            if (s[pos] != ',') fail();
            ++pos;
        }
    }
    skip_ws();
    if (pos != s.size()) fail();
    return Partition(std::move(parts));
}

}  // namespace chiral
