#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chiral/abacus.hpp"
#include "chiral/binary.hpp"
#include "chiral/partition.hpp"

namespace chiral {

// Node address in the binary tree of iterated 2-quotients.  The path is read
// as a binary numeral with the first step most significant, so numeric order
// on fixed-length paths is the left-to-right lexicographic row layout.
struct BinaryPath {
    int length = 0;
    std::uint64_t bits = 0;

    int bit(int i) const { return static_cast<int>((bits >> (length - 1 - i)) & 1); }
    int first_bit() const { return bit(0); }

    BinaryPath child(int b) const {
        if (length >= 63) throw std::length_error("BinaryPath: too deep");
        return {length + 1, (bits << 1) | static_cast<std::uint64_t>(b)};
    }

    BinaryPath complemented() const {
        const std::uint64_t mask = length == 0 ? 0 : (~std::uint64_t{0} >> (64 - length));
        return {length, ~bits & mask};
    }

    bool has_prefix(const BinaryPath& p) const {
        return length >= p.length && (bits >> (length - p.length)) == p.bits;
    }

    std::string str() const {
        if (length == 0) return "e";
        std::string s(static_cast<std::size_t>(length), '0');
        for (int i = 0; i < length; ++i)
            if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    friend bool operator==(const BinaryPath&, const BinaryPath&) = default;
    friend auto operator<=>(const BinaryPath&, const BinaryPath&) = default;
};

inline Partition staircase(int m) {
    if (m < 0) throw std::invalid_argument("staircase: negative index");
    std::vector<long long> parts;
    for (int k = m; k >= 1; --k) parts.push_back(k);
    return Partition(std::move(parts));
}

// Index m when la = (m, m-1, ..., 1); -1 otherwise.  These staircases are
// exactly the 2-cores.
inline int staircase_index(const Partition& la) {
    const int m = static_cast<int>(la.rows());
    for (int i = 0; i < m; ++i)
        if (la[static_cast<std::size_t>(i)] != m - i) return -1;
    return m;
}

// Rows of 2-cores indexed by binary paths; absent path means empty partition.
// Entries store the staircase index, so a non-2-core entry cannot exist.
class CoreTower {
public:
    void set(const BinaryPath& path, int m) {
        if (m < 1) throw std::invalid_argument("CoreTower::set: staircase index must be positive");
        entries_[path] = m;
    }

    int staircase_index_at(const BinaryPath& path) const {
        auto it = entries_.find(path);
        return it == entries_.end() ? 0 : it->second;
    }

    const std::map<BinaryPath, int>& entries() const& { return entries_; }
    // value return keeps range-for over a temporary tower safe
    std::map<BinaryPath, int> entries() && { return std::move(entries_); }
    bool empty() const { return entries_.empty(); }

    // Deepest occupied row + 1.
    int row_count() const {
        return entries_.empty() ? 0 : entries_.rbegin()->first.length + 1;
    }

    std::vector<BinaryPath> paths_in_row(int row) const {
        std::vector<BinaryPath> out;
        for (auto it = entries_.lower_bound(BinaryPath{row, 0});
             it != entries_.end() && it->first.length == row; ++it)
            out.push_back(it->first);
        return out;
    }

    friend bool operator==(const CoreTower&, const CoreTower&) = default;

private:
    std::map<BinaryPath, int> entries_;
};

namespace detail {

inline void tower_entries(const Partition& la, const BinaryPath& path, CoreTower& t) {
    if (la.empty()) return;
    const Partition core = p_core(la, 2);
    if (!core.empty()) {
        const int m = staircase_index(core);
        if (m < 1) throw std::logic_error("tower_of: 2-core is not a staircase");
        t.set(path, m);
    }
    const auto quo = p_quotient(la, 2);
    tower_entries(quo[0], path.child(0), t);
    tower_entries(quo[1], path.child(1), t);
}

inline Partition tower_branch(const CoreTower& t, const BinaryPath& path) {
    bool occupied = false;
    for (const auto& [q, m] : t.entries())
        if (q.has_prefix(path)) { occupied = true; break; }
    if (!occupied) return {};
    const Partition core = staircase(t.staircase_index_at(path));
    const std::vector<Partition> quo = {tower_branch(t, path.child(0)),
                                        tower_branch(t, path.child(1))};
    return from_core_and_quotient(core, quo, 2);
}

}  // namespace detail

inline CoreTower tower_of(const Partition& la) {
    CoreTower t;
    detail::tower_entries(la, BinaryPath{}, t);
    return t;
}

inline Partition partition_of(const CoreTower& t) { return detail::tower_branch(t, BinaryPath{}); }

// w_i = total size of the entries in row i.
inline std::vector<long long> row_weights(const CoreTower& t) {
    std::vector<long long> w(static_cast<std::size_t>(t.row_count()), 0);
    for (const auto& [path, m] : t.entries())
        w[static_cast<std::size_t>(path.length)] += static_cast<long long>(m) * (m + 1) / 2;
    return w;
}

inline long long total_weight(const CoreTower& t) {
    long long w = 0;
    for (const auto& [path, m] : t.entries()) w += static_cast<long long>(m) * (m + 1) / 2;
    return w;
}

// e_2(lambda) = w(lambda) - nu(|lambda|); equals v_2 of the dimension.
inline long long deviation(const Partition& la) {
    return total_weight(tower_of(la)) - nu(la.size());
}

// core(lambda, 2^i), computed by blanking tower rows i and above.
inline Partition truncated_core(const Partition& la, int i) {
    if (i < 0) throw std::invalid_argument("truncated_core: negative row index");
    CoreTower t = tower_of(la);
    CoreTower kept;
    for (const auto& [path, m] : t.entries())
        if (path.length < i) kept.set(path, m);
    return partition_of(kept);
}

// One line per occupied row: "row2: 01:1"; "e" denotes the empty path.
inline std::string render_tower(const CoreTower& t) {
    std::string out;
    for (int row = 0; row < t.row_count(); ++row) {
        const auto paths = t.paths_in_row(row);
        if (paths.empty()) continue;
        out += "row" + std::to_string(row) + ":";
        for (const auto& p : paths)
            out += " " + p.str() + ":" + std::to_string(t.staircase_index_at(p));
        out += '\n';
    }
    return out;
}

}  // namespace chiral
