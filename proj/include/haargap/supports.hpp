#ifndef HAARGAP_SUPPORTS_HPP
#define HAARGAP_SUPPORTS_HPP

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"
#include "root_system.hpp"

namespace haargap {

using RootMask = boost::dynamic_bitset<>;

enum class SupportKind { empty, pair, block_partition, full, other };

inline std::string to_string(SupportKind k)
{
    switch (k) {
    case SupportKind::empty: return "empty";
    case SupportKind::pair: return "pair";
    case SupportKind::block_partition: return "block-partition";
    case SupportKind::full: return "full";
    case SupportKind::other: return "other";
    }
    return "other";
}

/// A set R of roots carrying the entropy of one family of ergodic
/// components. Bit a of the mask is root index a of the owning RootSystem.
struct SupportSet {
    RootMask mask;
    std::string label;
    SupportKind kind = SupportKind::other;

    bool contains(std::size_t a) const { return mask.test(a); }
    bool is_full() const { return mask.all(); }
    friend bool operator==(const SupportSet& a, const SupportSet& b) { return a.mask == b.mask; }
};

/// Numeric order with root 0 as the least significant bit.
inline bool mask_less(const RootMask& a, const RootMask& b)
{
    for (std::size_t k = a.size(); k-- > 0;)
        if (a.test(k) != b.test(k))
            return b.test(k);
    return false;
}

inline bool is_symmetric(const RootSystem& rs, const RootMask& mask)
{
    for (std::size_t a = 0; a < rs.size(); ++a)
        if (mask.test(a) != mask.test(rs.negation(a)))
            return false;
    return true;
}

inline bool is_closed(const RootSystem& rs, const RootMask& mask)
{
    for (std::size_t a = mask.find_first(); a != RootMask::npos; a = mask.find_next(a))
        for (std::size_t b = mask.find_first(); b != RootMask::npos; b = mask.find_next(b))
            if (const auto s = rs.sum(a, b); s && !mask.test(*s))
                return false;
    return true;
}

inline bool is_admissible(const RootSystem& rs, const SupportSet& r)
{
    if (r.mask.size() != rs.size())
        throw InvalidArgument("support mask has " + std::to_string(r.mask.size()) + " bits, root system has " +
                              std::to_string(rs.size()) + " roots");
    return is_symmetric(rs, r.mask) && is_closed(rs, r.mask);
}

/// Smallest addition-closed superset: adds forced sums until nothing changes.
inline RootMask closure(const RootSystem& rs, RootMask mask)
{
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t a = mask.find_first(); a != RootMask::npos; a = mask.find_next(a))
            for (std::size_t b = mask.find_first(); b != RootMask::npos; b = mask.find_next(b))
                if (const auto s = rs.sum(a, b); s && !mask.test(*s)) {
                    mask.set(*s);
                    grew = true;
                }
    }
    return mask;
}

namespace detail {

/// Blocks of the index graph {i ~ j iff e_i - e_j in R}, each sorted, ordered by least element.
inline std::vector<std::vector<int>> index_blocks(const RootSystem& rs, const RootMask& mask)
{
    const int n = static_cast<int>(rs.n());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    for (std::size_t a = mask.find_first(); a != RootMask::npos; a = mask.find_next(a)) {
        const int u = find(rs.root(a).i - 1), v = find(rs.root(a).j - 1);
        if (u != v)
            parent[static_cast<std::size_t>(std::max(u, v))] = std::min(u, v);
    }
    std::vector<std::vector<int>> blocks;
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const int r = find(v);
        if (slot[static_cast<std::size_t>(r)] < 0) {
            slot[static_cast<std::size_t>(r)] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(v + 1);
    }
    return blocks;
}

inline std::string blocks_label(const std::vector<std::vector<int>>& blocks)
{
    std::string s = "blocks ";
    for (const auto& b : blocks) {
        s += "{";
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (k)
                s += ",";
            s += std::to_string(b[k]);
        }
        s += "}";
    }
    return s;
}

inline RootMask mask_from_blocks(const RootSystem& rs, const std::vector<std::vector<int>>& blocks)
{
    RootMask mask(rs.size());
    for (const auto& b : blocks)
        for (int i : b)
            for (int j : b)
                if (i != j)
                    mask.set(rs.index_of(i, j));
    return mask;
}

} // namespace detail

/// Attaches the canonical label and kind to a mask.
inline SupportSet describe_support(const RootSystem& rs, RootMask mask)
{
    if (mask.size() != rs.size())
        throw InvalidArgument("support mask size does not match root system");
    SupportSet out{std::move(mask), {}, SupportKind::other};
    if (out.mask.none()) {
        out.label = "∅";
        out.kind = SupportKind::empty;
        return out;
    }
    if (out.mask.all()) {
        out.label = "Δ";
        out.kind = SupportKind::full;
        return out;
    }
    if (out.mask.count() == 2) {
        const auto a = out.mask.find_first();
        const auto b = out.mask.find_next(a);
        if (rs.negation(a) == b) {
            const auto& r = rs.root(rs.root(a).positive() ? a : b);
            out.label = "±" + r.label();
            out.kind = SupportKind::pair;
            return out;
        }
    }
    const auto blocks = detail::index_blocks(rs, out.mask);
    if (detail::mask_from_blocks(rs, blocks) == out.mask) {
        out.label = detail::blocks_label(blocks);
        out.kind = SupportKind::block_partition;
        return out;
    }
    std::string s = "{";
    bool first = true;
    for (std::size_t a = out.mask.find_first(); a != RootMask::npos; a = out.mask.find_next(a)) {
        s += (first ? "" : ",") + rs.root(a).label();
        first = false;
    }
    out.label = s + "}";
    return out;
}

/// Largest number of positive roots for which the generic enumeration runs.
inline constexpr std::size_t kMaxGenericPositiveRoots = 15;

/// Every symmetric, addition-closed subset of the roots, ordered by size then mask.
/// Candidates are the 2^|positive roots| symmetric masks, filtered directly.
inline std::vector<SupportSet> enumerate_symmetric_closed(const RootSystem& rs)
{
    const auto pos = rs.positive_roots();
    if (pos.size() > kMaxGenericPositiveRoots)
        throw CapacityError("generic support enumeration is limited to " +
                            std::to_string(kMaxGenericPositiveRoots) + " positive roots (A_5); got " +
                            std::to_string(pos.size()));
    std::vector<RootMask> found;
    const std::uint64_t count = std::uint64_t{1} << pos.size();
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        RootMask mask(rs.size());
        for (std::size_t k = 0; k < pos.size(); ++k)
            if (bits >> k & 1U) {
                mask.set(pos[k]);
                mask.set(rs.negation(pos[k]));
            }
        if (is_closed(rs, mask))
            found.push_back(std::move(mask));
    }
    std::sort(found.begin(), found.end(), [](const RootMask& a, const RootMask& b) {
        if (a.count() != b.count())
            return a.count() < b.count();
        return mask_less(a, b);
    });
    std::vector<SupportSet> out;
    out.reserve(found.size());
    for (auto& m : found)
        out.push_back(describe_support(rs, std::move(m)));
    return out;
}

/// Default ceiling on n for the block-partition enumeration.
inline constexpr int kDefaultMaxInnerN = 12;

/// Supports of closed orbits of GL_k^l ∩ SL_n: for every divisor k of n, every
/// partition of {1..n} into n/k blocks of size k. Ordered by k, then lexicographically.
inline std::vector<SupportSet> enumerate_block_partitions(int n, int max_n = kDefaultMaxInnerN)
{
    if (n < 2)
        throw InvalidArgument("block partitions need n >= 2, got " + std::to_string(n));
    if (n > max_n)
        throw CapacityError("block-partition enumeration is limited to n <= " + std::to_string(max_n) +
                            "; got n=" + std::to_string(n));
    const auto rs = build_type_a(n);
    std::vector<SupportSet> out;
    for (int k = 1; k <= n; ++k) {
        if (n % k)
            continue;
        std::vector<int> block_of(static_cast<std::size_t>(n), -1);
        std::vector<std::vector<int>> blocks;
        // Each new block starts at the smallest unassigned index, then takes k-1
        // larger unassigned indices in increasing order.
        auto place = [&](auto&& self) -> void {
            int first = -1;
            for (int v = 0; v < n; ++v)
                if (block_of[static_cast<std::size_t>(v)] < 0) {
                    first = v;
                    break;
                }
            if (first < 0) {
                SupportSet set{detail::mask_from_blocks(rs, blocks), {}, SupportKind::block_partition};
                if (k == 1) {
                    set.label = "∅";
                    set.kind = SupportKind::empty;
                } else if (k == n) {
                    set.label = "Δ";
                    set.kind = SupportKind::full;
                } else {
                    set.label = detail::blocks_label(blocks);
                }
                out.push_back(std::move(set));
                return;
            }
            const int id = static_cast<int>(blocks.size());
            blocks.push_back({first + 1});
            block_of[static_cast<std::size_t>(first)] = id;
            auto extend = [&](auto&& grow, int from) -> void {
                if (static_cast<int>(blocks.back().size()) == k) {
                    self(self);
                    return;
                }
                for (int v = from; v < n; ++v) {
                    if (block_of[static_cast<std::size_t>(v)] >= 0)
                        continue;
                    block_of[static_cast<std::size_t>(v)] = id;
                    blocks.back().push_back(v + 1);
                    grow(grow, v + 1);
                    blocks.back().pop_back();
                    block_of[static_cast<std::size_t>(v)] = -1;
                }
            };
            extend(extend, first + 1);
            blocks.pop_back();
            block_of[static_cast<std::size_t>(first)] = -1;
        };
        place(place);
    }
    return out;
}

} // namespace haargap

#endif // HAARGAP_SUPPORTS_HPP
