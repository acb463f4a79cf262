#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgverify/partition.hpp"

namespace qgv {

/**
 * The partition families the engine enumerates:
 *   NC2            non-crossing pairings
 *   P2             all pairings (crossings allowed)
 *   NC21           non-crossing, block size <= 2
 *   NC21_S(s)      NC21 with exactly s singletons
 *   SET_PARTITIONS all set partitions
 *   EVENODD_NC     non-crossing pairings joining odd points to even points
 *   EVENODD_ALL    all pairings joining odd points to even points
 *   COLORED_NC2(m) non-crossing pairings with every block colored in {1..m}
 */
struct FamilyKind {
    enum class Tag { NC2, P2, NC21, NC21_S, SET_PARTITIONS, EVENODD_NC, EVENODD_ALL, COLORED_NC2 };

    Tag tag = Tag::NC2;
    int param = 0;  // s for NC21_S, color count for COLORED_NC2

    static FamilyKind nc2() { return {Tag::NC2, 0}; }
    static FamilyKind p2() { return {Tag::P2, 0}; }
    static FamilyKind nc21() { return {Tag::NC21, 0}; }
    static FamilyKind nc21_s(int s) { return {Tag::NC21_S, s}; }
    static FamilyKind set_partitions() { return {Tag::SET_PARTITIONS, 0}; }
    static FamilyKind evenodd_nc() { return {Tag::EVENODD_NC, 0}; }
    static FamilyKind evenodd_all() { return {Tag::EVENODD_ALL, 0}; }
    static FamilyKind colored_nc2(int m) { return {Tag::COLORED_NC2, m}; }

    std::string name() const {
        switch (tag) {
            case Tag::NC2: return "nc2";
            case Tag::P2: return "p2";
            case Tag::NC21: return "nc21";
            case Tag::NC21_S: return "nc21_s" + std::to_string(param);
            case Tag::SET_PARTITIONS: return "set";
            case Tag::EVENODD_NC: return "evenodd_nc";
            case Tag::EVENODD_ALL: return "evenodd_all";
            case Tag::COLORED_NC2: return "colored_nc2_" + std::to_string(param);
        }
        return "?";
    }

    static FamilyKind parse(const std::string& s) {
        if (s == "nc2") return nc2();
        if (s == "p2") return p2();
        if (s == "nc21") return nc21();
        if (s == "set") return set_partitions();
        if (s == "evenodd_nc") return evenodd_nc();
        if (s == "evenodd_all") return evenodd_all();
        if (s.rfind("nc21_s", 0) == 0) return nc21_s(std::stoi(s.substr(6)));
        if (s.rfind("colored_nc2_", 0) == 0) return colored_nc2(std::stoi(s.substr(12)));
        throw std::invalid_argument("unknown partition family kind: '" + s + "'");
    }

    friend bool operator==(const FamilyKind& a, const FamilyKind& b) {
        return a.tag == b.tag && a.param == b.param;
    }
};

namespace detail {

// Pairings of the given (sorted) positions.  In the non-crossing case the
// arc from the first point splits the rest into an inside and an outside
// segment that are paired independently.
inline void gen_pairings(const std::vector<int>& pts, bool noncrossing,
                         std::vector<std::vector<int>>& cur,
                         const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    if (pts.empty()) {
        emit(cur);
        return;
    }
    for (size_t j = 1; j < pts.size(); ++j) {
        if (noncrossing && (j - 1) % 2 != 0) continue;
        cur.push_back({pts[0], pts[j]});
        if (noncrossing) {
            std::vector<int> inside(pts.begin() + 1, pts.begin() + static_cast<long>(j));
            std::vector<int> outside(pts.begin() + static_cast<long>(j) + 1, pts.end());
            std::function<void(const std::vector<std::vector<int>>&)> inner =
                [&](const std::vector<std::vector<int>>&) {
                    gen_pairings(outside, noncrossing, cur, emit);
                };
            gen_pairings(inside, noncrossing, cur, inner);
        } else {
            std::vector<int> rest;
            rest.reserve(pts.size() - 2);
            for (size_t i = 1; i < pts.size(); ++i)
                if (i != j) rest.push_back(pts[i]);
            gen_pairings(rest, noncrossing, cur, emit);
        }
        cur.pop_back();
    }
}

// Non-crossing partitions with blocks of size <= 2: the first point is
// either a singleton or pairs with a point j; the arc then isolates the
// points strictly inside it.
inline void gen_nc21(const std::vector<int>& pts, std::vector<std::vector<int>>& cur,
                     const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    if (pts.empty()) {
        emit(cur);
        return;
    }
    cur.push_back({pts[0]});
    {
        std::vector<int> rest(pts.begin() + 1, pts.end());
        gen_nc21(rest, cur, emit);
    }
    cur.pop_back();
    for (size_t j = 1; j < pts.size(); ++j) {
        cur.push_back({pts[0], pts[j]});
        std::vector<int> inside(pts.begin() + 1, pts.begin() + static_cast<long>(j));
        std::vector<int> outside(pts.begin() + static_cast<long>(j) + 1, pts.end());
        std::function<void(const std::vector<std::vector<int>>&)> inner =
            [&](const std::vector<std::vector<int>>&) { gen_nc21(outside, cur, emit); };
        gen_nc21(inside, cur, inner);
        cur.pop_back();
    }
}

// Set partitions via restricted growth strings.
inline void gen_set_partitions(int k,
                               const std::function<void(const std::vector<int>&)>& emit_rgs) {
    std::vector<int> a(static_cast<size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int i, int maxv) {
        if (i == k) {
            emit_rgs(a);
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            a[static_cast<size_t>(i)] = v;
            rec(i + 1, std::max(maxv, v));
        }
    };
    if (k == 0)
        emit_rgs(a);
    else
        rec(0, -1);
}

inline bool joins_even_to_odd(const Partition& p) {
    for (const auto& b : p.blocks())
        if (b.size() == 2 && (b[0] + b[1]) % 2 == 0) return false;
    return true;
}

}  // namespace detail

/// Enumerates a partition family in deterministic order (lexicographic on
/// the canonical encoding).  Pairing families at odd k yield an empty list;
/// contradictory parameters (NC21_S with s > k or k - s odd) throw.
inline std::vector<Partition> enumerate(FamilyKind kind, int k) {
    if (k < 0) throw std::invalid_argument("enumerate: negative point count");
    using Tag = FamilyKind::Tag;

    if (kind.tag == Tag::NC21_S) {
        if (kind.param < 0 || kind.param > k || (k - kind.param) % 2 != 0)
            throw std::invalid_argument("enumerate: NC21_S requires 0 <= s <= k with k - s even");
    }
    if (kind.tag == Tag::COLORED_NC2 && kind.param < 1)
        throw std::invalid_argument("enumerate: COLORED_NC2 needs at least one color");

    std::vector<int> pts(static_cast<size_t>(k));
    std::iota(pts.begin(), pts.end(), 1);
    std::vector<Partition> out;
    std::vector<std::vector<int>> cur;
    auto collect = [&](const std::vector<std::vector<int>>& blocks) {
        out.push_back(Partition::of_blocks(k, blocks));
    };

    switch (kind.tag) {
        case Tag::NC2:
            if (k % 2 == 0) detail::gen_pairings(pts, true, cur, collect);
            break;
        case Tag::P2:
            if (k % 2 == 0) detail::gen_pairings(pts, false, cur, collect);
            break;
        case Tag::NC21:
            detail::gen_nc21(pts, cur, collect);
            break;
        case Tag::NC21_S: {
            detail::gen_nc21(pts, cur, collect);
            std::erase_if(out,
                          [&](const Partition& p) { return p.singleton_count() != kind.param; });
            break;
        }
        case Tag::SET_PARTITIONS: {
            detail::gen_set_partitions(k, [&](const std::vector<int>& rgs) {
                int nb = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
                std::vector<std::vector<int>> blocks(static_cast<size_t>(nb));
                for (int i = 0; i < k; ++i)
                    blocks[static_cast<size_t>(rgs[static_cast<size_t>(i)])].push_back(i + 1);
                out.push_back(Partition::of_blocks(k, blocks));
            });
            break;
        }
        case Tag::EVENODD_NC: {
            if (k % 2 == 0) detail::gen_pairings(pts, true, cur, collect);
            std::erase_if(out, [](const Partition& p) { return !detail::joins_even_to_odd(p); });
            break;
        }
        case Tag::EVENODD_ALL: {
            if (k % 2 == 0) detail::gen_pairings(pts, false, cur, collect);
            std::erase_if(out, [](const Partition& p) { return !detail::joins_even_to_odd(p); });
            break;
        }
        case Tag::COLORED_NC2: {
            std::vector<Partition> base;
            if (k % 2 == 0) {
                std::vector<std::vector<int>> c2;
                detail::gen_pairings(pts, true, c2, [&](const auto& blocks) {
                    base.push_back(Partition::of_blocks(k, blocks));
                });
            }
            for (const Partition& p : base)
                for (Partition& c : colorings(p, kind.param)) out.push_back(std::move(c));
            break;
        }
    }

    std::vector<std::pair<std::string, size_t>> keys;
    keys.reserve(out.size());
    for (size_t i = 0; i < out.size(); ++i) keys.emplace_back(out[i].encode(), i);
    std::sort(keys.begin(), keys.end());
    std::vector<Partition> sorted;
    sorted.reserve(out.size());
    for (const auto& [enc, i] : keys) sorted.push_back(std::move(out[i]));
    return sorted;
}

}  // namespace qgv
