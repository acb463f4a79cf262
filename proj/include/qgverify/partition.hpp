#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgv {

/**
 * A set partition of {1..k}, stored in canonical form: every block sorted
 * ascending, blocks ordered by their minimum element.  An optional color
 * (small positive integer) may be attached to each block.
 *
 * The canonical text encoding joins blocks with '|'; elements are written
 * as bare digits for k <= 9 and comma-separated otherwise; a colored block
 * carries a ":c" suffix.  Examples: "12|34", "1,2:1|3,4:2".  The empty
 * partition (k = 0) encodes as "".
 */
class Partition {
public:
    Partition() = default;

    static Partition of_blocks(int points, std::vector<std::vector<int>> blocks,
                               std::vector<int> colors = {}) {
        Partition p;
        p.points_ = points;
        p.blocks_ = std::move(blocks);
        p.colors_ = std::move(colors);
        p.canonicalize();
        p.validate();
        return p;
    }

    int points() const { return points_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    bool colored() const { return !colors_.empty(); }
    const std::vector<int>& colors() const { return colors_; }
    int color_of_block(size_t b) const { return colors_.at(b); }
    size_t block_count() const { return blocks_.size(); }

    int singleton_count() const {
        int s = 0;
        for (const auto& b : blocks_)
            if (b.size() == 1) ++s;
        return s;
    }

    bool is_pairing() const {
        for (const auto& b : blocks_)
            if (b.size() != 2) return false;
        return true;
    }

    bool blocks_at_most_pairs() const {
        for (const auto& b : blocks_)
            if (b.size() > 2) return false;
        return true;
    }

    /// Positions of singleton blocks, ascending ("the i-th singleton").
    std::vector<int> singleton_positions() const {
        std::vector<int> pos;
        for (const auto& b : blocks_)
            if (b.size() == 1) pos.push_back(b[0]);
        std::sort(pos.begin(), pos.end());
        return pos;
    }

    /// Block index owning a given point (1-based point).
    size_t block_of_point(int point) const {
        for (size_t i = 0; i < blocks_.size(); ++i)
            for (int e : blocks_[i])
                if (e == point) return i;
        throw std::invalid_argument("point out of range");
    }

    std::string encode() const {
        std::string out;
        for (size_t i = 0; i < blocks_.size(); ++i) {
            if (i) out += '|';
            for (size_t j = 0; j < blocks_[i].size(); ++j) {
                if (j && points_ > 9) out += ',';
                out += std::to_string(blocks_[i][j]);
            }
            if (colored()) out += ':' + std::to_string(colors_[i]);
        }
        return out;
    }

    /// Inverse of encode(); the point count is required to disambiguate the
    /// digit-concatenated form from the comma form.
    static Partition parse(int points, const std::string& text) {
        std::vector<std::vector<int>> blocks;
        std::vector<int> colors;
        bool any_color = false;
        if (!text.empty()) {
            size_t start = 0;
            while (start <= text.size()) {
                size_t bar = text.find('|', start);
                std::string tok = text.substr(start, bar == std::string::npos ? std::string::npos
                                                                              : bar - start);
                std::string elems = tok;
                int color = 0;
                if (size_t colon = tok.find(':'); colon != std::string::npos) {
                    elems = tok.substr(0, colon);
                    color = std::stoi(tok.substr(colon + 1));
                    any_color = true;
                }
                std::vector<int> block;
                if (points > 9) {
                    size_t p = 0;
                    while (p <= elems.size()) {
                        size_t comma = elems.find(',', p);
                        std::string e = elems.substr(
                            p, comma == std::string::npos ? std::string::npos : comma - p);
                        if (e.empty()) throw std::invalid_argument("bad partition encoding");
                        block.push_back(std::stoi(e));
                        if (comma == std::string::npos) break;
                        p = comma + 1;
                    }
                } else {
                    for (char c : elems) {
                        if (c < '1' || c > '9')
                            throw std::invalid_argument("bad partition encoding");
                        block.push_back(c - '0');
                    }
                }
                blocks.push_back(std::move(block));
                colors.push_back(color);
                if (bar == std::string::npos) break;
                start = bar + 1;
            }
        }
        if (!any_color) colors.clear();
        return of_blocks(points, std::move(blocks), std::move(colors));
    }

    Partition uncolored() const {
        Partition p = *this;
        p.colors_.clear();
        return p;
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.points_ == b.points_ && a.blocks_ == b.blocks_ && a.colors_ == b.colors_;
    }

private:
    void canonicalize() {
        for (auto& b : blocks_) std::sort(b.begin(), b.end());
        if (colors_.empty()) {
            std::sort(blocks_.begin(), blocks_.end(),
                      [](const auto& x, const auto& y) { return x[0] < y[0]; });
        } else {
            std::vector<size_t> order(blocks_.size());
            std::iota(order.begin(), order.end(), size_t{0});
            std::sort(order.begin(), order.end(),
                      [&](size_t x, size_t y) { return blocks_[x][0] < blocks_[y][0]; });
            std::vector<std::vector<int>> nb;
            std::vector<int> nc;
            for (size_t i : order) {
                nb.push_back(std::move(blocks_[i]));
                nc.push_back(colors_[i]);
            }
            blocks_ = std::move(nb);
            colors_ = std::move(nc);
        }
    }

    void validate() const {
        if (points_ < 0) throw std::invalid_argument("negative point count");
        std::vector<char> seen(static_cast<size_t>(points_) + 1, 0);
        size_t total = 0;
        for (const auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("empty block");
            for (int e : b) {
                if (e < 1 || e > points_) throw std::invalid_argument("element out of range");
                if (seen[static_cast<size_t>(e)]) throw std::invalid_argument("repeated element");
                seen[static_cast<size_t>(e)] = 1;
                ++total;
            }
        }
        if (total != static_cast<size_t>(points_))
            throw std::invalid_argument("blocks do not cover {1..k}");
        if (!colors_.empty()) {
            if (colors_.size() != blocks_.size())
                throw std::invalid_argument("color list does not match blocks");
            for (int c : colors_)
                if (c < 1) throw std::invalid_argument("colors must be positive");
        }
    }

    int points_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> colors_;
};

/// Two blocks cross iff they interleave as a < b < c < d with a,c in one
/// block and b,d in the other.  Singletons never cross.
inline bool is_noncrossing(const Partition& p) {
    const auto& blocks = p.blocks();
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].size() < 2) continue;
        for (size_t j = i + 1; j < blocks.size(); ++j) {
            if (blocks[j].size() < 2) continue;
            // Walk the merged element sequence and count ownership alternations;
            // three or more switches means an interleaving pattern exists.
            size_t a = 0, b = 0;
            int switches = 0, last = -1;
            while (a < blocks[i].size() || b < blocks[j].size()) {
                int owner;
                if (b == blocks[j].size() ||
                    (a < blocks[i].size() && blocks[i][a] < blocks[j][b])) {
                    owner = 0;
                    ++a;
                } else {
                    owner = 1;
                    ++b;
                }
                if (owner != last) {
                    ++switches;
                    last = owner;
                }
            }
            if (switches >= 4) return false;
        }
    }
    return true;
}

namespace detail {

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[static_cast<size_t>(y)] = x;
    }
    std::vector<int> parent;
};

}  // namespace detail

/// Number of blocks of the lattice join p v q.  For pairings this counts the
/// closed loops formed by stacking p on q, and <T_p, T_q> = N^result.
inline int join_block_count(const Partition& p, const Partition& q) {
    if (p.points() != q.points())
        throw std::invalid_argument("join_block_count: mismatched point counts");
    if (p.colored() || q.colored())
        throw std::invalid_argument("join_block_count: partitions must be uncolored");
    const int k = p.points();
    detail::UnionFind uf(k + 1);
    for (const auto& part : {&p, &q})
        for (const auto& block : part->blocks())
            for (size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
    int roots = 0;
    for (int x = 1; x <= k; ++x)
        if (uf.find(x) == x) ++roots;
    return roots;
}

/// All num_colors^(#blocks) colorings of p, ordered lexicographically by the
/// per-block color vector (equivalently by canonical encoding).
inline std::vector<Partition> colorings(const Partition& p, int num_colors) {
    if (num_colors < 1) throw std::invalid_argument("colorings: need at least one color");
    if (p.colored()) throw std::invalid_argument("colorings: partition already colored");
    const size_t nb = p.block_count();
    std::vector<Partition> out;
    std::vector<int> c(nb, 1);
    while (true) {
        out.push_back(Partition::of_blocks(p.points(), p.blocks(), c));
        size_t i = nb;
        while (i > 0 && c[i - 1] == num_colors) c[--i] = 1;
        if (i == 0) break;
        ++c[i - 1];
    }
    return out;
}

}  // namespace qgv
