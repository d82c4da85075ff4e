#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace latmat {

/// Small dynamic bitset; one row of an order relation.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    /// Highest set bit, or -1 when empty.
    int highest() const {
        for (int k = static_cast<int>(w_.size()) - 1; k >= 0; --k)
            if (w_[k]) return k * 64 + 63 - __builtin_clzll(w_[k]);
        return -1;
    }
    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// A finite poset. Indexing is always a linear extension (leq(i,j) with i != j
/// implies i < j), which the constructor enforces by re-indexing; `covers` is
/// kept as the transitive reduction of the order.
class Poset {
public:
    Poset() = default;

    /// Reflexive-transitive closure of the given cover pairs (i below j).
    /// Throws CycleError if antisymmetry fails, IndexError on bad indices.
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                             std::vector<std::string> labels = {}) {
        if (n < 0) throw SizeError("negative element count");
        std::vector<Bitset> up(n, Bitset(n));
        for (int i = 0; i < n; ++i) up[i].set(i);
        for (auto [a, b] : covers) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw IndexError("cover index out of range");
            if (a == b) throw CycleError("cover pair with equal endpoints");
            up[a].set(b);
        }
        close_transitively(up);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (up[i].test(j) && up[j].test(i))
                    throw CycleError("cover relation closes a cycle");
        return from_closed_up(n, std::move(up), std::move(labels));
    }

    /// Builds from an already reflexive+transitive+antisymmetric `up` family.
    /// Re-indexes to a linear extension (stable: earliest original index first).
    static Poset from_closed_up(int n, std::vector<Bitset> up,
                                std::vector<std::string> labels = {}) {
        std::vector<int> order = linear_extension(n, up);
        Poset p;
        p.n_ = n;
        p.up_.assign(n, Bitset(n));
        p.down_.assign(n, Bitset(n));
        std::vector<int> pos(n);
        for (int k = 0; k < n; ++k) pos[order[k]] = k;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (up[i].test(j)) {
                    p.up_[pos[i]].set(pos[j]);
                    p.down_[pos[j]].set(pos[i]);
                }
        if (!labels.empty()) {
            if (static_cast<int>(labels.size()) != n)
                throw SizeError("label count does not match element count");
            p.labels_.resize(n);
            for (int i = 0; i < n; ++i) p.labels_[pos[i]] = std::move(labels[i]);
        }
        p.rebuild_covers();
        return p;
    }

    int n() const { return n_; }
    bool leq(int i, int j) const { return up_[i].test(j); }
    bool less(int i, int j) const { return i != j && up_[i].test(j); }
    const Bitset& up_set(int i) const { return up_[i]; }
    const Bitset& down_set(int i) const { return down_[i]; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int i) const {
        return labels_.empty() ? std::to_string(i) : labels_[i];
    }

    std::vector<int> lower_covers(int j) const {
        if (j < 0 || j >= n_) throw IndexError("element index out of range");
        std::vector<int> out;
        for (auto [a, b] : covers_)
            if (b == j) out.push_back(a);
        return out;
    }

    std::vector<int> upper_covers(int i) const {
        if (i < 0 || i >= n_) throw IndexError("element index out of range");
        std::vector<int> out;
        for (auto [a, b] : covers_)
            if (a == i) out.push_back(b);
        return out;
    }

    /// Downward closure of a set of indices.
    Bitset order_ideal(const std::vector<int>& idxs) const {
        Bitset out(n_);
        for (int i : idxs) {
            if (i < 0 || i >= n_) throw IndexError("element index out of range");
            out |= down_[i];
        }
        return out;
    }

    /// Greatest lower bound within the poset, if it exists.
    std::optional<int> meet(int i, int j) const {
        Bitset low = down_[i] & down_[j];
        int h = low.highest();
        if (h < 0 || !low.subset_of(down_[h])) return std::nullopt;
        return h;
    }

    /// Least upper bound within the poset, if it exists.
    std::optional<int> join(int i, int j) const {
        Bitset upp = up_[i] & up_[j];
        if (!upp.any()) return std::nullopt;
        int lowest = -1;
        for (int k = 0; k < n_; ++k)
            if (upp.test(k)) {
                lowest = k;
                break;
            }
        if (!upp.subset_of(up_[lowest])) return std::nullopt;
        return lowest;
    }

    bool is_meet_semilattice() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (!meet(i, j)) return false;
        return true;
    }

    std::optional<int> bottom() const {
        if (n_ > 0 && up_[0].count() == n_) return 0;
        return std::nullopt;
    }

    /// Longest-chain height, 0 for minimal elements.
    std::vector<int> heights() const {
        std::vector<int> h(n_, 0);
        std::vector<std::pair<int, int>> cs = covers_;
        std::sort(cs.begin(), cs.end(), [](auto x, auto y) { return x.second < y.second; });
        for (auto [a, b] : cs) h[b] = std::max(h[b], h[a] + 1);
        return h;
    }

    bool same_order_as(const Poset& o) const {
        return n_ == o.n_ && up_ == o.up_;
    }

    /// Hasse diagram in Graphviz DOT, covers as edges, ranks by height.
    std::string to_dot(const std::string& name = "hasse") const {
        std::ostringstream os;
        os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=circle];\n";
        for (int i = 0; i < n_; ++i)
            os << "  v" << i << " [label=\"" << label(i) << "\"];\n";
        std::vector<int> h = heights();
        int maxh = 0;
        for (int i = 0; i < n_; ++i) maxh = std::max(maxh, h[i]);
        for (int level = 0; level <= maxh; ++level) {
            os << "  { rank=same;";
            for (int i = 0; i < n_; ++i)
                if (h[i] == level) os << " v" << i << ";";
            os << " }\n";
        }
        for (auto [a, b] : covers_) os << "  v" << a << " -> v" << b << ";\n";
        os << "}\n";
        return os.str();
    }

private:
    static void close_transitively(std::vector<Bitset>& up) {
        int n = static_cast<int>(up.size());
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k)
                    if (i != k && up[i].test(k) && !up[k].subset_of(up[i])) {
                        up[i] |= up[k];
                        changed = true;
                    }
        }
    }

    /// Kahn topological order, smallest original index first. Identity when
    /// the input indexing is already a linear extension.
    static std::vector<int> linear_extension(int n, const std::vector<Bitset>& up) {
        std::vector<int> indeg(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && up[i].test(j)) ++indeg[j];
        std::vector<int> order;
        std::vector<bool> used(n, false);
        for (int step = 0; step < n; ++step) {
            int pick = -1;
            for (int i = 0; i < n; ++i)
                if (!used[i] && indeg[i] == 0) {
                    pick = i;
                    break;
                }
            if (pick < 0) throw CycleError("no linear extension exists");
            used[pick] = true;
            order.push_back(pick);
            for (int j = 0; j < n; ++j)
                if (j != pick && up[pick].test(j)) --indeg[j];
        }
        return order;
    }

    void rebuild_covers() {
        covers_.clear();
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                if (!up_[i].test(j)) continue;
                bool direct = true;
                for (int k = i + 1; k < j && direct; ++k)
                    if (up_[i].test(k) && up_[k].test(j)) direct = false;
                if (direct) covers_.emplace_back(i, j);
            }
    }

    int n_ = 0;
    std::vector<Bitset> up_, down_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::string> labels_;
};

inline Poset build_poset(int n, const std::vector<std::pair<int, int>>& covers,
                         std::vector<std::string> labels = {}) {
    return Poset::from_covers(n, covers, std::move(labels));
}

inline int max_cover_degree(const Poset& p) {
    std::vector<int> cnt(p.n(), 0);
    for (auto [a, b] : p.covers()) {
        (void)a;
        ++cnt[b];
    }
    int best = 0;
    for (int c : cnt) best = std::max(best, c);
    return best;
}

}  // namespace latmat
