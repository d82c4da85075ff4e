#pragma once

#include <algorithm>
#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "poset.hpp"

namespace latmat {

namespace detail {

/// All antichains of p as index vectors (nonempty), by backtracking.
inline std::vector<std::vector<int>> nonempty_antichains(const Poset& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (!cur.empty()) out.push_back(cur);
        for (int i = start; i < p.n(); ++i) {
            bool ok = true;
            for (int c : cur)
                if (p.leq(c, i) || p.leq(i, c)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Adds one maximal element covering the antichain, without checking
/// anything. The new element goes last, which keeps the linear extension.
inline Poset extend_by_maximal(const Poset& p, const std::vector<int>& antichain) {
    int n = p.n();
    std::vector<Bitset> up(n + 1, Bitset(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j)) up[i].set(j);
    }
    up[n].set(n);
    Bitset below(n + 1);
    for (int a : antichain) {
        for (int i = 0; i < n; ++i)
            if (p.leq(i, a)) below.set(i);
    }
    for (int i = 0; i < n; ++i)
        if (below.test(i)) up[i].set(n);
    return Poset::from_closed_up(n + 1, std::move(up));
}

/// Meets with the new maximal element exist iff for every x the set
/// (down of antichain) cap (down of x) has a greatest element. Old pairs are
/// untouched because nothing sits above the new element.
inline bool extension_is_meet_semilattice(const Poset& p, const std::vector<int>& antichain) {
    Bitset below(p.n());
    for (int a : antichain) below |= p.down_set(a);
    for (int x = 0; x < p.n(); ++x) {
        Bitset low = below & p.down_set(x);
        int h = low.highest();
        if (h < 0 || !low.subset_of(p.down_set(h))) return false;
    }
    return true;
}

}  // namespace detail

/// One representative per isomorphism class of n-element meet semilattices,
/// sorted by canonical key. Built level by level: every n-semilattice arises
/// from an (n-1)-semilattice by adding a maximal element over an antichain,
/// and removing a maximal element always leaves a meet semilattice, so the
/// sweep is complete.
inline std::vector<Poset> enumerate_meet_semilattices(int n, int ceiling = 8, int threads = 1) {
    if (n < 1 || n > ceiling) throw SizeError("enumeration size out of range");
    std::vector<Poset> level = {build_poset(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::map<CanonicalKey, Poset> classes;
        int nthreads = std::max(1, threads);
        if (nthreads == 1 || level.size() < 8) {
            for (const Poset& parent : level)
                for (auto& ac : detail::nonempty_antichains(parent))
                    if (detail::extension_is_meet_semilattice(parent, ac)) {
                        Poset q = detail::extend_by_maximal(parent, ac);
                        CanonicalKey key = canonicalize(q);
                        classes.emplace(key, poset_from_canonical_key(key));
                    }
        } else {
            std::vector<std::map<CanonicalKey, Poset>> parts(nthreads);
            std::vector<std::thread> pool;
            for (int t = 0; t < nthreads; ++t)
                pool.emplace_back([&, t] {
                    for (std::size_t idx = t; idx < level.size(); idx += nthreads) {
                        const Poset& parent = level[idx];
                        for (auto& ac : detail::nonempty_antichains(parent))
                            if (detail::extension_is_meet_semilattice(parent, ac)) {
                                Poset q = detail::extend_by_maximal(parent, ac);
                                CanonicalKey key = canonicalize(q);
                                parts[t].emplace(key, poset_from_canonical_key(key));
                            }
                    }
                });
            for (auto& th : pool) th.join();
            for (auto& part : parts)
                for (auto& [key, poset] : part) classes.emplace(key, std::move(poset));
        }
        level.clear();
        for (auto& [key, poset] : classes) level.push_back(std::move(poset));
    }
    return level;
}

/// All posets with n elements up to isomorphism (independent route used to
/// cross-check the semilattice generator): add a maximal element over every
/// order ideal of every (n-1)-poset, deduplicate canonically.
inline std::vector<Poset> enumerate_posets(int n, int ceiling = 7) {
    if (n < 1 || n > ceiling) throw SizeError("enumeration size out of range");
    std::vector<Poset> level = {build_poset(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::map<CanonicalKey, Poset> classes;
        for (const Poset& parent : level) {
            int pn = parent.n();
            for (unsigned mask = 0; mask < (1u << pn); ++mask) {
                std::vector<int> ideal;
                bool closed = true;
                for (int i = 0; i < pn && closed; ++i) {
                    if (!(mask >> i & 1)) continue;
                    ideal.push_back(i);
                    for (int j = 0; j < pn; ++j)
                        if (parent.leq(j, i) && !(mask >> j & 1)) {
                            closed = false;
                            break;
                        }
                }
                if (!closed) continue;
                std::vector<int> maximal;
                for (int i : ideal) {
                    bool is_max = true;
                    for (int j : ideal)
                        if (parent.less(i, j)) {
                            is_max = false;
                            break;
                        }
                    if (is_max) maximal.push_back(i);
                }
                Poset q = detail::extend_by_maximal(parent, maximal);
                CanonicalKey key = canonicalize(q);
                classes.emplace(key, poset_from_canonical_key(key));
            }
        }
        level.clear();
        for (auto& [key, poset] : classes) level.push_back(std::move(poset));
    }
    return level;
}

/// Keeps the semilattices in which some element covers at least k others.
inline std::vector<Poset> filter_min_cover(const std::vector<Poset>& semis, int k) {
    std::vector<Poset> out;
    for (const Poset& p : semis)
        if (max_cover_degree(p) >= k) out.push_back(p);
    return out;
}

}  // namespace latmat
