#pragma once

// Test-only oracles, deliberately independent of the library's production
// code paths: cofactor-expansion determinants, Mobius via zeta-matrix
// inversion, and seeded random generators for posets, sets, and valuations.

#include <map>
#include <vector>

#include <latmat/latmat.hpp>

namespace latmat::oracle {

/// Cofactor (Laplace) expansion along the first row. O(n!) but exact;
/// only used for small n.
inline Rat det_cofactor(const RationalMatrix& m) {
    int n = m.rows();
    if (n == 0) return Rat(1);
    if (n == 1) return m.at(0, 0);
    Rat acc(0);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        RationalMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Rat term = m.at(0, j) * det_cofactor(minor);
        if (j % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

/// Mobius values by inverting the zeta matrix with plain rational
/// Gauss-Jordan; independent of the recursion used in the library.
inline std::vector<std::vector<Rat>> mobius_by_matrix_inverse(const Poset& p) {
    int n = p.n();
    RationalMatrix zeta(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j)) zeta.at(i, j) = 1;
    RationalMatrix mu = inverse(zeta);
    std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = mu.at(i, j);
    return out;
}

inline RationalMatrix random_matrix(int n, Rng& rng) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rng.below(5) == 0)
                m.at(i, j) = 0;
            else
                m.at(i, j) = rng.nonzero_rational();
    return m;
}

/// Random relabeling of a poset: permuted cover list fed back through the
/// constructor, which re-indexes to some linear extension.
inline Poset random_relabel(const Poset& p, Rng& rng) {
    int n = p.n();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
    std::vector<std::pair<int, int>> covers;
    for (auto [a, b] : p.covers()) covers.emplace_back(perm[a], perm[b]);
    return build_poset(n, covers);
}

/// Nonzero rational table on poset indices.
inline std::vector<Rat> random_values(int n, Rng& rng) {
    std::vector<Rat> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(rng.nonzero_rational());
    return out;
}

/// Random multiplicative valuation covering every prime power that can show
/// up in elements, gcds, and lcms of the given set.
inline Valuation random_multiplicative_for(const std::vector<Int>& elements, Rng& rng) {
    std::map<Int, int> max_exp;
    for (const Int& e : elements)
        for (auto& [p, k] : factorize(e)) max_exp[p] = std::max(max_exp[p], k);
    std::map<std::pair<Int, int>, Rat> table;
    for (auto& [p, emax] : max_exp)
        for (int e = 1; e <= emax; ++e) table[{p, e}] = rng.nonzero_rational();
    return Valuation::multiplicative(std::move(table));
}

/// A random linear extension of p, as the element order sigma(0..n-1).
inline std::vector<int> random_linear_extension(const Poset& p, Rng& rng) {
    int n = p.n();
    std::vector<int> order;
    std::vector<bool> used(n, false);
    for (int step = 0; step < n; ++step) {
        std::vector<int> ready;
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            bool ok = true;
            for (int j = 0; j < n && ok; ++j)
                if (!used[j] && j != i && p.leq(j, i)) ok = false;
            if (ok) ready.push_back(i);
        }
        int pick = ready[rng.below(ready.size())];
        used[pick] = true;
        order.push_back(pick);
    }
    return order;
}

// ---- seeded parameter draws for the class inequalities ----
// These enforce the full structural coprimality, so the expression value
// must coincide with the last condition value of the constructed set.

inline const std::vector<long>& prime_pool() {
    static const std::vector<long> pool = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    return pool;
}

/// k distinct primes (optionally squared), shuffled deterministically.
inline std::vector<Int> draw_coprime(int k, Rng& rng, bool allow_squares = true) {
    std::vector<long> pool = prime_pool();
    for (int i = static_cast<int>(pool.size()) - 1; i > 0; --i)
        std::swap(pool[i], pool[rng.below(static_cast<std::uint64_t>(i + 1))]);
    std::vector<Int> out;
    for (int i = 0; i < k; ++i) {
        Int v(pool[i]);
        if (allow_squares && rng.below(4) == 0) v *= v;
        out.push_back(v);
    }
    return out;
}

inline Int draw_coprime_to(const Int& to, Rng& rng) {
    for (;;) {
        Int cand(static_cast<long>(2 + rng.below(29)));
        if (int_gcd(cand, to) == 1) return cand;
    }
}

inline InequalityParams draw_params(InequalityClass cls, int n_for_gn2n, Rng& rng) {
    InequalityParams p;
    p.x1 = Int(static_cast<long>(1 + rng.below(20)));
    p.top_multiplier = Int(static_cast<long>(1 + rng.below(3)));
    switch (cls) {
        case InequalityClass::Gn2n: {
            p.multipliers = draw_coprime(n_for_gn2n - 2, rng);
            break;
        }
        case InequalityClass::G36: {
            auto bcd = draw_coprime(3, rng);
            p.named["b"] = bcd[0];
            p.named["c"] = bcd[1];
            p.named["d"] = bcd[2];
            p.named["a"] = draw_coprime_to(bcd[0], rng);
            break;
        }
        case InequalityClass::G37: {
            auto v = draw_coprime(5, rng, false);
            p.named["a"] = v[0];
            p.named["b"] = v[1];
            p.named["c"] = v[2];
            p.named["d"] = rng.below(3) == 0 ? Int(1) : v[3];
            p.named["e"] = v[4];
            break;
        }
        case InequalityClass::G471: {
            auto v = draw_coprime(4, rng);
            p.named["b"] = v[0];
            p.named["c"] = v[1];
            p.named["d"] = v[2];
            p.named["e"] = v[3];
            p.named["a"] = draw_coprime_to(v[0], rng);
            break;
        }
        case InequalityClass::G472: {
            auto v = draw_coprime(4, rng);
            p.named["b"] = v[0];
            p.named["c"] = v[1];
            p.named["d"] = v[2];
            p.named["e"] = v[3];
            p.named["a"] = draw_coprime_to(v[0] * v[1], rng);
            break;
        }
    }
    return p;
}

}  // namespace latmat::oracle
