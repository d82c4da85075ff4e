#pragma once

#include <utility>
#include <vector>

#include "poset.hpp"
#include "rational.hpp"

namespace latmat {

/// Exact-rational incidence function on a poset: values attached to ordered
/// pairs (i, j) with i <= j, implicitly zero elsewhere. Carries its own copy
/// of the poset (posets here are tiny) so instances stay self-contained.
class IncidenceFunction {
public:
    explicit IncidenceFunction(Poset p) : poset_(std::move(p)), v_(poset_.n() * poset_.n(), Rat(0)) {}

    const Poset& poset() const { return poset_; }

    const Rat& operator()(int i, int j) const { return v_[i * poset_.n() + j]; }

    void set(int i, int j, Rat value) {
        if (!poset_.leq(i, j))
            throw IndexError("incidence value outside the order relation");
        v_[i * poset_.n() + j] = std::move(value);
    }

    static IncidenceFunction zeta(const Poset& p) {
        IncidenceFunction f(p);
        for (int i = 0; i < p.n(); ++i)
            for (int j = i; j < p.n(); ++j)
                if (p.leq(i, j)) f.set(i, j, Rat(1));
        return f;
    }

    static IncidenceFunction delta(const Poset& p) {
        IncidenceFunction f(p);
        for (int i = 0; i < p.n(); ++i) f.set(i, i, Rat(1));
        return f;
    }

    /// One-sided lift of a point valuation: g(x, y) = values[y] for x <= y.
    static IncidenceFunction from_lower_valuation(const Poset& p, const std::vector<Rat>& values) {
        if (static_cast<int>(values.size()) != p.n())
            throw SizeError("valuation length does not match poset");
        IncidenceFunction f(p);
        for (int i = 0; i < p.n(); ++i)
            for (int j = i; j < p.n(); ++j)
                if (p.leq(i, j)) f.set(i, j, values[j]);
        return f;
    }

    bool operator==(const IncidenceFunction& o) const {
        return poset_.same_order_as(o.poset_) && v_ == o.v_;
    }

private:
    Poset poset_;
    std::vector<Rat> v_;
};

/// mu(i, i) = 1, mu(i, j) = -sum over i <= k < j of mu(i, k).
inline IncidenceFunction mobius(const Poset& p) {
    IncidenceFunction mu(p);
    for (int i = 0; i < p.n(); ++i) {
        mu.set(i, i, Rat(1));
        for (int j = i + 1; j < p.n(); ++j) {
            if (!p.leq(i, j)) continue;
            Rat s(0);
            for (int k = i; k < j; ++k)
                if (p.leq(i, k) && p.leq(k, j)) s += mu(i, k);
            mu.set(i, j, -s);
        }
    }
    return mu;
}

/// Same function computed from the other end of the recursion:
/// mu(i, j) = -sum over i < k <= j of mu(k, j).
inline IncidenceFunction mobius_backward(const Poset& p) {
    IncidenceFunction mu(p);
    for (int j = 0; j < p.n(); ++j) {
        mu.set(j, j, Rat(1));
        for (int i = j - 1; i >= 0; --i) {
            if (!p.leq(i, j)) continue;
            Rat s(0);
            for (int k = i + 1; k <= j; ++k)
                if (p.leq(i, k) && p.leq(k, j)) s += mu(k, j);
            mu.set(i, j, -s);
        }
    }
    return mu;
}

inline IncidenceFunction convolve(const IncidenceFunction& g, const IncidenceFunction& h) {
    if (!g.poset().same_order_as(h.poset()))
        throw MismatchError("convolution operands live on different posets");
    const Poset& p = g.poset();
    IncidenceFunction out(p);
    for (int i = 0; i < p.n(); ++i)
        for (int j = i; j < p.n(); ++j) {
            if (!p.leq(i, j)) continue;
            Rat s(0);
            for (int k = i; k <= j; ++k)
                if (p.leq(i, k) && p.leq(k, j)) s += g(i, k) * h(k, j);
            out.set(i, j, std::move(s));
        }
    return out;
}

/// mu(x_i, x_top) for every i against a distinguished top index.
inline std::vector<Rat> mobius_vector(const Poset& p, int top) {
    IncidenceFunction mu = mobius(p);
    std::vector<Rat> out;
    out.reserve(p.n());
    for (int i = 0; i < p.n(); ++i) out.push_back(p.leq(i, top) ? mu(i, top) : Rat(0));
    return out;
}

}  // namespace latmat
