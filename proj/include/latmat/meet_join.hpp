#pragma once

#include <utility>
#include <vector>

#include "incidence.hpp"
#include "lattice.hpp"
#include "matrix.hpp"

namespace latmat {

/// ((S)_f)_{ij} = f(x_i ^ x_j).
inline RationalMatrix meet_matrix(const ValuedSet& vs) {
    int n = vs.size();
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = vs.f_at_meet(i, j);
    return m;
}

/// ([S]_f)_{ij} = f(x_i v x_j).
inline RationalMatrix join_matrix(const ValuedSet& vs) {
    int n = vs.size();
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = vs.f_at_join(i, j);
    return m;
}

/// [S]_f = D (S)_{1/f} D with D = diag(f(x_1), ..., f(x_n)).
struct JoinFactorization {
    std::vector<Rat> delta;
    RationalMatrix core;

    RationalMatrix reconstruct() const {
        int n = core.rows();
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = delta[i] * core.at(i, j) * delta[j];
        return m;
    }
};

/// Requires f semimultiplicative on pairs of S (checked, witness reported).
/// The reconstruction identity is asserted elementwise before returning, so
/// a silently violated precondition cannot escape.
inline JoinFactorization factorize_join(const ValuedSet& vs) {
    SemimultResult sm = vs.semimultiplicative_on_s();
    if (!sm)
        throw NotSemimultiplicativeError("not semimultiplicative at pair (" +
                                         int_to_string(sm.witness->first) + ", " +
                                         int_to_string(sm.witness->second) + ")");
    int n = vs.size();
    JoinFactorization out;
    out.delta.reserve(n);
    for (int i = 0; i < n; ++i) out.delta.push_back(vs.f_at(i));
    out.core = RationalMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.core.at(i, j) = rat_inverse(vs.f_at_meet(i, j));
    if (out.reconstruct() != join_matrix(vs))
        throw NotSemimultiplicativeError("factorization identity failed after pairwise checks");
    return out;
}

struct PrefixConvolution {
    std::vector<Rat> values;  // c_k = (g * mu_S)(x_k)
    Rat product;              // det of the meet matrix with valuation g
};

/// Prefix determinant values on a meet-closed S: c_k = sum over x_j <= x_k
/// of g(x_j) mu_S(x_j, x_k), and det(S_i)_g = c_1 ... c_i. The valuation is
/// generic; pass 1/f to get the join-matrix condition values.
inline PrefixConvolution det_meet_via_convolution(const ValuedSet& vs,
                                                  const std::vector<Rat>& g_on_elements) {
    if (!vs.is_meet_closed())
        throw NotMeetClosedError("prefix determinant formula needs a meet-closed set");
    int n = vs.size();
    if (static_cast<int>(g_on_elements.size()) != n)
        throw SizeError("valuation vector length does not match set size");
    const Poset& p = vs.induced();
    IncidenceFunction mu = mobius(p);
    PrefixConvolution out;
    out.values.reserve(n);
    out.product = 1;
    for (int k = 0; k < n; ++k) {
        Rat c(0);
        for (int j = 0; j <= k; ++j)
            if (p.leq(j, k)) c += g_on_elements[j] * mu(j, k);
        out.product *= c;
        out.values.push_back(std::move(c));
    }
    return out;
}

inline PrefixConvolution det_meet_via_convolution(const ValuedSet& vs, const Valuation& g) {
    std::vector<Rat> gv;
    gv.reserve(vs.size());
    for (int i = 0; i < vs.size(); ++i) gv.push_back(g.eval(vs.ambient(), vs.element(i)));
    return det_meet_via_convolution(vs, gv);
}

}  // namespace latmat
