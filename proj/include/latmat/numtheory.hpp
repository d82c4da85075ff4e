#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "invertibility.hpp"

namespace latmat {

/// Hong's gcd-closed 8-element set with singular LCM matrix.
inline std::vector<Int> hong_set() {
    return {1, 2, 3, 5, 36, 230, 825, 227700};
}

/// The Haukkanen-Wang-Sillanpaa 9-element counterexample.
inline std::vector<Int> hws_set() {
    return {1, 2, 3, 4, 5, 6, 10, 45, 180};
}

struct CounterexampleReport {
    bool gcd_closed = false;
    std::optional<std::string> class_label;
    Rat det;  // det [S] with f = N, by exact elimination
    bool singular = false;
    std::optional<InvertibilityReport> report;
};

/// Full diagnosis of an integer set with f = N. On gcd-closed input the
/// determinant is computed both by elimination and as (prod x_i)^2 prod c_i,
/// and the two routes must agree exactly.
inline CounterexampleReport verify_counterexample(const std::vector<Int>& ints) {
    ValuedSet vs(AmbientLattice::divisor(), ints, Valuation::natural());
    CounterexampleReport out;
    out.gcd_closed = vs.is_meet_closed();
    out.class_label = classify(vs.induced());
    out.det = determinant(join_matrix(vs));
    out.singular = out.det == 0;
    if (out.gcd_closed) {
        out.report = invertibility_report(vs);
        Rat via_conditions = out.report->det_core;
        for (int i = 0; i < vs.size(); ++i) {
            Rat fi(vs.element(i));
            via_conditions *= fi * fi;
        }
        if (via_conditions != out.det)
            throw Error("determinant routes disagree: elimination " + rat_to_string(out.det) +
                        " vs condition product " + rat_to_string(via_conditions));
    }
    return out;
}

/// Search space shaped like Hong's construction: bottom 1, pairwise-coprime
/// atoms p < q < r, middle layer u*pq, v*pr, w*qr with coprime scalars, top
/// the exact reciprocal of the residual condition value when that reciprocal
/// is an integer multiple of the middle lcm. Tuples iterate in colex order.
struct SearchTemplate {
    std::string target = "S_{3,8}";
    long atom_bound = 5;   // atoms p < q < r up to here
    long mult_bound = 60;  // scalars u, v, w up to here
    int pad = 0;           // extra chain elements appended above the top
};

namespace detail {

inline std::optional<std::vector<Int>> s38_candidate(long p, long q, long r, long u, long v,
                                                     long w) {
    Int P(p), Q(q), R_(r), U(u), V(v), W(w);
    if (int_gcd(U, R_) != 1 || int_gcd(V, Q) != 1 || int_gcd(W, P) != 1) return std::nullopt;
    Int m1 = U * P * Q, m2 = V * P * R_, m3 = W * Q * R_;
    if (int_gcd(U * Q, V * R_) != 1 || int_gcd(U * P, W * R_) != 1 || int_gcd(V * P, W * Q) != 1)
        return std::nullopt;
    // c_8 = 0  <=>  1/top = 1/m1 + 1/m2 + 1/m3 - (1/p + 1/q + 1/r - 1)
    Rat resid = Rat(1, m1) + Rat(1, m2) + Rat(1, m3) - Rat(1, P) - Rat(1, Q) - Rat(1, R_) + 1;
    if (resid <= 0 || resid.get_num() != 1) return std::nullopt;
    Int top = resid.get_den();
    Int lcm_mid = int_lcm(int_lcm(m1, m2), m3);
    if (!divides(lcm_mid, top)) return std::nullopt;
    std::vector<Int> s = {1, P, Q, R_, m1, m2, m3, top};
    std::sort(s.begin(), s.end());
    return s;
}

inline std::vector<std::array<long, 3>> coprime_atom_triples(long bound) {
    std::vector<std::array<long, 3>> out;
    for (long r = 4; r <= bound; ++r)
        for (long q = 3; q < r; ++q)
            for (long p = 2; p < q; ++p)
                if (std::gcd(p, q) == 1 && std::gcd(p, r) == 1 && std::gcd(q, r) == 1)
                    out.push_back({p, q, r});
    return out;
}

}  // namespace detail

/// Gcd-closed sets with singular LCM matrix matching the template. Every
/// result re-verifies through verify_counterexample before being returned;
/// an empty result just means the bounds contain no zero condition value.
inline std::vector<std::vector<Int>> search_singular(const SearchTemplate& tmpl, int limit,
                                                     int threads = 1) {
    if (tmpl.target != "S_{3,8}")
        throw ParamError("unknown search template target '" + tmpl.target + "'");
    auto triples = detail::coprime_atom_triples(tmpl.atom_bound);
    long B = tmpl.mult_bound;

    auto scan_w = [&](long w, std::vector<std::vector<Int>>& found) {
        for (auto [p, q, r] : triples)
            for (long v = 1; v <= B; ++v)
                for (long u = 1; u <= B; ++u)
                    if (auto s = detail::s38_candidate(p, q, r, u, v, w)) found.push_back(*s);
    };

    std::vector<std::vector<std::vector<Int>>> per_w(B + 1);
    int nthreads = std::max(1, threads);
    if (nthreads == 1) {
        for (long w = 1; w <= B; ++w) scan_w(w, per_w[w]);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t] {
                for (long w = 1 + t; w <= B; w += nthreads) scan_w(w, per_w[w]);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<std::vector<Int>> out;
    for (long w = 1; w <= B && static_cast<int>(out.size()) < limit; ++w)
        for (auto& s : per_w[w]) {
            if (static_cast<int>(out.size()) >= limit) break;
            CounterexampleReport rep = verify_counterexample(s);
            if (!rep.singular || !rep.gcd_closed)
                throw Error("search produced a candidate that fails re-verification");
            if (rep.class_label != std::optional<std::string>(tmpl.target))
                throw Error("search produced a candidate outside the target class");
            if (tmpl.pad > 0) {
                Int top = s.back();
                for (int k = 1; k <= tmpl.pad; ++k) s.push_back(top * (1 << k));
                if (!verify_counterexample(s).singular)
                    throw Error("padded candidate fails re-verification");
            }
            out.push_back(std::move(s));
        }
    return out;
}

enum class InequalityClass { Gn2n, G36, G37, G471, G472 };

inline InequalityClass inequality_class_from_string(const std::string& s) {
    if (s == "gn2n") return InequalityClass::Gn2n;
    if (s == "g36") return InequalityClass::G36;
    if (s == "g37") return InequalityClass::G37;
    if (s == "g471") return InequalityClass::G471;
    if (s == "g472") return InequalityClass::G472;
    throw ParamError("unknown inequality class '" + s + "'");
}

struct InequalityParams {
    std::vector<Int> multipliers;      // Gn2n only: a_2 .. a_{n-1}
    std::map<std::string, Int> named;  // other classes: a, b, c, d, e
    Int x1 = 1;
    Int top = 0;             // 0 means top_multiplier times the required lcm
    Int top_multiplier = 1;  // only consulted when top == 0
};

struct InequalityInstance {
    std::vector<Int> elements;
    Rat value;  // the class expression; equals c_n on the constructed set
};

namespace detail {

inline Int named_param(const InequalityParams& p, const char* key) {
    auto it = p.named.find(key);
    if (it == p.named.end()) throw ParamError(std::string("missing parameter '") + key + "'");
    if (it->second < 2) throw ParamError(std::string("parameter '") + key + "' must be >= 2");
    return it->second;
}

inline Int resolve_top(const InequalityParams& p, const std::vector<Int>& must_divide,
                       const std::vector<Int>& all) {
    Int l(1);
    for (const Int& v : must_divide) l = int_lcm(l, v);
    if (p.top == 0 && p.top_multiplier < 1)
        throw ParamError("top multiplier must be a positive integer");
    Int top = p.top == 0 ? Int(l * p.top_multiplier) : p.top;
    if (!divides(l, top))
        throw ParamError("top element must be a multiple of " + int_to_string(l));
    for (const Int& v : all)
        if (top == v) throw ParamError("top element collides with " + int_to_string(v));
    return top;
}

inline void require_distinct(const std::vector<Int>& elems) {
    std::set<Int> s(elems.begin(), elems.end());
    if (s.size() != elems.size()) throw ParamError("constructed elements are not distinct");
}

}  // namespace detail

/// Instantiates one of the class-membership inequalities: builds the
/// concrete gcd-closed set from the parametrization and returns the exact
/// value of the corresponding reciprocal expression, which is the last
/// condition value c_n of the constructed set. Side conditions are those
/// stated with each inequality; violations raise ParamError.
inline InequalityInstance class_inequality_instance(InequalityClass cls,
                                                    const InequalityParams& params) {
    if (params.x1 < 1) throw ParamError("x1 must be a positive integer");
    const Int& x1 = params.x1;
    InequalityInstance out;
    switch (cls) {
        case InequalityClass::Gn2n: {
            const auto& mult = params.multipliers;
            if (mult.size() < 2) throw ParamError("G_{n-2,n} needs at least two multipliers");
            for (std::size_t i = 0; i < mult.size(); ++i) {
                if (mult[i] < 2) throw ParamError("multipliers must be >= 2");
                for (std::size_t j = i + 1; j < mult.size(); ++j)
                    if (int_gcd(mult[i], mult[j]) != 1)
                        throw ParamError("multipliers must be pairwise coprime");
            }
            int n = static_cast<int>(mult.size()) + 2;
            std::vector<Int> xs = {x1};
            for (const Int& a : mult) xs.push_back(a * x1);
            Int top = detail::resolve_top(params, {xs.begin() + 1, xs.end()}, xs);
            xs.push_back(top);
            Rat value = Rat(1, top) + Rat(n - 3) / Rat(x1);
            for (std::size_t k = 1; k + 1 < xs.size(); ++k) value -= Rat(1, xs[k]);
            out.elements = xs;
            out.value = value;
            break;
        }
        case InequalityClass::G36: {
            Int a = detail::named_param(params, "a"), b = detail::named_param(params, "b");
            Int c = detail::named_param(params, "c"), d = detail::named_param(params, "d");
            if (int_gcd(a, b) != 1 || int_gcd(b, c) != 1 || int_gcd(b, d) != 1 ||
                int_gcd(c, d) != 1)
                throw ParamError("G_{3,6} needs gcd(a,b)=gcd(b,c)=gcd(b,d)=gcd(c,d)=1");
            Int x2 = a * x1, x3 = b * x1, x4 = a * c * x1, x5 = a * d * x1;
            std::vector<Int> xs = {x1, x2, x3, x4, x5};
            Int top = detail::resolve_top(params, {x3, x4, x5}, xs);
            xs.push_back(top);
            out.elements = xs;
            out.value =
                Rat(1, top) - Rat(1, x5) - Rat(1, x4) - Rat(1, x3) + Rat(1, x2) + Rat(1, x1);
            break;
        }
        case InequalityClass::G37: {
            Int a = detail::named_param(params, "a"), b = detail::named_param(params, "b");
            Int c = detail::named_param(params, "c"), e = detail::named_param(params, "e");
            auto dit = params.named.find("d");
            if (dit == params.named.end()) throw ParamError("missing parameter 'd'");
            Int d = dit->second;
            if (d < 1) throw ParamError("parameter 'd' must be >= 1");
            if (int_gcd(c, b * d) != 1) throw ParamError("G_{3,7} needs gcd(c, b d) = 1");
            Int x2 = a * x1, x3 = b * x1, x4 = a * c * x1, x5 = a * b * d * x1, x6 = b * e * x1;
            std::vector<Int> xs = {x1, x2, x3, x4, x5, x6};
            Int top = detail::resolve_top(params, {x4, x5, x6}, xs);
            xs.push_back(top);
            out.elements = xs;
            out.value = Rat(1, top) - Rat(1, x6) - Rat(1, x5) - Rat(1, x4) + Rat(1, x3) +
                        Rat(1, x2);
            break;
        }
        case InequalityClass::G471:
        case InequalityClass::G472: {
            Int a = detail::named_param(params, "a"), b = detail::named_param(params, "b");
            Int c = detail::named_param(params, "c"), d = detail::named_param(params, "d");
            Int e = detail::named_param(params, "e");
            if (int_gcd(d, e) != 1) throw ParamError("needs gcd(d, e) = 1");
            bool first = cls == InequalityClass::G471;
            Int x2 = a * x1, x3 = b * x1;
            Int x4 = first ? Int(a * c * x1) : Int(c * x1);
            Int x5 = a * d * x1, x6 = a * e * x1;
            std::vector<Int> xs = {x1, x2, x3, x4, x5, x6};
            Int top = detail::resolve_top(params, {x3, x4, x5, x6}, xs);
            xs.push_back(top);
            out.elements = xs;
            Rat tail = Rat(1, top) - Rat(1, x6) - Rat(1, x5) - Rat(1, x4) - Rat(1, x3);
            if (first)
                out.value = tail + Rat(2) / Rat(x2) + Rat(1, x1);
            else
                out.value = tail + Rat(1, x2) + Rat(2) / Rat(x1);
            break;
        }
    }
    detail::require_distinct(out.elements);
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

/// Seeded generator of gcd-closed sets: random insertions, gcd closure,
/// then trimming maximal elements (largest first) back down to n. Trimming
/// keeps closure, so results are gcd-closed by construction.
inline std::vector<Int> random_gcd_closed(int n, const Int& bound, std::uint64_t seed) {
    if (n < 1) throw SizeError("set size must be positive");
    if (bound < n) throw ExhaustionError("bound too tight for the requested size");
    Rng rng(seed);
    std::uint64_t b = bound.get_ui();
    std::set<Int> s;
    for (int attempts = 0; static_cast<int>(s.size()) != n; ++attempts) {
        if (attempts > 200000) throw ExhaustionError("could not reach the requested size");
        if (static_cast<int>(s.size()) < n) {
            s.insert(Int(static_cast<unsigned long>(1 + rng.below(b))));
            std::vector<Int> closed =
                meet_closure(AmbientLattice::divisor(), {s.begin(), s.end()});
            s = {closed.begin(), closed.end()};
        }
        while (static_cast<int>(s.size()) > n) {
            // drop the largest maximal element (any maximal keeps closure)
            auto it = std::prev(s.end());
            s.erase(it);
        }
    }
    return {s.begin(), s.end()};
}

}  // namespace latmat
