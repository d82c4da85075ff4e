#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "meet_join.hpp"

namespace latmat {

/// One step of the inductive construction: x_i enters covering m_i
/// incomparable elements of the prefix, and passes when the condition value
/// c_i = (1/f * mu_S)(x_i) is nonzero.
struct ConstructionStep {
    int index = 0;  // 1-based, the i of x_i
    int m = 0;
    std::vector<int> covered;  // 1-based indices of the covered x_{i_1..i_m}
    Rat condition_value;
    bool passed = false;
};

struct ConstructionSequence {
    std::vector<int> m;
    std::vector<std::vector<int>> covered;  // 1-based
};

enum class Verdict { Invertible, Singular };

/// Whether the verdict speaks for the join matrix as well or only for the
/// meet side; joins can be unavailable on abstract meet semilattices.
enum class ReportScope { JoinAndMeet, MeetOnly };

struct InvertibilityReport {
    std::vector<ConstructionStep> steps;
    Verdict verdict = Verdict::Invertible;
    std::optional<int> first_failure;  // smallest failing i, 1-based
    Rat det_core;                      // prod c_i = det (S)_{1/f}
    ReportScope scope = ReportScope::JoinAndMeet;
};

/// Lower covers of each x_i within its prefix S_i. Because the element order
/// is a linear extension, every element below x_i already sits in the
/// prefix, so these are the lower covers in the induced poset of S.
inline ConstructionSequence construction_sequence(const ValuedSet& vs) {
    if (!vs.is_meet_closed())
        throw NotMeetClosedError("construction sequence needs a meet-closed set");
    ConstructionSequence seq;
    const Poset& p = vs.induced();
    for (int i = 0; i < vs.size(); ++i) {
        std::vector<int> cov = p.lower_covers(i);
        for (int& c : cov) ++c;
        seq.m.push_back(static_cast<int>(cov.size()));
        seq.covered.push_back(std::move(cov));
    }
    return seq;
}

/// c_i = (1/f * mu_S)(x_i) on the induced poset of S.
inline std::vector<Rat> condition_values(const ValuedSet& vs) {
    std::vector<Rat> one_over_f;
    one_over_f.reserve(vs.size());
    for (int i = 0; i < vs.size(); ++i) one_over_f.push_back(rat_inverse(vs.f_at(i)));
    return det_meet_via_convolution(vs, one_over_f).values;
}

/// Incremental invertibility verdict: [S]_f is invertible iff every
/// condition value is nonzero. When the ambient cannot provide joins the
/// report is restricted to the meet matrix (S)_{1/f}; when joins exist, f
/// must be semimultiplicative on pairs of S for the join-side claim.
inline InvertibilityReport invertibility_report(const ValuedSet& vs) {
    ConstructionSequence seq = construction_sequence(vs);
    std::vector<Rat> c = condition_values(vs);
    InvertibilityReport rep;
    if (vs.joins_available()) {
        SemimultResult sm = vs.semimultiplicative_on_s();
        if (!sm)
            throw NotSemimultiplicativeError("not semimultiplicative at pair (" +
                                             int_to_string(sm.witness->first) + ", " +
                                             int_to_string(sm.witness->second) + ")");
        rep.scope = ReportScope::JoinAndMeet;
    } else {
        rep.scope = ReportScope::MeetOnly;
    }
    rep.det_core = 1;
    for (int i = 0; i < vs.size(); ++i) {
        ConstructionStep step;
        step.index = i + 1;
        step.m = seq.m[i];
        step.covered = seq.covered[i];
        step.condition_value = c[i];
        step.passed = c[i] != 0;
        if (!step.passed && !rep.first_failure) rep.first_failure = step.index;
        rep.det_core *= c[i];
        rep.steps.push_back(std::move(step));
    }
    rep.verdict = rep.first_failure ? Verdict::Singular : Verdict::Invertible;
    return rep;
}

enum class SpecialShape { Chain, X1Set, BoundedX1Set };

struct SpecialCheck {
    bool ok = true;
    std::optional<int> failing_index;  // 1-based
};

namespace detail {

inline bool is_chain_shape(const ValuedSet& vs) {
    const Poset& p = vs.induced();
    for (int i = 0; i + 1 < p.n(); ++i)
        if (!p.leq(i, i + 1)) return false;
    return true;
}

/// x_i ^ x_j = x_1 for all i != j (an a-set with a = x_1).
inline bool is_x1_set_shape(const ValuedSet& vs, int upto) {
    for (int i = 0; i < upto; ++i)
        for (int j = i + 1; j < upto; ++j) {
            Int m = vs.ambient().meet(vs.element(i), vs.element(j));
            if (m != vs.element(0)) return false;
        }
    return true;
}

}  // namespace detail

/// Specialized invertibility criteria for chains, x_1-sets, and x_1-sets
/// extended by an upper bound (the S_{n-2,n} shape). Equivalent to the
/// generic report on sets of the matching shape.
inline SpecialCheck special_condition_check(const ValuedSet& vs, SpecialShape kind) {
    int n = vs.size();
    SpecialCheck out;
    switch (kind) {
        case SpecialShape::Chain: {
            if (!detail::is_chain_shape(vs)) throw ShapeError("set is not a chain");
            for (int k = 1; k < n; ++k)
                if (vs.f_at(k) == vs.f_at(k - 1)) {
                    out.ok = false;
                    out.failing_index = k + 1;
                    return out;
                }
            return out;
        }
        case SpecialShape::X1Set: {
            if (!detail::is_x1_set_shape(vs, n)) throw ShapeError("set is not an x1-set");
            for (int k = 1; k < n; ++k)
                if (vs.f_at(k) == vs.f_at(0)) {
                    out.ok = false;
                    out.failing_index = k + 1;
                    return out;
                }
            return out;
        }
        case SpecialShape::BoundedX1Set: {
            if (n < 3) throw ShapeError("bounded x1-set needs at least three elements");
            if (!detail::is_x1_set_shape(vs, n - 1))
                throw ShapeError("prefix is not an x1-set");
            for (int k = 0; k < n - 1; ++k)
                if (!vs.ambient().leq(vs.element(k), vs.element(n - 1)))
                    throw ShapeError("last element is not an upper bound");
            for (int k = 1; k < n - 1; ++k)
                if (vs.f_at(k) == vs.f_at(0)) {
                    out.ok = false;
                    out.failing_index = k + 1;
                    return out;
                }
            Rat rhs(0);
            for (int k = 1; k < n - 1; ++k) rhs += rat_inverse(vs.f_at(k));
            rhs -= Rat(n - 3) * rat_inverse(vs.f_at(0));
            if (rat_inverse(vs.f_at(n - 1)) == rhs) {
                out.ok = false;
                out.failing_index = n;
            }
            return out;
        }
    }
    throw Error("unreachable");
}

/// Join form of the two-cover condition:
/// f(x_i) != f(x_{i1}) f(x_{i2}) / [f(x_{i1}) + f(x_{i2}) - f(x_{i1} v x_{i2})],
/// defined only when that denominator is nonzero (the meet form is the
/// authoritative one; this is a cross-check). Indices are 0-based here.
inline bool condition_c2_join_form(const ValuedSet& vs, int i, int i1, int i2) {
    const Poset& p = vs.induced();
    if (p.leq(i1, i2) || p.leq(i2, i1))
        throw ShapeError("covered elements must be incomparable");
    auto covs = p.lower_covers(i);
    auto has = [&](int x) { return std::find(covs.begin(), covs.end(), x) != covs.end(); };
    if (!has(i1) || !has(i2)) throw ShapeError("elements are not covered by x_i");
    Rat den = vs.f_at(i1) + vs.f_at(i2) - vs.f_at_join(i1, i2);
    if (den == 0) throw ZeroDenominatorError("join-form denominator vanishes");
    return vs.f_at(i) != vs.f_at(i1) * vs.f_at(i2) / den;
}

}  // namespace latmat
