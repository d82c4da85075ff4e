#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "poset.hpp"
#include "rational.hpp"

namespace latmat {

/// Meet/join provider. Either the divisor lattice (Z+, |) with gcd/lcm on
/// arbitrary-precision integers, or a finite abstract lattice given by a
/// poset plus meet (and optionally join) tables. Abstract elements are
/// identified by their poset index, carried around as small Ints so both
/// kinds share one element type.
class AmbientLattice {
public:
    enum class Kind { Divisor, Abstract };

    static AmbientLattice divisor() { return AmbientLattice(Kind::Divisor); }

    static AmbientLattice abstract_lattice(Poset p, std::vector<std::vector<int>> meet_table,
                                           std::optional<std::vector<std::vector<int>>> join_table) {
        AmbientLattice a(Kind::Abstract);
        a.poset_ = std::make_shared<Poset>(std::move(p));
        a.meet_tab_ = std::move(meet_table);
        a.join_tab_ = std::move(join_table);
        a.validate_tables();
        return a;
    }

    /// Meet table derived from the poset itself; joins only when present.
    static AmbientLattice from_meet_semilattice(const Poset& p) {
        int n = p.n();
        std::vector<std::vector<int>> meet(n, std::vector<int>(n));
        bool has_all_joins = true;
        std::vector<std::vector<int>> join(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto m = p.meet(i, j);
                if (!m) throw ShapeError("poset is not a meet semilattice");
                meet[i][j] = *m;
                auto u = p.join(i, j);
                if (u)
                    join[i][j] = *u;
                else
                    has_all_joins = false;
            }
        return abstract_lattice(Poset(p), std::move(meet),
                                has_all_joins ? std::optional(std::move(join)) : std::nullopt);
    }

    Kind kind() const { return kind_; }
    bool is_divisor() const { return kind_ == Kind::Divisor; }
    bool has_joins() const { return is_divisor() || join_tab_.has_value(); }
    const Poset& poset() const {
        if (is_divisor()) throw MismatchError("divisor lattice has no finite poset");
        return *poset_;
    }

    bool contains(const Int& e) const {
        if (is_divisor()) return e >= 1;
        return e >= 0 && e < poset_->n();
    }

    void require(const Int& e) const {
        if (contains(e)) return;
        if (is_divisor()) throw NonPositiveError("divisor-lattice elements must be positive");
        throw IndexError("abstract-lattice element out of range");
    }

    bool leq(const Int& a, const Int& b) const {
        require(a);
        require(b);
        if (is_divisor()) return divides(a, b);
        return poset_->leq(static_cast<int>(a.get_si()), static_cast<int>(b.get_si()));
    }

    Int meet(const Int& a, const Int& b) const {
        require(a);
        require(b);
        if (is_divisor()) return int_gcd(a, b);
        return meet_tab_[a.get_si()][b.get_si()];
    }

    Int join(const Int& a, const Int& b) const {
        require(a);
        require(b);
        if (is_divisor()) return int_lcm(a, b);
        if (!join_tab_) throw NoJoinError("ambient lattice carries no join table");
        return (*join_tab_)[a.get_si()][b.get_si()];
    }

private:
    explicit AmbientLattice(Kind k) : kind_(k) {}

    /// Meet entries must be greatest lower bounds and join entries least
    /// upper bounds under the stored order. Checked exhaustively for n <= 12.
    void validate_tables() const {
        const Poset& p = *poset_;
        int n = p.n();
        if (static_cast<int>(meet_tab_.size()) != n)
            throw SizeError("meet table does not match poset size");
        for (auto& row : meet_tab_)
            if (static_cast<int>(row.size()) != n)
                throw SizeError("meet table does not match poset size");
        if (join_tab_) {
            if (static_cast<int>(join_tab_->size()) != n)
                throw SizeError("join table does not match poset size");
            for (auto& row : *join_tab_)
                if (static_cast<int>(row.size()) != n)
                    throw SizeError("join table does not match poset size");
        }
        if (n > 12) return;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int m = meet_tab_[i][j];
                if (m < 0 || m >= n || p.meet(i, j) != std::optional<int>(m))
                    throw ShapeError("meet table entry is not the greatest lower bound");
                if (join_tab_) {
                    int u = (*join_tab_)[i][j];
                    if (u < 0 || u >= n || p.join(i, j) != std::optional<int>(u))
                        throw ShapeError("join table entry is not the least upper bound");
                }
            }
    }

    Kind kind_;
    std::shared_ptr<const Poset> poset_;
    std::vector<std::vector<int>> meet_tab_;
    std::optional<std::vector<std::vector<int>>> join_tab_;
};

/// Poset on distinct positive integers under divisibility, indexed by
/// ascending numeric value (a linear extension of divisibility).
inline Poset divisor_subposet(std::vector<Int> ints) {
    for (const Int& v : ints)
        if (v <= 0) throw NonPositiveError("divisor poset requires positive integers");
    std::sort(ints.begin(), ints.end());
    for (std::size_t i = 1; i < ints.size(); ++i)
        if (ints[i] == ints[i - 1]) throw DuplicateError("duplicate element " + int_to_string(ints[i]));
    int n = static_cast<int>(ints.size());
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!divides(ints[i], ints[j])) continue;
            bool direct = true;
            for (int k = i + 1; k < j && direct; ++k)
                if (divides(ints[i], ints[k]) && divides(ints[k], ints[j])) direct = false;
            if (direct) covers.emplace_back(i, j);
        }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const Int& v : ints) labels.push_back(int_to_string(v));
    return build_poset(n, covers, std::move(labels));
}

/// Smallest superset closed under pairwise meets (fixpoint iteration).
inline std::vector<Int> meet_closure(const AmbientLattice& amb, std::vector<Int> elems) {
    std::set<Int> s;
    for (const Int& e : elems) {
        amb.require(e);
        s.insert(e);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Int> cur(s.begin(), s.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j)
                if (s.insert(amb.meet(cur[i], cur[j])).second) grew = true;
    }
    return {s.begin(), s.end()};
}

inline bool is_meet_closed(const AmbientLattice& amb, const std::vector<Int>& elems) {
    std::set<Int> s(elems.begin(), elems.end());
    for (auto i = s.begin(); i != s.end(); ++i)
        for (auto j = std::next(i); j != s.end(); ++j)
            if (!s.count(amb.meet(*i, *j))) return false;
    return true;
}

inline bool is_gcd_closed(const std::vector<Int>& elems) {
    return is_meet_closed(AmbientLattice::divisor(), elems);
}

/// Point valuation f on ambient elements. Evaluations must be nonzero exact
/// rationals; a zero result raises ZeroValueError at evaluation time.
class Valuation {
public:
    enum class Kind { Natural, Power, Reciprocal, Phi, Sigma, Multiplicative, TableDivisor, TableAbstract };

    static Valuation natural() { return Valuation(Kind::Natural); }

    static Valuation power(int exponent) {
        Valuation v(Kind::Power);
        v.exponent_ = exponent;
        return v;
    }

    static Valuation reciprocal(Valuation inner) {
        if (inner.kind_ == Kind::Reciprocal) return *inner.inner_;
        Valuation v(Kind::Reciprocal);
        v.inner_ = std::make_shared<Valuation>(std::move(inner));
        return v;
    }

    static Valuation euler_phi() { return Valuation(Kind::Phi); }
    static Valuation sigma() { return Valuation(Kind::Sigma); }

    /// Explicit prime-power table: value at p^k for every pair that can occur.
    static Valuation multiplicative(std::map<std::pair<Int, int>, Rat> prime_power) {
        Valuation v(Kind::Multiplicative);
        v.prime_power_ = std::move(prime_power);
        return v;
    }

    static Valuation table_divisor(std::map<Int, Rat> values) {
        Valuation v(Kind::TableDivisor);
        v.div_table_ = std::move(values);
        return v;
    }

    static Valuation table_abstract(std::vector<Rat> values) {
        Valuation v(Kind::TableAbstract);
        v.abs_table_ = std::move(values);
        return v;
    }

    Kind kind() const { return kind_; }
    int exponent() const { return exponent_; }
    const Valuation& inner() const { return *inner_; }
    const std::map<std::pair<Int, int>, Rat>& prime_power_table() const { return prime_power_; }
    const std::map<Int, Rat>& divisor_table() const { return div_table_; }
    const std::vector<Rat>& abstract_table() const { return abs_table_; }

    bool is_multiplicative_kind() const {
        if (kind_ == Kind::Reciprocal) return inner_->is_multiplicative_kind();
        return kind_ == Kind::Natural || kind_ == Kind::Power || kind_ == Kind::Phi ||
               kind_ == Kind::Sigma || kind_ == Kind::Multiplicative;
    }

    Rat eval(const AmbientLattice& amb, const Int& elem) const {
        amb.require(elem);
        Rat v = eval_raw(amb, elem);
        if (v == 0)
            throw ZeroValueError("valuation is zero at " + int_to_string(elem));
        return v;
    }

private:
    explicit Valuation(Kind k) : kind_(k) {}

    Rat eval_raw(const AmbientLattice& amb, const Int& elem) const {
        switch (kind_) {
            case Kind::Natural:
                require_divisor(amb, "N");
                return Rat(elem);
            case Kind::Power: {
                require_divisor(amb, "power");
                Rat base(elem);
                Rat out(1);
                for (int k = 0; k < std::abs(exponent_); ++k) out *= base;
                return exponent_ >= 0 ? out : rat_inverse(out);
            }
            case Kind::Reciprocal:
                return rat_inverse(inner_->eval(amb, elem));
            case Kind::Phi:
            case Kind::Sigma:
            case Kind::Multiplicative: {
                require_divisor(amb, "multiplicative valuation");
                Rat out(1);
                for (auto& [p, e] : factorize(elem)) out *= prime_power_value(p, e);
                return out;
            }
            case Kind::TableDivisor: {
                require_divisor(amb, "divisor table");
                auto it = div_table_.find(elem);
                if (it == div_table_.end())
                    throw UndefinedValueError("table valuation undefined at " + int_to_string(elem));
                return it->second;
            }
            case Kind::TableAbstract: {
                if (amb.is_divisor())
                    throw MismatchError("abstract table valuation used on the divisor lattice");
                long i = elem.get_si();
                if (i < 0 || i >= static_cast<long>(abs_table_.size()))
                    throw UndefinedValueError("table valuation undefined at index " + int_to_string(elem));
                return abs_table_[i];
            }
        }
        throw Error("unreachable");
    }

    Rat prime_power_value(const Int& p, int e) const {
        switch (kind_) {
            case Kind::Phi: {
                Int pe, pe1;
                mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
                mpz_pow_ui(pe1.get_mpz_t(), p.get_mpz_t(), e - 1);
                return Rat(pe - pe1);
            }
            case Kind::Sigma: {
                Int s = 1, pk = 1;
                for (int k = 1; k <= e; ++k) {
                    pk *= p;
                    s += pk;
                }
                return Rat(s);
            }
            default: {
                auto it = prime_power_.find({p, e});
                if (it == prime_power_.end())
                    throw UndefinedValueError("multiplicative table undefined at " + int_to_string(p) +
                                              "^" + std::to_string(e));
                return it->second;
            }
        }
    }

    static void require_divisor(const AmbientLattice& amb, const char* what) {
        if (!amb.is_divisor())
            throw MismatchError(std::string(what) + " is only defined on the divisor lattice");
    }

    Kind kind_;
    int exponent_ = 1;
    std::shared_ptr<const Valuation> inner_;
    std::map<std::pair<Int, int>, Rat> prime_power_;
    std::map<Int, Rat> div_table_;
    std::vector<Rat> abs_table_;
};

/// Which pairs a semimultiplicativity check covers.
struct SemimultScope {
    enum class Mode { All, Sample };
    Mode mode = Mode::All;
    int count = 0;
    std::uint64_t seed = 0;
    Int bound = 0;

    static SemimultScope all() { return {}; }
    static SemimultScope sample(int count, std::uint64_t seed, Int bound = Int(1000000)) {
        SemimultScope s;
        s.mode = Mode::Sample;
        s.count = count;
        s.seed = seed;
        s.bound = std::move(bound);
        return s;
    }
};

struct SemimultResult {
    bool ok = true;
    std::optional<std::pair<Int, Int>> witness;
    std::string tested_scope;

    explicit operator bool() const { return ok; }
};

inline bool semimult_holds_at(const AmbientLattice& amb, const Valuation& f, const Int& x,
                              const Int& y) {
    return f.eval(amb, x) * f.eval(amb, y) == f.eval(amb, amb.meet(x, y)) * f.eval(amb, amb.join(x, y));
}

/// f(x) f(y) = f(x ^ y) f(x v y) over the requested pairs. Abstract ambients
/// are checked exhaustively; the divisor lattice is infinite, so only the
/// sampled scope is ever claimed.
inline SemimultResult is_semimultiplicative(const AmbientLattice& amb, const Valuation& f,
                                            const SemimultScope& scope = SemimultScope::all()) {
    SemimultResult res;
    if (!amb.is_divisor()) {
        int n = amb.poset().n();
        res.tested_scope = "all " + std::to_string(n * (n + 1) / 2) + " pairs (exhaustive)";
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (!semimult_holds_at(amb, f, Int(i), Int(j))) {
                    res.ok = false;
                    res.witness = {Int(i), Int(j)};
                    return res;
                }
        return res;
    }
    if (scope.mode == SemimultScope::Mode::All)
        throw MismatchError("exhaustive semimultiplicativity check is impossible on the divisor lattice");
    Rng rng(scope.seed);
    res.tested_scope = std::to_string(scope.count) + " sampled pairs up to " + int_to_string(scope.bound);
    std::uint64_t b = scope.bound.get_ui();
    for (int k = 0; k < scope.count; ++k) {
        Int x(static_cast<unsigned long>(1 + rng.below(b)));
        Int y(static_cast<unsigned long>(1 + rng.below(b)));
        if (!semimult_holds_at(amb, f, x, y)) {
            res.ok = false;
            res.witness = {x, y};
            return res;
        }
    }
    return res;
}

/// Checks Eq-style semimultiplicativity over all pairs of an explicit set.
inline SemimultResult semimultiplicative_on_pairs(const AmbientLattice& amb, const Valuation& f,
                                                  const std::vector<Int>& elems) {
    SemimultResult res;
    res.tested_scope = "all pairs of the " + std::to_string(elems.size()) + "-element set";
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i; j < elems.size(); ++j)
            if (!semimult_holds_at(amb, f, elems[i], elems[j])) {
                res.ok = false;
                res.witness = {elems[i], elems[j]};
                return res;
            }
    return res;
}

/// An ordered element list S inside an ambient lattice together with a
/// valuation f. Construction sorts the elements into the canonical linear
/// extension (ascending value on the divisor lattice, ascending input index
/// otherwise), builds the induced poset, and eagerly evaluates f on every
/// element, pairwise meet, and pairwise join (joins only when the ambient
/// provides them).
class ValuedSet {
public:
    ValuedSet(AmbientLattice amb, std::vector<Int> elements, Valuation f)
        : amb_(std::move(amb)), f_(std::move(f)) {
        if (elements.empty()) throw SizeError("valued set needs at least one element");
        for (const Int& e : elements) amb_.require(e);
        // Ascending value is a linear extension in both cases: divisibility
        // implies numeric order, and abstract poset indices are themselves a
        // linear extension.
        std::sort(elements.begin(), elements.end());
        for (std::size_t i = 1; i < elements.size(); ++i)
            if (elements[i] == elements[i - 1])
                throw DuplicateError("duplicate element " + int_to_string(elements[i]));
        elems_ = std::move(elements);
        int n = size();
        std::vector<std::pair<int, int>> covers;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (!amb_.leq(elems_[i], elems_[j])) continue;
                bool direct = true;
                for (int k = i + 1; k < j && direct; ++k)
                    if (amb_.leq(elems_[i], elems_[k]) && amb_.leq(elems_[k], elems_[j]))
                        direct = false;
                if (direct) covers.emplace_back(i, j);
            }
        std::vector<std::string> labels;
        labels.reserve(n);
        for (const Int& e : elems_) labels.push_back(int_to_string(e));
        induced_ = build_poset(n, covers, std::move(labels));

        f_elems_.reserve(n);
        for (const Int& e : elems_) f_elems_.push_back(f_.eval(amb_, e));
        f_meet_.assign(n, std::vector<Rat>(n));
        meet_in_s_.assign(n, std::vector<int>(n, -1));
        joins_available_ = amb_.has_joins();
        if (joins_available_) f_join_.assign(n, std::vector<Rat>(n));
        std::map<Int, int> index_of;
        for (int i = 0; i < n; ++i) index_of[elems_[i]] = i;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Int m = amb_.meet(elems_[i], elems_[j]);
                auto it = index_of.find(m);
                meet_in_s_[i][j] = meet_in_s_[j][i] = it == index_of.end() ? -1 : it->second;
                f_meet_[i][j] = f_meet_[j][i] = f_.eval(amb_, m);
                if (joins_available_) {
                    Rat fj = f_.eval(amb_, amb_.join(elems_[i], elems_[j]));
                    f_join_[i][j] = f_join_[j][i] = std::move(fj);
                }
            }
    }

    int size() const { return static_cast<int>(elems_.size()); }
    const AmbientLattice& ambient() const { return amb_; }
    const std::vector<Int>& elements() const { return elems_; }
    const Int& element(int i) const { return elems_[i]; }
    const Valuation& valuation() const { return f_; }
    const Poset& induced() const { return induced_; }
    bool joins_available() const { return joins_available_; }

    const Rat& f_at(int i) const { return f_elems_[i]; }
    const Rat& f_at_meet(int i, int j) const { return f_meet_[i][j]; }
    const Rat& f_at_join(int i, int j) const {
        if (!joins_available_) throw NoJoinError("ambient lattice provides no joins");
        return f_join_[i][j];
    }
    /// Index of x_i ^ x_j within S, or -1 when the meet falls outside S.
    int meet_index(int i, int j) const { return meet_in_s_[i][j]; }

    bool is_meet_closed() const {
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (meet_in_s_[i][j] < 0) return false;
        return true;
    }

    SemimultResult semimultiplicative_on_s() const {
        if (!joins_available_)
            throw NoJoinError("semimultiplicativity on S needs joins");
        SemimultResult res;
        res.tested_scope = "all pairs of S";
        for (int i = 0; i < size(); ++i)
            for (int j = i; j < size(); ++j)
                if (f_elems_[i] * f_elems_[j] != f_meet_[i][j] * f_join_[i][j]) {
                    res.ok = false;
                    res.witness = {elems_[i], elems_[j]};
                    return res;
                }
        return res;
    }

private:
    AmbientLattice amb_;
    std::vector<Int> elems_;
    Valuation f_;
    Poset induced_;
    bool joins_available_ = false;
    std::vector<Rat> f_elems_;
    std::vector<std::vector<Rat>> f_meet_, f_join_;
    std::vector<std::vector<int>> meet_in_s_;
};

}  // namespace latmat
