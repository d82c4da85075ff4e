#include <catch2/catch.hpp>

#include <latmat/lattice.hpp>

#include "support/oracles.hpp"

using namespace latmat;

TEST_CASE("divisor subposets") {
    Poset chain = divisor_subposet({1, 2, 4});
    REQUIRE(chain.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    Poset anti = divisor_subposet({2, 3});
    REQUIRE(anti.covers().empty());

    REQUIRE_THROWS_AS(divisor_subposet({2, 2}), DuplicateError);
    REQUIRE_THROWS_AS(divisor_subposet({0, 3}), NonPositiveError);
}

TEST_CASE("divisor subposet order agrees with divisibility") {
    Rng rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        std::set<Int> s;
        while (s.size() < 6) s.insert(Int(static_cast<long>(1 + rng.below(120))));
        std::vector<Int> elems(s.begin(), s.end());
        Poset p = divisor_subposet(elems);
        for (int i = 0; i < p.n(); ++i)
            for (int j = 0; j < p.n(); ++j)
                REQUIRE(p.leq(i, j) == (i == j || (elems[i] != elems[j] && divides(elems[i], elems[j]))));
    }
}

TEST_CASE("meet closure") {
    AmbientLattice div = AmbientLattice::divisor();
    REQUIRE(meet_closure(div, {2, 3}) == std::vector<Int>{1, 2, 3});
    REQUIRE(meet_closure(div, {6, 10, 15}) == std::vector<Int>{1, 2, 3, 5, 6, 10, 15});
    std::vector<Int> closed = {1, 2, 4, 8};
    REQUIRE(meet_closure(div, closed) == closed);
}

TEST_CASE("meet closure output is closed and minimal") {
    Rng rng(17);
    AmbientLattice div = AmbientLattice::divisor();
    for (int rep = 0; rep < 30; ++rep) {
        std::set<Int> in;
        while (in.size() < 4) in.insert(Int(static_cast<long>(2 + rng.below(400))));
        std::vector<Int> input(in.begin(), in.end());
        std::vector<Int> closed = meet_closure(div, input);
        REQUIRE(is_meet_closed(div, closed));
        for (const Int& added : closed) {
            if (in.count(added)) continue;
            std::vector<Int> without;
            for (const Int& v : closed)
                if (v != added) without.push_back(v);
            REQUIRE(!is_meet_closed(div, without));
        }
    }
}

TEST_CASE("gcd closedness checks") {
    REQUIRE(is_gcd_closed({1, 2, 3, 4, 5, 6, 10, 45, 180}));
    REQUIRE(!is_gcd_closed({2, 3}));
    REQUIRE(is_gcd_closed({3, 6, 12, 24}));
}

TEST_CASE("divisor lattice gcd lcm identity spot checks") {
    AmbientLattice div = AmbientLattice::divisor();
    Rng rng(23);
    for (int rep = 0; rep < 50; ++rep) {
        Int a(static_cast<long>(1 + rng.below(100000)));
        Int b(static_cast<long>(1 + rng.below(100000)));
        REQUIRE(div.meet(a, b) * div.join(a, b) == a * b);
    }
}

TEST_CASE("valuation evaluation") {
    AmbientLattice div = AmbientLattice::divisor();
    REQUIRE(Valuation::natural().eval(div, 42) == 42);
    REQUIRE(Valuation::power(2).eval(div, 6) == 36);
    REQUIRE(Valuation::power(0).eval(div, 17) == 1);
    REQUIRE(Valuation::reciprocal(Valuation::natural()).eval(div, 4) == Rat(1, 4));
    REQUIRE(Valuation::euler_phi().eval(div, 12) == 4);
    REQUIRE(Valuation::sigma().eval(div, 12) == 28);
    REQUIRE(Valuation::euler_phi().eval(div, 1) == 1);

    std::map<Int, Rat> tab = {{Int(1), Rat(1)}, {Int(2), Rat(0)}};
    REQUIRE_THROWS_AS(Valuation::table_divisor(tab).eval(div, 2), ZeroValueError);
    REQUIRE_THROWS_AS(Valuation::table_divisor(tab).eval(div, 5), UndefinedValueError);
    REQUIRE_THROWS_AS(Valuation::natural().eval(div, -3), NonPositiveError);
}

TEST_CASE("reciprocal of reciprocal collapses") {
    AmbientLattice div = AmbientLattice::divisor();
    Valuation f = Valuation::reciprocal(Valuation::reciprocal(Valuation::natural()));
    REQUIRE(f.eval(div, 7) == 7);
}

TEST_CASE("divisor-only valuations are rejected on abstract ambients") {
    Poset chain = build_poset(2, {{0, 1}});
    auto amb = AmbientLattice::from_meet_semilattice(chain);
    REQUIRE_THROWS_AS(Valuation::natural().eval(amb, 1), MismatchError);
    REQUIRE_THROWS_AS(Valuation::power(2).eval(amb, 1), MismatchError);
    REQUIRE_THROWS_AS(Valuation::euler_phi().eval(amb, 1), MismatchError);
    REQUIRE_THROWS_AS(
        Valuation::table_abstract({Rat(1), Rat(2)}).eval(AmbientLattice::divisor(), 1),
        MismatchError);
}

TEST_CASE("semimultiplicativity on the divisor lattice") {
    AmbientLattice div = AmbientLattice::divisor();
    REQUIRE(is_semimultiplicative(div, Valuation::natural(), SemimultScope::sample(200, 1)).ok);
    REQUIRE(is_semimultiplicative(div, Valuation::power(0), SemimultScope::sample(100, 2)).ok);
    REQUIRE(is_semimultiplicative(div, Valuation::euler_phi(), SemimultScope::sample(200, 3)).ok);
    REQUIRE_THROWS_AS(is_semimultiplicative(div, Valuation::natural(), SemimultScope::all()),
                      MismatchError);

    std::map<Int, Rat> tab = {
        {Int(1), Rat(1)}, {Int(2), Rat(2)}, {Int(3), Rat(3)}, {Int(6), Rat(5)}};
    SemimultResult r =
        semimultiplicative_on_pairs(div, Valuation::table_divisor(tab), {1, 2, 3, 6});
    REQUIRE(!r.ok);
    REQUIRE(r.witness == std::optional<std::pair<Int, Int>>({Int(2), Int(3)}));
}

TEST_CASE("f semimultiplicative iff 1/f") {
    Rng rng(31);
    AmbientLattice div = AmbientLattice::divisor();
    std::vector<Int> elems = {1, 2, 3, 4, 6, 12, 30};
    for (int rep = 0; rep < 25; ++rep) {
        Valuation f = oracle::random_multiplicative_for(elems, rng);
        Valuation rf = Valuation::reciprocal(f);
        REQUIRE(semimultiplicative_on_pairs(div, f, elems).ok ==
                semimultiplicative_on_pairs(div, rf, elems).ok);
    }
    // and for a non-semimultiplicative table
    std::map<Int, Rat> tab = {
        {Int(1), Rat(1)}, {Int(2), Rat(2)}, {Int(3), Rat(3)}, {Int(6), Rat(5)}};
    Valuation f = Valuation::table_divisor(tab);
    REQUIRE(semimultiplicative_on_pairs(div, f, {1, 2, 3, 6}).ok ==
            semimultiplicative_on_pairs(div, Valuation::reciprocal(f), {1, 2, 3, 6}).ok);
}

TEST_CASE("multiplicative valuations are semimultiplicative on sampled pairs") {
    Rng rng(57);
    std::vector<Int> elems = {1, 2, 3, 5, 8, 9, 15, 40, 360};
    AmbientLattice div = AmbientLattice::divisor();
    for (int rep = 0; rep < 20; ++rep) {
        Valuation f = oracle::random_multiplicative_for(elems, rng);
        REQUIRE(semimultiplicative_on_pairs(div, f, elems).ok);
    }
}

TEST_CASE("abstract lattice tables are validated") {
    Poset diamond = build_poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    auto amb = AmbientLattice::from_meet_semilattice(diamond);
    REQUIRE(amb.has_joins());
    REQUIRE(amb.meet(1, 2) == 0);
    REQUIRE(amb.join(1, 2) == 3);

    std::vector<std::vector<int>> bad_meet = {{0, 0, 0, 0},
                                              {0, 1, 1, 1},  // meet(1,2) wrong
                                              {0, 1, 2, 2},
                                              {0, 1, 2, 3}};
    REQUIRE_THROWS_AS(AmbientLattice::abstract_lattice(diamond, bad_meet, std::nullopt),
                      ShapeError);
}

TEST_CASE("meet semilattice without top has no join table") {
    Poset vee = build_poset(3, {{0, 1}, {0, 2}});
    auto amb = AmbientLattice::from_meet_semilattice(vee);
    REQUIRE(!amb.has_joins());
    REQUIRE_THROWS_AS(amb.join(1, 2), NoJoinError);
}

TEST_CASE("valued set ordering, validation, and caches") {
    ValuedSet vs(AmbientLattice::divisor(), {6, 1, 2, 3}, Valuation::natural());
    REQUIRE(vs.elements() == std::vector<Int>{1, 2, 3, 6});
    REQUIRE(vs.is_meet_closed());
    REQUIRE(vs.f_at(3) == 6);
    REQUIRE(vs.f_at_meet(1, 2) == 1);
    REQUIRE(vs.f_at_join(1, 2) == 6);
    REQUIRE(vs.meet_index(1, 2) == 0);
    REQUIRE(vs.induced().leq(1, 3));

    REQUIRE_THROWS_AS(ValuedSet(AmbientLattice::divisor(), {2, 2}, Valuation::natural()),
                      DuplicateError);
    ValuedSet open(AmbientLattice::divisor(), {2, 3}, Valuation::natural());
    REQUIRE(!open.is_meet_closed());
    REQUIRE(open.meet_index(0, 1) == -1);
    REQUIRE(open.f_at_meet(0, 1) == 1);  // gcd lies outside S, f still evaluable
}

TEST_CASE("valued set on an abstract ambient") {
    Poset five_o = build_poset(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    auto amb = AmbientLattice::from_meet_semilattice(five_o);
    std::vector<Rat> vals = {Rat(1), Rat(2), Rat(3), Rat(5), Rat(7)};
    ValuedSet vs(amb, {0, 1, 2, 3, 4}, Valuation::table_abstract(vals));
    REQUIRE(vs.is_meet_closed());
    REQUIRE(vs.f_at_meet(1, 2) == 1);
    REQUIRE(vs.f_at_join(1, 2) == 7);

    // table with a zero is rejected eagerly at construction
    std::vector<Rat> zero_vals = {Rat(1), Rat(0), Rat(3), Rat(5), Rat(7)};
    REQUIRE_THROWS_AS(ValuedSet(amb, {0, 1, 2, 3, 4}, Valuation::table_abstract(zero_vals)),
                      ZeroValueError);
}
