#include <catch2/catch.hpp>

#include <set>

#include <latmat/catalog.hpp>
#include <latmat/lattice.hpp>
#include <latmat/numtheory.hpp>

using namespace latmat;

TEST_CASE("catalog shape: unique labels, valid fixtures, sane figures") {
    const auto& cat = SemilatticeCatalog::instance();
    REQUIRE(cat.entries().size() == 88);
    std::set<std::string> labels;
    for (const auto& e : cat.entries()) {
        REQUIRE(labels.insert(e.label).second);
        REQUIRE(e.fixture.is_meet_semilattice());
        REQUIRE(static_cast<int>(e.mu_vector.size()) == e.fixture.n());
        REQUIRE(e.figure >= 1);
        REQUIRE(e.figure <= 8);
    }
    // 47 seven-element classes across the later figures, pairwise distinct
    std::set<std::string> seven;
    for (const auto& e : cat.entries())
        if (e.figure >= 4) seven.insert(canonicalize(e.fixture).bytes);
    REQUIRE(seven.size() == 47);
}

TEST_CASE("every diagram mobius vector verifies") {
    for (const auto& label : SemilatticeCatalog::instance().labels())
        REQUIRE(verify_figure_mobius(label));
    REQUIRE_THROWS_AS(verify_figure_mobius("no_such_class"), UnknownLabelError);
}

TEST_CASE("named spot values") {
    const auto& cat = SemilatticeCatalog::instance();
    const CatalogEntry* two_a = cat.find("2_A");
    REQUIRE(two_a);
    REQUIRE(two_a->mu_vector == std::vector<Rat>{Rat(-1), Rat(1)});

    const CatalogEntry* seven_i = cat.find("7_I");
    REQUIRE(seven_i);
    REQUIRE(seven_i->mu_vector ==
            std::vector<Rat>{Rat(4), Rat(-1), Rat(-1), Rat(-1), Rat(-1), Rat(-1), Rat(1)});

    // parametric family: bottom value n-3
    REQUIRE(SemilatticeCatalog::s_n2n_mu(7)[0] == 4);
    REQUIRE(mobius_vector(SemilatticeCatalog::s_n2n_fixture(7), 6)[0] == 4);
}

TEST_CASE("aliased classes are isomorphic across figures") {
    const auto& cat = SemilatticeCatalog::instance();
    auto same = [&](const char* a, const char* b) {
        return canonicalize(cat.find(a)->fixture) == canonicalize(cat.find(b)->fixture);
    };
    REQUIRE(same("S_{1,2}", "2_A"));
    REQUIRE(same("S_{2,4}", "4_E"));
    REQUIRE(same("S_{3,5}", "5_O"));
    REQUIRE(same("S_{3,6}", "6_F"));
    REQUIRE(same("S_{4,6}", "6_G"));
    REQUIRE(same("S_{3,7}", "7_F"));
    REQUIRE(same("S_{4,7}^{(1)}", "7_G"));
    REQUIRE(same("S_{4,7}^{(2)}", "7_H"));
    REQUIRE(same("S_{5,7}", "7_I"));
}

TEST_CASE("classification") {
    REQUIRE(classify(divisor_subposet(hong_set())) == std::optional<std::string>("S_{3,8}"));
    REQUIRE(classify(divisor_subposet({1, 2, 3, 5, 30})) == std::optional<std::string>("5_O"));
    REQUIRE(classify(divisor_subposet({1, 2, 3, 6})) == std::optional<std::string>("4_E"));

    // a 7-chain is constructible with single covers only, hence not listed
    std::vector<std::pair<int, int>> chain;
    for (int i = 0; i + 1 < 7; ++i) chain.emplace_back(i, i + 1);
    REQUIRE(!classify(build_poset(7, chain)));

    // 9 elements are beyond the catalog
    REQUIRE(!classify(divisor_subposet(hws_set())));
}

TEST_CASE("classification is label-preference stable") {
    // classes present in both naming schemes resolve to the letter name
    const auto& cat = SemilatticeCatalog::instance();
    REQUIRE(cat.classify(cat.find("S_{3,5}")->fixture) == std::optional<std::string>("5_O"));
    REQUIRE(cat.classify(cat.find("S_{3,8}")->fixture) == std::optional<std::string>("S_{3,8}"));
}
