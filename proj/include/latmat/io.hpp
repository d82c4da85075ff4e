#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "invertibility.hpp"
#include "lattice.hpp"
#include "matrix.hpp"
#include "numtheory.hpp"
#include "poset.hpp"

namespace latmat {

using Json = nlohmann::json;

// Integers and rationals travel as strings to preserve arbitrary precision.

inline Json poset_to_json(const Poset& p) {
    Json covers = Json::array();
    for (auto [a, b] : p.covers()) covers.push_back({a, b});
    Json out{{"n", p.n()}, {"covers", covers}};
    if (!p.labels().empty()) out["labels"] = p.labels();
    return out;
}

inline Poset poset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
        throw ParseError("poset JSON needs fields 'n' and 'covers'");
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw ParseError("cover pairs must be [i, j]");
        covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return build_poset(j.at("n").get<int>(), covers, std::move(labels));
}

inline Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

inline RationalMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix JSON needs 'rows', 'cols', 'entries'");
    RationalMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const Json& e = j.at("entries");
    if (static_cast<int>(e.size()) != m.rows()) throw ParseError("entry row count mismatch");
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(e.at(i).size()) != m.cols())
            throw ParseError("entry column count mismatch");
        for (int jj = 0; jj < m.cols(); ++jj)
            m.at(i, jj) = rat_from_string(e.at(i).at(jj).get<std::string>());
    }
    return m;
}

inline Json valuation_to_json(const Valuation& f) {
    switch (f.kind()) {
        case Valuation::Kind::Natural:
            return "N";
        case Valuation::Kind::Phi:
            return "phi";
        case Valuation::Kind::Sigma:
            return "sigma";
        case Valuation::Kind::Power:
            return Json{{"power", f.exponent()}};
        case Valuation::Kind::Reciprocal:
            if (f.inner().kind() == Valuation::Kind::Natural) return "1/N";
            return Json{{"reciprocal", valuation_to_json(f.inner())}};
        case Valuation::Kind::Multiplicative: {
            Json tab = Json::object();
            for (const auto& [pk, v] : f.prime_power_table())
                tab[int_to_string(pk.first)][std::to_string(pk.second)] = rat_to_string(v);
            return Json{{"multiplicative", tab}};
        }
        case Valuation::Kind::TableDivisor: {
            Json tab = Json::object();
            for (const auto& [k, v] : f.divisor_table()) tab[int_to_string(k)] = rat_to_string(v);
            return Json{{"table", tab}};
        }
        case Valuation::Kind::TableAbstract: {
            Json arr = Json::array();
            for (const Rat& v : f.abstract_table()) arr.push_back(rat_to_string(v));
            return arr;
        }
    }
    throw Error("unreachable");
}

inline Valuation valuation_from_json(const Json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "N") return Valuation::natural();
        if (s == "1/N") return Valuation::reciprocal(Valuation::natural());
        if (s == "phi") return Valuation::euler_phi();
        if (s == "sigma") return Valuation::sigma();
        throw ParseError("unknown valuation name '" + s + "'");
    }
    if (j.is_array()) {
        std::vector<Rat> vals;
        for (const auto& v : j) vals.push_back(rat_from_string(v.get<std::string>()));
        return Valuation::table_abstract(std::move(vals));
    }
    if (j.is_object()) {
        if (j.contains("power")) return Valuation::power(j.at("power").get<int>());
        if (j.contains("reciprocal"))
            return Valuation::reciprocal(valuation_from_json(j.at("reciprocal")));
        if (j.contains("table")) {
            std::map<Int, Rat> tab;
            for (auto& [k, v] : j.at("table").items())
                tab[int_from_string(k)] = rat_from_string(v.get<std::string>());
            return Valuation::table_divisor(std::move(tab));
        }
        if (j.contains("multiplicative")) {
            std::map<std::pair<Int, int>, Rat> tab;
            for (auto& [p, exps] : j.at("multiplicative").items())
                for (auto& [e, v] : exps.items())
                    tab[{int_from_string(p), std::stoi(e)}] = rat_from_string(v.get<std::string>());
            return Valuation::multiplicative(std::move(tab));
        }
    }
    throw ParseError("unrecognized valuation JSON");
}

inline Json valued_set_to_json(const ValuedSet& vs) {
    Json elems = Json::array();
    for (const Int& e : vs.elements()) elems.push_back(int_to_string(e));
    Json out{{"elements", elems}, {"f", valuation_to_json(vs.valuation())}};
    if (vs.ambient().is_divisor()) {
        out["ambient"] = "divisor";
    } else {
        out["ambient"] = "abstract";
        const Poset& p = vs.ambient().poset();
        out["poset"] = poset_to_json(p);
        Json meet = Json::array(), join = Json::array();
        for (int i = 0; i < p.n(); ++i) {
            Json mrow = Json::array(), jrow = Json::array();
            for (int jj = 0; jj < p.n(); ++jj) {
                mrow.push_back(static_cast<long>(vs.ambient().meet(i, jj).get_si()));
                if (vs.ambient().has_joins())
                    jrow.push_back(static_cast<long>(vs.ambient().join(i, jj).get_si()));
            }
            meet.push_back(std::move(mrow));
            if (vs.ambient().has_joins()) join.push_back(std::move(jrow));
        }
        out["meet"] = meet;
        if (vs.ambient().has_joins()) out["join"] = join;
    }
    return out;
}

inline ValuedSet valued_set_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ambient") || !j.contains("elements") || !j.contains("f"))
        throw ParseError("valued set JSON needs 'ambient', 'elements', 'f'");
    std::vector<Int> elems;
    for (const auto& e : j.at("elements")) {
        if (e.is_string())
            elems.push_back(int_from_string(e.get<std::string>()));
        else
            elems.push_back(Int(e.get<long>()));
    }
    Valuation f = valuation_from_json(j.at("f"));
    std::string kind = j.at("ambient").get<std::string>();
    if (kind == "divisor")
        return ValuedSet(AmbientLattice::divisor(), std::move(elems), std::move(f));
    if (kind != "abstract") throw ParseError("ambient must be 'divisor' or 'abstract'");
    Poset p = poset_from_json(j.at("poset"));
    auto table = [&](const char* key) {
        return j.at(key).get<std::vector<std::vector<int>>>();
    };
    std::optional<std::vector<std::vector<int>>> join;
    if (j.contains("join")) join = table("join");
    AmbientLattice amb =
        AmbientLattice::abstract_lattice(std::move(p), table("meet"), std::move(join));
    return ValuedSet(std::move(amb), std::move(elems), std::move(f));
}

inline Json report_to_json(const InvertibilityReport& rep) {
    Json steps = Json::array();
    for (const auto& s : rep.steps) {
        steps.push_back(Json{{"i", s.index},
                             {"m", s.m},
                             {"covered", s.covered},
                             {"c", rat_to_string(s.condition_value)},
                             {"passed", s.passed}});
    }
    Json out{{"verdict", rep.verdict == Verdict::Invertible ? "invertible" : "singular"},
             {"det_core", rat_to_string(rep.det_core)},
             {"scope", rep.scope == ReportScope::JoinAndMeet ? "join+meet" : "meet-only"},
             {"steps", steps}};
    if (rep.first_failure) out["first_failure"] = *rep.first_failure;
    return out;
}

inline Json counterexample_report_to_json(const CounterexampleReport& rep) {
    Json out{{"gcd_closed", rep.gcd_closed},
             {"det", rat_to_string(rep.det)},
             {"singular", rep.singular}};
    out["class"] = rep.class_label ? Json(*rep.class_label) : Json(nullptr);
    if (rep.report) out["report"] = report_to_json(*rep.report);
    return out;
}

inline Json catalog_to_json() {
    const auto& cat = SemilatticeCatalog::instance();
    Json entries = Json::array();
    for (const auto& e : cat.entries()) {
        Json covers = Json::array();
        for (auto [a, b] : e.fixture.covers()) covers.push_back({a, b});
        Json mu = Json::array();
        for (const Rat& v : e.mu_vector) mu.push_back(rat_to_string(v));
        entries.push_back(Json{{"label", e.label},
                               {"figure", e.figure},
                               {"n", e.fixture.n()},
                               {"covers", covers},
                               {"mobius", mu}});
    }
    return Json{{"entries", entries}};
}

}  // namespace latmat
