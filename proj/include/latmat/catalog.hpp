#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "catalog_data.hpp"
#include "incidence.hpp"
#include "poset.hpp"

namespace latmat {

struct CatalogEntry {
    std::string label;
    int figure = 0;
    Poset fixture;
    std::vector<Rat> mu_vector;  // expected mu(x_i, x_n), x_n last
};

/// The named meet-semilattice classes of the class diagrams, loaded from the
/// embedded table and checked lazily by verify_figure_mobius. Several
/// classes appear both under an S_{k,n} name and a per-size letter name
/// (e.g. S_{3,5} and 5_O are the same class up to isomorphism); classify
/// prefers the per-size letter name and falls back to the S_{k,n} one.
class SemilatticeCatalog {
public:
    static const SemilatticeCatalog& instance() {
        static SemilatticeCatalog cat;
        return cat;
    }

    const std::vector<CatalogEntry>& entries() const { return entries_; }

    const CatalogEntry* find(const std::string& label) const {
        auto it = by_label_.find(label);
        return it == by_label_.end() ? nullptr : &entries_[it->second];
    }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        out.reserve(entries_.size() + 1);
        for (const auto& e : entries_) out.push_back(e.label);
        out.push_back(kParametricLabel);
        return out;
    }

    /// Label of the unique catalog class isomorphic to p, if any.
    std::optional<std::string> classify(const Poset& p) const {
        if (p.n() > 8) return std::nullopt;
        auto it = classify_.find(canonicalize(p));
        if (it == classify_.end()) return std::nullopt;
        return it->second;
    }

    /// Recomputes mu(x_i, x_n) on the fixture and compares with the stored
    /// diagram vector. The parametric S_{n-2,n} family is verified for
    /// n = 3..8 (bottom value n-3, covers -1, top 1).
    bool verify_figure_mobius(const std::string& label) const {
        if (label == kParametricLabel) {
            for (int n = 3; n <= 8; ++n)
                if (mobius_vector(s_n2n_fixture(n), n - 1) != s_n2n_mu(n)) return false;
            return true;
        }
        const CatalogEntry* e = find(label);
        if (!e) throw UnknownLabelError("no catalog class named '" + label + "'");
        return mobius_vector(e->fixture, e->fixture.n() - 1) == e->mu_vector;
    }

    /// x_1-set of n-1 elements plus a top: bottom, n-2 atoms, one maximum.
    static Poset s_n2n_fixture(int n) {
        if (n < 3) throw SizeError("S_{n-2,n} needs n >= 3");
        std::vector<std::pair<int, int>> covers;
        for (int a = 1; a + 1 < n; ++a) {
            covers.emplace_back(0, a);
            covers.emplace_back(a, n - 1);
        }
        return build_poset(n, covers);
    }

    static std::vector<Rat> s_n2n_mu(int n) {
        std::vector<Rat> mu(n, Rat(-1));
        mu[0] = n - 3;
        mu[n - 1] = 1;
        return mu;
    }

    static constexpr const char* kParametricLabel = "S_{n-2,n}";

private:
    SemilatticeCatalog() {
        for (const auto& raw : detail::kRawCatalog) {
            CatalogEntry e;
            e.label = raw.label;
            e.figure = raw.figure;
            std::vector<std::pair<int, int>> covers;
            std::istringstream cs(raw.covers);
            std::string tok;
            while (cs >> tok) {
                auto lt = tok.find('<');
                covers.emplace_back(std::stoi(tok.substr(0, lt)), std::stoi(tok.substr(lt + 1)));
            }
            e.fixture = build_poset(raw.n, covers);
            std::istringstream ms(raw.mobius);
            long v;
            while (ms >> v) e.mu_vector.push_back(Rat(v));
            by_label_.emplace(e.label, entries_.size());
            entries_.push_back(std::move(e));
        }
        // letter names first so classify prefers them over S_{k,n} aliases
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i].figure >= 2)
                classify_.emplace(canonicalize(entries_[i].fixture), entries_[i].label);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i].figure == 1)
                classify_.emplace(canonicalize(entries_[i].fixture), entries_[i].label);
    }

    std::vector<CatalogEntry> entries_;
    std::map<std::string, std::size_t> by_label_;
    std::map<CanonicalKey, std::string> classify_;
};

inline std::optional<std::string> classify(const Poset& p) {
    return SemilatticeCatalog::instance().classify(p);
}

inline bool verify_figure_mobius(const std::string& label) {
    return SemilatticeCatalog::instance().verify_figure_mobius(label);
}

}  // namespace latmat
