#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "poset.hpp"

namespace latmat {

/// Canonical encoding of a poset up to isomorphism: two posets have equal
/// keys iff they are order-isomorphic.
struct CanonicalKey {
    std::string bytes;

    bool operator==(const CanonicalKey& o) const { return bytes == o.bytes; }
    bool operator!=(const CanonicalKey& o) const { return bytes != o.bytes; }
    bool operator<(const CanonicalKey& o) const { return bytes < o.bytes; }

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out;
        for (unsigned char c : bytes) {
            out.push_back(digits[c >> 4]);
            out.push_back(digits[c & 15]);
        }
        return out;
    }
};

namespace detail {

/// Branch-and-bound minimization of the column-major strict-upper-triangle
/// bit matrix over all linear extensions. Column j is fully determined the
/// moment position j is assigned, so prefix comparison prunes exactly.
/// Candidates with identical up- and down-sets are interchangeable by an
/// automorphism; only the first is explored.
class Canonicalizer {
public:
    explicit Canonicalizer(const Poset& p) : p_(p), n_(p.n()) {}

    std::vector<std::uint16_t> run() {
        best_.assign(n_, kUnknown);
        placed_.clear();
        placed_mask_ = Bitset(n_);
        dfs(0);
        return best_;
    }

private:
    static constexpr std::uint16_t kUnknown = 0xffff;

    void dfs(int depth) {
        if (depth == n_) return;
        std::vector<int> cands;
        for (int i = 0; i < n_; ++i) {
            if (placed_mask_.test(i)) continue;
            Bitset strictly_below = p_.down_set(i);
            strictly_below.reset(i);
            if (!strictly_below.subset_of(placed_mask_)) continue;
            bool dup = false;
            for (int prev : cands)
                if (p_.up_set(prev) == p_.up_set(i) && p_.down_set(prev) == p_.down_set(i)) {
                    dup = true;
                    break;
                }
            if (!dup) cands.push_back(i);
        }
        std::vector<std::pair<std::uint16_t, int>> scored;
        scored.reserve(cands.size());
        for (int i : cands) scored.emplace_back(column_bits(i), i);
        std::sort(scored.begin(), scored.end());
        for (auto [col, i] : scored) {
            if (best_[depth] != kUnknown && col > best_[depth]) break;
            if (best_[depth] == kUnknown || col < best_[depth]) {
                best_[depth] = col;
                for (int k = depth + 1; k < n_; ++k) best_[k] = kUnknown;
            }
            placed_.push_back(i);
            placed_mask_.set(i);
            dfs(depth + 1);
            placed_mask_.reset(i);
            placed_.pop_back();
        }
    }

    std::uint16_t column_bits(int cand) const {
        std::uint16_t col = 0;
        for (std::size_t k = 0; k < placed_.size(); ++k)
            if (p_.leq(placed_[k], cand)) col |= std::uint16_t(1) << k;
        return col;
    }

    const Poset& p_;
    int n_;
    std::vector<std::uint16_t> best_;
    std::vector<int> placed_;
    Bitset placed_mask_;
};

}  // namespace detail

/// Minimizes the order-relation bitstring over relabelings. Exponential in
/// the worst case, hence the size bound; everything in this project stays
/// well under it.
inline CanonicalKey canonicalize(const Poset& p, int bound = 10) {
    if (p.n() > bound || p.n() > 16) throw SizeError("poset too large to canonicalize");
    std::vector<std::uint16_t> cols = detail::Canonicalizer(p).run();
    CanonicalKey key;
    key.bytes.push_back(static_cast<char>(p.n()));
    for (std::uint16_t c : cols) {
        key.bytes.push_back(static_cast<char>(c & 0xff));
        key.bytes.push_back(static_cast<char>(c >> 8));
    }
    return key;
}

/// Rebuilds the poset a key encodes; canonical_form(p) is the same labeled
/// poset for every member of p's isomorphism class.
inline Poset poset_from_canonical_key(const CanonicalKey& key) {
    int n = static_cast<unsigned char>(key.bytes.at(0));
    std::vector<Bitset> up(n, Bitset(n));
    for (int j = 0; j < n; ++j) {
        up[j].set(j);
        std::uint16_t col = static_cast<unsigned char>(key.bytes.at(1 + 2 * j));
        col |= static_cast<std::uint16_t>(static_cast<unsigned char>(key.bytes.at(2 + 2 * j)))
               << 8;
        for (int i = 0; i < j; ++i)
            if (col >> i & 1) up[i].set(j);
    }
    return Poset::from_closed_up(n, std::move(up));
}

inline Poset canonical_form(const Poset& p, int bound = 10) {
    return poset_from_canonical_key(canonicalize(p, bound));
}

}  // namespace latmat
