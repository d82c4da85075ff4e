#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace latmat {

/// Arbitrary-precision integer. All arithmetic in the library is exact;
/// no floating point appears anywhere in the core.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept in canonical form
/// (gcd-reduced, positive denominator). Equality is structural.
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& a, const Int& b) {
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

inline std::string int_to_string(const Int& v) { return v.get_str(); }

inline Int int_from_string(const std::string& s) {
    Int v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw ParseError("bad integer literal: '" + s + "'");
    return v;
}

/// Renders "p" for integers, "p/q" otherwise.
inline std::string rat_to_string(const Rat& v) {
    return v.get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat v;
    if (s.empty() || mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("bad rational literal: '" + s + "'");
    if (v.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
    v.canonicalize();
    return v;
}

inline Rat rat_inverse(const Rat& v) {
    if (v == 0) throw ZeroValueError("division by zero rational");
    Rat r;
    mpq_inv(r.get_mpq_t(), v.get_mpq_t());
    return r;
}

/// Prime factorization as (prime, exponent) pairs, primes ascending.
using Factorization = std::vector<std::pair<Int, int>>;

/// Trial division. Intended for the element magnitudes this library works
/// with (counterexample sets, bounded random corpora); not a general-purpose
/// factoring routine.
inline Factorization factorize(Int v) {
    if (v <= 0) throw NonPositiveError("factorize requires a positive integer");
    Factorization out;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (divides(p, v)) {
            v /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    for (Int p = 3; p * p <= v; p += 2) strip(p);
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

/// Deterministic, platform-independent pseudo-random stream (splitmix64).
/// Seeded test corpora must reproduce byte-for-byte across machines, which
/// rules out <random> distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), unbiased by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw SizeError("empty range");
        std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Nonzero rational with numerator in [-bound, bound] and denominator in [1, bound].
    Rat nonzero_rational(long bound = 9) {
        long num = 0;
        while (num == 0) num = range(-bound, bound);
        Rat r(num, range(1, bound));
        r.canonicalize();
        return r;
    }

private:
    std::uint64_t state_;
};

}  // namespace latmat
