#ifndef QJF_RATIONAL_HPP
#define QJF_RATIONAL_HPP

// Arbitrary-precision rational scalars and small helpers on top of GMP.
//
// Every coefficient in the exact modules is a Rat (mpq_class): canonical
// form, lowest terms, positive denominator. Exponents of truncated series
// are kept as integer numerators over a per-series denominator; the helpers
// here convert between the two views.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "qjf/errors.hpp"

namespace qjf {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_ll(long long v) {
    Int z;
    mpz_set_si(z.get_mpz_t(), v); // LP64: long long and long coincide
    return z;
}

inline Rat rat(long long num, long long den = 1) {
    Rat r{int_ll(num), int_ll(den)};
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" in base 10.
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("not a rational: '" + s + "'");
    if (sgn(r.get_den()) <= 0) throw ParseError("zero or negative denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline long long to_ll(const Int& z) {
    if (!z.fits_slong_p()) throw Error("integer out of machine range: " + z.get_str());
    return z.get_si();
}

inline long long ll_gcd(long long a, long long b) { return std::gcd(a, b); }

inline long long ll_lcm(long long a, long long b) {
    Int l = lcm(int_ll(a), int_ll(b));
    return to_ll(l);
}

// Numerator of r on the grid (1/den)Z; throws if r is not on that grid.
inline long long on_grid(const Rat& r, long long den) {
    Rat scaled = r * rat(den);
    if (!is_integer(scaled)) throw GridMismatch("exponent " + rat_str(r) + " not on 1/" + std::to_string(den) + " grid");
    return to_ll(scaled.get_num());
}

inline double to_double(const Rat& r) { return r.get_d(); }

namespace detail {

// All integers x with (x + t)^2 < bound, as a closed interval [lo, hi]
// (returns false when empty). Double estimates seed the endpoints; exact
// rational comparisons fix them up, so the interval is provably correct.
inline bool exact_range(const Rat& t, const Rat& bound, long long& lo, long long& hi) {
    if (bound <= 0) return false;
    double c = -to_double(t);
    double w = std::sqrt(to_double(bound));
    lo = static_cast<long long>(std::floor(c - w)) - 2;
    hi = static_cast<long long>(std::ceil(c + w)) + 2;
    auto ok = [&](long long x) {
        Rat d = rat(x) + t;
        return d * d < bound;
    };
    while (lo <= hi && !ok(lo)) ++lo;
    while (hi >= lo && !ok(hi)) --hi;
    if (lo > hi) return false;
    while (ok(lo - 1)) --lo;
    while (ok(hi + 1)) ++hi;
    return true;
}

} // namespace detail

} // namespace qjf

#endif
