#ifndef BASEFREE_RATIONAL_HPP
#define BASEFREE_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "basefree/error.hpp"

namespace basefree {

// Exact arbitrary-precision rationals.  mpq_class keeps the canonical form we
// require: positive denominator, numerator and denominator coprime.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const Rational& a) { return a == 1; }

// Field-generic helpers; overloads for AlgebraicNumber live in
// number_field.hpp.  They exist because a field element may carry context
// (its number field) that a bare literal cannot supply.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_rational(const Rational&, const Rational& q) { return q; }

inline Rational inverse(const Rational& a) {
    if (is_zero(a)) throw structural_error("division by zero rational");
    return 1 / a;
}

inline Rational rational_pow(const Rational& a, unsigned long e) {
    Rational r(1), b = a;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::string to_string(const Rational& a) { return a.get_str(); }

// Accumulate the rational content of a coefficient stream: gcd of numerators
// over lcm of denominators.  Used to strip scalar growth during elimination.
inline void accumulate_content(const Rational& c, Integer& num_gcd, Integer& den_lcm) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
}

// sqrt of a non-negative integer if it is a perfect square.
inline std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (sgn(n) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline std::optional<long> perfect_square_root(long n) {
    auto r = integer_sqrt_exact(Integer(n));
    if (!r) return std::nullopt;
    return r->get_si();
}

}  // namespace basefree

#endif
