#pragma once

#include <gmpxx.h>

#include <string>

#include "motifalg/errors.hpp"

namespace motifalg {

// Exact arithmetic only; no floating point anywhere in the library.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long long num, long long den) {
    if (den == 0)
        throw InvalidRange("rational with zero denominator");
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_nonnegative_integer(const Rational& q) {
    return is_integer(q) && q >= 0;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// binomial(x, k) for integer x >= 0
inline BigInt binomial(const BigInt& x, int k) {
    if (k < 0)
        return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < k; ++i) {
        num *= x - i;
        den *= i + 1;
    }
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw DivisionInexact("binomial coefficient division not exact");
    return q;
}

} // namespace motifalg
