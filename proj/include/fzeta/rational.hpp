#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fzeta {

// Exact rational coefficients for index/word combinations. GMP keeps the
// binomial products that show up in shuffle expansions exact; nothing in
// this project ever rounds.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// C(n, k) as an exact integer; 0 outside 0 <= k <= n.
inline BigInt binom_exact(long n, long k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace fzeta
