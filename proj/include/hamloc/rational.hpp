#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hamloc {

/// Exact rational; GMP keeps every value in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonical "p/q" rendering; integers render without a denominator.
std::string format_rational(const Rational& q);

/// Accepts "p", "-p" or "p/q" (q != 0). Throws Error{Parse}.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// C(n, k) with the combinatorial convention C(n, k) = 0 outside 0 <= k <= n.
BigInt binomial(long n, long k);

}  // namespace hamloc
