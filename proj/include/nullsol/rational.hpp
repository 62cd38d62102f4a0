#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace nullsol {

/// Exact rational number. mpq_class keeps every value in lowest terms with a
/// positive denominator, which is the invariant the rest of the library
/// relies on for structural equality.
using Rational = mpq_class;
using Integer = mpz_class;

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

/// Accepts an optional sign followed by `uint` or `uint/uint`.
/// Returns nullopt on malformed text or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// q^e, exact.
Rational pow(const Rational& q, unsigned e);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// The rational of smallest denominator in the closed interval [lo, hi]
/// (ties broken by smallest magnitude). Requires lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Total order on rationals by height first: 0, 1, -1, 1/2, -1/2, 2, -2, ...
/// Height is max(|numerator|, denominator). Returns <0, 0, >0.
int canonical_compare(const Rational& a, const Rational& b);

/// Shorthand used by tests and fixtures.
inline Rational rat(long num, unsigned long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace nullsol
