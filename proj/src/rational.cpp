#include "nullsol/rational.hpp"

#include <cctype>

namespace nullsol {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  Rational q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

Rational pow(const Rational& q, unsigned e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  return r;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

namespace {

// Stern-Brocot descent for 0 < lo <= hi.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
  Integer c = ceil(lo);
  if (Rational(c) <= hi) return Rational(c);
  Integer n = floor(lo);
  Rational a = lo - n;
  Rational b = hi - n;
  // 0 < a <= b < 1, and 1/b <= 1/a.
  Rational inner = simplest_positive(Rational(1) / b, Rational(1) / a);
  Rational r = Rational(n) + Rational(1) / inner;
  r.canonicalize();
  return r;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (lo > 0) return simplest_positive(lo, hi);
  return -simplest_positive(-hi, -lo);
}

int canonical_compare(const Rational& a, const Rational& b) {
  auto height = [](const Rational& q) {
    Integer num = abs(q.get_num());
    return num > q.get_den() ? num : Integer(q.get_den());
  };
  bool az = sgn(a) == 0;
  bool bz = sgn(b) == 0;
  if (az || bz) return az == bz ? 0 : (az ? -1 : 1);
  int c = cmp(height(a), height(b));
  if (c != 0) return c;
  c = cmp(Rational(abs(a)), Rational(abs(b)));
  if (c != 0) return c;
  // positive before negative
  if (sgn(a) == sgn(b)) return 0;
  return sgn(a) > 0 ? -1 : 1;
}

}  // namespace nullsol
