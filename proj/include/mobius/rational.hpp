#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mobius/errors.hpp"

namespace mobius {

// Exact coefficient ring. GMP keeps mpq_class canonical (positive
// denominator, gcd 1) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// num/den reduced to lowest terms.
inline Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  auto valid = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && part[0] == '-') i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false))
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  Rational r{Integer(num), Integer(den)};
  if (r.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

inline Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace mobius
