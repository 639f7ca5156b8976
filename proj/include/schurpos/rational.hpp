#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace schurpos {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always stored normalized: positive denominator,
// gcd(|numerator|, denominator) == 1, so equality and sign tests are exact.
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& r) { return r.sign(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// den must be nonzero; the sign is carried by the numerator.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

// Parses "p" or "p/q" with an optional leading minus. No whitespace, no
// explicit '+', and q must be a positive digit string.
inline Rational parse_rational(std::string_view text) {
  auto fail = [text]() -> Rational {
    throw std::invalid_argument("bad rational literal: \"" + std::string(text) + "\"");
  };

  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }

  auto take_digits = [&rest]() -> std::string_view {
    size_t n = 0;
    while (n < rest.size() && rest[n] >= '0' && rest[n] <= '9') ++n;
    std::string_view digits = rest.substr(0, n);
    rest.remove_prefix(n);
    return digits;
  };

  std::string_view num_digits = take_digits();
  if (num_digits.empty()) return fail();

  BigInt num{std::string(num_digits)};
  BigInt den = 1;
  if (!rest.empty()) {
    if (rest.front() != '/') return fail();
    rest.remove_prefix(1);
    std::string_view den_digits = take_digits();
    if (den_digits.empty() || !rest.empty()) return fail();
    den = BigInt{std::string(den_digits)};
    if (den == 0) {
      throw std::invalid_argument("rational with zero denominator: \"" + std::string(text) + "\"");
    }
  }
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

inline BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// Standard binomial coefficient; 0 outside 0 <= k <= n.
inline BigInt binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial with negative upper index");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

// (t)_n = t (t+1) ... (t+n-1); the empty product is 1.
inline Rational rising_factorial(const Rational& t, int n) {
  if (n < 0) throw std::invalid_argument("rising factorial of negative length");
  Rational r = 1;
  for (int k = 0; k < n; ++k) r *= t + k;
  return r;
}

inline Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("rational_pow with negative exponent");
  Rational r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace schurpos
