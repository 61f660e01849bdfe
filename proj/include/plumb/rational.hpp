#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "plumb/error.hpp"

namespace plumb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline Integer floor(const Rational& r) {
  Integer n = num(r);
  Integer d = den(r);
  Integer q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

inline Integer ceil(const Rational& r) { return -floor(-r); }

/// Narrow an integer-valued rational; throws InputError if it is not integral or does not fit.
inline std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw InputError("expected an integer, got a fraction");
  Integer n = num(r);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw InputError("integer out of range");
  return static_cast<std::int64_t>(n);
}

/// "p" for integers, "p/q" otherwise, always in lowest terms.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

/// Accepts `[-]digits` or `[-]digits/digits`.
inline bool try_parse_rational(std::string_view text, Rational& out) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view p = body.substr(0, slash);
  std::string_view q = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(p) || !digits(q)) return false;
  Integer pn{std::string(p)};
  Integer qn{std::string(q)};
  if (qn == 0) return false;
  out = Rational(negative ? Integer(-pn) : pn, qn);
  return true;
}

inline Rational parse_rational(std::string_view text) {
  Rational r;
  if (!try_parse_rational(text, r)) throw InputError("not a rational number: '" + std::string(text) + "'");
  return r;
}

} // namespace plumb
