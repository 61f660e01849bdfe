#pragma once

#include <span>
#include <vector>

#include "plumb/error.hpp"
#include "plumb/rational.hpp"

namespace plumb {

/// value = e_1 - 1/(e_2 - 1/(... - 1/e_s)) with e_1 <= -1 and e_i <= -2 for i >= 2.
struct ContinuedFraction {
  Rational value;
  std::vector<Integer> terms;
};

/// Evaluates e_1 - 1/(e_2 - ...). Throws InputError on an empty list or a zero tail.
inline Rational evaluate_negative_cf(std::span<const Integer> terms) {
  if (terms.empty()) throw InputError("empty continued fraction");
  Rational acc = Rational(terms.back());
  for (auto i = terms.size() - 1; i-- > 0;) {
    if (acc == 0) throw InputError("continued fraction divides by zero");
    acc = Rational(terms[i]) - Rational(1) / acc;
  }
  return acc;
}

inline bool has_negative_cf_signs(std::span<const Integer> terms) {
  if (terms.empty() || terms.front() > -1) return false;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i] > -2) return false;
  return true;
}

/// Expansion of r < 0: integers give [r]; otherwise e_1 = floor(r) and recurse on -1/(r - e_1).
inline ContinuedFraction negative_cf(const Rational& r) {
  if (r >= 0) throw InputError("negative continued fraction needs r < 0, got " + to_string(r));
  ContinuedFraction cf{r, {}};
  Rational x = r;
  for (;;) {
    Integer head = floor(x);
    cf.terms.push_back(head);
    Rational frac = x - Rational(head);
    if (frac == 0) break;
    x = Rational(-1) / frac;
  }
  return cf;
}

/// Hirzebruch expansion alpha/omega = b_1 - 1/(b_2 - ...) with every b_i >= 2 (needs alpha > omega > 0).
inline std::vector<Integer> hirzebruch_cf(const Rational& r) {
  if (r <= 1) throw InputError("Hirzebruch continued fraction needs a value > 1, got " + to_string(r));
  std::vector<Integer> terms;
  Rational x = r;
  for (;;) {
    Integer head = ceil(x);
    terms.push_back(head);
    Rational gap = Rational(head) - x;
    if (gap == 0) break;
    x = Rational(1) / gap;
  }
  return terms;
}

inline Rational evaluate_hirzebruch_cf(std::span<const Integer> terms) {
  if (terms.empty()) throw InputError("empty continued fraction");
  Rational acc = Rational(terms.back());
  for (auto i = terms.size() - 1; i-- > 0;) acc = Rational(terms[i]) - Rational(1) / acc;
  return acc;
}

} // namespace plumb
