#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "plumb/continued_fraction.hpp"
#include "plumb/graph.hpp"
#include "plumb/lattice.hpp"
#include "plumb/laufer.hpp"

namespace plumb {

struct SeifertLeg {
  Integer alpha;
  Integer omega;

  friend bool operator==(const SeifertLeg& a, const SeifertLeg& b) { return a.alpha == b.alpha && a.omega == b.omega; }
  friend bool operator<(const SeifertLeg& a, const SeifertLeg& b) {
    return a.alpha != b.alpha ? a.alpha < b.alpha : a.omega < b.omega;
  }
};

/// Central weight e0 and legs (alpha_i, omega_i) with 0 < omega_i < alpha_i coprime.
/// Legs are kept sorted.
struct SeifertData {
  Integer e0;
  std::vector<SeifertLeg> legs;

  std::size_t nu() const noexcept { return legs.size(); }
  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

inline std::string to_string(const SeifertData& sd) {
  std::string s = "e0=" + sd.e0.str() + " legs=";
  for (std::size_t i = 0; i < sd.legs.size(); ++i)
    s += (i ? "," : "") + std::string("(") + sd.legs[i].alpha.str() + "," + sd.legs[i].omega.str() + ")";
  return s;
}

inline void validate(const SeifertData& sd) {
  if (sd.nu() < 3) throw InputError("Seifert star data needs at least three legs");
  for (const auto& leg : sd.legs) {
    if (!(leg.omega > 0 && leg.omega < leg.alpha))
      throw InputError("Seifert invariants need 0 < omega < alpha");
    if (boost::multiprecision::gcd(leg.alpha, leg.omega) != 1)
      throw InputError("Seifert invariants need gcd(alpha, omega) = 1");
  }
}

/// The unique vertex of valency >= 3 when g is a connected tree with exactly one.
inline std::optional<VertexId> star_center(const PlumbingGraph& g) {
  if (!g.is_connected()) return std::nullopt;
  auto n = nodes(g);
  if (n.size() != 1) return std::nullopt;
  return n.front();
}

/// Leg weights read outwards from the centre, one list per leg.
inline std::vector<std::vector<Rational>> star_legs(const PlumbingGraph& g, const VertexId& center) {
  std::vector<std::vector<Rational>> legs;
  for (const auto& first : g.neighbors(center)) {
    std::vector<Rational> leg;
    VertexId prev = center;
    VertexId cur = first;
    for (;;) {
      leg.push_back(g.weight(cur));
      std::optional<VertexId> next;
      for (const auto& u : g.neighbors(cur))
        if (u != prev) next = u;
      if (!next) break;
      prev = cur;
      cur = *next;
    }
    legs.push_back(std::move(leg));
  }
  return legs;
}

inline SeifertData star_to_seifert(const PlumbingGraph& g) {
  auto center = star_center(g);
  if (!center) throw InputError("graph is not star-shaped (needs exactly one vertex of valency >= 3)");
  const auto& w0 = g.weight(*center);
  if (!is_integer(w0)) throw InputError("central weight must be an integer");
  SeifertData sd{num(w0), {}};
  for (const auto& leg : star_legs(g, *center)) {
    std::vector<Integer> b;
    for (const auto& w : leg) {
      if (!is_integer(w) || w > -2)
        throw InputError("leg weights must be integers <= -2; minimize the graph first");
      b.push_back(-num(w));
    }
    Rational ratio = evaluate_hirzebruch_cf(b);
    sd.legs.push_back({num(ratio), den(ratio)});
  }
  std::sort(sd.legs.begin(), sd.legs.end());
  return sd;
}

/// Centre `v0`; leg i (1-based, sorted order) has vertices `v<i>_<j>` outwards.
inline PlumbingGraph seifert_to_graph(const SeifertData& sd) {
  validate(sd);
  std::map<VertexId, Rational> weights{{"v0", Rational(sd.e0)}};
  std::vector<Edge> edges;
  auto legs = sd.legs;
  std::sort(legs.begin(), legs.end());
  for (std::size_t i = 0; i < legs.size(); ++i) {
    auto b = hirzebruch_cf(Rational(legs[i].alpha, legs[i].omega));
    VertexId prev = "v0";
    for (std::size_t j = 0; j < b.size(); ++j) {
      VertexId id = "v" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      weights.emplace(id, Rational(-b[j]));
      edges.push_back(make_edge(prev, id));
      prev = id;
    }
  }
  return PlumbingGraph::build(std::move(weights), edges);
}

/// e = e0 + sum omega_i / alpha_i.
inline Rational orbifold_euler(const SeifertData& sd) {
  Rational e(sd.e0);
  for (const auto& leg : sd.legs) e += Rational(leg.omega, leg.alpha);
  return e;
}

struct PinkhamVerdict {
  bool nonrational;
  /// Smallest l >= 0 with sum floor(-l omega_i / alpha_i) <= l e0 - 2.
  std::optional<Integer> witness;
  /// Scan limit ceil((nu - 2) / |e|); no witness can exceed it.
  Integer bound;
};

/// The sum of fractional parts lost by the floors is below nu, so a witness
/// needs 2 + l|e| < nu; scanning 0 <= l <= ceil((nu - 2)/|e|) is complete.
inline Integer pinkham_bound(const SeifertData& sd) {
  Rational e = orbifold_euler(sd);
  if (e >= 0) throw InputError("Pinkham's criterion needs e < 0");
  if (sd.nu() <= 2) return 0;
  return ceil(Rational(static_cast<long>(sd.nu()) - 2) / -e);
}

inline bool pinkham_holds_at(const SeifertData& sd, const Integer& l) {
  Integer lhs = 0;
  for (const auto& leg : sd.legs) lhs += floor(Rational(-l * leg.omega, leg.alpha));
  return lhs <= l * sd.e0 - 2;
}

inline PinkhamVerdict pinkham_nonrational(const SeifertData& sd) {
  PinkhamVerdict out{false, std::nullopt, pinkham_bound(sd)};
  for (Integer l = 0; l <= out.bound; ++l)
    if (pinkham_holds_at(sd, l)) {
      out.nonrational = true;
      out.witness = l;
      break;
    }
  return out;
}

struct RealizableWitness {
  Integer m;
  Integer a;
  /// Input positions placed in the x, y and z slots.
  std::array<int, 3> order;
};

/// (x, y, z) in (0,1)^3 is realizable if coprime m > a > 0 give, after some
/// permutation, x < a/m, y < (m-a)/m and z < 1/m. Smallest m is reported.
inline std::optional<RealizableWitness> realizable(const Rational& x, const Rational& y, const Rational& z) {
  const std::array<Rational, 3> t{x, y, z};
  for (const auto& c : t)
    if (c <= 0 || c >= 1) throw InputError("realizability needs components in (0,1)");

  Integer max_m = 1;
  for (const auto& c : t) max_m = std::max<Integer>(max_m, ceil(Rational(1) / c) - 1);

  for (Integer m = 2; m <= max_m; ++m) {
    std::array<int, 3> order{0, 1, 2};
    do {
      if (!(t[order[2]] < Rational(1, m))) continue;
      for (Integer a = 1; a < m; ++a) {
        if (boost::multiprecision::gcd(a, m) != 1) continue;
        if (t[order[0]] < Rational(a, m) && t[order[1]] < Rational(m - a, m)) return RealizableWitness{m, a, order};
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return std::nullopt;
}

struct FoliationVerdict {
  bool foliation;
  std::optional<RealizableWitness> witness;
};

/// Transverse coorientable foliation test for three-leg stars in normal form:
/// e0 = -1 uses omega_i/alpha_i, e0 = -2 uses (alpha_i - omega_i)/alpha_i,
/// e0 <= -3 never admits one (the graph is rational since e_v <= -valency everywhere).
inline FoliationVerdict foliation_criterion(const SeifertData& sd) {
  if (sd.nu() != 3) throw InputError("the foliation criterion is stated for exactly three legs");
  validate(sd);
  if (orbifold_euler(sd) >= 0) throw InputError("star graph is not negative definite (e >= 0)");
  std::array<Rational, 3> t;
  if (sd.e0 == -1) {
    for (int i = 0; i < 3; ++i) t[i] = Rational(sd.legs[i].omega, sd.legs[i].alpha);
  } else if (sd.e0 == -2) {
    for (int i = 0; i < 3; ++i) t[i] = Rational(sd.legs[i].alpha - sd.legs[i].omega, sd.legs[i].alpha);
  } else {
    return {false, std::nullopt};
  }
  auto w = realizable(t[0], t[1], t[2]);
  return {w.has_value(), w};
}

/// Seifert invariants of the Brieskorn sphere Sigma(p, q, r): e = -1/(pqr).
inline SeifertData brieskorn_seifert(long p, long q, long r) {
  const std::array<long, 3> a{p, q, r};
  for (auto x : a)
    if (x < 2) throw InputError("Brieskorn exponents must be at least 2");
  if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1)
    throw InputError("Brieskorn exponents must be pairwise coprime");
  const Integer product = Integer(p) * q * r;

  SeifertData sd;
  Integer total = 0;
  for (auto alpha : a) {
    Integer cofactor = product / alpha;
    std::optional<Integer> found;
    for (Integer omega = 1; omega < alpha; ++omega)
      if ((omega * cofactor + 1) % alpha == 0) {
        found = omega;
        break;
      }
    if (!found) throw ConsistencyError("no Seifert invariant solves the Brieskorn congruence");
    sd.legs.push_back({Integer(alpha), *found});
    total += *found * cofactor;
  }
  if ((-1 - total) % product != 0) throw ConsistencyError("Brieskorn central weight is not integral");
  sd.e0 = (-1 - total) / product;
  std::sort(sd.legs.begin(), sd.legs.end());
  if (determinant(seifert_to_graph(sd)) != 1) throw ConsistencyError("Brieskorn graph is not a homology sphere");
  return sd;
}

struct BrieskornCoverVerdict {
  bool rational;
  /// True when {2, m, n} are pairwise coprime and the Laufer verdict was compared.
  bool cross_checked;
};

/// x^2 + y^m = z^n is rational iff 1/2 + 1/m + 1/n > 1.
inline BrieskornCoverVerdict brieskorn_cover_rational(long m, long n) {
  if (m < 2 || n < 2) throw InputError("exponents must be at least 2");
  bool rational = Rational(1, 2) + Rational(1, m) + Rational(1, n) > 1;
  bool coprime = m % 2 == 1 && n % 2 == 1 && std::gcd(m, n) == 1;
  if (coprime) {
    if (laufer_rational(seifert_to_graph(brieskorn_seifert(2, m, n))) != rational)
      throw ConsistencyError("Brieskorn inequality disagrees with the Laufer verdict");
  }
  return {rational, coprime};
}

} // namespace plumb
