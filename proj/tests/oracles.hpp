#pragma once

// Slow, independent reference computations used to pin down expected values.
// None of these call into the library's lattice, Laufer or census code.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "plumb/graph.hpp"

namespace oracle {

using plumb::Integer;
using plumb::PlumbingGraph;
using plumb::Rational;
using plumb::VertexId;

using IntMatrix = std::vector<std::vector<Integer>>;

/// -I for an integer-weighted graph, rows in sorted id order.
inline IntMatrix minus_form(const PlumbingGraph& g) {
  auto ids = g.ids();
  IntMatrix m(ids.size(), std::vector<Integer>(ids.size(), 0));
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (i == j)
        m[i][j] = -plumb::num(g.weight(ids[i]));
      else if (g.has_edge(ids[i], ids[j]))
        m[i][j] = -1;
    }
  return m;
}

/// Fraction-free Bareiss elimination with row swaps.
inline Integer bareiss_det(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline Integer det(const PlumbingGraph& g) { return bareiss_det(minus_form(g)); }

inline IntMatrix principal(const IntMatrix& m, const std::vector<std::size_t>& rows) {
  IntMatrix out(rows.size(), std::vector<Integer>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) out[i][j] = m[rows[i]][rows[j]];
  return out;
}

/// Sylvester: I is negative definite iff every leading principal minor of -I
/// is positive, for the given vertex ordering.
inline bool sylvester_negative_definite(const PlumbingGraph& g, const std::vector<std::size_t>& order) {
  auto m = minus_form(g);
  for (std::size_t k = 1; k <= order.size(); ++k)
    if (bareiss_det(principal(m, {order.begin(), order.begin() + static_cast<long>(k)})) <= 0) return false;
  return true;
}

/// Negative semidefinite iff every principal minor of -I is >= 0 (all subsets).
inline bool all_principal_minors_nonnegative(const PlumbingGraph& g) {
  auto m = minus_form(g);
  const std::size_t n = m.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) rows.push_back(i);
    if (bareiss_det(principal(m, rows)) < 0) return false;
  }
  return true;
}

/// (Z, E_v) for every v, with Z given in sorted id order.
inline std::vector<Integer> pairings(const PlumbingGraph& g, const std::vector<long>& z) {
  auto ids = g.ids();
  std::vector<Integer> out(ids.size(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (i == j)
        out[i] += plumb::num(g.weight(ids[i])) * z[j];
      else if (g.has_edge(ids[i], ids[j]))
        out[i] += z[j];
    }
  return out;
}

/// Componentwise least nonzero cycle Z >= 0 with (Z, E_v) <= 0 for all v,
/// searched over the box 1 <= Z_v <= bound (Z_min has full support on a
/// connected graph). Returns nullopt if the box holds no such cycle or the
/// anti-nef cycles in it have no least element.
inline std::optional<std::vector<long>> brute_force_zmin(const PlumbingGraph& g, long bound) {
  const std::size_t n = g.size();
  std::vector<long> z(n, 1);
  std::vector<std::vector<long>> anti_nef;
  for (;;) {
    auto p = pairings(g, z);
    if (std::all_of(p.begin(), p.end(), [](const Integer& x) { return x <= 0; })) anti_nef.push_back(z);
    std::size_t i = 0;
    while (i < n && z[i] == bound) z[i++] = 1;
    if (i == n) break;
    ++z[i];
  }
  if (anti_nef.empty()) return std::nullopt;
  std::vector<long> least = anti_nef.front();
  for (const auto& c : anti_nef)
    for (std::size_t i = 0; i < n; ++i) least[i] = std::min(least[i], c[i]);
  if (std::find(anti_nef.begin(), anti_nef.end(), least) == anti_nef.end()) return std::nullopt;
  return least;
}

/// Canonical K by Cramer's rule on (K, E_v) = -e_v - 2, sorted id order.
inline std::vector<Rational> canonical_cycle_cramer(const PlumbingGraph& g) {
  auto ids = g.ids();
  const std::size_t n = ids.size();
  IntMatrix form(n, std::vector<Integer>(n, 0));
  std::vector<Integer> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = -plumb::num(g.weight(ids[i])) - 2;
    for (std::size_t j = 0; j < n; ++j)
      form[i][j] = i == j ? plumb::num(g.weight(ids[i])) : Integer(g.has_edge(ids[i], ids[j]) ? 1 : 0);
  }
  Integer d = bareiss_det(form);
  std::vector<Rational> k(n);
  for (std::size_t c = 0; c < n; ++c) {
    auto m = form;
    for (std::size_t r = 0; r < n; ++r) m[r][c] = rhs[r];
    k[c] = Rational(bareiss_det(m)) / Rational(d);
  }
  return k;
}

/// chi(l) = -(K + l, l) / 2 from the Cramer K, cycles in sorted id order.
inline Rational chi(const PlumbingGraph& g, const std::vector<long>& l) {
  auto k = canonical_cycle_cramer(g);
  auto ids = g.ids();
  Rational total = 0;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = 0; j < ids.size(); ++j) {
      Integer entry = i == j ? plumb::num(g.weight(ids[i])) : Integer(g.has_edge(ids[i], ids[j]) ? 1 : 0);
      total += (k[i] + l[i]) * Rational(entry) * l[j];
    }
  return -total / 2;
}

/// Unbounded scan of Pinkham's inequality sum floor(-l w_i / a_i) <= l e0 - 2.
inline std::optional<long> pinkham_scan(long e0, const std::vector<std::pair<long, long>>& legs, long limit) {
  for (long l = 0; l <= limit; ++l) {
    long lhs = 0;
    for (auto [a, w] : legs) {
      long num = -l * w;
      lhs += num >= 0 ? num / a : -((-num + a - 1) / a);
    }
    if (lhs <= l * e0 - 2) return l;
  }
  return std::nullopt;
}

/// Canonical string of a small weighted tree by brute force over all vertex
/// orderings: the lexicographically least (weights, adjacency) encoding.
inline std::string brute_force_canonical(const std::vector<int>& weights, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(weights.size());
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < n; ++i) s += std::to_string(weights[perm[i]]) + ",";
    s += "|";
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += adj[perm[i]][perm[j]] ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Number of isomorphism classes of negative definite weighted trees on n
/// vertices with weights in [weight_min, -1], via all Pruefer sequences.
inline std::size_t pruefer_census_count(int n, int weight_min) {
  std::set<std::string> classes;
  const int span = -weight_min;
  std::vector<int> seq(std::max(0, n - 2), 0);
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    if (n == 2) edges.push_back({0, 1});
    if (n > 2) {
      std::vector<int> degree(n, 1);
      for (int x : seq) ++degree[x];
      for (int x : seq) {
        int leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.push_back({leaf, x});
        --degree[leaf];
        --degree[x];
      }
      int u = -1, v = -1;
      for (int i = 0; i < n; ++i)
        if (degree[i] == 1) (u < 0 ? u : v) = i;
      edges.push_back({u, v});
    }
    std::vector<int> w(n, 0);
    for (;;) {
      std::vector<int> weights(n);
      for (int i = 0; i < n; ++i) weights[i] = -1 - w[i];
      std::map<VertexId, Rational> wm;
      std::vector<plumb::Edge> em;
      for (int i = 0; i < n; ++i) wm.emplace("v" + std::to_string(i), Rational(weights[i]));
      for (auto [a, b] : edges) em.push_back(plumb::make_edge("v" + std::to_string(a), "v" + std::to_string(b)));
      auto g = PlumbingGraph::build(wm, em);
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      if (sylvester_negative_definite(g, order)) classes.insert(brute_force_canonical(weights, edges));
      int i = 0;
      while (i < n && w[i] == span - 1) w[i++] = 0;
      if (i == n) break;
      ++w[i];
    }
    int i = 0;
    while (i < static_cast<int>(seq.size()) && seq[i] == n - 1) seq[i++] = 0;
    if (i == static_cast<int>(seq.size())) break;
    ++seq[i];
  }
  return classes.size();
}

} // namespace oracle

namespace testutil {

/// Random tree on n vertices (ids v0..v{n-1}) with integer weights in [lo, hi].
inline plumb::PlumbingGraph random_tree(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> weight(lo, hi);
  std::map<plumb::VertexId, plumb::Rational> w;
  std::vector<plumb::Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    w.emplace("v" + std::to_string(i), plumb::Rational(weight(rng)));
    if (i > 0) {
      std::uniform_int_distribution<std::size_t> parent(0, i - 1);
      e.push_back(plumb::make_edge("v" + std::to_string(parent(rng)), "v" + std::to_string(i)));
    }
  }
  return plumb::PlumbingGraph::build(std::move(w), e);
}

inline plumb::PlumbingGraph graph(const std::string& text) { return plumb::parse_graph(text); }

inline const char* kE8 =
    "vertex c -2\nvertex a1 -2\nvertex b1 -2\nvertex b2 -2\nvertex d1 -2\nvertex d2 -2\nvertex d3 -2\nvertex d4 -2\n"
    "edge c a1\nedge c b1\nedge b1 b2\nedge c d1\nedge d1 d2\nedge d2 d3\nedge d3 d4\n";

inline const char* kSigma237 = "vertex c -1\nvertex x -2\nvertex y -3\nvertex z -7\nedge c x\nedge c y\nedge c z\n";

/// Two Sigma(2,3,7) stars whose (-7)-legs are joined through one more (-7)-vertex; m = 2.
inline const char* kTwoStar =
    "vertex c1 -1\nvertex x1 -2\nvertex y1 -3\nvertex h1 -7\nvertex h2 -7\nvertex h3 -7\n"
    "vertex c2 -1\nvertex x2 -2\nvertex y2 -3\n"
    "edge c1 x1\nedge c1 y1\nedge c1 h1\nedge h1 h2\nedge h2 h3\nedge h3 c2\nedge c2 x2\nedge c2 y2\n";

/// Two adjacent nodes of valency 4 and 5 with single-vertex legs; m >= 2 and no Case 1 vertex.
inline const char* kAdjacentNodes =
    "vertex n1 -2\nvertex n2 -3\nvertex a1 -5\nvertex a2 -2\nvertex a3 -2\n"
    "vertex b1 -6\nvertex b2 -2\nvertex b3 -2\nvertex b4 -3\n"
    "edge n1 n2\nedge n1 a1\nedge n1 a2\nedge n1 a3\nedge n2 b1\nedge n2 b2\nedge n2 b3\nedge n2 b4\n";

} // namespace testutil
