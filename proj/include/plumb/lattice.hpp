#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb {

/// Integer cycle sum l_v E_v (missing entries are zero).
using Cycle = std::map<VertexId, std::int64_t>;
/// Rational cycle in L tensor Q; the canonical cycle lives here.
using QCycle = std::map<VertexId, Rational>;

inline Cycle unit_cycle(const VertexId& v) { return {{v, 1}}; }

/// Sum of all E_v.
inline Cycle reduced_cycle(const PlumbingGraph& g) {
  Cycle out;
  for (const auto& [id, w] : g.weights()) out[id] = 1;
  return out;
}

/// The intersection matrix: weights on the diagonal, 1 for each edge.
struct IntersectionForm {
  std::vector<VertexId> ids;
  std::vector<std::vector<Rational>> entries;

  explicit IntersectionForm(const PlumbingGraph& g) : ids(g.ids()) {
    IndexedGraph ig(g);
    entries.assign(ids.size(), std::vector<Rational>(ids.size(), Rational(0)));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      entries[i][i] = ig.weights[i];
      for (auto j : ig.adjacency[i]) entries[i][j] = 1;
    }
  }

  std::size_t size() const noexcept { return ids.size(); }
};

namespace detail {

template <class Value>
Rational as_rational(const Value& v) {
  return Rational(v);
}

template <class CycleA>
void require_support(const PlumbingGraph& g, const CycleA& a) {
  for (const auto& [id, x] : a)
    if (!g.contains(id)) throw InputError("cycle uses vertex '" + id + "' which is not in the graph");
}

/// Determinant of a dense rational matrix by Gaussian elimination with row pivoting.
inline Rational dense_determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

/// Leaf-first elimination order of each tree component: children before parents,
/// each component rooted at its smallest index.
struct EliminationOrder {
  std::vector<std::size_t> order;
  std::vector<std::optional<std::size_t>> parent;
};

inline EliminationOrder elimination_order(const IndexedGraph& ig) {
  const std::size_t n = ig.size();
  EliminationOrder eo;
  eo.parent.assign(n, std::nullopt);
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> preorder;
    std::vector<std::size_t> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      preorder.push_back(v);
      for (auto u : ig.adjacency[v])
        if (!seen[u]) {
          seen[u] = true;
          eo.parent[u] = v;
          stack.push_back(u);
        }
    }
    eo.order.insert(eo.order.end(), preorder.rbegin(), preorder.rend());
  }
  return eo;
}

/// Diagonal pivots of the leaf-first symmetric elimination of the intersection
/// form. Stops (returning the partial list and the index of the stalled vertex)
/// when a vertex with a parent gets a zero pivot, since no Schur step exists there.
struct PivotRun {
  std::vector<Rational> pivot;
  std::vector<bool> is_root;
  std::optional<std::size_t> stalled;
};

inline PivotRun leaf_pivots(const IndexedGraph& ig) {
  auto eo = elimination_order(ig);
  PivotRun run;
  run.pivot = ig.weights;
  run.is_root.assign(ig.size(), false);
  for (auto v : eo.order) {
    run.is_root[v] = !eo.parent[v].has_value();
    if (run.is_root[v]) continue;
    if (run.pivot[v] == 0) {
      run.stalled = v;
      return run;
    }
    run.pivot[*eo.parent[v]] -= Rational(1) / run.pivot[v];
  }
  return run;
}

} // namespace detail

/// a^T I b, exact. Accepts Cycle or QCycle on either side.
template <class CycleA, class CycleB>
Rational pairing(const PlumbingGraph& g, const CycleA& a, const CycleB& b) {
  detail::require_support(g, a);
  detail::require_support(g, b);
  Rational total = 0;
  for (const auto& [v, av] : a) {
    auto it = b.find(v);
    if (it != b.end()) total += detail::as_rational(av) * detail::as_rational(it->second) * g.weight(v);
    for (const auto& u : g.neighbors(v)) {
      auto jt = b.find(u);
      if (jt != b.end()) total += detail::as_rational(av) * detail::as_rational(jt->second);
    }
  }
  return total;
}

/// det(-I). The empty graph has determinant 1; disjoint unions multiply.
inline Rational determinant(const PlumbingGraph& g) {
  IndexedGraph ig(g);
  auto run = detail::leaf_pivots(ig);
  if (run.stalled) {
    IntersectionForm form(g);
    for (auto& row : form.entries)
      for (auto& x : row) x = -x;
    return detail::dense_determinant(std::move(form.entries));
  }
  Rational det = 1;
  for (const auto& p : run.pivot) det *= -p;
  return det;
}

enum class DefinitenessKind { NegativeDefinite, NegativeSemidefinite, Other };

struct Definiteness {
  DefinitenessKind kind;
  /// Dimension of the kernel; nonzero only for NegativeSemidefinite.
  std::size_t corank = 0;

  bool negative_definite() const noexcept { return kind == DefinitenessKind::NegativeDefinite; }
  bool negative_semidefinite() const noexcept { return kind != DefinitenessKind::Other; }
  friend bool operator==(const Definiteness&, const Definiteness&) = default;
};

inline std::string to_string(const Definiteness& d) {
  switch (d.kind) {
  case DefinitenessKind::NegativeDefinite:
    return "negative definite";
  case DefinitenessKind::NegativeSemidefinite:
    return "negative semidefinite (corank " + std::to_string(d.corank) + ")";
  case DefinitenessKind::Other:
    break;
  }
  return "indefinite or positive";
}

/// Symmetric elimination with diagonal pivots, leaves first. A positive pivot,
/// or a zero pivot on a vertex that still has an uneliminated neighbour, makes
/// the form indefinite; a zero pivot on a component root is a kernel direction.
inline Definiteness definiteness(const PlumbingGraph& g) {
  IndexedGraph ig(g);
  auto run = detail::leaf_pivots(ig);
  if (run.stalled) return {DefinitenessKind::Other, 0};
  std::size_t corank = 0;
  for (std::size_t v = 0; v < ig.size(); ++v) {
    if (run.pivot[v] > 0) return {DefinitenessKind::Other, 0};
    if (run.pivot[v] == 0) ++corank;
  }
  if (corank == 0) return {DefinitenessKind::NegativeDefinite, 0};
  return {DefinitenessKind::NegativeSemidefinite, corank};
}

inline bool is_negative_definite(const PlumbingGraph& g) { return definiteness(g).negative_definite(); }

/// The unique K with (K + E_v, E_v) + 2 = 0 for every vertex.
inline QCycle canonical_cycle(const PlumbingGraph& g) {
  IntersectionForm form(g);
  const std::size_t n = form.size();
  auto& m = form.entries;
  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = -m[i][i] - 2;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InputError("intersection form is singular; the canonical cycle is not defined");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  QCycle k;
  for (std::size_t i = 0; i < n; ++i) k[form.ids[i]] = rhs[i] / m[i][i];

  for (const auto& [id, w] : g.weights()) {
    QCycle shifted = k;
    shifted[id] += 1;
    if (pairing(g, shifted, unit_cycle(id)) + 2 != 0)
      throw ConsistencyError("canonical cycle fails the adjunction relation at " + id);
  }
  return k;
}

/// chi(l) = -(K + l, l) / 2 for a precomputed canonical cycle.
template <class CycleL>
Rational chi(const PlumbingGraph& g, const QCycle& canonical, const CycleL& l) {
  QCycle sum = canonical;
  for (const auto& [id, x] : l) sum[id] += detail::as_rational(x);
  return -pairing(g, sum, l) / 2;
}

template <class CycleL>
Rational chi(const PlumbingGraph& g, const CycleL& l) {
  return chi(g, canonical_cycle(g), l);
}

/// det(G) == det(G \ e) - det(G \ [a,b]) for the edge e = (a,b).
inline bool det_edge_identity_check(const PlumbingGraph& g, const VertexId& a, const VertexId& b) {
  if (!g.has_edge(a, b)) throw InputError("no edge " + a + " " + b);
  Rational lhs = determinant(g);
  Rational rhs = determinant(delete_edges(g, {{a, b}})) - determinant(delete_vertices(g, {a, b}));
  return lhs == rhs;
}

} // namespace plumb
