#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "plumb/graph.hpp"
#include "plumb/lattice.hpp"

namespace plumb {

/// One step l_i -> l_i + E_v of Laufer's computation sequence.
struct LauferStep {
  Cycle before;
  VertexId vertex;
  /// (l_i, E_v); always positive.
  std::int64_t pairing;
};

struct ComputationSequence {
  std::vector<LauferStep> steps;
  Cycle final;
};

struct ZMin {
  Cycle cycle;
  ComputationSequence sequence;
};

/// Which positive vertex to add next. Default: the smallest id. With a seed,
/// a uniformly random positive vertex (used to test choice independence).
struct TieBreak {
  std::optional<std::uint64_t> seed;
};

namespace detail {

struct IntGraph {
  explicit IntGraph(const PlumbingGraph& g) : ids(g.ids()) {
    IndexedGraph ig(g);
    adjacency = std::move(ig.adjacency);
    weights.reserve(ids.size());
    for (const auto& w : ig.weights) {
      if (!is_integer(w)) throw InputError("the Laufer algorithm needs integer weights");
      weights.push_back(to_int64(w));
    }
  }

  std::size_t size() const noexcept { return ids.size(); }

  std::size_t index_of(const VertexId& v) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v) throw InputError("unknown vertex '" + v + "'");
    return static_cast<std::size_t>(it - ids.begin());
  }

  std::vector<VertexId> ids;
  std::vector<std::int64_t> weights;
  std::vector<std::vector<std::size_t>> adjacency;
};

inline constexpr std::size_t kLauferStepCap = 10'000'000;

/// Runs the sequence from sum E_v. `on_step(index, multiplicities, vertex, pairing)`
/// sees each step before the cycle is updated. Returns the final multiplicities.
template <class OnStep>
std::vector<std::int64_t> laufer_run(const IntGraph& g, const TieBreak& tie, OnStep&& on_step) {
  const std::size_t n = g.size();
  std::vector<std::int64_t> mult(n, 1);
  std::vector<std::int64_t> pair(n);
  for (std::size_t v = 0; v < n; ++v)
    pair[v] = g.weights[v] + static_cast<std::int64_t>(g.adjacency[v].size());

  std::optional<std::mt19937_64> rng;
  if (tie.seed) rng.emplace(*tie.seed);
  std::vector<std::size_t> positive;

  for (std::size_t step = 0;; ++step) {
    if (step >= kLauferStepCap) throw ConsistencyError("Laufer sequence exceeded the step cap");
    std::size_t chosen = n;
    if (rng) {
      positive.clear();
      for (std::size_t v = 0; v < n; ++v)
        if (pair[v] > 0) positive.push_back(v);
      if (!positive.empty())
        chosen = positive[std::uniform_int_distribution<std::size_t>(0, positive.size() - 1)(*rng)];
    } else {
      for (std::size_t v = 0; v < n; ++v)
        if (pair[v] > 0) {
          chosen = v;
          break;
        }
    }
    if (chosen == n) return mult;
    on_step(step, mult, chosen, pair[chosen]);
    ++mult[chosen];
    pair[chosen] += g.weights[chosen];
    for (auto u : g.adjacency[chosen]) ++pair[u];
  }
}

inline Cycle to_cycle(const IntGraph& g, const std::vector<std::int64_t>& mult) {
  Cycle c;
  for (std::size_t i = 0; i < g.size(); ++i) c.emplace(g.ids[i], mult[i]);
  return c;
}

inline void require_laufer_input(const PlumbingGraph& g) {
  if (!g.is_connected()) throw InputError("graph must be connected");
  if (!is_negative_definite(g)) throw InputError("graph must be negative definite");
}

} // namespace detail

/// Z_min via Laufer's computation sequence starting at sum E_v.
inline ZMin z_min(const PlumbingGraph& g, const TieBreak& tie = {}) {
  detail::require_laufer_input(g);
  detail::IntGraph ig(g);
  ZMin out;
  auto mult = detail::laufer_run(ig, tie, [&](std::size_t, const std::vector<std::int64_t>& m, std::size_t v,
                                              std::int64_t p) {
    out.sequence.steps.push_back({detail::to_cycle(ig, m), ig.ids[v], p});
  });
  out.cycle = detail::to_cycle(ig, mult);
  out.sequence.final = out.cycle;
  return out;
}

/// Z_min without recording the sequence.
inline Cycle z_min_cycle(const PlumbingGraph& g, const TieBreak& tie = {}) {
  detail::require_laufer_input(g);
  detail::IntGraph ig(g);
  return detail::to_cycle(ig, detail::laufer_run(ig, tie, [](auto&&...) {}));
}

/// Laufer's test alone: rational iff every step adds E_v with (l_i, E_v) = 1.
inline bool laufer_rational(const PlumbingGraph& g, const TieBreak& tie = {}) {
  detail::require_laufer_input(g);
  detail::IntGraph ig(g);
  bool rational = true;
  detail::laufer_run(ig, tie, [&](std::size_t, const auto&, std::size_t, std::int64_t p) {
    if (p >= 2) rational = false;
  });
  return rational;
}

struct Jump {
  std::size_t step;
  VertexId vertex;
  std::int64_t pairing;
};

struct RationalityVerdict {
  bool rational;
  /// First step whose pairing is at least 2.
  std::optional<Jump> jump;
  Cycle z_min;
  Rational chi_zmin;
};

/// Laufer's jump test and Artin's chi(Z_min) >= 1, which must agree.
inline RationalityVerdict is_rational(const PlumbingGraph& g) {
  auto z = z_min(g);
  RationalityVerdict out{true, std::nullopt, z.cycle, Rational(0)};
  for (std::size_t i = 0; i < z.sequence.steps.size(); ++i) {
    const auto& s = z.sequence.steps[i];
    if (s.pairing >= 2) {
      out.rational = false;
      out.jump = Jump{i, s.vertex, s.pairing};
      break;
    }
  }
  out.chi_zmin = chi(g, z.cycle);
  if (out.rational != (out.chi_zmin >= 1))
    throw ConsistencyError("Laufer and Artin rationality criteria disagree");
  return out;
}

/// Graph with the decorations on `lowered` decreased one unit at a time until
/// each of those vertices has multiplicity 1 in Z_min.
inline PlumbingGraph lower_until_reduced(const PlumbingGraph& g, const std::set<VertexId>& lowered) {
  detail::require_laufer_input(g);
  if (lowered.empty()) return g;
  std::int64_t max_abs = 1;
  for (const auto& [id, w] : g.weights()) max_abs = std::max<std::int64_t>(max_abs, std::abs(to_int64(w)));
  const std::size_t cap = 4 * g.size() * static_cast<std::size_t>(max_abs);

  auto weights = g.weights();
  for (const auto& v : lowered)
    if (!weights.count(v)) throw InputError("unknown vertex '" + v + "'");
  auto edges = edge_list(g);
  std::size_t decrements = 0;
  for (;;) {
    auto current = PlumbingGraph::build(weights, edges);
    detail::IntGraph ig(current);
    auto mult = detail::laufer_run(ig, {}, [](auto&&...) {});
    bool done = true;
    for (const auto& v : lowered) {
      if (mult[ig.index_of(v)] > 1) {
        weights[v] -= 1;
        ++decrements;
        done = false;
      }
    }
    if (done) return current;
    if (decrements > cap) throw ConsistencyError("lowering decorations did not reduce multiplicities to 1");
  }
}

/// B is bad when lowering the decorations on B far enough makes the graph rational.
inline bool is_bad_set(const PlumbingGraph& g, const std::set<VertexId>& bad) {
  return laufer_rational(lower_until_reduced(g, bad));
}

struct BadSetResult {
  std::size_t m;
  std::set<VertexId> witness;
  /// The witness found uses a vertex of valency < 3.
  bool witness_has_non_node = false;
};

namespace detail {

/// Visits k-subsets of `pool` in lexicographic order; stops when `visit` returns true.
template <class Visit>
bool for_each_subset(const std::vector<VertexId>& pool, std::size_t k, Visit&& visit) {
  if (k > pool.size()) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::set<VertexId> subset;
    for (auto i : idx) subset.insert(pool[i]);
    if (visit(subset)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

} // namespace detail

/// Smallest bad set of size at most `limit`, searched size by size; within a
/// size, node-only subsets come first, then subsets with some non-node.
inline std::optional<BadSetResult> min_bad_up_to(const PlumbingGraph& g, std::size_t limit) {
  if (laufer_rational(g)) return BadSetResult{0, {}, false};
  auto node_ids = nodes(g);
  auto all_ids = g.ids();
  std::set<VertexId> node_set(node_ids.begin(), node_ids.end());
  for (std::size_t k = 1; k <= std::min(limit, all_ids.size()); ++k) {
    std::optional<BadSetResult> found;
    detail::for_each_subset(node_ids, k, [&](const std::set<VertexId>& s) {
      if (!is_bad_set(g, s)) return false;
      found = BadSetResult{k, s, false};
      return true;
    });
    if (found) return found;
    detail::for_each_subset(all_ids, k, [&](const std::set<VertexId>& s) {
      bool has_non_node = std::any_of(s.begin(), s.end(), [&](const VertexId& v) { return !node_set.count(v); });
      if (!has_non_node || !is_bad_set(g, s)) return false;
      found = BadSetResult{k, s, true};
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

/// m(G) with a witness of that size.
inline BadSetResult min_bad(const PlumbingGraph& g) {
  auto r = min_bad_up_to(g, g.size());
  if (!r) throw ConsistencyError("no bad vertex set found, not even the whole vertex set");
  return *r;
}

/// Whole graph rationality, component by component (for possibly disconnected subgraphs).
inline bool all_components_rational(const PlumbingGraph& g) {
  for (const auto& c : components(g))
    if (!laufer_rational(c)) return false;
  return true;
}

struct MonotonicityReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Random subgraphs and decoration decreases of g: rationality must survive,
/// and a minimal bad set of g restricted to the new graph must stay bad.
inline MonotonicityReport monotonicity_suite(const PlumbingGraph& g, std::uint64_t seed, std::size_t trials) {
  detail::require_laufer_input(g);
  MonotonicityReport report;
  std::mt19937_64 rng(seed);
  const bool rational = laufer_rational(g);
  const auto bad = min_bad(g).witness;
  auto ids = g.ids();

  auto check_bad = [&](const PlumbingGraph& part, const std::string& what) {
    std::set<VertexId> restricted;
    for (const auto& v : bad)
      if (part.contains(v)) restricted.insert(v);
    ++report.checks;
    if (!is_bad_set(part, restricted)) report.failures.push_back(what + ": restricted bad set is not bad");
  };

  for (std::size_t t = 0; t < trials; ++t) {
    if (rng() % 2 == 0) {
      std::set<VertexId> keep;
      for (const auto& v : ids)
        if (rng() % 2) keep.insert(v);
      if (keep.empty()) keep.insert(ids[rng() % ids.size()]);
      for (const auto& part : components(induced_subgraph(g, keep))) {
        std::string what = "subgraph on " + std::to_string(part.size()) + " vertices";
        ++report.checks;
        if (rational && !laufer_rational(part)) report.failures.push_back(what + " lost rationality");
        check_bad(part, what);
      }
    } else {
      auto weights = g.weights();
      for (const auto& v : ids)
        if (rng() % 2) weights[v] -= static_cast<long>(1 + rng() % 3);
      auto lowered = PlumbingGraph::build(std::move(weights), edge_list(g));
      ++report.checks;
      if (rational && !laufer_rational(lowered)) report.failures.push_back("decoration decrease lost rationality");
      check_bad(lowered, "decoration decrease");
    }
  }
  return report;
}

} // namespace plumb
