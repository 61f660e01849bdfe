#pragma once

#include <optional>
#include <set>
#include <vector>

#include "plumb/continued_fraction.hpp"
#include "plumb/graph.hpp"
#include "plumb/lattice.hpp"

namespace plumb {

struct AttachedString {
  PlumbingGraph graph;
  /// New vertices, starting with the one joined to the attachment point.
  std::vector<VertexId> string;
};

/// Appends the string [e_1, ..., e_s] of negative_cf(r), e_1 joined to `at`.
inline AttachedString attach_string_ids(const PlumbingGraph& g, const VertexId& at, const Rational& r) {
  (void)g.weight(at);
  auto cf = negative_cf(r);
  auto weights = g.weights();
  auto edges = edge_list(g);
  AttachedString out;
  VertexId prev = at;
  for (const auto& term : cf.terms) {
    VertexId id;
    for (std::size_t k = 1;; ++k) {
      id = "_s" + std::to_string(k);
      if (!weights.count(id)) break;
    }
    weights.emplace(id, Rational(term));
    edges.push_back(make_edge(prev, id));
    out.string.push_back(id);
    prev = id;
  }
  out.graph = PlumbingGraph::build(std::move(weights), edges);
  return out;
}

inline PlumbingGraph attach_string(const PlumbingGraph& g, const VertexId& at, const Rational& r) {
  return attach_string_ids(g, at, r).graph;
}

/// Joins one new vertex decorated by the rational r to `at` (the unexpanded slope).
inline PlumbingGraph attach_slope_vertex(const PlumbingGraph& g, const VertexId& at, const Rational& r) {
  (void)g.weight(at);
  auto weights = g.weights();
  VertexId id = fresh_id(g, "_r");
  weights.emplace(id, r);
  auto edges = edge_list(g);
  edges.push_back(make_edge(at, id));
  return PlumbingGraph::build(std::move(weights), edges);
}

/// If `filled` is `base` plus a path hanging off `at` by a single edge, the
/// value of that path read as a negative continued fraction from `at` outwards.
/// Returns nullopt for any other shape or for terms violating the sign rules.
inline std::optional<Rational> attached_string_value(const PlumbingGraph& filled, const PlumbingGraph& base,
                                                     const VertexId& at) {
  if (!base.contains(at)) return std::nullopt;
  for (const auto& [id, w] : base.weights())
    if (!filled.contains(id) || filled.weight(id) != w) return std::nullopt;
  std::set<VertexId> extra;
  for (const auto& [id, w] : filled.weights())
    if (!base.contains(id)) extra.insert(id);
  if (extra.empty()) return std::nullopt;

  std::optional<VertexId> first;
  for (const auto& e : filled.edges()) {
    bool a_base = base.contains(e.first);
    bool b_base = base.contains(e.second);
    if (a_base && b_base && !base.edges().count(e)) return std::nullopt;
    if (a_base != b_base) {
      const auto& inner = a_base ? e.first : e.second;
      if (inner != at || first) return std::nullopt;
      first = a_base ? e.second : e.first;
    }
  }
  if (!first || base.edges().size() + extra.size() != filled.edges().size()) return std::nullopt;

  std::vector<Integer> terms;
  std::set<VertexId> visited;
  VertexId cur = *first;
  VertexId prev = at;
  for (;;) {
    const auto& w = filled.weight(cur);
    if (!is_integer(w)) return std::nullopt;
    terms.push_back(num(w));
    visited.insert(cur);
    std::optional<VertexId> next;
    for (const auto& u : filled.neighbors(cur)) {
      if (u == prev) continue;
      if (!extra.count(u) || next) return std::nullopt;
      next = u;
    }
    if (!next) break;
    prev = cur;
    cur = *next;
  }
  if (visited != extra || !has_negative_cf_signs(terms)) return std::nullopt;
  return evaluate_negative_cf(terms);
}

/// Cutting a negative definite tree along the edge (v, w) and filling both sides.
///
/// G \ e splits as G_v (containing v) and G_w (containing w). With
/// r = -det(G_w \ w) / det(G_w), the w-side receives slope r and the v-side
/// slope 1/r. `slope_*` keep the slope as one rationally decorated vertex,
/// `filled_*` expand it into the integer string of its continued fraction.
struct CutResult {
  VertexId v;
  VertexId w;
  PlumbingGraph side_v;
  PlumbingGraph side_w;
  Rational r;
  PlumbingGraph slope_v;
  PlumbingGraph slope_w;
  PlumbingGraph filled_v;
  PlumbingGraph filled_w;
};

/// -det(G_w \ w) / det(G_w).
inline Rational cut_slope(const PlumbingGraph& side_w, const VertexId& w) {
  Rational d_side = determinant(side_w);
  if (d_side <= 0) throw InputError("the far side of the cut is not negative definite");
  return -determinant(delete_vertices(side_w, {w})) / d_side;
}

inline CutResult cut_and_fill(const PlumbingGraph& g, const VertexId& v, const VertexId& w) {
  if (!g.has_edge(v, w)) throw InputError("no edge " + v + " " + w);
  if (!g.is_connected()) throw InputError("graph must be connected");
  if (!is_negative_definite(g)) throw InputError("graph must be negative definite");

  auto split = delete_edges(g, {{v, w}});
  CutResult out;
  out.v = v;
  out.w = w;
  out.side_v = component_containing(split, v);
  out.side_w = component_containing(split, w);
  out.r = cut_slope(out.side_w, w);
  Rational inverse = Rational(1) / out.r;

  out.slope_w = attach_slope_vertex(out.side_w, w, out.r);
  out.slope_v = attach_slope_vertex(out.side_v, v, inverse);
  out.filled_w = attach_string(out.side_w, w, out.r);
  out.filled_v = attach_string(out.side_v, v, inverse);

  const Rational det_g = determinant(g);
  const Rational det_w_minus_w = determinant(delete_vertices(out.side_w, {w}));
  auto check = [](bool ok, const char* what) {
    if (!ok) throw ConsistencyError(std::string("cut_and_fill: ") + what);
  };
  check(out.r < 0, "slope is not negative");
  check(determinant(out.slope_w) == 0, "det of the w-side slope graph is not 0");
  check(determinant(out.filled_w) == 0, "det of the filled w-side is not 0");
  check(definiteness(out.filled_w).kind == DefinitenessKind::NegativeSemidefinite,
        "filled w-side is not negative semidefinite");
  check(is_negative_definite(out.slope_v), "v-side slope graph is not negative definite");
  check(is_negative_definite(out.filled_v), "filled v-side is not negative definite");
  check(determinant(out.slope_v) * det_w_minus_w == det_g, "det(G_v(1/r)) * det(G_w \\ w) != det(G)");
  check(determinant(out.filled_v) == determinant(out.slope_v) * den(inverse),
        "string expansion changed det by more than the slope denominator");
  return out;
}

} // namespace plumb
