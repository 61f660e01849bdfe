#pragma once

#include <optional>
#include <set>
#include <string>

#include "plumb/graph.hpp"
#include "plumb/lattice.hpp"
#include "plumb/laufer.hpp"

namespace plumb {

struct ClassifyOptions {
  bool with_badset = false;
  /// Exact subset search for m(G) only up to this many vertices.
  std::size_t badset_vertex_cap = 14;
};

/// Topology fields are empty when the graph is not negative definite.
struct ClassificationReport {
  std::string input;
  Definiteness form;
  Rational det;
  bool negative_definite = false;
  bool zhs = false;
  std::optional<bool> rational;
  std::optional<bool> l_space;
  std::optional<bool> pi1_left_orderable;
  std::optional<bool> taut_foliation;
  std::optional<std::size_t> m_gamma;
  /// m_gamma is |nodes|, an upper bound, because the graph exceeded the cap.
  bool m_is_upper_bound = false;
  std::optional<std::set<VertexId>> bad_set;
  std::optional<std::string> certificate_path;
};

inline ClassificationReport classify(const PlumbingGraph& g, const ClassifyOptions& opts = {}) {
  if (!g.is_connected()) throw InputError("classification needs a connected tree");
  if (!g.has_integer_weights()) throw InputError("classification needs integer weights");
  ClassificationReport rep;
  rep.input = serialize(g);
  rep.form = definiteness(g);
  rep.det = determinant(g);
  rep.negative_definite = rep.form.negative_definite();
  rep.zhs = rep.det == 1;
  if (!rep.negative_definite) return rep;

  auto verdict = is_rational(g);
  rep.rational = verdict.rational;
  rep.l_space = verdict.rational;
  rep.pi1_left_orderable = !verdict.rational;
  rep.taut_foliation = !verdict.rational;

  if (opts.with_badset) {
    if (g.size() <= opts.badset_vertex_cap) {
      auto bad = min_bad(g);
      rep.m_gamma = bad.m;
      rep.bad_set = bad.witness;
    } else {
      auto n = nodes(g);
      std::set<VertexId> node_set(n.begin(), n.end());
      if (verdict.rational) {
        rep.m_gamma = 0;
        rep.bad_set = std::set<VertexId>{};
      } else if (is_bad_set(g, node_set)) {
        rep.m_gamma = node_set.size();
        rep.bad_set = node_set;
        rep.m_is_upper_bound = true;
      }
    }
  }
  return rep;
}

} // namespace plumb
