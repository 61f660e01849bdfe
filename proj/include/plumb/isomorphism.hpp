#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb {

namespace detail {

/// One or two centres of a tree, found by peeling leaves.
inline std::vector<VertexId> tree_centers(const PlumbingGraph& tree) {
  std::map<VertexId, std::size_t> degree;
  std::vector<VertexId> layer;
  for (const auto& [id, w] : tree.weights()) {
    degree[id] = valency(tree, id);
    if (degree[id] <= 1) layer.push_back(id);
  }
  std::size_t remaining = tree.size();
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<VertexId> next;
    for (const auto& v : layer)
      for (const auto& u : tree.neighbors(v))
        if (--degree[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

struct RootedCodes {
  std::map<VertexId, std::string> code;

  const std::string& compute(const PlumbingGraph& g, const VertexId& v, const VertexId* parent) {
    std::vector<std::string> parts;
    for (const auto& u : g.neighbors(v))
      if (!parent || u != *parent) parts.push_back(compute(g, u, &v));
    std::sort(parts.begin(), parts.end());
    std::string s = "(" + to_string(g.weight(v));
    for (const auto& p : parts) s += p;
    s += ")";
    return code[v] = std::move(s);
  }
};

struct TreeCanon {
  std::string code;
  VertexId root;
  RootedCodes codes;
};

inline TreeCanon canonicalize_tree(const PlumbingGraph& tree) {
  TreeCanon best;
  bool first = true;
  for (const auto& c : tree_centers(tree)) {
    RootedCodes rc;
    std::string code = rc.compute(tree, c, nullptr);
    if (first || code < best.code) {
      best = {std::move(code), c, std::move(rc)};
      first = false;
    }
  }
  return best;
}

inline void match_rooted(const PlumbingGraph& g1, const TreeCanon& c1, const VertexId& v1, const VertexId* p1,
                         const PlumbingGraph& g2, const TreeCanon& c2, const VertexId& v2, const VertexId* p2,
                         std::map<VertexId, VertexId>& out) {
  out[v1] = v2;
  auto children = [](const PlumbingGraph& g, const TreeCanon& c, const VertexId& v, const VertexId* p) {
    std::vector<std::pair<std::string, VertexId>> kids;
    for (const auto& u : g.neighbors(v))
      if (!p || u != *p) kids.emplace_back(c.codes.code.at(u), u);
    std::sort(kids.begin(), kids.end());
    return kids;
  };
  auto k1 = children(g1, c1, v1, p1);
  auto k2 = children(g2, c2, v2, p2);
  for (std::size_t i = 0; i < k1.size(); ++i)
    match_rooted(g1, c1, k1[i].second, &v1, g2, c2, k2[i].second, &v2, out);
}

} // namespace detail

/// Canonical code of a decorated forest: equal codes iff isomorphic (weights included).
inline std::string canonical_code(const PlumbingGraph& g) {
  std::vector<std::string> parts;
  for (const auto& c : components(g)) parts.push_back(detail::canonicalize_tree(c).code);
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p;
  return out;
}

/// Weight- and adjacency-preserving bijection g1 -> g2, if one exists.
inline std::optional<std::map<VertexId, VertexId>> find_isomorphism(const PlumbingGraph& g1,
                                                                     const PlumbingGraph& g2) {
  if (g1.size() != g2.size() || g1.edges().size() != g2.edges().size()) return std::nullopt;
  auto comps1 = components(g1);
  auto comps2 = components(g2);
  if (comps1.size() != comps2.size()) return std::nullopt;

  std::vector<std::pair<detail::TreeCanon, std::size_t>> canon1, canon2;
  for (std::size_t i = 0; i < comps1.size(); ++i) canon1.emplace_back(detail::canonicalize_tree(comps1[i]), i);
  for (std::size_t i = 0; i < comps2.size(); ++i) canon2.emplace_back(detail::canonicalize_tree(comps2[i]), i);
  auto by_code = [](const auto& a, const auto& b) { return a.first.code < b.first.code; };
  std::sort(canon1.begin(), canon1.end(), by_code);
  std::sort(canon2.begin(), canon2.end(), by_code);

  std::map<VertexId, VertexId> witness;
  for (std::size_t i = 0; i < canon1.size(); ++i) {
    const auto& [t1, i1] = canon1[i];
    const auto& [t2, i2] = canon2[i];
    if (t1.code != t2.code) return std::nullopt;
    detail::match_rooted(comps1[i1], t1, t1.root, nullptr, comps2[i2], t2, t2.root, nullptr, witness);
  }
  return witness;
}

inline bool is_isomorphic(const PlumbingGraph& g1, const PlumbingGraph& g2) {
  return find_isomorphism(g1, g2).has_value();
}

} // namespace plumb
