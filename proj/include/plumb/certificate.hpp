#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "plumb/graph.hpp"
#include "plumb/lattice.hpp"
#include "plumb/laufer.hpp"
#include "plumb/seifert.hpp"
#include "plumb/surgery.hpp"

namespace plumb {

/// Node kinds of a certificate.
///
///  - BaseM1: m(G) <= 1, closed by the one-bad-vertex theorem.
///  - Case1: cut at a vertex v separating two node-carrying parts; children are
///    the minimized v-side filling (recursion) and the det-0 w-side filling.
///  - Case2: exactly two adjacent nodes; the edge between them is blown up.
///  - SemidefCut / SemidefLeaf: decomposition of a det-0 graph into pieces with
///    at most one node.
enum class CertTag { BaseM1, Case1, Case2, SemidefCut, SemidefLeaf };

inline std::string to_string(CertTag t) {
  switch (t) {
  case CertTag::BaseM1:
    return "BaseM1";
  case CertTag::Case1:
    return "Case1";
  case CertTag::Case2:
    return "Case2";
  case CertTag::SemidefCut:
    return "SemidefCut";
  case CertTag::SemidefLeaf:
    return "SemidefLeaf";
  }
  return "?";
}

inline CertTag parse_cert_tag(const std::string& s) {
  for (auto t : {CertTag::BaseM1, CertTag::Case1, CertTag::Case2, CertTag::SemidefCut, CertTag::SemidefLeaf})
    if (to_string(t) == s) return t;
  throw InputError("unknown certificate tag '" + s + "'");
}

using ClaimValue = std::variant<bool, Rational>;

inline std::string to_string(const ClaimValue& v) {
  if (auto b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return to_string(std::get<Rational>(v));
}

/// An exact assertion about one graph attached to a certificate node.
///
/// kind: det | negative_definite | negative_semidefinite | rational | node_count | minimal | bad_set
/// subject: graph | side_v | side_w | side_w_minus_w | slope_v | slope_w | filled_v | filled_w | lowered_jump_part | blown_up
struct Claim {
  std::string kind;
  std::string subject;
  ClaimValue expected;
  ClaimValue got;
  /// Only for bad_set.
  std::vector<VertexId> vertices;
};

struct CertificateTree {
  PlumbingGraph graph;
  CertTag tag = CertTag::BaseM1;
  /// Case1 / SemidefCut: the cut edge as (v, w); Case2: the two nodes.
  std::optional<std::pair<VertexId, VertexId>> cut;
  std::optional<Rational> r;
  /// Case1: the filled v-side before minimization.
  std::optional<PlumbingGraph> filled_v;
  /// Case1: component of G \ v whose lowered part carries a Laufer jump.
  std::vector<VertexId> jump_part;
  /// Case2: the new (-1)-vertex.
  std::optional<VertexId> blown_up_vertex;
  /// SemidefLeaf: Seifert invariants when the leaf is a star in normal form.
  std::optional<SeifertData> seifert;
  std::vector<Claim> claims;
  std::vector<CertificateTree> children;
};

namespace detail {

inline std::size_t count_nodes(const PlumbingGraph& g) { return nodes(g).size(); }

/// Components of G \ v, each paired with whether it contains a node of G.
inline std::vector<std::pair<PlumbingGraph, bool>> parts_around(const PlumbingGraph& g, const VertexId& v) {
  std::vector<std::pair<PlumbingGraph, bool>> out;
  for (auto& c : components(delete_vertices(g, {v}))) {
    bool has_node = false;
    for (const auto& [id, w] : c.weights()) has_node = has_node || is_node(g, id);
    out.emplace_back(std::move(c), has_node);
  }
  return out;
}

/// G_i(v) inside the lowered graph: the part plus v and its joining edge.
inline PlumbingGraph lowered_part(const PlumbingGraph& lowered, const PlumbingGraph& part, const VertexId& v) {
  std::set<VertexId> keep{v};
  for (const auto& [id, w] : part.weights()) keep.insert(id);
  return induced_subgraph(lowered, keep);
}

struct ClaimContext {
  const CertificateTree& node;

  PlumbingGraph subject(const std::string& name) const {
    if (name == "graph") return node.graph;
    if (name == "filled_v") {
      if (!node.filled_v) throw InputError("claim on filled_v but the node has none");
      return *node.filled_v;
    }
    if (name == "blown_up") {
      if (node.children.empty()) throw InputError("claim on blown_up but the node has no child");
      return node.children.front().graph;
    }
    if (!node.cut) throw InputError("claim on '" + name + "' but the node has no cut");
    const auto& [v, w] = *node.cut;
    if (name == "lowered_jump_part") {
      std::set<VertexId> part(node.jump_part.begin(), node.jump_part.end());
      auto lowered = lower_until_reduced(node.graph, {v});
      part.insert(v);
      return induced_subgraph(lowered, part);
    }
    auto split = delete_edges(node.graph, {{v, w}});
    auto side_v = component_containing(split, v);
    auto side_w = component_containing(split, w);
    if (name == "side_v") return side_v;
    if (name == "side_w") return side_w;
    if (name == "side_w_minus_w") return delete_vertices(side_w, {w});
    if (!node.r) throw InputError("claim on '" + name + "' but the node has no slope");
    if (name == "slope_w") return attach_slope_vertex(side_w, w, *node.r);
    if (name == "slope_v") return attach_slope_vertex(side_v, v, Rational(1) / *node.r);
    if (name == "filled_w") {
      if (node.children.size() < 2) throw InputError("claim on filled_w but the node has no second child");
      return node.children[1].graph;
    }
    throw InputError("unknown claim subject '" + name + "'");
  }
};

inline ClaimValue evaluate_claim(const CertificateTree& node, const Claim& c) {
  auto g = ClaimContext{node}.subject(c.subject);
  if (c.kind == "det") return determinant(g);
  if (c.kind == "negative_definite") return is_negative_definite(g);
  if (c.kind == "negative_semidefinite") return definiteness(g).negative_semidefinite();
  if (c.kind == "rational") return laufer_rational(g);
  if (c.kind == "node_count") return Rational(static_cast<long>(count_nodes(g)));
  if (c.kind == "minimal") return is_minimal(g);
  if (c.kind == "bad_set") return is_bad_set(g, std::set<VertexId>(c.vertices.begin(), c.vertices.end()));
  throw InputError("unknown claim kind '" + c.kind + "'");
}

inline void add_claim(CertificateTree& node, std::string kind, std::string subject,
                      std::vector<VertexId> vertices = {}) {
  Claim c{std::move(kind), std::move(subject), false, false, std::move(vertices)};
  c.got = evaluate_claim(node, c);
  c.expected = c.got;
  node.claims.push_back(std::move(c));
}

inline void require_claim(const CertificateTree& node, const std::string& kind, const std::string& subject,
                          const ClaimValue& want) {
  for (const auto& c : node.claims)
    if (c.kind == kind && c.subject == subject) {
      if (c.expected != want)
        throw ConsistencyError("certificate builder: " + kind + "(" + subject + ") is " + to_string(c.expected) +
                               ", expected " + to_string(want));
      return;
    }
  throw ConsistencyError("certificate builder: missing claim " + kind + "(" + subject + ")");
}

struct Case1Choice {
  VertexId v;
  VertexId w;
  std::vector<VertexId> jump_part;
};

/// For a fixed v: locate a part whose lowered copy carries a Laufer jump, then
/// the smallest neighbour w of v lying in a different node-carrying part.
inline std::optional<Case1Choice> case1_choice_at(const PlumbingGraph& g, const VertexId& v) {
  auto parts = parts_around(g, v);
  auto lowered = lower_until_reduced(g, {v});

  std::optional<std::size_t> jump_index;
  auto z = z_min(lowered);
  for (const auto& step : z.sequence.steps) {
    if (step.pairing < 2 || step.vertex == v) continue;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i].first.contains(step.vertex)) jump_index = i;
    break;
  }
  if (jump_index && laufer_rational(lowered_part(lowered, parts[*jump_index].first, v))) jump_index.reset();
  if (!jump_index) {
    for (std::size_t i = 0; i < parts.size() && !jump_index; ++i)
      if (!laufer_rational(lowered_part(lowered, parts[i].first, v))) jump_index = i;
  }
  if (!jump_index) return std::nullopt;

  std::optional<VertexId> best_w;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (j == *jump_index || !parts[j].second) continue;
    for (const auto& u : g.neighbors(v))
      if (parts[j].first.contains(u) && (!best_w || u < *best_w)) best_w = u;
  }
  if (!best_w) return std::nullopt;
  return Case1Choice{v, *best_w, parts[*jump_index].first.ids()};
}

inline std::optional<VertexId> first_case1_vertex(const PlumbingGraph& g) {
  for (const auto& v : g.ids()) {
    std::size_t with_nodes = 0;
    for (const auto& [part, has_node] : parts_around(g, v)) with_nodes += has_node ? 1 : 0;
    if (with_nodes >= 2) return v;
  }
  return std::nullopt;
}

/// The first edge, in sorted order, whose removal leaves nodes of G on both sides.
inline std::optional<Edge> separating_edge(const PlumbingGraph& g) {
  for (const auto& e : g.edges()) {
    auto split = delete_edges(g, {e});
    auto side = component_vertices(split, e.first);
    bool left = false, right = false;
    for (const auto& id : nodes(g)) (side.count(id) ? left : right) = true;
    if (left && right) return e;
  }
  return std::nullopt;
}

} // namespace detail

/// Splits a connected det-0 negative semidefinite tree along separating edges
/// until every piece has at most one node. Each cut uses
/// r' = -det(G_{w'} \ w') / det(G_{w'}); both fillings keep det 0.
inline CertificateTree semidef_decompose(const PlumbingGraph& g0) {
  if (!g0.is_connected()) throw InputError("semidefinite decomposition needs a connected graph");
  if (determinant(g0) != 0) throw InputError("semidefinite decomposition needs det = 0");
  if (definiteness(g0).kind != DefinitenessKind::NegativeSemidefinite)
    throw InputError("semidefinite decomposition needs a negative semidefinite graph");

  CertificateTree node;
  node.graph = g0;
  if (detail::count_nodes(g0) <= 1) {
    node.tag = CertTag::SemidefLeaf;
    if (star_center(g0)) {
      try {
        node.seifert = star_to_seifert(g0);
      } catch (const InputError&) {
        // legs not in normal form
      }
    }
    detail::add_claim(node, "det", "graph");
    detail::add_claim(node, "negative_semidefinite", "graph");
    detail::add_claim(node, "node_count", "graph");
    return node;
  }

  auto edge = detail::separating_edge(g0);
  if (!edge) throw ConsistencyError("graph with two nodes has no separating edge");
  const auto& [v, w] = *edge;
  node.tag = CertTag::SemidefCut;
  node.cut = std::make_pair(v, w);

  auto split = delete_edges(g0, {*edge});
  auto side_v = component_containing(split, v);
  auto side_w = component_containing(split, w);
  node.r = cut_slope(side_w, w);
  node.children.push_back(semidef_decompose(attach_string(side_v, v, Rational(1) / *node.r)));
  node.children.push_back(semidef_decompose(attach_string(side_w, w, *node.r)));

  detail::add_claim(node, "det", "graph");
  detail::add_claim(node, "negative_semidefinite", "graph");
  detail::add_claim(node, "det", "side_w");
  detail::add_claim(node, "det", "side_w_minus_w");
  detail::add_claim(node, "node_count", "graph");
  return node;
}

namespace detail {

inline CertificateTree build_lo(const PlumbingGraph& g);

inline CertificateTree base_leaf(const PlumbingGraph& g, const std::set<VertexId>& bad) {
  CertificateTree node;
  node.graph = g;
  node.tag = CertTag::BaseM1;
  add_claim(node, "negative_definite", "graph");
  add_claim(node, "rational", "graph");
  add_claim(node, "det", "graph");
  add_claim(node, "bad_set", "graph", {bad.begin(), bad.end()});
  require_claim(node, "rational", "graph", false);
  require_claim(node, "bad_set", "graph", true);
  return node;
}

inline CertificateTree build_case1(const PlumbingGraph& g, const Case1Choice& choice) {
  auto cut = cut_and_fill(g, choice.v, choice.w);
  CertificateTree node;
  node.graph = g;
  node.tag = CertTag::Case1;
  node.cut = std::make_pair(choice.v, choice.w);
  node.r = cut.r;
  node.filled_v = cut.filled_v;
  node.jump_part = choice.jump_part;

  auto child = minimize(cut.filled_v);
  if (laufer_rational(child)) throw ConsistencyError("filled v-side turned rational");
  node.children.push_back(build_lo(child));
  node.children.push_back(semidef_decompose(cut.filled_w));

  add_claim(node, "negative_definite", "graph");
  add_claim(node, "rational", "graph");
  add_claim(node, "det", "graph");
  add_claim(node, "node_count", "graph");
  add_claim(node, "rational", "lowered_jump_part");
  add_claim(node, "det", "side_w");
  add_claim(node, "det", "side_w_minus_w");
  add_claim(node, "det", "slope_w");
  add_claim(node, "det", "slope_v");
  add_claim(node, "negative_definite", "slope_v");
  add_claim(node, "det", "filled_w");
  add_claim(node, "negative_semidefinite", "filled_w");
  add_claim(node, "det", "filled_v");
  add_claim(node, "negative_definite", "filled_v");
  add_claim(node, "rational", "filled_v");
  add_claim(node, "node_count", "filled_v");
  require_claim(node, "rational", "lowered_jump_part", false);
  require_claim(node, "det", "filled_w", Rational(0));
  require_claim(node, "rational", "filled_v", false);
  return node;
}

inline CertificateTree build_lo(const PlumbingGraph& g) {
  if (auto small = min_bad_up_to(g, 1)) {
    if (small->m == 0) throw ConsistencyError("certificate requested for a rational graph");
    return base_leaf(g, small->witness);
  }
  if (auto v = first_case1_vertex(g)) {
    auto choice = case1_choice_at(g, *v);
    if (!choice) throw ConsistencyError("no Laufer jump found next to the Case 1 vertex " + *v);
    return build_case1(g, *choice);
  }

  auto node_ids = nodes(g);
  if (node_ids.size() != 2 || !g.has_edge(node_ids[0], node_ids[1]))
    throw ConsistencyError("graph with m >= 2 is neither Case 1 nor two adjacent nodes");
  auto blown = blow_up(g, node_ids[0], node_ids[1]);

  CertificateTree node;
  node.graph = g;
  node.tag = CertTag::Case2;
  node.cut = std::make_pair(node_ids[0], node_ids[1]);
  node.blown_up_vertex = blown.vertex;

  if (laufer_rational(lower_until_reduced(blown.graph, {blown.vertex}))) {
    node.children.push_back(base_leaf(blown.graph, {blown.vertex}));
  } else {
    auto choice = case1_choice_at(blown.graph, blown.vertex);
    if (!choice) throw ConsistencyError("blown-up graph has no Case 1 data at the new vertex");
    node.children.push_back(build_case1(blown.graph, *choice));
  }
  add_claim(node, "negative_definite", "graph");
  add_claim(node, "rational", "graph");
  add_claim(node, "det", "graph");
  add_claim(node, "det", "blown_up");
  add_claim(node, "negative_definite", "blown_up");
  return node;
}

} // namespace detail

/// Witness tree for the left-orderability / foliation induction on a
/// connected, negative definite, minimal, non-rational graph.
inline CertificateTree lo_certificate(const PlumbingGraph& g) {
  if (!g.is_connected()) throw InputError("certificate needs a connected graph");
  if (!is_negative_definite(g)) throw InputError("certificate needs a negative definite graph");
  if (!is_minimal(g)) throw InputError("certificate needs a minimal graph; minimize it first");
  if (laufer_rational(g)) throw InputError("graph is rational; there is nothing to certify");
  return detail::build_lo(g);
}

struct CheckResult {
  bool ok = true;
  /// Location of the first failure, e.g. "root/children[0]".
  std::string path;
  std::string message;
};

namespace detail {

struct Checker {
  CheckResult result;

  bool fail(const std::string& path, const std::string& message) {
    if (result.ok) result = {false, path, message};
    return false;
  }

  bool require(bool cond, const std::string& path, const std::string& message) {
    return cond || fail(path, message);
  }

  bool claims(const CertificateTree& node, const std::string& path) {
    for (const auto& c : node.claims) {
      ClaimValue actual = evaluate_claim(node, c);
      std::string label = c.kind + "(" + c.subject + ")";
      if (c.expected != actual)
        return fail(path, label + ": expected " + to_string(c.expected) + ", recomputed " + to_string(actual));
      if (c.got != actual)
        return fail(path, label + ": recorded " + to_string(c.got) + ", recomputed " + to_string(actual));
    }
    return true;
  }

  bool non_rational_nd(const PlumbingGraph& g, const std::string& path) {
    return require(g.is_connected(), path, "graph is not connected") &&
           require(is_negative_definite(g), path, "graph is not negative definite") &&
           require(!laufer_rational(g), path, "graph is rational");
  }

  bool lo_node(const CertificateTree& node, const std::string& path) {
    switch (node.tag) {
    case CertTag::BaseM1:
      return non_rational_nd(node.graph, path) &&
             require(node.children.empty(), path, "BaseM1 leaf has children") &&
             require(min_bad_up_to(node.graph, 1).has_value(), path, "no bad set of size <= 1") &&
             claims(node, path);
    case CertTag::Case1:
      return case1(node, path);
    case CertTag::Case2:
      return case2(node, path);
    default:
      return fail(path, "expected a BaseM1, Case1 or Case2 node, got " + to_string(node.tag));
    }
  }

  bool case1(const CertificateTree& node, const std::string& path) {
    const auto& g = node.graph;
    if (!non_rational_nd(g, path)) return false;
    if (!require(node.cut && node.r && node.filled_v, path, "Case1 node lacks cut, slope or filled_v")) return false;
    const auto& [v, w] = *node.cut;
    if (!require(g.has_edge(v, w), path, "cut edge is not an edge of the graph")) return false;
    if (!require(node.children.size() == 2, path, "Case1 needs exactly two children")) return false;

    auto parts = parts_around(g, v);
    std::size_t with_nodes = 0;
    const PlumbingGraph* w_part = nullptr;
    const PlumbingGraph* jump_part = nullptr;
    std::set<VertexId> jump(node.jump_part.begin(), node.jump_part.end());
    for (const auto& [part, has_node] : parts) {
      with_nodes += has_node ? 1 : 0;
      if (part.contains(w)) {
        w_part = &part;
        if (!require(has_node, path, "the w-side carries no node")) return false;
      }
      auto ids = part.ids();
      if (std::set<VertexId>(ids.begin(), ids.end()) == jump) jump_part = &part;
    }
    if (!require(with_nodes >= 2, path, "fewer than two parts around v carry nodes")) return false;
    if (!require(jump_part && jump_part != w_part, path, "jump part is not a part around v other than the w-side"))
      return false;
    auto lowered = lower_until_reduced(g, {v});
    if (!require(!laufer_rational(lowered_part(lowered, *jump_part, v)), path, "lowered jump part is rational"))
      return false;

    auto split = delete_edges(g, {{v, w}});
    auto side_v = component_containing(split, v);
    auto side_w = component_containing(split, w);
    Rational r = cut_slope(side_w, w);
    if (!require(r == *node.r, path, "slope is " + to_string(*node.r) + ", recomputed " + to_string(r)))
      return false;
    if (!require(determinant(attach_slope_vertex(side_v, v, Rational(1) / r)) *
                         determinant(delete_vertices(side_w, {w})) ==
                     determinant(g),
                 path, "det(G_v(1/r)) * det(G_w \\ w) != det(G)"))
      return false;

    const auto& filled_v = *node.filled_v;
    auto v_value = attached_string_value(filled_v, side_v, v);
    if (!require(v_value && *v_value == Rational(1) / r, path, "filled_v is not G_v with the string of 1/r"))
      return false;
    if (!require(is_negative_definite(filled_v), path, "filled_v is not negative definite") ||
        !require(!laufer_rational(filled_v), path, "filled_v is rational"))
      return false;

    const auto& rec = node.children[0];
    const auto& semi = node.children[1];
    if (!require(rec.graph == minimize(filled_v), path, "first child is not the minimized filled_v") ||
        !require(count_nodes(rec.graph) < count_nodes(g), path, "node count does not decrease"))
      return false;
    auto w_value = attached_string_value(semi.graph, side_w, w);
    if (!require(w_value && *w_value == r, path, "second child is not G_w with the string of r") ||
        !require(determinant(semi.graph) == 0, path, "filled w-side has nonzero det"))
      return false;
    return claims(node, path) && lo_node(rec, path + "/children[0]") &&
           semidef_node(semi, path + "/children[1]");
  }

  bool case2(const CertificateTree& node, const std::string& path) {
    const auto& g = node.graph;
    if (!non_rational_nd(g, path)) return false;
    if (!require(node.cut && node.blown_up_vertex, path, "Case2 node lacks the node pair or the new vertex"))
      return false;
    auto node_ids = nodes(g);
    const auto& [n1, n2] = *node.cut;
    if (!require(node_ids.size() == 2 && node_ids[0] == n1 && node_ids[1] == n2 && g.has_edge(n1, n2), path,
                 "Case2 needs exactly two adjacent nodes"))
      return false;
    if (!require(!first_case1_vertex(g), path, "Case1 applies, Case2 is not allowed")) return false;
    if (!require(node.children.size() == 1, path, "Case2 needs exactly one child")) return false;
    auto blown = blow_up(g, n1, n2);
    const auto& child = node.children[0];
    if (!require(blown.vertex == *node.blown_up_vertex && child.graph == blown.graph, path,
                 "child is not the blow-up of the node edge"))
      return false;
    if (child.tag == CertTag::Case1) {
      if (!require(child.cut && child.cut->first == blown.vertex, path, "Case1 child must cut at the new vertex"))
        return false;
    } else if (child.tag == CertTag::BaseM1) {
      if (!require(is_bad_set(blown.graph, {blown.vertex}), path, "new vertex alone is not bad")) return false;
    } else {
      return fail(path, "Case2 child must be BaseM1 or Case1");
    }
    return claims(node, path) && lo_node(child, path + "/children[0]");
  }

  bool semidef_node(const CertificateTree& node, const std::string& path) {
    const auto& g = node.graph;
    if (!require(g.is_connected(), path, "graph is not connected") ||
        !require(determinant(g) == 0, path, "det is not 0") ||
        !require(definiteness(g).kind == DefinitenessKind::NegativeSemidefinite, path,
                 "graph is not negative semidefinite"))
      return false;
    if (node.tag == CertTag::SemidefLeaf) {
      if (!require(node.children.empty(), path, "leaf has children") ||
          !require(count_nodes(g) <= 1, path, "leaf has more than one node"))
        return false;
      if (node.seifert) {
        SeifertData sd;
        try {
          sd = star_to_seifert(g);
        } catch (const InputError& e) {
          return fail(path, std::string("Seifert data on a non-star leaf: ") + e.what());
        }
        if (!require(sd == *node.seifert, path, "Seifert data does not match the leaf") ||
            !require(orbifold_euler(sd) == 0, path, "leaf orbifold Euler number is not 0"))
          return false;
      }
      return claims(node, path);
    }
    if (node.tag != CertTag::SemidefCut) return fail(path, "expected a SemidefCut or SemidefLeaf node");
    if (!require(node.cut && node.r && node.children.size() == 2, path, "SemidefCut needs cut, slope, two children"))
      return false;
    const auto& [v, w] = *node.cut;
    if (!require(g.has_edge(v, w), path, "cut edge is not an edge of the graph")) return false;
    auto split = delete_edges(g, {{v, w}});
    auto side_v = component_containing(split, v);
    auto side_w = component_containing(split, w);
    bool left = false, right = false;
    for (const auto& id : nodes(g)) (side_v.contains(id) ? left : right) = true;
    if (!require(left && right, path, "cut edge does not separate two nodes")) return false;
    Rational r = cut_slope(side_w, w);
    if (!require(r == *node.r, path, "slope is " + to_string(*node.r) + ", recomputed " + to_string(r)))
      return false;
    auto v_value = attached_string_value(node.children[0].graph, side_v, v);
    auto w_value = attached_string_value(node.children[1].graph, side_w, w);
    if (!require(v_value && *v_value == Rational(1) / r, path, "first child is not G_v' with the string of 1/r'") ||
        !require(w_value && *w_value == r, path, "second child is not G_w' with the string of r'"))
      return false;
    for (const auto& c : node.children)
      if (!require(count_nodes(c.graph) < count_nodes(g), path, "node count does not decrease")) return false;
    return claims(node, path) && semidef_node(node.children[0], path + "/children[0]") &&
           semidef_node(node.children[1], path + "/children[1]");
  }
};

} // namespace detail

/// Re-verifies a certificate from scratch with the lattice and Laufer
/// primitives; nothing recorded by the builder is trusted.
inline CheckResult check_certificate(const CertificateTree& c) {
  detail::Checker checker;
  try {
    if (c.tag == CertTag::SemidefCut || c.tag == CertTag::SemidefLeaf)
      checker.semidef_node(c, "root");
    else
      checker.lo_node(c, "root");
  } catch (const std::exception& e) {
    checker.fail(checker.result.ok ? "root" : checker.result.path, std::string("check aborted: ") + e.what());
  }
  return checker.result;
}

} // namespace plumb
