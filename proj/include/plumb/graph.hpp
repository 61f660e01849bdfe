#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plumb/error.hpp"
#include "plumb/rational.hpp"

namespace plumb {

using VertexId = std::string;

/// Unordered edge stored with `first < second`.
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId a, VertexId b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

inline bool is_valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  /// false when x and y were already joined
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }

  std::vector<std::size_t> parent;
};

} // namespace detail

/// A decorated forest with genus-zero vertices: the plumbing graph.
///
/// Values are immutable once built; every operation in this header returns a
/// new graph. Vertex ids survive all operations verbatim, and vertices created
/// by a move get fresh ids starting with an underscore prefix (see fresh_id).
class PlumbingGraph {
public:
  PlumbingGraph() = default;

  /// Throws InputError on invalid ids, loops, repeated edges, unknown endpoints or cycles.
  static PlumbingGraph build(std::map<VertexId, Rational> weights, const std::vector<Edge>& edges) {
    PlumbingGraph g;
    for (const auto& [id, w] : weights) {
      if (!is_valid_id(id)) throw InputError("invalid vertex id '" + id + "'");
      g.adjacency_[id];
    }
    g.weights_ = std::move(weights);

    std::map<VertexId, std::size_t> index;
    for (const auto& [id, w] : g.weights_) index.emplace(id, index.size());
    detail::DisjointSets sets(index.size());

    for (const auto& [a, b] : edges) {
      if (!g.contains(a) || !g.contains(b))
        throw InputError("edge " + a + " " + b + " references an undeclared vertex");
      if (a == b) throw InputError("loop at vertex " + a);
      Edge e = make_edge(a, b);
      if (g.edges_.count(e)) throw InputError("repeated edge " + a + " " + b);
      if (!sets.unite(index.at(a), index.at(b)))
        throw InputError("edge " + a + " " + b + " closes a cycle; plumbing graphs must be forests");
      g.edges_.insert(e);
      g.adjacency_[a].insert(b);
      g.adjacency_[b].insert(a);
    }
    return g;
  }

  std::size_t size() const noexcept { return weights_.size(); }
  bool empty() const noexcept { return weights_.empty(); }
  bool contains(const VertexId& v) const { return weights_.count(v) != 0; }

  const std::map<VertexId, Rational>& weights() const noexcept { return weights_; }
  const std::set<Edge>& edges() const noexcept { return edges_; }

  const Rational& weight(const VertexId& v) const {
    require(v);
    return weights_.at(v);
  }

  const std::set<VertexId>& neighbors(const VertexId& v) const {
    require(v);
    return adjacency_.at(v);
  }

  bool has_edge(const VertexId& a, const VertexId& b) const { return edges_.count(make_edge(a, b)) != 0; }

  /// Sorted.
  std::vector<VertexId> ids() const {
    std::vector<VertexId> out;
    out.reserve(weights_.size());
    for (const auto& [id, w] : weights_) out.push_back(id);
    return out;
  }

  bool is_connected() const {
    if (empty()) return false;
    return edges_.size() + 1 == weights_.size();
  }

  bool has_integer_weights() const {
    return std::all_of(weights_.begin(), weights_.end(), [](const auto& kv) { return is_integer(kv.second); });
  }

  friend bool operator==(const PlumbingGraph& a, const PlumbingGraph& b) {
    return a.weights_ == b.weights_ && a.edges_ == b.edges_;
  }

private:
  void require(const VertexId& v) const {
    if (!contains(v)) throw InputError("unknown vertex '" + v + "'");
  }

  std::map<VertexId, Rational> weights_;
  std::set<Edge> edges_;
  std::map<VertexId, std::set<VertexId>> adjacency_;
};

/// Dense index view used by the numerical routines; index order equals id order.
struct IndexedGraph {
  explicit IndexedGraph(const PlumbingGraph& g) : ids(g.ids()) {
    weights.reserve(ids.size());
    adjacency.resize(ids.size());
    for (const auto& id : ids) weights.push_back(g.weight(id));
    for (const auto& [a, b] : g.edges()) {
      auto i = index_of(a);
      auto j = index_of(b);
      adjacency[i].push_back(j);
      adjacency[j].push_back(i);
    }
    for (auto& nbrs : adjacency) std::sort(nbrs.begin(), nbrs.end());
  }

  std::size_t size() const noexcept { return ids.size(); }

  std::size_t index_of(const VertexId& v) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v) throw InputError("unknown vertex '" + v + "'");
    return static_cast<std::size_t>(it - ids.begin());
  }

  std::vector<VertexId> ids;
  std::vector<Rational> weights;
  std::vector<std::vector<std::size_t>> adjacency;
};

inline std::size_t valency(const PlumbingGraph& g, const VertexId& v) { return g.neighbors(v).size(); }

inline bool is_node(const PlumbingGraph& g, const VertexId& v) { return valency(g, v) >= 3; }

inline std::vector<VertexId> nodes(const PlumbingGraph& g) {
  std::vector<VertexId> out;
  for (const auto& [id, w] : g.weights())
    if (is_node(g, id)) out.push_back(id);
  return out;
}

/// `prefix` followed by the smallest positive counter not already used in g.
inline VertexId fresh_id(const PlumbingGraph& g, std::string_view prefix) {
  for (std::size_t k = 1;; ++k) {
    VertexId id = std::string(prefix) + std::to_string(k);
    if (!g.contains(id)) return id;
  }
}

inline std::vector<Edge> edge_list(const PlumbingGraph& g) { return {g.edges().begin(), g.edges().end()}; }

inline PlumbingGraph with_weight(const PlumbingGraph& g, const VertexId& v, const Rational& w) {
  auto weights = g.weights();
  if (!weights.count(v)) throw InputError("unknown vertex '" + v + "'");
  weights[v] = w;
  return PlumbingGraph::build(std::move(weights), edge_list(g));
}

inline PlumbingGraph induced_subgraph(const PlumbingGraph& g, const std::set<VertexId>& keep) {
  std::map<VertexId, Rational> weights;
  for (const auto& v : keep) weights.emplace(v, g.weight(v));
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (keep.count(e.first) && keep.count(e.second)) edges.push_back(e);
  return PlumbingGraph::build(std::move(weights), edges);
}

inline PlumbingGraph delete_vertices(const PlumbingGraph& g, const std::set<VertexId>& removed) {
  std::set<VertexId> keep;
  for (const auto& v : removed) (void)g.weight(v);
  for (const auto& [id, w] : g.weights())
    if (!removed.count(id)) keep.insert(id);
  return induced_subgraph(g, keep);
}

inline PlumbingGraph delete_edges(const PlumbingGraph& g, const std::vector<Edge>& removed) {
  std::set<Edge> drop;
  for (const auto& [a, b] : removed) {
    if (!g.has_edge(a, b)) throw InputError("no edge " + a + " " + b);
    drop.insert(make_edge(a, b));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (!drop.count(e)) edges.push_back(e);
  return PlumbingGraph::build(g.weights(), edges);
}

inline std::set<VertexId> component_vertices(const PlumbingGraph& g, const VertexId& start) {
  std::set<VertexId> seen{start};
  std::vector<VertexId> stack{start};
  while (!stack.empty()) {
    VertexId v = std::move(stack.back());
    stack.pop_back();
    for (const auto& u : g.neighbors(v))
      if (seen.insert(u).second) stack.push_back(u);
  }
  return seen;
}

inline PlumbingGraph component_containing(const PlumbingGraph& g, const VertexId& v) {
  return induced_subgraph(g, component_vertices(g, v));
}

/// Connected components ordered by their smallest vertex id.
inline std::vector<PlumbingGraph> components(const PlumbingGraph& g) {
  std::vector<PlumbingGraph> out;
  std::set<VertexId> done;
  for (const auto& [id, w] : g.weights()) {
    if (done.count(id)) continue;
    auto part = component_vertices(g, id);
    done.insert(part.begin(), part.end());
    out.push_back(induced_subgraph(g, part));
  }
  return out;
}

struct BlowUp {
  PlumbingGraph graph;
  VertexId vertex;
};

/// Subdivides (a,b) by a new (-1)-vertex and lowers both endpoint weights by one.
inline BlowUp blow_up(const PlumbingGraph& g, const VertexId& a, const VertexId& b) {
  if (!g.has_edge(a, b)) throw InputError("no edge " + a + " " + b);
  VertexId u = fresh_id(g, "_b");
  auto weights = g.weights();
  weights[a] -= 1;
  weights[b] -= 1;
  weights.emplace(u, Rational(-1));
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (e != make_edge(a, b)) edges.push_back(e);
  edges.push_back(make_edge(a, u));
  edges.push_back(make_edge(u, b));
  return {PlumbingGraph::build(std::move(weights), edges), u};
}

inline PlumbingGraph blow_up_edge(const PlumbingGraph& g, const VertexId& a, const VertexId& b) {
  return blow_up(g, a, b).graph;
}

inline bool can_blow_down(const PlumbingGraph& g, const VertexId& v) {
  return g.weight(v) == -1 && valency(g, v) <= 2;
}

inline PlumbingGraph blow_down(const PlumbingGraph& g, const VertexId& v) {
  if (!can_blow_down(g, v))
    throw InputError("cannot blow down " + v + ": needs weight -1 and valency at most 2");
  const auto& nbrs = g.neighbors(v);
  auto weights = g.weights();
  weights.erase(v);
  for (const auto& u : nbrs) weights[u] += 1;
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (e.first != v && e.second != v) edges.push_back(e);
  if (nbrs.size() == 2) edges.push_back(make_edge(*nbrs.begin(), *nbrs.rbegin()));
  return PlumbingGraph::build(std::move(weights), edges);
}

inline bool is_minimal(const PlumbingGraph& g) {
  if (g.size() <= 1) return true;
  for (const auto& [id, w] : g.weights())
    if (can_blow_down(g, id)) return false;
  return true;
}

/// Chooses which of the currently blow-down-able vertices (sorted) to remove next.
using BlowDownChooser = std::function<std::size_t(const std::vector<VertexId>&)>;

/// Blows down until no (-1)-vertex of valency <= 2 remains. The last vertex is
/// never removed, so a graph of S^3 ends as the single (-1)-vertex.
inline PlumbingGraph minimize(const PlumbingGraph& g, const BlowDownChooser& choose) {
  PlumbingGraph current = g;
  while (current.size() > 1) {
    std::vector<VertexId> candidates;
    for (const auto& [id, w] : current.weights())
      if (can_blow_down(current, id)) candidates.push_back(id);
    if (candidates.empty()) break;
    current = blow_down(current, candidates.at(choose(candidates)));
  }
  return current;
}

inline PlumbingGraph minimize(const PlumbingGraph& g) {
  return minimize(g, [](const std::vector<VertexId>&) { return std::size_t{0}; });
}

/// Graph file format: `vertex <id> <weight>`, `edge <id> <id>`, `#` comments.
inline PlumbingGraph parse_graph(std::string_view text) {
  std::map<VertexId, Rational> weights;
  std::map<VertexId, std::size_t> declared_at;
  std::vector<std::pair<Edge, std::size_t>> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "vertex") {
      if (tok.size() != 3)
        throw ParseError(line_no, "expected 'vertex <id> <weight>' (genus decorations are not supported)");
      if (!is_valid_id(tok[1])) throw ParseError(line_no, "invalid vertex id '" + tok[1] + "'");
      Rational w;
      if (!try_parse_rational(tok[2], w)) throw ParseError(line_no, "invalid weight '" + tok[2] + "'");
      if (!weights.emplace(tok[1], w).second) throw ParseError(line_no, "duplicate vertex '" + tok[1] + "'");
      declared_at.emplace(tok[1], line_no);
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) throw ParseError(line_no, "expected 'edge <id> <id>'");
      for (std::size_t i = 1; i < 3; ++i)
        if (!is_valid_id(tok[i])) throw ParseError(line_no, "invalid vertex id '" + tok[i] + "'");
      edges.push_back({{tok[1], tok[2]}, line_no});
    } else {
      throw ParseError(line_no, "unknown keyword '" + tok[0] + "'");
    }
  }

  if (weights.empty()) throw InputError("graph has no vertices");

  std::map<VertexId, std::size_t> index;
  for (const auto& [id, w] : weights) index.emplace(id, index.size());
  detail::DisjointSets sets(index.size());
  std::set<Edge> seen;
  std::vector<Edge> plain;
  for (const auto& [e, line] : edges) {
    const auto& [a, b] = e;
    for (const auto& end_id : {a, b})
      if (!weights.count(end_id)) throw ParseError(line, "edge references undeclared vertex '" + end_id + "'");
    if (a == b) throw ParseError(line, "loop at vertex '" + a + "'");
    if (!seen.insert(make_edge(a, b)).second) throw ParseError(line, "repeated edge " + a + " " + b);
    if (!sets.unite(index.at(a), index.at(b)))
      throw ParseError(line, "edge " + a + " " + b + " closes a cycle; plumbing graphs must be trees");
    plain.push_back(e);
  }
  return PlumbingGraph::build(std::move(weights), plain);
}

inline std::string serialize(const PlumbingGraph& g) {
  std::string out;
  for (const auto& [id, w] : g.weights()) out += "vertex " + id + " " + to_string(w) + "\n";
  for (const auto& [a, b] : g.edges()) out += "edge " + a + " " + b + "\n";
  return out;
}

} // namespace plumb
