#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "plumb/classify.hpp"
#include "plumb/graph.hpp"

namespace plumb {

struct CensusOptions {
  std::size_t max_vertices = 6;
  int weight_min = -5;
  /// Skip graphs with a (-1)-vertex of valency <= 2 (the single (-1)-vertex is kept).
  bool minimal_only = false;
  /// Restrict to det(G) = 1 while enumerating.
  bool zhs_only = false;
};

/// A census tree: vertex 0 is the root, parent[i] < i for i > 0.
struct CensusTree {
  std::vector<int> weights;
  std::vector<int> parent;
  std::int64_t det = 0;

  std::size_t size() const noexcept { return weights.size(); }

  /// Vertices are named v0, v1, ... in the generation order.
  PlumbingGraph graph() const {
    std::map<VertexId, Rational> w;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      w.emplace("v" + std::to_string(i), Rational(weights[i]));
      if (i > 0) edges.push_back(make_edge("v" + std::to_string(parent[i]), "v" + std::to_string(i)));
    }
    return PlumbingGraph::build(std::move(w), edges);
  }
};

namespace detail {

/// Negative definite rooted weighted tree, with D = det(-I) and D' = det of the
/// tree minus its root (the product over the children).
struct RootedTree {
  int weight;
  std::vector<std::size_t> children;
  std::size_t size;
  std::int64_t d;
  std::int64_t d_root_removed;
};

class CensusGenerator {
public:
  explicit CensusGenerator(const CensusOptions& opts) : opts_(opts) {
    if (opts.max_vertices < 1 || opts.max_vertices > 8) throw InputError("census supports 1 to 8 vertices");
    if (opts.weight_min < -9 || opts.weight_min > -1) throw InputError("census weight bound must lie in [-9, -1]");
    build_rooted(opts.max_vertices / 2);
  }

  void run(const std::function<void(const CensusTree&)>& emit) {
    for (std::size_t n = 1; n <= opts_.max_vertices; ++n) {
      if (n == 1) {
        for (int w = -1; w >= opts_.weight_min; --w) emit_single(w, emit);
        continue;
      }
      std::vector<std::size_t> chosen;
      for_each_multiset(n - 1, (n - 1) / 2, 0, chosen, [&](const std::vector<std::size_t>& kids) {
        for (int w = -1; w >= opts_.weight_min; --w) {
          if (w == -1 && opts_.minimal_only && kids.size() < 3) continue;
          auto [d, ok] = combine(w, kids);
          if (ok) emit_tree(w, kids, d, emit);
        }
      });
      if (n % 2 == 0) {
        for (std::size_t a = first_of_size(n / 2); a < rooted_.size() && rooted_[a].size == n / 2; ++a)
          for (std::size_t b = a; b < rooted_.size() && rooted_[b].size == n / 2; ++b) {
            const auto& x = rooted_[a];
            const auto& y = rooted_[b];
            std::int64_t d = x.d * y.d - x.d_root_removed * y.d_root_removed;
            if (d <= 0 || (opts_.zhs_only && d != 1)) continue;
            CensusTree t;
            t.det = d;
            append(a, -1, t);
            append(b, 0, t);
            emit(t);
          }
      }
    }
  }

private:
  std::size_t first_of_size(std::size_t k) const {
    for (std::size_t i = 0; i < rooted_.size(); ++i)
      if (rooted_[i].size == k) return i;
    return rooted_.size();
  }

  /// D = (-w) * prod D(c) - sum_i D'(c_i) prod_{j != i} D(c_j).
  std::pair<std::int64_t, bool> combine(int w, const std::vector<std::size_t>& kids) const {
    std::int64_t prod = 1;
    for (auto k : kids) prod *= rooted_[k].d;
    std::int64_t d = -static_cast<std::int64_t>(w) * prod;
    for (auto k : kids) d -= rooted_[k].d_root_removed * (prod / rooted_[k].d);
    return {d, d > 0};
  }

  /// Multisets of rooted-tree indices (non-decreasing, each of size <= max_part) with sizes summing to total.
  template <class Visit>
  void for_each_multiset(std::size_t total, std::size_t max_part, std::size_t start, std::vector<std::size_t>& chosen,
                         Visit&& visit) const {
    if (total == 0) {
      visit(chosen);
      return;
    }
    for (std::size_t i = start; i < rooted_.size(); ++i) {
      const auto& t = rooted_[i];
      if (t.size > max_part) break;
      if (t.size > total) continue;
      chosen.push_back(i);
      for_each_multiset(total - t.size, max_part, i, chosen, visit);
      chosen.pop_back();
    }
  }

  void build_rooted(std::size_t max_size) {
    for (std::size_t k = 1; k <= max_size; ++k) {
      std::vector<RootedTree> layer;
      std::vector<std::size_t> chosen;
      for_each_multiset(k - 1, k - 1, 0, chosen, [&](const std::vector<std::size_t>& kids) {
        for (int w = -1; w >= opts_.weight_min; --w) {
          // a hanging subtree root also meets its parent
          if (w == -1 && opts_.minimal_only && kids.size() + 1 < 3) continue;
          auto [d, ok] = combine(w, kids);
          if (!ok) continue;
          std::int64_t d_removed = 1;
          for (auto c : kids) d_removed *= rooted_[c].d;
          layer.push_back({w, kids, k, d, d_removed});
        }
      });
      rooted_.insert(rooted_.end(), layer.begin(), layer.end());
    }
  }

  void append(std::size_t index, int parent, CensusTree& t) const {
    const auto& r = rooted_[index];
    int self = static_cast<int>(t.weights.size());
    t.weights.push_back(r.weight);
    t.parent.push_back(parent);
    for (auto c : r.children) append(c, self, t);
  }

  void emit_single(int w, const std::function<void(const CensusTree&)>& emit) const {
    if (opts_.zhs_only && w != -1) return;
    emit(CensusTree{{w}, {-1}, -w});
  }

  void emit_tree(int w, const std::vector<std::size_t>& kids, std::int64_t d,
                 const std::function<void(const CensusTree&)>& emit) const {
    if (opts_.zhs_only && d != 1) return;
    CensusTree t;
    t.det = d;
    t.weights.push_back(w);
    t.parent.push_back(-1);
    for (auto c : kids) append(c, 0, t);
    emit(t);
  }

  CensusOptions opts_;
  std::vector<RootedTree> rooted_;
};

} // namespace detail

/// Every connected negative definite tree with weights in [weight_min, -1] and
/// at most max_vertices vertices, once per isomorphism class, in a fixed order
/// (by size, then by the centroid decomposition).
inline void for_each_census_tree(const CensusOptions& opts, const std::function<void(const CensusTree&)>& emit) {
  detail::CensusGenerator(opts).run(emit);
}

inline std::vector<PlumbingGraph> census_graphs(const CensusOptions& opts) {
  std::vector<PlumbingGraph> out;
  for_each_census_tree(opts, [&](const CensusTree& t) { out.push_back(t.graph()); });
  return out;
}

struct CensusRecord {
  std::string graph_text;
  std::size_t vertices;
  ClassificationReport report;
  double seconds;
};

/// Classifies each census graph; `jobs` worker threads, output in census order.
inline std::vector<CensusRecord> census(const CensusOptions& opts, const ClassifyOptions& classify_opts = {},
                                        unsigned jobs = 1) {
  auto graphs = census_graphs(opts);
  std::vector<CensusRecord> records(graphs.size());
  jobs = std::max(1u, jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](std::size_t begin, std::size_t step) {
    try {
      for (std::size_t i = begin; i < graphs.size(); i += step) {
        auto start = std::chrono::steady_clock::now();
        auto rep = classify(graphs[i], classify_opts);
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        records[i] = {serialize(graphs[i]), graphs[i].size(), std::move(rep), dt.count()};
      }
    } catch (...) {
      errors[begin] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j, jobs);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return records;
}

} // namespace plumb
