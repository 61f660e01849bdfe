#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "plumb/lattice.hpp"

using namespace plumb;
using testutil::graph;

TEST(Pairing, BasicValues) {
  auto g = graph("vertex a -2\nvertex b -2\nedge a b");
  EXPECT_EQ(pairing(g, unit_cycle("a"), unit_cycle("a")), -2);
  EXPECT_EQ(pairing(g, unit_cycle("a"), unit_cycle("b")), 1);
  Cycle sum{{"a", 1}, {"b", 1}};
  EXPECT_EQ(pairing(g, sum, sum), -2);
  EXPECT_THROW(pairing(g, unit_cycle("z"), sum), InputError);
}

TEST(Pairing, RationalCycles) {
  auto g = graph("vertex a -3");
  QCycle k{{"a", Rational(1, 3)}};
  EXPECT_EQ(pairing(g, k, unit_cycle("a")), -1);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(graph("vertex a -2")), 2);
  EXPECT_EQ(determinant(graph(testutil::kE8)), 1);
  EXPECT_EQ(determinant(graph(testutil::kSigma237)), 1);
  EXPECT_EQ(determinant(PlumbingGraph{}), 1);
}

TEST(Determinant, DisjointUnionIsProduct) {
  auto g = graph("vertex a -2\nvertex b -3\nvertex c -5\nedge a b");
  EXPECT_EQ(determinant(g), 5 * 5);
}

TEST(Determinant, MatchesBareissOnRandomTrees) {
  std::mt19937 rng(1);
  for (int t = 0; t < 500; ++t) {
    auto g = testutil::random_tree(rng, 1 + t % 10, -6, 2);
    EXPECT_EQ(determinant(g), Rational(oracle::det(g))) << serialize(g);
  }
}

TEST(Determinant, RationalWeights) {
  // a single vertex decorated by -7/2 next to a (-2): det(-I) = 7/2 * 2 - 1 = 6
  auto g = graph("vertex a -7/2\nvertex b -2\nedge a b");
  EXPECT_EQ(determinant(g), 6);
}

TEST(Definiteness, Examples) {
  EXPECT_EQ(definiteness(graph(testutil::kE8)).kind, DefinitenessKind::NegativeDefinite);
  auto chain = definiteness(graph("vertex a -2\nvertex b -1\nvertex c -2\nedge a b\nedge b c"));
  EXPECT_EQ(chain.kind, DefinitenessKind::NegativeSemidefinite);
  EXPECT_EQ(chain.corank, 1u);
  EXPECT_EQ(definiteness(graph("vertex a 1")).kind, DefinitenessKind::Other);
  EXPECT_EQ(definiteness(graph("vertex a 0")).kind, DefinitenessKind::NegativeSemidefinite);
  EXPECT_EQ(definiteness(graph("vertex a -1\nvertex b -1\nedge a b")).kind, DefinitenessKind::NegativeSemidefinite);
  EXPECT_EQ(definiteness(graph("vertex a -1\nvertex b -1\nvertex c -1\nedge a b\nedge b c")).kind,
            DefinitenessKind::Other);
}

TEST(Definiteness, DominantDiagonalIsDefinite) {
  // e_v <= -valency everywhere, strictly at one vertex at least
  std::mt19937 rng(4);
  for (int t = 0; t < 200; ++t) {
    auto g = testutil::random_tree(rng, 2 + t % 10, -3, -1);
    std::map<VertexId, Rational> w;
    for (const auto& [id, x] : g.weights()) w[id] = -Rational(static_cast<long>(valency(g, id) + rng() % 2));
    auto ids = g.ids();
    w[ids[rng() % ids.size()]] -= 1;
    auto dominant = PlumbingGraph::build(w, edge_list(g));
    EXPECT_EQ(definiteness(dominant).kind, DefinitenessKind::NegativeDefinite) << serialize(dominant);
  }
}

TEST(Definiteness, EqualityEverywhereIsSemidefinite) {
  std::mt19937 rng(14);
  for (int t = 0; t < 50; ++t) {
    auto g = testutil::random_tree(rng, 2 + t % 8, -3, -1);
    std::map<VertexId, Rational> w;
    for (const auto& [id, x] : g.weights()) w[id] = -Rational(static_cast<long>(valency(g, id)));
    auto d = definiteness(PlumbingGraph::build(w, edge_list(g)));
    EXPECT_EQ(d.kind, DefinitenessKind::NegativeSemidefinite);
    EXPECT_EQ(d.corank, 1u);
  }
}

TEST(Definiteness, SylvesterConsistency) {
  std::mt19937 rng(2);
  std::size_t definite = 0, semidefinite = 0, other = 0;
  for (int t = 0; t < 600; ++t) {
    auto g = testutil::random_tree(rng, 1 + t % 7, -4, 0);
    auto d = definiteness(g);
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    EXPECT_EQ(d.kind == DefinitenessKind::NegativeDefinite, oracle::sylvester_negative_definite(g, order))
        << serialize(g);
    EXPECT_EQ(d.negative_semidefinite(), oracle::all_principal_minors_nonnegative(g)) << serialize(g);
    if (d.kind == DefinitenessKind::NegativeDefinite) EXPECT_GT(determinant(g), 0);
    if (d.kind == DefinitenessKind::NegativeSemidefinite) EXPECT_EQ(determinant(g), 0);
    (d.kind == DefinitenessKind::NegativeDefinite ? definite
     : d.kind == DefinitenessKind::Other          ? other
                                                  : semidefinite)++;
  }
  EXPECT_GT(definite, 50u);
  EXPECT_GT(semidefinite, 10u);
  EXPECT_GT(other, 50u);
}

TEST(CanonicalCycle, Examples) {
  auto twos = canonical_cycle(graph(testutil::kE8));
  for (const auto& [v, k] : twos) EXPECT_EQ(k, 0);
  EXPECT_EQ(canonical_cycle(graph("vertex a -3")).at("a"), Rational(-1, 3));

  auto s = graph(testutil::kSigma237);
  auto k = canonical_cycle(s);
  EXPECT_EQ(pairing(s, k, unit_cycle("c")), -1);
  EXPECT_EQ(pairing(s, k, unit_cycle("z")), 5);
  auto cramer = oracle::canonical_cycle_cramer(s);
  auto ids = s.ids();
  for (std::size_t i = 0; i < ids.size(); ++i) EXPECT_EQ(k.at(ids[i]), cramer[i]);
}

TEST(CanonicalCycle, SingularThrows) {
  EXPECT_THROW(canonical_cycle(graph("vertex a -2\nvertex b -1\nvertex c -2\nedge a b\nedge b c")), InputError);
}

TEST(CanonicalCycle, AdjunctionOnRandomDefiniteTrees) {
  std::mt19937 rng(8);
  for (int t = 0; t < 200; ++t) {
    auto g = testutil::random_tree(rng, 1 + t % 9, -6, -1);
    if (!is_negative_definite(g)) continue;
    auto k = canonical_cycle(g);
    for (const auto& v : g.ids()) EXPECT_EQ(pairing(g, k, unit_cycle(v)) + g.weight(v) + 2, 0);
  }
}

TEST(Chi, Basics) {
  auto s = graph(testutil::kSigma237);
  EXPECT_EQ(chi(s, Cycle{}), 0);
  for (const auto& v : s.ids()) EXPECT_EQ(chi(s, unit_cycle(v)), 1);
  Cycle z{{"c", 6}, {"x", 3}, {"y", 2}, {"z", 1}};
  EXPECT_EQ(chi(s, z), 0);
  EXPECT_EQ(chi(s, z), oracle::chi(s, {6, 3, 2, 1}));
}

TEST(Chi, Bilinearity) {
  std::mt19937 rng(12);
  for (int t = 0; t < 200; ++t) {
    auto g = testutil::random_tree(rng, 1 + t % 8, -5, -1);
    if (!is_negative_definite(g)) continue;
    auto k = canonical_cycle(g);
    Cycle a, b, sum;
    for (const auto& v : g.ids()) {
      a[v] = static_cast<std::int64_t>(rng() % 7) - 3;
      b[v] = static_cast<std::int64_t>(rng() % 7) - 3;
      sum[v] = a[v] + b[v];
    }
    EXPECT_EQ(chi(g, k, sum), chi(g, k, a) + chi(g, k, b) - pairing(g, a, b));
  }
}

TEST(DetEdgeIdentity, Examples) {
  auto g = graph("vertex a -2\nvertex b -2\nedge a b");
  EXPECT_TRUE(det_edge_identity_check(g, "a", "b"));
  EXPECT_EQ(determinant(g), determinant(delete_edges(g, {{"a", "b"}})) - determinant(PlumbingGraph{}));
  auto e8 = graph(testutil::kE8);
  for (const auto& [a, b] : e8.edges()) EXPECT_TRUE(det_edge_identity_check(e8, a, b));
  EXPECT_THROW(det_edge_identity_check(e8, "a1", "b2"), InputError);
}

TEST(DetEdgeIdentity, RandomTrees) {
  std::mt19937 rng(6);
  for (int t = 0; t < 300; ++t) {
    auto g = testutil::random_tree(rng, 2 + t % 7, -6, 1);
    for (const auto& [a, b] : g.edges()) EXPECT_TRUE(det_edge_identity_check(g, a, b));
  }
}
