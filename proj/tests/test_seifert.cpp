#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "plumb/isomorphism.hpp"
#include "plumb/seifert.hpp"

using namespace plumb;
using testutil::graph;

namespace {

SeifertData data(long e0, std::vector<std::pair<long, long>> legs) {
  SeifertData sd{Integer(e0), {}};
  for (auto [a, w] : legs) sd.legs.push_back({Integer(a), Integer(w)});
  std::sort(sd.legs.begin(), sd.legs.end());
  return sd;
}

std::vector<std::pair<long, long>> as_pairs(const SeifertData& sd) {
  std::vector<std::pair<long, long>> out;
  for (const auto& l : sd.legs) out.push_back({static_cast<long>(l.alpha), static_cast<long>(l.omega)});
  return out;
}

SeifertData random_star(std::mt19937& rng, long max_alpha) {
  for (;;) {
    std::size_t nu = 3 + rng() % 2;
    std::vector<std::pair<long, long>> legs;
    for (std::size_t i = 0; i < nu; ++i) {
      long a = 2 + static_cast<long>(rng() % static_cast<unsigned>(max_alpha - 1));
      long w = 1 + static_cast<long>(rng() % static_cast<unsigned>(a - 1));
      if (std::gcd(a, w) != 1) w = 1;
      legs.push_back({a, w});
    }
    auto sd = data(-1 - static_cast<long>(rng() % 3), legs);
    if (orbifold_euler(sd) < 0) return sd;
  }
}

} // namespace

TEST(StarToSeifert, Examples) {
  EXPECT_EQ(star_to_seifert(graph(testutil::kE8)), data(-2, {{2, 1}, {3, 2}, {5, 4}}));
  EXPECT_EQ(star_to_seifert(graph(testutil::kSigma237)), data(-1, {{2, 1}, {3, 1}, {7, 1}}));
  EXPECT_THROW(star_to_seifert(graph("vertex a -2\nvertex b -2\nedge a b")), InputError);
  EXPECT_THROW(star_to_seifert(graph(testutil::kTwoStar)), InputError);
  EXPECT_THROW(star_to_seifert(graph("vertex c -2\nvertex a -1\nvertex b -2\nvertex d -2\nedge c a\nedge c b\nedge c d")),
               InputError);
}

TEST(SeifertToGraph, InvertsExamples) {
  EXPECT_TRUE(is_isomorphic(seifert_to_graph(data(-2, {{2, 1}, {3, 2}, {5, 4}})), graph(testutil::kE8)));
  EXPECT_TRUE(is_isomorphic(seifert_to_graph(data(-1, {{2, 1}, {3, 1}, {7, 1}})), graph(testutil::kSigma237)));
  EXPECT_THROW(seifert_to_graph(data(-1, {{2, 1}, {3, 1}})), InputError);
  EXPECT_THROW(seifert_to_graph(data(-1, {{2, 1}, {4, 2}, {5, 1}})), InputError);
  EXPECT_THROW(seifert_to_graph(data(-1, {{2, 1}, {3, 3}, {5, 1}})), InputError);
}

TEST(SeifertToGraph, RoundTripAndLegDeterminants) {
  std::mt19937 rng(301);
  for (int t = 0; t < 200; ++t) {
    auto sd = random_star(rng, 13);
    auto g = seifert_to_graph(sd);
    EXPECT_EQ(star_to_seifert(g), sd);
    for (std::size_t i = 0; i < sd.legs.size(); ++i) {
      std::set<VertexId> leg;
      for (const auto& id : g.ids())
        if (id.starts_with("v" + std::to_string(i + 1) + "_")) leg.insert(id);
      auto path = induced_subgraph(g, leg);
      EXPECT_EQ(oracle::det(path), sd.legs[i].alpha);
    }
  }
}

TEST(OrbifoldEuler, Examples) {
  EXPECT_EQ(orbifold_euler(data(-2, {{2, 1}, {3, 2}, {5, 4}})), Rational(-1) / 30);
  EXPECT_EQ(orbifold_euler(data(-1, {{2, 1}, {3, 1}, {7, 1}})), Rational(-1) / 42);
  EXPECT_EQ(orbifold_euler(data(-3, {{2, 1}, {2, 1}, {2, 1}})), Rational(-3) / 2);
}

TEST(OrbifoldEuler, NegativeIffDefinite) {
  std::mt19937 rng(307);
  std::size_t positive = 0;
  for (int t = 0; t < 400; ++t) {
    std::vector<std::pair<long, long>> legs;
    for (int i = 0; i < 3; ++i) {
      long a = 2 + static_cast<long>(rng() % 8);
      legs.push_back({a, 1});
    }
    auto sd = data(-1 - static_cast<long>(rng() % 2), legs);
    auto g = seifert_to_graph(sd);
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    EXPECT_EQ(orbifold_euler(sd) < 0, oracle::sylvester_negative_definite(g, order)) << to_string(sd);
    positive += orbifold_euler(sd) >= 0 ? 1 : 0;
  }
  EXPECT_GT(positive, 20u);
}

TEST(Pinkham, Examples) {
  auto s237 = pinkham_nonrational(data(-1, {{2, 1}, {3, 1}, {7, 1}}));
  EXPECT_TRUE(s237.nonrational);
  EXPECT_EQ(s237.witness, Integer(1));

  auto e8 = data(-2, {{2, 1}, {3, 2}, {5, 4}});
  EXPECT_FALSE(pinkham_nonrational(e8).nonrational);
  EXPECT_FALSE(oracle::pinkham_scan(-2, as_pairs(e8), 30).has_value());
  EXPECT_FALSE(pinkham_holds_at(e8, 0));
  EXPECT_THROW(pinkham_nonrational(data(-1, {{2, 1}, {2, 1}, {2, 1}})), InputError);
}

TEST(Pinkham, BoundMatchesUnboundedScan) {
  std::mt19937 rng(311);
  for (int t = 0; t < 300; ++t) {
    auto sd = random_star(rng, 12);
    auto verdict = pinkham_nonrational(sd);
    auto far = oracle::pinkham_scan(static_cast<long>(sd.e0), as_pairs(sd), 10 * static_cast<long>(verdict.bound) + 10);
    EXPECT_EQ(verdict.nonrational, far.has_value()) << to_string(sd);
    if (far) EXPECT_EQ(*verdict.witness, *far);
  }
}

TEST(Pinkham, AgreesWithLaufer) {
  std::mt19937 rng(313);
  for (int t = 0; t < 150; ++t) {
    auto sd = random_star(rng, 9);
    EXPECT_EQ(pinkham_nonrational(sd).nonrational, !laufer_rational(seifert_to_graph(sd))) << to_string(sd);
  }
}

TEST(Realizable, Examples) {
  auto w = realizable(Rational(1) / 2, Rational(1) / 3, Rational(1) / 7);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->m, 5);
  EXPECT_EQ(w->a, 3);
  EXPECT_FALSE(realizable(Rational(1) / 2, Rational(1) / 3, Rational(1) / 5).has_value());
  EXPECT_FALSE(realizable(Rational(1) / 2, Rational(2) / 3, Rational(3) / 4).has_value());
  EXPECT_THROW(realizable(Rational(0), Rational(1) / 2, Rational(1) / 2), InputError);
  EXPECT_THROW(realizable(Rational(1), Rational(1) / 2, Rational(1) / 2), InputError);
}

TEST(Realizable, WitnessIsValidAndPermutationInvariant) {
  std::mt19937 rng(317);
  for (int t = 0; t < 300; ++t) {
    std::array<Rational, 3> x;
    for (auto& c : x) {
      long q = 2 + static_cast<long>(rng() % 15);
      c = Rational(1 + static_cast<long>(rng() % static_cast<unsigned>(q - 1))) / Rational(q);
    }
    auto base = realizable(x[0], x[1], x[2]);
    if (base) {
      Rational m(base->m);
      Rational a(base->a);
      EXPECT_LT(x[base->order[0]], a / m);
      EXPECT_LT(x[base->order[1]], (m - a) / m);
      EXPECT_LT(x[base->order[2]], Rational(1) / m);
    }
    std::array<int, 3> p{0, 1, 2};
    do {
      EXPECT_EQ(realizable(x[p[0]], x[p[1]], x[p[2]]).has_value(), base.has_value());
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST(Foliation, Examples) {
  auto s237 = foliation_criterion(data(-1, {{2, 1}, {3, 1}, {7, 1}}));
  EXPECT_TRUE(s237.foliation);
  ASSERT_TRUE(s237.witness.has_value());
  EXPECT_EQ(s237.witness->m, 5);
  EXPECT_EQ(s237.witness->a, 3);

  EXPECT_FALSE(foliation_criterion(data(-2, {{2, 1}, {3, 2}, {5, 4}})).foliation);

  auto deep = data(-3, {{2, 1}, {3, 1}, {7, 1}});
  EXPECT_FALSE(foliation_criterion(deep).foliation);
  EXPECT_TRUE(laufer_rational(seifert_to_graph(deep)));

  EXPECT_THROW(foliation_criterion(data(-2, {{2, 1}, {2, 1}, {2, 1}, {2, 1}})), InputError);
}

TEST(Foliation, AgreesWithPinkhamAndLaufer) {
  std::mt19937 rng(331);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::pair<long, long>> legs;
    for (int i = 0; i < 3; ++i) {
      long a = 2 + static_cast<long>(rng() % 10);
      long w = 1 + static_cast<long>(rng() % static_cast<unsigned>(a - 1));
      legs.push_back({a, std::gcd(a, w) == 1 ? w : 1});
    }
    auto sd = data(-1 - static_cast<long>(rng() % 3), legs);
    if (orbifold_euler(sd) >= 0) continue;
    bool non_rational = !laufer_rational(seifert_to_graph(sd));
    EXPECT_EQ(foliation_criterion(sd).foliation, non_rational) << to_string(sd);
    EXPECT_EQ(pinkham_nonrational(sd).nonrational, non_rational) << to_string(sd);
  }
}

TEST(Brieskorn, Examples) {
  auto e8 = brieskorn_seifert(2, 3, 5);
  EXPECT_EQ(e8, data(-2, {{2, 1}, {3, 2}, {5, 4}}));
  EXPECT_TRUE(is_isomorphic(seifert_to_graph(e8), graph(testutil::kE8)));
  EXPECT_EQ(brieskorn_seifert(2, 3, 7), data(-1, {{2, 1}, {3, 1}, {7, 1}}));
  EXPECT_THROW(brieskorn_seifert(2, 4, 5), InputError);
  EXPECT_THROW(brieskorn_seifert(1, 3, 5), InputError);
}

TEST(Brieskorn, HomologySpheres) {
  std::mt19937 rng(337);
  std::size_t done = 0;
  while (done < 20) {
    long p = 2 + static_cast<long>(rng() % 12), q = 2 + static_cast<long>(rng() % 12), r = 2 + static_cast<long>(rng() % 12);
    if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1) continue;
    auto sd = brieskorn_seifert(p, q, r);
    EXPECT_EQ(oracle::det(seifert_to_graph(sd)), 1);
    EXPECT_EQ(orbifold_euler(sd), Rational(-1) / Rational(p * q * r));
    ++done;
  }
}

TEST(Brieskorn, CoverRationality) {
  EXPECT_TRUE(brieskorn_cover_rational(3, 5).rational);
  EXPECT_TRUE(brieskorn_cover_rational(3, 5).cross_checked);
  EXPECT_FALSE(brieskorn_cover_rational(3, 7).rational);
  EXPECT_TRUE(brieskorn_cover_rational(5, 3).rational);
  EXPECT_TRUE(brieskorn_cover_rational(2, 9).rational);
  EXPECT_FALSE(brieskorn_cover_rational(2, 9).cross_checked);
  EXPECT_FALSE(brieskorn_cover_rational(4, 4).rational);
  EXPECT_THROW(brieskorn_cover_rational(1, 5), InputError);
}
