#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "isobgg/orbits.hpp"

using namespace isobgg;

namespace {

void compare_with_figure(const std::string &name) {
  auto f = load_fixture(name);
  EXPECT_EQ(figure_mismatches(f), std::vector<std::string>{}) << name;
}

} // namespace

TEST(LambdaK, Examples) {
  EXPECT_EQ(lambda_k(4, 2), (Weight{3, 2, 2, 1}));
  EXPECT_EQ(lambda_k(3, 0), (Weight{2, 1, 0}));
  EXPECT_EQ(lambda_k(8, 7), (Weight{7, 7, 6, 5, 4, 3, 2, 1}));
  EXPECT_THROW(lambda_k(4, 4), InvalidArgument);
  EXPECT_THROW(lambda_k(4, -1), InvalidArgument);
  for (int n = 2; n <= 8; ++n)
    for (int k = 0; k < n; ++k) EXPECT_EQ(classify(lambda_k(n, k)), Regularity::SemiRegular);
}

TEST(TildeLambda, Examples) {
  EXPECT_EQ(tilde_lambda(4, 2, Sign::Plus), (Weight{2, 3, 2, 1}));
  EXPECT_EQ(tilde_lambda(4, 0, Sign::Plus), (Weight{0, 3, 2, 1}));
  EXPECT_EQ(tilde_lambda(8, 7, Sign::Minus), (Weight{-7, 7, 6, 5, 4, 3, 2, 1}));
  EXPECT_THROW(tilde_lambda(4, 0, Sign::Minus), InvalidArgument);
}

TEST(Igr1, Sequence) {
  auto c = igr1_bgg(2);
  std::vector<Weight> expect{{2, 1}, {1, 2}, {-1, 2}, {-2, 1}};
  EXPECT_EQ(c.terms, expect);
  EXPECT_EQ(igr1_bgg(3).terms[2], (Weight{1, 3, 2}));
  for (int n = 2; n <= 7; ++n) {
    auto s = igr1_bgg(n);
    ASSERT_EQ(static_cast<int>(s.terms.size()), 2 * n);
    Parabolic p(n, {1});
    Weight r = rho(n);
    for (std::size_t i = 0; i + 1 < s.terms.size(); ++i) {
      auto a = element_mapping(r, s.terms[i]), b = element_mapping(r, s.terms[i + 1]);
      EXPECT_TRUE(arrow(a, b).has_value());
      EXPECT_EQ(s.order_bounds[i], static_cast<int>(i) == n - 1 ? 2 : 1);
    }
  }
}

TEST(Placement, Formula) {
  EXPECT_EQ(placement_to_weight({8, -8}, 7), std::pair(7, -7));
  EXPECT_EQ(placement_to_weight({3, -7}, 7), std::pair(3, -7));
  EXPECT_EQ(placement_to_weight({2, -1}, 0), std::pair(1, 0));
}

TEST(SingularOrbit, PlacementFormulaHolds) {
  for (int n = 3; n <= 8; ++n)
    for (int k = 0; k < n; ++k) {
      auto d = singular_orbit(n, k);
      for (auto &nd : d.nodes) EXPECT_EQ(placement_to_weight(nd.placement, k), std::pair(nd.weight[0], nd.weight[1]));
      std::set<Placement> seen;
      for (auto &nd : d.nodes) EXPECT_TRUE(seen.insert(nd.placement).second);
    }
}

TEST(SingularOrbit, MatchesExhaustiveOrbit) {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k < n; ++k) {
      Parabolic p(n, {2});
      std::set<Weight> brute;
      for (auto &w : all_elements(n)) {
        Weight x = w.act(lambda_k(n, k));
        if (is_dominant(x, p, Dominance::StrictlyForLevi)) brute.insert(x);
      }
      auto d = singular_orbit(n, k);
      std::set<Weight> got;
      for (auto &nd : d.nodes) got.insert(nd.weight);
      EXPECT_EQ(got, brute) << n << " " << k;
      auto dc = dominant_conjugates(lambda_k(n, k), p);
      EXPECT_EQ(brute, std::set<Weight>(dc.begin(), dc.end()));
    }
}

TEST(SingularOrbit, NoDoubleKOnTheRight) {
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k < n; ++k)
      for (auto &nd : singular_orbit(n, k).nodes) {
        int count = 0;
        for (int x : nd.full_tail) count += std::abs(x) == k;
        EXPECT_LE(count, 1);
      }
}

TEST(SingularOrbit, CoincidencesAndRepresentatives) {
  for (int n = 3; n <= 8; ++n)
    for (int k = 0; k < n; ++k) {
      auto d = singular_orbit(n, k);
      for (auto [i, j] : d.coincidences) {
        EXPECT_EQ(d.nodes[static_cast<std::size_t>(i)].weight, d.nodes[static_cast<std::size_t>(j)].weight);
        EXPECT_NE(d.nodes[static_cast<std::size_t>(i)].placement, d.nodes[static_cast<std::size_t>(j)].placement);
      }
      auto reps = representatives(d);
      EXPECT_EQ(reps.size() + d.coincidences.size(), d.nodes.size());
      std::set<Weight> w;
      for (int r : reps) EXPECT_TRUE(w.insert(d.nodes[static_cast<std::size_t>(r)].weight).second);
    }
  auto d = singular_orbit(8, 7);
  EXPECT_EQ(representative_of(d, d.nodes[static_cast<std::size_t>(d.find({7, -8}))].weight), d.find({8, -7}));
}

TEST(SingularOrbit, FigureTwoCoincidence) {
  auto d = singular_orbit(8, 7);
  int a = d.find({7, -8}), b = d.find({8, -7});
  ASSERT_GE(a, 0);
  ASSERT_GE(b, 0);
  EXPECT_EQ(d.nodes[static_cast<std::size_t>(a)].weight, d.nodes[static_cast<std::size_t>(b)].weight);
  EXPECT_EQ(d.nodes[static_cast<std::size_t>(a)].weight[0], 7);
  EXPECT_EQ(d.nodes[static_cast<std::size_t>(a)].weight[1], -7);
}

TEST(SingularOrbit, StandardArrowsHaveHasseWitness) {
  for (int k : {0, 1, 3, 5}) {
    auto d = singular_orbit(6, k);
    Weight r = rho(6);
    for (auto &a : d.arrows) {
      auto &s = d.nodes[static_cast<std::size_t>(a.source)], &t = d.nodes[static_cast<std::size_t>(a.target)];
      // recover the regular elements from placements
      auto full = [&](Placement p) {
        Weight x{p.first, p.second};
        for (int v = 6; v >= 1; --v)
          if (v != std::abs(p.first) && v != std::abs(p.second)) x.coords.push_back(v);
        return x;
      };
      auto ws = element_mapping(r, full(s.placement)), wt = element_mapping(r, full(t.placement));
      EXPECT_EQ(arrow(ws, wt), a.label);
      if (a.kind == ArrowKind::Identity) {
        EXPECT_EQ(s.weight, t.weight);
      } else {
        EXPECT_GE(a.order_bound.value(), 1);
      }
    }
  }
}

TEST(SingularOrbit, SuppressedOnlyForSmallK) {
  for (int n = 3; n <= 8; ++n)
    for (int k = 0; k < n; ++k) {
      int count = 0;
      for (auto &a : singular_orbit(n, k).arrows) count += a.kind == ArrowKind::SuppressedTrivial;
      if (k > 1) {
        EXPECT_EQ(count, 0);
      } else {
        EXPECT_GT(count, 0);
      }
    }
  auto d = singular_orbit(8, 0);
  int c = 0;
  for (auto &a : d.arrows)
    if (a.kind == ArrowKind::SuppressedTrivial) {
      ++c;
      EXPECT_EQ(d.nodes[static_cast<std::size_t>(a.source)].placement, Placement(2, -1));
      EXPECT_EQ(d.nodes[static_cast<std::size_t>(a.target)].placement, Placement(1, -2));
    }
  EXPECT_EQ(c, 1);
  EXPECT_TRUE(d.conjectural_complex);
  EXPECT_FALSE(singular_orbit(8, 1).conjectural_complex);
}

TEST(SingularOrbit, ExhaustiveCountAtFourTwo) {
  Parabolic p(4, {2});
  std::set<Placement> brute;
  Weight r = rho(4);
  for (auto &w : all_elements(4)) {
    Weight x = w.act(r);
    if (!is_dominant(x, p, Dominance::StrictlyForLevi)) continue;
    if (is_dominant(w.act(lambda_k(4, 2)), p, Dominance::StrictlyForLevi)) brute.insert({x[0], x[1]});
  }
  EXPECT_EQ(singular_orbit(4, 2).nodes.size(), brute.size());
}

TEST(RegularOrbit, Shape) {
  auto d = regular_orbit_projection(3);
  EXPECT_EQ(d.nodes.size(), 12u);
  EXPECT_FALSE(d.k.has_value());
  for (int n = 3; n <= 8; ++n) {
    auto e = regular_orbit_projection(n);
    EXPECT_EQ(static_cast<int>(e.nodes.size()), 2 * n * (n - 1));
    EXPECT_TRUE(e.coincidences.empty());
    for (auto &nd : e.nodes) {
      EXPECT_NE(nd.placement.first, -nd.placement.second);
      EXPECT_GT(nd.placement.first, nd.placement.second);
    }
  }
  EXPECT_THROW(regular_orbit_projection(2), InvalidArgument);
}

TEST(RegularOrbit, FigureOneBoundaryLabels) {
  auto f = load_fixture("regular_n8");
  auto d = regular_orbit_projection(8);
  for (auto &[seg, name] : f.labels) {
    auto [a, b, c, e] = seg;
    int s = d.find({a, b}), t = d.find({c, e});
    ASSERT_GE(s, 0);
    ASSERT_GE(t, 0);
    bool found = false;
    for (auto &ar : d.arrows)
      if (ar.source == s && ar.target == t) {
        found = true;
        EXPECT_EQ(ar.label, parse_root(name)) << a << "," << b << " -> " << c << "," << e;
      }
    EXPECT_TRUE(found) << name;
  }
}

TEST(Figures, RegularOrbit) { compare_with_figure("regular_n8"); }
TEST(Figures, SingularTopK) { compare_with_figure("singular_n8_k7"); }
TEST(Figures, SingularMiddleK) { compare_with_figure("singular_n14_k7"); }
TEST(Figures, SingularKOne) { compare_with_figure("singular_n8_k1"); }
TEST(Figures, SingularKZero) { compare_with_figure("singular_n8_k0"); }

TEST(Igr1Singular, OnlyTildeConjugates) {
  for (int n = 3; n <= 6; ++n)
    for (int k = 0; k < n; ++k) {
      auto c = dominant_conjugates(lambda_k(n, k), Parabolic(n, {1}));
      std::vector<Weight> expect;
      if (k == 0) expect = {tilde_lambda(n, 0, Sign::Plus)};
      else expect = {tilde_lambda(n, k, Sign::Minus), tilde_lambda(n, k, Sign::Plus)};
      EXPECT_EQ(c, expect) << n << " " << k;
    }
}
