#include <gtest/gtest.h>

#include <set>

#include "isobgg/parabolic.hpp"

using namespace isobgg;

namespace {

std::set<Root> as_set(const std::vector<Root> &v) { return {v.begin(), v.end()}; }

std::vector<Rational> q(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

std::vector<Parabolic> all_parabolics(int n) {
  std::vector<Parabolic> r;
  for (unsigned m = 1; m < (1u << n); ++m) {
    std::vector<int> c;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) c.push_back(i + 1);
    r.emplace_back(n, c);
  }
  return r;
}

} // namespace

TEST(Nilradical, Examples) {
  auto u = as_set(nilradical_roots(Parabolic(4, {2})));
  std::set<Root> expect{Root::a(1, 3), Root::a(1, 4), Root::a(2, 3), Root::a(2, 4), Root::c(1, 3), Root::c(1, 4),
                        Root::c(2, 3),  Root::c(2, 4), Root::b(1),    Root::b(2),    Root::c(1, 2)};
  EXPECT_EQ(u, expect);
  EXPECT_EQ(nilradical_roots(Parabolic(5, {1, 2, 3, 4, 5})).size(), 25u);
  std::set<Root> e1{Root::a(1, 2), Root::a(1, 3), Root::b(1), Root::c(1, 2), Root::c(1, 3)};
  EXPECT_EQ(as_set(nilradical_roots(Parabolic(3, {1}))), e1);
}

TEST(Nilradical, PartitionsPositiveRoots) {
  for (int n = 2; n <= 6; ++n)
    for (auto &p : all_parabolics(n)) {
      auto l = as_set(levi_roots(p)), u = as_set(nilradical_roots(p));
      EXPECT_EQ(l.size() + u.size(), static_cast<std::size_t>(n * n));
      for (auto &r : l) EXPECT_FALSE(u.count(r));
    }
}

TEST(Grading, Examples) {
  EXPECT_EQ(grading_element(Parabolic(5, {2})), q({1, 1, 0, 0, 0}));
  EXPECT_EQ(grading_element(Parabolic(4, {1})), q({1, 0, 0, 0}));
  EXPECT_EQ(grading_element(Parabolic(3, {1, 2})), q({2, 1, 0}));
  auto lag = grading_element(Parabolic(3, {3}));
  EXPECT_EQ(lag[0], Rational(1, 2));
}

TEST(Grading, DefiningProperty) {
  for (int n = 2; n <= 5; ++n)
    for (auto &p : all_parabolics(n)) {
      auto e = grading_element(p);
      for (int i = 1; i <= n; ++i) {
        Weight a = simple_root(i, n).vector(n);
        Rational s = 0;
        for (int t = 0; t < n; ++t) s += e[static_cast<std::size_t>(t)] * a[t];
        EXPECT_EQ(s, p.is_crossed(i) ? 1 : 0);
      }
    }
}

TEST(Grading, TwoGrassmannianDepths) {
  Parabolic p(6, {2});
  for (const Root &r : nilradical_roots(p)) {
    Rational c = conformal_weight(r.vector(6), p);
    bool deep = r == Root::b(1) || r == Root::b(2) || r == Root::c(1, 2);
    EXPECT_EQ(c, deep ? 2 : 1) << r.name();
  }
}

TEST(ConformalWeight, Examples) {
  Parabolic p(5, {2});
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(conformal_weight(Weight{k + 1, k, 3, 2, 1}, p), 2 * k + 1);
  EXPECT_EQ(conformal_weight(Weight{0, 0, 0, 0, 0}, p), 0);
  EXPECT_EQ(order_bound(Weight{4, 3, 0, 0, 0}, Weight{3, 2, 0, 0, 0}, p), 2);
}

TEST(Hasse, ChainForFirstNode) {
  for (int n = 2; n <= 7; ++n) {
    auto d = hasse_diagram(Parabolic(n, {1}));
    ASSERT_EQ(static_cast<int>(d.nodes.size()), 2 * n);
    ASSERT_EQ(static_cast<int>(d.edges.size()), 2 * n - 1);
    for (int i = 0; i < 2 * n; ++i) EXPECT_EQ(d.nodes[static_cast<std::size_t>(i)].length, i);
    for (auto &e : d.edges) {
      EXPECT_EQ(e.target, e.source + 1);
      EXPECT_EQ(e.order_bound, e.source == n - 1 ? 2 : 1);
    }
    EXPECT_EQ(d.nodes[0].weight, rho(n));
  }
}

TEST(Hasse, TwoGrassmannianCounts) {
  EXPECT_EQ(hasse_diagram(Parabolic(3, {2})).nodes.size(), 12u);
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(static_cast<int>(hasse_diagram(Parabolic(n, {2})).nodes.size()), 2 * n * (n - 1));
}

TEST(Hasse, CountLaw) {
  for (int n = 3; n <= 5; ++n)
    for (auto &p : {Parabolic(n, {1}), Parabolic(n, {2})}) {
      auto d = hasse_diagram(p);
      EXPECT_EQ(static_cast<long long>(d.nodes.size()) * levi_weyl_order(p), weyl_group_order(n));
    }
}

TEST(Hasse, MatchesBruteForce) {
  for (int n = 2; n <= 4; ++n)
    for (int c = 1; c <= n; ++c) {
      Parabolic p(n, {c});
      std::set<WeylElement> brute;
      for (auto &w : all_elements(n))
        if (is_dominant(w.act(rho(n)), p, Dominance::StrictlyForLevi)) brute.insert(w);
      auto d = hasse_diagram(p);
      std::set<WeylElement> got;
      for (auto &nd : d.nodes) got.insert(nd.element);
      EXPECT_EQ(got, brute) << "n=" << n << " crossed=" << c;
    }
}

TEST(Hasse, EdgesSoundAndComplete) {
  for (int n = 3; n <= 4; ++n)
    for (auto &p : {Parabolic(n, {1}), Parabolic(n, {2}), Parabolic(n, {1, 2}), Parabolic(n, {n})}) {
      auto d = hasse_diagram(p);
      std::set<std::pair<int, int>> edges;
      for (auto &e : d.edges) {
        auto &s = d.nodes[static_cast<std::size_t>(e.source)], &t = d.nodes[static_cast<std::size_t>(e.target)];
        EXPECT_EQ(arrow(s.element, t.element), e.label);
        EXPECT_EQ(t.length, s.length + 1);
        EXPECT_GE(e.order_bound, 1);
        edges.emplace(e.source, e.target);
      }
      for (std::size_t i = 0; i < d.nodes.size(); ++i)
        for (std::size_t j = 0; j < d.nodes.size(); ++j)
          if (arrow(d.nodes[i].element, d.nodes[j].element)) {
            EXPECT_TRUE(edges.count({static_cast<int>(i), static_cast<int>(j)}));
          }
    }
}

TEST(Hasse, GeneralRegularBaseAndErrors) {
  Parabolic p(3, {2});
  auto d = hasse_diagram(p, Weight{5, 3, 2});
  std::set<Weight> ws;
  for (auto &nd : d.nodes) {
    EXPECT_EQ(nd.weight, nd.element.act(Weight{5, 3, 2}));
    ws.insert(nd.weight);
  }
  EXPECT_EQ(ws.size(), d.nodes.size());
  EXPECT_THROW(hasse_diagram(p, Weight{2, 2, 1}), InvalidArgument);
  EXPECT_THROW(hasse_diagram(p, Weight{3, 2, 1, 0}), DimensionError);
}

TEST(Hasse, FigureOneOrders) {
  auto d = hasse_diagram(Parabolic(8, {2}));
  int longer = 0;
  for (auto &e : d.edges) {
    Weight s = d.nodes[static_cast<std::size_t>(e.source)].weight, t = d.nodes[static_cast<std::size_t>(e.target)].weight;
    int step = std::abs(s[0] - t[0]) + std::abs(s[1] - t[1]);
    EXPECT_TRUE(step == 1 || step == 2);
    EXPECT_EQ(e.order_bound, step);
    longer += step == 2;
  }
  EXPECT_GT(longer, 0);
}
